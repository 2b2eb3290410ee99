#include "cubulate/wallspace.hpp"

#include "cubulate/errors.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace cubulate {

std::vector<std::uint32_t> Wall::carrier() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = 0; v < side.size(); ++v)
    if (side[v] == static_cast<std::uint8_t>(Side::On)) out.push_back(v);
  return out;
}

namespace {

// component ids over vertices not on the carrier, -1 on the carrier
std::vector<int> complement_components(const CayleyBall& ball,
                                       const std::vector<std::uint8_t>& on_carrier,
                                       int& count) {
  std::vector<int> comp(ball.size(), -1);
  count = 0;
  const std::size_t nl = ball.group().alphabet().size();
  for (std::uint32_t seed = 0; seed < ball.size(); ++seed) {
    if (on_carrier[seed] || comp[seed] != -1) continue;
    comp[seed] = count;
    std::deque<std::uint32_t> queue{seed};
    while (!queue.empty()) {
      std::uint32_t v = queue.front();
      queue.pop_front();
      for (Letter l = 0; l < nl; ++l) {
        std::uint32_t u = ball.step(v, l);
        if (u != CayleyBall::npos && !on_carrier[u] && comp[u] == -1) {
          comp[u] = comp[seed];
          queue.push_back(u);
        }
      }
    }
    ++count;
  }
  return comp;
}

std::string census_text(const std::vector<std::uint32_t>& sizes,
                        std::uint32_t deep_components) {
  std::string s = std::to_string(sizes.size()) + " components (sizes";
  for (std::size_t i = 0; i < sizes.size() && i < 8; ++i)
    s += " " + std::to_string(sizes[i]);
  if (sizes.size() > 8) s += " ...";
  s += "; " + std::to_string(deep_components) + " deep)";
  return s;
}

} // namespace

Wall wall_from_subgroup(const CayleyBall& ball, const std::vector<Word>& sub_gens,
                        const Word& conjugator, int carrier_radius,
                        int trust_radius, int depth_threshold,
                        std::string label) {
  auto base = ball.locate(conjugator);
  if (!base)
    fail(ErrorKind::Scale, "wall",
         "coset representative lies outside the ball; larger radius required");
  std::vector<Word> steps;
  for (const Word& s : sub_gens) {
    steps.push_back(ball.group().normal_form(s));
    steps.push_back(ball.group().inverse(s));
  }

  std::vector<std::uint8_t> in_coset(ball.size(), 0);
  std::deque<std::uint32_t> queue{*base};
  in_coset[*base] = 1;
  std::vector<std::uint32_t> coset{*base};
  while (!queue.empty()) {
    std::uint32_t v = queue.front();
    queue.pop_front();
    for (const Word& s : steps) {
      Word w = ball.word(v);
      w.insert(w.end(), s.begin(), s.end());
      auto u = ball.locate(w);
      if (u && !in_coset[*u]) {
        in_coset[*u] = 1;
        coset.push_back(*u);
        queue.push_back(u.value());
      }
    }
  }

  std::vector<int> to_carrier = ball.distances_from(coset);
  std::vector<std::uint8_t> on_carrier(ball.size(), 0);
  std::uint32_t carrier_size = 0;
  for (std::uint32_t v = 0; v < ball.size(); ++v)
    if (to_carrier[v] != -1 && to_carrier[v] <= carrier_radius) {
      on_carrier[v] = 1;
      ++carrier_size;
    }
  if (carrier_size == ball.size())
    fail(ErrorKind::Scale, "wall",
         "carrier covers the whole ball at radius " +
             std::to_string(ball.radius()) + "; larger radius required");

  int ncomp = 0;
  std::vector<int> comp = complement_components(ball, on_carrier, ncomp);

  std::vector<std::uint32_t> comp_size(ncomp, 0);
  std::vector<std::uint8_t> comp_deep(ncomp, 0);
  std::vector<std::uint32_t> least_deep(ncomp, CayleyBall::npos);
  for (std::uint32_t v = 0; v < ball.size(); ++v) {
    if (comp[v] < 0) continue;
    ++comp_size[comp[v]];
    bool deep = ball.distance(v) <= trust_radius &&
                (to_carrier[v] == -1 || to_carrier[v] >= depth_threshold);
    if (deep && !comp_deep[comp[v]]) {
      comp_deep[comp[v]] = 1;
      least_deep[comp[v]] = v;
    }
  }
  std::uint32_t deep_components = 0;
  std::uint32_t least_vertex = CayleyBall::npos;
  for (int c = 0; c < ncomp; ++c)
    if (comp_deep[c]) {
      ++deep_components;
      least_vertex = std::min(least_vertex, least_deep[c]);
    }
  if (deep_components < 2)
    fail(ErrorKind::NotCodimensionOne, "wall",
         "complement splits into " + census_text(comp_size, deep_components) +
             " at depth threshold " + std::to_string(depth_threshold));

  int left_comp = comp[least_vertex];
  Wall wall;
  wall.kind = WallKind::Subgroup;
  wall.side.assign(ball.size(), static_cast<std::uint8_t>(Side::On));
  for (std::uint32_t v = 0; v < ball.size(); ++v)
    if (comp[v] >= 0)
      wall.side[v] = static_cast<std::uint8_t>(comp[v] == left_comp ? Side::Left
                                                                    : Side::Right);
  if (label.empty()) {
    label = "coset";
    for (const Word& s : sub_gens)
      label += " " + ball.group().alphabet().print_word(s);
    label += " @ " + ball.group().alphabet().print_word(conjugator);
  }
  wall.label = std::move(label);
  return wall;
}

Wall wall_from_edge(const CayleyBall& ball, std::uint32_t v, Letter l) {
  std::uint32_t u = ball.step(v, l);
  if (u == CayleyBall::npos || u == v)
    fail(ErrorKind::MalformedInput, "wall", "not an edge of the ball");
  Letter lback = ball.group().alphabet().inverse(l);
  const std::size_t nl = ball.group().alphabet().size();

  std::vector<std::uint8_t> seen(ball.size(), 0);
  std::deque<std::uint32_t> queue{v};
  seen[v] = 1;
  while (!queue.empty()) {
    std::uint32_t x = queue.front();
    queue.pop_front();
    for (Letter m = 0; m < nl; ++m) {
      if (x == v && m == l) continue;
      if (x == u && m == lback) continue;
      std::uint32_t y = ball.step(x, m);
      if (y != CayleyBall::npos && !seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  if (seen[u])
    fail(ErrorKind::NotCodimensionOne, "wall",
         "edge does not disconnect the ball");

  Wall wall;
  wall.kind = WallKind::Edge;
  // vertex 0 is shortlex-least, so its component is canonically Left
  bool zero_with_v = seen[0] != 0;
  wall.side.assign(ball.size(), 0);
  for (std::uint32_t x = 0; x < ball.size(); ++x)
    wall.side[x] = static_cast<std::uint8_t>(
        (seen[x] != 0) == zero_with_v ? Side::Left : Side::Right);
  wall.label = "edge " + ball.group().alphabet().print_word(ball.word(v)) + " [" +
               ball.group().alphabet().name(l) + "]";
  return wall;
}

std::vector<Wall> edge_walls(const CayleyBall& ball) {
  std::vector<Wall> out;
  const std::size_t nl = ball.group().alphabet().size();
  for (std::uint32_t v = 0; v < ball.size(); ++v)
    for (Letter l = 0; l < nl; ++l) {
      std::uint32_t u = ball.step(v, l);
      if (u == CayleyBall::npos || u <= v) continue;
      try {
        Wall w = wall_from_edge(ball, v, l);
        bool dup = false;
        for (const Wall& prev : out)
          if (prev.same_partition(w)) dup = true;
        if (!dup) out.push_back(std::move(w));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotCodimensionOne) throw;
      }
    }
  return out;
}

Wall abstract_wall(const CayleyBall& ball, std::vector<std::uint8_t> side,
                   std::string label) {
  if (side.size() != ball.size())
    fail(ErrorKind::MalformedInput, "wall",
         "side assignment size does not match the ball");
  std::uint32_t left = 0, right = 0;
  for (std::uint8_t s : side) {
    if (s > 2) fail(ErrorKind::MalformedInput, "wall", "side value out of range");
    left += s == static_cast<std::uint8_t>(Side::Left);
    right += s == static_cast<std::uint8_t>(Side::Right);
  }
  if (left == 0 || right == 0)
    fail(ErrorKind::MalformedInput, "wall", "a wall needs two nonempty sides");
  Wall wall;
  wall.kind = WallKind::Abstract;
  wall.side = std::move(side);
  wall.label = std::move(label);
  return wall;
}

TranslatedSide translated_side(const CayleyBall& ball, const Wall& wall,
                               const Word& g_inv, std::uint32_t v) {
  Word w = g_inv;
  const Word& tail = ball.word(v);
  w.insert(w.end(), tail.begin(), tail.end());
  auto u = ball.locate(w);
  if (!u) return TranslatedSide::Unknown;
  return static_cast<TranslatedSide>(wall.side[*u]);
}

Wall translate_wall(const CayleyBall& ball, const Wall& wall, const Word& g,
                    std::string label) {
  Word g_inv = ball.group().inverse(g);
  Wall out;
  out.kind = WallKind::Translate;
  out.side.assign(ball.size(), static_cast<std::uint8_t>(Side::On));
  for (std::uint32_t v = 0; v < ball.size(); ++v) {
    TranslatedSide s = translated_side(ball, wall, g_inv, v);
    if (s != TranslatedSide::Unknown) out.side[v] = static_cast<std::uint8_t>(s);
  }
  out.label = label.empty()
                  ? ball.group().alphabet().print_word(g) + " * (" + wall.label + ")"
                  : std::move(label);
  return out;
}

bool wall_trusted(const Wallspace& ws, const Wall& wall) {
  bool has_carrier = false;
  for (std::uint32_t v = 0; v < wall.side.size(); ++v)
    if (wall.side[v] == static_cast<std::uint8_t>(Side::On)) {
      has_carrier = true;
      if (ws.ball->distance(v) <= ws.trust_radius()) return true;
    }
  return !has_carrier;
}

QuadrantCensus quadrants(const Wallspace& ws, const Wall& a, const Wall& b) {
  QuadrantCensus q;
  std::uint32_t n = ws.trust_count();
  for (std::uint32_t v = 0; v < n; ++v) {
    std::uint8_t sa = a.side[v];
    std::uint8_t sb = b.side[v];
    if (sa > 1 || sb > 1) continue;
    ++q.count[sa][sb];
  }
  return q;
}

bool walls_cross(const Wallspace& ws, const Wall& a, const Wall& b) {
  return quadrants(ws, a, b).all_nonempty();
}

NestVerdict walls_nest(const Wallspace& ws, const Wall& a, const Wall& b) {
  QuadrantCensus q = quadrants(ws, a, b);
  if (q.count[0][0] == 0) return NestVerdict::LeftLeft;
  if (q.count[0][1] == 0) return NestVerdict::LeftRight;
  if (q.count[1][0] == 0) return NestVerdict::RightLeft;
  if (q.count[1][1] == 0) return NestVerdict::RightRight;
  return NestVerdict::None;
}

SeparationCount separation(const Wallspace& ws, std::uint32_t u, std::uint32_t v) {
  SeparationCount out;
  for (const Wall& w : ws.walls) {
    std::uint8_t su = w.side[u];
    std::uint8_t sv = w.side[v];
    if (su > 1 || sv > 1)
      ++out.skipped;
    else if (su != sv)
      ++out.separating;
  }
  return out;
}

const char* to_string(NestVerdict v) {
  switch (v) {
    case NestVerdict::LeftLeft: return "left-left";
    case NestVerdict::LeftRight: return "left-right";
    case NestVerdict::RightLeft: return "right-left";
    case NestVerdict::RightRight: return "right-right";
    case NestVerdict::None: return "none";
  }
  return "?";
}

const char* to_string(Side s) {
  switch (s) {
    case Side::Left: return "left";
    case Side::Right: return "right";
    case Side::On: return "on";
  }
  return "?";
}

} // namespace cubulate
