#include "cubulate/criteria.hpp"

#include "cubulate/errors.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace cubulate {

SeparationProfile linear_separation_profile(const Wallspace& ws, int max_distance,
                                            int stall) {
  const CayleyBall& ball = *ws.ball;
  if (max_distance < 1)
    fail(ErrorKind::MalformedInput, "separation-profile",
         "max distance must be positive");
  if (stall < 1)
    fail(ErrorKind::MalformedInput, "separation-profile",
         "stall window must be positive");
  if (max_distance > ws.trust_radius())
    fail(ErrorKind::Scale, "separation-profile",
         "profile to distance " + std::to_string(max_distance) +
             " needs radius at least " +
             std::to_string(max_distance + ws.margin));

  SeparationProfile p;
  p.max_distance = max_distance;
  p.sphere.assign(max_distance + 1, 0);
  p.min.assign(max_distance + 1, 0);
  p.max.assign(max_distance + 1, 0);
  p.mean.assign(max_distance + 1, 0.0);
  p.envelope.assign(max_distance + 1, 0);

  if (ws.walls.empty()) p.warning = "empty wallspace; profile is trivially flat";

  for (int n = 1; n <= max_distance; ++n) {
    std::uint32_t lo = ball.count_within(n - 1), hi = ball.count_within(n);
    p.sphere[n] = hi - lo;
    if (lo == hi) {
      if (p.warning.empty())
        p.warning = "sphere at distance " + std::to_string(n) + " is empty";
      continue;
    }
    std::uint64_t total = 0;
    std::uint32_t mn = 0xffffffffu, mx = 0;
    for (std::uint32_t v = lo; v < hi; ++v) {
      std::uint32_t c = separation(ws, ball.identity(), v).separating;
      total += c;
      mn = std::min(mn, c);
      mx = std::max(mx, c);
    }
    p.min[n] = mn;
    p.max[n] = mx;
    p.mean[n] = static_cast<double>(total) / p.sphere[n];
  }

  std::uint32_t running = 0xffffffffu;
  for (int n = max_distance; n >= 1; --n) {
    if (p.sphere[n]) running = std::min(running, p.min[n]);
    p.envelope[n] = running == 0xffffffffu ? 0 : running;
  }

  p.plausible = p.envelope[max_distance] >= 1;
  for (int n = 1; n + stall <= max_distance; ++n)
    if (p.envelope[n + stall] <= p.envelope[n]) p.plausible = false;
  return p;
}

namespace {

// {v in T : a.side(v) == s} strictly contained in the same set for b
bool strict_containment(const Wallspace& ws, const Wall& a, const Wall& b,
                        Side s) {
  const std::uint8_t want = static_cast<std::uint8_t>(s);
  bool proper = false;
  for (std::uint32_t v = 0; v < ws.trust_count(); ++v) {
    if (a.side[v] == want && b.side[v] != want) return false;
    if (b.side[v] == want && a.side[v] != want) proper = true;
  }
  return proper;
}

bool cuts_trust(const Wallspace& ws, const Wall& w) {
  bool left = false, right = false;
  for (std::uint32_t v = 0; v < ws.trust_count(); ++v) {
    left = left || w.side[v] == 0;
    right = right || w.side[v] == 1;
  }
  return left && right;
}

Word power(const GroupPresentation& g, const Word& base, int exponent) {
  Word out;
  Word factor = exponent < 0 ? g.inverse(base) : g.normal_form(base);
  for (int i = std::abs(exponent); i > 0; --i) out = g.multiply(out, factor);
  return out;
}

} // namespace

std::optional<int> finite_order(const GroupPresentation& group, const Word& g,
                                int order_bound) {
  Word p;
  for (int k = 1; k <= order_bound; ++k) {
    p = group.multiply(p, g);
    if (group.is_identity(p)) return k;
  }
  return std::nullopt;
}

bool axis_wall_witness(const Wallspace& ws, const Wall& wall, const Word& g,
                       int n, int sign, int k_max) {
  if (!cuts_trust(ws, wall)) return false;
  const CayleyBall& ball = *ws.ball;
  std::vector<Wall> chain;
  for (int k = -k_max; k <= k_max; ++k)
    chain.push_back(k == 0 ? wall
                           : translate_wall(ball, wall,
                                            power(ball.group(), g, sign * k * n)));
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!strict_containment(ws, chain[i], chain[i + 1], Side::Left)) return false;
    if (!strict_containment(ws, chain[i + 1], chain[i], Side::Right)) return false;
  }
  return true;
}

AxisReport axis_separation(const Wallspace& ws, const Word& g, int n_max,
                           int k_max, int order_bound, int translate_bound) {
  const CayleyBall& ball = *ws.ball;
  const GroupPresentation& group = ball.group();
  AxisReport report;
  report.element = group.normal_form(g);

  if (n_max < 1 || k_max < 1)
    fail(ErrorKind::MalformedInput, "axis-separation",
         "power and chain bounds must be positive");
  if (report.element.empty()) {
    report.torsion = true;
    report.note = "identity element";
    return report;
  }
  if (order_bound <= 0) order_bound = 2 * ball.radius();
  if (auto ord = finite_order(group, report.element, order_bound)) {
    report.torsion = true;
    report.note = "finite order: g^" + std::to_string(*ord) + " is trivial";
    return report;
  }

  int needed_radius = 0;
  for (int n = 1; n <= n_max; ++n)
    for (int k = 1; k <= k_max; ++k) {
      Word w = power(group, report.element, k * n);
      auto at = ball.locate(w);
      auto at_inv = ball.locate(group.inverse(w));
      bool ok = at && at_inv && ball.distance(*at) <= ws.trust_radius() &&
                ball.distance(*at_inv) <= ws.trust_radius();
      if (!ok)
        needed_radius = std::max(
            needed_radius, static_cast<int>(w.size()) + ws.margin);
    }
  if (needed_radius > 0)
    fail(ErrorKind::Scale, "axis-separation",
         "powers of " + group.alphabet().print_word(report.element) +
             " leave the trust ball; need radius at least " +
             std::to_string(needed_radius));

  if (translate_bound < 0 || translate_bound > ws.trust_radius())
    translate_bound = ws.trust_radius();
  const std::uint32_t translates = ball.count_within(translate_bound);

  for (std::uint32_t wi = 0; wi < ws.walls.size(); ++wi) {
    if (!wall_trusted(ws, ws.walls[wi])) continue;
    for (std::uint32_t fv = 0; fv < translates; ++fv) {
      const Word& f = ball.word(fv);
      Wall moved = fv == 0 ? ws.walls[wi] : translate_wall(ball, ws.walls[wi], f);
      if (!cuts_trust(ws, moved)) continue;
      for (int n = 1; n <= n_max; ++n)
        for (int sign : {+1, -1}) {
          Wall next = translate_wall(ball, moved,
                                     power(group, report.element, sign * n));
          if (!strict_containment(ws, moved, next, Side::Left)) continue;
          if (!axis_wall_witness(ws, moved, report.element, n, sign, k_max))
            continue;
          report.verdict = true;
          report.witness = {wi, f, n, sign};
          report.chain_checked = k_max;
          return report;
        }
    }
  }
  report.note = "no witness among " + std::to_string(ws.walls.size()) +
                " walls x " + std::to_string(translates) +
                " translates, powers up to " + std::to_string(n_max);
  return report;
}

} // namespace cubulate
