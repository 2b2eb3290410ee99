#include "cubulate/criteria.hpp"

#include "cubulate/errors.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>

namespace cubulate {

namespace {

// translated family walls, materialized on first use
class TranslateCache {
public:
  TranslateCache(const Wallspace& ws, const std::vector<WallFamily>& families)
      : ws_(ws), families_(families),
        cache_(families.size(),
               std::vector<std::optional<Wall>>(ws.trust_count())),
        ready_(families.size() * ws.trust_count(), 0) {}

  // nullopt when the translate does not cut the trust ball
  const std::optional<Wall>& wall(std::uint32_t family, std::uint32_t fv) {
    std::optional<Wall>& slot = cache_[family][fv];
    if (!ready_[family * ws_.trust_count() + fv]) {
      ready_[family * ws_.trust_count() + fv] = 1;
      Wall moved = fv == 0 ? families_[family].base
                           : translate_wall(*ws_.ball, families_[family].base,
                                            ws_.ball->word(fv));
      bool left = false, right = false;
      for (std::uint32_t v = 0; v < ws_.trust_count(); ++v) {
        left = left || moved.side[v] == 0;
        right = right || moved.side[v] == 1;
      }
      if (left && right) slot = std::move(moved);
    }
    return slot;
  }

private:
  const Wallspace& ws_;
  const std::vector<WallFamily>& families_;
  std::vector<std::vector<std::optional<Wall>>> cache_;
  std::vector<char> ready_;
};

std::vector<std::uint32_t> subgroup_members(const CayleyBall& ball,
                                            const std::vector<Word>& gens) {
  const GroupPresentation& group = ball.group();
  std::vector<Word> steps;
  for (const Word& g : gens) {
    Word r = group.normal_form(g);
    if (r.empty()) continue;
    steps.push_back(r);
    Word inv = group.inverse(r);
    if (inv != r) steps.push_back(inv);
  }
  std::set<std::uint32_t> seen{ball.identity()};
  std::vector<std::uint32_t> frontier{ball.identity()};
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t v : frontier)
      for (const Word& s : steps) {
        auto u = ball.locate(group.multiply(ball.word(v), s));
        if (u && seen.insert(*u).second) next.push_back(*u);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

bool separates(const Wall& w, std::uint32_t u, std::uint32_t v) {
  return w.side[u] <= 1 && w.side[v] <= 1 && w.side[u] != w.side[v];
}

} // namespace

SelectionResult select_walls(const CayleyBall& ball, int margin,
                             const std::vector<WallFamily>& families,
                             int max_length, int n_max, int k_max,
                             const std::vector<std::vector<Word>>& parabolics,
                             int translate_bound) {
  Wallspace ws{&ball, margin, {}};
  const GroupPresentation& group = ball.group();
  if (max_length < 1 || max_length > ws.trust_radius())
    fail(ErrorKind::Scale, "select-walls",
         "element length bound " + std::to_string(max_length) +
             " needs radius at least " + std::to_string(max_length + margin));
  if (translate_bound < 0 || translate_bound > ws.trust_radius())
    translate_bound = ws.trust_radius();
  const std::uint32_t translates = ball.count_within(translate_bound);

  for (const WallFamily& fam : families)
    if (!wall_trusted(ws, fam.base))
      fail(ErrorKind::BoundaryUncertainty, "select-walls",
           "family " + fam.label + " rests on boundary artifacts");

  TranslateCache cache(ws, families);

  std::vector<std::vector<std::uint32_t>> parabolic_members;
  for (const std::vector<Word>& gens : parabolics)
    parabolic_members.push_back(subgroup_members(ball, gens));

  SelectionResult result;
  const int order_bound = 2 * ball.radius();

  for (std::uint32_t v = 1; v < ball.count_within(max_length); ++v) {
    const Word& w = ball.word(v);
    std::uint32_t least = v;
    for (std::size_t i = 1; i < w.size(); ++i) {
      Word rot(w.begin() + i, w.end());
      rot.insert(rot.end(), w.begin(), w.begin() + i);
      auto at = ball.locate(rot);
      if (!at)
        fail(ErrorKind::Internal, "select-walls",
             "cyclic rotation left the ball");
      least = std::min(least, *at);
    }
    if (least != v) continue;

    CoverageRow row;
    row.element = w;

    if (auto ord = finite_order(group, w, order_bound)) {
      row.torsion = true;
      row.note = "finite order " + std::to_string(*ord);
      result.coverage.push_back(std::move(row));
      continue;
    }

    for (std::uint32_t pi = 0; pi < parabolic_members.size() && !row.exempt; ++pi) {
      const std::vector<std::uint32_t>& members = parabolic_members[pi];
      for (std::uint32_t hv = 0; hv < ws.trust_count() && !row.exempt; ++hv) {
        const Word& h = ball.word(hv);
        Word conj = group.multiply(group.multiply(h, w), group.inverse(h));
        auto at = ball.locate(conj);
        if (at && std::binary_search(members.begin(), members.end(), *at)) {
          row.exempt = true;
          row.note = "conjugate into parabolic " + std::to_string(pi) + " by " +
                     group.alphabet().print_word(h);
        }
      }
    }
    if (row.exempt) {
      result.coverage.push_back(std::move(row));
      continue;
    }

    for (std::uint32_t si = 0; si < result.selected.size() && !row.covered; ++si)
      for (int n = 1; n <= n_max && !row.covered; ++n)
        for (int sign : {+1, -1}) {
          if (axis_wall_witness(ws, result.selected[si].wall, w, n, sign, k_max)) {
            row.covered = true;
            row.selected = si;
            row.power = n;
            row.sign = sign;
            break;
          }
        }

    for (std::uint32_t fam = 0; fam < families.size() && !row.covered; ++fam)
      for (std::uint32_t fv = 0; fv < translates && !row.covered; ++fv) {
        const std::optional<Wall>& cand = cache.wall(fam, fv);
        if (!cand) continue;
        for (int n = 1; n <= n_max && !row.covered; ++n)
          for (int sign : {+1, -1}) {
            if (!axis_wall_witness(ws, *cand, w, n, sign, k_max)) continue;
            row.covered = true;
            row.selected = static_cast<std::uint32_t>(result.selected.size());
            row.power = n;
            row.sign = sign;
            result.selected.push_back(
                {fam, ball.word(fv), *cand, n, sign});
            break;
          }
      }

    if (!row.covered) result.uncovered.push_back(w);
    result.coverage.push_back(std::move(row));
  }

  for (std::uint32_t u = 0; u < ws.trust_count(); ++u)
    for (std::uint32_t v = u + 1; v < ws.trust_count(); ++v) {
      bool done = false;
      for (const SelectedWall& s : result.selected)
        if (separates(s.wall, u, v)) {
          done = true;
          break;
        }
      for (std::uint32_t fam = 0; fam < families.size() && !done; ++fam)
        for (std::uint32_t fv = 0; fv < ws.trust_count() && !done; ++fv) {
          const std::optional<Wall>& cand = cache.wall(fam, fv);
          if (!cand) continue;
          if (separates(*cand, u, v)) {
            result.selected.push_back({fam, ball.word(fv), *cand, 0, 0});
            done = true;
          }
        }
      if (!done) {
        if (!result.first_unseparated) result.first_unseparated = {{u, v}};
        ++result.unseparated_pairs;
      }
    }

  return result;
}

} // namespace cubulate
