#include "cubulate/cayley_ball.hpp"

#include "cubulate/errors.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace cubulate {

CayleyBall::CayleyBall(GroupPresentation group, int radius, const Budgets& budgets)
    : group_(std::move(group)), radius_(radius) {
  if (radius < 0)
    fail(ErrorKind::MalformedInput, "ball", "radius must be nonnegative");
  if (!group_.canonical_normal_forms() && !group_.exact_identity())
    fail(ErrorKind::Structural, "ball",
         "group provides neither canonical normal forms nor an exact identity "
         "test; ball enumeration would be unsound");
  parity_preserving_ = true;
  for (const Rule& r : group_.rules())
    if ((r.lhs.size() + r.rhs.size()) % 2 != 0) parity_preserving_ = false;

  const std::size_t nl = group_.alphabet().size();
  words_.push_back({});
  dist_.push_back(0);
  level_offset_ = {0, 1};
  index_[group_.normal_form(Word{})] = 0;

  for (std::uint32_t v = 0; v < words_.size(); ++v) {
    step_.resize((static_cast<std::size_t>(v) + 1) * nl, npos);
    for (Letter l = 0; l < nl; ++l) {
      Word cand = words_[v];
      cand.push_back(l);
      std::uint32_t u = resolve(cand, dist_[v]);
      step_[static_cast<std::size_t>(v) * nl + l] = u;
      if (words_.size() > budgets.ball_vertices)
        fail(ErrorKind::Size, "ball",
             "vertex budget of " + std::to_string(budgets.ball_vertices) +
                 " exceeded at radius " + std::to_string(radius_));
    }
  }
}

// Identify the element of `candidate` (a known vertex word times one letter)
// with an existing vertex, create a new vertex at parent_dist + 1, or report
// npos when it exits the ball.  New vertices keep the candidate word, which is
// the shortlex-least geodesic because parents are expanded in shortlex order.
std::uint32_t CayleyBall::resolve(const Word& candidate, int parent_dist) {
  Word reduced = group_.normal_form(candidate);
  auto hit = index_.find(reduced);
  if (hit != index_.end()) return hit->second;

  if (!group_.canonical_normal_forms()) {
    // equality merge: the element can only sit one level up, one level down,
    // or on the parent level when some rule changes word-length parity
    for (int d : {parent_dist - 1, parent_dist, parent_dist + 1}) {
      if (d < 0 || d + 1 >= static_cast<int>(level_offset_.size())) continue;
      if (parity_preserving_ && (d % 2) == (parent_dist % 2)) continue;
      for (std::uint32_t u = level_offset_[d]; u < level_offset_[d + 1]; ++u) {
        Word probe = candidate;
        Word back = group_.alphabet().invert(words_[u]);
        probe.insert(probe.end(), back.begin(), back.end());
        if (group_.is_identity(probe)) return u;
      }
    }
  } else if (static_cast<int>(reduced.size()) <= parent_dist) {
    fail(ErrorKind::Internal, "ball",
         "canonical form '" + group_.alphabet().print_word(reduced) +
             "' missing from an already enumerated level");
  }

  if (parent_dist + 1 > radius_) return npos;
  std::uint32_t id = static_cast<std::uint32_t>(words_.size());
  words_.push_back(candidate);
  dist_.push_back(parent_dist + 1);
  if (parent_dist + 2 == static_cast<int>(level_offset_.size()))
    level_offset_.push_back(id);
  level_offset_.back() = id + 1;
  index_[reduced] = id;
  return id;
}

std::uint32_t CayleyBall::count_within(int r) const {
  if (r < 0) return 0;
  if (r + 1 >= static_cast<int>(level_offset_.size())) return size();
  return level_offset_[r + 1];
}

std::optional<std::uint32_t> CayleyBall::locate(const Word& w) const {
  Word reduced = group_.normal_form(w);
  auto hit = index_.find(reduced);
  if (hit != index_.end()) return hit->second;
  if (group_.canonical_normal_forms()) return std::nullopt;
  // walk the step table; on boundary exit fall back to an equality scan
  std::uint32_t v = 0;
  bool walked = true;
  for (Letter l : reduced) {
    v = step(v, l);
    if (v == npos) {
      walked = false;
      break;
    }
  }
  if (walked) return v;
  return scan_for(reduced);
}

std::optional<std::uint32_t> CayleyBall::scan_for(const Word& reduced) const {
  for (std::uint32_t u = 0; u < size(); ++u) {
    if (dist_[u] > static_cast<int>(reduced.size())) break;
    if (parity_preserving_ &&
        (dist_[u] % 2) != (static_cast<int>(reduced.size()) % 2))
      continue;
    Word probe = reduced;
    Word back = group_.alphabet().invert(words_[u]);
    probe.insert(probe.end(), back.begin(), back.end());
    if (group_.is_identity(probe)) return u;
  }
  return std::nullopt;
}

std::optional<std::uint32_t> CayleyBall::left_translate(const Word& g,
                                                        std::uint32_t v) const {
  Word w = g;
  w.insert(w.end(), words_[v].begin(), words_[v].end());
  return locate(w);
}

std::vector<int> CayleyBall::distances_from(
    const std::vector<std::uint32_t>& sources) const {
  std::vector<int> d(size(), -1);
  std::deque<std::uint32_t> queue;
  for (std::uint32_t s : sources)
    if (d[s] != 0) {
      d[s] = 0;
      queue.push_back(s);
    }
  const std::size_t nl = group_.alphabet().size();
  while (!queue.empty()) {
    std::uint32_t v = queue.front();
    queue.pop_front();
    for (Letter l = 0; l < nl; ++l) {
      std::uint32_t u = step(v, l);
      if (u != npos && d[u] == -1) {
        d[u] = d[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return d;
}

} // namespace cubulate
