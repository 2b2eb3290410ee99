#pragma once

#include "cubulate/config.hpp"
#include "cubulate/rewriting.hpp"
#include "cubulate/words.hpp"

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace cubulate {

// Metric ball around the identity in a Cayley graph.  Vertices are indexed in
// breadth-first order, which coincides with shortlex order on their canonical
// words; vertex 0 is the identity.  step(v, l) walks the right-multiplication
// edge and reports npos when the product falls outside the ball.
//
// Vertex identity is resolved through canonical normal forms when the group
// provides them, otherwise by explicit equality merging, which requires an
// exact identity test.  Groups offering neither are rejected.
class CayleyBall {
public:
  static constexpr std::uint32_t npos = 0xffffffffu;

  CayleyBall(GroupPresentation group, int radius, const Budgets& budgets = {});

  const GroupPresentation& group() const { return group_; }
  int radius() const { return radius_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(words_.size()); }
  const Word& word(std::uint32_t v) const { return words_[v]; }
  const std::vector<Word>& words() const { return words_; }
  int distance(std::uint32_t v) const { return dist_[v]; }
  std::uint32_t identity() const { return 0; }

  std::uint32_t step(std::uint32_t v, Letter l) const {
    return step_[static_cast<std::size_t>(v) * group_.alphabet().size() + l];
  }

  // vertices with distance <= r occupy indices [0, count_within(r))
  std::uint32_t count_within(int r) const;

  // index of the element w represents, if it lies in the ball
  std::optional<std::uint32_t> locate(const Word& w) const;

  // index of g * word(v), if it lies in the ball
  std::optional<std::uint32_t> left_translate(const Word& g, std::uint32_t v) const;

  // BFS distances inside the ball graph from a vertex set; -1 = unreachable
  std::vector<int> distances_from(const std::vector<std::uint32_t>& sources) const;

private:
  std::uint32_t resolve(const Word& candidate, int parent_dist);
  std::optional<std::uint32_t> scan_for(const Word& reduced) const;

  GroupPresentation group_;
  int radius_ = 0;
  std::vector<Word> words_;
  std::vector<int> dist_;
  std::vector<std::uint32_t> step_;
  std::vector<std::uint32_t> level_offset_;
  std::unordered_map<Word, std::uint32_t, WordHash> index_;
  bool parity_preserving_ = false;
};

} // namespace cubulate
