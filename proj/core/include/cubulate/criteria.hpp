#pragma once

#include "cubulate/wallspace.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cubulate {

// Separation counts #(1, g) aggregated per trusted sphere.  The minimum is
// the load-bearing statistic: a proper action needs it to grow without bound,
// and at finite scale the plausibility flag checks that the monotone lower
// envelope of the minima strictly increases at least every `stall` steps and
// ends positive.
struct SeparationProfile {
  int max_distance = 0;
  std::vector<std::uint32_t> sphere;  // trusted sphere sizes, index = distance
  std::vector<std::uint32_t> min;
  std::vector<std::uint32_t> max;
  std::vector<double> mean;
  std::vector<std::uint32_t> envelope;  // running minimum from the right
  bool plausible = false;
  std::string warning;

  bool operator==(const SeparationProfile&) const = default;
};

SeparationProfile linear_separation_profile(const Wallspace& ws, int max_distance,
                                            int stall = 1);

// A verified axis witness: the halfspaces of `wall` translated along powers
// of g form a strictly nested chain.  sign tells which power direction grows
// the Left half.
struct AxisWitness {
  std::uint32_t wall = 0;  // index into the searched wall list
  Word translate;
  int power = 1;
  int sign = 1;
};

struct AxisReport {
  Word element;
  bool verdict = false;
  bool torsion = false;
  AxisWitness witness;    // populated when verdict holds
  int chain_checked = 0;  // walls g^{kn} fW pairwise nested for |k| <= this
  std::string note;
};

// Checks one concrete wall: translates of `wall` by g^{sign*k*n} for
// |k| <= k_max must nest strictly (Left halves grow with k, Right halves
// shrink, on trusted vertices).  The wall itself must cut the trust ball.
bool axis_wall_witness(const Wallspace& ws, const Wall& wall, const Word& g,
                       int n, int sign, int k_max);

// Order of g if it is at most order_bound, otherwise nothing.
std::optional<int> finite_order(const GroupPresentation& group, const Word& g,
                                int order_bound);

// Searches translates fW of the walls in ws (f over vertices of length at
// most translate_bound in shortlex order, default the trust radius) and
// powers n <= n_max for a witness, then verifies the chain to k_max.
// Elements of finite order are screened out first: powers up to order_bound
// (default 2 * radius) must stay nontrivial.  Throws Scale when a required
// power of g leaves the trust ball.
AxisReport axis_separation(const Wallspace& ws, const Word& g, int n_max,
                           int k_max, int order_bound = 0,
                           int translate_bound = -1);

// A named wall whose translates are candidates for selection.
struct WallFamily {
  std::string label;
  Wall base;
};

struct SelectedWall {
  std::uint32_t family = 0;
  Word translate;
  Wall wall;
  int power = 0;  // witness data when selected for an element, 0 for a
  int sign = 0;   // pair-separation pick
};

struct CoverageRow {
  Word element;  // conjugacy representative, shortlex-least in its cyclic class
  bool covered = false;
  bool exempt = false;   // conjugate into a declared parabolic subgroup
  bool torsion = false;
  std::uint32_t selected = 0;  // index into SelectionResult::selected
  int power = 0;
  int sign = 0;
  std::string note;
};

struct SelectionResult {
  std::vector<SelectedWall> selected;
  std::vector<CoverageRow> coverage;
  std::vector<Word> uncovered;  // neither covered, exempt, nor torsion
  std::uint32_t unseparated_pairs = 0;
  std::optional<std::pair<std::uint32_t, std::uint32_t>> first_unseparated;
};

// Greedy finite wall selection: walks conjugacy representatives of elements
// with |g| <= max_length (cyclic dedup), reuses already-selected walls when
// they witness the next element, otherwise scans families in order and
// translates in shortlex order for an axis witness.  A second pass picks
// walls until every trusted vertex pair is separated, reporting any residue.
// Elements conjugate into a parabolic (by a trusted conjugator) are exempt.
SelectionResult select_walls(const CayleyBall& ball, int margin,
                             const std::vector<WallFamily>& families,
                             int max_length, int n_max = 2, int k_max = 2,
                             const std::vector<std::vector<Word>>& parabolics = {},
                             int translate_bound = -1);

// Ambient walls restricted to a subgroup ball.  The subgroup comes with its
// own presentation and ball; letter_images maps each of its letters to an
// ambient word.  Traces that are one-sided on the subgroup ball are dropped;
// identical traces (up to swapping the halves) are merged with provenance.
struct InducedWallspace {
  Wallspace space;  // walls over the subgroup ball passed in
  std::vector<std::uint32_t> image;  // subgroup vertex -> ambient vertex
  std::vector<std::vector<std::uint32_t>> provenance;
  std::uint32_t discarded_one_sided = 0;
};

InducedWallspace induce_wallspace(const Wallspace& ambient,
                                  const CayleyBall& sub_ball,
                                  const std::vector<Word>& letter_images,
                                  int sub_margin = 0);

} // namespace cubulate
