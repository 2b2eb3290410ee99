#pragma once

#include "cubulate/cayley_ball.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cubulate {

enum class Side : std::uint8_t { Left = 0, Right = 1, On = 2 };

enum class WallKind : std::uint8_t { Subgroup, Edge, Abstract, Translate };

// A wall is a partition of the ball vertices into two halves and an optional
// carrier strip.  Side::Left always contains the shortlex-least vertex that
// lies off the carrier and qualifies as deep, so equal partitions compare
// equal regardless of construction order.
struct Wall {
  WallKind kind = WallKind::Abstract;
  std::string label;
  std::vector<std::uint8_t> side;

  Side side_of(std::uint32_t v) const { return static_cast<Side>(side[v]); }
  std::vector<std::uint32_t> carrier() const;
  bool same_partition(const Wall& other) const { return side == other.side; }
};

// Walls over a fixed ball together with the trust margin: conclusions about
// crossing, nesting and separation are only read off vertices within radius
// ball.radius() - margin, where boundary truncation cannot flip them.
struct Wallspace {
  const CayleyBall* ball = nullptr;
  int margin = 0;
  std::vector<Wall> walls;

  int trust_radius() const { return ball->radius() - margin; }
  std::uint32_t trust_count() const { return ball->count_within(trust_radius()); }
};

// Wall dual to a coset g<sub_gens>: the carrier is the coset's
// carrier_radius-neighborhood inside the ball, and the two sides are
// complement components reaching depth depth_threshold within the trust ball.
// Throws NotCodimensionOne (with a component census) when fewer than two deep
// components exist, and Scale when the carrier swallows the ball.
Wall wall_from_subgroup(const CayleyBall& ball, const std::vector<Word>& sub_gens,
                        const Word& conjugator, int carrier_radius,
                        int trust_radius, int depth_threshold,
                        std::string label = {});

// Wall dual to a single graph edge; the edge must disconnect the ball.
Wall wall_from_edge(const CayleyBall& ball, std::uint32_t v, Letter l);

// Every edge whose removal splits the ball, deduplicated by partition.
std::vector<Wall> edge_walls(const CayleyBall& ball);

// Partition supplied directly (one byte per vertex, values of Side).
Wall abstract_wall(const CayleyBall& ball, std::vector<std::uint8_t> side,
                   std::string label = {});

// Side of vertex v in the left-translate of `wall` by g, where g_inv is the
// reduced inverse of g.  Returns On for carrier hits and Unknown when
// g^-1 * v falls outside the ball.
enum class TranslatedSide : std::uint8_t { Left = 0, Right = 1, On = 2, Unknown = 3 };
TranslatedSide translated_side(const CayleyBall& ball, const Wall& wall,
                               const Word& g_inv, std::uint32_t v);

// Full left-translate of a wall; vertices whose preimage leaves the ball are
// marked On so they never witness a side.
Wall translate_wall(const CayleyBall& ball, const Wall& wall, const Word& g,
                    std::string label = {});

// A wall is trusted when its carrier is empty or meets the trust ball;
// otherwise every conclusion about it would rest on boundary artifacts.
bool wall_trusted(const Wallspace& ws, const Wall& wall);

// Quadrant populations of two walls over off-carrier trust vertices, indexed
// [side of a][side of b].
struct QuadrantCensus {
  std::uint32_t count[2][2] = {{0, 0}, {0, 0}};
  bool all_nonempty() const {
    return count[0][0] && count[0][1] && count[1][0] && count[1][1];
  }
};
QuadrantCensus quadrants(const Wallspace& ws, const Wall& a, const Wall& b);

bool walls_cross(const Wallspace& ws, const Wall& a, const Wall& b);

// First empty quadrant in canonical order, None when the walls cross.
// Adjacent carriers can empty two quadrants at once, so the verdict reports
// the canonical one rather than asserting uniqueness.
enum class NestVerdict : std::uint8_t {
  LeftLeft,
  LeftRight,
  RightLeft,
  RightRight,
  None
};
NestVerdict walls_nest(const Wallspace& ws, const Wall& a, const Wall& b);

// Number of walls separating u from v; walls carrying either endpoint cannot
// vote and are reported as skipped.
struct SeparationCount {
  std::uint32_t separating = 0;
  std::uint32_t skipped = 0;
};
SeparationCount separation(const Wallspace& ws, std::uint32_t u, std::uint32_t v);

const char* to_string(NestVerdict v);
const char* to_string(Side s);

} // namespace cubulate
