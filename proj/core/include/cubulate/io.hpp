#pragma once

#include "cubulate/cayley_ball.hpp"
#include "cubulate/criteria.hpp"
#include "cubulate/cube_complex.hpp"
#include "cubulate/dual_complex.hpp"
#include "cubulate/hyperplane.hpp"
#include "cubulate/median.hpp"
#include "cubulate/wallspace.hpp"

#include <memory>
#include <string>

namespace cubulate {

// Versioned artifact serialization.  Graph-like artifacts and reports are
// JSON with deterministic key order and formatting; cube complexes use the
// key-value text format so fixtures stay hand-editable.  Loaders check the
// format tag and version and rebuild an equal in-memory object.

std::string ball_to_json(const CayleyBall& ball);
CayleyBall ball_from_json(const std::string& text, const Budgets& budgets = {});

// A loaded wallspace owns its ball; space.ball points at *ball.
struct WallspaceBundle {
  std::unique_ptr<CayleyBall> ball;
  Wallspace space;
};

std::string walls_to_json(const Wallspace& ws);
WallspaceBundle walls_from_json(const std::string& text,
                                const Budgets& budgets = {});

std::string dual_to_json(const DualComplex& dual);
DualComplex dual_from_json(const std::string& text);

std::string complex_to_text(const CubeComplex& cc);
CubeComplex complex_from_text(const std::string& text);

// 1-skeleton with one edge color per wall
std::string dual_to_dot(const DualComplex& dual);

std::string profile_to_json(const SeparationProfile& profile);
SeparationProfile profile_from_json(const std::string& text);

std::string axis_to_json(const AxisReport& report, const Alphabet& alphabet);
std::string selection_to_json(const SelectionResult& result,
                              const Alphabet& alphabet);
std::string induced_to_json(const InducedWallspace& induced);
std::string npc_to_json(const NpcReport& report);
std::string special_to_json(const PathologyReport& report);
std::string median_to_json(const MedianReport& report);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace cubulate
