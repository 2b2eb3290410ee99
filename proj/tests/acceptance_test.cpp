#include "cubulate/cayley_ball.hpp"
#include "cubulate/criteria.hpp"
#include "cubulate/cube_complex.hpp"
#include "cubulate/dual_complex.hpp"
#include "cubulate/fixtures.hpp"
#include "cubulate/hyperplane.hpp"
#include "cubulate/io.hpp"
#include "cubulate/median.hpp"
#include "cubulate/rewriting.hpp"
#include "cubulate/wallspace.hpp"

#include "oracle.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace cubulate;

namespace {

std::string cli_binary;
std::filesystem::path work_dir;

int run_cli(const std::string& args) {
  std::string cmd = "\"" + cli_binary + "\" " + args + " >> \"" +
                    (work_dir / "cli.log").string() + "\" 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

bool oracle_agreement(std::string& note) {
  auto start = std::chrono::steady_clock::now();
  int nonempty = 0;
  for (std::uint32_t seed = 1; seed <= 100; ++seed) {
    WallspaceBundle b = test_oracle::random_space(seed);
    std::vector<std::uint64_t> expected = test_oracle::oracle_zero_cubes(b.space);
    Budgets roomy;
    roomy.max_cube_dim = 16;
    DualComplex dual = build_dual(b.space, roomy);
    if (dual.vertices != expected) {
      note = "seed " + std::to_string(seed) + " disagrees";
      return false;
    }
    if (!expected.empty()) ++nonempty;
  }
  if (nonempty <= 50) {
    note = "only " + std::to_string(nonempty) + " nontrivial systems";
    return false;
  }
  if (seconds_since(start) > 10.0) {
    note = "oracle sweep too slow";
    return false;
  }
  return true;
}

bool census_agreement(std::string& note) {
  auto start = std::chrono::steady_clock::now();
  WallspaceBundle grid = fixtures::grid_cuts();
  DualComplex gd = build_dual(grid.space);
  if (gd.vertices.size() != 25 || gd.edges.size() != 40 ||
      gd.cube_count(2) != 16 || gd.dimension() != 2) {
    note = "grid census off";
    return false;
  }

  WallspaceBundle tree = fixtures::tree_edges();
  DualComplex td = build_dual(tree.space);
  if (td.vertices.size() != 53 || td.edges.size() != 52 ||
      td.dimension() != 1) {
    note = "tree census off";
    return false;
  }
  std::set<std::uint32_t> images(td.principal.begin(), td.principal.end());
  if (td.principal.size() != 53 || images.size() != 53) {
    note = "tree principal map is not a bijection";
    return false;
  }
  if (seconds_since(start) > 5.0) {
    note = "census too slow";
    return false;
  }
  return true;
}

bool distance_law(std::string& note) {
  std::vector<WallspaceBundle> spaces;
  spaces.push_back(fixtures::line_edges());
  spaces.push_back(fixtures::grid_cuts());
  spaces.push_back(fixtures::grid_vertical_only());
  spaces.push_back(fixtures::tree_edges());
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    const Wallspace& ws = spaces[i].space;
    DualComplex dual = build_dual(ws);
    std::uint32_t trusted = ws.trust_count();
    for (std::uint32_t u = 0; u < trusted; ++u)
      for (std::uint32_t v = u + 1; v < trusted; ++v) {
        int expect = static_cast<int>(separation(ws, u, v).separating);
        if (dual_distance(dual, dual.principal[u], dual.principal[v]) !=
            expect) {
          note = "fixture " + std::to_string(i) + " pair " + std::to_string(u) +
                 "," + std::to_string(v);
          return false;
        }
      }
  }
  return true;
}

bool median_verdicts(std::string& note) {
  std::vector<WallspaceBundle> spaces;
  spaces.push_back(fixtures::line_edges());
  spaces.push_back(fixtures::grid_cuts());
  spaces.push_back(fixtures::grid_vertical_only());
  spaces.push_back(fixtures::tree_edges());
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    CubeComplex cc = from_dual(build_dual(spaces[i].space));
    MedianReport m = check_median(cc.adjacency());
    if (!m.connected || !m.is_median) {
      note = "fixture " + std::to_string(i) + " not median";
      return false;
    }
  }

  CubeComplex grid = from_dual(build_dual(fixtures::grid_cuts().space));
  MedianReport broken =
      check_median(fixtures::delete_interior_edge(grid.adjacency()));
  if (broken.is_median || broken.median_count == 1) {
    note = "deleted edge not detected";
    return false;
  }
  if (broken.x == broken.y || broken.y == broken.z || broken.x == broken.z) {
    note = "witness triple degenerate";
    return false;
  }
  return true;
}

bool curvature_matrix(std::string& note) {
  if (!check_npc(fixtures::torus()).npc || !check_npc(fixtures::solid_cube()).npc) {
    note = "flat fixture rejected";
    return false;
  }
  NpcReport hollow = check_npc(fixtures::three_squares());
  if (hollow.npc || hollow.flag ||
      hollow.detail.find("empty") == std::string::npos) {
    note = "empty triangle not reported";
    return false;
  }

  if (!check_special(fixtures::torus()).special ||
      !check_special(fixtures::wedge()).special ||
      !check_special(fixtures::solid_cube()).special) {
    note = "clean fixture flagged";
    return false;
  }
  PathologyReport loop = check_special(fixtures::one_loop_square());
  if (loop.special || loop.details[0].embedded) {
    note = "self-crossing loop admitted";
    return false;
  }

  WallspaceBundle grid = fixtures::grid_cuts();
  DualComplex dual = build_dual(grid.space);
  std::vector<Hyperplane> hps = hyperplanes(from_dual(dual));
  std::set<std::uint32_t> walls_seen;
  for (const Hyperplane& h : hps) {
    std::set<std::uint32_t> labels;
    for (std::uint32_t e : h.dual_edges) labels.insert(dual.edges[e].wall);
    if (labels.size() != 1) {
      note = "hyperplane spans several walls";
      return false;
    }
    walls_seen.insert(*labels.begin());
  }
  if (hps.size() != 8 || walls_seen.size() != 8) {
    note = "hyperplane wall bijection off";
    return false;
  }
  return true;
}

bool axis_witnesses(std::string& note) {
  WallspaceBundle line = fixtures::line_axis();
  Word a = line.ball->group().alphabet().parse_word("a");
  AxisReport r = axis_separation(line.space, a, 2, 2);
  if (!r.verdict || r.witness.power != 1 || r.chain_checked != 2) {
    note = "line generator witness missing";
    return false;
  }

  WallspaceBundle grid = fixtures::grid_axis();
  Word ga = grid.ball->group().alphabet().parse_word("a");
  if (axis_wall_witness(grid.space, grid.space.walls[0], ga, 1, 1, 2) ||
      axis_wall_witness(grid.space, grid.space.walls[0], ga, 1, -1, 2)) {
    note = "invariant cut accepted";
    return false;
  }
  AxisReport gr = axis_separation(grid.space, ga, 2, 2);
  if (!gr.verdict || gr.witness.wall != 1) {
    note = "crossing cut not found";
    return false;
  }
  return true;
}

bool separation_profiles(std::string& note) {
  WallspaceBundle line = fixtures::line_edges();
  SeparationProfile lp = linear_separation_profile(line.space, 5);
  for (int n = 1; n <= 5; ++n)
    if (lp.min[n] != static_cast<std::uint32_t>(n)) {
      note = "line profile off at " + std::to_string(n);
      return false;
    }
  if (!lp.plausible) {
    note = "line profile implausible";
    return false;
  }

  CayleyBall f2(GroupPresentation::free_group(2), 4);
  Wallspace fw{&f2, 1, edge_walls(f2)};
  SeparationProfile fp = linear_separation_profile(fw, 3);
  if (fp.min[1] != 1 || fp.min[2] != 2 || fp.min[3] != 3 || !fp.plausible) {
    note = "tree profile off";
    return false;
  }

  WallspaceBundle vertical = fixtures::grid_vertical_only();
  SeparationProfile vp = linear_separation_profile(vertical.space, 3);
  if (vp.plausible || vp.min[1] != 0 || vp.min[2] != 0 || vp.min[3] != 0) {
    note = "flat direction not flagged";
    return false;
  }

  std::filesystem::path inputs = work_dir / "inputs";
  if (run_cli("fixtures --out \"" + inputs.string() + "\"") != 0) {
    note = "fixtures subcommand failed";
    return false;
  }
  std::string ball_art = (work_dir / "z2-ball.json").string();
  std::string walls_art = (work_dir / "vertical-walls.json").string();
  if (run_cli("ball --group \"" + (inputs / "z2.group").string() +
              "\" --radius 4 --out \"" + ball_art + "\"") != 0 ||
      run_cli("walls --ball \"" + ball_art + "\" --spec \"" +
              (inputs / "grid-vertical.walls").string() + "\" --out \"" +
              walls_art + "\"") != 0) {
    note = "artifact pipeline failed";
    return false;
  }
  if (run_cli("criteria --walls \"" + walls_art + "\" --L 3") != 1) {
    note = "flat profile should exit with a finding";
    return false;
  }
  return true;
}

bool wall_selection(std::string& note) {
  fixtures::SelectionFixture fix = fixtures::grid_selection();
  SelectionResult result = select_walls(*fix.ball, fix.margin, fix.families, 3,
                                        2, 2, {}, fix.translate_bound);
  if (result.selected.size() != 28 || !result.uncovered.empty() ||
      result.unseparated_pairs != 0) {
    note = "two-family selection incomplete";
    return false;
  }
  Wallspace chosen{fix.ball.get(), fix.margin, {}};
  for (const SelectedWall& s : result.selected) chosen.walls.push_back(s.wall);
  for (const CoverageRow& row : result.coverage) {
    if (!row.covered || row.selected >= result.selected.size()) {
      note = "coverage row unresolved";
      return false;
    }
    if (!axis_wall_witness(chosen, result.selected[row.selected].wall,
                           row.element, row.power, row.sign, 2)) {
      note = "selected wall fails re-verification";
      return false;
    }
  }
  std::uint32_t trusted = chosen.trust_count();
  for (std::uint32_t u = 0; u < trusted; ++u)
    for (std::uint32_t v = u + 1; v < trusted; ++v)
      if (separation(chosen, u, v).separating < 1) {
        note = "trusted pair left unseparated";
        return false;
      }

  SelectionResult partial =
      select_walls(*fix.ball, fix.margin, {fix.families[0]}, 1, 2, 2, {},
                   fix.translate_bound);
  Word b = fix.ball->group().alphabet().parse_word("b");
  if (std::find(partial.uncovered.begin(), partial.uncovered.end(), b) ==
      partial.uncovered.end()) {
    note = "missing direction not reported";
    return false;
  }
  return true;
}

bool induced_walls(std::string& note) {
  fixtures::InduceFixture fix = fixtures::line_in_grid();
  InducedWallspace result = induce_wallspace(fix.ambient.space, *fix.sub,
                                             fix.letter_images, fix.sub_margin);
  if (result.space.walls.size() != 5 || result.discarded_one_sided != 5) {
    note = "induced census off";
    return false;
  }
  for (int k = -2; k <= 2; ++k) {
    Word shift(static_cast<std::size_t>(std::abs(k)),
               static_cast<Letter>(k >= 0 ? 0 : 1));
    Wall direct = wall_from_subgroup(*fix.sub, {}, shift, 0, 4, 2);
    bool found = false;
    for (const Wall& w : result.space.walls)
      found = found || w.same_partition(direct);
    if (!found) {
      note = "point cut " + std::to_string(k) + " missing";
      return false;
    }
  }
  SeparationProfile p = linear_separation_profile(result.space, 3);
  if (!p.plausible || p.min[2] != 1 || p.min[3] != 2) {
    note = "induced profile off";
    return false;
  }
  return true;
}

bool deterministic_output(std::string& note) {
  for (int round = 0; round < 2; ++round) {
    CayleyBall b1(GroupPresentation::free_abelian(2), 4);
    CayleyBall b2(GroupPresentation::free_abelian(2), 4);
    if (ball_to_json(b1) != ball_to_json(b2)) {
      note = "ball artifact drifts";
      return false;
    }
  }
  WallspaceBundle g1 = fixtures::grid_cuts();
  WallspaceBundle g2 = fixtures::grid_cuts();
  if (walls_to_json(g1.space) != walls_to_json(g2.space) ||
      dual_to_json(build_dual(g1.space)) != dual_to_json(build_dual(g2.space))) {
    note = "wall or dual artifact drifts";
    return false;
  }

  std::filesystem::path inputs = work_dir / "det-inputs";
  std::string ball_art = (work_dir / "det-ball.json").string();
  std::string cuts_art = (work_dir / "det-walls.json").string();
  if (run_cli("fixtures --out \"" + inputs.string() + "\"") != 0 ||
      run_cli("ball --group \"" + (inputs / "z2.group").string() +
              "\" --radius 4 --out \"" + ball_art + "\"") != 0 ||
      run_cli("walls --ball \"" + ball_art + "\" --spec \"" +
              (inputs / "grid-cuts.walls").string() + "\" --out \"" + cuts_art +
              "\"") != 0) {
    note = "artifact pipeline failed";
    return false;
  }

  std::string r1 = (work_dir / "profile-1.json").string();
  std::string r2 = (work_dir / "profile-2.json").string();
  if (run_cli("criteria --walls \"" + cuts_art + "\" --L 3 --stall 2 --report \"" +
              r1 + "\"") != 0 ||
      run_cli("criteria --walls \"" + cuts_art + "\" --L 3 --stall 2 --report \"" +
              r2 + "\"") != 0) {
    note = "profile report runs failed";
    return false;
  }
  if (read_file(r1) != read_file(r2)) {
    note = "profile reports differ between runs";
    return false;
  }

  std::string d1 = (work_dir / "dual-1.json").string();
  std::string d2 = (work_dir / "dual-2.json").string();
  if (run_cli("dual --walls \"" + cuts_art + "\" --out \"" + d1 + "\"") != 0 ||
      run_cli("dual --walls \"" + cuts_art + "\" --out \"" + d2 + "\"") != 0) {
    note = "dual artifact runs failed";
    return false;
  }
  if (read_file(d1) != read_file(d2)) {
    note = "dual artifacts differ between runs";
    return false;
  }
  return true;
}

struct Criterion {
  const char* what;
  bool (*run)(std::string&);
};

} // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: acceptance_test <cubulate-binary> <work-dir>\n");
    return 2;
  }
  cli_binary = argv[1];
  work_dir = argv[2];
  std::filesystem::create_directories(work_dir);

  const Criterion criteria[] = {
      {"dual zero-cubes match the exhaustive orientation oracle on 100 seeds",
       oracle_agreement},
      {"canonical duals reproduce the grid and tree censuses", census_agreement},
      {"dual graph distance equals the wall separation count on cut fixtures",
       distance_law},
      {"fixture duals are median graphs and edge deletion breaks uniqueness",
       median_verdicts},
      {"curvature and specialness verdicts match the fixture matrix",
       curvature_matrix},
      {"axis search accepts translation chains and rejects invariant cuts",
       axis_witnesses},
      {"separation profiles grow where expected and flag flat directions",
       separation_profiles},
      {"greedy selection covers short elements and separates the trust ball",
       wall_selection},
      {"induced subgroup walls reproduce point cuts with a growing profile",
       induced_walls},
      {"artifacts and reports are byte-identical across repeated runs",
       deterministic_output},
  };

  int passed = 0;
  int number = 0;
  for (const Criterion& c : criteria) {
    ++number;
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    if (ok) {
      ++passed;
      std::printf("criterion %d: PASS %s\n", number, c.what);
    } else {
      std::printf("criterion %d: FAIL %s (%s)\n", number, c.what,
                  detail.c_str());
    }
  }
  std::printf("acceptance: %d/10\n", passed);
  return passed == 10 ? 0 : 1;
}
