#include "cubulate/errors.hpp"
#include "cubulate/fixtures.hpp"
#include "cubulate/io.hpp"
#include "cubulate/structured_text.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

namespace {

using namespace cubulate;

// Exit codes: 0 clean verdict, 1 negative finding, 2 input or scale error.
constexpr int kFinding = 1;
constexpr int kError = 2;

const char* kVersion =
    "cubulate 0.1.0\n"
    "formats: ball 1, walls 1, dual 1, cube-complex 1, reports 1";

struct Options {
  Budgets budgets;
  std::string ball_path;
  std::string walls_path;
  std::string group_path;
  std::string spec_path;
  std::string complex_path;
  std::string out_path;
  std::string dot_path;
  std::string report_path;
  std::string element;
  std::vector<std::string> parabolics;
  int radius = 2;
  int margin = -1;
  int sub_margin = 0;
  int max_length = 0;
  int stall = 1;
  int n_max = 2;
  int k_max = 2;
  int order_bound = 0;
  int translate_bound = -1;
};

void add_budget_flags(CLI::App& app, Budgets& b) {
  app.add_option("--budget-rewrite", b.rewrite_steps,
                 "rewrite steps per normal-form call");
  app.add_option("--budget-vertices", b.ball_vertices, "ball vertex cap");
  app.add_option("--budget-walls", b.walls, "wall count cap for dual builds");
  app.add_option("--budget-zero-cubes", b.zero_cubes, "dual 0-cube cap");
  app.add_option("--budget-max-dim", b.max_cube_dim, "cube dimension cap");
}

std::string group_blurb(const GroupPresentation& g) {
  if (g.builtin()) return g.builtin()->to_string();
  return "user system, " + std::to_string(g.alphabet().size()) + " letters, " +
         std::to_string(g.rules().size()) + " rules";
}

int run_ball(const Options& o) {
  GroupPresentation group = group_from_text(read_file(o.group_path));
  CayleyBall ball(group, o.radius, o.budgets);
  write_file(o.out_path, ball_to_json(ball));
  std::printf("ball: %s, radius %d, %u vertices -> %s\n",
              group_blurb(group).c_str(), o.radius, ball.size(),
              o.out_path.c_str());
  return 0;
}

int run_walls(const Options& o) {
  CayleyBall ball = ball_from_json(read_file(o.ball_path), o.budgets);
  WallsSpecResult res =
      walls_from_spec(read_file(o.spec_path), ball, o.margin);
  for (const std::string& note : res.notes)
    std::printf("note: %s\n", note.c_str());
  Wallspace ws{&ball, res.margin, std::move(res.walls)};
  write_file(o.out_path, walls_to_json(ws));
  std::printf("walls: %zu walls, margin %d, trust radius %d -> %s\n",
              ws.walls.size(), ws.margin, ws.trust_radius(),
              o.out_path.c_str());
  return 0;
}

int run_dual(const Options& o) {
  WallspaceBundle b = walls_from_json(read_file(o.walls_path), o.budgets);
  DualComplex dual = build_dual(b.space, o.budgets);
  write_file(o.out_path, dual_to_json(dual));
  if (!o.dot_path.empty()) write_file(o.dot_path, dual_to_dot(dual));
  std::printf("dual: %zu vertices, %zu edges, %zu squares", dual.cube_count(0),
              dual.cube_count(1), dual.cube_count(2));
  for (int d = 3; d <= dual.dimension(); ++d)
    std::printf(", %zu %d-cubes", dual.cube_count(d), d);
  std::printf("; dimension %d", dual.dimension());
  if (dual.dropped_seeds)
    std::printf("; %u dropped seeds", dual.dropped_seeds);
  std::printf(" -> %s\n", o.out_path.c_str());
  return 0;
}

int run_check_npc(const Options& o) {
  CubeComplex cc = complex_from_text(read_file(o.complex_path));
  validate(cc);
  NpcReport r = check_npc(cc, o.budgets);
  if (!o.report_path.empty()) write_file(o.report_path, npc_to_json(r));
  if (r.npc) {
    std::printf("npc: every vertex link is simplicial and flag "
                "(%u vertices, %zu edges, %zu squares)\n",
                cc.vertex_count, cc.edges.size(), cc.squares.size());
    return 0;
  }
  std::printf("not npc: %s\n", r.detail.c_str());
  return kFinding;
}

int run_check_special(const Options& o) {
  CubeComplex cc = complex_from_text(read_file(o.complex_path));
  validate(cc);
  PathologyReport r = check_special(cc);
  if (!o.report_path.empty()) write_file(o.report_path, special_to_json(r));
  std::printf("hyperplanes: %zu\n", r.details.size());
  for (const std::string& note : r.notes)
    std::printf("note: %s\n", note.c_str());
  for (const std::string& finding : r.findings)
    std::printf("finding: %s\n", finding.c_str());
  std::printf("%s\n", r.special ? "special" : "not special");
  return r.special ? 0 : kFinding;
}

void print_profile(const SeparationProfile& p) {
  std::printf("%4s %8s %6s %8s %6s %9s\n", "d", "sphere", "min", "mean", "max",
              "envelope");
  for (int d = 1; d <= p.max_distance; ++d)
    std::printf("%4d %8u %6u %8.2f %6u %9u\n", d, p.sphere[d], p.min[d],
                p.mean[d], p.max[d], p.envelope[d]);
  if (!p.warning.empty()) std::printf("warning: %s\n", p.warning.c_str());
}

int run_criteria(const Options& o) {
  WallspaceBundle b = walls_from_json(read_file(o.walls_path), o.budgets);
  SeparationProfile p =
      linear_separation_profile(b.space, o.max_length, o.stall);
  if (!o.report_path.empty()) write_file(o.report_path, profile_to_json(p));
  print_profile(p);
  if (p.plausible) {
    std::printf("separation grows: properness is plausible at this scale\n");
    return 0;
  }
  std::printf("separation does not grow: properness fails at this scale\n");
  return kFinding;
}

int run_axis(const Options& o) {
  WallspaceBundle b = walls_from_json(read_file(o.walls_path), o.budgets);
  const Alphabet& alphabet = b.ball->group().alphabet();
  Word g = alphabet.parse_word(o.element);
  AxisReport r = axis_separation(b.space, g, o.n_max, o.k_max, o.order_bound,
                                 o.translate_bound);
  if (!o.report_path.empty())
    write_file(o.report_path, axis_to_json(r, alphabet));
  if (r.torsion) {
    std::printf("torsion: %s\n", r.note.c_str());
    return kFinding;
  }
  if (!r.verdict) {
    std::printf("no axis witness: %s\n", r.note.c_str());
    return kFinding;
  }
  const Wall& w = b.space.walls[r.witness.wall];
  std::printf("axis witness for %s: wall %u (%s), translate %s, power %d, "
              "sign %+d; chain nested for |k| <= %d\n",
              alphabet.print_word(g).c_str(), r.witness.wall, w.label.c_str(),
              alphabet.print_word(r.witness.translate).c_str(),
              r.witness.power, r.witness.sign, r.chain_checked);
  return 0;
}

int run_select(const Options& o) {
  CayleyBall ball = ball_from_json(read_file(o.ball_path), o.budgets);
  std::string text = read_file(o.spec_path);
  int margin = o.margin;
  if (margin < 0) {
    KvFile kv = parse_kv(text, "candidates spec");
    const std::string* m = kv.sections[0].get("margin");
    margin = m ? parse_int(*m, kv.where) : default_margin(ball.radius());
  }
  std::vector<WallFamily> families = families_from_spec(text, ball, margin);
  const Alphabet& alphabet = ball.group().alphabet();

  std::vector<std::vector<Word>> parabolics;
  for (const std::string& p : o.parabolics) {
    std::vector<Word> gens;
    for (const std::string& w : split_list(p))
      gens.push_back(alphabet.parse_word(w));
    parabolics.push_back(std::move(gens));
  }

  SelectionResult r = select_walls(ball, margin, families, o.max_length,
                                   o.n_max, o.k_max, parabolics,
                                   o.translate_bound);
  if (!o.report_path.empty())
    write_file(o.report_path, selection_to_json(r, alphabet));

  std::printf("representatives with |g| <= %d: %zu\n", o.max_length,
              r.coverage.size());
  std::printf("selected walls: %zu\n", r.selected.size());
  for (const SelectedWall& s : r.selected)
    std::printf("  %s\n", s.wall.label.c_str());
  for (const Word& u : r.uncovered)
    std::printf("uncovered: %s\n", alphabet.print_word(u).c_str());
  if (r.unseparated_pairs) {
    std::printf("unseparated trusted pairs: %u", r.unseparated_pairs);
    if (r.first_unseparated)
      std::printf(" (first: %s vs %s)",
                  alphabet.print_word(ball.word(r.first_unseparated->first)).c_str(),
                  alphabet.print_word(ball.word(r.first_unseparated->second)).c_str());
    std::printf("\n");
  }
  if (r.uncovered.empty() && r.unseparated_pairs == 0) {
    std::printf("selection covers every representative and separates every "
                "trusted pair\n");
    return 0;
  }
  return kFinding;
}

int run_induce(const Options& o) {
  WallspaceBundle b = walls_from_json(read_file(o.walls_path), o.budgets);
  const GroupPresentation& ambient = b.ball->group();
  Word g = ambient.normal_form(ambient.alphabet().parse_word(o.element));
  if (g.empty())
    fail(ErrorKind::MalformedInput, "induce", "subgroup generator is trivial");

  int trust = b.space.trust_radius();
  int sub_radius = trust / static_cast<int>(g.size());
  if (sub_radius < 1)
    fail(ErrorKind::Scale, "induce",
         "generator length " + std::to_string(g.size()) +
             " exceeds the ambient trust radius " + std::to_string(trust));

  Alphabet sub_alphabet({"t", "T"}, {1, 0});
  std::vector<Rule> sub_rules = {Rule{sub_alphabet.parse_word("tT"), {}},
                                 Rule{sub_alphabet.parse_word("Tt"), {}}};
  GroupPresentation sub_group(sub_alphabet, sub_rules, true);
  CayleyBall sub(sub_group, sub_radius, o.budgets);

  std::vector<Word> images = {g, ambient.inverse(g)};
  InducedWallspace iw = induce_wallspace(b.space, sub, images, o.sub_margin);
  if (!o.report_path.empty()) write_file(o.report_path, induced_to_json(iw));

  std::printf("subgroup <%s>: ball radius %d, %u vertices\n",
              ambient.alphabet().print_word(g).c_str(), sub_radius, sub.size());
  std::printf("induced walls: %zu (%u one-sided traces discarded)\n",
              iw.space.walls.size(), iw.discarded_one_sided);
  for (const Wall& w : iw.space.walls)
    std::printf("  %s\n", w.label.c_str());
  if (iw.space.walls.empty()) {
    std::printf("no ambient wall leaves a two-sided trace on the subgroup\n");
    return kFinding;
  }
  if (o.max_length > 0) {
    SeparationProfile p =
        linear_separation_profile(iw.space, o.max_length, o.stall);
    print_profile(p);
    if (!p.plausible) {
      std::printf("induced separation does not grow\n");
      return kFinding;
    }
    std::printf("induced separation grows\n");
  }
  return 0;
}

int run_fixtures(const Options& o) {
  std::error_code ec;
  std::filesystem::create_directories(o.out_path, ec);
  if (ec)
    fail(ErrorKind::MalformedInput, "fixtures",
         "cannot create " + o.out_path + ": " + ec.message());
  for (const fixtures::FixtureFile& f : fixtures::files()) {
    write_file(o.out_path + "/" + f.name, f.text);
    std::printf("wrote %s/%s\n", o.out_path.c_str(), f.name.c_str());
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"wall systems and dual cube complexes over Cayley balls"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Options o;
  try {
    o.budgets = budgets_from_env();
  } catch (const cubulate::Error& e) {
    std::fprintf(stderr, "cubulate: %s\n", e.what());
    return kError;
  }

  int threads = 1;
  unsigned seed = 0;
  app.add_option("--threads", threads,
                 "worker threads for parallel stages (current stages are "
                 "single-threaded)");
  app.add_option("--seed", seed,
                 "seed for randomized pipelines (current stages are "
                 "deterministic)");

  CLI::App* ball = app.add_subcommand("ball", "build a Cayley ball");
  ball->add_option("--group", o.group_path, "group spec file")->required();
  ball->add_option("--radius", o.radius, "ball radius")->required();
  ball->add_option("--out", o.out_path, "output ball artifact")->required();
  add_budget_flags(*ball, o.budgets);

  CLI::App* walls = app.add_subcommand("walls", "build a wall system");
  walls->add_option("--ball", o.ball_path, "ball artifact")->required();
  walls->add_option("--spec", o.spec_path, "walls spec file")->required();
  walls->add_option("--out", o.out_path, "output walls artifact")->required();
  walls->add_option("--margin", o.margin, "trust margin (default: spec file)");
  add_budget_flags(*walls, o.budgets);

  CLI::App* dual = app.add_subcommand("dual", "build the dual cube complex");
  dual->add_option("--walls", o.walls_path, "walls artifact")->required();
  dual->add_option("--out", o.out_path, "output dual artifact")->required();
  dual->add_option("--dot", o.dot_path, "DOT export of the 1-skeleton");
  add_budget_flags(*dual, o.budgets);

  CLI::App* npc = app.add_subcommand("check-npc", "vertex link flag check");
  npc->add_option("file", o.complex_path, "cube complex file")->required();
  npc->add_option("--report", o.report_path, "JSON report path");
  add_budget_flags(*npc, o.budgets);

  CLI::App* special =
      app.add_subcommand("check-special", "hyperplane pathology check");
  special->add_option("file", o.complex_path, "cube complex file")->required();
  special->add_option("--report", o.report_path, "JSON report path");
  add_budget_flags(*special, o.budgets);

  CLI::App* criteria =
      app.add_subcommand("criteria", "linear separation profile");
  criteria->add_option("--walls", o.walls_path, "walls artifact")->required();
  criteria->add_option("--L", o.max_length, "profile distance bound")
      ->required()
      ->check(CLI::PositiveNumber);
  criteria->add_option("--stall", o.stall, "allowed envelope stall length")
      ->check(CLI::PositiveNumber);
  criteria->add_option("--report", o.report_path, "JSON report path");
  add_budget_flags(*criteria, o.budgets);

  CLI::App* axis = app.add_subcommand("axis", "axis separation witness");
  axis->add_option("--g", o.element, "group element")->required();
  axis->add_option("--walls", o.walls_path, "walls artifact")->required();
  axis->add_option("--n-max", o.n_max, "largest power to try");
  axis->add_option("--k-max", o.k_max, "chain length to verify");
  axis->add_option("--order-bound", o.order_bound, "torsion screen bound");
  axis->add_option("--translate-bound", o.translate_bound,
                   "longest translate to try");
  axis->add_option("--report", o.report_path, "JSON report path");
  add_budget_flags(*axis, o.budgets);

  CLI::App* select = app.add_subcommand("select", "greedy finite wall selection");
  select->add_option("--ball", o.ball_path, "ball artifact")->required();
  select->add_option("--candidates", o.spec_path, "candidate families spec")
      ->required();
  select->add_option("--L", o.max_length, "element length bound")
      ->required()
      ->check(CLI::PositiveNumber);
  select->add_option("--margin", o.margin, "trust margin (default: spec file)");
  select->add_option("--n-max", o.n_max, "largest power to try");
  select->add_option("--k-max", o.k_max, "chain length to verify");
  select->add_option("--translate-bound", o.translate_bound,
                     "longest translate to try");
  select->add_option("--parabolic", o.parabolics,
                     "generators of an exempt parabolic subgroup "
                     "(repeatable, comma-separated words)");
  select->add_option("--report", o.report_path, "JSON report path");
  add_budget_flags(*select, o.budgets);

  CLI::App* induce =
      app.add_subcommand("induce", "restrict walls to a cyclic subgroup");
  induce->add_option("--subgroup", o.element, "subgroup generator word")
      ->required();
  induce->add_option("--walls", o.walls_path, "walls artifact")->required();
  induce->add_option("--sub-margin", o.sub_margin, "subgroup trust margin");
  induce->add_option("--L", o.max_length,
                     "also profile the induced system up to this distance");
  induce->add_option("--report", o.report_path, "JSON report path");
  add_budget_flags(*induce, o.budgets);

  CLI::App* fixtures = app.add_subcommand("fixtures", "write sample inputs");
  fixtures->add_option("--out", o.out_path, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (ball->parsed()) return run_ball(o);
    if (walls->parsed()) return run_walls(o);
    if (dual->parsed()) return run_dual(o);
    if (npc->parsed()) return run_check_npc(o);
    if (special->parsed()) return run_check_special(o);
    if (criteria->parsed()) return run_criteria(o);
    if (axis->parsed()) return run_axis(o);
    if (select->parsed()) return run_select(o);
    if (induce->parsed()) return run_induce(o);
    if (fixtures->parsed()) return run_fixtures(o);
  } catch (const cubulate::Error& e) {
    std::fprintf(stderr, "cubulate: %s\n", e.what());
    return kError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "cubulate: internal: %s\n", e.what());
    return kError;
  }
  return kError;
}
