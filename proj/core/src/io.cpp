#include "cubulate/io.hpp"

#include "cubulate/errors.hpp"
#include "cubulate/structured_text.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace cubulate {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json parse_json(const std::string& text, const std::string& where) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(ErrorKind::MalformedInput, where, "not valid JSON");
  return j;
}

void expect_format(const ordered_json& j, const char* format,
                   const std::string& where) {
  if (!j.is_object() || j.value("format", std::string{}) != format)
    fail(ErrorKind::MalformedInput, where,
         std::string("expected a ") + format + " artifact");
  if (j.value("version", 0) != 1)
    fail(ErrorKind::MalformedInput, where,
         "unsupported version (this build reads version 1)");
}

[[noreturn]] void rethrow_malformed(const std::string& where,
                                    const std::exception& e) {
  fail(ErrorKind::MalformedInput, where, e.what());
}

const char* builtin_name(BuiltinKind kind) {
  switch (kind) {
    case BuiltinKind::FreeGroup: return "free";
    case BuiltinKind::FreeAbelian: return "free_abelian";
    case BuiltinKind::SurfaceGenus2: return "surface_genus2";
    case BuiltinKind::RightAngledArtin: return "right_angled_artin";
    case BuiltinKind::RightAngledCoxeter: return "right_angled_coxeter";
  }
  return "";
}

ordered_json group_to_jsonv(const GroupPresentation& group) {
  ordered_json j;
  if (group.builtin()) {
    const BuiltinTag& tag = *group.builtin();
    j["builtin"] = builtin_name(tag.kind);
    if (tag.kind == BuiltinKind::FreeGroup || tag.kind == BuiltinKind::FreeAbelian)
      j["rank"] = tag.rank;
    if (!tag.vertices.empty()) {
      j["vertices"] = tag.vertices;
      ordered_json edges = ordered_json::array();
      for (const auto& [a, b] : tag.edges)
        edges.push_back(ordered_json::array({a, b}));
      j["edges"] = std::move(edges);
    }
    return j;
  }

  const Alphabet& ab = group.alphabet();
  ordered_json letters = ordered_json::array();
  ordered_json inverse = ordered_json::array();
  for (std::size_t i = 0; i < ab.size(); ++i) {
    letters.push_back(ab.name(static_cast<Letter>(i)));
    inverse.push_back(ab.inverse(static_cast<Letter>(i)));
  }
  j["letters"] = std::move(letters);
  j["inverse"] = std::move(inverse);
  ordered_json rules = ordered_json::array();
  for (const Rule& r : group.rules()) {
    ordered_json rule;
    rule["lhs"] = ab.print_word(r.lhs);
    rule["rhs"] = ab.print_word(r.rhs);
    rules.push_back(std::move(rule));
  }
  j["rules"] = std::move(rules);
  j["confluent"] = group.confluence_declared();
  return j;
}

GroupPresentation group_from_jsonv(const ordered_json& j,
                                   const std::string& where) {
  if (j.contains("builtin")) {
    std::string kind = j.at("builtin").get<std::string>();
    BuiltinTag tag;
    if (kind == "free")
      tag.kind = BuiltinKind::FreeGroup;
    else if (kind == "free_abelian")
      tag.kind = BuiltinKind::FreeAbelian;
    else if (kind == "surface_genus2")
      tag.kind = BuiltinKind::SurfaceGenus2;
    else if (kind == "right_angled_artin")
      tag.kind = BuiltinKind::RightAngledArtin;
    else if (kind == "right_angled_coxeter")
      tag.kind = BuiltinKind::RightAngledCoxeter;
    else
      fail(ErrorKind::MalformedInput, where, "unknown builtin '" + kind + "'");
    tag.rank = j.value("rank", 0);
    if (j.contains("vertices")) {
      tag.vertices = j.at("vertices").get<std::vector<std::string>>();
      for (const auto& e : j.at("edges"))
        tag.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    return GroupPresentation::from_builtin(tag);
  }

  std::vector<std::string> names =
      j.at("letters").get<std::vector<std::string>>();
  std::vector<Letter> inverse = j.at("inverse").get<std::vector<Letter>>();
  Alphabet alphabet(std::move(names), std::move(inverse));
  std::vector<Rule> rules;
  for (const auto& r : j.at("rules"))
    rules.push_back(Rule{alphabet.parse_word(r.at("lhs").get<std::string>()),
                         alphabet.parse_word(r.at("rhs").get<std::string>())});
  return GroupPresentation(std::move(alphabet), std::move(rules),
                           j.value("confluent", true));
}

ordered_json ball_to_jsonv(const CayleyBall& ball) {
  ordered_json j;
  j["format"] = "cubulate-ball";
  j["version"] = 1;
  j["group"] = group_to_jsonv(ball.group());
  j["radius"] = ball.radius();
  j["vertex_count"] = ball.size();
  const Alphabet& ab = ball.group().alphabet();
  ordered_json vertices = ordered_json::array();
  for (std::uint32_t v = 0; v < ball.size(); ++v)
    vertices.push_back(ab.print_word(ball.word(v)));
  j["vertices"] = std::move(vertices);
  return j;
}

CayleyBall ball_from_jsonv(const ordered_json& j, const std::string& where,
                           const Budgets& budgets) {
  expect_format(j, "cubulate-ball", where);
  GroupPresentation group = group_from_jsonv(j.at("group"), where);
  int radius = j.at("radius").get<int>();
  CayleyBall ball(std::move(group), radius, budgets);

  const auto& vertices = j.at("vertices");
  if (j.at("vertex_count").get<std::uint32_t>() != ball.size() ||
      vertices.size() != ball.size())
    fail(ErrorKind::MalformedInput, where,
         "ball artifact lists " + std::to_string(vertices.size()) +
             " vertices but reconstruction has " + std::to_string(ball.size()));
  const Alphabet& ab = ball.group().alphabet();
  for (std::uint32_t v = 0; v < ball.size(); ++v)
    if (vertices[v].get<std::string>() != ab.print_word(ball.word(v)))
      fail(ErrorKind::MalformedInput, where,
           "ball artifact disagrees with its reconstruction at vertex " +
               std::to_string(v));
  return ball;
}

const char* wall_kind_name(WallKind kind) {
  switch (kind) {
    case WallKind::Subgroup: return "subgroup";
    case WallKind::Edge: return "edge";
    case WallKind::Abstract: return "abstract";
    case WallKind::Translate: return "translate";
  }
  return "";
}

WallKind wall_kind_from(const std::string& name, const std::string& where) {
  if (name == "subgroup") return WallKind::Subgroup;
  if (name == "edge") return WallKind::Edge;
  if (name == "abstract") return WallKind::Abstract;
  if (name == "translate") return WallKind::Translate;
  fail(ErrorKind::MalformedInput, where, "unknown wall kind '" + name + "'");
}

std::string sides_string(const Wall& wall) {
  std::string s(wall.side.size(), 'L');
  for (std::size_t v = 0; v < wall.side.size(); ++v)
    s[v] = wall.side[v] == 0 ? 'L' : wall.side[v] == 1 ? 'R' : 'O';
  return s;
}

std::vector<std::uint8_t> sides_from_string(const std::string& s,
                                            std::size_t vertex_count,
                                            const std::string& where) {
  if (s.size() != vertex_count)
    fail(ErrorKind::MalformedInput, where,
         "sides string has " + std::to_string(s.size()) + " characters for " +
             std::to_string(vertex_count) + " vertices");
  std::vector<std::uint8_t> side(vertex_count);
  for (std::size_t v = 0; v < vertex_count; ++v) {
    char c = s[v];
    if (c != 'L' && c != 'R' && c != 'O')
      fail(ErrorKind::MalformedInput, where,
           std::string("sides characters must be L, R or O, got '") + c + "'");
    side[v] = c == 'L' ? 0 : c == 'R' ? 1 : 2;
  }
  return side;
}

} // namespace

std::string ball_to_json(const CayleyBall& ball) {
  return dump(ball_to_jsonv(ball));
}

CayleyBall ball_from_json(const std::string& text, const Budgets& budgets) {
  const std::string where = "ball artifact";
  ordered_json j = parse_json(text, where);
  try {
    return ball_from_jsonv(j, where, budgets);
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    rethrow_malformed(where, e);
  }
}

std::string walls_to_json(const Wallspace& ws) {
  ordered_json j;
  j["format"] = "cubulate-walls";
  j["version"] = 1;
  j["ball"] = ball_to_jsonv(*ws.ball);
  j["margin"] = ws.margin;
  ordered_json walls = ordered_json::array();
  for (const Wall& w : ws.walls) {
    ordered_json wj;
    wj["kind"] = wall_kind_name(w.kind);
    wj["label"] = w.label;
    wj["sides"] = sides_string(w);
    walls.push_back(std::move(wj));
  }
  j["walls"] = std::move(walls);
  return dump(j);
}

WallspaceBundle walls_from_json(const std::string& text, const Budgets& budgets) {
  const std::string where = "walls artifact";
  ordered_json j = parse_json(text, where);
  try {
    expect_format(j, "cubulate-walls", where);
    WallspaceBundle bundle;
    bundle.ball = std::make_unique<CayleyBall>(
        ball_from_jsonv(j.at("ball"), where, budgets));
    bundle.space.ball = bundle.ball.get();
    bundle.space.margin = j.at("margin").get<int>();
    if (bundle.space.margin < 0 || bundle.space.margin > bundle.ball->radius())
      fail(ErrorKind::MalformedInput, where,
           "margin " + std::to_string(bundle.space.margin) +
               " does not fit radius " + std::to_string(bundle.ball->radius()));
    for (const auto& wj : j.at("walls")) {
      Wall w;
      w.kind = wall_kind_from(wj.at("kind").get<std::string>(), where);
      w.label = wj.at("label").get<std::string>();
      w.side = sides_from_string(wj.at("sides").get<std::string>(),
                                 bundle.ball->size(), where);
      bundle.space.walls.push_back(std::move(w));
    }
    return bundle;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    rethrow_malformed(where, e);
  }
}

std::string dual_to_json(const DualComplex& dual) {
  ordered_json j;
  j["format"] = "cubulate-dual";
  j["version"] = 1;
  j["wall_count"] = dual.wall_count;
  ordered_json vertices = ordered_json::array();
  for (std::uint64_t v : dual.vertices) vertices.push_back(std::to_string(v));
  j["vertices"] = std::move(vertices);
  ordered_json edges = ordered_json::array();
  for (const DualComplex::Edge& e : dual.edges)
    edges.push_back(ordered_json::array({e.a, e.b, e.wall}));
  j["edges"] = std::move(edges);
  ordered_json cubes = ordered_json::array();
  for (std::size_t k = 0; k < dual.higher.size(); ++k) {
    ordered_json level;
    level["dim"] = k + 2;
    ordered_json cells = ordered_json::array();
    for (const DualComplex::Cube& c : dual.higher[k])
      cells.push_back(ordered_json::array({ordered_json(c.base),
                                           ordered_json(std::to_string(c.walls))}));
    level["cells"] = std::move(cells);
    cubes.push_back(std::move(level));
  }
  j["cubes"] = std::move(cubes);
  ordered_json principal = ordered_json::array();
  for (std::uint32_t p : dual.principal)
    principal.push_back(p == 0xffffffffu ? -1 : static_cast<std::int64_t>(p));
  j["principal"] = std::move(principal);
  j["dropped_seeds"] = dual.dropped_seeds;
  return dump(j);
}

DualComplex dual_from_json(const std::string& text) {
  const std::string where = "dual artifact";
  ordered_json j = parse_json(text, where);
  try {
    expect_format(j, "cubulate-dual", where);
    DualComplex dual;
    dual.wall_count = j.at("wall_count").get<std::uint32_t>();
    for (const auto& v : j.at("vertices"))
      dual.vertices.push_back(std::stoull(v.get<std::string>()));
    for (const auto& e : j.at("edges"))
      dual.edges.push_back(DualComplex::Edge{e.at(0).get<std::uint32_t>(),
                                             e.at(1).get<std::uint32_t>(),
                                             e.at(2).get<std::uint32_t>()});
    for (const auto& level : j.at("cubes")) {
      std::size_t dim = level.at("dim").get<std::size_t>();
      if (dim < 2)
        fail(ErrorKind::MalformedInput, where, "cube level below dimension 2");
      if (dual.higher.size() < dim - 1) dual.higher.resize(dim - 1);
      for (const auto& c : level.at("cells"))
        dual.higher[dim - 2].push_back(DualComplex::Cube{
            c.at(0).get<std::uint32_t>(),
            std::stoull(c.at(1).get<std::string>())});
    }
    for (const auto& p : j.at("principal")) {
      std::int64_t v = p.get<std::int64_t>();
      dual.principal.push_back(v < 0 ? 0xffffffffu
                                     : static_cast<std::uint32_t>(v));
    }
    dual.dropped_seeds = j.at("dropped_seeds").get<std::uint32_t>();
    return dual;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    rethrow_malformed(where, e);
  }
}

std::string complex_to_text(const CubeComplex& cc) {
  std::ostringstream out;
  out << "version = 1\nvertices = " << cc.vertex_count << "\n";
  out << "\n[edges]\n";
  for (const CubeComplex::EdgeC& e : cc.edges)
    out << "e = " << e.v[0] << " " << e.v[1] << "\n";
  if (!cc.squares.empty()) {
    out << "\n[squares]\n";
    for (const CubeComplex::Square& s : cc.squares) {
      out << "s =";
      for (int k = 0; k < 4; ++k)
        out << " " << s.edge[k] << " " << (s.flip[k] ? 1 : 0);
      out << "  # corners";
      for (int k = 0; k < 4; ++k) out << " " << cc.square_corner(s, k);
      out << "\n";
    }
  }
  if (!cc.big_cubes.empty()) {
    out << "\n[cubes]\n";
    for (const CubeComplex::BigCube& b : cc.big_cubes) {
      out << "c =";
      for (std::uint32_t corner : b.corners) out << " " << corner;
      out << "\n";
    }
  }
  return out.str();
}

CubeComplex complex_from_text(const std::string& text) {
  KvFile kv = parse_kv(text, "cube complex");
  CubeComplex cc;

  for (const KvEntry& e : kv.sections[0].entries) {
    if (e.key == "version") {
      if (e.value != "1")
        fail(ErrorKind::MalformedInput, kv.where,
             "unsupported version " + e.value);
    } else if (e.key == "vertices") {
      cc.vertex_count =
          static_cast<std::uint32_t>(parse_int(e.value, kv.where));
    } else {
      fail(ErrorKind::MalformedInput, kv.where, "unknown key '" + e.key + "'");
    }
  }

  auto ints = [&](const KvEntry& e, std::size_t want) {
    std::vector<std::string> items = split_list(e.value);
    if (want && items.size() != want)
      fail(ErrorKind::MalformedInput,
           kv.where + ":" + std::to_string(e.line),
           "expected " + std::to_string(want) + " numbers, got " +
               std::to_string(items.size()));
    std::vector<std::uint32_t> out;
    for (const std::string& item : items) {
      int v = parse_int(item, kv.where + ":" + std::to_string(e.line));
      if (v < 0)
        fail(ErrorKind::MalformedInput,
             kv.where + ":" + std::to_string(e.line), "negative index");
      out.push_back(static_cast<std::uint32_t>(v));
    }
    return out;
  };

  for (const KvSection& sec : kv.sections) {
    if (sec.name.empty()) continue;
    if (sec.name == "edges") {
      for (const KvEntry& e : sec.entries) {
        if (e.key != "e")
          fail(ErrorKind::MalformedInput, kv.where,
               "[edges] entries are written as 'e = u v'");
        std::vector<std::uint32_t> v = ints(e, 2);
        cc.edges.push_back(CubeComplex::EdgeC{{v[0], v[1]}});
      }
    } else if (sec.name == "squares") {
      for (const KvEntry& e : sec.entries) {
        if (e.key != "s")
          fail(ErrorKind::MalformedInput, kv.where,
               "[squares] entries are written as 's = e0 f0 e1 f1 e2 f2 e3 f3'");
        std::vector<std::uint32_t> v = ints(e, 8);
        CubeComplex::Square s;
        for (int k = 0; k < 4; ++k) {
          s.edge[k] = v[2 * k];
          if (v[2 * k + 1] > 1)
            fail(ErrorKind::MalformedInput,
                 kv.where + ":" + std::to_string(e.line),
                 "flip flags must be 0 or 1");
          s.flip[k] = v[2 * k + 1] == 1;
        }
        cc.squares.push_back(s);
      }
    } else if (sec.name == "cubes") {
      for (const KvEntry& e : sec.entries) {
        if (e.key != "c")
          fail(ErrorKind::MalformedInput, kv.where,
               "[cubes] entries are written as 'c = corner corner ...'");
        std::vector<std::uint32_t> corners = ints(e, 0);
        std::uint8_t dim = 0;
        while ((std::size_t{1} << dim) < corners.size()) ++dim;
        if ((std::size_t{1} << dim) != corners.size() || dim < 3)
          fail(ErrorKind::MalformedInput,
               kv.where + ":" + std::to_string(e.line),
               "corner count must be 2^dim with dim >= 3, got " +
                   std::to_string(corners.size()));
        cc.big_cubes.push_back(CubeComplex::BigCube{dim, std::move(corners)});
      }
    } else {
      fail(ErrorKind::MalformedInput, kv.where,
           "unknown section [" + sec.name + "] (edges, squares, cubes)");
    }
  }
  return cc;
}

std::string dual_to_dot(const DualComplex& dual) {
  static const char* palette[12] = {
      "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#b8860b",
      "#a65628", "#f781bf", "#1b9e77", "#7570b3", "#66a61e", "#666666"};
  std::ostringstream out;
  out << "graph dual {\n  node [shape=point];\n";
  for (std::size_t v = 0; v < dual.vertices.size(); ++v) out << "  v" << v << ";\n";
  for (const DualComplex::Edge& e : dual.edges)
    out << "  v" << e.a << " -- v" << e.b << " [color=\""
        << palette[e.wall % 12] << "\", tooltip=\"wall " << e.wall << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string profile_to_json(const SeparationProfile& profile) {
  ordered_json j;
  j["format"] = "cubulate-profile";
  j["version"] = 1;
  j["max_distance"] = profile.max_distance;
  j["plausible"] = profile.plausible;
  j["warning"] = profile.warning;
  ordered_json rows = ordered_json::array();
  for (int n = 1; n <= profile.max_distance; ++n) {
    ordered_json row;
    row["distance"] = n;
    row["sphere"] = profile.sphere[n];
    row["min"] = profile.min[n];
    row["mean"] = profile.mean[n];
    row["max"] = profile.max[n];
    row["envelope"] = profile.envelope[n];
    rows.push_back(std::move(row));
  }
  j["distances"] = std::move(rows);
  return dump(j);
}

SeparationProfile profile_from_json(const std::string& text) {
  const std::string where = "profile report";
  ordered_json j = parse_json(text, where);
  try {
    expect_format(j, "cubulate-profile", where);
    SeparationProfile p;
    p.max_distance = j.at("max_distance").get<int>();
    p.plausible = j.at("plausible").get<bool>();
    p.warning = j.at("warning").get<std::string>();
    p.sphere.assign(p.max_distance + 1, 0);
    p.min.assign(p.max_distance + 1, 0);
    p.max.assign(p.max_distance + 1, 0);
    p.mean.assign(p.max_distance + 1, 0.0);
    p.envelope.assign(p.max_distance + 1, 0);
    for (const auto& row : j.at("distances")) {
      int n = row.at("distance").get<int>();
      if (n < 1 || n > p.max_distance)
        fail(ErrorKind::MalformedInput, where, "distance out of range");
      p.sphere[n] = row.at("sphere").get<std::uint32_t>();
      p.min[n] = row.at("min").get<std::uint32_t>();
      p.mean[n] = row.at("mean").get<double>();
      p.max[n] = row.at("max").get<std::uint32_t>();
      p.envelope[n] = row.at("envelope").get<std::uint32_t>();
    }
    return p;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    rethrow_malformed(where, e);
  }
}

std::string axis_to_json(const AxisReport& report, const Alphabet& alphabet) {
  ordered_json j;
  j["format"] = "cubulate-axis";
  j["version"] = 1;
  j["element"] = alphabet.print_word(report.element);
  j["verdict"] = report.verdict;
  j["torsion"] = report.torsion;
  if (report.verdict) {
    ordered_json w;
    w["wall"] = report.witness.wall;
    w["translate"] = alphabet.print_word(report.witness.translate);
    w["power"] = report.witness.power;
    w["sign"] = report.witness.sign;
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  j["chain_checked"] = report.chain_checked;
  j["note"] = report.note;
  return dump(j);
}

std::string selection_to_json(const SelectionResult& result,
                              const Alphabet& alphabet) {
  ordered_json j;
  j["format"] = "cubulate-selection";
  j["version"] = 1;
  ordered_json selected = ordered_json::array();
  for (const SelectedWall& s : result.selected) {
    ordered_json row;
    row["family"] = s.family;
    row["translate"] = alphabet.print_word(s.translate);
    row["label"] = s.wall.label;
    row["power"] = s.power;
    row["sign"] = s.sign;
    selected.push_back(std::move(row));
  }
  j["selected"] = std::move(selected);
  ordered_json coverage = ordered_json::array();
  for (const CoverageRow& r : result.coverage) {
    ordered_json row;
    row["element"] = alphabet.print_word(r.element);
    row["covered"] = r.covered;
    row["exempt"] = r.exempt;
    row["torsion"] = r.torsion;
    if (r.covered) {
      row["selected"] = r.selected;
      row["power"] = r.power;
      row["sign"] = r.sign;
    }
    if (!r.note.empty()) row["note"] = r.note;
    coverage.push_back(std::move(row));
  }
  j["coverage"] = std::move(coverage);
  ordered_json uncovered = ordered_json::array();
  for (const Word& w : result.uncovered) uncovered.push_back(alphabet.print_word(w));
  j["uncovered"] = std::move(uncovered);
  j["unseparated_pairs"] = result.unseparated_pairs;
  j["first_unseparated"] =
      result.first_unseparated
          ? ordered_json::array({result.first_unseparated->first,
                                 result.first_unseparated->second})
          : ordered_json(nullptr);
  return dump(j);
}

std::string induced_to_json(const InducedWallspace& induced) {
  ordered_json j;
  j["format"] = "cubulate-induced";
  j["version"] = 1;
  j["margin"] = induced.space.margin;
  j["walls"] = induced.space.walls.size();
  j["discarded_one_sided"] = induced.discarded_one_sided;
  ordered_json traces = ordered_json::array();
  for (std::size_t i = 0; i < induced.space.walls.size(); ++i) {
    ordered_json row;
    row["label"] = induced.space.walls[i].label;
    row["provenance"] = induced.provenance[i];
    traces.push_back(std::move(row));
  }
  j["traces"] = std::move(traces);
  return dump(j);
}

std::string npc_to_json(const NpcReport& report) {
  ordered_json j;
  j["format"] = "cubulate-npc";
  j["version"] = 1;
  j["npc"] = report.npc;
  j["simplicial"] = report.simplicial;
  j["flag"] = report.flag;
  if (!report.npc) j["vertex"] = report.vertex;
  j["detail"] = report.detail;
  return dump(j);
}

std::string special_to_json(const PathologyReport& report) {
  ordered_json j;
  j["format"] = "cubulate-special";
  j["version"] = 1;
  j["special"] = report.special;
  ordered_json details = ordered_json::array();
  for (const Hyperplane& h : report.details) {
    ordered_json row;
    row["dual_edges"] = h.dual_edges;
    row["embedded"] = h.embedded;
    row["two_sided"] = h.two_sided;
    row["self_osculating"] = h.self_osculating;
    row["indirectly_osculating"] = h.indirectly_osculating;
    row["inter_osculations"] = h.inter_osculations.size();
    details.push_back(std::move(row));
  }
  j["hyperplanes"] = std::move(details);
  j["findings"] = report.findings;
  j["notes"] = report.notes;
  return dump(j);
}

std::string median_to_json(const MedianReport& report) {
  ordered_json j;
  j["format"] = "cubulate-median";
  j["version"] = 1;
  j["is_median"] = report.is_median;
  j["connected"] = report.connected;
  if (!report.is_median && report.connected) {
    j["triple"] = ordered_json::array({report.x, report.y, report.z});
    j["median_count"] = report.median_count;
  }
  return dump(j);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    fail(ErrorKind::MalformedInput, path, "cannot open file for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::MalformedInput, path, "cannot open file for writing");
  out << content;
  if (!out) fail(ErrorKind::MalformedInput, path, "write failed");
}

} // namespace cubulate
