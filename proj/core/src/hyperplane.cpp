#include "cubulate/hyperplane.hpp"

#include "cubulate/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace cubulate {

namespace {

struct Dsu {
  std::vector<std::uint32_t> parent;
  explicit Dsu(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<std::uint32_t>(i);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

} // namespace

std::vector<Hyperplane> hyperplanes(const CubeComplex& cc) {
  validate(cc);
  const std::uint32_t ne = static_cast<std::uint32_t>(cc.edges.size());

  Dsu edge_dsu(ne);
  Dsu directed(2 * std::size_t{ne});
  for (const CubeComplex::Square& s : cc.squares)
    for (int axis = 0; axis < 2; ++axis) {
      std::uint32_t ea = s.edge[axis], eb = s.edge[axis + 2];
      bool fa = s.flip[axis], fb = s.flip[axis + 2];
      edge_dsu.join(ea, eb);
      std::uint32_t t = (fa ^ fb) ? 0u : 1u;
      directed.join(2 * ea + 0, 2 * eb + (0 ^ t));
      directed.join(2 * ea + 1, 2 * eb + (1 ^ t));
    }

  std::map<std::uint32_t, std::uint32_t> class_of_root;
  std::vector<std::uint32_t> cls(ne);
  std::vector<Hyperplane> hp;
  for (std::uint32_t e = 0; e < ne; ++e) {
    std::uint32_t root = edge_dsu.find(e);
    auto it = class_of_root.find(root);
    if (it == class_of_root.end()) {
      it = class_of_root.insert({root, static_cast<std::uint32_t>(hp.size())}).first;
      hp.emplace_back();
    }
    cls[e] = it->second;
    hp[cls[e]].dual_edges.push_back(e);
  }

  for (std::uint32_t s = 0; s < cc.squares.size(); ++s)
    for (int axis = 0; axis < 2; ++axis) {
      Hyperplane& h = hp[cls[cc.squares[s].edge[axis]]];
      h.square_midcubes.push_back({s, axis});
    }
  for (std::uint32_t h = 0; h < hp.size(); ++h)
    for (std::size_t i = 1; i < hp[h].square_midcubes.size(); ++i)
      if (hp[h].embedded &&
          hp[h].square_midcubes[i].first == hp[h].square_midcubes[i - 1].first) {
        hp[h].embedded = false;
        hp[h].self_crossing_square = hp[h].square_midcubes[i].first;
      }

  if (!cc.big_cubes.empty()) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> by_ends;
    for (std::uint32_t e = 0; e < ne; ++e) {
      auto key = std::minmax(cc.edges[e].v[0], cc.edges[e].v[1]);
      by_ends[{key.first, key.second}] = e;
    }
    for (std::uint32_t c = 0; c < cc.big_cubes.size(); ++c) {
      const CubeComplex::BigCube& cube = cc.big_cubes[c];
      for (int i = 0; i < cube.dim; ++i) {
        auto key = std::minmax(cube.corners[0], cube.corners[1u << i]);
        std::uint32_t e = by_ends.at({key.first, key.second});
        hp[cls[e]].cube_midcubes.push_back({c, i});
      }
    }
  }

  for (Hyperplane& h : hp) {
    std::uint32_t e = h.dual_edges[0];
    h.two_sided = directed.find(2 * e + 0) != directed.find(2 * e + 1);
  }

  std::set<std::pair<EdgeEnd, EdgeEnd>> corner_pairs;
  for (const CubeComplex::Square& s : cc.squares)
    for (int k = 0; k < 4; ++k) {
      EdgeEnd out{s.edge[k], static_cast<std::uint8_t>(s.flip[k] ? 1 : 0)};
      int back = (k + 3) % 4;
      EdgeEnd in{s.edge[back], static_cast<std::uint8_t>(s.flip[back] ? 0 : 1)};
      corner_pairs.insert(std::minmax(out, in));
    }

  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> cross_square;
  for (std::uint32_t s = 0; s < cc.squares.size(); ++s) {
    std::uint32_t a = cls[cc.squares[s].edge[0]], b = cls[cc.squares[s].edge[1]];
    if (a == b) continue;
    auto key = std::minmax(a, b);
    cross_square.insert({{key.first, key.second}, s});
  }

  std::vector<std::vector<EdgeEnd>> at_vertex(cc.vertex_count);
  for (std::uint32_t e = 0; e < ne; ++e)
    for (std::uint8_t end = 0; end < 2; ++end)
      at_vertex[cc.edges[e].v[end]].push_back({e, end});

  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> osc_vertex;
  for (std::uint32_t v = 0; v < cc.vertex_count; ++v) {
    const std::vector<EdgeEnd>& ends = at_vertex[v];
    for (std::size_t i = 0; i < ends.size(); ++i)
      for (std::size_t j = i + 1; j < ends.size(); ++j) {
        if (ends[i].e == ends[j].e) continue;
        if (corner_pairs.count(std::minmax(ends[i], ends[j]))) continue;
        std::uint32_t a = cls[ends[i].e], b = cls[ends[j].e];
        if (!hp[a].two_sided || !hp[b].two_sided) continue;
        if (a == b) {
          Hyperplane& h = hp[a];
          bool direct = directed.find(2 * ends[i].e + ends[i].end) ==
                        directed.find(2 * ends[j].e + ends[j].end);
          bool fresh = direct ? !h.self_osculating : !h.indirectly_osculating;
          if (fresh) {
            (direct ? h.self_osculating : h.indirectly_osculating) = true;
            if (direct || !h.self_osculating) {
              h.osculation_vertex = v;
              h.osculation_edges[0] = ends[i].e;
              h.osculation_edges[1] = ends[j].e;
            }
          }
        } else {
          auto key = std::minmax(a, b);
          osc_vertex.insert({{key.first, key.second}, v});
        }
      }
  }

  for (const auto& [pair, v] : osc_vertex) {
    auto it = cross_square.find(pair);
    if (it == cross_square.end()) continue;
    hp[pair.first].inter_osculations.push_back({pair.second, it->second, v});
    hp[pair.second].inter_osculations.push_back({pair.first, it->second, v});
  }

  return hp;
}

PathologyReport check_special(const CubeComplex& cc) {
  PathologyReport report;
  report.details = hyperplanes(cc);
  bool clean = true;
  for (std::uint32_t h = 0; h < report.details.size(); ++h) {
    const Hyperplane& hp = report.details[h];
    std::string name = "hyperplane " + std::to_string(h);
    if (!hp.embedded) {
      clean = false;
      report.findings.push_back(name + " self-crosses in square " +
                                std::to_string(hp.self_crossing_square));
    }
    if (!hp.two_sided) {
      clean = false;
      report.findings.push_back(name + " is one-sided (dual edge " +
                                std::to_string(hp.dual_edges[0]) + ")");
    }
    if (hp.self_osculating) {
      clean = false;
      report.findings.push_back(
          name + " directly self-osculates at vertex " +
          std::to_string(hp.osculation_vertex) + " (edges " +
          std::to_string(hp.osculation_edges[0]) + ", " +
          std::to_string(hp.osculation_edges[1]) + ")");
    } else if (hp.indirectly_osculating) {
      report.notes.push_back(name + " indirectly self-osculates at vertex " +
                             std::to_string(hp.osculation_vertex));
    }
    for (const Hyperplane::InterOsculation& io : hp.inter_osculations)
      if (io.partner > h) {
        clean = false;
        report.findings.push_back(
            name + " and hyperplane " + std::to_string(io.partner) +
            " inter-osculate: cross in square " +
            std::to_string(io.crossing_square) + ", osculate at vertex " +
            std::to_string(io.vertex));
      }
  }
  report.special = clean;
  return report;
}

} // namespace cubulate
