#include "cubulate/cube_complex.hpp"

#include "cubulate/errors.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <string>
#include <unordered_map>

namespace cubulate {

int CubeComplex::dimension() const {
  int dim = vertex_count ? 0 : -1;
  if (!edges.empty()) dim = 1;
  if (!squares.empty()) dim = 2;
  for (const BigCube& c : big_cubes) dim = std::max(dim, static_cast<int>(c.dim));
  return dim;
}

std::size_t CubeComplex::cube_count(int dim) const {
  if (dim == 0) return vertex_count;
  if (dim == 1) return edges.size();
  if (dim == 2) return squares.size();
  std::size_t n = 0;
  for (const BigCube& c : big_cubes) n += c.dim == dim;
  return n;
}

std::vector<std::vector<std::uint32_t>> CubeComplex::adjacency() const {
  std::vector<std::set<std::uint32_t>> nb(vertex_count);
  for (const EdgeC& e : edges)
    if (e.v[0] != e.v[1]) {
      nb[e.v[0]].insert(e.v[1]);
      nb[e.v[1]].insert(e.v[0]);
    }
  std::vector<std::vector<std::uint32_t>> adj(vertex_count);
  for (std::uint32_t v = 0; v < vertex_count; ++v)
    adj[v].assign(nb[v].begin(), nb[v].end());
  return adj;
}

namespace {

// canonical form of a corner 4-cycle under rotation and reflection
std::array<std::uint32_t, 4> canonical_quad(std::array<std::uint32_t, 4> q) {
  std::array<std::uint32_t, 4> best = q;
  for (int refl = 0; refl < 2; ++refl) {
    for (int rot = 0; rot < 4; ++rot) {
      std::array<std::uint32_t, 4> cur{q[rot], q[(rot + 1) % 4], q[(rot + 2) % 4],
                                       q[(rot + 3) % 4]};
      best = std::min(best, cur);
    }
    std::reverse(q.begin(), q.end());
  }
  return best;
}

// the unique edge between two distinct vertices; Structural errors otherwise
std::uint32_t unique_edge(std::uint32_t a, std::uint32_t b,
                          const std::multimap<std::pair<std::uint32_t, std::uint32_t>,
                                              std::uint32_t>& by_ends) {
  auto key = std::minmax(a, b);
  auto [lo, hi] = by_ends.equal_range({key.first, key.second});
  if (lo == hi)
    fail(ErrorKind::Structural, "cube-complex",
         "big cube corner pair " + std::to_string(a) + "," + std::to_string(b) +
             " spans no edge");
  if (std::next(lo) != hi)
    fail(ErrorKind::Structural, "cube-complex",
         "big cube corner pair " + std::to_string(a) + "," + std::to_string(b) +
             " spans more than one edge");
  return lo->second;
}

} // namespace

void validate(const CubeComplex& cc) {
  for (const CubeComplex::EdgeC& e : cc.edges)
    if (e.v[0] >= cc.vertex_count || e.v[1] >= cc.vertex_count)
      fail(ErrorKind::Structural, "cube-complex", "edge endpoint out of range");
  for (const CubeComplex::Square& s : cc.squares) {
    for (int k = 0; k < 4; ++k)
      if (s.edge[k] >= cc.edges.size())
        fail(ErrorKind::Structural, "cube-complex", "square edge out of range");
    for (int k = 0; k < 4; ++k)
      if (cc.edges[s.edge[k]].target(s.flip[k]) !=
          cc.edges[s.edge[(k + 1) % 4]].source(s.flip[(k + 1) % 4]))
        fail(ErrorKind::Structural, "cube-complex",
             "square boundary does not close up");
  }
  if (cc.big_cubes.empty()) return;

  std::multimap<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> by_ends;
  for (std::uint32_t e = 0; e < cc.edges.size(); ++e) {
    auto key = std::minmax(cc.edges[e].v[0], cc.edges[e].v[1]);
    by_ends.insert({{key.first, key.second}, e});
  }
  std::set<std::array<std::uint32_t, 4>> square_cycles;
  for (const CubeComplex::Square& s : cc.squares)
    square_cycles.insert(canonical_quad({cc.square_corner(s, 0),
                                         cc.square_corner(s, 1),
                                         cc.square_corner(s, 2),
                                         cc.square_corner(s, 3)}));
  std::set<std::vector<std::uint32_t>> cube_sets;
  for (const CubeComplex::BigCube& c : cc.big_cubes) {
    std::vector<std::uint32_t> sorted = c.corners;
    std::sort(sorted.begin(), sorted.end());
    cube_sets.insert(std::move(sorted));
  }

  for (const CubeComplex::BigCube& c : cc.big_cubes) {
    if (c.dim < 3 || c.dim > 13)
      fail(ErrorKind::Structural, "cube-complex", "big cube dimension out of range");
    if (c.corners.size() != (std::size_t{1} << c.dim))
      fail(ErrorKind::Structural, "cube-complex", "big cube corner count mismatch");
    for (std::uint32_t v : c.corners)
      if (v >= cc.vertex_count)
        fail(ErrorKind::Structural, "cube-complex", "big cube corner out of range");
    const std::uint32_t n = static_cast<std::uint32_t>(c.corners.size());
    for (std::uint32_t idx = 0; idx < n; ++idx)
      for (int i = 0; i < c.dim; ++i) {
        if (idx & (1u << i)) continue;
        std::uint32_t a = c.corners[idx];
        std::uint32_t b = c.corners[idx | (1u << i)];
        if (a == b)
          fail(ErrorKind::Structural, "cube-complex",
               "big cube identifies adjacent corners");
        unique_edge(a, b, by_ends);
        for (int j = i + 1; j < c.dim; ++j) {
          if (idx & (1u << j)) continue;
          std::array<std::uint32_t, 4> quad{
              c.corners[idx], c.corners[idx | (1u << i)],
              c.corners[idx | (1u << i) | (1u << j)], c.corners[idx | (1u << j)]};
          if (!square_cycles.count(canonical_quad(quad)))
            fail(ErrorKind::Structural, "cube-complex",
                 "big cube face is missing from the squares");
        }
      }
    if (c.dim > 3) {
      for (int i = 0; i < c.dim; ++i)
        for (int half = 0; half < 2; ++half) {
          std::vector<std::uint32_t> face;
          for (std::uint32_t idx = 0; idx < n; ++idx)
            if (((idx >> i) & 1u) == static_cast<std::uint32_t>(half))
              face.push_back(c.corners[idx]);
          std::sort(face.begin(), face.end());
          if (!cube_sets.count(face))
            fail(ErrorKind::Structural, "cube-complex",
                 "big cube face is missing from the lower cubes");
        }
    }
  }
}

CubeComplex from_dual(const DualComplex& dual) {
  CubeComplex cc;
  cc.vertex_count = static_cast<std::uint32_t>(dual.vertices.size());
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> edge_id;
  for (std::uint32_t e = 0; e < dual.edges.size(); ++e) {
    cc.edges.push_back({{dual.edges[e].a, dual.edges[e].b}});
    edge_id[{dual.edges[e].a, dual.edges[e].b}] = e;
  }
  std::unordered_map<std::uint64_t, std::uint32_t> vert;
  for (std::uint32_t i = 0; i < dual.vertices.size(); ++i)
    vert[dual.vertices[i]] = i;
  auto vat = [&](std::uint64_t mask) { return vert.at(mask); };
  auto eat = [&](std::uint32_t a, std::uint32_t b) {
    auto key = std::minmax(a, b);
    return edge_id.at({key.first, key.second});
  };

  if (!dual.higher.empty())
    for (const DualComplex::Cube& sq : dual.higher[0]) {
      std::uint64_t base = dual.vertices[sq.base];
      std::uint64_t b1 = sq.walls & (~sq.walls + 1);
      std::uint64_t b2 = sq.walls ^ b1;
      std::uint32_t c00 = vat(base), c10 = vat(base | b1);
      std::uint32_t c11 = vat(base | b1 | b2), c01 = vat(base | b2);
      CubeComplex::Square s;
      std::uint32_t cyc[4] = {c00, c10, c11, c01};
      for (int k = 0; k < 4; ++k) {
        s.edge[k] = eat(cyc[k], cyc[(k + 1) % 4]);
        s.flip[k] = cc.edges[s.edge[k]].v[0] != cyc[k];
      }
      cc.squares.push_back(s);
    }

  for (std::size_t level = 1; level < dual.higher.size(); ++level)
    for (const DualComplex::Cube& cube : dual.higher[level]) {
      CubeComplex::BigCube big;
      big.dim = static_cast<std::uint8_t>(level + 2);
      std::vector<std::uint64_t> bits;
      for (std::uint32_t w = 0; w < 64; ++w)
        if (cube.walls & (1ull << w)) bits.push_back(1ull << w);
      std::uint64_t base = dual.vertices[cube.base];
      for (std::uint32_t idx = 0; idx < (1u << big.dim); ++idx) {
        std::uint64_t mask = base;
        for (int i = 0; i < big.dim; ++i)
          if (idx & (1u << i)) mask |= bits[i];
        big.corners.push_back(vat(mask));
      }
      cc.big_cubes.push_back(std::move(big));
    }
  return cc;
}

namespace {

void bron_kerbosch(std::vector<std::uint32_t>& r, std::vector<std::uint32_t> p,
                   std::vector<std::uint32_t> x,
                   const std::vector<std::vector<std::uint8_t>>& adj,
                   std::vector<std::vector<std::uint32_t>>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  std::uint32_t pivot = p.empty() ? x[0] : p[0];
  std::vector<std::uint32_t> candidates;
  for (std::uint32_t v : p)
    if (!adj[pivot][v]) candidates.push_back(v);
  for (std::uint32_t v : candidates) {
    std::vector<std::uint32_t> p2, x2;
    for (std::uint32_t u : p)
      if (adj[v][u]) p2.push_back(u);
    for (std::uint32_t u : x)
      if (adj[v][u]) x2.push_back(u);
    r.push_back(v);
    bron_kerbosch(r, std::move(p2), std::move(x2), adj, out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

} // namespace

NpcReport check_npc(const CubeComplex& cc, const Budgets& budgets) {
  validate(cc);
  NpcReport report;

  std::multimap<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> by_ends;
  for (std::uint32_t e = 0; e < cc.edges.size(); ++e) {
    auto key = std::minmax(cc.edges[e].v[0], cc.edges[e].v[1]);
    by_ends.insert({{key.first, key.second}, e});
  }

  for (std::uint32_t v = 0; v < cc.vertex_count; ++v) {
    std::vector<EdgeEnd> ends;
    for (std::uint32_t e = 0; e < cc.edges.size(); ++e)
      for (std::uint8_t end = 0; end < 2; ++end)
        if (cc.edges[e].v[end] == v) ends.push_back({e, end});
    if (ends.empty()) continue;
    if (ends.size() > 256)
      fail(ErrorKind::Size, "npc",
           "vertex " + std::to_string(v) + " has " + std::to_string(ends.size()) +
               " edge ends; link too large");
    std::map<EdgeEnd, std::uint32_t> local;
    for (std::uint32_t i = 0; i < ends.size(); ++i) local[ends[i]] = i;

    // 1-simplices from square corners
    std::map<std::vector<std::uint32_t>, std::uint32_t> simplex_count;
    for (const CubeComplex::Square& s : cc.squares)
      for (int k = 0; k < 4; ++k) {
        if (cc.square_corner(s, k) != v) continue;
        EdgeEnd out{s.edge[k], static_cast<std::uint8_t>(s.flip[k] ? 1 : 0)};
        int back = (k + 3) % 4;
        EdgeEnd in{s.edge[back], static_cast<std::uint8_t>(s.flip[back] ? 0 : 1)};
        if (out == in) {
          report.npc = report.simplicial = false;
          report.vertex = v;
          report.detail = "square corner collapses to one edge end";
          return report;
        }
        std::vector<std::uint32_t> sx{local.at(out), local.at(in)};
        std::sort(sx.begin(), sx.end());
        ++simplex_count[sx];
      }

    // higher simplices from big cube corners
    for (const CubeComplex::BigCube& c : cc.big_cubes) {
      const std::uint32_t n = static_cast<std::uint32_t>(c.corners.size());
      for (std::uint32_t idx = 0; idx < n; ++idx) {
        if (c.corners[idx] != v) continue;
        std::vector<std::uint32_t> sx;
        for (int i = 0; i < c.dim; ++i) {
          std::uint32_t other = c.corners[idx ^ (1u << i)];
          std::uint32_t e = unique_edge(v, other, by_ends);
          std::uint8_t end = cc.edges[e].v[0] == v ? 0 : 1;
          sx.push_back(local.at({e, end}));
        }
        std::sort(sx.begin(), sx.end());
        if (std::adjacent_find(sx.begin(), sx.end()) != sx.end()) {
          report.npc = report.simplicial = false;
          report.vertex = v;
          report.detail = "big cube corner repeats an edge end";
          return report;
        }
        ++simplex_count[sx];
      }
    }

    for (const auto& [sx, count] : simplex_count)
      if (count > 1) {
        report.npc = report.simplicial = false;
        report.vertex = v;
        report.detail = "link simplex on " + std::to_string(sx.size()) +
                        " vertices appears " + std::to_string(count) + " times";
        return report;
      }

    // flag condition: every maximal clique of the link graph is a simplex
    std::vector<std::vector<std::uint8_t>> adj(
        ends.size(), std::vector<std::uint8_t>(ends.size(), 0));
    for (const auto& [sx, count] : simplex_count)
      for (std::size_t i = 0; i < sx.size(); ++i)
        for (std::size_t j = i + 1; j < sx.size(); ++j)
          adj[sx[i]][sx[j]] = adj[sx[j]][sx[i]] = 1;
    std::vector<std::uint32_t> all(ends.size());
    for (std::uint32_t i = 0; i < ends.size(); ++i) all[i] = i;
    std::vector<std::vector<std::uint32_t>> cliques;
    std::vector<std::uint32_t> r;
    bron_kerbosch(r, all, {}, adj, cliques);
    for (std::vector<std::uint32_t>& clique : cliques) {
      if (clique.size() < 3) continue;
      if (clique.size() > budgets.max_cube_dim + 1)
        fail(ErrorKind::Size, "npc",
             "link clique larger than the cube dimension budget");
      std::sort(clique.begin(), clique.end());
      if (!simplex_count.count(clique)) {
        report.npc = report.flag = false;
        report.vertex = v;
        report.detail = "empty " + std::to_string(clique.size() - 1) +
                        "-simplex: " + std::to_string(clique.size()) +
                        " pairwise joined edge ends span no cube corner";
        return report;
      }
    }
  }
  return report;
}

} // namespace cubulate
