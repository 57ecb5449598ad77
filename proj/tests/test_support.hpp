#pragma once

// Oracles shared by the test suites. Everything here is deliberately
// brute-force and independent of the library's fast paths.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "quadcontract/embedding.hpp"

namespace qc_test {

using quadcontract::PlaneGraph;
using quadcontract::PlaneTriangulation;
using quadcontract::Rotation;
using quadcontract::Vertex;

// Same cyclic sequence up to rotation and reflection.
inline bool cyclic_equal(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  if (a.size() != b.size()) return false;
  const int n = static_cast<int>(a.size());
  for (int dir : {1, -1}) {
    for (int shift = 0; shift < n; ++shift) {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i)
        if (a[i] != b[((shift + dir * i) % n + n) % n]) ok = false;
      if (ok) return true;
    }
  }
  return false;
}

// No chord between non-consecutive cycle vertices.
inline bool is_induced_cycle(const PlaneGraph& g, const std::vector<Vertex>& cycle) {
  const int n = static_cast<int>(cycle.size());
  for (int i = 0; i < n; ++i) {
    if (!g.has_edge(cycle[i], cycle[(i + 1) % n])) return false;
    for (int j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (g.has_edge(cycle[i], cycle[j])) return false;
    }
  }
  return true;
}

// Abstract-graph isomorphism by backtracking over vertex bijections with
// degree pruning; independent of canonical codes.
inline bool brute_force_isomorphic(const PlaneGraph& a, const PlaneGraph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  const int n = a.order();
  std::vector<std::vector<char>> am(n, std::vector<char>(n, 0)), bm = am;
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : a.rotation(v)) am[v][w] = 1;
    for (Vertex w : b.rotation(v)) bm[v][w] = 1;
  }
  std::vector<int> da(n), db(n);
  for (Vertex v = 0; v < n; ++v) da[v] = a.degree(v), db[v] = b.degree(v);
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || da[v] != db[w]) continue;
      bool ok = true;
      for (int p = 0; p < v && ok; ++p)
        if (am[v][p] != bm[w][image[p]]) ok = false;
      if (!ok) continue;
      image[v] = w;
      used[w] = 1;
      if (self(self, v + 1)) return true;
      used[w] = 0;
    }
    return false;
  };
  return rec(rec, 0);
}

// Random relabeling of a triangulation (rotation lists permuted and renamed).
inline PlaneTriangulation relabel(const PlaneTriangulation& g, std::mt19937& rng) {
  const int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Rotation rot(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.rotation(v)) rot[perm[v]].push_back(perm[w]);
    // also rotate the cyclic list by a random offset
    auto& r = rot[perm[v]];
    std::rotate(r.begin(), r.begin() + (rng() % r.size()), r.end());
  }
  return PlaneTriangulation::from_rotation_system(rot);
}

inline PlaneTriangulation mirror(const PlaneTriangulation& g) {
  Rotation rot = g.rotation_system();
  for (auto& r : rot) std::reverse(r.begin(), r.end());
  return PlaneTriangulation::from_rotation_system(rot);
}

// All triangles of the underlying abstract graph (not only faces).
inline int count_triangles(const PlaneGraph& g) {
  int count = 0;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v : g.rotation(u)) {
      if (v <= u) continue;
      for (Vertex w : g.rotation(v)) {
        if (w <= v) continue;
        if (g.has_edge(u, w)) ++count;
      }
    }
  return count;
}

}  // namespace qc_test
