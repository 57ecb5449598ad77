#include "quadcontract/connectivity.hpp"

#include <algorithm>
#include <cassert>
#include <queue>

namespace quadcontract {

namespace {

// Max number of internally vertex-disjoint s-t paths, capped. Standard
// vertex-split network (in/out nodes, unit internal capacity) with BFS
// augmentation; s and t keep infinite internal capacity.
int max_vertex_disjoint_paths(const Rotation& adj, int s, int t, int cap) {
  const int n = static_cast<int>(adj.size());
  const int N = 2 * n;  // node 2v = in, 2v+1 = out
  const int INF = 1 << 20;
  std::vector<std::vector<int>> capacity(N, std::vector<int>(N, 0));
  for (int v = 0; v < n; ++v)
    capacity[2 * v][2 * v + 1] = (v == s || v == t) ? INF : 1;
  for (int v = 0; v < n; ++v)
    for (int w : adj[v]) capacity[2 * v + 1][2 * w] = INF;

  const int src = 2 * s + 1, dst = 2 * t;
  int flow = 0;
  std::vector<int> parent(N);
  while (flow < cap) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[src] = src;
    std::queue<int> q;
    q.push(src);
    while (!q.empty() && parent[dst] < 0) {
      int x = q.front();
      q.pop();
      for (int y = 0; y < N; ++y)
        if (parent[y] < 0 && capacity[x][y] > 0) {
          parent[y] = x;
          q.push(y);
        }
    }
    if (parent[dst] < 0) break;
    for (int y = dst; y != src; y = parent[y]) {
      capacity[parent[y]][y] -= 1;
      capacity[y][parent[y]] += 1;
    }
    ++flow;
  }
  return flow;
}

bool complete_graph(const Rotation& adj) {
  const int n = static_cast<int>(adj.size());
  for (const auto& r : adj)
    if (static_cast<int>(r.size()) != n - 1) return false;
  return true;
}

bool adjacent(const Rotation& adj, int u, int v) {
  return std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end();
}

}  // namespace

int vertex_connectivity(const Rotation& adj, int cap) {
  const int n = static_cast<int>(adj.size());
  assert(cap >= 1);
  if (n <= 1) return 0;
  if (complete_graph(adj)) return std::min(n - 1, cap);

  int v0 = 0;
  for (int v = 1; v < n; ++v)
    if (adj[v].size() < adj[v0].size()) v0 = v;

  int best = std::min(n - 1, cap);
  auto probe = [&](int s, int t) {
    best = std::min(best, max_vertex_disjoint_paths(adj, s, t, best));
  };
  for (int w = 0; w < n; ++w)
    if (w != v0 && !adjacent(adj, v0, w)) probe(v0, w);
  for (std::size_t i = 0; i < adj[v0].size(); ++i)
    for (std::size_t j = i + 1; j < adj[v0].size(); ++j) {
      int u1 = adj[v0][i], u2 = adj[v0][j];
      if (!adjacent(adj, u1, u2)) probe(u1, u2);
    }
  return best;
}

int vertex_connectivity(const PlaneGraph& g, int cap) {
  return vertex_connectivity(g.rotation_system(), cap);
}

bool is_k_connected(const Rotation& adj, int k) {
  return vertex_connectivity(adj, k) >= k;
}

bool is_k_connected(const PlaneGraph& g, int k) {
  return vertex_connectivity(g.rotation_system(), k) >= k;
}

bool is_contractible_oracle(const PlaneTriangulation& g, EdgeRef e, int k) {
  if (!g.has_edge(e.u, e.v))
    throw NotAnEdge("no edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
  // abstract contraction: merge v into u, drop parallels, renumber densely
  const int n = g.order();
  const Vertex a = e.u, b = e.v;
  Rotation contracted(n - 1);
  auto remap = [&](Vertex w) {
    if (w == b) w = a;
    return w > b ? w - 1 : w;
  };
  for (Vertex v = 0; v < n; ++v) {
    Vertex mv = remap(v);
    for (Vertex w : g.rotation(v)) {
      if (v == a && w == b) continue;
      if (v == b && w == a) continue;
      Vertex mw = remap(w);
      auto& row = contracted[mv];
      if (std::find(row.begin(), row.end(), mw) == row.end()) row.push_back(mw);
    }
  }
  return vertex_connectivity(contracted, k) >= k;
}

namespace {

// Components of g with `removed` deleted, sorted by smallest member.
std::vector<std::vector<Vertex>> components_without(const PlaneTriangulation& g,
                                                    const std::array<Vertex, 4>& removed) {
  const int n = g.order();
  std::vector<char> blocked(n, 0), reached(n, 0);
  for (Vertex r : removed) blocked[r] = 1;
  std::vector<std::vector<Vertex>> comps;
  for (Vertex v0 = 0; v0 < n; ++v0) {
    if (blocked[v0] || reached[v0]) continue;
    std::vector<Vertex> comp, stack{v0};
    reached[v0] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.rotation(v))
        if (!blocked[w] && !reached[w]) {
          reached[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::optional<SeparatingCycle4> make_separating(const PlaneTriangulation& g, Vertex a,
                                                Vertex b, Vertex c, Vertex d) {
  auto comps = components_without(g, {a, b, c, d});
  if (comps.size() < 2) return std::nullopt;
  SeparatingCycle4 out;
  out.vertices = {a, b, c, d};
  out.side_a = std::move(comps[0]);
  for (std::size_t i = 1; i < comps.size(); ++i)
    out.side_b.insert(out.side_b.end(), comps[i].begin(), comps[i].end());
  std::sort(out.side_b.begin(), out.side_b.end());
  return out;
}

}  // namespace

std::optional<SeparatingCycle4> in_separating_4cycle(const PlaneTriangulation& g, EdgeRef e) {
  if (!g.has_edge(e.u, e.v))
    throw NotAnEdge("no edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
  const Vertex u = e.u, v = e.v;
  // every 4-cycle through uv reads u - v - a - b - u with a in N(v), b in N(u)
  std::vector<Vertex> nv = g.rotation(v), nu = g.rotation(u);
  std::sort(nv.begin(), nv.end());
  std::sort(nu.begin(), nu.end());
  for (Vertex a : nv) {
    if (a == u) continue;
    for (Vertex b : nu) {
      if (b == v || b == a) continue;
      if (!g.has_edge(a, b)) continue;
      if (auto cyc = make_separating(g, u, v, a, b)) return cyc;
    }
  }
  return std::nullopt;
}

std::vector<EdgeRef> contractible_edges(const PlaneTriangulation& g, int k) {
  std::vector<EdgeRef> out;
  for (EdgeRef e : g.edges()) {
    bool contractible = (k == 4) ? !in_separating_4cycle(g, e).has_value()
                                 : is_contractible_oracle(g, e, k);
    if (contractible) out.push_back(e);
  }
  return out;
}

namespace {

bool in_sorted(const std::vector<EdgeRef>& edges, EdgeRef e) {
  return std::binary_search(edges.begin(), edges.end(), e);
}

}  // namespace

WeightBreakdown weight(const PlaneTriangulation& g, Vertex v,
                       const std::vector<EdgeRef>& e4_sorted) {
  if (g.degree(v) < 5)
    throw DegreeTooSmall("weight needs deg(v) >= 5, vertex " + std::to_string(v));
  WeightBreakdown wb;
  for (Vertex u : g.rotation(v)) {
    if (!in_sorted(e4_sorted, EdgeRef(v, u))) continue;
    if (g.degree(u) >= 5)
      ++wb.w1;
    else if (g.degree(u) == 4)
      ++wb.w2;
  }
  const auto& nbrs = g.rotation(v);
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      Vertex u = nbrs[i], u2 = nbrs[j];
      if (g.degree(u) != 4 || g.degree(u2) != 4) continue;
      if (!g.has_edge(u, u2)) continue;
      if (in_sorted(e4_sorted, EdgeRef(u, u2))) ++wb.w3;
    }
  return wb;
}

WeightBreakdown weight(const PlaneTriangulation& g, Vertex v) {
  return weight(g, v, contractible_edges(g, 4));
}

std::vector<EdgeRef> f_set_edges(const PlaneTriangulation& g, Vertex v,
                                 const std::vector<EdgeRef>& e4_sorted) {
  std::vector<EdgeRef> out;
  for (Vertex u : g.rotation(v))
    if (in_sorted(e4_sorted, EdgeRef(v, u))) out.emplace_back(v, u);
  const auto& nbrs = g.rotation(v);
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      Vertex u = nbrs[i], u2 = nbrs[j];
      if (g.degree(u) != 4 || g.degree(u2) != 4) continue;
      if (!g.has_edge(u, u2)) continue;
      if (in_sorted(e4_sorted, EdgeRef(u, u2))) out.emplace_back(u, u2);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<JumpCycle> k_jump_cycles(const PlaneTriangulation& g, Vertex v) {
  const int p = g.degree(v);
  if (p < 5) throw DegreeTooSmall("jump cycles need deg(v) >= 5, vertex " + std::to_string(v));
  const auto& l = g.rotation(v);
  std::vector<char> in_closed_nbhd(g.order(), 0);
  in_closed_nbhd[v] = 1;
  for (Vertex w : l) in_closed_nbhd[w] = 1;

  std::vector<JumpCycle> out;
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      int gap_fwd = j - i - 1;           // link vertices strictly between, i -> j
      int gap_back = p - (j - i) - 1;    // and j -> i
      if (gap_fwd < 1 || gap_back < 1) continue;
      Vertex li = l[i], lj = l[j];
      std::vector<Vertex> ys;
      for (Vertex y : g.rotation(li))
        if (!in_closed_nbhd[y] && g.has_edge(y, lj)) ys.push_back(y);
      std::sort(ys.begin(), ys.end());
      for (Vertex y : ys) {
        auto cyc = make_separating(g, v, li, y, lj);
        if (!cyc) continue;
        auto side_with = [&](Vertex probe) -> const std::vector<Vertex>& {
          bool in_a = std::binary_search(cyc->side_a.begin(), cyc->side_a.end(), probe);
          return in_a ? cyc->side_a : cyc->side_b;
        };
        auto emit = [&](int k, Vertex arc_probe, int arc_first, int arc_len) {
          const auto& interior = side_with(arc_probe);
          for (int t = 0; t < arc_len; ++t)
            assert(std::binary_search(interior.begin(), interior.end(),
                                      l[(arc_first + t) % p]));
          JumpCycle jc;
          jc.cycle = *cyc;
          jc.k = k;
          jc.inside_region = interior;
          jc.inside_region.push_back(v);
          jc.inside_region.push_back(li);
          jc.inside_region.push_back(y);
          jc.inside_region.push_back(lj);
          std::sort(jc.inside_region.begin(), jc.inside_region.end());
          out.push_back(std::move(jc));
        };
        emit(gap_fwd, l[(i + 1) % p], i + 1, gap_fwd);
        emit(gap_back, l[(j + 1) % p], j + 1, gap_back);
      }
    }
  }
  return out;
}

}  // namespace quadcontract
