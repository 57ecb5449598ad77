#include "quadcontract/constructions.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace quadcontract {

namespace {

Rotation double_wheel_rotation(int n) {
  if (n < 3) throw OrderTooSmall("double wheel needs rim length >= 3");
  const Vertex hub_in = n, hub_out = n + 1;
  Rotation rot(n + 2);
  for (Vertex i = 0; i < n; ++i)
    rot[i] = {hub_out, (i + 1) % n, hub_in, (i + n - 1) % n};
  rot[hub_in].resize(n);
  for (Vertex i = 0; i < n; ++i) rot[hub_in][i] = i;
  rot[hub_out].resize(n);
  for (Vertex i = 0; i < n; ++i) rot[hub_out][i] = (n - i) % n;
  return rot;
}

}  // namespace

PlaneTriangulation double_wheel(int n) {
  return PlaneTriangulation::from_rotation_system(double_wheel_rotation(n));
}

PlaneGraph double_wheel_minus(int n) {
  if (n < 4) throw OrderTooSmall("double wheel minus needs rim length >= 4");
  Rotation rot = double_wheel_rotation(n);
  // delete rim edge 0-1 (rim vertices have degree 4)
  rot[0].erase(std::find(rot[0].begin(), rot[0].end(), 1));
  rot[1].erase(std::find(rot[1].begin(), rot[1].end(), 0));
  return PlaneGraph::from_rotation_system(rot);
}

PlaneTriangulation g0() {
  using namespace g0_ids;
  Rotation rot(8);
  rot[p1] = {pp1, x1, p2, x2};
  rot[p2] = {x2, p1, x1, pp2};
  rot[y1] = {x1, pp1, y2, pp2};
  rot[y2] = {pp1, x2, pp2, y1};
  rot[x1] = {p1, pp1, y1, pp2, p2};
  rot[x2] = {y2, pp1, p1, p2, pp2};
  rot[pp1] = {y1, x1, p1, x2, y2};
  rot[pp2] = {y2, x2, p2, x1, y1};
  return PlaneTriangulation::from_rotation_system(rot);
}

namespace {

// Vertices of the component of g - removed that contains seed.
std::vector<Vertex> component_of(const PlaneTriangulation& g,
                                 const std::vector<Vertex>& removed, Vertex seed) {
  std::vector<char> blocked(g.order(), 0);
  for (Vertex r : removed) blocked[r] = 1;
  assert(!blocked[seed]);
  std::vector<char> reached(g.order(), 0);
  std::vector<Vertex> stack{seed}, comp;
  reached[seed] = 1;
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
  return comp;
}

// The fourth corner assignments around an interior edge d1d2 of a candidate
// site; shared by both extension kinds.
struct SitePattern {
  Vertex c1, c2, c3, c4, d1, d2;
};

// Enumerates role tuples (c1,c2,c3,c4,d1,d2) of the Figure-2 left-hand
// configuration: d1d2 an edge with both ends of degree 4, c2/c4 their two
// common neighbors, c1 the remaining neighbor of d1 and c3 of d2.
std::vector<SitePattern> left_patterns(const PlaneTriangulation& g) {
  std::vector<SitePattern> out;
  DegreeClasses dc = degree_classes(g);
  for (EdgeRef e : g.edges()) {
    for (auto [d1, d2] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      if (dc.degree[d1] != 4 || dc.degree[d2] != 4) continue;
      std::vector<Vertex> common;
      for (Vertex w : g.rotation(d1))
        if (w != d2 && g.has_edge(w, d2)) common.push_back(w);
      if (common.size() != 2) continue;  // non-facial commons: host not 4-connected
      std::sort(common.begin(), common.end());
      for (auto [c2, c4] : {std::pair{common[0], common[1]}, std::pair{common[1], common[0]}}) {
        Vertex c1 = -1, c3 = -1;
        for (Vertex w : g.rotation(d1))
          if (w != d2 && w != c2 && w != c4) c1 = w;
        for (Vertex w : g.rotation(d2))
          if (w != d1 && w != c2 && w != c4) c3 = w;
        if (c1 < 0 || c3 < 0 || c1 == c3) continue;
        if (!g.has_edge(c1, c2) || !g.has_edge(c2, c3) || !g.has_edge(c3, c4) ||
            !g.has_edge(c4, c1))
          continue;
        // interior of c1c2c3c4 on the d-side must be exactly {d1, d2}
        auto comp = component_of(g, {c1, c2, c3, c4}, d1);
        if (comp.size() != 2) continue;
        if (comp.size() + 4 == static_cast<std::size_t>(g.order())) continue;  // no exterior
        out.push_back({c1, c2, c3, c4, d1, d2});
      }
    }
  }
  return out;
}

// Replaces the single entry `target` in rot[v] with `repl` (one or two
// entries, orientation already resolved by the caller).
void splice_at(Rotation& rot, Vertex v, Vertex target, const std::vector<Vertex>& repl) {
  auto& r = rot[v];
  auto it = std::find(r.begin(), r.end(), target);
  assert(it != r.end());
  std::size_t pos = it - r.begin();
  r.erase(it);
  r.insert(r.begin() + pos, repl.begin(), repl.end());
}

Vertex succ_in(const Rotation& rot, Vertex v, Vertex x) {
  const auto& r = rot[v];
  int i = cycle_index_of(r, x);
  assert(i >= 0);
  return r[(i + 1) % r.size()];
}

}  // namespace

std::vector<ExtensionSite> find_extension_sites(const PlaneTriangulation& g, int kind) {
  if (kind != 1 && kind != 2) throw InvalidSite("extension kind must be 1 or 2");
  DegreeClasses dc = degree_classes(g);
  std::vector<ExtensionSite> out;
  for (const SitePattern& p : left_patterns(g)) {
    if (dc.degree[p.c1] < 5 || dc.degree[p.c2] < 5 || dc.degree[p.c3] < 5 ||
        dc.degree[p.c4] < 5)
      continue;
    if (kind == 2 && dc.degree[p.c2] < 6) continue;
    out.push_back({kind, p.c1, p.c2, p.c3, p.c4, p.d1, p.d2});
  }
  return out;
}

namespace {

void check_left_site(const PlaneTriangulation& g, const ExtensionSite& s) {
  auto deg_ok = [&](Vertex v, int min) { return v >= 0 && v < g.order() && g.degree(v) >= min; };
  if (s.kind != 1 && s.kind != 2) throw InvalidSite("bad kind");
  if (!deg_ok(s.c1, 5) || !deg_ok(s.c2, s.kind == 2 ? 6 : 5) || !deg_ok(s.c3, 5) ||
      !deg_ok(s.c4, 5))
    throw InvalidSite("corner degrees");
  if (s.d1 < 0 || s.d2 < 0 || g.degree(s.d1) != 4 || g.degree(s.d2) != 4)
    throw InvalidSite("interior degrees");
  const std::pair<Vertex, Vertex> required[] = {
      {s.c1, s.d1}, {s.c2, s.d1}, {s.c2, s.d2}, {s.c3, s.d2}, {s.c4, s.d1},
      {s.c4, s.d2}, {s.d1, s.d2}, {s.c1, s.c2}, {s.c2, s.c3}, {s.c3, s.c4},
      {s.c4, s.c1}};
  for (auto [a, b] : required)
    if (!g.has_edge(a, b)) throw InvalidSite("missing edge");
  auto comp = component_of(g, {s.c1, s.c2, s.c3, s.c4}, s.d1);
  if (comp.size() != 2) throw InvalidSite("interior is not exactly {d1, d2}");
}

}  // namespace

PlaneTriangulation apply_extension(const PlaneTriangulation& g, const ExtensionSite& s) {
  check_left_site(g, s);
  Rotation rot = g.rotation_system();
  const Vertex fresh = g.order();

  if (s.kind == 1) {
    // d2 splits into d2a (= d'2, keeps d2's id) and d2b (= d''2, id `fresh`).
    const Vertex d2a = s.d2, d2b = fresh;
    bool case_a = succ_in(rot, s.d1, s.d2) == s.c2;  // pred(d2) == c4 in rot[d1]
    assert((succ_in(rot, s.c3, s.d2) == s.c4) == case_a);
    splice_at(rot, s.d1, s.d2, case_a ? std::vector<Vertex>{d2a, d2b}
                                      : std::vector<Vertex>{d2b, d2a});
    splice_at(rot, s.c3, s.d2, case_a ? std::vector<Vertex>{d2b, d2a}
                                      : std::vector<Vertex>{d2a, d2b});
    splice_at(rot, s.c2, s.d2, {d2b});
    // c4 keeps d2's old entry, which is now d2a = d'2 (same id); c1 untouched.
    rot.push_back({});
    rot[d2a] = case_a ? std::vector<Vertex>{s.c4, s.c3, d2b, s.d1}
                      : std::vector<Vertex>{s.d1, d2b, s.c3, s.c4};
    rot[d2b] = case_a ? std::vector<Vertex>{s.c3, s.c2, s.d1, d2a}
                      : std::vector<Vertex>{d2a, s.d1, s.c2, s.c3};
    auto result = PlaneTriangulation::from_rotation_system(std::move(rot));
    assert(result.degree(d2a) == 4 && result.degree(d2b) == 4);
    assert(result.degree(s.d1) == 5);
    return result;
  }

  // kind 2: c2 splits into c2a (= c'2, keeps c2's id) and c2b (= c''2, id
  // `fresh`), which takes over the interior of the site.
  const Vertex c2a = s.c2, c2b = fresh;
  bool case_a = succ_in(rot, s.c2, s.d1) == s.d2;  // rot[c2] runs c1, d1, d2, c3
  splice_at(rot, s.d1, s.c2, {c2b});
  splice_at(rot, s.d2, s.c2, {c2b});
  // in rot[c1] the c''2 copy sits on the d1 side of the old c2 entry
  {
    bool d1_before = succ_in(rot, s.c1, s.d1) == s.c2;
    splice_at(rot, s.c1, s.c2, d1_before ? std::vector<Vertex>{c2b, c2a}
                                         : std::vector<Vertex>{c2a, c2b});
  }
  {
    bool d2_before = succ_in(rot, s.c3, s.d2) == s.c2;
    splice_at(rot, s.c3, s.c2, d2_before ? std::vector<Vertex>{c2b, c2a}
                                         : std::vector<Vertex>{c2a, c2b});
  }
  {
    // c'2 keeps everything but the two interior edges, replaced by c''2
    auto& r = rot[c2a];
    int i1 = cycle_index_of(r, s.d1);
    assert(i1 >= 0);
    // d1 and d2 are cyclically adjacent in rot[c2]
    if (r[(i1 + 1) % r.size()] == s.d2) {
      r[i1] = c2b;
      r.erase(r.begin() + (i1 + 1) % r.size());
    } else {
      assert(r[(i1 + r.size() - 1) % r.size()] == s.d2);
      r[i1] = c2b;
      r.erase(r.begin() + (i1 + r.size() - 1) % r.size());
    }
  }
  rot.push_back({});
  rot[c2b] = case_a ? std::vector<Vertex>{c2a, s.c1, s.d1, s.d2, s.c3}
                    : std::vector<Vertex>{s.c3, s.d2, s.d1, s.c1, c2a};
  auto result = PlaneTriangulation::from_rotation_system(std::move(rot));
  assert(result.degree(c2b) == 5);
  assert(result.degree(s.d1) == 4 && result.degree(s.d2) == 4);
  return result;
}

std::vector<ContractionSite> find_contraction_sites(const PlaneTriangulation& g, int kind) {
  if (kind != 1 && kind != 2) throw InvalidSite("contraction kind must be 1 or 2");
  DegreeClasses dc = degree_classes(g);
  std::vector<ContractionSite> out;

  if (kind == 1) {
    // contract (d'2, d''2): both of degree 4, common neighbors {d1, c3}
    for (EdgeRef e : g.edges()) {
      for (auto [d2a, d2b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
        if (dc.degree[d2a] != 4 || dc.degree[d2b] != 4) continue;
        std::vector<Vertex> common;
        for (Vertex w : g.rotation(d2a))
          if (w != d2b && g.has_edge(w, d2b)) common.push_back(w);
        if (common.size() != 2) continue;
        for (auto [d1, c3] : {std::pair{common[0], common[1]}, std::pair{common[1], common[0]}}) {
          if (dc.degree[d1] != 5) continue;
          if (dc.degree[c3] < 6) continue;
          Vertex c4 = -1, c2 = -1;
          for (Vertex w : g.rotation(d2a))
            if (w != d2b && w != d1 && w != c3) c4 = w;
          for (Vertex w : g.rotation(d2b))
            if (w != d2a && w != d1 && w != c3) c2 = w;
          if (c4 < 0 || c2 < 0 || c4 == c2) continue;
          if (!g.has_edge(d1, c4) || !g.has_edge(d1, c2)) continue;
          Vertex c1 = -1;
          for (Vertex w : g.rotation(d1))
            if (w != d2a && w != d2b && w != c4 && w != c2) c1 = w;
          if (c1 < 0 || c1 == c3) continue;
          if (dc.degree[c1] < 5 || dc.degree[c2] < 5 || dc.degree[c4] < 5) continue;
          if (!g.has_edge(c1, c2) || !g.has_edge(c2, c3) || !g.has_edge(c3, c4) ||
              !g.has_edge(c4, c1))
            continue;
          auto comp = component_of(g, {c1, c2, c3, c4}, d1);
          if (comp.size() != 3) continue;
          if (comp.size() + 4 == static_cast<std::size_t>(g.order())) continue;
          out.push_back({1, c1, c2, c3, c4, d1, -1, d2a, d2b});
        }
      }
    }
    return out;
  }

  // kind 2: contract (c'2, c''2); the link of c''2 reads c'2, c1, d1, d2, c3
  for (Vertex s = 0; s < g.order(); ++s) {
    if (dc.degree[s] != 5) continue;
    const auto& l = g.rotation(s);
    for (int r = 0; r < 5; ++r) {
      for (int dir : {1, -1}) {
        auto at = [&](int off) { return l[(r + dir * off % 5 + 10) % 5]; };
        Vertex c2a = at(0), c1 = at(1), d1 = at(2), d2 = at(3), c3 = at(4);
        if (dc.degree[d1] != 4 || dc.degree[d2] != 4) continue;
        if (dc.degree[c1] < 6 || dc.degree[c3] < 6) continue;
        if (dc.degree[c2a] < 5) continue;
        Vertex c4 = -1;
        for (Vertex w : g.rotation(d1))
          if (w != c1 && w != d2 && w != s) c4 = w;
        if (c4 < 0 || !g.has_edge(c4, d2)) continue;
        bool c4_ok = true;
        for (Vertex w : g.rotation(d2))
          if (w != c3 && w != d1 && w != s && w != c4) c4_ok = false;
        if (!c4_ok) continue;
        if (!g.has_edge(c4, c1) || !g.has_edge(c4, c3)) continue;
        if (dc.degree[c4] < 5) continue;
        auto comp = component_of(g, {c1, c2a, c3, c4}, s);
        if (comp.size() != 3) continue;
        if (comp.size() + 4 == static_cast<std::size_t>(g.order())) continue;
        out.push_back({2, c1, c2a, c3, c4, d1, d2, c2a, s});
      }
    }
  }
  return out;
}

PlaneTriangulation apply_contraction(const PlaneTriangulation& g, const ContractionSite& s) {
  if (s.kind != 1 && s.kind != 2) throw InvalidSite("bad kind");
  if (!g.has_edge(s.split_a, s.split_b)) throw InvalidSite("split pair is not an edge");
  if (s.kind == 1) {
    if (g.degree(s.c3) < 6) throw GuardViolated("contraction 1 needs deg(c3) >= 6");
  } else {
    if (g.degree(s.c1) < 6 || g.degree(s.c3) < 6)
      throw GuardViolated("contraction 2 needs deg(c1) >= 6 and deg(c3) >= 6");
  }
  return g.contract_edge(EdgeRef(s.split_a, s.split_b));
}

namespace {

// Backtracking induced-subgraph isomorphism on adjacency; pattern vertices
// are assigned in order, candidates pruned by degree.
bool extend_match(const std::vector<std::vector<char>>& host_adj,
                  const std::vector<int>& host_deg,
                  const std::vector<std::vector<char>>& pat_adj,
                  const std::vector<int>& pat_deg, std::vector<int>& image,
                  std::vector<char>& used, std::size_t next) {
  if (next == pat_adj.size()) return true;
  for (int h = 0; h < static_cast<int>(host_adj.size()); ++h) {
    if (used[h] || host_deg[h] < pat_deg[next]) continue;
    bool ok = true;
    for (std::size_t p = 0; p < next && ok; ++p)
      if (pat_adj[next][p] != host_adj[h][image[p]]) ok = false;
    if (!ok) continue;
    image[next] = h;
    used[h] = 1;
    if (extend_match(host_adj, host_deg, pat_adj, pat_deg, image, used, next + 1))
      return true;
    used[h] = 0;
  }
  return false;
}

std::vector<std::vector<char>> adjacency_matrix(const PlaneGraph& g) {
  std::vector<std::vector<char>> m(g.order(), std::vector<char>(g.order(), 0));
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex w : g.rotation(v)) m[v][w] = 1;
  return m;
}

}  // namespace

bool contains_induced_subgraph(const PlaneGraph& host, const PlaneGraph& pattern) {
  if (pattern.order() > host.order()) return false;
  auto host_adj = adjacency_matrix(host);
  auto pat_adj = adjacency_matrix(pattern);
  std::vector<int> host_deg(host.order()), pat_deg(pattern.order());
  for (Vertex v = 0; v < host.order(); ++v) host_deg[v] = host.degree(v);
  for (Vertex v = 0; v < pattern.order(); ++v) pat_deg[v] = pattern.degree(v);
  std::vector<int> image(pattern.order(), -1);
  std::vector<char> used(host.order(), 0);
  return extend_match(host_adj, host_deg, pat_adj, pat_deg, image, used, 0);
}

}  // namespace quadcontract
