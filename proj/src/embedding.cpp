#include "quadcontract/embedding.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>

namespace quadcontract {

std::vector<Vertex> DegreeClasses::vk(int k) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<Vertex>(degree.size()); ++v)
    if (degree[v] == k) out.push_back(v);
  return out;
}

std::vector<Vertex> DegreeClasses::v_at_least(int k) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<Vertex>(degree.size()); ++v)
    if (degree[v] >= k) out.push_back(v);
  return out;
}

int cycle_index_of(const std::vector<Vertex>& cycle, Vertex x) {
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (cycle[i] == x) return static_cast<int>(i);
  return -1;
}

int PlaneGraph::degree(Vertex v) const {
  if (v < 0 || v >= order()) throw UnknownVertex("no vertex " + std::to_string(v));
  return static_cast<int>(rot_[v].size());
}

const std::vector<Vertex>& PlaneGraph::rotation(Vertex v) const {
  if (v < 0 || v >= order()) throw UnknownVertex("no vertex " + std::to_string(v));
  return rot_[v];
}

bool PlaneGraph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || u >= order() || v < 0 || v >= order()) return false;
  const auto& smaller = rot_[u].size() <= rot_[v].size() ? rot_[u] : rot_[v];
  Vertex other = rot_[u].size() <= rot_[v].size() ? v : u;
  return std::find(smaller.begin(), smaller.end(), other) != smaller.end();
}

std::vector<EdgeRef> PlaneGraph::edges() const {
  std::vector<EdgeRef> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex w : rot_[u])
      if (u < w) out.emplace_back(u, w);
  std::sort(out.begin(), out.end());
  return out;
}

void PlaneGraph::validate_simple_connected() const {
  const int n = order();
  if (n < 1) throw NotSimple("empty vertex set");
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> seen;
    for (Vertex w : rot_[v]) {
      if (w < 0 || w >= n)
        throw NotSimple("neighbor id out of range at vertex " + std::to_string(v));
      if (w == v) throw NotSimple("loop at vertex " + std::to_string(v));
      if (std::find(seen.begin(), seen.end(), w) != seen.end())
        throw NotSimple("repeated neighbor " + std::to_string(w) + " at vertex " +
                        std::to_string(v));
      seen.push_back(w);
    }
  }
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : rot_[v])
      if (std::find(rot_[w].begin(), rot_[w].end(), v) == rot_[w].end())
        throw NotSimple("adjacency not symmetric: " + std::to_string(v) + "->" +
                        std::to_string(w));
  // connectivity
  std::vector<char> reached(n, 0);
  std::vector<Vertex> stack{0};
  reached[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : rot_[v])
      if (!reached[w]) {
        reached[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  if (count != n) throw Disconnected("graph is not connected");
}

PlaneGraph PlaneGraph::from_rotation_system(Rotation rot) {
  PlaneGraph g;
  g.rot_ = std::move(rot);
  int total = 0;
  for (const auto& r : g.rot_) total += static_cast<int>(r.size());
  g.edge_count_ = total / 2;
  g.validate_simple_connected();
  return g;
}

std::vector<std::vector<Vertex>> PlaneGraph::trace_faces() const {
  const int n = order();
  // used[v][i] marks the dart v -> rot_[v][i]
  std::vector<std::vector<char>> used(n);
  for (Vertex v = 0; v < n; ++v) used[v].assign(rot_[v].size(), 0);

  auto index_of = [&](Vertex v, Vertex x) {
    const auto& r = rot_[v];
    for (std::size_t i = 0; i < r.size(); ++i)
      if (r[i] == x) return static_cast<int>(i);
    return -1;
  };

  std::vector<std::vector<Vertex>> faces;
  for (Vertex v0 = 0; v0 < n; ++v0) {
    for (std::size_t i0 = 0; i0 < rot_[v0].size(); ++i0) {
      if (used[v0][i0]) continue;
      std::vector<Vertex> face;
      Vertex u = v0;
      int i = static_cast<int>(i0);
      do {
        used[u][i] = 1;
        face.push_back(u);
        Vertex v = rot_[u][i];
        int j = index_of(v, u);
        i = (j + 1) % static_cast<int>(rot_[v].size());
        u = v;
      } while (!(u == v0 && i == static_cast<int>(i0)));
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

std::string PlaneGraph::to_text() const {
  std::ostringstream out;
  for (Vertex v = 0; v < order(); ++v) {
    out << v << ":";
    for (Vertex w : rot_[v]) out << ' ' << w;
    out << '\n';
  }
  return out.str();
}

namespace {

Rotation parse_rotation_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<int, std::vector<Vertex>>> rows;
  int max_id = -1;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("missing ':' in line: " + line);
    std::istringstream head(line.substr(0, colon));
    int v;
    if (!(head >> v) || v < 0) throw ParseError("bad vertex id in line: " + line);
    std::istringstream tail(line.substr(colon + 1));
    std::vector<Vertex> nbrs;
    int w;
    while (tail >> w) nbrs.push_back(w);
    std::string rest;
    tail.clear();
    if (tail >> rest) throw ParseError("trailing junk in line: " + line);
    rows.emplace_back(v, std::move(nbrs));
    max_id = std::max(max_id, v);
  }
  if (rows.empty()) throw ParseError("no vertex lines");
  Rotation rot(max_id + 1);
  std::vector<char> filled(max_id + 1, 0);
  for (auto& [v, nbrs] : rows) {
    if (filled[v]) throw ParseError("duplicate line for vertex " + std::to_string(v));
    filled[v] = 1;
    rot[v] = std::move(nbrs);
  }
  for (int v = 0; v <= max_id; ++v)
    if (!filled[v]) throw ParseError("missing line for vertex " + std::to_string(v));
  return rot;
}

}  // namespace

PlaneGraph plane_graph_from_text(const std::string& text) {
  return PlaneGraph::from_rotation_system(parse_rotation_text(text));
}

PlaneTriangulation PlaneTriangulation::from_rotation_system(Rotation rot) {
  PlaneTriangulation g;
  g.rot_ = std::move(rot);
  int total = 0;
  for (const auto& r : g.rot_) total += static_cast<int>(r.size());
  g.edge_count_ = total / 2;
  g.validate_simple_connected();

  const int n = g.order();
  if (n < 4) throw NotTriangulation("order " + std::to_string(n) + " < 4");
  for (Vertex v = 0; v < n; ++v)
    if (g.rot_[v].size() < 3)
      throw NotTriangulation("vertex " + std::to_string(v) + " has degree < 3");
  if (g.edge_count_ != 3 * n - 6)
    throw NotTriangulation("edge count " + std::to_string(g.edge_count_) +
                           " != 3n-6 = " + std::to_string(3 * n - 6));
  auto faces = g.trace_faces();
  if (static_cast<int>(faces.size()) != 2 * n - 4)
    throw NotTriangulation("face count " + std::to_string(faces.size()) +
                           " != 2n-4 = " + std::to_string(2 * n - 4));
  for (const auto& f : faces)
    if (f.size() != 3)
      throw NotTriangulation("face of length " + std::to_string(f.size()));
  return g;
}

PlaneTriangulation PlaneTriangulation::from_text(const std::string& text) {
  return from_rotation_system(parse_rotation_text(text));
}

std::vector<std::array<Vertex, 3>> PlaneTriangulation::faces() const {
  auto traced = trace_faces();
  std::vector<std::array<Vertex, 3>> out;
  out.reserve(traced.size());
  for (const auto& f : traced) out.push_back({f[0], f[1], f[2]});
  return out;
}

PlaneTriangulation PlaneTriangulation::contract_edge(EdgeRef e) const {
  const int n = order();
  if (n < 5) throw OrderTooSmall("cannot contract below order 4");
  if (!has_edge(e.u, e.v)) throw NotAnEdge("no edge (" + std::to_string(e.u) + "," +
                                           std::to_string(e.v) + ")");
  const Vertex a = e.u, b = e.v;  // a < b; merged vertex keeps a

  // b's rotation cut at a: the neighbors of b, starting after a.
  const auto& rb = rot_[b];
  int pos_a = cycle_index_of(rb, a);
  std::vector<Vertex> seq;
  seq.reserve(rb.size() - 1);
  for (std::size_t s = 1; s < rb.size(); ++s)
    seq.push_back(rb[(pos_a + s) % rb.size()]);

  // splice seq into a's rotation in place of b
  std::vector<Vertex> merged;
  merged.reserve(rot_[a].size() + seq.size() - 1);
  for (Vertex w : rot_[a]) {
    if (w == b)
      merged.insert(merged.end(), seq.begin(), seq.end());
    else
      merged.push_back(w);
  }
  // The two common face neighbors appear twice at the splice junctions;
  // collapse exactly those adjacent pairs (cyclically).
  std::vector<Vertex> collapsed;
  collapsed.reserve(merged.size());
  int dups = 0;
  for (std::size_t i = 0; i < merged.size(); ++i) {
    if (merged[i] == merged[(i + 1) % merged.size()]) {
      ++dups;
      continue;  // keep the later occurrence only
    }
    collapsed.push_back(merged[i]);
  }
  if (dups != 2)
    throw ResultNotSimple("contraction produced " + std::to_string(dups) +
                          " facial duplicates (expected 2)");
  {
    std::vector<Vertex> sorted_check = collapsed;
    std::sort(sorted_check.begin(), sorted_check.end());
    if (std::adjacent_find(sorted_check.begin(), sorted_check.end()) != sorted_check.end())
      throw ResultNotSimple("contraction produced parallel edges beyond the facial pair");
  }

  Rotation out(n - 1);
  auto remap = [&](Vertex w) { return w > b ? w - 1 : w; };
  for (Vertex v = 0; v < n; ++v) {
    if (v == b) continue;
    const std::vector<Vertex>& src = (v == a) ? collapsed : rot_[v];
    std::vector<Vertex> dst;
    dst.reserve(src.size());
    if (v == a) {
      for (Vertex w : src) dst.push_back(remap(w));
    } else {
      // replace b by a; if v saw both a and b, the two occurrences must be
      // cyclically adjacent (v is a common face neighbor) and collapse to one
      for (Vertex w : src) dst.push_back(w == b ? a : remap(w));
      for (std::size_t i = 0; i < dst.size(); ++i) {
        std::size_t j = (i + 1) % dst.size();
        if (dst.size() > 1 && dst[i] == dst[j]) {
          dst.erase(dst.begin() + j);
          break;
        }
      }
      std::vector<Vertex> sorted_check = dst;
      std::sort(sorted_check.begin(), sorted_check.end());
      if (std::adjacent_find(sorted_check.begin(), sorted_check.end()) !=
          sorted_check.end())
        throw ResultNotSimple("non-facial common neighbor " + std::to_string(v));
    }
    out[remap(v)] = std::move(dst);
  }
  return PlaneTriangulation::from_rotation_system(std::move(out));
}

std::vector<Vertex> link(const PlaneGraph& g, Vertex v) { return g.rotation(v); }

DegreeClasses degree_classes(const PlaneGraph& g) {
  DegreeClasses c;
  c.degree.resize(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    c.degree[v] = g.degree(v);
    if (c.degree[v] == 4) c.v4.push_back(v);
    if (c.degree[v] >= 5) c.v_ge5.push_back(v);
  }
  return c;
}

}  // namespace quadcontract
