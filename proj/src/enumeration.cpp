#include "quadcontract/enumeration.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>

#include "quadcontract/connectivity.hpp"
#include "quadcontract/util.hpp"

namespace quadcontract {

std::string CanonicalCode::hex() const { return to_hex(bytes.data(), bytes.size()); }

std::uint64_t CanonicalCode::hash64() const { return fnv1a64(bytes.data(), bytes.size()); }

std::string CanonicalCode::hash_hex() const { return to_hex_u64(hash64()); }

namespace {

// One breadth-first relabeling code from a start dart. Vertices are numbered
// in discovery order; each vertex's rotation is emitted starting at the edge
// that discovered it (the start dart for the root), walking in direction
// `dir`. Bytes are 1-based vertex numbers with a 0 terminator per list.
void bfs_code(const Rotation& rot, Vertex root, int root_pos, int dir,
              std::vector<std::uint8_t>& out) {
  const int n = static_cast<int>(rot.size());
  out.clear();
  out.push_back(static_cast<std::uint8_t>(n));
  std::vector<int> number(n, -1);
  std::vector<Vertex> order;
  std::vector<int> entry_pos(n, -1);  // index of the discovering neighbor in rot[v]
  order.reserve(n);
  number[root] = 0;
  entry_pos[root] = root_pos;
  order.push_back(root);
  for (std::size_t q = 0; q < order.size(); ++q) {
    Vertex v = order[q];
    const auto& r = rot[v];
    const int d = static_cast<int>(r.size());
    for (int s = 0; s < d; ++s) {
      Vertex w = r[((entry_pos[v] + dir * s) % d + d) % d];
      if (number[w] < 0) {
        number[w] = static_cast<int>(order.size());
        entry_pos[w] = cycle_index_of(rot[w], v);
        order.push_back(w);
      }
      out.push_back(static_cast<std::uint8_t>(number[w] + 1));
    }
    out.push_back(0);
  }
}

}  // namespace

CanonicalCode canonical_code(const PlaneTriangulation& g) {
  const Rotation& rot = g.rotation_system();
  std::vector<std::uint8_t> best, current;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (int pos = 0; pos < g.degree(v); ++pos) {
      for (int dir : {1, -1}) {
        bfs_code(rot, v, pos, dir, current);
        if (best.empty() || current < best) best.swap(current);
      }
    }
  }
  return CanonicalCode{std::move(best)};
}

std::vector<PlaneTriangulation> split_expansions(const PlaneTriangulation& g, Vertex v) {
  const auto& l = g.rotation(v);
  const int d = static_cast<int>(l.size());
  const Vertex fresh = g.order();
  std::vector<PlaneTriangulation> out;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      Rotation rot = g.rotation_system();
      // v' (keeps v's id) takes arc l[i]..l[j], v'' (id fresh) the rest;
      // l[i] and l[j] stay adjacent to both.
      std::vector<Vertex> arc1(l.begin() + i, l.begin() + j + 1);
      std::vector<Vertex> arc2(l.begin() + j, l.end());
      arc2.insert(arc2.end(), l.begin(), l.begin() + i + 1);
      arc1.push_back(fresh);
      arc2.push_back(v);
      rot[v] = std::move(arc1);
      rot.push_back(std::move(arc2));
      for (int m = 0; m < d; ++m) {
        Vertex lm = l[m];
        auto& r = rot[lm];
        int pos = cycle_index_of(r, v);
        assert(pos >= 0);
        // consistent orientation: the successor of v in rot[l_m] is l_{m-1}
        assert(r[(pos + 1) % r.size()] == l[(m + d - 1) % d]);
        if (m == i) {
          r.insert(r.begin() + pos + 1, fresh);  // ..., l[i+1], v', v'', l[i-1], ...
        } else if (m == j) {
          r.insert(r.begin() + pos, fresh);  // ..., l[j+1], v'', v', l[j-1], ...
        } else if (!(i < m && m < j)) {
          r[pos] = fresh;  // arc2 interior vertices now see v''
        }
      }
      out.push_back(PlaneTriangulation::from_rotation_system(std::move(rot)));
    }
  }
  return out;
}

namespace {

long class_cap(const EnumerationOptions& opts) {
  if (opts.max_classes > 0) return opts.max_classes;
  if (const char* env = std::getenv("QUADCONTRACT_MAX_CLASSES")) {
    long v = std::atol(env);
    if (v > 0) return v;
  }
  return 200000;
}

PlaneTriangulation k4() {
  Rotation rot(4);
  rot[0] = {1, 3, 2};
  rot[1] = {2, 3, 0};
  rot[2] = {0, 3, 1};
  rot[3] = {2, 0, 1};
  return PlaneTriangulation::from_rotation_system(rot);
}

}  // namespace

std::vector<std::vector<PlaneTriangulation>> enumerate_up_to(int n_max,
                                                             const EnumerationOptions& opts) {
  if (n_max < 4) throw OrderTooSmall("no plane triangulation below order 4");
  const long cap = class_cap(opts);
  std::vector<std::vector<PlaneTriangulation>> layers(n_max + 1);
  layers[4].push_back(k4());

  for (int n = 4; n < n_max; ++n) {
    const auto& parents = layers[n];
    // expand in parallel, merge deterministically in parent order
    std::vector<std::vector<std::pair<CanonicalCode, PlaneTriangulation>>> local(
        parents.size());
    parallel_for(parents.size(), opts.threads, [&](std::size_t pi) {
      const PlaneTriangulation& parent = parents[pi];
      for (Vertex v = 0; v < parent.order(); ++v)
        for (PlaneTriangulation& child : split_expansions(parent, v))
          local[pi].emplace_back(canonical_code(child), std::move(child));
    });
    std::map<CanonicalCode, PlaneTriangulation> layer;
    for (auto& batch : local)
      for (auto& [code, graph] : batch) {
        if (layer.size() > static_cast<std::size_t>(cap))
          throw ResourceLimit("class cap " + std::to_string(cap) +
                              " exceeded at order " + std::to_string(n + 1));
        layer.emplace(std::move(code), std::move(graph));
      }
    layers[n + 1].reserve(layer.size());
    for (auto& [code, graph] : layer) layers[n + 1].push_back(std::move(graph));
  }
  return layers;
}

std::vector<PlaneTriangulation> enumerate_triangulations(int n, const EnumerationOptions& opts) {
  return std::move(enumerate_up_to(n, opts)[n]);
}

std::vector<PlaneTriangulation> filter_4connected(
    const std::vector<PlaneTriangulation>& classes) {
  std::vector<PlaneTriangulation> out;
  for (const auto& g : classes)
    if (is_k_connected(g, 4)) out.push_back(g);
  return out;
}

static const char kHeader[] = ">>planar_code<<";

std::vector<PlaneTriangulation> read_planar_code(std::istream& in) {
  char header[sizeof(kHeader) - 1];
  in.read(header, sizeof(header));
  if (in.gcount() != static_cast<std::streamsize>(sizeof(header)) ||
      std::string(header, sizeof(header)) != kHeader)
    throw BadHeader("planar_code header missing");
  std::vector<PlaneTriangulation> out;
  for (;;) {
    int n = in.get();
    if (n == std::istream::traits_type::eof()) break;
    if (n <= 0 || n >= 128) throw ParseError("bad order byte " + std::to_string(n));
    Rotation rot(n);
    for (int v = 0; v < n; ++v) {
      for (;;) {
        int b = in.get();
        if (b == std::istream::traits_type::eof()) throw Truncated("mid-graph EOF");
        if (b == 0) break;
        if (b > n) throw ParseError("neighbor byte out of range");
        rot[v].push_back(b - 1);
      }
    }
    out.push_back(PlaneTriangulation::from_rotation_system(std::move(rot)));
  }
  return out;
}

void write_planar_code(std::ostream& out, const std::vector<PlaneTriangulation>& classes) {
  out.write(kHeader, sizeof(kHeader) - 1);
  for (const auto& g : classes) {
    if (g.order() >= 128) throw ParseError("planar_code supports n < 128 only");
    out.put(static_cast<char>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) {
      for (Vertex w : g.rotation(v)) out.put(static_cast<char>(w + 1));
      out.put(0);
    }
  }
}

}  // namespace quadcontract
