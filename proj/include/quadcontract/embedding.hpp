#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "quadcontract/errors.hpp"

namespace quadcontract {

using Vertex = int;

// Per-vertex cyclic neighbor lists, all in the same orientation
// (counterclockwise by convention).
using Rotation = std::vector<std::vector<Vertex>>;

/// Unordered vertex pair identifying an edge. Stored normalized (u < v).
struct EdgeRef {
  Vertex u = -1;
  Vertex v = -1;

  EdgeRef() = default;
  EdgeRef(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const EdgeRef&) const = default;
};

/// Vertices bucketed by degree. v4 and v_ge5 partition V(G) whenever the
/// minimum degree is 4.
struct DegreeClasses {
  std::vector<int> degree;      // degree[v]
  std::vector<Vertex> v4;       // degree exactly 4, sorted
  std::vector<Vertex> v_ge5;    // degree >= 5, sorted

  std::vector<Vertex> vk(int k) const;          // degree exactly k
  std::vector<Vertex> v_at_least(int k) const;  // degree >= k
};

/// Simple connected plane graph given by a rotation system. Immutable after
/// construction; all rewrites return new values.
class PlaneGraph {
 public:
  /// Validates: dense ids, no loops, no repeated neighbor, symmetric
  /// adjacency (NotSimple), connected (Disconnected).
  static PlaneGraph from_rotation_system(Rotation rot);

  int order() const { return static_cast<int>(rot_.size()); }
  int edge_count() const { return edge_count_; }
  int degree(Vertex v) const;
  const std::vector<Vertex>& rotation(Vertex v) const;
  const Rotation& rotation_system() const { return rot_; }
  bool has_edge(Vertex u, Vertex v) const;
  std::vector<EdgeRef> edges() const;  // sorted

  /// Faces traced from the rotation system: the dart after u->v is v->w with
  /// w the successor of u in rotation(v). Each face is the cyclic sequence
  /// of dart origins; every directed edge appears in exactly one face.
  std::vector<std::vector<Vertex>> trace_faces() const;

  /// One line per vertex, "v: a b c ..." with neighbors in rotation order.
  std::string to_text() const;

 protected:
  PlaneGraph() = default;
  void validate_simple_connected() const;

  Rotation rot_;
  int edge_count_ = 0;
};

/// Simple plane triangulation: every face a triangle, |E| = 3n-6,
/// 2n-4 faces, min degree >= 3, order >= 4.
class PlaneTriangulation : public PlaneGraph {
 public:
  /// Everything PlaneGraph checks, plus the triangulation conditions
  /// (NotTriangulation on any failure).
  static PlaneTriangulation from_rotation_system(Rotation rot);

  static PlaneTriangulation from_text(const std::string& text);

  /// All 2n-4 oriented triangular faces.
  std::vector<std::array<Vertex, 3>> faces() const;

  /// Contracts e = uv: the endpoints merge at min(u, v), the two common face
  /// neighbors deduplicate, ids stay dense (ids above max(u, v) shift down).
  /// Throws NotAnEdge, OrderTooSmall (n < 5), and ResultNotSimple when the
  /// endpoints share a non-facial neighbor (only possible when G is not
  /// 4-connected).
  PlaneTriangulation contract_edge(EdgeRef e) const;

 private:
  PlaneTriangulation() = default;
};

PlaneGraph plane_graph_from_text(const std::string& text);

/// The rotation of v as a cyclic vertex sequence; for 4-connected
/// triangulations this cycle is induced.
std::vector<Vertex> link(const PlaneGraph& g, Vertex v);

DegreeClasses degree_classes(const PlaneGraph& g);

/// Index of x in cycle, or -1.
int cycle_index_of(const std::vector<Vertex>& cycle, Vertex x);

}  // namespace quadcontract
