#pragma once

#include <array>
#include <optional>
#include <vector>

#include "quadcontract/embedding.hpp"

namespace quadcontract {

/// A 4-cycle whose removal disconnects the graph. `vertices` in cycle order;
/// side_a and side_b are the vertex sets of G - V(C) grouped by region
/// (sorted; in a 4-connected triangulation these are exactly the two
/// components).
struct SeparatingCycle4 {
  std::array<Vertex, 4> vertices{};
  std::vector<Vertex> side_a, side_b;
};

/// Edge counts of the three F-sets around a vertex of degree >= 5:
/// w1 = |{uv in E4 : u of degree >= 5}|, w2 = |{uv in E4 : u of degree 4}|,
/// w3 = |{uu' in E4 : u, u' degree-4 neighbors of v}|.
struct WeightBreakdown {
  int w1 = 0, w2 = 0, w3 = 0;
  int w() const { return w1 + 2 * w2 + w3; }
};

/// A separating 4-cycle v - l_i - y - l_j - v through two link vertices of v
/// whose link path from l_i to l_j has k interior vertices; inside_region is
/// the side of the cycle containing that path (boundary included).
struct JumpCycle {
  SeparatingCycle4 cycle;  // ordered v, l_i, y, l_j
  int k = 0;
  std::vector<Vertex> inside_region;
};

/// min(kappa(G), cap) by unit-vertex-capacity max flow between non-adjacent
/// pairs, with one minimum-degree vertex plus its neighborhood fixed as
/// sources. Complete graphs have connectivity n-1.
int vertex_connectivity(const Rotation& adj, int cap);
int vertex_connectivity(const PlaneGraph& g, int cap);

bool is_k_connected(const Rotation& adj, int k);
bool is_k_connected(const PlaneGraph& g, int k);

/// True iff the simple graph G/e (parallel edges merged) is k-connected.
/// Throws NotAnEdge.
bool is_contractible_oracle(const PlaneTriangulation& g, EdgeRef e, int k);

/// First separating 4-cycle through e in deterministic scan order, if any.
/// Expects a 4-connected triangulation.
std::optional<SeparatingCycle4> in_separating_4cycle(const PlaneTriangulation& g, EdgeRef e);

/// E_k. For k = 4 computed by the separating-4-cycle fast path
/// (e in E4 iff no separating 4-cycle contains e); for other k by the
/// contraction oracle. Sorted.
std::vector<EdgeRef> contractible_edges(const PlaneTriangulation& g, int k);

/// Weight of v (degree >= 5, else DegreeTooSmall) in a 4-connected
/// triangulation. The overload without e4 computes E4 itself.
WeightBreakdown weight(const PlaneTriangulation& g, Vertex v);
WeightBreakdown weight(const PlaneTriangulation& g, Vertex v,
                       const std::vector<EdgeRef>& e4_sorted);

/// All edges of F_{v,1} + F_{v,2} + F_{v,3} (the edges weight(v) counts).
std::vector<EdgeRef> f_set_edges(const PlaneTriangulation& g, Vertex v,
                                 const std::vector<EdgeRef>& e4_sorted);

/// All jump separating 4-cycles on v (degree >= 5, else DegreeTooSmall);
/// each geometric cycle contributes one entry per side, so k covers both
/// orientations.
std::vector<JumpCycle> k_jump_cycles(const PlaneTriangulation& g, Vertex v);

}  // namespace quadcontract
