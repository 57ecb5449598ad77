#pragma once

#include <vector>

#include "quadcontract/embedding.hpp"

namespace quadcontract {

/// Double wheel DW_n: a rim n-cycle (ids 0..n-1) plus two hubs (ids n, n+1)
/// each adjacent to every rim vertex. Order n+2; 4-connected iff n >= 4.
/// Throws OrderTooSmall for n < 3.
PlaneTriangulation double_wheel(int n);

/// DW_n minus one rim edge (an edge whose endpoints have degree 4). Not a
/// triangulation: exactly one face is a quadrilateral. Used as a pattern
/// graph. Throws OrderTooSmall for n < 4.
PlaneGraph double_wheel_minus(int n);

/// The order-8 base triangulation of the extremal family: 18 edges,
/// V4 = {p1, p2, y1, y2}, V>=5 = {x1, x2, p'1, p'2} (all of degree 5).
PlaneTriangulation g0();

/// Vertex ids used by g0().
namespace g0_ids {
inline constexpr Vertex p1 = 0, p2 = 1, y1 = 2, y2 = 3;
inline constexpr Vertex x1 = 4, x2 = 5, pp1 = 6, pp2 = 7;
}  // namespace g0_ids

/// A 4-cycle c1c2c3c4 whose interior holds exactly two degree-4 vertices
/// d1, d2, with every corner of degree >= 5 and the edge set
/// {c1d1, c2d1, c2d2, c3d2, c4d1, c4d2, d1d2} present. kind 2 additionally
/// requires deg(c2) >= 6.
struct ExtensionSite {
  int kind = 0;  // 1 or 2
  Vertex c1 = -1, c2 = -1, c3 = -1, c4 = -1;
  Vertex d1 = -1, d2 = -1;
};

/// The matched inverse configuration. apply_contraction contracts
/// EdgeRef(split_a, split_b): kind 1 contracts (d'2, d''2), kind 2 contracts
/// (c'2, c''2). Guards: kind 1 needs deg(c3) >= 6; kind 2 needs deg(c1) >= 6
/// and deg(c3) >= 6.
struct ContractionSite {
  int kind = 0;
  Vertex c1 = -1, c2 = -1, c3 = -1, c4 = -1;  // kind 2: c2 is the c'2 role
  Vertex d1 = -1, d2 = -1;                    // kind 1: d2 unused (-1)
  Vertex split_a = -1, split_b = -1;
};

/// All role assignments at which the given extension applies, mirror and
/// rotation placements included, in deterministic order. Expects a
/// 4-connected triangulation.
std::vector<ExtensionSite> find_extension_sites(const PlaneTriangulation& g, int kind);

/// Kind 1 splits d2 so that the new vertices get degree 4 and d1 degree 5;
/// kind 2 splits c2 into c'2 (degree deg(c2)-1) and c''2 (degree 5). The
/// order grows by one; d2 (kind 1) / c2 (kind 2) keeps its id and the new
/// vertex gets id n. Throws InvalidSite if the site does not match g.
PlaneTriangulation apply_extension(const PlaneTriangulation& g, const ExtensionSite& site);

std::vector<ContractionSite> find_contraction_sites(const PlaneTriangulation& g, int kind);

/// Undoes the corresponding extension by contracting the split pair.
PlaneTriangulation apply_contraction(const PlaneTriangulation& g, const ContractionSite& site);

/// True if some induced subgraph of host is isomorphic to pattern
/// (as abstract graphs).
bool contains_induced_subgraph(const PlaneGraph& host, const PlaneGraph& pattern);

}  // namespace quadcontract
