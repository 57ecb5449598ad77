#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "quadcontract/embedding.hpp"

namespace quadcontract {

/// Canonical byte string of an embedded triangulation: equal codes iff the
/// graphs are isomorphic as embedded triangulations up to sphere symmetry
/// including reflection. The bytes are a valid planar-code body
/// (order byte, then 1-based rotation lists, each 0-terminated).
struct CanonicalCode {
  std::vector<std::uint8_t> bytes;

  auto operator<=>(const CanonicalCode&) const = default;
  std::string hex() const;
  std::uint64_t hash64() const;
  std::string hash_hex() const;
};

/// Minimum over all 4|E| starts (every directed edge, both walk directions)
/// of a breadth-first relabeling code. Invariant under relabeling and under
/// reversal of the rotation system.
CanonicalCode canonical_code(const PlaneTriangulation& g);

/// All order n+1 triangulations obtained by splitting v into v', v'':
/// for each choice of two distinct link positions a, b, v' takes the link
/// arc a..b plus v'', v'' takes the arc b..a plus v'. v' keeps v's id,
/// v'' gets id n.
std::vector<PlaneTriangulation> split_expansions(const PlaneTriangulation& g, Vertex v);

struct EnumerationOptions {
  // per-layer class cap; <= 0 reads QUADCONTRACT_MAX_CLASSES (default 200000)
  long max_classes = 0;
  int threads = 0;  // 0 = hardware concurrency
};

/// Layers of plane triangulations, one representative per isomorphism class,
/// for every order 4..n_max (index = order; entries below 4 are empty).
/// Starts from K4 and closes under split_expansions, deduplicating by
/// canonical code; every layer is sorted by code. Throws ResourceLimit when
/// a layer exceeds the class cap.
std::vector<std::vector<PlaneTriangulation>> enumerate_up_to(
    int n_max, const EnumerationOptions& opts = {});

/// The order-n layer of enumerate_up_to.
std::vector<PlaneTriangulation> enumerate_triangulations(
    int n, const EnumerationOptions& opts = {});

/// Classes with vertex connectivity >= 4.
std::vector<PlaneTriangulation> filter_4connected(const std::vector<PlaneTriangulation>& classes);

/// planar_code: ASCII header ">>planar_code<<", then per graph one byte n
/// (n < 128) followed by each vertex's neighbors in rotation order as
/// 1-based bytes, each list 0-terminated. Graphs are validated as
/// triangulations on read. Throws BadHeader, Truncated, NotTriangulation.
std::vector<PlaneTriangulation> read_planar_code(std::istream& in);
void write_planar_code(std::ostream& out, const std::vector<PlaneTriangulation>& classes);

}  // namespace quadcontract
