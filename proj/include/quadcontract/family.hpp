#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <vector>

#include "quadcontract/constructions.hpp"
#include "quadcontract/enumeration.hpp"

namespace quadcontract {

struct FamilyMember {
  CanonicalCode code;
  PlaneTriangulation graph;
  CanonicalCode parent_code;  // empty for the order-8 base
  int extension_kind = 0;     // 0 for the base
};

/// Closure of the order-8 base under extensions 1 and 2, layered by order,
/// deduplicated by canonical code; each layer sorted by code. The provenance
/// records one extension chain per member.
struct FamilyCatalog {
  int n_max = 0;
  std::map<int, std::vector<FamilyMember>> layers;

  bool contains(int order, const CanonicalCode& code) const;
  const FamilyMember* find(const CanonicalCode& code) const;
  std::vector<CanonicalCode> layer_codes(int order) const;
  /// Extension chain from the base to the given member: pairs of
  /// (extension kind, code after applying it).
  std::vector<std::pair<int, CanonicalCode>> chain_of(const CanonicalCode& code) const;
};

FamilyCatalog generate_family(int n_max, int threads = 0);

/// Writes one planar-code file per layer (family_order_<n>.pc) plus a text
/// index (order, code hash, parent hash, extension kind) to index.txt.
void export_catalog(const FamilyCatalog& catalog, const std::filesystem::path& dir);

struct ReductionResult {
  bool member = false;
  /// Contractions applied on the way down to the base: (kind, code after).
  std::vector<std::pair<int, CanonicalCode>> chain;
};

/// Exhaustive backtracking over contraction-2 then contraction-1 sites with
/// canonical-code memoization; true iff some chain of valid contractions
/// reaches the order-8 base. Expects a 4-connected triangulation of
/// order >= 8.
ReductionResult is_member_by_reduction(const PlaneTriangulation& g);

/// |E4| == |V>=5| + 2. Throws OrderTooSmall for order < 7.
bool is_extremal(const PlaneTriangulation& g);

}  // namespace quadcontract
