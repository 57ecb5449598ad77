#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "quadcontract/connectivity.hpp"
#include "quadcontract/enumeration.hpp"
#include "quadcontract/family.hpp"

namespace quadcontract {

struct BoundCheck {
  std::string name;
  int checked = 0;
  std::vector<std::string> violations;
};

struct OrderRow {
  int order = 0;
  int classes_total = 0;
  int classes_4connected = 0;
  bool theorem_asserted = false;  // informational below order 7
  std::vector<std::string> lower_bound_violations;
  std::vector<std::string> extremal_codes;      // canonical codes, hex
  std::vector<std::string> family_layer_codes;  // canonical codes, hex
  bool equality_matches_family = true;
  std::vector<std::string> reduction_mismatches;
  std::vector<BoundCheck> bounds;
  std::vector<std::string> weight_violations;
  std::vector<std::string> oracle_fastpath_mismatches;
  double runtime_ms = 0.0;

  bool pass() const;
};

struct VerificationReport {
  int n_min = 0, n_max = 0;
  std::map<int, OrderRow> rows;

  bool has_violation() const;  // theorem / bound / weight-claim failures
  bool has_mismatch() const;   // oracle vs fast path, catalog vs reduction
  /// 0 = all pass, 2 = violation, 3 = internal mismatch (wins over 2).
  int exit_code() const;
  nlohmann::json to_json() const;  // sorted keys, sorted code lists
  std::string to_csv() const;
};

struct VerifyOptions {
  int n_min = 7;
  int n_max = 10;
  int threads = 0;
  int oracle_check_max_order = 10;  // fast-path vs oracle sweep bound
  int weight_check_max_order = 10;
  bool check_bounds = true;
  long max_classes = 0;  // 0 = QUADCONTRACT_MAX_CLASSES or default
};

/// Enumerates once and runs the theorem sweep, the prior-bound checks, the
/// weight-claim checks, and the fast-path/oracle cross-check.
VerificationReport run_full_verification(const VerifyOptions& opts);

/// Main-theorem sweep only: |E4| >= |V>=5| + 2 for every 4-connected class
/// with n_min <= n <= n_max, and equality iff family membership (catalog and
/// reduction decider). Order 6 is reported informationally.
VerificationReport verify_main_theorem(int n_min, int n_max, int threads = 0);

/// AE and AEKK on all 4-connected classes, MHV for order >= 8, and the
/// E3 bound for order >= 5 on all enumerated triangulations.
VerificationReport verify_bounds(int n_max, int threads = 0);

/// w(v) >= 2, sum of weights <= 2|E4|, and the jump-cycle inside-region
/// edge property, on all 4-connected classes of order >= 7.
VerificationReport verify_weight_claims(int n_max, int threads = 0);

struct GraphAnalysis {
  std::string source;
  int order = 0;
  std::vector<int> degrees;
  int kappa = 0;  // capped at 5
  bool triangulation = false;
  bool four_connected = false;
  std::string code_hex;  // triangulations only
  std::vector<Vertex> v_ge5;
  std::vector<EdgeRef> e4;
  std::vector<std::pair<EdgeRef, SeparatingCycle4>> witnesses;  // e not in E4
  std::optional<bool> extremal;  // 4-connected, order >= 7 only
  bool family_member = false;
  std::vector<std::pair<int, CanonicalCode>> membership_chain;
  bool oracle_agrees = true;

  std::string to_text() const;
};

/// Accepts "dw:N", "dwm:N", "g0", or a path to a planar-code or rotation
/// text file (possibly holding several graphs).
std::vector<GraphAnalysis> analyze(const std::string& what);

std::string to_dot(const PlaneGraph& g);

/// Loads graphs for analyze/canon: named construction or file.
std::vector<PlaneTriangulation> load_triangulations(const std::string& what);

}  // namespace quadcontract
