#include "quadcontract/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "quadcontract/constructions.hpp"
#include "quadcontract/util.hpp"

namespace quadcontract {

bool OrderRow::pass() const {
  for (const auto& b : bounds)
    if (!b.violations.empty()) return false;
  return lower_bound_violations.empty() && equality_matches_family &&
         reduction_mismatches.empty() && weight_violations.empty() &&
         oracle_fastpath_mismatches.empty();
}

bool VerificationReport::has_violation() const {
  for (const auto& [order, row] : rows) {
    if (!row.lower_bound_violations.empty()) return true;
    if (!row.equality_matches_family) return true;
    if (!row.weight_violations.empty()) return true;
    for (const auto& b : row.bounds)
      if (!b.violations.empty()) return true;
  }
  return false;
}

bool VerificationReport::has_mismatch() const {
  for (const auto& [order, row] : rows)
    if (!row.reduction_mismatches.empty() || !row.oracle_fastpath_mismatches.empty())
      return true;
  return false;
}

int VerificationReport::exit_code() const {
  if (has_mismatch()) return 3;
  if (has_violation()) return 2;
  return 0;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["n_min"] = n_min;
  j["n_max"] = n_max;
  j["status"] = exit_code() == 0 ? "PASS" : (exit_code() == 2 ? "VIOLATION" : "MISMATCH");
  j["exit_code"] = exit_code();
  nlohmann::json jrows = nlohmann::json::array();
  for (const auto& [order, row] : rows) {
    nlohmann::json r;
    r["order"] = row.order;
    r["classes_total"] = row.classes_total;
    r["classes_4connected"] = row.classes_4connected;
    r["theorem_asserted"] = row.theorem_asserted;
    r["lower_bound_violations"] = row.lower_bound_violations;
    r["extremal_codes"] = row.extremal_codes;
    r["family_layer_codes"] = row.family_layer_codes;
    r["equality_matches_family"] = row.equality_matches_family;
    r["reduction_mismatches"] = row.reduction_mismatches;
    nlohmann::json jb = nlohmann::json::object();
    for (const auto& b : row.bounds) {
      jb[b.name] = {{"checked", b.checked}, {"violations", b.violations}};
    }
    r["bounds"] = jb;
    r["weight_violations"] = row.weight_violations;
    r["oracle_fastpath_mismatches"] = row.oracle_fastpath_mismatches;
    r["pass"] = row.pass();
    r["runtime_ms"] = row.runtime_ms;
    jrows.push_back(r);
  }
  j["rows"] = jrows;
  return j;
}

std::string VerificationReport::to_csv() const {
  std::ostringstream out;
  out << "order,classes_total,classes_4connected,extremal,family_layer,"
         "lower_bound_violations,equality_matches_family,reduction_mismatches,"
         "bound_violations,weight_violations,oracle_mismatches,pass,runtime_ms\n";
  for (const auto& [order, row] : rows) {
    int bound_viol = 0;
    for (const auto& b : row.bounds) bound_viol += static_cast<int>(b.violations.size());
    out << row.order << ',' << row.classes_total << ',' << row.classes_4connected << ','
        << row.extremal_codes.size() << ',' << row.family_layer_codes.size() << ','
        << row.lower_bound_violations.size() << ',' << (row.equality_matches_family ? 1 : 0)
        << ',' << row.reduction_mismatches.size() << ',' << bound_viol << ','
        << row.weight_violations.size() << ',' << row.oracle_fastpath_mismatches.size()
        << ',' << (row.pass() ? 1 : 0) << ',' << row.runtime_ms << '\n';
  }
  return out.str();
}

namespace {

struct ClassFacts {
  CanonicalCode code;
  bool four_connected = false;
  int n_vge5 = 0;
  int n_v3 = 0;
  std::vector<EdgeRef> e4;  // 4-connected classes only
  long e3 = -1;             // computed when bounds are checked
  bool reduction_member = false;
  std::vector<std::string> weight_violations;
  std::vector<std::string> oracle_mismatches;
};

std::string edge_str(EdgeRef e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

void check_weights(const PlaneTriangulation& g, const ClassFacts& f,
                   std::vector<std::string>& out) {
  DegreeClasses dc = degree_classes(g);
  long sum_w = 0;
  for (Vertex v : dc.v_ge5) {
    WeightBreakdown wb = weight(g, v, f.e4);
    sum_w += wb.w();
    if (wb.w() < 2)
      out.push_back("code=" + f.code.hash_hex() + " v=" + std::to_string(v) +
                    " w=" + std::to_string(wb.w()) + " < 2");
    // every k-jump cycle with k >= 2 must trap an F-edge in its inside region
    std::vector<EdgeRef> f_edges = f_set_edges(g, v, f.e4);
    for (const JumpCycle& jc : k_jump_cycles(g, v)) {
      if (jc.k < 2) continue;
      std::vector<Vertex> interior;
      for (Vertex w : jc.inside_region) {
        bool on_cycle = false;
        for (Vertex c : jc.cycle.vertices) on_cycle |= (c == w);
        if (!on_cycle) interior.push_back(w);
      }
      bool found = false;
      for (EdgeRef e : f_edges) {
        if (std::binary_search(interior.begin(), interior.end(), e.u) ||
            std::binary_search(interior.begin(), interior.end(), e.v))
          found = true;
      }
      if (!found)
        out.push_back("code=" + f.code.hash_hex() + " v=" + std::to_string(v) +
                      " jump k=" + std::to_string(jc.k) +
                      " inside region has no F-edge");
    }
  }
  if (sum_w > 2 * static_cast<long>(f.e4.size()))
    out.push_back("code=" + f.code.hash_hex() + " sum w = " + std::to_string(sum_w) +
                  " > 2|E4| = " + std::to_string(2 * f.e4.size()));
}

}  // namespace

VerificationReport run_full_verification(const VerifyOptions& opts) {
  using clock = std::chrono::steady_clock;
  EnumerationOptions eopts;
  eopts.max_classes = opts.max_classes;
  eopts.threads = opts.threads;
  auto layers = enumerate_up_to(opts.n_max, eopts);

  FamilyCatalog catalog;
  const bool with_family = opts.n_max >= 8;
  if (with_family) catalog = generate_family(opts.n_max, opts.threads);

  VerificationReport report;
  report.n_min = opts.n_min;
  report.n_max = opts.n_max;

  for (int n = 4; n <= opts.n_max; ++n) {
    auto t0 = clock::now();
    const auto& classes = layers[n];
    OrderRow row;
    row.order = n;
    row.classes_total = static_cast<int>(classes.size());
    row.theorem_asserted = n >= std::max(7, opts.n_min);

    std::vector<ClassFacts> facts(classes.size());
    parallel_for(classes.size(), opts.threads, [&](std::size_t i) {
      const PlaneTriangulation& g = classes[i];
      ClassFacts& f = facts[i];
      f.code = canonical_code(g);
      DegreeClasses dc = degree_classes(g);
      f.n_vge5 = static_cast<int>(dc.v_ge5.size());
      f.n_v3 = static_cast<int>(dc.vk(3).size());
      f.four_connected = is_k_connected(g, 4);
      if (f.four_connected) {
        f.e4 = contractible_edges(g, 4);
        if (n <= opts.oracle_check_max_order) {
          for (EdgeRef e : g.edges()) {
            bool fast = !in_separating_4cycle(g, e).has_value();
            bool oracle = is_contractible_oracle(g, e, 4);
            if (fast != oracle)
              f.oracle_mismatches.push_back("code=" + f.code.hash_hex() + " edge " +
                                            edge_str(e) + " fastpath=" +
                                            (fast ? "E4" : "blocked") + " oracle=" +
                                            (oracle ? "E4" : "blocked"));
          }
        }
        if (n >= 7 && n <= opts.weight_check_max_order)
          check_weights(g, f, f.weight_violations);
        if (n >= 8) f.reduction_member = is_member_by_reduction(g).member;
      }
      if (opts.check_bounds && n >= 5)
        f.e3 = static_cast<long>(contractible_edges(g, 3).size());
    });

    BoundCheck ae{"AE", 0, {}}, aekk{"AEKK", 0, {}}, mhv{"MHV", 0, {}},
        afmt{"AFMT_E3", 0, {}};
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const PlaneTriangulation& g = classes[i];
      const ClassFacts& f = facts[i];
      if (f.four_connected) ++row.classes_4connected;

      if (f.four_connected && n >= 7) {
        long e4 = static_cast<long>(f.e4.size());
        if (row.theorem_asserted && e4 < f.n_vge5 + 2)
          row.lower_bound_violations.push_back(
              "code=" + f.code.hash_hex() + " |E4|=" + std::to_string(e4) +
              " < |Vge5|+2=" + std::to_string(f.n_vge5 + 2));
        bool extremal = e4 == f.n_vge5 + 2;
        if (extremal) row.extremal_codes.push_back(f.code.hex());
        bool in_catalog = with_family && catalog.contains(n, f.code);
        if (f.reduction_member != in_catalog)
          row.reduction_mismatches.push_back(
              "code=" + f.code.hash_hex() + " reduction=" +
              (f.reduction_member ? "member" : "non-member") + " catalog=" +
              (in_catalog ? "member" : "non-member"));
      }

      if (opts.check_bounds) {
        if (f.four_connected) {
          long e4 = static_cast<long>(f.e4.size());
          ++ae.checked;
          if (e4 < f.n_vge5)
            ae.violations.push_back("code=" + f.code.hash_hex() + " |E4|=" +
                                    std::to_string(e4) + " < |Vge5|=" +
                                    std::to_string(f.n_vge5));
          ++aekk.checked;
          if (34 * e4 < g.edge_count() - 2 * n)
            aekk.violations.push_back("code=" + f.code.hash_hex() +
                                      " 34|E4| < |E|-2|G|");
          if (n >= 8) {
            ++mhv.checked;
            if (4 * e4 < 3 * n)
              mhv.violations.push_back("code=" + f.code.hash_hex() + " |E4|=" +
                                       std::to_string(e4) + " < (3/4)" +
                                       std::to_string(n));
          }
        }
        if (n >= 5 && f.e3 >= 0) {
          ++afmt.checked;
          if (2 * f.e3 < 2 * static_cast<long>(n) + f.n_v3)
            afmt.violations.push_back("code=" + f.code.hash_hex() + " |E3|=" +
                                      std::to_string(f.e3) + " < |G|+|V3|/2");
        }
      }

      for (const auto& s : f.weight_violations) row.weight_violations.push_back(s);
      for (const auto& s : f.oracle_mismatches)
        row.oracle_fastpath_mismatches.push_back(s);
    }

    if (with_family)
      for (const CanonicalCode& c : catalog.layer_codes(n))
        row.family_layer_codes.push_back(c.hex());
    std::sort(row.extremal_codes.begin(), row.extremal_codes.end());
    std::sort(row.family_layer_codes.begin(), row.family_layer_codes.end());
    if (n >= 7)
      row.equality_matches_family = row.extremal_codes == row.family_layer_codes;

    if (opts.check_bounds) row.bounds = {ae, aekk, mhv, afmt};
    row.runtime_ms =
        std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    report.rows[n] = std::move(row);
  }
  return report;
}

VerificationReport verify_main_theorem(int n_min, int n_max, int threads) {
  VerifyOptions opts;
  opts.n_min = n_min;
  opts.n_max = n_max;
  opts.threads = threads;
  opts.check_bounds = false;
  opts.oracle_check_max_order = 0;
  opts.weight_check_max_order = 0;
  return run_full_verification(opts);
}

VerificationReport verify_bounds(int n_max, int threads) {
  VerifyOptions opts;
  opts.n_max = n_max;
  opts.threads = threads;
  opts.check_bounds = true;
  opts.oracle_check_max_order = 0;
  opts.weight_check_max_order = 0;
  return run_full_verification(opts);
}

VerificationReport verify_weight_claims(int n_max, int threads) {
  VerifyOptions opts;
  opts.n_max = n_max;
  opts.threads = threads;
  opts.check_bounds = false;
  opts.oracle_check_max_order = 0;
  opts.weight_check_max_order = n_max;
  return run_full_verification(opts);
}

namespace {

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.size() >= prefix.size() && s.compare(0, prefix.size(), prefix) == 0;
}

std::vector<PlaneTriangulation> read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  int first = in.peek();
  if (first == '>') return read_planar_code(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return {PlaneTriangulation::from_text(buf.str())};
}

GraphAnalysis analyze_triangulation(const PlaneTriangulation& g, const std::string& source) {
  GraphAnalysis a;
  a.source = source;
  a.order = g.order();
  a.triangulation = true;
  for (Vertex v = 0; v < g.order(); ++v) a.degrees.push_back(g.degree(v));
  a.kappa = vertex_connectivity(g, 6);
  a.four_connected = a.kappa >= 4;
  a.code_hex = canonical_code(g).hex();
  DegreeClasses dc = degree_classes(g);
  a.v_ge5 = dc.v_ge5;
  if (a.four_connected) {
    a.e4 = contractible_edges(g, 4);
    for (EdgeRef e : g.edges()) {
      auto witness = in_separating_4cycle(g, e);
      bool fast = !witness.has_value();
      if (witness) a.witnesses.emplace_back(e, *witness);
      if (fast != is_contractible_oracle(g, e, 4)) a.oracle_agrees = false;
    }
    if (g.order() >= 7) a.extremal = is_extremal(g);
    if (g.order() >= 8) {
      ReductionResult r = is_member_by_reduction(g);
      a.family_member = r.member;
      a.membership_chain = std::move(r.chain);
    } else if (g.order() == 8) {
      a.family_member = true;
    }
  }
  return a;
}

}  // namespace

std::string GraphAnalysis::to_text() const {
  std::ostringstream out;
  out << "source: " << source << "\n";
  out << "order: " << order << "\n";
  out << "degrees:";
  for (int d : degrees) out << ' ' << d;
  out << "\n";
  out << "kappa: " << kappa << (kappa >= 6 ? " (>= 6)" : "") << "\n";
  if (!triangulation) {
    out << "not a triangulation; connectivity analysis only\n";
    return out.str();
  }
  out << "canonical code: " << code_hex << "\n";
  out << "V>=5 (" << v_ge5.size() << "):";
  for (Vertex v : v_ge5) out << ' ' << v;
  out << "\n";
  if (!four_connected) {
    out << "not 4-connected; E4 analysis skipped\n";
    return out.str();
  }
  out << "E4 (" << e4.size() << "):";
  for (EdgeRef e : e4) out << ' ' << edge_str(e);
  out << "\n";
  out << "non-contractible edges with separating 4-cycle witness:\n";
  for (const auto& [e, cyc] : witnesses) {
    out << "  " << edge_str(e) << ": cycle [";
    for (int i = 0; i < 4; ++i) out << (i ? " " : "") << cyc.vertices[i];
    out << "]\n";
  }
  if (extremal) out << "extremal (|E4| == |V>=5|+2): " << (*extremal ? "yes" : "no") << "\n";
  out << "family member: " << (family_member ? "yes" : "no") << "\n";
  if (family_member) {
    out << "membership chain (contractions to the base):";
    if (membership_chain.empty()) out << " [] (base)";
    for (const auto& [kind, code] : membership_chain)
      out << " contraction" << kind << "->" << code.hash_hex();
    out << "\n";
  }
  out << "oracle/fastpath agreement: " << (oracle_agrees ? "ok" : "MISMATCH") << "\n";
  return out.str();
}

std::vector<PlaneTriangulation> load_triangulations(const std::string& what) {
  if (what == "g0") return {g0()};
  if (starts_with(what, "dw:")) {
    int n = std::stoi(what.substr(3));
    return {double_wheel(n)};
  }
  if (starts_with(what, "dwm:"))
    throw ParseError("dwm:N is not a triangulation; only analyze accepts it");
  return read_graph_file(what);
}

std::vector<GraphAnalysis> analyze(const std::string& what) {
  if (starts_with(what, "dwm:")) {
    int n = std::stoi(what.substr(4));
    PlaneGraph g = double_wheel_minus(n);
    GraphAnalysis a;
    a.source = what;
    a.order = g.order();
    a.triangulation = false;
    for (Vertex v = 0; v < g.order(); ++v) a.degrees.push_back(g.degree(v));
    a.kappa = vertex_connectivity(g, 6);
    a.four_connected = a.kappa >= 4;
    return {a};
  }
  std::vector<GraphAnalysis> out;
  int index = 0;
  for (const PlaneTriangulation& g : load_triangulations(what)) {
    std::string source = what;
    if (index > 0) source += "#" + std::to_string(index);
    out.push_back(analyze_triangulation(g, source));
    ++index;
  }
  return out;
}

std::string to_dot(const PlaneGraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex w : g.rotation(v))
      if (v < w) out << "  " << v << " -- " << w << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace quadcontract
