#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "quadcontract/constructions.hpp"
#include "quadcontract/enumeration.hpp"
#include "quadcontract/family.hpp"
#include "quadcontract/verifier.hpp"

using namespace quadcontract;

int main(int argc, char** argv) {
  CLI::App app{"quadcontract: exhaustive verification of 4-contractible-edge "
               "bounds on 4-connected plane triangulations"};
  app.require_subcommand(1);

  // enumerate
  int enum_order = 8;
  std::string enum_out;
  bool enum_four_only = false;
  auto* cmd_enum = app.add_subcommand("enumerate", "enumerate plane triangulation classes");
  cmd_enum->add_option("--order", enum_order, "order to enumerate")->required();
  cmd_enum->add_option("--out", enum_out, "planar-code output file (default stdout)");
  cmd_enum->add_flag("--four-connected", enum_four_only, "keep only 4-connected classes");

  // verify
  VerifyOptions vopts;
  std::string verify_json, verify_csv;
  auto* cmd_verify = app.add_subcommand("verify", "run the full verification sweep");
  cmd_verify->add_option("--max-order", vopts.n_max, "largest order to verify")->required();
  cmd_verify->add_option("--min-order", vopts.n_min, "smallest asserted order (default 7)");
  cmd_verify->add_option("--json", verify_json, "write the JSON report here");
  cmd_verify->add_option("--csv", verify_csv, "write the CSV summary here");
  cmd_verify->add_option("--threads", vopts.threads, "worker threads (default: hardware)");
  cmd_verify->add_option("--oracle-max-order", vopts.oracle_check_max_order,
                         "fast-path vs oracle cross-check bound (default 10)");
  cmd_verify->add_option("--weights-max-order", vopts.weight_check_max_order,
                         "weight-claim check bound (default 10)");

  // family
  int family_max = 10;
  std::string family_out;
  int family_threads = 0;
  auto* cmd_family = app.add_subcommand("family", "generate the extremal family catalog");
  cmd_family->add_option("--max-order", family_max, "largest order to generate")->required();
  cmd_family->add_option("--out", family_out, "directory for planar-code layers + index");
  cmd_family->add_option("--threads", family_threads, "worker threads");

  // analyze
  std::string analyze_spec, analyze_dot;
  auto* cmd_analyze = app.add_subcommand("analyze", "per-graph report (dw:N, dwm:N, g0, or file)");
  cmd_analyze->add_option("spec", analyze_spec, "graph to analyze")->required();
  cmd_analyze->add_option("--dot", analyze_dot, "also write a DOT rendering here");

  // canon
  std::string canon_file;
  auto* cmd_canon = app.add_subcommand("canon", "print canonical codes of graphs in a file");
  cmd_canon->add_option("file", canon_file, "planar-code or rotation text file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_enum) {
      auto classes = enumerate_triangulations(enum_order);
      if (enum_four_only) classes = filter_4connected(classes);
      std::cerr << "order " << enum_order << ": " << classes.size() << " classes\n";
      if (enum_out.empty()) {
        write_planar_code(std::cout, classes);
      } else {
        std::ofstream out(enum_out, std::ios::binary);
        if (!out) throw ParseError("cannot open " + enum_out);
        write_planar_code(out, classes);
      }
      return 0;
    }

    if (*cmd_verify) {
      VerificationReport report = run_full_verification(vopts);
      if (!verify_json.empty()) {
        std::ofstream out(verify_json);
        if (!out) throw ParseError("cannot open " + verify_json);
        out << report.to_json().dump(2) << "\n";
      }
      if (!verify_csv.empty()) {
        std::ofstream out(verify_csv);
        if (!out) throw ParseError("cannot open " + verify_csv);
        out << report.to_csv();
      }
      for (const auto& [order, row] : report.rows)
        std::cout << "order " << order << ": " << row.classes_total << " classes, "
                  << row.classes_4connected << " four-connected, "
                  << (row.pass() ? "PASS" : "FAIL") << "\n";
      std::cout << "overall: "
                << (report.exit_code() == 0
                        ? "PASS"
                        : report.exit_code() == 2 ? "VIOLATION" : "MISMATCH")
                << "\n";
      return report.exit_code();
    }

    if (*cmd_family) {
      FamilyCatalog catalog = generate_family(family_max, family_threads);
      for (const auto& [order, layer] : catalog.layers)
        std::cout << "order " << order << ": " << layer.size() << " members\n";
      if (!family_out.empty()) export_catalog(catalog, family_out);
      return 0;
    }

    if (*cmd_analyze) {
      auto analyses = analyze(analyze_spec);
      for (const auto& a : analyses) std::cout << a.to_text() << "\n";
      if (!analyze_dot.empty()) {
        std::ofstream out(analyze_dot);
        if (!out) throw ParseError("cannot open " + analyze_dot);
        if (analyze_spec.rfind("dwm:", 0) == 0) {
          out << to_dot(double_wheel_minus(std::stoi(analyze_spec.substr(4))));
        } else {
          auto graphs = load_triangulations(analyze_spec);
          for (const auto& g : graphs) out << to_dot(g);
        }
      }
      return 0;
    }

    if (*cmd_canon) {
      for (const auto& g : load_triangulations(canon_file))
        std::cout << canonical_code(g).hex() << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
