#ifndef CORONA_CLI_HPP
#define CORONA_CLI_HPP

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "corona/closed_form.hpp"
#include "corona/errors.hpp"
#include "corona/io.hpp"
#include "corona/rcg.hpp"
#include "corona/report.hpp"
#include "corona/spectra.hpp"
#include "corona/verify.hpp"

namespace corona::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kResourceLimit = 2,
  kVerificationFailed = 3,
  kNumerical = 4,
};

inline constexpr const char* kBudgetEnv = "CORONA_VERTEX_BUDGET";

/// Vertex budget from the environment, or the default.
inline std::uint64_t vertex_budget_from_env() {
  const char* raw = std::getenv(kBudgetEnv);
  if (raw == nullptr || *raw == '\0') return BuildOptions{}.vertex_budget;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(raw, &used);
    if (used != std::string(raw).size()) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw invalid_argument(std::string(kBudgetEnv) + " must be a nonnegative integer");
  }
}

/// Emits (q, g, value) rows for one quantity.
inline void write_curve(std::ostream& out, const std::string& quantity,
                        const std::vector<std::uint32_t>& qs, std::uint32_t g_max) {
  out << "q,g,value\n";
  for (std::uint32_t q : qs) {
    for (std::uint32_t g = 0; g <= g_max; ++g) {
      const RcgParams p(q, g);
      double value = 0;
      if (quantity == "clustering") {
        value = to_double(closed::global_clustering(p));
      } else if (quantity == "avg-distance") {
        value = to_double(closed::average_distance(p));
      } else if (quantity == "kirchhoff") {
        value = to_double(closed::kirchhoff(p));
      } else {
        value = to_double(closed::average_degree(p));
      }
      out << q << ',' << g << ',' << format_real(value) << '\n';
    }
  }
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Recursive corona graphs: construction, exact formulas, spectra and checks"};
  app.require_subcommand(1);

  std::uint32_t q = 2;
  std::uint32_t g = 0;
  std::string output;
  std::optional<std::uint64_t> budget_flag;
  std::uint64_t digit_cap = Limits{}.digit_cap;

  app.add_option("-o,--output", output, "Write to this file instead of stdout");
  app.add_option("--vertex-budget", budget_flag, "Vertex budget (overrides " + std::string(kBudgetEnv) + ")");
  app.add_option("--digit-cap", digit_cap, "Largest exact integer, in decimal digits");

  auto add_qg = [&](CLI::App* sub) {
    sub->add_option("--q", q, "Clique size q >= 2")->required()->check(CLI::Range(2u, 100000u));
    sub->add_option("--g", g, "Generation g >= 0")->required()->check(CLI::Range(0u, 1000000u));
  };

  auto* generate = app.add_subcommand("generate", "Write the explicit graph");
  add_qg(generate);
  std::string format = "edgelist";
  generate->add_option("--format", format)->check(CLI::IsMember({"edgelist", "dot", "json"}));

  auto* analyze_cmd = app.add_subcommand("analyze", "Closed-form structural report");
  add_qg(analyze_cmd);
  bool as_json = false, as_csv = false;
  auto* json_flag = analyze_cmd->add_flag("--json", as_json, "JSON output (default)");
  analyze_cmd->add_flag("--csv", as_csv, "CSV output")->excludes(json_flag);

  auto* spectrum = app.add_subcommand("spectrum", "Recursive eigenvalue multiset");
  add_qg(spectrum);
  std::string matrix = "adjacency";
  spectrum->add_option("--matrix", matrix)->check(CLI::IsMember({"adjacency", "laplacian"}));
  std::string spectrum_format = "json";
  spectrum->add_option("--format", spectrum_format)->check(CLI::IsMember({"json", "csv"}));

  auto* verify = app.add_subcommand("verify", "Check every formula against brute force");
  add_qg(verify);

  auto* curve = app.add_subcommand("curve", "CSV growth curves (q, g, value)");
  std::string quantity;
  std::vector<std::uint32_t> q_list;
  std::uint32_t g_max = 0;
  curve->add_option("--quantity", quantity)
      ->required()
      ->check(CLI::IsMember({"clustering", "avg-distance", "kirchhoff", "avg-degree"}));
  curve->add_option("--q-list", q_list)->required()->delimiter(',')->check(CLI::Range(2u, 100000u));
  curve->add_option("--g-max", g_max)->required()->check(CLI::Range(0u, 10000u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  std::ofstream file;
  if (!output.empty()) {
    file.open(output);
    if (!file) {
      err << "error: cannot open " << output << '\n';
      return kUsage;
    }
  }
  std::ostream& sink = output.empty() ? out : file;

  try {
    const std::uint64_t vertex_budget = budget_flag ? *budget_flag : vertex_budget_from_env();
    const Limits limits{digit_cap};

    if (generate->parsed()) {
      const CoronaGraph cg = build_rcg(RcgParams(q, g), BuildOptions{vertex_budget});
      if (format == "edgelist") {
        io::write_edge_list(sink, cg);
      } else if (format == "dot") {
        io::write_dot(sink, cg);
      } else {
        sink << io::graph_to_json(cg).dump() << '\n';
      }
    } else if (analyze_cmd->parsed()) {
      const StructuralReport report = analyze(RcgParams(q, g), limits);
      if (as_csv) {
        write_csv(sink, report);
      } else {
        sink << to_json(report).dump(2) << '\n';
      }
    } else if (spectrum->parsed()) {
      const spectra::SpectrumOptions options{vertex_budget};
      const RcgParams p(q, g);
      const auto s = matrix == "adjacency" ? spectra::adjacency_spectrum(p, options)
                                           : spectra::laplacian_spectrum(p, options);
      if (spectrum_format == "csv") {
        write_csv(sink, s);
      } else {
        sink << to_json(s).dump(2) << '\n';
      }
    } else if (verify->parsed()) {
      const RcgParams p(q, g);
      if (rcg_order_u64(p) > vertex_budget)
        throw resource_limit_error("graph exceeds the vertex budget", rcg_order_u64(p), vertex_budget);
      const auto results = run_verification(p);
      for (const auto& r : results)
        sink << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(34) << r.name << r.detail << '\n';
      const bool ok = all_passed(results);
      sink << (ok ? "all checks passed" : "verification FAILED") << " for C_" << q << '(' << g << ")\n";
      return ok ? kSuccess : kVerificationFailed;
    } else if (curve->parsed()) {
      write_curve(sink, quantity, q_list, g_max);
    }
  } catch (const resource_limit_error& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const inconsistency_error& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const numerical_error& e) {
    err << "numerical error: " << e.what() << '\n';
    return kNumerical;
  } catch (const domain_error& e) {
    err << "numerical error: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kSuccess;
}

}  // namespace corona::cli

#endif  // CORONA_CLI_HPP
