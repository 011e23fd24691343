#ifndef CORONA_VERIFY_HPP
#define CORONA_VERIFY_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "corona/bignum.hpp"
#include "corona/closed_form.hpp"
#include "corona/oracle.hpp"
#include "corona/rcg.hpp"
#include "corona/spectra.hpp"

namespace corona {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

/// The formula implementations under test. Defaults are the library's; tests swap
/// individual entries for perturbed versions to confirm the checks notice.
struct FormulaSet {
  std::function<BigCount(const RcgParams&)> order = [](const RcgParams& p) { return closed::order(p); };
  std::function<BigCount(const RcgParams&)> size = [](const RcgParams& p) { return closed::size(p); };
  std::function<std::vector<closed::DegreeClass>(const RcgParams&)> degree_multiset =
      closed::degree_multiset;
  std::function<Rational(const RcgParams&, std::uint64_t)> cumulative_degree = closed::cumulative_degree;
  std::function<Rational(const RcgParams&, std::uint32_t)> knn = closed::knn_exact;
  std::function<BigCount(const RcgParams&)> total_distance = [](const RcgParams& p) {
    return closed::total_distance(p);
  };
  std::function<Rational(const RcgParams&)> average_distance = [](const RcgParams& p) {
    return closed::average_distance(p);
  };
  std::function<Rational(const RcgParams&, std::uint32_t)> vertex_clustering = closed::vertex_clustering;
  std::function<Rational(const RcgParams&)> global_clustering = closed::global_clustering;
  std::function<spectra::SpectrumMultiset(const RcgParams&)> adjacency_spectrum =
      [](const RcgParams& p) { return spectra::adjacency_spectrum(p); };
  std::function<spectra::SpectrumMultiset(const RcgParams&)> laplacian_spectrum =
      [](const RcgParams& p) { return spectra::laplacian_spectrum(p); };
  std::function<BigCount(const RcgParams&)> nonzero_product = [](const RcgParams& p) {
    return spectra::nonzero_product(p);
  };
  std::function<BigCount(const RcgParams&)> spanning_trees_closed = [](const RcgParams& p) {
    return closed::spanning_trees(p);
  };
  std::function<BigCount(const RcgParams&)> spanning_trees_spectral = [](const RcgParams& p) {
    return spectra::spanning_trees(p);
  };
  std::function<Rational(const RcgParams&)> kirchhoff_closed = closed::kirchhoff;
  std::function<Rational(const RcgParams&)> kirchhoff_spectral = [](const RcgParams& p) {
    return spectra::kirchhoff(p);
  };
};

struct VerifyTolerances {
  double spectrum = 1e-8;
  double relative = 1e-6;
};

namespace detail {

inline bool close_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

inline std::string count_str(const BigCount& c) { return c.exact() ? c.value->str() : "(inexact)"; }

inline bool compare_spectrum(const spectra::SpectrumMultiset& recursive,
                             const std::vector<double>& dense, double tol, std::string& detail) {
  const auto expanded = recursive.expanded();
  if (expanded.size() != dense.size()) {
    detail = "size " + std::to_string(expanded.size()) + " vs " + std::to_string(dense.size());
    return false;
  }
  double worst = 0;
  for (std::size_t i = 0; i < dense.size(); ++i) worst = std::max(worst, std::abs(expanded[i] - dense[i]));
  std::ostringstream os;
  os << "max deviation " << worst;
  detail = os.str();
  return worst <= tol;
}

}  // namespace detail

/// Builds C_q(g), measures it with the oracle, and checks every formula against it.
inline std::vector<CheckResult> run_verification(const RcgParams& p, const FormulaSet& f = {},
                                                 const VerifyTolerances& tol = {}) {
  const std::uint64_t n = rcg_order_u64(p);
  if (n > oracle::kMatrixTreeDimensionLimit)
    throw resource_limit_error("verification is limited to desk-scale graphs", n,
                               oracle::kMatrixTreeDimensionLimit);

  const CoronaGraph cg = build_rcg(p);
  const Graph& graph = cg.graph;
  const oracle::OracleReport measured = oracle::measure(cg);
  std::vector<CheckResult> results;
  auto record = [&](std::string name, bool ok, std::string detail) {
    results.push_back({std::move(name), ok, std::move(detail)});
  };
  // A throwing formula counts as a failed check rather than aborting the run.
  auto check = [&](std::string name, auto&& body) {
    try {
      std::string detail;
      bool ok = body(detail);
      record(std::move(name), ok, std::move(detail));
    } catch (const std::exception& e) {
      record(std::move(name), false, std::string("threw: ") + e.what());
    }
  };

  check("order", [&](std::string& d) {
    const auto v = f.order(p);
    d = detail::count_str(v) + " vs " + std::to_string(graph.vertex_count());
    return v.exact() && *v.value == graph.vertex_count();
  });
  check("size", [&](std::string& d) {
    const auto v = f.size(p);
    d = detail::count_str(v) + " vs " + std::to_string(graph.edge_count());
    return v.exact() && *v.value == graph.edge_count();
  });
  check("degree_histogram", [&](std::string& d) {
    std::map<std::uint64_t, std::uint64_t> predicted;
    for (const auto& c : f.degree_multiset(p)) predicted[c.degree] += c.count.convert_to<std::uint64_t>();
    d = std::to_string(predicted.size()) + " classes";
    return predicted == measured.degree_histogram;
  });
  check("cumulative_degree", [&](std::string& d) {
    const std::uint64_t max_degree = measured.degree_histogram.rbegin()->first;
    for (std::uint64_t delta = 1; delta <= max_degree + 1; ++delta) {
      std::uint64_t at_least = 0;
      for (auto [deg, cnt] : measured.degree_histogram)
        if (deg >= delta) at_least += cnt;
      const Rational expected(static_cast<std::int64_t>(at_least), static_cast<std::int64_t>(n));
      if (f.cumulative_degree(p, delta) != expected) {
        d = "mismatch at degree " + std::to_string(delta);
        return false;
      }
    }
    d = "degrees 1.." + std::to_string(max_degree + 1);
    return true;
  });
  check("knn_by_class", [&](std::string& d) {
    for (const auto& [birth, value] : measured.mean_neighbor_degree_by_class) {
      if (f.knn(p, birth) != value) {
        d = "birth " + std::to_string(birth) + ": " + to_string(f.knn(p, birth)) + " vs " + to_string(value);
        return false;
      }
    }
    d = std::to_string(measured.mean_neighbor_degree_by_class.size()) + " classes";
    return true;
  });
  check("total_distance", [&](std::string& d) {
    const auto v = f.total_distance(p);
    d = detail::count_str(v) + " vs " + std::to_string(measured.total_distance);
    return v.exact() && *v.value == measured.total_distance;
  });
  check("average_distance", [&](std::string& d) {
    const Rational expected(BigInt(2 * measured.total_distance), BigInt(BigInt(n) * (n - 1)));
    const Rational v = f.average_distance(p);
    d = to_string(v) + " vs " + to_string(expected);
    return v == expected;
  });
  check("local_clustering", [&](std::string& d) {
    for (Vertex v = 0; v < n; ++v) {
      if (f.vertex_clustering(p, cg.birth[v]) != measured.local_clustering_by_vertex[v]) {
        d = "vertex " + std::to_string(v);
        return false;
      }
    }
    d = "all " + std::to_string(n) + " vertices";
    return true;
  });
  check("global_clustering", [&](std::string& d) {
    Rational mean = 0;
    for (const auto& c : measured.local_clustering_by_vertex) mean += c;
    mean /= Rational(static_cast<std::int64_t>(n));
    const Rational v = f.global_clustering(p);
    d = to_string(v) + " vs " + to_string(mean);
    return v == mean;
  });

  spectra::SpectrumMultiset adj{spectra::SpectrumKind::adjacency, p, {}};
  spectra::SpectrumMultiset lap{spectra::SpectrumKind::laplacian, p, {}};
  check("adjacency_spectrum", [&](std::string& d) {
    adj = f.adjacency_spectrum(p);
    return detail::compare_spectrum(adj, measured.adjacency_eigenvalues, tol.spectrum, d);
  });
  check("laplacian_spectrum", [&](std::string& d) {
    lap = f.laplacian_spectrum(p);
    return detail::compare_spectrum(lap, measured.laplacian_eigenvalues, tol.spectrum, d);
  });
  check("laplacian_q_plus_1_multiplicity", [&](std::string& d) {
    const double target = p.q() + 1.0;
    std::uint64_t dense = 0;
    for (double x : measured.laplacian_eigenvalues)
      if (std::abs(x - target) <= tol.spectrum) ++dense;
    const std::uint64_t rec = lap.multiplicity_of(target, tol.spectrum);
    const std::uint64_t expected = p.g() == 0 ? 0 : (p.q() - 1) * n / (p.q() + 1) + 1;
    d = std::to_string(rec) + " recursive, " + std::to_string(dense) + " dense, " +
        std::to_string(expected) + " expected";
    return rec == dense && rec == expected;
  });
  check("spectral_traces", [&](std::string& d) {
    const double two_m = 2.0 * graph.edge_count();
    const double scale = 1e-9 * double(n);
    const double a1 = adj.power_sum(1), a2 = adj.power_sum(2), l1 = lap.power_sum(1);
    std::ostringstream os;
    os << "tr A=" << a1 << " tr A^2=" << a2 << " tr L=" << l1 << " 2M=" << two_m;
    d = os.str();
    return std::abs(a1) <= scale && std::abs(a2 - two_m) <= scale && std::abs(l1 - two_m) <= scale &&
           lap.multiplicity_of(0.0, 1e-9) == 1;
  });
  check("nonzero_product", [&](std::string& d) {
    const auto v = f.nonzero_product(p);
    double log_dense = 0;
    for (double x : measured.laplacian_eigenvalues)
      if (std::abs(x) > 1e-8) log_dense += std::log10(x);
    const double log_exact = v.exact() ? log10_of(*v.value) : v.log10;
    const double rel = std::abs(std::pow(10.0, log_exact - log_dense) - 1.0);
    std::ostringstream os;
    os << "relative deviation " << rel;
    d = os.str();
    return v.exact() && rel <= tol.relative;
  });
  check("spanning_trees", [&](std::string& d) {
    const auto closed_count = f.spanning_trees_closed(p);
    const auto spectral_count = f.spanning_trees_spectral(p);
    d = detail::count_str(closed_count) + " / " + detail::count_str(spectral_count) + " / " +
        measured.spanning_tree_count.str();
    return closed_count.exact() && spectral_count.exact() && *closed_count.value == *spectral_count.value &&
           *closed_count.value == measured.spanning_tree_count;
  });
  check("kirchhoff", [&](std::string& d) {
    const Rational closed_value = f.kirchhoff_closed(p);
    const Rational spectral_value = f.kirchhoff_spectral(p);
    std::ostringstream os;
    os << to_string(closed_value) << " / " << to_string(spectral_value) << " / " << measured.resistance_sum;
    d = os.str();
    return closed_value == spectral_value &&
           detail::close_rel(to_double(closed_value), measured.resistance_sum, tol.relative);
  });
  check("resistance_paths", [&](std::string& d) {
    const double spectral = oracle::resistance_sum_from_spectrum(measured.laplacian_eigenvalues);
    std::ostringstream os;
    os << measured.resistance_sum << " vs " << spectral;
    d = os.str();
    return detail::close_rel(measured.resistance_sum, spectral, tol.relative);
  });
  return results;
}

inline bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

}  // namespace corona

#endif  // CORONA_VERIFY_HPP
