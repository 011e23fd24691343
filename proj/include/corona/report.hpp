#ifndef CORONA_REPORT_HPP
#define CORONA_REPORT_HPP

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "corona/bignum.hpp"
#include "corona/closed_form.hpp"
#include "corona/rcg.hpp"
#include "corona/spectra.hpp"

namespace corona {

/// Every closed-form quantity for one (q, g).
struct StructuralReport {
  RcgParams params;
  BigCount order;
  BigCount size;
  Rational average_degree;
  std::vector<closed::DegreeClass> degree_classes;
  BigCount total_distance;
  Rational average_distance;
  Rational global_clustering;
  double asymptotic_clustering;
  BigCount spanning_trees;
  Rational kirchhoff;
};

inline StructuralReport analyze(const RcgParams& p, const Limits& limits = {}) {
  return StructuralReport{p,
                          closed::order(p, limits),
                          closed::size(p, limits),
                          closed::average_degree(p, limits),
                          closed::degree_multiset(p),
                          closed::total_distance(p, limits),
                          closed::average_distance(p, limits),
                          closed::global_clustering(p),
                          closed::asymptotic_clustering(p.q()),
                          closed::spanning_trees(p, limits),
                          closed::kirchhoff(p)};
}

/// Twelve significant digits, the fixed float format for tabular output.
inline std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline nlohmann::json rational_json(const Rational& r) {
  return {{"num", numerator(r).str()}, {"den", denominator(r).str()}};
}

inline nlohmann::json count_json(const BigCount& c) {
  nlohmann::json j = {{"log10", c.log10}};
  if (c.exact()) j["digits"] = c.value->str();
  return j;
}

namespace detail {
inline std::string exact_string(const BigCount& c) {
  return c.exact() ? c.value->str() : "1e" + format_real(c.log10);
}
}  // namespace detail

inline nlohmann::json to_json(const StructuralReport& r) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : r.degree_classes)
    classes.push_back({{"degree", c.degree}, {"count", c.count.str()}});
  return {{"q", r.params.q()},
          {"g", r.params.g()},
          {"order", detail::exact_string(r.order)},
          {"size", detail::exact_string(r.size)},
          {"average_degree", rational_json(r.average_degree)},
          {"degree_classes", std::move(classes)},
          {"total_distance", detail::exact_string(r.total_distance)},
          {"average_distance", rational_json(r.average_distance)},
          {"global_clustering", rational_json(r.global_clustering)},
          {"asymptotic_clustering", r.asymptotic_clustering},
          {"spanning_trees", count_json(r.spanning_trees)},
          {"kirchhoff", rational_json(r.kirchhoff)}};
}

/// Two-column "key,value" CSV; rationals as num/den.
inline void write_csv(std::ostream& out, const StructuralReport& r) {
  out << "key,value\n"
      << "q," << r.params.q() << '\n'
      << "g," << r.params.g() << '\n'
      << "order," << detail::exact_string(r.order) << '\n'
      << "size," << detail::exact_string(r.size) << '\n'
      << "average_degree," << to_string(r.average_degree) << '\n';
  for (const auto& c : r.degree_classes) out << "degree_count_" << c.degree << ',' << c.count << '\n';
  out << "total_distance," << detail::exact_string(r.total_distance) << '\n'
      << "average_distance," << to_string(r.average_distance) << '\n'
      << "global_clustering," << to_string(r.global_clustering) << '\n'
      << "asymptotic_clustering," << format_real(r.asymptotic_clustering) << '\n';
  if (r.spanning_trees.exact()) out << "spanning_trees," << *r.spanning_trees.value << '\n';
  out << "spanning_trees_log10," << format_real(r.spanning_trees.log10) << '\n'
      << "kirchhoff," << to_string(r.kirchhoff) << '\n';
}

inline nlohmann::json to_json(const spectra::SpectrumMultiset& s) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& e : s.entries) list.push_back({{"value", e.value}, {"multiplicity", e.multiplicity}});
  return list;
}

inline void write_csv(std::ostream& out, const spectra::SpectrumMultiset& s) {
  out << "value,multiplicity\n";
  for (const auto& e : s.entries) out << format_real(e.value) << ',' << e.multiplicity << '\n';
}

}  // namespace corona

#endif  // CORONA_REPORT_HPP
