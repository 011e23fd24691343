#ifndef CORONA_CLOSED_FORM_HPP
#define CORONA_CLOSED_FORM_HPP

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "corona/bignum.hpp"
#include "corona/errors.hpp"
#include "corona/rcg.hpp"

// Exact evaluation of the structural formulas for C_q(g). Everything returns an
// integer or a reduced rational except the clustering limit, which involves the
// Lerch transcendent.

namespace corona::closed {

namespace detail {

inline double log10_q1(const RcgParams& p) { return std::log10(p.q() + 1.0); }

inline void check_birth(const RcgParams& p, std::uint32_t birth) {
  if (birth > p.g())
    throw invalid_argument("birth generation " + std::to_string(birth) + " exceeds g = " +
                           std::to_string(p.g()));
}

inline BigInt exact_or_throw(const BigCount& c, const char* what) {
  if (!c.exact()) throw resource_limit_error(std::string(what) + " exceeds digit cap", c.digits(), 0);
  return *c.value;
}

}  // namespace detail

inline BigCount order(const RcgParams& p, const Limits& limits = {}) {
  const double l = std::log10(double(p.q())) + p.g() * detail::log10_q1(p);
  return bounded_count(l, limits, [&] { return p.q() * ipow(p.q() + 1, p.g()); });
}

/// Edge count by accumulating L_E(g) = (q(q-1)/2 + q) N(g-1) from M(0) = q(q-1)/2.
inline BigInt size_recursive(const RcgParams& p) {
  const std::uint64_t q = p.q();
  BigInt m = q * (q - 1) / 2;
  BigInt n = q;
  for (std::uint32_t step = 1; step <= p.g(); ++step) {
    m += (q * (q - 1) / 2 + q) * n;
    n *= q + 1;
  }
  return m;
}

/// M = q((q+1)^{g+1} - 2) / 2, cross-checked against the edge-increment recursion.
inline BigCount size(const RcgParams& p, const Limits& limits = {}) {
  const double l = std::log10(p.q() / 2.0) + (p.g() + 1) * detail::log10_q1(p) +
                   std::log10(1.0 - 2.0 * std::pow(p.q() + 1.0, -double(p.g() + 1)));
  return bounded_count(l, limits, [&] {
    BigInt m = p.q() * (ipow(p.q() + 1, p.g() + 1) - 2) / 2;
    if (m != size_recursive(p)) throw inconsistency_error("edge count closed form disagrees with recursion");
    return m;
  });
}

inline Rational average_degree(const RcgParams& p, const Limits& limits = {}) {
  const BigInt n = detail::exact_or_throw(order(p, limits), "order");
  const BigInt m = detail::exact_or_throw(size(p, limits), "size");
  Rational avg(BigInt(2 * m), n);
  if (avg != Rational(p.q() + 1) - 2 * rpow(p.q() + 1, -std::int64_t(p.g())))
    throw inconsistency_error("average degree disagrees with q+1-2(q+1)^-g");
  return avg;
}

/// All vertices born at one generation share a degree.
struct DegreeClass {
  std::uint64_t degree;
  BigInt count;
  std::uint32_t birth;

  friend bool operator==(const DegreeClass&, const DegreeClass&) = default;
};

inline std::uint64_t degree_of_birth(const RcgParams& p, std::uint32_t birth) {
  detail::check_birth(p, birth);
  const std::uint64_t q = p.q();
  if (birth == 0) return q * (p.g() + 1ull) - 1;
  return q * (p.g() - birth + 1ull);
}

inline BigInt count_of_birth(const RcgParams& p, std::uint32_t birth) {
  detail::check_birth(p, birth);
  if (birth == 0) return BigInt(p.q());
  return BigInt(p.q()) * p.q() * ipow(p.q() + 1, birth - 1);
}

/// Degree classes sorted by ascending degree (newest vertices first).
inline std::vector<DegreeClass> degree_multiset(const RcgParams& p) {
  std::vector<DegreeClass> classes;
  classes.reserve(p.g() + 1);
  for (std::uint32_t b = p.g(); b >= 1; --b)
    classes.push_back({degree_of_birth(p, b), count_of_birth(p, b), b});
  classes.push_back({degree_of_birth(p, 0), count_of_birth(p, 0), 0});
  return classes;
}

/// Fraction of vertices with degree >= `delta`, counted from the exact class sizes.
inline Rational cumulative_degree(const RcgParams& p, std::uint64_t delta) {
  if (delta == 0) throw invalid_argument("degree threshold must be positive");
  BigInt at_least = 0, total = 0;
  for (const auto& c : degree_multiset(p)) {
    total += c.count;
    if (c.degree >= delta) at_least += c.count;
  }
  return Rational(at_least, total);
}

/// Mean degree of the neighbors of a vertex born at `birth`.
inline Rational knn_exact(const RcgParams& p, std::uint32_t birth) {
  detail::check_birth(p, birth);
  const std::int64_t q = p.q();
  const std::int64_t g = p.g();
  if (birth == 0) {
    const std::int64_t d0 = q * (g + 1) - 1;
    return Rational(1, 2) * (Rational(d0 + q) + Rational(1 - q, d0));
  }
  const std::int64_t k = g - birth + 1;
  Rational head = Rational(q * (k + 1), 2);
  Rational tail = (Rational(1 + q) - 2 * rpow(q + 1, 1 - std::int64_t(birth))) / Rational(q * k);
  return head + tail;
}

/// Large-g approximation (q + delta)/2 + q/delta.
inline double knn_approx(std::uint64_t delta, std::uint32_t q) {
  if (delta == 0) throw invalid_argument("degree must be positive");
  const double d = static_cast<double>(delta);
  return 0.5 * (q + d) + q / d;
}

/// D(g) from D(0) = q(q-1)/2 via D(g) = (q+1)^2 D(g-1) + q^2 (2q(q+1)^{g-1} - 1)(q+1)^g / 2.
inline BigInt total_distance_recursive(const RcgParams& p) {
  const std::uint64_t q = p.q();
  BigInt d = q * (q - 1) / 2;
  for (std::uint32_t step = 1; step <= p.g(); ++step) {
    BigInt inc = q * q * (2 * q * ipow(q + 1, step - 1) - 1) * ipow(q + 1, step);
    d = (q + 1) * (q + 1) * d + inc / 2;
  }
  return d;
}

/// Sum of shortest-path lengths over unordered vertex pairs; closed form checked against
/// the recursion.
inline BigCount total_distance(const RcgParams& p, const Limits& limits = {}) {
  const double qd = p.q();
  const double l = std::log10(qd / 2.0) + 2.0 * p.g() * detail::log10_q1(p) +
                   std::log10(2.0 * p.g() * qd * qd / (qd + 1.0) + (qd - 2.0) +
                              std::pow(qd + 1.0, -double(p.g())));
  return bounded_count(l, limits, [&] {
    const std::uint64_t q = p.q();
    const std::int64_t g = p.g();
    Rational inner = Rational(2 * g * q * q) * rpow(q + 1, 2 * g - 1) + rpow(q + 1, g) +
                     Rational(std::int64_t(q) - 2) * rpow(q + 1, 2 * g);
    Rational d = Rational(q, 2) * inner;
    if (!is_integer(d)) throw inconsistency_error("distance closed form is not an integer");
    BigInt value = numerator(d);
    if (value != total_distance_recursive(p))
      throw inconsistency_error("distance closed form disagrees with recursion");
    return value;
  });
}

/// D / (N(N-1)/2).
inline Rational average_distance(const RcgParams& p, const Limits& limits = {}) {
  const BigInt d = detail::exact_or_throw(total_distance(p, limits), "total distance");
  const BigInt n = detail::exact_or_throw(order(p, limits), "order");
  return Rational(BigInt(2 * d), BigInt(n * (n - 1)));
}

/// Local clustering of a vertex born at `birth`; zero when its degree is below 2.
inline Rational vertex_clustering(const RcgParams& p, std::uint32_t birth) {
  detail::check_birth(p, birth);
  const std::int64_t q = p.q();
  const std::int64_t g = p.g();
  if (degree_of_birth(p, birth) < 2) return Rational(0);
  if (birth == 0) {
    const std::int64_t d0 = q * (g + 1);
    return Rational((q - 1) * (q - 2) + g * q * (q - 1), (d0 - 1) * (d0 - 2));
  }
  const std::int64_t k = g - birth + 1;
  return Rational(q - 1, k * q - 1);
}

/// Mean local clustering over all vertices, as the exact finite class sum. Class k
/// (degree kq) holds q^2 (q+1)^{g-k} vertices.
inline Rational global_clustering(const RcgParams& p) {
  const std::uint64_t q = p.q();
  const std::uint32_t g = p.g();
  Rational sum = 0;
  for (std::uint32_t k = 1; k <= g; ++k) {
    sum += Rational(std::int64_t(q) - 1, std::int64_t(k * q) - 1) * Rational(q * q) *
           Rational(ipow(q + 1, g - k));
  }
  sum += Rational(q) * vertex_clustering(p, 0);
  return sum / Rational(q * ipow(q + 1, g));
}

/// Lerch transcendent Phi(z, 1, a) = sum_{k>=0} z^k / (k + a), absolute error <= 1e-12.
inline double lerch_phi(double z, double a) {
  if (!(z >= 0.0 && z < 1.0)) throw domain_error("lerch_phi needs 0 <= z < 1");
  if (!(a > 0.0)) throw domain_error("lerch_phi needs a > 0");
  constexpr double kTolerance = 1e-12;
  double sum = 0.0;
  double zk = 1.0;
  for (std::uint64_t k = 0;; ++k) {
    sum += zk / (static_cast<double>(k) + a);
    zk *= z;
    const double tail = zk / ((static_cast<double>(k) + 1.0 + a) * (1.0 - z));
    if (tail < kTolerance) break;
  }
  return sum;
}

/// Large-g limit of the network clustering coefficient.
inline double asymptotic_clustering(std::uint32_t q) {
  if (q < 2) throw invalid_argument("q must be at least 2");
  const double qd = q;
  return (qd - 1.0) / (qd + 1.0) * lerch_phi(1.0 / (qd + 1.0), (qd - 1.0) / qd);
}

/// N_tr(g) = ((q+1)^{q-1})^{N(g-1)} N_tr(g-1) from Cayley's q^{q-2}.
inline BigInt spanning_trees_recursive(const RcgParams& p) {
  const std::uint64_t q = p.q();
  BigInt trees = ipow(q, q - 2);
  std::uint64_t n_prev = q;
  for (std::uint32_t step = 1; step <= p.g(); ++step) {
    trees *= ipow(q + 1, (q - 1) * n_prev);
    n_prev *= q + 1;
  }
  return trees;
}

inline double spanning_trees_log10(const RcgParams& p) {
  const double q = p.q();
  return (q - 2) * std::log10(q) + (q - 1) * (std::pow(q + 1, p.g()) - 1) * std::log10(q + 1);
}

/// q^{q-2} (q+1)^{(q-1)((q+1)^g - 1)}, checked against the per-generation recursion.
inline BigCount spanning_trees(const RcgParams& p, const Limits& limits = {}) {
  return bounded_count(spanning_trees_log10(p), limits, [&] {
    const std::uint64_t q = p.q();
    const std::uint64_t q1g = ipow(q + 1, p.g()).convert_to<std::uint64_t>();
    BigInt trees = ipow(q, q - 2) * ipow(q + 1, (q - 1) * (q1g - 1));
    if (trees != spanning_trees_recursive(p))
      throw inconsistency_error("spanning-tree closed form disagrees with recursion");
    return trees;
  });
}

/// R(g+1) = q^2 (2q(q+1)^g - 1)(q+1)^g + (q+1)^2 R(g), R(0) = q - 1.
inline BigInt kirchhoff_recursive(const RcgParams& p) {
  const std::uint64_t q = p.q();
  BigInt r = q - 1;
  for (std::uint32_t step = 0; step < p.g(); ++step) {
    const BigInt q1 = ipow(q + 1, step);
    r = q * q * (2 * q * q1 - 1) * q1 + (q + 1) * (q + 1) * r;
  }
  return r;
}

/// Kirchhoff index (q^3(2g+1) - 2q - 1)(q+1)^{2g-2} + q(q+1)^{g-1}.
inline Rational kirchhoff(const RcgParams& p) {
  const std::int64_t q = p.q();
  const std::int64_t g = p.g();
  Rational r = Rational(q * q * q * (2 * g + 1) - 2 * q - 1) * rpow(q + 1, 2 * g - 2) +
               Rational(q) * rpow(q + 1, g - 1);
  if (r != Rational(kirchhoff_recursive(p)))
    throw inconsistency_error("Kirchhoff closed form disagrees with recursion");
  return r;
}

}  // namespace corona::closed

#endif  // CORONA_CLOSED_FORM_HPP
