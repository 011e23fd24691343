#ifndef CORONA_SPECTRA_HPP
#define CORONA_SPECTRA_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "corona/bignum.hpp"
#include "corona/errors.hpp"
#include "corona/rcg.hpp"

namespace corona::spectra {

enum class SpectrumKind { adjacency, laplacian };

inline std::string_view to_string(SpectrumKind kind) {
  return kind == SpectrumKind::adjacency ? "adjacency" : "laplacian";
}

/// The two eigenvalues of C_q(g) generated by one eigenvalue of C_q(g-1).
struct EigenPair {
  double parent;
  double plus_child;
  double minus_child;
  SpectrumKind kind;
};

/// Roots of x^2 - s x + c with s, c given by the parent eigenvalue:
///   adjacency: s = parent + q - 1, c = parent (q - 1) - q
///   laplacian: s = parent + q + 1, c = parent
/// The smaller-magnitude root comes from c / (larger root) to avoid cancellation.
inline EigenPair child_pair(double parent, std::uint32_t q, SpectrumKind kind) {
  const double qd = q;
  double s = 0, c = 0, disc = 0;
  if (kind == SpectrumKind::adjacency) {
    s = parent + qd - 1.0;
    c = parent * (qd - 1.0) - qd;
    disc = (qd - 1.0 - parent) * (qd - 1.0 - parent) + 4.0 * qd;
  } else {
    if (parent < 0.0) throw domain_error("Laplacian eigenvalues are nonnegative");
    s = parent + qd + 1.0;
    c = parent;
    disc = (parent + qd - 1.0) * (parent + qd - 1.0) + 4.0 * qd;
  }
  const double root = std::sqrt(disc);
  const double big = 0.5 * (s + std::copysign(root, s));
  const double small = c / big;
  return EigenPair{parent, std::max(big, small), std::min(big, small), kind};
}

struct SpectrumEntry {
  double value;
  std::uint64_t multiplicity;
};

/// Distinct eigenvalues (descending) with exact multiplicities.
struct SpectrumMultiset {
  SpectrumKind kind;
  RcgParams params;
  std::vector<SpectrumEntry> entries;

  std::uint64_t total_multiplicity() const {
    std::uint64_t total = 0;
    for (const auto& e : entries) total += e.multiplicity;
    return total;
  }

  /// sum of value^power * multiplicity
  double power_sum(int power) const {
    double sum = 0;
    for (const auto& e : entries) sum += std::pow(e.value, power) * double(e.multiplicity);
    return sum;
  }

  std::uint64_t multiplicity_of(double value, double tol = 1e-9) const {
    for (const auto& e : entries)
      if (std::abs(e.value - value) <= tol) return e.multiplicity;
    return 0;
  }

  /// Every eigenvalue repeated by multiplicity, descending.
  std::vector<double> expanded() const {
    std::vector<double> out;
    out.reserve(total_multiplicity());
    for (const auto& e : entries) out.insert(out.end(), e.multiplicity, e.value);
    return out;
  }
};

struct SpectrumOptions {
  std::uint64_t eigenvalue_budget = 1'000'000;
  double merge_tolerance = 1e-10;
};

namespace detail {

/// Sorts descending and merges values within `tol`. `exact` is the eigenvalue added
/// symbolically each generation; anything within `tol` of it snaps onto it.
inline void normalize(std::vector<SpectrumEntry>& entries, double exact, double tol) {
  for (auto& e : entries)
    if (std::abs(e.value - exact) <= tol) e.value = exact;
  std::sort(entries.begin(), entries.end(),
            [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.value > b.value; });
  std::vector<SpectrumEntry> merged;
  merged.reserve(entries.size());
  for (const auto& e : entries) {
    if (!merged.empty() && std::abs(merged.back().value - e.value) <= tol) {
      merged.back().multiplicity += e.multiplicity;
      if (e.value == exact) merged.back().value = exact;
    } else {
      merged.push_back(e);
    }
  }
  entries = std::move(merged);
}

inline SpectrumMultiset recursive_spectrum(const RcgParams& p, SpectrumKind kind,
                                           const SpectrumOptions& options) {
  const std::uint64_t n = rcg_order_u64(p);
  if (n > options.eigenvalue_budget)
    throw resource_limit_error("spectrum exceeds the eigenvalue budget", n,
                               options.eigenvalue_budget);
  const std::uint64_t q = p.q();
  const bool adjacency = kind == SpectrumKind::adjacency;
  // Each generation contributes -1 (adjacency) or q+1 (Laplacian) from the inner
  // eigenvectors of the attached cliques.
  const double added = adjacency ? -1.0 : double(q + 1);

  std::vector<SpectrumEntry> entries;
  if (adjacency) {
    entries = {{double(q - 1), 1}, {-1.0, q - 1}};
  } else {
    entries = {{double(q), q - 1}, {0.0, 1}};
  }
  detail::normalize(entries, added, options.merge_tolerance);

  std::uint64_t previous_order = q;
  for (std::uint32_t step = 1; step <= p.g(); ++step) {
    std::vector<SpectrumEntry> next;
    next.reserve(2 * entries.size() + 1);
    for (const auto& e : entries) {
      const EigenPair pair = child_pair(e.value, p.q(), kind);
      next.push_back({pair.plus_child, e.multiplicity});
      next.push_back({pair.minus_child, e.multiplicity});
    }
    next.push_back({added, (q - 1) * previous_order});
    detail::normalize(next, added, options.merge_tolerance);
    entries = std::move(next);
    previous_order *= q + 1;
  }
  return SpectrumMultiset{kind, p, std::move(entries)};
}

}  // namespace detail

inline SpectrumMultiset adjacency_spectrum(const RcgParams& p, const SpectrumOptions& options = {}) {
  return detail::recursive_spectrum(p, SpectrumKind::adjacency, options);
}

inline SpectrumMultiset laplacian_spectrum(const RcgParams& p, const SpectrumOptions& options = {}) {
  return detail::recursive_spectrum(p, SpectrumKind::laplacian, options);
}

// ---------------------------------------------------------------------------
// Exact products over the nonzero Laplacian spectrum.
//
// Upsilon(g) is the product of the nonzero Laplacian eigenvalues and S(g) the sum,
// over each nonzero eigenvalue, of the product of all the others. Both follow exact
// integer recursions because children of a parent gamma multiply to gamma and sum to
// gamma + q + 1.
// ---------------------------------------------------------------------------

inline double nonzero_product_log10(const RcgParams& p) {
  const double q = p.q();
  return (q - 1) * std::log10(q) +
         ((q - 1) * (std::pow(q + 1, p.g()) - 1) + p.g()) * std::log10(q + 1);
}

/// log10 of S(g) = Upsilon(g) * R_Kr / N.
inline double spectral_sum_log10(const RcgParams& p) {
  const double q = p.q();
  const double g = p.g();
  const double lead = (q * q * q * (2 * g + 1) - 2 * q - 1) / q;
  const double r_over_n_log = std::log10(lead) + (g - 2) * std::log10(q + 1) +
                              std::log10(1.0 + std::pow(q + 1, 1.0 - g) / lead);
  return nonzero_product_log10(p) + r_over_n_log;
}

/// q^{q-1} (q+1)^{(q-1)((q+1)^g - 1) + g}
inline BigCount nonzero_product_closed(const RcgParams& p, const Limits& limits = {}) {
  return bounded_count(nonzero_product_log10(p), limits, [&] {
    const std::uint64_t q = p.q();
    const std::uint64_t q1g = ipow(q + 1, p.g()).convert_to<std::uint64_t>();
    return ipow(q, q - 1) * ipow(q + 1, (q - 1) * (q1g - 1) + p.g());
  });
}

/// q^{q-2} (q+1)^{(q-1)(q+1)^g + g - q - 1} (((2g+1)q^3 - 2q - 1)(q+1)^g + q(q+1)).
/// The power of q+1 is negative at g = 0, so this is evaluated over the rationals.
inline BigCount spectral_sum_closed(const RcgParams& p, const Limits& limits = {}) {
  return bounded_count(spectral_sum_log10(p), limits, [&] {
    const std::int64_t q = p.q();
    const std::int64_t g = p.g();
    const std::int64_t q1g = ipow(q + 1, g).convert_to<std::int64_t>();
    Rational s = Rational(ipow(q, q - 2)) * rpow(q + 1, (q - 1) * q1g + g - q - 1) *
                 Rational(BigInt((2 * g + 1) * q * q * q - 2 * q - 1) * q1g + q * (q + 1));
    if (!is_integer(s)) throw inconsistency_error("S(g) closed form is not an integer");
    return BigInt(numerator(s));
  });
}

namespace detail {

struct ProductAndSum {
  BigInt product;  // Upsilon
  BigInt sum;      // S
};

/// Walks Upsilon and S up from K_q. At generation g with m = (q-1)q(q+1)^{g-1}:
///   Upsilon(g) = Upsilon(g-1) * (q+1)^{m+1}
///   S(g)       = S1 * (q+1)^m + m (q+1)^{m-1} * (q+1) Upsilon(g-1)
///   S1         = (1 + (q+1)(N(g-1) - 1)) Upsilon(g-1) + (q+1)^2 S(g-1)
/// The Upsilon step has no extra factor q: with one, Upsilon(C_2(1)) would be 108
/// rather than 54 = 6 * 9 and would no longer match the closed form.
inline ProductAndSum product_and_sum(const RcgParams& p, bool with_sum) {
  const std::uint64_t q = p.q();
  ProductAndSum ps{ipow(q, q - 1), (q - 1) * ipow(q, q - 2)};
  std::uint64_t n_prev = q;
  for (std::uint32_t step = 1; step <= p.g(); ++step) {
    const std::uint64_t m = (q - 1) * n_prev;
    const BigInt clique_part = ipow(q + 1, m);
    const BigInt pair_part = (q + 1) * ps.product;
    if (with_sum) {
      BigInt s1 = (1 + (q + 1) * (n_prev - 1)) * ps.product + (q + 1) * (q + 1) * ps.sum;
      BigInt s2 = m * ipow(q + 1, m - 1);
      ps.sum = s1 * clique_part + s2 * pair_part;
    }
    ps.product = pair_part * clique_part;
    n_prev *= q + 1;
  }
  return ps;
}

}  // namespace detail

/// Upsilon(g) by recursion, checked against the closed form.
inline BigCount nonzero_product(const RcgParams& p, const Limits& limits = {}) {
  return bounded_count(nonzero_product_log10(p), limits, [&] {
    BigInt value = detail::product_and_sum(p, false).product;
    const BigCount closed = nonzero_product_closed(p, Limits{~0ull});
    if (value != *closed.value)
      throw inconsistency_error("nonzero eigenvalue product disagrees with closed form");
    return value;
  });
}

/// S(g) by the component recursion, checked against the closed form.
inline BigCount spectral_sum(const RcgParams& p, const Limits& limits = {}) {
  return bounded_count(spectral_sum_log10(p), limits, [&] {
    BigInt value = detail::product_and_sum(p, true).sum;
    const BigCount closed = spectral_sum_closed(p, Limits{~0ull});
    if (value != *closed.value) throw inconsistency_error("S(g) disagrees with closed form");
    return value;
  });
}

/// Matrix-tree theorem: Upsilon(g) / N(g).
inline BigCount spanning_trees(const RcgParams& p, const Limits& limits = {}) {
  const BigCount product = nonzero_product(p, limits);
  const double n_log = std::log10(double(p.q())) + p.g() * std::log10(p.q() + 1.0);
  if (!product.exact()) return BigCount::log_only(product.log10 - n_log);
  const BigInt n = p.q() * ipow(p.q() + 1, p.g());
  BigInt quotient, remainder;
  boost::multiprecision::divide_qr(*product.value, n, quotient, remainder);
  if (remainder != 0) throw inconsistency_error("N does not divide the nonzero eigenvalue product");
  return BigCount::exact_value(std::move(quotient));
}

/// Kirchhoff index N * S(g) / Upsilon(g).
inline Rational kirchhoff(const RcgParams& p, const Limits& limits = {}) {
  const auto ps_log = nonzero_product_log10(p);
  if (!std::isfinite(ps_log) || ps_log + 1.0 > static_cast<double>(limits.digit_cap))
    throw resource_limit_error("spectral Kirchhoff needs Upsilon beyond the digit cap",
                               static_cast<std::uint64_t>(std::min(ps_log, 1e18)), limits.digit_cap);
  const auto ps = detail::product_and_sum(p, true);
  const BigInt n = p.q() * ipow(p.q() + 1, p.g());
  return Rational(BigInt(n * ps.sum), ps.product);
}

}  // namespace corona::spectra

#endif  // CORONA_SPECTRA_HPP
