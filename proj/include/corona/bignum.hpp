#ifndef CORONA_BIGNUM_HPP
#define CORONA_BIGNUM_HPP

#include <gmp.h>

#include <boost/multiprecision/gmp.hpp>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>

#include "corona/errors.hpp"

namespace corona {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Caps on how large an exact integer may get before only its logarithm is kept.
struct Limits {
  std::uint64_t digit_cap = 1'000'000;
};

inline BigInt ipow(std::uint64_t base, std::uint64_t exponent) {
  BigInt r;
  mpz_ui_pow_ui(r.backend().data(), base, exponent);
  return r;
}

/// base^exponent for a possibly negative exponent.
inline Rational rpow(std::uint64_t base, std::int64_t exponent) {
  if (exponent >= 0) return Rational(ipow(base, static_cast<std::uint64_t>(exponent)));
  if (base == 0) throw domain_error("zero to a negative power");
  return Rational(BigInt(1), ipow(base, static_cast<std::uint64_t>(-exponent)));
}

/// log10 of a positive integer, accurate to double precision for any size.
inline double log10_of(const BigInt& value) {
  if (value <= 0) return -std::numeric_limits<double>::infinity();
  long exp2 = 0;
  double mantissa = mpz_get_d_2exp(&exp2, value.backend().data());
  return std::log10(mantissa) + static_cast<double>(exp2) * std::log10(2.0);
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline std::string to_string(const BigInt& v) { return v.str(); }

inline std::string to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// A nonnegative integer that may be too large to materialize; log10 is always set.
struct BigCount {
  std::optional<BigInt> value;
  double log10 = 0.0;

  static BigCount exact_value(BigInt v) {
    double l = log10_of(v);
    return BigCount{std::move(v), l};
  }
  static BigCount log_only(double l) { return BigCount{std::nullopt, l}; }

  bool exact() const noexcept { return value.has_value(); }

  const BigInt& get() const {
    if (!value) throw resource_limit_error("count exceeds digit cap", digits(), 0);
    return *value;
  }

  /// Decimal digit count (from the logarithm when inexact).
  std::uint64_t digits() const {
    if (value) {
      if (*value == 0) return 1;
      // mpz_sizeinbase may overshoot by one
      const std::uint64_t n = mpz_sizeinbase(value->backend().data(), 10);
      return abs(*value) < ipow(10, n - 1) ? n - 1 : n;
    }
    if (!std::isfinite(log10)) return std::numeric_limits<std::uint64_t>::max();
    return static_cast<std::uint64_t>(std::floor(log10)) + 1;
  }

  friend bool operator==(const BigCount& a, const BigCount& b) {
    if (a.exact() && b.exact()) return *a.value == *b.value;
    return false;
  }
};

/// Materializes `compute()` only when `log10_estimate` fits under the digit cap.
template <class F>
BigCount bounded_count(double log10_estimate, const Limits& limits, F&& compute) {
  if (!std::isfinite(log10_estimate) ||
      log10_estimate + 1.0 > static_cast<double>(limits.digit_cap)) {
    return BigCount::log_only(log10_estimate);
  }
  return BigCount::exact_value(std::forward<F>(compute)());
}

}  // namespace corona

#endif  // CORONA_BIGNUM_HPP
