#pragma once

// Exact integer primitives: floored/ceiling/nearest division and a
// logarithm estimate that never materializes the full value as a float.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

#include "machin/errors.hpp"

namespace machin {

/// Arbitrary-size signed integer. Backed by GMP.
using UnboundedInt = mpz_class;

/// num/den with the sign carried by the numerator (den > 0).
struct Ratio {
  UnboundedInt num;
  UnboundedInt den;

  Ratio(UnboundedInt n, UnboundedInt d) : num(std::move(n)), den(std::move(d)) {
    if (sgn(den) == 0) throw DomainError("Ratio: zero denominator");
    if (sgn(den) < 0) {
      num = -num;
      den = -den;
    }
  }

  /// Equality of values, not of representations (no gcd reduction is ever done).
  friend bool same_value(const Ratio& x, const Ratio& y) { return x.num * y.den == y.num * x.den; }
};

namespace detail {

inline void require_positive_den(const UnboundedInt& den, const char* op) {
  if (sgn(den) <= 0) throw DomainError(std::string(op) + ": denominator must be positive");
}

}  // namespace detail

/// floor(num/den), den > 0.
inline UnboundedInt floor_div(const UnboundedInt& num, const UnboundedInt& den) {
  detail::require_positive_den(den, "floor_div");
  UnboundedInt r;
  mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return r;
}

/// ceil(num/den), den > 0.
inline UnboundedInt ceil_div(const UnboundedInt& num, const UnboundedInt& den) {
  detail::require_positive_den(den, "ceil_div");
  UnboundedInt r;
  mpz_cdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return r;
}

/// Nearest integer to num/den; exact halves go up.
inline UnboundedInt nearest_int(const UnboundedInt& num, const UnboundedInt& den) {
  detail::require_positive_den(den, "nearest_int");
  UnboundedInt twice_num = 2 * num + den;
  UnboundedInt twice_den = 2 * den;
  return floor_div(twice_num, twice_den);
}

/// 10^k as an exact integer.
inline UnboundedInt pow10(std::uint64_t k) {
  UnboundedInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

/// log10(x) for x >= 1.
///
/// Uses the leading 53 bits and the binary exponent, evaluated in extended
/// precision, so the cost is O(1) in the size of x. When the estimate sits
/// within 1e-9 of an integer k and x == 10^k, k is returned exactly.
inline double log10_approx(const UnboundedInt& x) {
  if (sgn(x) <= 0) throw DomainError("log10_approx: argument must be >= 1");
  signed long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, x.get_mpz_t());  // x ~ mantissa * 2^exponent
  constexpr long double kLog10Of2 = 0.301029995663981195213738894724493026768L;
  const long double estimate =
      std::log10(static_cast<long double>(mantissa)) + static_cast<long double>(exponent) * kLog10Of2;
  const long double nearest = std::round(estimate);
  if (std::fabs(estimate - nearest) < 1e-9L && nearest >= 0) {
    const auto k = static_cast<std::uint64_t>(nearest);
    if (x == pow10(k)) return static_cast<double>(k);
  }
  return static_cast<double>(estimate);
}

/// Number of decimal digits of |x| (1 for zero).
inline std::uint64_t decimal_digits(const UnboundedInt& x) {
  if (sgn(x) == 0) return 1;
  const UnboundedInt mag = abs(x);
  // mpz_sizeinbase is exact or one too large.
  const std::uint64_t upper = mpz_sizeinbase(mag.get_mpz_t(), 10);
  if (upper <= 18) return mag.get_str().size();
  const double lg = log10_approx(mag);
  const double frac = lg - std::floor(lg);
  if (frac > 1e-6 && frac < 1.0 - 1e-6) return static_cast<std::uint64_t>(std::floor(lg)) + 1;
  return mag < pow10(upper - 1) ? upper - 1 : upper;
}

/// Parses an optionally signed base-10 integer; rejects anything else.
inline UnboundedInt parse_decimal(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw DomainError("not a decimal integer: '" + std::string(text) + "'");
  for (char c : digits) {
    if (c < '0' || c > '9') throw DomainError("not a decimal integer: '" + std::string(text) + "'");
  }
  std::string normalized(text.front() == '+' ? text.substr(1) : text);
  return UnboundedInt(normalized, 10);
}

}  // namespace machin
