#pragma once

// Pi from a (possibly partial) formula in exact fixed-point arithmetic.
//
// Error budget for a target eps = 10^-digits on pi/4:
//   eps1 = eps / (2 + eps)                       tail cut: drop X_n once 1/q_n < eps1
//   eps2 = eps1 / ((1 - eps1) * (m + n - 1))     per-term Maclaurin truncation
//   K_i  = least K with 1/((2K+3) q_i^(2K+3)) < eps2
// With E = 2*10^digits + 1 both thresholds are integer reciprocals:
//   1/eps1 = E,  1/eps2 = (E - 1) * (m + n - 1),
// so every comparison is an exact integer inequality.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "machin/errors.hpp"
#include "machin/exactint.hpp"
#include "machin/generator.hpp"

namespace machin {

/// value = mantissa * 10^-scale
struct FixedPoint {
  UnboundedInt mantissa;
  std::uint64_t scale = 0;

  friend bool operator==(const FixedPoint&, const FixedPoint&) = default;
};

struct PrecisionBudget {
  std::uint64_t digits = 0;
  // Informational; underflow to 0 past ~300 digits. Decisions use the
  // exact reciprocals below.
  double epsilon = 0;
  double epsilon1 = 0;
  double epsilon2 = 0;
  UnboundedInt epsilon1_reciprocal;  // 2*10^digits + 1
  UnboundedInt epsilon2_reciprocal;  // 2*10^digits * (m + n - 1)
  std::size_t accepted_terms = 0;    // n, counting the leading m*arctan(1/q0) block
  std::vector<std::uint64_t> maclaurin_lengths;
};

/// Least K >= 0 with (2K+3) * q^(2K+3) > bound.
inline std::uint64_t maclaurin_length(const UnboundedInt& q, const UnboundedInt& bound) {
  if (q < 2) throw DomainError("maclaurin_length: q must be >= 2");
  UnboundedInt power = q * q * q;
  const UnboundedInt q_squared = q * q;
  std::uint64_t k = 0;
  while ((2 * k + 3) * power <= bound) {
    power *= q_squared;
    ++k;
  }
  return k;
}

inline PrecisionBudget plan_budget(const MachinFormula& formula, std::uint64_t digits) {
  if (digits < 1) throw DomainError("plan_budget: digits must be >= 1");
  if (formula.terms.empty()) throw DomainError("plan_budget: empty formula");
  PrecisionBudget b;
  b.digits = digits;
  b.epsilon = std::pow(10.0, -static_cast<double>(digits));
  b.epsilon1 = b.epsilon / (2 + b.epsilon);

  const UnboundedInt two_pow = 2 * pow10(digits);
  b.epsilon1_reciprocal = two_pow + 1;

  // X_0 carries the coefficient m and is always kept.
  std::size_t n = formula.terms.size();
  bool cut = false;
  for (std::size_t i = 1; i < formula.terms.size(); ++i) {
    if (formula.terms[i].q > b.epsilon1_reciprocal) {
      n = i;
      cut = true;
      break;
    }
  }
  if (!cut && !formula.complete) {
    throw PrecisionUnachievable("partial formula too short for " + std::to_string(digits) +
                                " digits: no retained denominator exceeds 1/eps1");
  }
  b.accepted_terms = n;

  const UnboundedInt count = formula.m() + static_cast<unsigned long>(n) - 1;
  b.epsilon2_reciprocal = two_pow * count;
  b.epsilon2 = b.epsilon1 / ((1 - b.epsilon1) * count.get_d());

  b.maclaurin_lengths.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    b.maclaurin_lengths.push_back(maclaurin_length(formula.terms[i].q, b.epsilon2_reciprocal));
  }
  return b;
}

/// sum_{k=0..K} (-1)^k / ((2k+1) q^(2k+1)) at the given scale. Each term is
/// floor(10^scale / ((2k+1) q^(2k+1))) exactly, so the result is within
/// K+1 units of the truncated series.
inline FixedPoint arctan_recip_fixed(const UnboundedInt& q, std::uint64_t K, std::uint64_t scale) {
  if (q < 2) throw DomainError("arctan_recip_fixed: q must be >= 2");
  FixedPoint out{0, scale};
  const UnboundedInt q_squared = q * q;
  UnboundedInt power = pow10(scale) / q;  // floor(10^s / q^(2k+1))
  UnboundedInt term;
  for (std::uint64_t k = 0; k <= K && sgn(power) != 0; ++k) {
    mpz_fdiv_q_ui(term.get_mpz_t(), power.get_mpz_t(), 2 * k + 1);
    if (k % 2 == 0) {
      out.mantissa += term;
    } else {
      out.mantissa -= term;
    }
    mpz_fdiv_q(power.get_mpz_t(), power.get_mpz_t(), q_squared.get_mpz_t());
  }
  return out;
}

namespace detail {

inline std::uint64_t ceil_log10(std::uint64_t x) {
  std::uint64_t d = 0;
  for (std::uint64_t p = 1; p < x; p *= 10) ++d;
  return d;
}

}  // namespace detail

/// "3." followed by exactly `digits` correct (truncated) decimals.
inline std::string compute_pi(const MachinFormula& formula, std::uint64_t digits) {
  if (digits < 1) throw DomainError("compute_pi: digits must be >= 1");
  // Budget digits beyond the request absorb the factor 4 and leave room to
  // decide the truncation; widened by 2 whenever the interval straddles.
  constexpr int kMaxWidenings = 16;
  for (std::uint64_t planned = digits + 2; planned <= digits + 2 * kMaxWidenings; planned += 2) {
    const PrecisionBudget budget = plan_budget(formula, planned);
    const UnboundedInt& m = formula.m();

    // Each floored division is off by less than one unit; the m copies of X_0
    // scale its error by m.
    UnboundedInt floor_ops = 0;
    for (std::size_t i = 0; i < budget.accepted_terms; ++i) {
      const UnboundedInt ops = budget.maclaurin_lengths[i] + 1;
      if (i == 0) {
        floor_ops += m * ops;
      } else {
        floor_ops += ops;
      }
    }
    const std::uint64_t scale = planned + 10 + detail::ceil_log10(floor_ops.get_ui() + 1);

    UnboundedInt quarter = 0;  // pi/4 * 10^scale
    for (std::size_t i = 0; i < budget.accepted_terms; ++i) {
      const auto& t = formula.terms[i];
      FixedPoint x = arctan_recip_fixed(t.q, budget.maclaurin_lengths[i], scale);
      quarter += t.sign * t.coefficient * x.mantissa;
    }

    const UnboundedInt half_width = floor_ops + pow10(scale - planned);
    const UnboundedInt drop = pow10(scale - digits);
    const UnboundedInt lo = floor_div(4 * (quarter - half_width), drop);
    const UnboundedInt hi = floor_div(4 * (quarter + half_width), drop);
    if (lo != hi) continue;

    std::string s = lo.get_str();
    if (s.size() != digits + 1 || s.front() != '3') throw DomainError("compute_pi: formula does not evaluate to pi");
    return s.substr(0, 1) + "." + s.substr(1);
  }
  throw PrecisionUnachievable("compute_pi: truncation boundary undecidable");
}

}  // namespace machin
