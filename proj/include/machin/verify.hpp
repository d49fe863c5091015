#pragma once

// Exact check of an identity by folding every term through
//   arctan(a/b) + s*arctan(1/q) = arctan((a*q + s*b) / (b*q - s*a)).

#include <cmath>
#include <span>

#include "machin/exactint.hpp"
#include "machin/generator.hpp"

namespace machin {

/// Running tangent num/den of the angles folded so far; starts at arctan(0/1).
struct TangentAccumulator {
  UnboundedInt num = 0;
  UnboundedInt den = 1;

  /// Adds sign*arctan(1/q). The sum must stay inside (-pi/2, pi/2), otherwise
  /// the addition law only holds modulo pi and FoldError is raised.
  void add(int sign, const UnboundedInt& q) {
    UnboundedInt next_num = num * q + sign * den;
    UnboundedInt next_den = den * q - sign * num;
    if (sgn(next_den) <= 0) throw FoldError("fold left (-pi/2, pi/2): denominator reached zero or below");
    num = std::move(next_num);
    den = std::move(next_den);
  }

  void add(const FormulaTerm& t) {
    if (!t.coefficient.fits_ulong_p()) throw DomainError("fold: coefficient too large");
    for (unsigned long i = 0, n = t.coefficient.get_ui(); i < n; ++i) add(t.sign, t.q);
  }
};

inline Ratio fold_terms(std::span<const FormulaTerm> terms) {
  TangentAccumulator acc;
  for (const auto& t : terms) acc.add(t);
  return {std::move(acc.num), std::move(acc.den)};
}

/// Folds a complete formula. The formula is an identity iff num == den.
inline Ratio fold_formula(const MachinFormula& formula) {
  if (!formula.complete) throw ContractViolation("cannot verify partial formula as identity");
  return fold_terms(formula.terms);
}

inline bool is_identity(const MachinFormula& formula) {
  try {
    Ratio r = fold_formula(formula);
    return r.num == r.den;
  } catch (const FoldError&) {
    return false;
  }
}

/// 4 * (m*atan(1/q0) + sum delta*atan(1/q)) in double precision.
inline double float_sanity(const MachinFormula& formula) {
  double sum = 0;
  for (const auto& t : formula.terms) {
    // 1/q underflows long before q stops being representable.
    if (mpz_sizeinbase(t.q.get_mpz_t(), 2) > 1000) continue;
    const double x = std::atan(1.0 / t.q.get_d());
    sum += t.sign * t.coefficient.get_d() * x;
  }
  return 4 * sum;
}

}  // namespace machin
