#pragma once

#include "machin/exactint.hpp"
#include "machin/generator.hpp"

namespace machin {

struct LehmerResult {
  double value = 0;
  /// Partial signed formula: value includes the last term twice, which
  /// dominates every omitted term, so the true measure is below value.
  bool is_upper_bound = false;
  /// Partial positive-mode formula: value is the plain prefix sum.
  bool is_lower_bound = false;
  double bound_3_over_lg_q0 = 0;
};

/// Lehmer's measure, sum of 1/log10(q) over the distinct denominators
/// (the leading block counts once whatever its coefficient).
inline LehmerResult lehmer_measure(const MachinFormula& formula) {
  if (formula.terms.empty()) throw DomainError("lehmer_measure: empty formula");
  LehmerResult r;
  double last = 0;
  for (const auto& t : formula.terms) {
    if (t.q < 2) throw DomainError("lehmer_measure: denominator below 2");
    last = 1.0 / log10_approx(t.q);
    r.value += last;
  }
  if (!formula.complete) {
    if (formula.mode == Mode::Positive) {
      r.is_lower_bound = true;
    } else {
      if (formula.terms.size() < 2) throw DomainError("lehmer_measure: partial bound needs at least 2 terms");
      r.value += last;
      r.is_upper_bound = true;
    }
  }
  r.bound_3_over_lg_q0 = 3.0 / log10_approx(formula.q0);
  return r;
}

}  // namespace machin
