#pragma once

// Builds Machin-like identities
//
//   pi/4 = m*arctan(1/q0) + sum_n delta_n*arctan(1/q_n)
//
// from a single starting denominator q0 using only integer recurrences.
// The running remainder delta*arctan(A/B) is subtracted from term by term
// until A reaches zero.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "machin/errors.hpp"
#include "machin/exactint.hpp"

namespace machin {

enum class Mode {
  Signed,    ///< q_n = nearest(B/A), remainder sign may flip; A at least halves each step.
  Positive,  ///< q_n = ceil(B/A), every term added; A only strictly decreases.
};

/// The remainder delta*arctan(A/B) still to be matched. A >= 0, B > 0.
struct RemainderState {
  UnboundedInt A;
  UnboundedInt B;
  int delta = 1;

  bool finished() const { return sgn(A) == 0; }
  friend bool operator==(const RemainderState&, const RemainderState&) = default;
};

/// sign * coefficient * arctan(1/q).
struct FormulaTerm {
  int sign = 1;
  UnboundedInt q;
  UnboundedInt coefficient = 1;

  friend bool operator==(const FormulaTerm&, const FormulaTerm&) = default;
};

/// A generated identity. terms[0] is the leading m*arctan(1/q0) block.
struct MachinFormula {
  UnboundedInt q0;
  Mode mode = Mode::Signed;
  std::vector<FormulaTerm> terms;
  bool complete = false;
  std::optional<RemainderState> final_remainder;  // set iff !complete

  const UnboundedInt& m() const { return terms.front().coefficient; }

  friend bool operator==(const MachinFormula&, const MachinFormula&) = default;
};

struct GenerationConfig {
  Mode mode = Mode::Signed;
  /// Stop (incomplete) after the first denominator longer than max_digits.
  /// Without `partial`, exceeding the limit raises CutoffReached instead.
  bool partial = false;
  std::uint64_t max_digits = 1'000'000;
};

/// One step of a_{k+1} = q0*a_k - b_k, b_{k+1} = q0*b_k + a_k, i.e. the
/// remainder of pi/4 - (k+1)*arctan(1/q0) expressed as arctan(a/b).
inline std::pair<UnboundedInt, UnboundedInt> first_term_step(const UnboundedInt& a, const UnboundedInt& b,
                                                             const UnboundedInt& q0) {
  return {q0 * a - b, q0 * b + a};
}

struct FirstTerm {
  UnboundedInt m;
  RemainderState remainder;
};

namespace detail {

inline void require_q0(const UnboundedInt& q0) {
  if (q0 < 2) throw DomainError("q0 must be an integer >= 2");
}

// Subtracts arctan(1/q0) while the remainder stays nonnegative.
// Returns m_(-) with (a, b) at m_(-) and at m_(+) = m_(-) + 1.
struct SignCrossing {
  UnboundedInt m_minus;
  UnboundedInt a_minus, b_minus;
  UnboundedInt a_plus, b_plus;
};

inline SignCrossing scan_sign_crossing(const UnboundedInt& q0) {
  require_q0(q0);
  SignCrossing s{0, 1, 1, 0, 0};
  UnboundedInt next_a, next_b;
  const bool small = q0.fits_ulong_p();
  const unsigned long q0_word = small ? q0.get_ui() : 0;
  for (;;) {
    if (small) {
      next_a = s.a_minus * q0_word - s.b_minus;
    } else {
      next_a = s.a_minus * q0 - s.b_minus;
    }
    if (sgn(next_a) < 0) break;
    if (small) {
      s.b_minus = s.b_minus * q0_word + s.a_minus;
    } else {
      s.b_minus = s.b_minus * q0 + s.a_minus;
    }
    swap(s.a_minus, next_a);
    ++s.m_minus;
  }
  s.a_plus = std::move(next_a);
  s.b_plus = s.b_minus * q0 + s.a_minus;
  return s;
}

}  // namespace detail

/// Chooses m in {m_(-), m_(+)} minimizing |remainder|, and returns that remainder.
/// The result always has remainder.A > 0: no single-term identity exists for q0 > 1.
inline FirstTerm find_first_term(const UnboundedInt& q0) {
  auto s = detail::scan_sign_crossing(q0);
  // Take m_(+) iff a_-/b_- > |a_+|/b_+.
  if (sgn(s.a_minus * s.b_plus + s.a_plus * s.b_minus) > 0) {
    return {s.m_minus + 1, {abs(s.a_plus), std::move(s.b_plus), -1}};
  }
  return {std::move(s.m_minus), {std::move(s.a_minus), std::move(s.b_minus), 1}};
}

/// Positive-mode first term: always m_(-), leaving a positive remainder.
inline FirstTerm find_first_term_positive(const UnboundedInt& q0) {
  auto s = detail::scan_sign_crossing(q0);
  return {std::move(s.m_minus), {std::move(s.a_minus), std::move(s.b_minus), 1}};
}

struct TermStep {
  FormulaTerm term;
  RemainderState next;
};

/// Nearest-integer step. Guarantees 2*next.A <= state.A.
inline TermStep next_term_signed(const RemainderState& state) {
  if (sgn(state.A) <= 0) throw ContractViolation("next_term_signed: remainder already zero");
  TermStep out;
  out.term.sign = state.delta;
  out.term.q = nearest_int(state.B, state.A);
  UnboundedInt diff = out.term.q * state.A - state.B;
  const int mu = sgn(diff);
  out.next.A = abs(diff);
  out.next.B = out.term.q * state.B + state.A;
  out.next.delta = mu == 0 ? state.delta : state.delta * mu;
  return out;
}

/// Ceiling step: the remainder stays nonnegative, so every sign is +.
inline TermStep next_term_positive(const RemainderState& state) {
  if (sgn(state.A) <= 0) throw ContractViolation("next_term_positive: remainder already zero");
  if (state.delta != 1) throw ContractViolation("next_term_positive: remainder must be positive");
  TermStep out;
  out.term.sign = 1;
  out.term.q = ceil_div(state.B, state.A);
  out.next.A = out.term.q * state.A - state.B;
  out.next.B = out.term.q * state.B + state.A;
  out.next.delta = 1;
  return out;
}

/// Incremental generator; generate() runs it to completion.
class Generator {
 public:
  Generator(UnboundedInt q0, GenerationConfig config) : config_(config) {
    if (config_.max_digits < 1) throw DomainError("max_digits must be >= 1");
    formula_.q0 = std::move(q0);
    formula_.mode = config_.mode;
    FirstTerm first = config_.mode == Mode::Signed ? find_first_term(formula_.q0)
                                                   : find_first_term_positive(formula_.q0);
    formula_.terms.push_back({1, formula_.q0, std::move(first.m)});
    state_ = std::move(first.remainder);
    // q0 = 1 is rejected above, so the first remainder is never zero.
  }

  bool done() const { return state_.finished() || cut_; }
  bool cut_off() const { return cut_; }
  const RemainderState& remainder() const { return state_; }
  const MachinFormula& formula() const { return formula_; }

  /// Appends the next term. Throws CutoffReached in non-partial mode when the
  /// new denominator exceeds max_digits.
  const FormulaTerm& advance() {
    if (done()) throw ContractViolation("Generator::advance after completion");
    TermStep step = config_.mode == Mode::Signed ? next_term_signed(state_) : next_term_positive(state_);
    formula_.terms.push_back(std::move(step.term));
    state_ = std::move(step.next);
    if (!state_.finished() && decimal_digits(formula_.terms.back().q) > config_.max_digits) {
      if (!config_.partial) {
        throw CutoffReached("denominator exceeded " + std::to_string(config_.max_digits) +
                            " digits; rerun in partial mode or raise the limit");
      }
      cut_ = true;
    }
    return formula_.terms.back();
  }

  MachinFormula finish() && {
    while (!done()) advance();
    formula_.complete = state_.finished();
    if (!formula_.complete) formula_.final_remainder = std::move(state_);
    return std::move(formula_);
  }

 private:
  GenerationConfig config_;
  MachinFormula formula_;
  RemainderState state_;
  bool cut_ = false;
};

inline MachinFormula generate(const UnboundedInt& q0, const GenerationConfig& config = {}) {
  return Generator(q0, config).finish();
}

}  // namespace machin
