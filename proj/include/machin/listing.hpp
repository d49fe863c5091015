#pragma once

// Plain-text listing:
//
//   M 4 Q 5
//   (-) Q 239
//   ---
//   Lehm 1.851127652316856
//   Pi 3.1415926535897936
//
// Denominators longer than the display limit are shown as "lg Q <log10 q>".
// A partial formula ends its term list with "(brk)" and reports "Lehm < x"
// (signed mode) or "Lehm > x" (positive mode).

#include <charconv>
#include <cstdint>
#include <string>

#include "machin/exactint.hpp"
#include "machin/generator.hpp"
#include "machin/measure.hpp"
#include "machin/verify.hpp"

namespace machin {

inline constexpr std::uint64_t kDefaultDisplayDigitLimit = 200;

/// Shortest round-trip decimal, always with a fractional part ("3.0", not "3").
inline std::string format_real(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  std::string s(buf, end);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

inline std::string value_or_lg(const char* name, const UnboundedInt& x, std::uint64_t display_digit_limit) {
  if (decimal_digits(x) <= display_digit_limit) return std::string(name) + " " + x.get_str();
  return std::string("lg ") + name + " " + format_real(log10_approx(x));
}

inline std::string render_listing(const MachinFormula& f, std::uint64_t display_digit_limit = kDefaultDisplayDigitLimit) {
  std::string out = "M " + f.m().get_str() + " " + value_or_lg("Q", f.q0, display_digit_limit) + "\n";
  for (std::size_t i = 1; i < f.terms.size(); ++i) {
    const auto& t = f.terms[i];
    out += t.sign < 0 ? "(-) " : "(+) ";
    out += value_or_lg("Q", t.q, display_digit_limit) + "\n";
  }
  const LehmerResult lehmer = lehmer_measure(f);
  if (!f.complete) out += "(brk)\n";
  out += "---\nLehm ";
  if (lehmer.is_upper_bound) out += "< ";
  if (lehmer.is_lower_bound) out += "> ";
  out += format_real(lehmer.value) + "\n";
  out += "Pi " + format_real(float_sanity(f)) + "\n";
  return out;
}

}  // namespace machin
