#pragma once

// JSON form of a formula for downstream tooling. Integers travel as decimal
// strings; lg_q and the Lehmer block are derived on write and ignored on read.
//
// {
//   "schema_version": 1,
//   "q0": "5", "m": "4", "mode": "signed", "complete": true,
//   "terms": [{"sign": "-", "q": "239", "lg_q": 2.378...}],
//   "lehmer": {"value": 1.85..., "is_upper_bound": false, "is_lower_bound": false},
//   "final_remainder": {"A": "...", "B": "...", "delta": "+"}     (partial only)
// }

#include <nlohmann/json.hpp>

#include <string>

#include "machin/errors.hpp"
#include "machin/exactint.hpp"
#include "machin/generator.hpp"
#include "machin/measure.hpp"

namespace machin {

inline constexpr int kFormulaSchemaVersion = 1;

inline std::string to_string(Mode mode) { return mode == Mode::Signed ? "signed" : "positive"; }

inline Mode parse_mode(const std::string& text) {
  if (text == "signed") return Mode::Signed;
  if (text == "positive") return Mode::Positive;
  throw FormatError("unknown mode '" + text + "'");
}

namespace detail {

inline const char* sign_glyph(int sign) { return sign < 0 ? "-" : "+"; }

inline int parse_sign(const nlohmann::json& j) {
  const auto s = j.get<std::string>();
  if (s == "+") return 1;
  if (s == "-") return -1;
  throw FormatError("sign must be \"+\" or \"-\", got \"" + s + "\"");
}

inline UnboundedInt parse_int_field(const nlohmann::json& j, const char* name) {
  if (!j.is_string()) throw FormatError(std::string(name) + " must be a decimal string");
  try {
    return parse_decimal(j.get<std::string>());
  } catch (const DomainError& e) {
    throw FormatError(std::string(name) + ": " + e.what());
  }
}

}  // namespace detail

inline nlohmann::json to_json(const MachinFormula& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (std::size_t i = 1; i < f.terms.size(); ++i) {
    const auto& t = f.terms[i];
    terms.push_back({{"sign", detail::sign_glyph(t.sign)}, {"q", t.q.get_str()}, {"lg_q", log10_approx(t.q)}});
  }
  const LehmerResult lehmer = lehmer_measure(f);
  nlohmann::json doc = {
      {"schema_version", kFormulaSchemaVersion},
      {"q0", f.q0.get_str()},
      {"m", f.m().get_str()},
      {"mode", to_string(f.mode)},
      {"complete", f.complete},
      {"terms", std::move(terms)},
      {"lehmer",
       {{"value", lehmer.value}, {"is_upper_bound", lehmer.is_upper_bound}, {"is_lower_bound", lehmer.is_lower_bound}}},
  };
  if (f.final_remainder) {
    doc["final_remainder"] = {{"A", f.final_remainder->A.get_str()},
                              {"B", f.final_remainder->B.get_str()},
                              {"delta", detail::sign_glyph(f.final_remainder->delta)}};
  }
  return doc;
}

inline MachinFormula formula_from_json(const nlohmann::json& doc) {
  try {
    if (!doc.is_object()) throw FormatError("formula document must be a JSON object");
    if (!doc.contains("schema_version")) throw FormatError("missing schema_version");
    if (doc.at("schema_version").get<int>() != kFormulaSchemaVersion) {
      throw FormatError("unsupported schema_version " + doc.at("schema_version").dump());
    }
    MachinFormula f;
    f.q0 = detail::parse_int_field(doc.at("q0"), "q0");
    if (f.q0 < 2) throw FormatError("q0 must be >= 2");
    UnboundedInt m = detail::parse_int_field(doc.at("m"), "m");
    if (m < 1) throw FormatError("m must be >= 1");
    f.mode = parse_mode(doc.at("mode").get<std::string>());
    f.complete = doc.at("complete").get<bool>();
    f.terms.push_back({1, f.q0, std::move(m)});
    for (const auto& t : doc.at("terms")) {
      FormulaTerm term{detail::parse_sign(t.at("sign")), detail::parse_int_field(t.at("q"), "q"), 1};
      if (term.q < 2) throw FormatError("term denominators must be >= 2");
      f.terms.push_back(std::move(term));
    }
    if (doc.contains("final_remainder")) {
      const auto& r = doc.at("final_remainder");
      f.final_remainder = RemainderState{detail::parse_int_field(r.at("A"), "A"), detail::parse_int_field(r.at("B"), "B"),
                                         detail::parse_sign(r.at("delta"))};
    }
    if (f.complete == f.final_remainder.has_value()) {
      throw FormatError("final_remainder must be present exactly when complete is false");
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed formula document: ") + e.what());
  }
}

inline std::string serialize(const MachinFormula& f) { return to_json(f).dump(2); }

inline MachinFormula parse_formula(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  return formula_from_json(doc);
}

}  // namespace machin
