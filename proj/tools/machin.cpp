// machin: generate Machin-like identities, measure them, compute pi from them.
//
// Exit codes: 0 ok, 2 bad input, 3 cutoff without --partial,
// 4 precision unachievable, 5 identity check failed, 6 partial not verifiable.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "machin/machin.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kBadInput = 2,
  kCutoff = 3,
  kPrecision = 4,
  kIdentityFailed = 5,
  kPartialUnverifiable = 6,
};

machin::UnboundedInt parse_q0(const std::string& text) {
  machin::UnboundedInt q0 = machin::parse_decimal(text);
  if (q0 < 2) throw machin::DomainError("q0 must be an integer >= 2, got " + text);
  return q0;
}

machin::MachinFormula load_formula(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw machin::FormatError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return machin::parse_formula(buf.str());
}

struct GenerateOptions {
  std::string q0;
  std::string mode = "signed";
  bool partial = false;
  std::uint64_t max_digits = 1'000'000;
  std::uint64_t display_digit_limit = machin::kDefaultDisplayDigitLimit;
  std::string format = "text";
};

int run_generate(const GenerateOptions& opt) {
  machin::GenerationConfig config;
  config.mode = machin::parse_mode(opt.mode);
  config.partial = opt.partial;
  config.max_digits = opt.max_digits;
  const auto formula = machin::generate(parse_q0(opt.q0), config);
  if (opt.format == "json") {
    std::cout << machin::serialize(formula) << "\n";
  } else {
    std::cout << machin::render_listing(formula, opt.display_digit_limit);
  }
  return kOk;
}

struct PiOptions {
  std::string q0;
  std::string formula_path;
  std::string mode = "signed";
  std::uint64_t digits = 0;
};

int run_pi(const PiOptions& opt) {
  machin::MachinFormula formula;
  if (!opt.formula_path.empty()) {
    formula = load_formula(opt.formula_path);
  } else {
    // Only denominators up to ~digits matter; the first longer one bounds the tail.
    machin::GenerationConfig config;
    config.mode = machin::parse_mode(opt.mode);
    config.partial = true;
    config.max_digits = opt.digits + 40;
    formula = machin::generate(parse_q0(opt.q0), config);
  }
  std::cout << machin::compute_pi(formula, opt.digits) << "\n";
  return kOk;
}

struct VerifyOptions {
  std::string q0;
  std::string formula_path;
  std::string mode = "signed";
  std::uint64_t max_digits = 1'000'000;
};

int run_verify(const VerifyOptions& opt) {
  machin::MachinFormula formula;
  if (!opt.formula_path.empty()) {
    formula = load_formula(opt.formula_path);
  } else {
    machin::GenerationConfig config;
    config.mode = machin::parse_mode(opt.mode);
    config.max_digits = opt.max_digits;
    formula = machin::generate(parse_q0(opt.q0), config);
  }
  if (!formula.complete) {
    std::cerr << "cannot verify partial formula as identity\n";
    return kPartialUnverifiable;
  }
  if (machin::is_identity(formula)) {
    std::cout << "IDENTITY OK\n";
    return kOk;
  }
  std::cout << "IDENTITY FAILED\n";
  return kIdentityFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Machin-like arctangent identities for pi/4"};
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Build the identity starting from q0");
  generate->add_option("q0", gen.q0, "Starting denominator (>= 2)")->required();
  generate->add_option("--mode", gen.mode, "Term selection")->check(CLI::IsMember({"signed", "positive"}));
  generate->add_flag("--partial", gen.partial, "Stop after the first denominator longer than --max-digits");
  generate->add_option("--max-digits", gen.max_digits, "Digit limit for denominators")->check(CLI::PositiveNumber);
  generate->add_option("--display-digit-limit", gen.display_digit_limit,
                       "Print lg Q instead of Q above this many digits");
  generate->add_option("--format", gen.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  PiOptions pi;
  auto* pi_cmd = app.add_subcommand("pi", "Print pi to the requested number of decimals");
  auto* pi_q0 = pi_cmd->add_option("--q0", pi.q0, "Generate the formula from this q0");
  auto* pi_file = pi_cmd->add_option("--formula", pi.formula_path, "Read a formula document (JSON)");
  pi_q0->excludes(pi_file);
  pi_cmd->add_option("--mode", pi.mode, "Term selection with --q0")->check(CLI::IsMember({"signed", "positive"}));
  pi_cmd->add_option("--digits", pi.digits, "Decimal places")->required()->check(CLI::PositiveNumber);

  VerifyOptions ver;
  auto* verify = app.add_subcommand("verify", "Check the identity exactly by tangent folding");
  auto* ver_q0 = verify->add_option("q0", ver.q0, "Generate the formula from this q0");
  auto* ver_file = verify->add_option("--formula", ver.formula_path, "Read a formula document (JSON)");
  ver_q0->excludes(ver_file);
  verify->add_option("--mode", ver.mode, "Term selection with q0")->check(CLI::IsMember({"signed", "positive"}));
  verify->add_option("--max-digits", ver.max_digits, "Digit limit for denominators")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kBadInput;
  }

  try {
    if (*generate) return run_generate(gen);
    if (*pi_cmd) {
      if (pi.q0.empty() == pi.formula_path.empty()) {
        std::cerr << "pi: exactly one of --q0 or --formula is required\n";
        return kBadInput;
      }
      return run_pi(pi);
    }
    if (ver.q0.empty() == ver.formula_path.empty()) {
      std::cerr << "verify: exactly one of <q0> or --formula is required\n";
      return kBadInput;
    }
    return run_verify(ver);
  } catch (const machin::CutoffReached& e) {
    std::cerr << e.what() << "\n";
    return kCutoff;
  } catch (const machin::PrecisionUnachievable& e) {
    std::cerr << e.what() << "\n";
    return kPrecision;
  } catch (const machin::FoldError& e) {
    std::cerr << e.what() << "\n";
    return kIdentityFailed;
  } catch (const machin::DomainError& e) {
    std::cerr << e.what() << "\n";
    return kBadInput;
  } catch (const machin::FormatError& e) {
    std::cerr << e.what() << "\n";
    return kBadInput;
  }
}
