// qlorentz: verification suites and expression evaluation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "qlorentz/expr.hpp"
#include "qlorentz/fock.hpp"
#include "qlorentz/suites.hpp"

using namespace qlorentz;

namespace {

constexpr int kUsage = 2;

Rational parse_p(const std::string& text) {
  Rational p;
  try {
    p = Rational(text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("invalid p '" + text + "'");
  }
  p.canonicalize();
  if (p == 0) throw std::invalid_argument("p = 0 is not allowed");
  return p;
}

int env_block_cap() {
  const char* v = std::getenv("QLORENTZ_MAX_BLOCK");
  if (!v || !*v) return -1;
  try {
    return std::stoi(v);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("QLORENTZ_MAX_BLOCK is not an integer: ") + v);
  }
}

int run_verify(const std::string& suite, const std::vector<std::string>& ps, int max_block, bool literal, const std::string& counit,
               const std::string& backend, const std::string& format, const std::string& out) {
  SuiteConfig cfg;
  cfg.suite = suite;
  cfg.p_values.clear();
  for (const auto& t : ps) cfg.p_values.push_back(parse_p(t));
  if (cfg.p_values.empty()) cfg.p_values.emplace_back(3, 2);
  const int cap = env_block_cap();
  cfg.max_block = cap >= 1 ? std::min(max_block, cap) : max_block;
  cfg.paper_literal = literal;
  cfg.counit = counit == "paper" ? CounitVariant::kPaperLiteral : CounitVariant::kStandard;
  cfg.backend = backend_from_string(backend);
  cfg = normalized(cfg);

  const VerificationReport r = run_suite(cfg);
  const std::string text = format == "json" ? report_json(cfg, r) : report_text(cfg, r);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) throw std::invalid_argument("cannot write " + out);
    f << text;
  }
  return exit_code(r);
}

int run_eval(const std::string& text, std::optional<int> block, std::optional<int> block_bar, const std::optional<std::string>& p_text) {
  const NormalForm nf = normal_order(text);
  std::cout << nf.str() << "\n";
  if (!block) return 0;
  const unsigned high = (1u << 2) | (1u << 3);
  const FockBlock b = (nf.mode_mask() & high) != 0 ? FockBlock::lorentz(*block, block_bar.value_or(*block)) : FockBlock::pair(*block);
  const ExactMatrix m = p_text ? represent(nf, b, QValue(parse_p(*p_text))) : represent(nf, b);
  std::cout << "block " << b.label() << (p_text ? " at p = " + *p_text : "") << "\n" << to_text(m) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of q-deformed oscillator, SU_q(2), q-Lorentz and q-Minkowski relations"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  std::vector<std::string> ps;
  int max_block = 4;
  bool literal = false;
  std::string counit = "standard";
  std::string backend = "all";
  std::string format = "text";
  std::string out;
  std::vector<std::string> suites{"all"};
  for (const auto& s : suite_names()) suites.push_back(s);
  verify->add_option("--suite", suite, "suite to run")->check(CLI::IsMember(suites));
  verify->add_option("--p", ps, "rational values of p (q = p^2); p = 1 is always added")->delimiter(',');
  verify->add_option("--max-block", max_block, "largest block total number")->check(CLI::PositiveNumber);
  verify->add_flag("--paper-literal", literal, "use the formulas exactly as printed");
  verify->add_option("--counit", counit, "counit on the ladder generators")->check(CLI::IsMember({"standard", "paper"}));
  verify->add_option("--backend", backend, "which checks to report")->check(CLI::IsMember({"symbolic", "exact", "float", "all"}));
  verify->add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", out, "write the report to a file");

  auto* eval = app.add_subcommand("eval", "normal-order an expression");
  std::string text;
  std::optional<int> block;
  std::optional<int> block_bar;
  std::optional<std::string> p_eval;
  eval->add_option("expr", text, "expression")->required();
  eval->add_option("--block", block, "print the matrix on block n")->check(CLI::NonNegativeNumber);
  eval->add_option("--block-bar", block_bar, "nbar for expressions in modes 3, 4")->check(CLI::NonNegativeNumber);
  eval->add_option("--p", p_eval, "rational p for the matrix (symbolic when absent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*verify) return run_verify(suite, ps, max_block, literal, counit, backend, format, out);
    return run_eval(text, block, block_bar, p_eval);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const GradingError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
