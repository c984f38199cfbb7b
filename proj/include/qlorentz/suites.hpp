#pragma once

// Named verification suites and their report serialization.

#include <string>
#include <vector>

#include "qlorentz/lorentz.hpp"
#include "qlorentz/report.hpp"
#include "qlorentz/scalar.hpp"

namespace qlorentz {

enum class BackendFilter { kSymbolic, kExact, kFloat, kAll };

struct SuiteConfig {
  std::string suite = "all";
  std::vector<Rational> p_values{Rational(3, 2)};
  int max_block = 4;
  bool paper_literal = false;
  CounitVariant counit = CounitVariant::kStandard;
  BackendFilter backend = BackendFilter::kAll;
};

/// suq2, bases, lorentz, hopf, minkowski (in the order "all" runs them).
const std::vector<std::string>& suite_names();

std::string to_string(BackendFilter b);
BackendFilter backend_from_string(const std::string& s);

/// Checks the invariants (known suite, max_block >= 1, p values present and
/// nonzero) and appends p = 1 when missing.  Throws std::invalid_argument.
SuiteConfig normalized(SuiteConfig cfg);

/// Runs a suite on a normalized config.  Lorentz blocks are (n, nbar) with
/// n, nbar <= min(max_block, kLorentzBlockLimit).
VerificationReport run_suite(const SuiteConfig& cfg);
inline constexpr int kLorentzBlockLimit = 4;

/// {suite, config, entries[], summary{pass, fail, flagged}}, keys in fixed order.
std::string report_json(const SuiteConfig& cfg, const VerificationReport& r);
std::string report_text(const SuiteConfig& cfg, const VerificationReport& r);

/// 0 when no entry fails, 1 otherwise.
int exit_code(const VerificationReport& r);

}  // namespace qlorentz
