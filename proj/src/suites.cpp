#include "qlorentz/suites.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qlorentz/minkowski.hpp"
#include "qlorentz/rewrite.hpp"
#include "qlorentz/suq2.hpp"

namespace qlorentz {

namespace {

std::vector<FockBlock> pair_blocks(int max_n, int first_mode = 1) {
  std::vector<FockBlock> out;
  for (int n = 0; n <= max_n; ++n) out.push_back(FockBlock::pair(n, first_mode));
  return out;
}

CheckOptions options(const SuiteConfig& cfg) {
  CheckOptions o;
  o.p_values = cfg.p_values;
  o.max_block = cfg.max_block;
  return o;
}

CheckOptions symbolic_only() {
  CheckOptions o;
  o.exact = false;
  o.floating = false;
  return o;
}

RelationSet prefixed(RelationSet rels, const std::string& prefix, bool expect_failure = false) {
  for (auto& r : rels) {
    r.name = prefix + r.name;
    r.expect_failure = r.expect_failure || expect_failure;
  }
  return rels;
}

std::vector<double> float_p(const SuiteConfig& cfg) {
  std::vector<double> out;
  for (const auto& p : cfg.p_values)
    if (p != 1 && p != -1) out.push_back(p.get_d());
  if (out.empty()) out.push_back(1.3);
  return out;
}

std::string sci(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

// a a^dagger leaves the block in between, so these rows go through the word
// evaluator instead of block matrix products.
VerificationReport word_relations(const RelationSet& rels, const std::vector<FockBlock>& blocks, const SuiteConfig& cfg) {
  VerificationReport r;
  for (const auto& rel : rels) {
    const NormalForm res = residual(rel, {});
    r.add({rel.name, rel.anchor, "symbolic", "-", "generic", status_for(res.is_zero(), rel.expect_failure), describe_residual(res)});
    const WordSum lhs = expand_words(parse(rel.lhs));
    const WordSum rhs = expand_words(parse(rel.rhs));
    const WordSum diff = expand_words(parse("(" + rel.lhs + ") - (" + rel.rhs + ")"));
    for (const auto& b : blocks)
      for (const auto& p : cfg.p_values) {
        const ExactMatrix m = represent_words(diff, b, QValue(p));
        r.add({rel.name, rel.anchor, "exact", b.label(), p.get_str(), status_for(m.is_zero(), rel.expect_failure), m.is_zero() ? "0" : "nonzero"});
        const double x = p.get_d();
        double d = 0;
        double scale = 1;
        try {
          d = frobenius(represent_words_float(diff, b, x));
          scale = std::max(1.0, frobenius(represent_words_float(lhs, b, x)) + frobenius(represent_words_float(rhs, b, x)));
        } catch (const DivisionByZero&) {
          continue;
        }
        r.add({rel.name, rel.anchor, "float", b.label(), p_text(x), status_for(d / scale <= kFloatRelativeTolerance, rel.expect_failure),
               "relative frobenius " + sci(d / scale)});
      }
  }
  return r;
}

VerificationReport suq2_suite(const SuiteConfig& cfg) {
  const RelationSet oscillator{
      {"oscillator.js1.mode1", "q-oscillator", "a1*ad1 - q^-1*ad1*a1", "qpow(1,1)"},
      {"oscillator.js2.mode1", "q-oscillator", "a1*ad1 - q*ad1*a1", "qpow(-1,1)"},
      {"oscillator.js1.mode2", "q-oscillator", "a2*ad2 - q^-1*ad2*a2", "qpow(1,2)"},
      {"oscillator.js2.mode2", "q-oscillator", "a2*ad2 - q*ad2*a2", "qpow(-1,2)"},
  };
  const auto blocks = pair_blocks(cfg.max_block);
  VerificationReport r = word_relations(oscillator, blocks, cfg);
  const GeneratorSet js = js_generators();
  r.append(check_relations(basis_relations(BasisId::kKulish), js.env(), blocks, options(cfg)));
  const GeneratorSet dj = basis_transform(js, BasisId::kDrinfeldJimbo);
  r.append(check_relations(basis_relations(BasisId::kDrinfeldJimbo), dj.env(), blocks, options(cfg)));
  return r;
}

VerificationReport bases_suite(const SuiteConfig& cfg) {
  TransformOptions literal;
  literal.paper_literal = true;
  TransformOptions chosen;
  chosen.paper_literal = cfg.paper_literal;

  const auto blocks = pair_blocks(cfg.max_block);
  const GeneratorSet dj = basis_transform(js_generators(), BasisId::kDrinfeldJimbo);
  VerificationReport r;

  const GeneratorSet w = basis_transform(dj, BasisId::kWoronowicz, chosen);
  r.append(check_relations(prefixed(basis_relations(BasisId::kWoronowicz), "bases.", cfg.paper_literal), w.env(), blocks, options(cfg)));
  const GeneratorSet tau = basis_transform(dj, BasisId::kTau);
  r.append(check_relations(prefixed(basis_relations(BasisId::kTau), "bases."), tau.env(), blocks, options(cfg)));
  if (!cfg.paper_literal) {
    const GeneratorSet wl = basis_transform(dj, BasisId::kWoronowicz, literal);
    r.append(check_relations(prefixed(basis_relations(BasisId::kWoronowicz), "bases.printed_map.", true), wl.env(), {}, symbolic_only()));
  }

  const auto round_trip = [&](const std::string& name, const GeneratorSet& from, const GeneratorSet& back) {
    bool same = from.elements == back.elements;
    std::string residual = "0";
    if (!same) {
      for (const auto& [k, x] : from.elements) {
        const auto it = back.elements.find(k);
        if (it == back.elements.end()) {
          residual = k + " missing";
          break;
        }
        if (it->second != x) {
          residual = k + ": " + describe_residual(it->second - x);
          break;
        }
      }
    }
    r.add({"bases.round_trip." + name, "basis dictionary", "symbolic", "-", "generic", status_for(same, false), residual});
  };
  round_trip("woronowicz", dj, basis_transform(w, BasisId::kDrinfeldJimbo, chosen));
  round_trip("tau", dj, basis_transform(tau, BasisId::kDrinfeldJimbo));
  round_trip("kulish", dj, basis_transform(basis_transform(dj, BasisId::kKulish), BasisId::kDrinfeldJimbo));
  round_trip("woronowicz_tau", w, basis_transform(basis_transform(w, BasisId::kTau), BasisId::kWoronowicz));
  const GeneratorSet via = woronowicz_via_tau(dj);
  r.add({"bases.two_stage_map", "basis dictionary", "symbolic", "-", "generic", status_for(via.elements == w.elements, cfg.paper_literal),
         via.elements == w.elements ? "0" : "T3: " + describe_residual(w.at("T3") - via.at("T3"))});

  CheckOptions reps = options(cfg);
  for (BasisId b : {BasisId::kKulish, BasisId::kDrinfeldJimbo, BasisId::kWoronowicz, BasisId::kTau}) {
    const MatrixSet m = fundamental_rep(b);
    r.append(check_matrix_relations(prefixed(basis_relations(b, b == BasisId::kDrinfeldJimbo), "rep2."), m.elements, 2, reps));
  }
  const MatrixSet printed = fundamental_rep(BasisId::kDrinfeldJimbo, true);
  r.append(check_matrix_relations(prefixed(basis_relations(BasisId::kDrinfeldJimbo, true), "rep2.printed_jminus.", true), printed.elements, 2, reps));

  Environment<ExactMatrix> maps = fundamental_rep(BasisId::kDrinfeldJimbo).elements;
  maps["T3"] = fundamental_rep(BasisId::kWoronowicz).elements.at("T3");
  maps["tau3"] = fundamental_rep(BasisId::kTau).elements.at("tau3");
  const RelationSet map_rows{
      {"rep2.map.t3", "basis dictionary", "(1 - qmJ3^4)*(q - q^-1)^-1", "T3"},
      {"rep2.map.tau3", "basis dictionary", "qmJ3^4", "tau3"},
      {"rep2.map.tau3_t3", "basis dictionary", "1 - (q - q^-1)*T3", "tau3"},
      {"rep2.map.printed_t3", "basis dictionary", "(1 - qJ3^4)*(q - q^-1)^-1", "T3", true},
  };
  r.append(check_matrix_relations(map_rows, maps, 2, reps));
  return r;
}

VerificationReport lorentz_suite(const SuiteConfig& cfg) {
  const Variant v = cfg.paper_literal ? Variant::kPaperLiteral : Variant::kCorrected;
  const LorentzGenerators g = rotation_boost_generators(v);
  const int max_n = std::min(cfg.max_block, kLorentzBlockLimit);
  VerificationReport r = verify_lorentz_relations(g, max_n, cfg.p_values);
  r.append(classical_limit_check(g));
  for (double p : float_p(cfg)) r.append(spectral_experiment(g, FockBlock::lorentz(std::min(2, max_n), std::min(1, max_n)), p));
  return r;
}

VerificationReport minkowski_suite(const SuiteConfig& cfg) {
  VerificationReport r = verify_qm_relations(cfg.max_block, cfg.p_values);
  r.append(central_elements_check(cfg.max_block, cfg.p_values));
  r.append(coordinate_check());
  r.append(metric_form_check(cfg.max_block, cfg.p_values));
  for (double p : float_p(cfg)) r.append(reality_check(cfg.max_block, p));
  return r;
}

bool keep(const ReportEntry& e, BackendFilter b) {
  switch (b) {
    case BackendFilter::kAll: return true;
    case BackendFilter::kSymbolic: return e.backend == "symbolic";
    case BackendFilter::kExact: return e.backend == "exact";
    case BackendFilter::kFloat: return e.backend == "float" || e.backend == "spectral";
  }
  return true;
}

std::string p_list(const std::vector<Rational>& ps) {
  std::string out;
  for (const auto& p : ps) out += (out.empty() ? "" : ",") + p.get_str();
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"suq2", "bases", "lorentz", "hopf", "minkowski"};
  return names;
}

std::string to_string(BackendFilter b) {
  switch (b) {
    case BackendFilter::kSymbolic: return "symbolic";
    case BackendFilter::kExact: return "exact";
    case BackendFilter::kFloat: return "float";
    case BackendFilter::kAll: return "all";
  }
  return "?";
}

BackendFilter backend_from_string(const std::string& s) {
  if (s == "symbolic") return BackendFilter::kSymbolic;
  if (s == "exact") return BackendFilter::kExact;
  if (s == "float") return BackendFilter::kFloat;
  if (s == "all") return BackendFilter::kAll;
  throw std::invalid_argument("unknown backend '" + s + "'");
}

SuiteConfig normalized(SuiteConfig cfg) {
  const auto& names = suite_names();
  if (cfg.suite != "all" && std::find(names.begin(), names.end(), cfg.suite) == names.end())
    throw std::invalid_argument("unknown suite '" + cfg.suite + "'");
  if (cfg.max_block < 1) throw std::invalid_argument("max block must be at least 1");
  if (cfg.p_values.empty()) throw std::invalid_argument("at least one p value is required");
  for (const auto& p : cfg.p_values)
    if (p == 0) throw std::invalid_argument("p = 0 is not allowed");
  if (std::find(cfg.p_values.begin(), cfg.p_values.end(), Rational(1)) == cfg.p_values.end()) cfg.p_values.emplace_back(1);
  return cfg;
}

VerificationReport run_suite(const SuiteConfig& cfg) {
  VerificationReport all;
  for (const auto& name : suite_names()) {
    if (cfg.suite != "all" && cfg.suite != name) continue;
    VerificationReport r;
    if (name == "suq2") r = suq2_suite(cfg);
    if (name == "bases") r = bases_suite(cfg);
    if (name == "lorentz") r = lorentz_suite(cfg);
    if (name == "hopf") r = hopf_axiom_check(hopf_maps(cfg.counit));
    if (name == "minkowski") r = minkowski_suite(cfg);
    for (auto& e : r.entries)
      if (keep(e, cfg.backend)) all.add(std::move(e));
  }
  return all;
}

std::string report_json(const SuiteConfig& cfg, const VerificationReport& r) {
  using json = nlohmann::ordered_json;
  json doc;
  doc["suite"] = cfg.suite;
  json p = json::array();
  for (const auto& x : cfg.p_values) p.push_back(x.get_str());
  doc["config"] = {{"p", p},
                   {"max_block", cfg.max_block},
                   {"lorentz_max_block", std::min(cfg.max_block, kLorentzBlockLimit)},
                   {"variant", cfg.paper_literal ? "paper-literal" : "corrected"},
                   {"counit", cfg.counit == CounitVariant::kStandard ? "standard" : "paper"},
                   {"backend", to_string(cfg.backend)}};
  json entries = json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"name", e.name},
                       {"paper_anchor", e.anchor},
                       {"backend", e.backend},
                       {"block", e.block},
                       {"p", e.p},
                       {"status", to_string(e.status)},
                       {"residual", e.residual}});
  doc["entries"] = std::move(entries);
  doc["summary"] = {{"pass", r.count(Status::kPass)}, {"fail", r.count(Status::kFail)}, {"flagged", r.count(Status::kFlagged)}};
  return doc.dump(2) + "\n";
}

std::string report_text(const SuiteConfig& cfg, const VerificationReport& r) {
  std::ostringstream os;
  os << "suite " << cfg.suite << "  p=" << p_list(cfg.p_values) << "  max-block " << cfg.max_block << "  "
     << (cfg.paper_literal ? "paper-literal" : "corrected") << "  counit "
     << (cfg.counit == CounitVariant::kStandard ? "standard" : "paper") << "  backend " << to_string(cfg.backend) << "\n";
  for (const auto& e : r.entries) {
    os << to_string(e.status) << "  " << e.name << "  [" << e.backend << " " << e.block << " p=" << e.p << "]";
    if (e.status != Status::kPass || e.residual != "0") os << "  " << e.residual;
    os << "\n";
  }
  os << "pass " << r.count(Status::kPass) << "  fail " << r.count(Status::kFail) << "  flagged " << r.count(Status::kFlagged) << "\n";
  return os.str();
}

int exit_code(const VerificationReport& r) { return r.ok() ? 0 : 1; }

}  // namespace qlorentz
