#include "qlorentz/suq2.hpp"

#include <stdexcept>

namespace qlorentz {

std::string to_string(BasisId b) {
  switch (b) {
    case BasisId::kKulish: return "kulish";
    case BasisId::kDrinfeldJimbo: return "drinfeld-jimbo";
    case BasisId::kWoronowicz: return "woronowicz";
    case BasisId::kTau: return "tau";
  }
  return "?";
}

BasisId basis_from_string(const std::string& s) {
  if (s == "kulish" || s == "1") return BasisId::kKulish;
  if (s == "drinfeld-jimbo" || s == "jimbo" || s == "dj" || s == "2") return BasisId::kDrinfeldJimbo;
  if (s == "woronowicz" || s == "3") return BasisId::kWoronowicz;
  if (s == "tau") return BasisId::kTau;
  throw std::invalid_argument("unknown basis '" + s + "'");
}

const NormalForm& GeneratorSet::at(const std::string& label) const {
  if (label == "J3") throw UnrepresentableGenerator();
  auto it = elements.find(label);
  if (it == elements.end()) throw std::out_of_range("no generator '" + label + "' in " + to_string(basis) + " set");
  return it->second;
}

Environment<NormalForm> GeneratorSet::env(const std::string& suffix) const {
  Environment<NormalForm> out;
  for (const auto& [k, v] : elements) out.emplace(k + suffix, v);
  return out;
}

int first_mode(Chirality c) { return c == Chirality::kUnbarred ? 1 : 3; }

namespace {

bool is_j_basis(BasisId b) { return b == BasisId::kKulish || b == BasisId::kDrinfeldJimbo; }

NormalForm eval_in(const std::string& text, const Environment<NormalForm>& env) { return normal_order(text, &env); }

GeneratorSet make(BasisId b, Chirality c, std::map<std::string, NormalForm> elements) {
  GeneratorSet g;
  g.basis = b;
  g.chirality = c;
  g.elements = std::move(elements);
  return g;
}

// tau3 from either of the two exponential-free bases.
NormalForm tau_of(const GeneratorSet& g) {
  if (g.basis == BasisId::kTau) return g.at("tau3");
  return eval_in("1 - (q - q^-1)*T3", g.env());
}

NormalForm invert_diagonal(const NormalForm& x) {
  const auto& [m, c] = *x.terms().begin();
  Monomial inv;
  for (int mode = 1; mode <= kNumModes; ++mode) inv[mode].h = -m[mode].h;
  return NormalForm::term(inv, c.inverse());
}

GeneratorSet to_j_basis(const GeneratorSet& g, BasisId target, const TransformOptions& opt) {
  const NormalForm tau = tau_of(g);
  const auto root = diagonal_root(tau, 4);
  if (!root) throw std::domain_error("tau3 is not a fourth power of a q-exponential");
  // tau3 = q^{-4J3}; the printed inverse reads it as q^{4J3}
  const NormalForm qj3 = opt.paper_literal ? *root : invert_diagonal(*root);
  Environment<NormalForm> env = g.env();
  env["qJ3"] = qj3;
  return make(target, g.chirality,
              {{"qJ3", qj3},
               {"qmJ3", invert_diagonal(qj3)},
               {"Jp", eval_in("p^-1*Tp*qJ3", env)},
               {"Jm", eval_in("p*Tm*qJ3", env)}});
}

}  // namespace

GeneratorSet js_generators(Chirality c) {
  const int m = first_mode(c);
  const int n = m + 1;
  NormalForm qj3 = NormalForm::qpow(1, m) * NormalForm::qpow(-1, n);
  NormalForm qmj3 = NormalForm::qpow(-1, m) * NormalForm::qpow(1, n);
  return make(BasisId::kKulish, c,
              {{"qJ3", qj3},
               {"qmJ3", qmj3},
               {"Jp", NormalForm::creator(m) * NormalForm::annihilator(n)},
               {"Jm", NormalForm::creator(n) * NormalForm::annihilator(m)}});
}

std::optional<NormalForm> diagonal_root(const NormalForm& x, int k) {
  if (k <= 0 || x.size() != 1) return std::nullopt;
  const auto& [m, c] = *x.terms().begin();
  if (!m.is_diagonal() || !c.is_one()) return std::nullopt;
  Monomial r;
  for (int mode = 1; mode <= kNumModes; ++mode) {
    if (m[mode].h % k != 0) return std::nullopt;
    r[mode].h = m[mode].h / k;
  }
  return NormalForm::term(r);
}

GeneratorSet woronowicz_via_tau(const GeneratorSet& g) {
  return basis_transform(basis_transform(g, BasisId::kTau), BasisId::kWoronowicz);
}

GeneratorSet basis_transform(const GeneratorSet& g, BasisId target, const TransformOptions& opt) {
  if (g.basis == target) return g;
  const Environment<NormalForm> env = g.env();
  if (is_j_basis(g.basis)) {
    if (is_j_basis(target)) return make(target, g.chirality, g.elements);
    std::map<std::string, NormalForm> out{{"Tp", eval_in("p*Jp*qmJ3", env)}, {"Tm", eval_in("p^-1*Jm*qmJ3", env)}};
    if (target == BasisId::kTau) {
      out["tau3"] = eval_in("qmJ3^4", env);
    } else {
      out["T3"] = eval_in(opt.paper_literal ? "(1 - qJ3^4)*(q - q^-1)^-1" : "(1 - qmJ3^4)*(q - q^-1)^-1", env);
    }
    return make(target, g.chirality, std::move(out));
  }
  if (is_j_basis(target)) return to_j_basis(g, target, opt);
  // tau <-> Woronowicz
  if (target == BasisId::kWoronowicz)
    return make(target, g.chirality,
                {{"T3", eval_in("(1 - tau3)*(q - q^-1)^-1", env)}, {"Tp", g.at("Tp")}, {"Tm", g.at("Tm")}});
  return make(target, g.chirality, {{"tau3", tau_of(g)}, {"Tp", g.at("Tp")}, {"Tm", g.at("Tm")}});
}

namespace {

ExactMatrix mat2(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
  ExactMatrix m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

}  // namespace

MatrixSet fundamental_rep(BasisId b, bool paper_literal) {
  const Scalar zero(0);
  const Scalar one(1);
  const Scalar p = Scalar::p_power(1);
  const Scalar q = Scalar::q_power(1);
  MatrixSet s;
  s.basis = b;
  s.elements["Tp"] = mat2(zero, one, zero, zero);
  s.elements["Tm"] = mat2(zero, zero, one, zero);
  switch (b) {
    case BasisId::kKulish:
    case BasisId::kDrinfeldJimbo: {
      s.elements["Jp"] = s.elements["Tp"];
      s.elements["Jm"] = s.elements["Tm"];
      s.elements.erase("Tp");
      s.elements.erase("Tm");
      s.elements["qJ3"] = mat2(p, zero, zero, p.inverse());
      s.elements["qmJ3"] = mat2(p.inverse(), zero, zero, p);
      if (b == BasisId::kDrinfeldJimbo) {
        s.elements["J3"] = mat2(Scalar(Rational(1, 2)), zero, zero, Scalar(Rational(-1, 2)));
        // sinh(2 eta)/sinh(eta) = q + q^-1
        if (paper_literal) s.elements["Jm"] = mat2(zero, zero, q + q.inverse(), zero);
      }
      break;
    }
    case BasisId::kWoronowicz:
      s.elements["T3"] = mat2(q.inverse(), zero, zero, -q);
      break;
    case BasisId::kTau:
      s.elements["tau3"] = mat2(q.pow(-2), zero, zero, q.pow(2));
      break;
  }
  return s;
}

RelationSet basis_relations(BasisId b, bool linear_j3) {
  const std::string pre = to_string(b);
  switch (b) {
    case BasisId::kKulish:
    case BasisId::kDrinfeldJimbo: {
      const std::string anchor = b == BasisId::kKulish ? "Kulish basis" : "Drinfel'd-Jimbo basis";
      RelationSet r{
          {pre + ".inverse", anchor, "qJ3*qmJ3", "1"},
          {pre + ".conj_plus", anchor, "qJ3*Jp*qmJ3", "q*Jp"},
          {pre + ".conj_minus", anchor, "qJ3*Jm*qmJ3", "q^-1*Jm"},
          {pre + ".bracket", anchor, "[Jp,Jm]", "(qJ3^2 - qmJ3^2)*(q - q^-1)^-1"},
      };
      if (linear_j3) {
        r.push_back({pre + ".j3_plus", anchor, "[J3,Jp]", "Jp"});
        r.push_back({pre + ".j3_minus", anchor, "[J3,Jm]", "-Jm"});
      }
      return r;
    }
    case BasisId::kWoronowicz:
      return {
          {pre + ".bracket", "Woronowicz basis", "q^-1*Tp*Tm - q*Tm*Tp", "T3"},
          {pre + ".t3_plus", "Woronowicz basis", "q^2*T3*Tp - q^-2*Tp*T3", "(q + q^-1)*Tp"},
          {pre + ".t3_minus", "Woronowicz basis", "q^-2*T3*Tm - q^2*Tm*T3", "-(q + q^-1)*Tm"},
      };
    case BasisId::kTau:
      return {
          {pre + ".bracket", "tau basis", "q^-1*Tp*Tm - q*Tm*Tp", "(1 - tau3)*(q - q^-1)^-1"},
          {pre + ".plus", "tau basis", "Tp*tau3", "q^4*tau3*Tp"},
          {pre + ".minus", "tau basis", "Tm*tau3", "q^-4*tau3*Tm"},
      };
  }
  return {};
}

RelationSet classical_relations() {
  return {
      {"classical.j3_plus", "su(2)", "[J3,Jp]", "Jp"},
      {"classical.j3_minus", "su(2)", "[J3,Jm]", "-Jm"},
      {"classical.bracket", "su(2)", "[Jp,Jm]", "2*J3"},
  };
}

}  // namespace qlorentz
