#include "doctest.h"
#include "generators.hpp"
#include "qlorentz/fock.hpp"
#include "qlorentz/relations.hpp"
#include "qlorentz/suq2.hpp"

using namespace qlorentz;

namespace {

NormalForm nf(const std::string& text) { return normal_order(text); }

std::vector<FockBlock> pair_blocks(int max_n, int first = 1) {
  std::vector<FockBlock> out;
  for (int n = 0; n <= max_n; ++n) out.push_back(FockBlock::pair(n, first));
  return out;
}

CheckOptions symbolic_only() {
  CheckOptions o;
  o.exact = false;
  o.floating = false;
  return o;
}

CheckOptions with_p(std::vector<Rational> ps) {
  CheckOptions o;
  o.p_values = std::move(ps);
  return o;
}

std::string failures(const VerificationReport& r) {
  std::string out;
  for (const auto& e : r.entries)
    if (e.status != Status::kPass) out += e.name + " " + e.backend + " " + e.block + " p=" + e.p + ": " + e.residual + "\n";
  return out;
}

}  // namespace

TEST_CASE("q-Jordan-Schwinger generators") {
  const GeneratorSet g = js_generators();
  CHECK(g.at("Jp").str() == "ad1*a2");
  CHECK(g.at("Jm").str() == "ad2*a1");
  CHECK(g.at("qJ3").str() == "qpow(1/2,1)*qpow(-1/2,2)");
  CHECK(g.at("qJ3") * g.at("qmJ3") == NormalForm(1));

  const GeneratorSet b = js_generators(Chirality::kBarred);
  CHECK(b.at("Jp").str() == "ad3*a4");
  CHECK(b.at("qmJ3").str() == "qpow(-1/2,3)*qpow(1/2,4)");
  for (const auto& [k1, x] : g.elements)
    for (const auto& [k2, y] : b.elements) CHECK_MESSAGE(x * y == y * x, k1 << " with barred " << k2);

  CHECK_THROWS_WITH_AS(g.at("J3"), "only exponential generators are representable", UnrepresentableGenerator);
  CHECK_THROWS_AS(g.at("T3"), std::out_of_range);
}

TEST_CASE("Kulish relations from q-bosons") {
  const GeneratorSet g = js_generators();
  const VerificationReport sym = check_relations(basis_relations(BasisId::kKulish), g.env(), {}, symbolic_only());
  CHECK_MESSAGE(sym.ok(), failures(sym));
  CHECK(sym.count(Status::kPass) == 4);

  // bracket on every block up to n = 8, exact and float
  RelationSet bracket;
  for (const auto& r : basis_relations(BasisId::kKulish))
    if (r.name == "kulish.bracket") bracket.push_back(r);
  const VerificationReport blocks = check_relations(bracket, g.env(), pair_blocks(8), with_p({Rational(3, 2), Rational(7, 5)}));
  CHECK_MESSAGE(blocks.ok(), failures(blocks));
  CHECK(blocks.count(Status::kPass) == 1 + 9 * 2 * 2);

  const GeneratorSet b = js_generators(Chirality::kBarred);
  const VerificationReport barred = check_relations(basis_relations(BasisId::kKulish), b.env(), pair_blocks(3, 3), with_p({Rational(7, 5)}));
  CHECK_MESSAGE(barred.ok(), failures(barred));
}

TEST_CASE("Woronowicz image of the q-boson generators") {
  const GeneratorSet dj = basis_transform(js_generators(), BasisId::kDrinfeldJimbo);
  const GeneratorSet w = basis_transform(dj, BasisId::kWoronowicz);
  CHECK(w.at("T3") == nf("(1 - qpow(-2,1)*qpow(2,2))*(q - q^-1)^-1"));
  // J+ q^{-J3} q^{1/2} moved into canonical order picks up q
  CHECK(w.at("Tp").str() == "p^3*qpow(-1/2,1)*qpow(1/2,2)*ad1*a2");
  CHECK(w.at("Tm").str() == "p^-3*qpow(-1/2,1)*qpow(1/2,2)*ad2*a1");

  const VerificationReport rep =
      check_relations(basis_relations(BasisId::kWoronowicz), w.env(), pair_blocks(6), with_p({Rational(1), Rational(3, 2), Rational(7, 5)}));
  CHECK_MESSAGE(rep.ok(), failures(rep));

  const GeneratorSet tau = basis_transform(dj, BasisId::kTau);
  CHECK(tau.at("tau3").str() == "qpow(-2,1)*qpow(2,2)");
  const VerificationReport trep = check_relations(basis_relations(BasisId::kTau), tau.env(), pair_blocks(4), with_p({Rational(3, 2)}));
  CHECK_MESSAGE(trep.ok(), failures(trep));

  CHECK(woronowicz_via_tau(dj).elements == w.elements);
}

TEST_CASE("printed direct map") {
  TransformOptions literal;
  literal.paper_literal = true;
  const GeneratorSet dj = basis_transform(js_generators(), BasisId::kDrinfeldJimbo);
  const GeneratorSet w = basis_transform(dj, BasisId::kWoronowicz, literal);
  CHECK(w.at("T3") == nf("(1 - qpow(2,1)*qpow(-2,2))*(q - q^-1)^-1"));
  CHECK(w.at("T3") != woronowicz_via_tau(dj).at("T3"));

  const VerificationReport rep = check_relations(basis_relations(BasisId::kWoronowicz), w.env(), {}, symbolic_only());
  CHECK(!rep.ok());
  for (const auto& e : rep.entries) CHECK_MESSAGE(e.status == Status::kFail, e.name);

  // self-consistent with its own inverse
  const GeneratorSet back = basis_transform(w, BasisId::kDrinfeldJimbo, literal);
  CHECK(back.elements == dj.elements);
}

TEST_CASE("round trips") {
  const GeneratorSet dj = basis_transform(js_generators(), BasisId::kDrinfeldJimbo);
  for (BasisId mid : {BasisId::kWoronowicz, BasisId::kTau, BasisId::kKulish}) {
    const GeneratorSet back = basis_transform(basis_transform(dj, mid), BasisId::kDrinfeldJimbo);
    CHECK_MESSAGE(back.elements == dj.elements, to_string(mid));
  }
  const GeneratorSet w = basis_transform(dj, BasisId::kWoronowicz);
  CHECK(basis_transform(basis_transform(w, BasisId::kTau), BasisId::kWoronowicz).elements == w.elements);

  const GeneratorSet wb = basis_transform(js_generators(Chirality::kBarred), BasisId::kWoronowicz);
  CHECK(wb.chirality == Chirality::kBarred);
  CHECK(basis_transform(wb, BasisId::kKulish).elements == js_generators(Chirality::kBarred).elements);
}

TEST_CASE("diagonal roots") {
  CHECK(diagonal_root(nf("qpow(-2,1)*qpow(2,2)"), 4) == nf("qpow(-1/2,1)*qpow(1/2,2)"));
  CHECK(!diagonal_root(nf("qpow(1,1)"), 4));
  CHECK(!diagonal_root(nf("2*qpow(2,1)"), 4));
  CHECK(!diagonal_root(nf("ad1*a2"), 1));

  GeneratorSet bad;
  bad.basis = BasisId::kWoronowicz;
  bad.elements = {{"T3", nf("ad1*a1")}, {"Tp", nf("ad1*a2")}, {"Tm", nf("ad2*a1")}};
  CHECK_THROWS_AS(basis_transform(bad, BasisId::kDrinfeldJimbo), std::domain_error);
}

TEST_CASE("fundamental representations") {
  const Scalar p = Scalar::p_power(1);
  const Scalar q = Scalar::q_power(1);
  const MatrixSet k = fundamental_rep(BasisId::kKulish);
  CHECK(k.elements.at("qJ3") == diagonal<Scalar>({p, p.inverse()}));
  const MatrixSet w = fundamental_rep(BasisId::kWoronowicz);
  CHECK(w.elements.at("T3") == diagonal<Scalar>({q.inverse(), -q}));

  const std::vector<Rational> ps{Rational(1), Rational(3, 2), Rational(2, 7)};
  for (BasisId b : {BasisId::kKulish, BasisId::kDrinfeldJimbo, BasisId::kWoronowicz, BasisId::kTau}) {
    const MatrixSet m = fundamental_rep(b);
    const VerificationReport rep = check_matrix_relations(basis_relations(b, b == BasisId::kDrinfeldJimbo), m.elements, 2, with_p(ps));
    CHECK_MESSAGE(rep.ok(), to_string(b) << "\n" << failures(rep));
  }

  // the printed J- entry q + q^-1 breaks the bracket
  const MatrixSet lit = fundamental_rep(BasisId::kDrinfeldJimbo, true);
  const ExactMatrix res = residual_matrix({"b", "", "[Jp,Jm]", "(qJ3^2 - qmJ3^2)*(q - q^-1)^-1"}, lit.elements, 2);
  CHECK(res == diagonal<Scalar>({q + q.inverse() - 1, 1 - q - q.inverse()}));
  const ExactMatrix ok = residual_matrix({"b", "", "[Jp,Jm]", "(qJ3^2 - qmJ3^2)*(q - q^-1)^-1"},
                                         fundamental_rep(BasisId::kDrinfeldJimbo).elements, 2);
  CHECK(ok.is_zero());
}

TEST_CASE("maps on the fundamental representation") {
  Environment<ExactMatrix> env = fundamental_rep(BasisId::kDrinfeldJimbo).elements;
  env["T3"] = fundamental_rep(BasisId::kWoronowicz).elements.at("T3");
  env["tau3"] = fundamental_rep(BasisId::kTau).elements.at("tau3");
  CHECK(residual_matrix({"corrected", "", "(1 - qmJ3^4)*(q - q^-1)^-1", "T3"}, env, 2).is_zero());
  CHECK(residual_matrix({"tau", "", "qmJ3^4", "tau3"}, env, 2).is_zero());
  CHECK(residual_matrix({"tau-T3", "", "1 - (q - q^-1)*T3", "tau3"}, env, 2).is_zero());
  // printed form lands on diag(-q, q^-1)
  env["printed"] = diagonal<Scalar>({-Scalar::q_power(1), Scalar::q_power(-1)});
  CHECK(residual_matrix({"printed", "", "(1 - qJ3^4)*(q - q^-1)^-1", "printed"}, env, 2).is_zero());
}

TEST_CASE("classical limit on matrices") {
  MatrixSet dj = fundamental_rep(BasisId::kDrinfeldJimbo);
  Environment<ExactMatrix> at1;
  for (const auto& [k, m] : dj.elements) at1[k] = specialize(m, QValue(Rational(1)));
  CHECK(at1.at("qJ3") == ExactMatrix::identity(2));
  CheckOptions o = with_p({Rational(1)});
  const VerificationReport rep = check_matrix_relations(classical_relations(), at1, 2, o);
  CHECK_MESSAGE(rep.ok(), failures(rep));
  // the deformed bracket, reduced before p = 1 is substituted
  const VerificationReport def = check_matrix_relations(basis_relations(BasisId::kDrinfeldJimbo), dj.elements, 2, o);
  CHECK_MESSAGE(def.ok(), failures(def));
}

TEST_CASE("property: Woronowicz relations at random p on random blocks") {
  qtest::Gen gen(20261015);
  const GeneratorSet w = basis_transform(js_generators(), BasisId::kWoronowicz);
  for (int trial = 0; trial < 12; ++trial) {
    Rational p = gen.rational(9);
    if (p == 0) p = Rational(5, 3);
    const int n = gen.uniform(0, 7);
    const bool barred = gen.coin();
    const GeneratorSet g = barred ? basis_transform(js_generators(Chirality::kBarred), BasisId::kWoronowicz) : w;
    const VerificationReport rep =
        check_relations(basis_relations(BasisId::kWoronowicz), g.env(), {FockBlock::pair(n, barred ? 3 : 1)}, [&] {
          CheckOptions o = with_p({p});
          o.symbolic = false;
          return o;
        }());
    CHECK_MESSAGE(rep.ok(), "p=" << p.get_str() << " n=" << n << "\n" << failures(rep));
  }
}
