#include "doctest.h"
#include "generators.hpp"
#include "qlorentz/minkowski.hpp"

using namespace qlorentz;

namespace {

std::string failures(const VerificationReport& r) {
  std::string out;
  for (const auto& e : r.entries)
    if (e.status == Status::kFail) out += e.name + " " + e.backend + " " + e.block + " p=" + e.p + ": " + e.residual + "\n";
  return out;
}

const ReportEntry* find(const VerificationReport& r, const std::string& name, const std::string& backend) {
  for (const auto& e : r.entries)
    if (e.name == name && e.backend == backend) return &e;
  return nullptr;
}

}  // namespace

TEST_CASE("generator shapes") {
  const MinkowskiGenerators g = minkowski_generators();
  REQUIRE(g.A.size() == 1);
  const Monomial a = g.A.terms().begin()->first;
  CHECK(a[1].h == -2);
  CHECK(a[2].h == 2);
  CHECK(a.is_diagonal());

  REQUIRE(g.B.size() == 1);
  const auto& [b, cb] = *g.B.terms().begin();
  CHECK(cb == Scalar(1));
  CHECK(b[1].h == -1);
  CHECK(b[2].h == 1);
  CHECK(b[1].r == 1);
  CHECK(b[2].s == 1);

  // a^dagger a reduces to q-powers, so D is diagonal; its q^{N1 - N2} part cancels
  for (const auto& [m, c] : g.D.terms()) CHECK(m.is_diagonal());
  CHECK(g.D == normal_order("p^-4*qpow(-1,1)*qpow(-1,2) - p^-4*qpow(-1,1)*qpow(1,2) + qpow(1,1)*qpow(1,2)"));
  CHECK(g.D.coeff(a) == -Scalar::p_power(-4));
}

TEST_CASE("defining relations") {
  const VerificationReport rep = verify_qm_relations(8, {Rational(3, 2), Rational(7, 5)});
  CHECK_MESSAGE(rep.ok(), failures(rep));
  CHECK(rep.count(Status::kFlagged) == 0);
  for (const char* name : {"minkowski.AB", "minkowski.AD", "minkowski.BC"}) CHECK(find(rep, name, "symbolic")->residual == "0");

  // p = 1: everything commutes
  const auto env = minkowski_generators().env();
  const std::vector<std::string> labels{"A", "B", "C", "D"};
  for (int n = 0; n <= 4; ++n)
    for (const auto& x : labels)
      for (const auto& y : labels) {
        const ExactMatrix m = residual_on_block({"c", "", "[" + x + "," + y + "]", "0"}, env, FockBlock::pair(n), QValue(Rational(1)));
        CHECK_MESSAGE(m.is_zero(), x << " " << y << " n=" << n);
      }
}

TEST_CASE("central elements") {
  const VerificationReport rep = central_elements_check(6, {Rational(3, 2), Rational(7, 5)});
  CHECK_MESSAGE(rep.ok(), failures(rep));
  CHECK(find(rep, "central.L.A", "symbolic")->residual == "0");
  CHECK(find(rep, "central.trq.B", "symbolic")->residual == "0");
  CHECK(find(rep, "central.trace_form", "symbolic")->status == Status::kPass);

  // L collapses to the constant -q^-2
  const CentralElements c = central_elements(minkowski_generators());
  REQUIRE(c.length.as_scalar());
  CHECK(*c.length.as_scalar() == -Scalar::q_power(-2));

  const ExactMatrix l1 = represent(c.length, FockBlock::pair(1), QValue(Rational(1)));
  ExactMatrix scaled = ExactMatrix::identity(2);
  scaled *= l1(0, 0);
  CHECK(l1 == scaled);
}

TEST_CASE("coordinates") {
  const MinkowskiGenerators g = minkowski_generators();
  const CoordinateVector x = coordinates(g);
  const MinkowskiGenerators back = reassemble(x);
  CHECK(back.A == g.A);
  CHECK(back.B == g.B);
  CHECK(back.C == g.C);
  CHECK(back.D == g.D);
  CHECK(coordinate_check().ok());

  // X0 picks up A with weight 1/(sqrt2 q)
  const Scalar s = Scalar::sqrt2().inverse();
  const Scalar q = Scalar::q_power(1);
  CHECK(x.x[0] == g.A * (s * q.inverse()) + g.D * (s * q));
  CHECK(x.x[3] == g.A * -(s * q.inverse()) + g.D * (s * q));
}

TEST_CASE("deformed metric entries") {
  const ExactMatrix g = deformed_metric();
  const Scalar q = Scalar::q_power(1);
  CHECK(g(0, 1) == q * q);
  CHECK(g(1, 0) == Scalar(1));
  CHECK(g(2, 3) == Scalar(-1));
  CHECK(g(3, 2) == Scalar(-1));
  CHECK(g(3, 3) == q * q - Scalar(1));
  int nonzero = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (!g(i, j).is_zero()) ++nonzero;
  CHECK(nonzero == 5);
}

TEST_CASE("metric identity does not close") {
  const VerificationReport rep = metric_form_check(2, {Rational(3, 2)});
  const ReportEntry* row = find(rep, "metric.row_left", "symbolic");
  REQUIRE(row);
  CHECK(row->status == Status::kFail);
  CHECK(find(rep, "metric.column_left", "symbolic")->status == Status::kFlagged);
  // X0 is central, so both orderings give the same form
  CHECK(find(rep, "metric.orderings_agree", "symbolic")->status == Status::kPass);
  const ReportEntry* norm = find(rep, "metric.normalization", "symbolic");
  CHECK(norm->status == Status::kFail);
  CHECK(norm->residual.find("L = -p^-4") == 0);
  CHECK(find(rep, "metric.not_classical_at_1", "exact")->status == Status::kPass);

  // the failure is not a normalization issue: the form carries charged terms
  const CoordinateVector x = coordinates(minkowski_generators());
  const NormalForm form = metric_form(x);
  bool charged = false;
  for (const auto& [m, c] : form.terms()) charged = charged || m.charge(1) != 0;
  CHECK(charged);

  // float agrees with exact on the residual
  const auto env = [&] {
    auto e = x.env();
    e["L"] = central_elements(minkowski_generators()).length;
    return e;
  }();
  const FloatMatrix f = residual_on_block_float(
      {"m", "", "(q^2 + 1)^-1*(q^2*X0*X1 + X1*X0 - X2*X3 - X3*X2 + q*(q - q^-1)*X3*X3)", "L"}, env, FockBlock::pair(1), 1.3);
  CHECK(frobenius(f) > 1e-3);
}

TEST_CASE("reality of the coordinates") {
  const VerificationReport rep = reality_check(3, 1.3);
  for (const auto& e : rep.entries) {
    const bool diagonal_coordinate = e.name == "reality.X0" || e.name == "reality.X3";
    CHECK_MESSAGE((e.status == Status::kPass) == diagonal_coordinate, e.name << " " << e.block << " " << e.residual);
  }
}

TEST_CASE("property: relations at random p") {
  qtest::Gen gen(4242);
  const auto env = minkowski_generators().env();
  for (int trial = 0; trial < 12; ++trial) {
    Rational p = gen.rational(9);
    if (p == 0) p = Rational(-3, 2);
    CheckOptions o;
    o.symbolic = false;
    o.p_values = {p};
    const VerificationReport rep = check_relations(qm_relations(), env, {FockBlock::pair(gen.uniform(0, 6))}, o);
    CHECK_MESSAGE(rep.ok(), "p=" << p.get_str() << "\n" << failures(rep));
  }
}
