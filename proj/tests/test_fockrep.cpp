#include <cmath>

#include "doctest.h"
#include "generators.hpp"
#include "qlorentz/expr.hpp"
#include "qlorentz/fock.hpp"

using namespace qlorentz;

namespace {

NormalForm nf(const std::string& text) { return normal_order(text); }

const QValue kP32{Rational(3, 2)};

std::complex<double> qbracket(std::complex<double> x, double p) {
  const double q = p * p;
  return (std::exp(x * std::log(q)) - std::exp(-x * std::log(q))) / (q - 1.0 / q);
}

}  // namespace

TEST_CASE("block bases") {
  const FockBlock b = FockBlock::pair(2);
  REQUIRE(b.dim() == 3);
  CHECK(b.basis()[0] == Occupation{2, 0, 0, 0});
  CHECK(b.basis()[2] == Occupation{0, 2, 0, 0});
  CHECK(FockBlock::lorentz(2, 3).dim() == 12);
  CHECK(FockBlock::pair(1, 3).basis()[0] == Occupation{0, 0, 1, 0});
  const FockBlock sum = FockBlock::direct_sum({FockBlock::lorentz(1, 0), FockBlock::lorentz(0, 1)});
  CHECK(sum.dim() == 4);
  CHECK(sum.label() == "(1,0)+(0,1)");
  CHECK(FockBlock::cutoff({1}, 3).dim() == 4);
}

TEST_CASE("examples on small blocks") {
  const FockBlock b1 = FockBlock::pair(1);
  const ExactMatrix k = represent(nf("qpow(1,1)"), b1);
  CHECK(k == diagonal<Scalar>({Scalar::q_power(1), Scalar(1)}));

  ExactMatrix jp(2, 2);
  jp(0, 1) = Scalar(1);
  CHECK(represent(nf("ad1*a2"), b1) == jp);

  const ExactMatrix comm = represent(nf("[ad1*a2, ad2*a1]"), b1);
  CHECK(comm == diagonal<Scalar>({Scalar(1), Scalar(-1)}));
  CHECK(commutator(represent(nf("ad1*a2"), b1), represent(nf("ad2*a1"), b1)) == comm);
  CHECK(represent(nf("(qpow(1,1)*qpow(-1,2) - qpow(-1,1)*qpow(1,2))*(q-q^-1)^-1"), b1) == comm);
}

TEST_CASE("grading errors and cutoff mode") {
  CHECK_THROWS_AS(represent(nf("a1"), FockBlock::pair(2)), GradingError);
  CHECK_THROWS_WITH(represent(nf("ad3*a1"), FockBlock::lorentz(1, 1)), "operator leaves graded block");
  const FockBlock c = FockBlock::cutoff({1}, 2);
  const ExactMatrix a = represent(nf("a1"), c);
  CHECK(a(0, 1) == Scalar(1));
  CHECK(a(1, 2) == qnum(2));
  const ExactMatrix ad = represent(nf("ad1"), c);
  CHECK(ad(2, 1) == Scalar(1));
  CHECK(c.untrusted_rows() == std::vector<std::size_t>{2});
}

TEST_CASE("poles in coefficients are specialized after summation") {
  // [N1] = (q^N - q^-N)/(q - q^-1) is finite at p = 1
  const NormalForm n1 = nf("ad1*a1");
  const ExactMatrix m = represent(n1, FockBlock::pair(3), QValue(Rational(1)));
  CHECK(m == diagonal<Scalar>({Scalar(3), Scalar(2), Scalar(1), Scalar(0)}));
  CHECK_THROWS_AS(represent_float(n1, FockBlock::pair(3), 1.0), DivisionByZero);
}

TEST_CASE("defining relations as matrices on every pair block") {
  const WordSum r1 = expand_words(parse("a1*ad1 - q^-1*ad1*a1 - qpow(1,1)"));
  const WordSum r2 = expand_words(parse("a1*ad1 - q*ad1*a1 - qpow(-1,1)"));
  for (const Rational& p : {Rational(1), Rational(3, 2), Rational(7, 5)}) {
    for (int n = 0; n <= 8; ++n) {
      const FockBlock b = FockBlock::pair(n);
      CHECK(represent_words(r1, b, QValue(p)).is_zero());
      CHECK(represent_words(r2, b, QValue(p)).is_zero());
      CHECK(frobenius(represent_words_float(r1, b, p.get_d())) <= 1e-10);
      CHECK(frobenius(represent_words_float(r2, b, p.get_d())) <= 1e-10);
    }
  }
}

TEST_CASE("equivalence checks") {
  std::vector<FockBlock> small;
  for (int n = 0; n <= 4; ++n) small.push_back(FockBlock::pair(n));
  auto r = equivalence_check(nf("a1*ad1"), nf("q^-1*ad1*a1 + qpow(1,1)"), small, kP32, 1.2);
  CHECK(r.ok());
  CHECK(r.entries.size() == 10);
  CHECK(equivalence_check(nf("ad2*a1"), nf("ad2*a1"), small, kP32, 1.2).ok());

  std::vector<FockBlock> blocks;
  for (int n = 0; n <= 6; ++n) blocks.push_back(FockBlock::pair(n));
  CHECK(equivalence_check(nf("[ad1*a2, ad2*a1]"), nf("(qpow(1,1)*qpow(-1,2) - qpow(-1,1)*qpow(1,2))*(q-q^-1)^-1"), blocks,
                          kP32, 1.5)
            .ok());
  CHECK_FALSE(equivalence_check(nf("ad1*a1"), nf("ad2*a2"), small, kP32, 1.2).ok());
}

TEST_CASE("(ad2 a1)(ad1 a2) against the block product") {
  const NormalForm x = nf("ad2*a1");
  const NormalForm y = nf("ad1*a2");
  for (int n = 0; n <= 5; ++n) {
    const FockBlock b = FockBlock::pair(n);
    CHECK(represent(x * y, b) == represent(x, b) * represent(y, b));
    CHECK(represent(x * y, b) == represent(nf("q^-1*ad1*a1*ad2*a2 + qpow(1,1)*ad2*a2"), b));
  }
}

TEST_CASE("homomorphism on random elements") {
  qtest::Gen gen(41);
  for (int k = 0; k < 25; ++k) {
    const NormalForm x = nf(gen.conserving_expr(4, 2));
    const NormalForm y = nf(gen.conserving_expr(4, 2));
    for (int n = 0; n <= 5; ++n) {
      const FockBlock b = FockBlock::pair(n);
      CHECK(represent(x * y, b, kP32) == represent(x, b, kP32) * represent(y, b, kP32));
    }
  }
}

TEST_CASE("symmetric and shift backends are similar") {
  qtest::Gen gen(8);
  const double p = 1.3;
  for (int k = 0; k < 20; ++k) {
    const NormalForm x = nf(gen.conserving_expr(4, 2));
    for (int n = 0; n <= 5; ++n) {
      const FockBlock b = FockBlock::pair(n);
      const FloatMatrix e = to_float(represent(x, b), p);
      const FloatMatrix s = represent_float(x, b, p);
      // |n>_sym = |n>_shift / sqrt([n]!) per mode
      std::vector<double> d;
      for (const auto& occ : b.basis()) {
        double f = 1.0;
        for (int m : {0, 1})
          for (int j = 1; j <= occ[static_cast<std::size_t>(m)]; ++j) f *= qnum_float(j, p);
        d.push_back(std::sqrt(f));
      }
      FloatMatrix conj = e;
      for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) conj(i, j) *= d[i] / d[j];
      CHECK(frobenius(conj - s) <= 1e-10 * std::max(1.0, frobenius(s)));
    }
  }
}

TEST_CASE("float symmetric ladder operators are transposes") {
  const FockBlock c = FockBlock::cutoff({1}, 5);
  const FloatMatrix a = represent_float(nf("a1"), c, 1.4);
  const FloatMatrix ad = represent_float(nf("ad1"), c, 1.4);
  CHECK(frobenius(adjoint(a) - ad) <= 1e-14);
}

TEST_CASE("generator grading") {
  for (const char* g : {"ad1*a2", "ad2*a1", "qpow(1/2,1)*qpow(-1/2,2)", "ad3*a4", "qpow(-1,3)*ad4*a3"}) {
    const NormalForm x = nf(g);
    for (int n = 0; n <= 3; ++n)
      for (int nb = 0; nb <= 3; ++nb) CHECK_NOTHROW(represent(x, FockBlock::lorentz(n, nb)));
  }
}

TEST_CASE("spectral function") {
  FloatMatrix m(3, 3);
  m(0, 0) = 1.0;
  m(0, 1) = 2.0;
  m(1, 1) = 3.0;
  m(2, 2) = -1.0;
  const FloatMatrix id = spectral_function(m, [](std::complex<double> x) { return x; });
  CHECK(frobenius(id - m) <= 1e-12);

  const double p = 1.5;  // q = 9/4
  const FloatMatrix d = diagonal<std::complex<double>>({2.0, -2.0});
  const FloatMatrix f = spectral_function(d, [p](std::complex<double> x) { return qbracket(x, p); });
  const double q2 = qnum(2).eval(p).real();
  CHECK(std::abs(f(0, 0) - q2) <= 1e-12);
  CHECK(std::abs(f(1, 1) + q2) <= 1e-12);

  FloatMatrix jordan(2, 2);
  jordan(0, 1) = 1.0;
  CHECK_THROWS_AS(spectral_function(jordan, [](std::complex<double> x) { return x; }), std::runtime_error);
}

TEST_CASE("parallel and serial word kernels agree") {
  qtest::Gen gen(12);
  for (int k = 0; k < 10; ++k) {
    const WordSum w = expand_words(parse(gen.conserving_expr(4, 2)));
    const FockBlock b = FockBlock::pair(7);
    CHECK(represent_words(w, b, kP32) == represent_words_serial(w, b, kP32));
    CHECK(represent_words_float(w, b, 1.3) == represent_words_float_serial(w, b, 1.3));
    const ExactMatrix m = represent_words(w, b, kP32);
    CHECK(multiply(m, m) == multiply_serial(m, m));
  }
}
