#include <cmath>

#include "doctest.h"
#include "generators.hpp"
#include "qlorentz/expr.hpp"
#include "qlorentz/scalar.hpp"

using namespace qlorentz;

namespace {

LaurentPoly P(int k) { return LaurentPoly::p_power(k); }

}  // namespace

TEST_CASE("laurent arithmetic and printing") {
  const LaurentPoly a = P(1) + P(-1);
  const LaurentPoly b = P(1) - P(-1);
  CHECK(a * b == P(2) - P(-2));
  CHECK((a * b).str() == "-p^-2 + p^2");
  CHECK(LaurentPoly(Rational(3, 2)).str() == "3/2");
  CHECK((P(-2) + LaurentPoly(1) - LaurentPoly::monomial(Rational(3, 2), 2)).str() == "p^-2 + 1 - 3/2*p^2");
  CHECK(LaurentPoly().str() == "0");
}

TEST_CASE("laurent gcd and exact division") {
  const LaurentPoly x = P(2) - LaurentPoly(1);  // p^2 - 1
  const LaurentPoly y = P(1) + LaurentPoly(1);  // p + 1
  CHECK(LaurentPoly::gcd(x, y) == y);
  CHECK(LaurentPoly::exact_div(x * P(-3), y) == (P(1) - LaurentPoly(1)).shifted(-3));
  CHECK_THROWS(LaurentPoly::exact_div(x, P(1) + LaurentPoly(2)));
}

TEST_CASE("field operations from the examples") {
  const Scalar p = Scalar::p_power(1);
  const Scalar pinv = Scalar::p_power(-1);
  CHECK((p + pinv) * (p - pinv) == Scalar::p_power(2) - Scalar::p_power(-2));
  const Scalar i = Scalar::i();
  CHECK((Scalar(1) + i) * (Scalar(1) - i) == Scalar(2));
  CHECK(Scalar::sqrt2() * Scalar::sqrt2() / Scalar(2) == Scalar(1));
  CHECK(i * i == Scalar(-1));
}

TEST_CASE("division by zero is an error") {
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), DivisionByZero);
  CHECK_THROWS_AS(Scalar().inverse(), DivisionByZero);
  CHECK_THROWS_AS(QValue(Rational(0)), std::invalid_argument);
  const Scalar pole = Scalar::q_minus_qinv().inverse();
  CHECK_THROWS_AS(pole.at(QValue(Rational(1))), DivisionByZero);
  CHECK_THROWS_AS(pole.eval(1.0), DivisionByZero);
  CHECK_FALSE(pole.try_at(QValue(Rational(-1))).has_value());
}

TEST_CASE("qnum") {
  CHECK(qnum(2) == Scalar::q_power(1) + Scalar::q_power(-1));
  CHECK(qnum(2).str() == "p^-2 + p^2");
  CHECK(qnum(5).at(QValue(Rational(1))) == Scalar(5));
  // q = 9/4: q^2 + 1 + q^-2
  CHECK(qnum_at(3, QValue(Rational(3, 2))) == Rational(8113, 1296));
  CHECK(qnum(0).is_zero());
  CHECK(qnum(1).is_one());
}

TEST_CASE("qnum identities for |n| <= 32") {
  for (int n = -32; n <= 32; ++n) {
    CAPTURE(n);
    CHECK(qnum(n) * Scalar::q_minus_qinv() == Scalar::q_power(n) - Scalar::q_power(-n));
    CHECK(qnum(-n) == -qnum(n));
    CHECK(qnum_at(n, QValue(Rational(1))) == n);
    CHECK(qnum(n).is_polynomial());
  }
}

TEST_CASE("float evaluation") {
  CHECK(qnum(2).eval(1.0).real() == doctest::Approx(2.0));
  CHECK((Scalar::i() * Scalar::i()).eval(0.7) == std::complex<double>(-1.0, 0.0));
  // q = 3/2
  const double q_minus = Scalar::q_minus_qinv().eval(std::sqrt(1.5)).real();
  CHECK(q_minus == doctest::Approx(0.8333333333333334).epsilon(1e-14));
}

TEST_CASE("scalar text round-trips through the parser") {
  qtest::Gen gen(11);
  for (int k = 0; k < 200; ++k) {
    const Scalar s = gen.scalar();
    CAPTURE(s.str());
    CHECK(parse_scalar(s.str()) == s);
  }
  CHECK(Scalar::i().str() == "i");
  CHECK((Scalar::i() * Scalar::sqrt2()).str() == "i*sqrt2");
  CHECK(Scalar(Rational(-1, 2)).str() == "-1/2");
}

TEST_CASE("field axioms on random scalars") {
  qtest::Gen gen(2024);
  for (int k = 0; k < 150; ++k) {
    const Scalar a = gen.scalar();
    const Scalar b = gen.scalar();
    const Scalar c = gen.scalar();
    CAPTURE(a.str());
    CAPTURE(b.str());
    CAPTURE(c.str());
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a - a == Scalar());
    if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
  }
}

TEST_CASE("float evaluation commutes with field operations") {
  qtest::Gen gen(7);
  const double p = 1.3;
  auto close = [](std::complex<double> x, std::complex<double> y) {
    return std::abs(x - y) <= 1e-12 * std::max({1.0, std::abs(x), std::abs(y)});
  };
  for (int k = 0; k < 150; ++k) {
    const Scalar a = gen.scalar();
    const Scalar b = gen.nonzero_scalar();
    CAPTURE(a.str());
    CAPTURE(b.str());
    CHECK(close((a + b).eval(p), a.eval(p) + b.eval(p)));
    CHECK(close((a * b).eval(p), a.eval(p) * b.eval(p)));
    CHECK(close((a / b).eval(p), a.eval(p) / b.eval(p)));
  }
}
