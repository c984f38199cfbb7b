#pragma once

// Seeded random generators for property tests.

#include <algorithm>
#include <random>
#include <vector>
#include <string>

#include "qlorentz/expr.hpp"
#include "qlorentz/scalar.hpp"

namespace qtest {

using namespace qlorentz;

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  Rational rational(int bound = 5) {
    Rational r(uniform(-bound, bound), uniform(1, bound));
    r.canonicalize();
    return r;
  }

  LaurentPoly laurent(int max_terms = 3, int max_exp = 3) {
    LaurentPoly out;
    const int n = uniform(0, max_terms);
    for (int k = 0; k < n; ++k) out += LaurentPoly::monomial(rational(), uniform(-max_exp, max_exp));
    return out;
  }

  // Random scalar, occasionally with a nontrivial denominator and the i, sqrt2 units.
  Scalar scalar(bool extension = true) {
    std::array<LaurentPoly, 4> num{};
    num[0] = laurent();
    if (extension) {
      for (int k = 1; k < 4; ++k)
        if (uniform(0, 3) == 0) num[static_cast<std::size_t>(k)] = laurent(2, 2);
    }
    LaurentPoly den(1);
    if (coin()) {
      den = laurent(2, 2);
      if (den.is_zero()) den = LaurentPoly(1);
    }
    return Scalar(num, den);
  }

  Scalar nonzero_scalar(bool extension = true) {
    while (true) {
      Scalar s = scalar(extension);
      if (!s.is_zero()) return s;
    }
  }

  // Word of k creators and k annihilators over modes 1..modes in random order,
  // with up to two q-power letters mixed in.  Conserves total number.
  std::string balanced_word(int k, int modes) {
    std::vector<std::string> letters;
    for (int j = 0; j < k; ++j) {
      letters.push_back("ad" + std::to_string(uniform(1, modes)));
      letters.push_back("a" + std::to_string(uniform(1, modes)));
    }
    const int nq = uniform(0, 2);
    for (int j = 0; j < nq; ++j) {
      const int halves = uniform(-3, 3);
      const std::string c = halves % 2 == 0 ? std::to_string(halves / 2) : std::to_string(halves) + "/2";
      letters.push_back("qpow(" + c + "," + std::to_string(uniform(1, modes)) + ")");
    }
    std::shuffle(letters.begin(), letters.end(), rng_);
    if (letters.empty()) return "1";
    std::string out;
    for (const auto& l : letters) out += (out.empty() ? "" : "*") + l;
    return out;
  }

  std::string coefficient_text() {
    static const char* pool[] = {"1", "2", "(-1)", "1/2", "q", "p^-1", "(q-q^-1)", "qnum(2)", "i", "(1+i)", "sqrt2"};
    return pool[uniform(0, 10)];
  }

  // Random number-conserving expression with at most max_degree ladder letters per word.
  std::string conserving_expr(int max_degree, int modes) {
    const int terms = uniform(1, 3);
    std::string out;
    for (int t = 0; t < terms; ++t) {
      std::string term;
      switch (uniform(0, 3)) {
        case 0: {
          const int k1 = uniform(0, max_degree / 4);
          const int k2 = uniform(0, max_degree / 4);
          term = "[" + balanced_word(k1, modes) + ", " + balanced_word(k2, modes) + "]";
          break;
        }
        case 1: {
          const int k1 = uniform(0, max_degree / 4);
          const int k2 = uniform(0, max_degree / 4);
          term = "[" + balanced_word(k1, modes) + ", " + balanced_word(k2, modes) + ", w=" + coefficient_text() + "]";
          break;
        }
        default:
          term = balanced_word(uniform(0, max_degree / 2), modes);
      }
      out += (t == 0 ? "" : (coin() ? " + " : " - ")) + coefficient_text() + "*" + term;
    }
    return out;
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace qtest
