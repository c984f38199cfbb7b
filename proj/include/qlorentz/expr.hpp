#pragma once

// Expression language over q-boson generators.
//
//   expr   := ["-"] term (("+"|"-") term)*
//   term   := factor ("*" factor)*
//   factor := atom ("^" ["-"] INT)?
//   atom   := NUMBER | "p" | "q" | "i" | "sqrt2"
//           | ("a"|"ad") MODE | "qpow(" HALFINT "," MODE ")" | "qnum(" INT ")"
//           | "[" expr "," expr ("," "w=" expr)? "]" | "(" expr ")" | NAME
//
// NAME atoms are looked up in a caller-supplied environment (generator sets
// such as Jp, qJ3, T3).  Negative powers are only defined for scalar values.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qlorentz/normal_form.hpp"
#include "qlorentz/scalar.hpp"

namespace qlorentz {

enum class GeneratorKind { kAnnihilator, kCreator };

struct Expr {
  enum class Kind { kSum, kNeg, kProduct, kPower, kScalar, kCommutator, kQCommutator, kQNum, kQPow, kGenerator, kSymbol };

  Kind kind = Kind::kScalar;
  std::vector<Expr> children;  // Sum/Product: operands; Power/Neg: base; (Q)Commutator: x, y[, w]
  Scalar value;                // kScalar
  int integer = 0;             // kPower exponent, kQNum argument, kQPow exponent in halves
  int mode = 0;                // kQPow, kGenerator
  GeneratorKind generator = GeneratorKind::kAnnihilator;
  std::string name;            // kSymbol

  static Expr scalar(const Scalar& s);
  static Expr generator_atom(GeneratorKind g, int mode);
  static Expr qpow(int halves, int mode);
  static Expr symbol(std::string name);
  static Expr sum(std::vector<Expr> terms);
  static Expr product(std::vector<Expr> factors);
  static Expr neg(Expr e);
  static Expr power(Expr base, int exponent);
  static Expr commutator(Expr x, Expr y);
  static Expr qcommutator(Expr x, Expr y, Expr w);

  /// Fully parenthesised DSL text; parses back to an equal tree.
  std::string str() const;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, std::vector<std::string> expected, const std::string& found);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  int line_;
  int column_;
  std::vector<std::string> expected_;
};

Expr parse(const std::string& text);

/// Thrown when evaluation meets an unbound symbol, a non-scalar negative
/// power or weight, or another ill-formed construct.
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Named values for NAME atoms.
template <class Value>
using Environment = std::map<std::string, Value>;

/// Generic evaluation of an expression tree into an algebra.
///
/// Algebra must provide: Value from_scalar(Scalar), generator(GeneratorKind, int),
/// qpow(int halves, int mode), symbol(const std::string&), add(Value, Value),
/// mul(Value, Value), scale(Scalar, Value), and std::optional<Scalar> as_scalar(Value).
template <class Algebra>
auto evaluate(const Expr& e, const Algebra& alg) -> decltype(alg.from_scalar(Scalar())) {
  using Value = decltype(alg.from_scalar(Scalar()));
  switch (e.kind) {
    case Expr::Kind::kScalar:
      return alg.from_scalar(e.value);
    case Expr::Kind::kQNum:
      return alg.from_scalar(qnum(e.integer));
    case Expr::Kind::kQPow:
      return alg.qpow(e.integer, e.mode);
    case Expr::Kind::kGenerator:
      return alg.generator(e.generator, e.mode);
    case Expr::Kind::kSymbol:
      return alg.symbol(e.name);
    case Expr::Kind::kNeg:
      return alg.scale(Scalar(-1), evaluate(e.children.at(0), alg));
    case Expr::Kind::kSum: {
      Value acc = evaluate(e.children.at(0), alg);
      for (std::size_t k = 1; k < e.children.size(); ++k) acc = alg.add(acc, evaluate(e.children[k], alg));
      return acc;
    }
    case Expr::Kind::kProduct: {
      Value acc = evaluate(e.children.at(0), alg);
      for (std::size_t k = 1; k < e.children.size(); ++k) acc = alg.mul(acc, evaluate(e.children[k], alg));
      return acc;
    }
    case Expr::Kind::kPower: {
      Value base = evaluate(e.children.at(0), alg);
      if (e.integer < 0) {
        auto s = alg.as_scalar(base);
        if (!s) throw EvalError("negative power of a non-scalar expression: " + e.str());
        if (s->is_zero()) throw DivisionByZero("negative power of zero: " + e.str());
        return alg.from_scalar(s->pow(e.integer));
      }
      Value acc = alg.from_scalar(Scalar(1));
      for (int k = 0; k < e.integer; ++k) acc = alg.mul(acc, base);
      return acc;
    }
    case Expr::Kind::kCommutator: {
      Value x = evaluate(e.children.at(0), alg);
      Value y = evaluate(e.children.at(1), alg);
      return alg.add(alg.mul(x, y), alg.scale(Scalar(-1), alg.mul(y, x)));
    }
    case Expr::Kind::kQCommutator: {
      Value x = evaluate(e.children.at(0), alg);
      Value y = evaluate(e.children.at(1), alg);
      auto w = alg.as_scalar(evaluate(e.children.at(2), alg));
      if (!w) throw EvalError("commutator weight must be a scalar: " + e.children[2].str());
      return alg.add(alg.mul(x, y), alg.scale(-*w, alg.mul(y, x)));
    }
  }
  throw EvalError("unknown expression node");
}

/// Reduction strategy for normal ordering.  kDirect multiplies canonical
/// monomials with closed-form per-mode products; kLeftmost and kRightmost run
/// the word rewrite system, contracting the leftmost or rightmost redex first.
enum class Strategy { kDirect, kLeftmost, kRightmost };

NormalForm normal_order(const Expr& e, const Environment<NormalForm>* env = nullptr, Strategy strategy = Strategy::kDirect);
NormalForm normal_order(const std::string& text, const Environment<NormalForm>* env = nullptr);

/// Parses text that must reduce to a multiple of the identity.
Scalar parse_scalar(const std::string& text);

}  // namespace qlorentz
