#include "qlorentz/expr.hpp"

#include <cctype>
#include <sstream>
#include <utility>

#include "qlorentz/rewrite.hpp"

namespace qlorentz {

Expr Expr::scalar(const Scalar& s) {
  Expr e;
  e.kind = Kind::kScalar;
  e.value = s;
  return e;
}

Expr Expr::generator_atom(GeneratorKind g, int mode) {
  Expr e;
  e.kind = Kind::kGenerator;
  e.generator = g;
  e.mode = mode;
  return e;
}

Expr Expr::qpow(int halves, int mode) {
  Expr e;
  e.kind = Kind::kQPow;
  e.integer = halves;
  e.mode = mode;
  return e;
}

Expr Expr::symbol(std::string name) {
  Expr e;
  e.kind = Kind::kSymbol;
  e.name = std::move(name);
  return e;
}

Expr Expr::sum(std::vector<Expr> terms) {
  if (terms.size() == 1) return std::move(terms[0]);
  Expr e;
  e.kind = Kind::kSum;
  e.children = std::move(terms);
  return e;
}

Expr Expr::product(std::vector<Expr> factors) {
  if (factors.size() == 1) return std::move(factors[0]);
  Expr e;
  e.kind = Kind::kProduct;
  e.children = std::move(factors);
  return e;
}

Expr Expr::neg(Expr x) {
  Expr e;
  e.kind = Kind::kNeg;
  e.children.push_back(std::move(x));
  return e;
}

Expr Expr::power(Expr base, int exponent) {
  Expr e;
  e.kind = Kind::kPower;
  e.integer = exponent;
  e.children.push_back(std::move(base));
  return e;
}

Expr Expr::commutator(Expr x, Expr y) {
  Expr e;
  e.kind = Kind::kCommutator;
  e.children.push_back(std::move(x));
  e.children.push_back(std::move(y));
  return e;
}

Expr Expr::qcommutator(Expr x, Expr y, Expr w) {
  Expr e;
  e.kind = Kind::kQCommutator;
  e.children.push_back(std::move(x));
  e.children.push_back(std::move(y));
  e.children.push_back(std::move(w));
  return e;
}

std::string Expr::str() const {
  switch (kind) {
    case Kind::kScalar:
      return value.is_atomic_text() ? value.str() : "(" + value.str() + ")";
    case Kind::kQNum:
      return "qnum(" + std::to_string(integer) + ")";
    case Kind::kQPow:
      return "qpow(" + half_text(integer) + "," + std::to_string(mode) + ")";
    case Kind::kGenerator:
      return (generator == GeneratorKind::kCreator ? "ad" : "a") + std::to_string(mode);
    case Kind::kSymbol:
      return name;
    case Kind::kNeg:
      return "(-" + children[0].str() + ")";
    case Kind::kPower: {
      const Expr& b = children[0];
      const bool bare = b.kind == Kind::kGenerator || b.kind == Kind::kSymbol || b.kind == Kind::kQPow || b.kind == Kind::kQNum;
      return (bare ? b.str() : "(" + b.str() + ")") + "^" + std::to_string(integer);
    }
    case Kind::kSum:
    case Kind::kProduct: {
      std::string out = "(";
      const char* sep = kind == Kind::kSum ? " + " : "*";
      for (std::size_t k = 0; k < children.size(); ++k) {
        if (k) out += sep;
        out += children[k].str();
      }
      return out + ")";
    }
    case Kind::kCommutator:
      return "[" + children[0].str() + "," + children[1].str() + "]";
    case Kind::kQCommutator:
      return "[" + children[0].str() + "," + children[1].str() + ",w=" + children[2].str() + "]";
  }
  return "?";
}

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k) out += ", ";
    out += items[k];
  }
  return out;
}

}  // namespace

ParseError::ParseError(int line, int column, std::vector<std::string> expected, const std::string& found)
    : std::runtime_error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": expected " +
                         join(expected) + ", found " + found),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

namespace {

enum class Tok { kNumber, kIdent, kPlus, kMinus, kStar, kCaret, kLParen, kRParen, kLBracket, kRBracket, kComma, kEquals, kEnd };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::kEnd) return "end of input";
  return "'" + t.text + "'";
}

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1;
  int column = 1;
  std::size_t k = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++k;
    }
  };
  while (k < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[k]);
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    const int l0 = line;
    const int c0 = column;
    if (std::isdigit(c)) {
      std::size_t j = k;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j + 1 < text.size() && text[j] == '/' && std::isdigit(static_cast<unsigned char>(text[j + 1]))) {
        ++j;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      }
      out.push_back({Tok::kNumber, text.substr(k, j - k), l0, c0});
      advance(j - k);
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      std::size_t j = k;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      out.push_back({Tok::kIdent, text.substr(k, j - k), l0, c0});
      advance(j - k);
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::kPlus; break;
      case '-': kind = Tok::kMinus; break;
      case '*': kind = Tok::kStar; break;
      case '^': kind = Tok::kCaret; break;
      case '(': kind = Tok::kLParen; break;
      case ')': kind = Tok::kRParen; break;
      case '[': kind = Tok::kLBracket; break;
      case ']': kind = Tok::kRBracket; break;
      case ',': kind = Tok::kComma; break;
      case '=': kind = Tok::kEquals; break;
      default:
        throw ParseError(l0, c0, {"expression"}, "'" + std::string(1, static_cast<char>(c)) + "'");
    }
    out.push_back({kind, std::string(1, static_cast<char>(c)), l0, c0});
    advance(1);
  }
  out.push_back({Tok::kEnd, "", line, column});
  return out;
}

const std::vector<std::string> kAtomStart = {"number", "identifier", "'('", "'['"};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Expr parse_all() {
    Expr e = expr();
    if (peek().kind != Tok::kEnd) fail({"'+'", "'-'", "'*'", "'^'", "end of input"});
    return e;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw ParseError(peek().line, peek().column, std::move(expected), describe(peek()));
  }
  const Token& expect(Tok k, const std::string& what) {
    if (peek().kind != k) fail({what});
    return next();
  }

  Expr expr() {
    std::vector<Expr> terms;
    if (accept(Tok::kMinus)) {
      terms.push_back(Expr::neg(term()));
    } else {
      terms.push_back(term());
    }
    while (true) {
      if (accept(Tok::kPlus)) {
        terms.push_back(term());
      } else if (accept(Tok::kMinus)) {
        terms.push_back(Expr::neg(term()));
      } else {
        break;
      }
    }
    return Expr::sum(std::move(terms));
  }

  Expr term() {
    std::vector<Expr> factors;
    factors.push_back(factor());
    while (accept(Tok::kStar)) factors.push_back(factor());
    return Expr::product(std::move(factors));
  }

  int signed_int(bool allow_half, int* halves) {
    const bool negative = accept(Tok::kMinus);
    if (peek().kind != Tok::kNumber) fail({allow_half ? "half-integer" : "integer"});
    const Token& t = next();
    const auto slash = t.text.find('/');
    long value;
    bool half = false;
    try {
      if (slash == std::string::npos) {
        value = std::stol(t.text);
      } else {
        if (!allow_half || t.text.substr(slash + 1) != "2") {
          throw ParseError(t.line, t.column, {allow_half ? "half-integer" : "integer"}, "'" + t.text + "'");
        }
        value = std::stol(t.text.substr(0, slash));
        half = true;
      }
    } catch (const std::out_of_range&) {
      throw ParseError(t.line, t.column, {"integer of moderate size"}, "'" + t.text + "'");
    }
    if (value > 100000) throw ParseError(t.line, t.column, {"integer of moderate size"}, "'" + t.text + "'");
    int v = static_cast<int>(negative ? -value : value);
    if (halves) *halves = half ? v : 2 * v;
    return v;
  }

  Expr factor() {
    Expr base = atom();
    if (accept(Tok::kCaret)) {
      const int exponent = signed_int(false, nullptr);
      return Expr::power(std::move(base), exponent);
    }
    return base;
  }

  int mode_number() {
    if (peek().kind != Tok::kNumber) fail({"mode 1..4"});
    const Token& t = peek();
    if (t.text.size() != 1 || t.text[0] < '1' || t.text[0] > '4') fail({"mode 1..4"});
    ++pos_;
    return t.text[0] - '0';
  }

  Expr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kNumber: {
        next();
        Rational r;
        try {
          r = parse_rational(t.text);
        } catch (const std::invalid_argument&) {
          throw ParseError(t.line, t.column, {"number"}, "'" + t.text + "'");
        }
        return Expr::scalar(Scalar(r));
      }
      case Tok::kLParen: {
        next();
        Expr e = expr();
        expect(Tok::kRParen, "')'");
        return e;
      }
      case Tok::kLBracket: {
        next();
        Expr x = expr();
        expect(Tok::kComma, "','");
        Expr y = expr();
        if (accept(Tok::kComma)) {
          if (peek().kind != Tok::kIdent || peek().text != "w") fail({"'w='"});
          next();
          expect(Tok::kEquals, "'='");
          Expr w = expr();
          expect(Tok::kRBracket, "']'");
          return Expr::qcommutator(std::move(x), std::move(y), std::move(w));
        }
        if (peek().kind != Tok::kRBracket) fail({"','", "']'"});
        next();
        return Expr::commutator(std::move(x), std::move(y));
      }
      case Tok::kIdent:
        return ident();
      default:
        fail(kAtomStart);
    }
  }

  Expr ident() {
    const Token& t = next();
    const std::string& s = t.text;
    if (s == "p") return Expr::scalar(Scalar::p_power(1));
    if (s == "q") return Expr::scalar(Scalar::q_power(1));
    if (s == "i") return Expr::scalar(Scalar::i());
    if (s == "sqrt2") return Expr::scalar(Scalar::sqrt2());
    if (s == "qpow") {
      expect(Tok::kLParen, "'('");
      int halves = 0;
      signed_int(true, &halves);
      expect(Tok::kComma, "','");
      const int m = mode_number();
      expect(Tok::kRParen, "')'");
      return Expr::qpow(halves, m);
    }
    if (s == "qnum") {
      expect(Tok::kLParen, "'('");
      Expr e;
      e.kind = Expr::Kind::kQNum;
      e.integer = signed_int(false, nullptr);
      expect(Tok::kRParen, "')'");
      return e;
    }
    if (s == "a" || s == "ad") {
      const int m = mode_number();
      return Expr::generator_atom(s == "a" ? GeneratorKind::kAnnihilator : GeneratorKind::kCreator, m);
    }
    if ((s.size() == 2 && s[0] == 'a') || (s.size() == 3 && s.compare(0, 2, "ad") == 0)) {
      const char m = s.back();
      if (m >= '1' && m <= '4') {
        return Expr::generator_atom(s.size() == 2 ? GeneratorKind::kAnnihilator : GeneratorKind::kCreator, m - '0');
      }
      if (std::isdigit(static_cast<unsigned char>(m))) {
        throw ParseError(t.line, t.column + static_cast<int>(s.size()) - 1, {"mode 1..4"}, "'" + std::string(1, m) + "'");
      }
    }
    if (s.size() == 2 && s[0] == 'N' && s[1] >= '1' && s[1] <= '4') {
      // N only appears through q-exponentials
      throw ParseError(t.line, t.column, {"qpow(c," + s.substr(1) + ")"}, "'" + s + "'");
    }
    return Expr::symbol(s);
  }
};

struct NormalFormAlgebra {
  const Environment<NormalForm>* env;

  NormalForm from_scalar(const Scalar& s) const { return NormalForm(s); }
  NormalForm generator(GeneratorKind g, int mode) const {
    return g == GeneratorKind::kCreator ? NormalForm::creator(mode) : NormalForm::annihilator(mode);
  }
  NormalForm qpow(int halves, int mode) const { return NormalForm::qpow(halves, mode); }
  NormalForm symbol(const std::string& name) const {
    if (env) {
      auto it = env->find(name);
      if (it != env->end()) return it->second;
    }
    throw EvalError("unbound symbol '" + name + "'");
  }
  NormalForm add(const NormalForm& a, const NormalForm& b) const { return a + b; }
  NormalForm mul(const NormalForm& a, const NormalForm& b) const { return a * b; }
  NormalForm scale(const Scalar& c, const NormalForm& a) const { return a * c; }
  std::optional<Scalar> as_scalar(const NormalForm& a) const { return a.as_scalar(); }
};

}  // namespace

Expr parse(const std::string& text) { return Parser(tokenize(text)).parse_all(); }

NormalForm normal_order(const Expr& e, const Environment<NormalForm>* env, Strategy strategy) {
  if (strategy == Strategy::kDirect) return evaluate(e, NormalFormAlgebra{env});
  return rewrite_normal_order(expand_words(e, env), strategy);
}

NormalForm normal_order(const std::string& text, const Environment<NormalForm>* env) {
  return normal_order(parse(text), env, Strategy::kDirect);
}

Scalar parse_scalar(const std::string& text) {
  auto s = normal_order(text).as_scalar();
  if (!s) throw EvalError("not a scalar: " + text);
  return *s;
}

}  // namespace qlorentz
