#include "qlorentz/relations.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qlorentz {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Top-level '=' of "lhs = rhs", skipping the w= of weighted brackets.
std::size_t split_point(const std::string& s) {
  int depth = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const char c = s[k];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == '=' && depth == 0) return k;
  }
  return std::string::npos;
}

}  // namespace

RelationSet parse_relations(const std::string& text) {
  RelationSet out;
  std::istringstream is(text);
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(line_no, 1, {"name ':'"}, "'" + line + "'");
    const std::string body = line.substr(colon + 1);
    const auto eq = split_point(body);
    if (eq == std::string::npos) throw ParseError(line_no, static_cast<int>(colon + 2), {"'='"}, "end of line");
    Relation r{trim(line.substr(0, colon)), "user relation", trim(body.substr(0, eq)), trim(body.substr(eq + 1)), false};
    // parse eagerly so errors carry the file line
    for (const std::string* side : {&r.lhs, &r.rhs}) {
      try {
        parse(*side);
      } catch (const ParseError& e) {
        throw ParseError(line_no, e.column(), e.expected(), std::string("in relation '") + r.name + "'");
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string to_text(const RelationSet& rels) {
  std::string out;
  for (const auto& r : rels) out += r.name + ": " + r.lhs + " = " + r.rhs + "\n";
  return out;
}

namespace {

Expr difference(const Relation& r) { return Expr::sum({parse(r.lhs), Expr::neg(parse(r.rhs))}); }

// Evaluation into a matrix algebra.  Conv maps symbolic scalars to entries.
template <class T>
struct MatrixAlgebra {
  std::size_t dim;
  std::function<T(const Scalar&)> conv;
  std::function<Matrix<T>(const std::string&)> lookup;
  std::function<Matrix<T>(GeneratorKind, int)> ladder;
  std::function<Matrix<T>(int, int)> qpow_matrix;

  using V = MatrixValue<T>;
  V from_scalar(const Scalar& s) const { return {Matrix<T>::identity(dim) * conv(s), s}; }
  V generator(GeneratorKind g, int mode) const {
    if (!ladder) throw EvalError("ladder operators are not available in this representation");
    return {ladder(g, mode), std::nullopt};
  }
  V qpow(int h, int mode) const {
    if (!qpow_matrix) throw EvalError("qpow is not available in this representation");
    return {qpow_matrix(h, mode), std::nullopt};
  }
  V symbol(const std::string& name) const { return {lookup(name), std::nullopt}; }
  V add(const V& a, const V& b) const {
    if (a.scalar && b.scalar) return from_scalar(*a.scalar + *b.scalar);
    return {a.m + b.m, std::nullopt};
  }
  V mul(const V& a, const V& b) const {
    if (a.scalar && b.scalar) return from_scalar(*a.scalar * *b.scalar);
    if (a.scalar) return {b.m * conv(*a.scalar), std::nullopt};
    if (b.scalar) return {a.m * conv(*b.scalar), std::nullopt};
    return {a.m * b.m, std::nullopt};
  }
  V scale(const Scalar& c, const V& a) const {
    if (a.scalar) return from_scalar(c * *a.scalar);
    return {a.m * conv(c), std::nullopt};
  }
  std::optional<Scalar> as_scalar(const V& a) const { return a.scalar; }
};

template <class T>
const T& find_or_throw(const Environment<T>& env, const std::string& name) {
  auto it = env.find(name);
  if (it == env.end()) throw EvalError("unbound symbol '" + name + "'");
  return it->second;
}

ExactMatrix block_residual_symbolic(const Expr& e, const Environment<NormalForm>& env, const FockBlock& block) {
  MatrixAlgebra<Scalar> alg{block.dim(), [](const Scalar& s) { return s; },
                            [&](const std::string& n) { return represent(find_or_throw(env, n), block); },
                            [&](GeneratorKind g, int m) {
                              return represent(g == GeneratorKind::kCreator ? NormalForm::creator(m) : NormalForm::annihilator(m), block);
                            },
                            [&](int h, int m) { return represent(NormalForm::qpow(h, m), block); }};
  return evaluate(e, alg).m;
}

}  // namespace

NormalForm residual(const Relation& r, const Environment<NormalForm>& env) { return normal_order(difference(r), &env); }

ExactMatrix residual_on_block(const Relation& r, const Environment<NormalForm>& env, const FockBlock& block, const QValue& v) {
  const Expr e = difference(r);
  MatrixAlgebra<Scalar> alg{block.dim(), [&v](const Scalar& s) { return s.at(v); },
                            [&](const std::string& n) { return represent(find_or_throw(env, n), block, v); },
                            [&](GeneratorKind g, int m) {
                              return represent(g == GeneratorKind::kCreator ? NormalForm::creator(m) : NormalForm::annihilator(m), block, v);
                            },
                            [&](int h, int m) { return represent(NormalForm::qpow(h, m), block, v); }};
  try {
    return evaluate(e, alg).m;
  } catch (const DivisionByZero&) {
    return specialize(block_residual_symbolic(e, env, block), v);
  }
}

namespace {

MatrixAlgebra<std::complex<double>> float_algebra(const Environment<NormalForm>& env, const FockBlock& block, double p) {
  using C = std::complex<double>;
  MatrixAlgebra<C> alg{block.dim(), [p](const Scalar& s) { return s.eval(p); },
                       [&env, &block, p](const std::string& n) { return represent_float(find_or_throw(env, n), block, p); },
                       [&block, p](GeneratorKind g, int m) {
                         return represent_float(g == GeneratorKind::kCreator ? NormalForm::creator(m) : NormalForm::annihilator(m), block, p);
                       },
                       [&block, p](int h, int m) { return represent_float(NormalForm::qpow(h, m), block, p); }};
  return alg;
}

}  // namespace

FloatMatrix residual_on_block_float(const Relation& r, const Environment<NormalForm>& env, const FockBlock& block, double p) {
  return evaluate(difference(r), float_algebra(env, block, p)).m;
}

double relative_residual_float(const Relation& r, const Environment<NormalForm>& env, const FockBlock& block, double p) {
  const auto alg = float_algebra(env, block, p);
  const FloatMatrix lhs = evaluate(parse(r.lhs), alg).m;
  const FloatMatrix rhs = evaluate(parse(r.rhs), alg).m;
  FloatMatrix diff = lhs;
  diff -= rhs;
  return frobenius(diff) / std::max(1.0, frobenius(lhs) + frobenius(rhs));
}

ExactMatrix residual_matrix(const Relation& r, const Environment<ExactMatrix>& env, std::size_t dim) {
  MatrixAlgebra<Scalar> alg{dim, [](const Scalar& s) { return s; }, [&](const std::string& n) { return find_or_throw(env, n); },
                            nullptr, nullptr};
  return evaluate(difference(r), alg).m;
}

ExactMatrix evaluate_matrix(const std::string& text, const Environment<ExactMatrix>& env, std::size_t dim) {
  MatrixAlgebra<Scalar> alg{dim, [](const Scalar& s) { return s; }, [&](const std::string& n) { return find_or_throw(env, n); },
                            nullptr, nullptr};
  return evaluate(parse(text), alg).m;
}

FloatMatrix evaluate_matrix_float(const std::string& text, const Environment<FloatMatrix>& env, std::size_t dim, double p) {
  MatrixAlgebra<std::complex<double>> alg{dim, [p](const Scalar& s) { return s.eval(p); },
                                          [&](const std::string& n) { return find_or_throw(env, n); }, nullptr, nullptr};
  return evaluate(parse(text), alg).m;
}

Status status_for(bool holds, bool expect_failure) {
  if (holds) return Status::kPass;
  return expect_failure ? Status::kFlagged : Status::kFail;
}

std::string describe_residual(const NormalForm& nf) {
  if (nf.is_zero()) return "0";
  std::string s = nf.str();
  if (s.size() > 160) s = s.substr(0, 157) + "...";
  return std::to_string(nf.size()) + " terms: " + s;
}

std::string p_text(double p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

namespace {

std::string matrix_residual_text(const ExactMatrix& m) {
  if (m.is_zero()) return "0";
  std::size_t nonzero = 0;
  std::string first;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) {
        if (nonzero++ == 0) first = "(" + std::to_string(i) + "," + std::to_string(j) + ") = " + m(i, j).str();
      }
  if (first.size() > 120) first = first.substr(0, 117) + "...";
  return std::to_string(nonzero) + " nonzero entries, first " + first;
}

std::string float_residual_text(double r) {
  std::ostringstream os;
  os.precision(3);
  os << "relative frobenius " << std::scientific << r;
  return os.str();
}

}  // namespace

VerificationReport check_relations(const RelationSet& rels, const Environment<NormalForm>& env,
                                   const std::vector<FockBlock>& blocks, const CheckOptions& opt) {
  VerificationReport report;
  for (const auto& r : rels) {
    if (opt.symbolic) {
      const NormalForm res = residual(r, env);
      report.add({r.name, r.anchor, "symbolic", "-", "generic", status_for(res.is_zero(), r.expect_failure), describe_residual(res)});
    }
    for (const auto& b : blocks) {
      for (const auto& p : opt.p_values) {
        const QValue v(p);
        if (opt.exact) {
          const ExactMatrix m = residual_on_block(r, env, b, v);
          report.add({r.name, r.anchor, "exact", b.label(), v.str(), status_for(m.is_zero(), r.expect_failure), matrix_residual_text(m)});
        }
        if (opt.floating) {
          // poles of the relation's coefficients are left to the exact backend
          try {
            const double pd = p.get_d();
            const double res = relative_residual_float(r, env, b, pd);
            report.add({r.name, r.anchor, "float", b.label(), p_text(pd), status_for(res <= kFloatRelativeTolerance, r.expect_failure),
                        float_residual_text(res)});
          } catch (const DivisionByZero&) {
          }
        }
      }
    }
  }
  return report;
}

VerificationReport check_matrix_relations(const RelationSet& rels, const Environment<ExactMatrix>& env, std::size_t dim,
                                          const CheckOptions& opt, const std::string& backend_label) {
  VerificationReport report;
  const std::string block = std::to_string(dim) + "x" + std::to_string(dim);
  for (const auto& r : rels) {
    const ExactMatrix m = residual_matrix(r, env, dim);
    if (opt.symbolic) {
      report.add({r.name, r.anchor, "symbolic", block, "generic", status_for(m.is_zero(), r.expect_failure), matrix_residual_text(m)});
    }
    if (opt.exact) {
      for (const auto& p : opt.p_values) {
        const QValue v(p);
        const ExactMatrix s = specialize(m, v);
        report.add({r.name, r.anchor, backend_label, block, v.str(), status_for(s.is_zero(), r.expect_failure), matrix_residual_text(s)});
      }
    }
  }
  return report;
}

}  // namespace qlorentz
