#pragma once

// Relation sets written in the expression language, and their evaluation
// symbolically, on Fock blocks, and on explicit matrix representations.

#include <optional>
#include <string>
#include <vector>

#include "qlorentz/expr.hpp"
#include "qlorentz/fock.hpp"
#include "qlorentz/matrix.hpp"
#include "qlorentz/report.hpp"

namespace qlorentz {

struct Relation {
  std::string name;
  std::string anchor;
  std::string lhs;
  std::string rhs;
  /// Reproduces a known misprint: a failing check is reported as flagged.
  /// Checks that hold anyway (e.g. on blocks too small to see it) pass.
  bool expect_failure = false;
};

using RelationSet = std::vector<Relation>;

/// One relation per line, "name: lhs = rhs"; blank lines and '#' comments skipped.
RelationSet parse_relations(const std::string& text);
std::string to_text(const RelationSet& rels);

struct CheckOptions {
  std::vector<Rational> p_values;  // exact and float block checks
  int max_block = 4;
  bool symbolic = true;
  bool exact = true;
  bool floating = true;
};

/// Values of an expression evaluated in a matrix algebra.  Scalars are kept
/// symbolically so that negative powers such as (q - q^-1)^-1 stay exact.
template <class T>
struct MatrixValue {
  Matrix<T> m;
  std::optional<Scalar> scalar;
};

/// Relation residual lhs - rhs as a normal form.
NormalForm residual(const Relation& r, const Environment<NormalForm>& env);

/// Exact residual matrix on a block at p; symbolic fallback at coefficient poles.
ExactMatrix residual_on_block(const Relation& r, const Environment<NormalForm>& env, const FockBlock& block, const QValue& v);
/// float_symmetric residual at p; throws DivisionByZero at a coefficient pole.
FloatMatrix residual_on_block_float(const Relation& r, const Environment<NormalForm>& env, const FockBlock& block, double p);
/// |lhs - rhs|_F / max(1, |lhs|_F + |rhs|_F) in the float_symmetric backend.
double relative_residual_float(const Relation& r, const Environment<NormalForm>& env, const FockBlock& block, double p);
inline constexpr double kFloatRelativeTolerance = 1e-10;

/// Residual for explicit matrices (entries in Q(p)(i, sqrt2)); `dim` sizes scalars.
ExactMatrix residual_matrix(const Relation& r, const Environment<ExactMatrix>& env, std::size_t dim);

/// Expression evaluated on explicit matrices; scalars become multiples of the identity.
ExactMatrix evaluate_matrix(const std::string& text, const Environment<ExactMatrix>& env, std::size_t dim);
FloatMatrix evaluate_matrix_float(const std::string& text, const Environment<FloatMatrix>& env, std::size_t dim, double p);

/// Checks each relation symbolically and on every block at every p.
VerificationReport check_relations(const RelationSet& rels, const Environment<NormalForm>& env,
                                   const std::vector<FockBlock>& blocks, const CheckOptions& opt);
/// Checks each relation on explicit matrices: symbolically in p and at every p.
VerificationReport check_matrix_relations(const RelationSet& rels, const Environment<ExactMatrix>& env, std::size_t dim,
                                          const CheckOptions& opt, const std::string& backend_label = "exact");

/// Status for a check result, honouring expect_failure.
Status status_for(bool holds, bool expect_failure);
/// Short printable description of a nonzero normal form residual.
std::string describe_residual(const NormalForm& nf);

std::string p_text(double p);

}  // namespace qlorentz
