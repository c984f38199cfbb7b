#pragma once

// q-Minkowski generators A, B, C, D built from two q-bosons (modes 1, 2),
// their defining relations, central elements, real coordinates X^0..X^3 and
// the deformed metric.

#include <array>

#include "qlorentz/fock.hpp"
#include "qlorentz/relations.hpp"

namespace qlorentz {

struct MinkowskiGenerators {
  NormalForm A, B, C, D;
  Environment<NormalForm> env() const;
};

MinkowskiGenerators minkowski_generators();

/// AC = q^2 CA, AB = q^-2 BA, AD = DA and the three commutators with D and C.
RelationSet qm_relations();

struct CentralElements {
  NormalForm q_trace;  // q^-1 A + q D
  NormalForm length;   // CB - q^-2 DA
  ExactMatrix i_q;     // diag(q^-1, q)
};

CentralElements central_elements(const MinkowskiGenerators& g);
/// [L, X] = 0 and [trq, X] = 0 for X in A..D (labels L, trq).
RelationSet centrality_relations();

struct CoordinateVector {
  std::array<NormalForm, 4> x;
  Environment<NormalForm> env() const;  // X0..X3
};

/// Inverse of the 2x2 coordinate matrix; coefficients use i and sqrt2.
CoordinateVector coordinates(const MinkowskiGenerators& g);
MinkowskiGenerators reassemble(const CoordinateVector& x);

/// g_ij with rows (0, q^2, 0, 0), (1, 0, 0, 0), (0, 0, 0, -1), (0, 0, -1, q(q - q^-1)).
ExactMatrix deformed_metric();

enum class MetricOrder { kRowLeft, kColumnLeft };
/// (q^2 + 1)^-1 sum g_ij X^i X^j with the row index on the left (or right).
NormalForm metric_form(const CoordinateVector& x, MetricOrder order = MetricOrder::kRowLeft);

/// Relations symbolically and on pair blocks n <= max_n at each p (exact and float).
VerificationReport verify_qm_relations(int max_n, const std::vector<Rational>& p_values);
VerificationReport central_elements_check(int max_n, const std::vector<Rational>& p_values);
VerificationReport coordinate_check();
/// Both orderings of the metric sum against L, symbolically and on blocks.
/// The row-left entry is the assertion; column-left is informational.
/// metric.normalization reports whether some constant multiple of L closes it.
VerificationReport metric_form_check(int max_n, const std::vector<Rational>& p_values);
/// X^mu against their adjoints in the float_symmetric backend at p.
VerificationReport reality_check(int max_n, double p);

}  // namespace qlorentz
