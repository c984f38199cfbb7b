#include "qlorentz/minkowski.hpp"

#include <algorithm>
#include <sstream>

namespace qlorentz {

namespace {

NormalForm eval_in(const std::string& text, const Environment<NormalForm>& env) { return normal_order(text, &env); }

std::vector<FockBlock> pair_blocks(int lo, int hi) {
  std::vector<FockBlock> out;
  for (int n = lo; n <= hi; ++n) out.push_back(FockBlock::pair(n));
  return out;
}

std::string sci(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

}  // namespace

Environment<NormalForm> MinkowskiGenerators::env() const { return {{"A", A}, {"B", B}, {"C", C}, {"D", D}}; }

MinkowskiGenerators minkowski_generators() {
  MinkowskiGenerators g;
  g.A = normal_order("qpow(-1,1)*qpow(1,2)");
  g.B = normal_order("qpow(-1/2,1)*qpow(1/2,2)*ad1*a2");
  g.C = normal_order("(q - q^-1)^2*q^-1*ad2*a1*qpow(-1/2,1)*qpow(1/2,2)");
  g.D = normal_order("(q - q^-1)^2*q^-1*ad2*a1*ad1*a2 + qpow(1,1)*qpow(-1,2)");
  return g;
}

RelationSet qm_relations() {
  const std::string a = "q-Minkowski algebra";
  return {
      {"minkowski.AC", a, "A*C", "q^2*C*A"},
      {"minkowski.AB", a, "A*B", "q^-2*B*A"},
      {"minkowski.AD", a, "A*D", "D*A"},
      {"minkowski.BD", a, "[B,D]", "-(q - q^-1)*q^-1*A*B"},
      {"minkowski.CD", a, "[C,D]", "(q - q^-1)*q^-1*C*A"},
      {"minkowski.BC", a, "[B,C]", "(q - q^-1)*q^-1*(A*D - A^2)"},
  };
}

CentralElements central_elements(const MinkowskiGenerators& g) {
  const auto env = g.env();
  CentralElements c;
  c.q_trace = eval_in("q^-1*A + q*D", env);
  c.length = eval_in("C*B - q^-2*D*A", env);
  c.i_q = diagonal<Scalar>({Scalar::q_power(-1), Scalar::q_power(1)});
  return c;
}

RelationSet centrality_relations() {
  RelationSet out;
  for (const char* z : {"L", "trq"})
    for (const char* x : {"A", "B", "C", "D"})
      out.push_back({std::string("central.") + z + "." + x, z == std::string("L") ? "invariant length" : "q-trace",
                     std::string("[") + z + "," + x + "]", "0"});
  return out;
}

Environment<NormalForm> CoordinateVector::env() const {
  return {{"X0", x[0]}, {"X1", x[1]}, {"X2", x[2]}, {"X3", x[3]}};
}

CoordinateVector coordinates(const MinkowskiGenerators& g) {
  const auto env = g.env();
  CoordinateVector c;
  c.x[0] = eval_in("1/2*sqrt2*(q^-1*A + q*D)", env);
  c.x[1] = eval_in("1/4*sqrt2*((1 + i)*q*C + (1 - i)*q^-1*B)", env);
  c.x[2] = eval_in("1/4*sqrt2*((1 + i)*q*C - (1 - i)*q^-1*B)", env);
  c.x[3] = eval_in("1/2*sqrt2*(q*D - q^-1*A)", env);
  return c;
}

MinkowskiGenerators reassemble(const CoordinateVector& x) {
  const auto env = x.env();
  MinkowskiGenerators g;
  g.A = eval_in("1/2*sqrt2*q*(X0 - X3)", env);
  g.B = eval_in("1/2*sqrt2*(1 + i)*q*(X1 - X2)", env);
  g.C = eval_in("1/2*sqrt2*(1 - i)*q^-1*(X1 + X2)", env);
  g.D = eval_in("1/2*sqrt2*q^-1*(X0 + X3)", env);
  return g;
}

ExactMatrix deformed_metric() {
  const Scalar q = Scalar::q_power(1);
  ExactMatrix g(4, 4);
  g(0, 1) = q * q;
  g(1, 0) = Scalar(1);
  g(2, 3) = Scalar(-1);
  g(3, 2) = Scalar(-1);
  g(3, 3) = q * (q - q.inverse());
  return g;
}

namespace {

std::string metric_text(MetricOrder order) {
  const ExactMatrix g = deformed_metric();
  std::string sum;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      if (g(i, j).is_zero()) continue;
      const std::size_t l = order == MetricOrder::kRowLeft ? i : j;
      const std::size_t r = order == MetricOrder::kRowLeft ? j : i;
      if (!sum.empty()) sum += " + ";
      sum += "(" + g(i, j).str() + ")*X" + std::to_string(l) + "*X" + std::to_string(r);
    }
  return "(q^2 + 1)^-1*(" + sum + ")";
}

}  // namespace

NormalForm metric_form(const CoordinateVector& x, MetricOrder order) { return eval_in(metric_text(order), x.env()); }

VerificationReport verify_qm_relations(int max_n, const std::vector<Rational>& p_values) {
  CheckOptions opt;
  opt.p_values = p_values;
  return check_relations(qm_relations(), minkowski_generators().env(), pair_blocks(0, max_n), opt);
}

VerificationReport central_elements_check(int max_n, const std::vector<Rational>& p_values) {
  const MinkowskiGenerators g = minkowski_generators();
  const CentralElements c = central_elements(g);
  auto env = g.env();
  env["L"] = c.length;
  env["trq"] = c.q_trace;
  CheckOptions opt;
  opt.p_values = p_values;
  VerificationReport r = check_relations(centrality_relations(), env, pair_blocks(0, max_n), opt);
  // explicit form of the trace against Tr(I_q K)
  const ExactMatrix iq = c.i_q;
  const Environment<NormalForm> ge = g.env();
  const NormalForm tr = iq(0, 0) * ge.at("A") + iq(1, 1) * ge.at("D");
  r.add({"central.trace_form", "q-trace", "symbolic", "-", "generic", status_for(tr == c.q_trace, false), describe_residual(tr - c.q_trace)});
  return r;
}

VerificationReport coordinate_check() {
  const MinkowskiGenerators g = minkowski_generators();
  const MinkowskiGenerators back = reassemble(coordinates(g));
  VerificationReport r;
  const std::array<std::pair<const char*, std::pair<NormalForm, NormalForm>>, 4> pairs{{
      {"A", {g.A, back.A}}, {"B", {g.B, back.B}}, {"C", {g.C, back.C}}, {"D", {g.D, back.D}}}};
  for (const auto& [name, ab] : pairs) {
    const NormalForm d = ab.second - ab.first;
    r.add({std::string("coordinates.round_trip.") + name, "coordinate matrix", "symbolic", "-", "generic", status_for(d.is_zero(), false),
           describe_residual(d)});
  }
  return r;
}

VerificationReport metric_form_check(int max_n, const std::vector<Rational>& p_values) {
  const MinkowskiGenerators g = minkowski_generators();
  const CoordinateVector x = coordinates(g);
  auto env = x.env();
  env["L"] = central_elements(g).length;

  RelationSet rels{{"metric.row_left", "deformed metric", metric_text(MetricOrder::kRowLeft), "L"}};
  CheckOptions opt;
  opt.p_values = p_values;
  VerificationReport r = check_relations(rels, env, pair_blocks(0, max_n), opt);

  // the other ordering only informs; it is flagged when it does not close either
  Relation col{"metric.column_left", "deformed metric, transposed ordering", metric_text(MetricOrder::kColumnLeft), "L", true};
  CheckOptions sym;
  sym.exact = false;
  sym.floating = false;
  r.append(check_relations({col}, env, {}, sym));

  const NormalForm row = metric_form(x, MetricOrder::kRowLeft);
  const NormalForm column = metric_form(x, MetricOrder::kColumnLeft);
  r.add({"metric.orderings_agree", "deformed metric", "symbolic", "-", "generic", status_for(row == column, false),
         describe_residual(row - column)});

  // could a constant rescaling of L close it?
  const NormalForm length = env.at("L");
  const Scalar ratio = row.coeff(Monomial::identity()) * length.coeff(Monomial::identity()).inverse();
  const NormalForm rest = row - length * ratio;
  int charged = 0;
  for (const auto& [m, c] : rest.terms())
    if (m.charge(1) != 0) ++charged;
  r.add({"metric.normalization", "deformed metric", "symbolic", "-", "generic", status_for(rest.is_zero(), false),
         "L = " + length.str() + "; best constant " + ratio.str() + " leaves " + std::to_string(rest.size()) + " terms, " +
             std::to_string(charged) + " with nonzero charge"});

  // g at q = 1 is not diag(1,-1,-1,-1)
  const ExactMatrix g1 = specialize(deformed_metric(), QValue(Rational(1)));
  const ExactMatrix minkowski = diagonal<Scalar>({Scalar(1), Scalar(-1), Scalar(-1), Scalar(-1)});
  std::string text = to_text(g1);
  std::replace(text.begin(), text.end(), '\n', ' ');
  r.add({"metric.not_classical_at_1", "deformed metric", "exact", "4x4", "1", status_for(!(g1 == minkowski), false), text});
  return r;
}

VerificationReport reality_check(int max_n, double p) {
  const MinkowskiGenerators g = minkowski_generators();
  const CoordinateVector x = coordinates(g);
  VerificationReport r;
  for (int n = 1; n <= max_n; ++n) {
    const FockBlock b = FockBlock::pair(n);
    for (int mu = 0; mu < 4; ++mu) {
      const FloatMatrix m = represent_float(x.x[static_cast<std::size_t>(mu)], b, p);
      FloatMatrix d = adjoint(m);
      d -= m;
      const double res = frobenius(d) / std::max(1.0, 2 * frobenius(m));
      r.add({"reality.X" + std::to_string(mu), "real coordinates", "float", b.label(), p_text(p),
             status_for(res <= kFloatRelativeTolerance, false), "relative frobenius " + sci(res)});
    }
  }
  return r;
}

}  // namespace qlorentz
