#include "qlorentz/normal_form.hpp"

#include <omp.h>

#include <cstdlib>
#include <utility>

namespace qlorentz {

std::string half_text(int halves) {
  if (halves % 2 == 0) return std::to_string(halves / 2);
  return std::to_string(halves) + "/2";
}

bool Monomial::is_identity() const {
  for (const auto& f : modes)
    if (!f.is_identity()) return false;
  return true;
}

bool Monomial::is_diagonal() const {
  for (const auto& f : modes)
    if (!f.is_diagonal()) return false;
  return true;
}

std::string Monomial::str() const {
  std::string out;
  auto append = [&out](const std::string& factor) {
    if (!out.empty()) out += "*";
    out += factor;
  };
  for (int m = 1; m <= kNumModes; ++m)
    if ((*this)[m].h != 0) append("qpow(" + half_text((*this)[m].h) + "," + std::to_string(m) + ")");
  for (int m = 1; m <= kNumModes; ++m) {
    const int r = (*this)[m].r;
    if (r > 0) append("ad" + std::to_string(m) + (r > 1 ? "^" + std::to_string(r) : ""));
  }
  for (int m = 1; m <= kNumModes; ++m) {
    const int s = (*this)[m].s;
    if (s > 0) append("a" + std::to_string(m) + (s > 1 ? "^" + std::to_string(s) : ""));
  }
  return out.empty() ? "1" : out;
}

NormalForm::NormalForm(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(Monomial::identity(), c);
}

NormalForm NormalForm::term(const Monomial& m, const Scalar& c) {
  NormalForm out;
  out.add_term(m, c);
  return out;
}

NormalForm NormalForm::creator(int mode) {
  Monomial m;
  m[mode].r = 1;
  return term(m);
}

NormalForm NormalForm::annihilator(int mode) {
  Monomial m;
  m[mode].s = 1;
  return term(m);
}

NormalForm NormalForm::qpow(int h, int mode) {
  Monomial m;
  m[mode].h = h;
  return term(m);
}

bool NormalForm::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_identity());
}

std::optional<Scalar> NormalForm::as_scalar() const {
  if (terms_.empty()) return Scalar();
  if (is_scalar()) return terms_.begin()->second;
  return std::nullopt;
}

Scalar NormalForm::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

unsigned NormalForm::mode_mask() const {
  unsigned mask = 0;
  for (const auto& [m, c] : terms_)
    for (int k = 1; k <= kNumModes; ++k)
      if (!m[k].is_identity()) mask |= 1u << (k - 1);
  return mask;
}

void NormalForm::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

NormalForm NormalForm::operator-() const {
  NormalForm out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

NormalForm& NormalForm::operator+=(const NormalForm& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

NormalForm& NormalForm::operator-=(const NormalForm& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

NormalForm& NormalForm::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

NormalForm NormalForm::pow(int k) const {
  if (k < 0) {
    auto s = as_scalar();
    if (!s) throw std::domain_error("negative power of a non-scalar element");
    return NormalForm(s->pow(k));
  }
  NormalForm out(1);
  for (int j = 0; j < k; ++j) out = out * *this;
  return out;
}

std::string NormalForm::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string text;
    const bool negative_atomic = !c.is_atomic_text() && (-c).is_atomic_text();
    if (m.is_identity()) {
      if (c.is_atomic_text() || negative_atomic) {
        text = c.str();
      } else {
        text = "(" + c.str() + ")";
      }
    } else if (c.is_one()) {
      text = m.str();
    } else if ((-c).is_one()) {
      text = "-" + m.str();
    } else if (c.is_atomic_text()) {
      text = c.str() + "*" + m.str();
    } else if (negative_atomic) {
      text = "-" + (-c).str() + "*" + m.str();
    } else {
      text = "(" + c.str() + ")*" + m.str();
    }
    if (out.empty()) {
      out = text;
    } else if (text.front() == '-') {
      out += " - " + text.substr(1);
    } else {
      out += " + " + text;
    }
  }
  return out;
}

namespace {

// prod_k [N + k]_q as a map from the exponent h (in p^{hN}) to its coefficient.
std::vector<std::pair<int, Scalar>> bracket_product(const std::vector<int>& shifts) {
  std::map<int, LaurentPoly> num{{0, LaurentPoly(1)}};
  for (int k : shifts) {
    std::map<int, LaurentPoly> next;
    for (const auto& [h, c] : num) {
      next[h + 2] += c * LaurentPoly::p_power(2 * k);
      next[h - 2] -= c * LaurentPoly::p_power(-2 * k);
    }
    num = std::move(next);
  }
  const Scalar denom = Scalar::q_minus_qinv().pow(static_cast<int>(shifts.size()));
  std::vector<std::pair<int, Scalar>> out;
  for (const auto& [h, c] : num)
    if (!c.is_zero()) out.emplace_back(h, Scalar(c) / denom);
  return out;
}

std::vector<std::pair<Scalar, ModeFactor>> compute_mode_product(const ModeFactor& x, const ModeFactor& y) {
  // x y = K^{hx} X1 K^{hy} X2 = p^{hy (sx - rx)} K^{hx+hy} X1 X2
  const Scalar shift = Scalar::p_power(y.h * (x.s - x.r));
  const int h = x.h + y.h;
  std::vector<int> shifts;
  ModeFactor ladder;
  if (x.s > 0 && y.r > 0) {
    // a^s (a^dagger)^r
    const int s = x.s;
    const int r = y.r;
    if (r >= s) {
      for (int j = 1; j <= s; ++j) shifts.push_back(j);
      ladder.r = r - s;
    } else {
      for (int j = 1; j <= r; ++j) shifts.push_back(j + s - r);
      ladder.s = s - r;
    }
  } else if (x.r > 0 && y.s > 0) {
    // (a^dagger)^r a^s
    const int r = x.r;
    const int s = y.s;
    if (r <= s) {
      for (int j = 0; j < r; ++j) shifts.push_back(-j);
      ladder.s = s - r;
    } else {
      for (int j = 0; j < s; ++j) shifts.push_back(-j - (r - s));
      ladder.r = r - s;
    }
  } else {
    ladder.r = x.r + y.r;
    ladder.s = x.s + y.s;
  }
  std::vector<std::pair<Scalar, ModeFactor>> out;
  if (shifts.empty()) {
    out.emplace_back(shift, ModeFactor{h, ladder.r, ladder.s});
    return out;
  }
  for (auto& [g, c] : bracket_product(shifts)) out.emplace_back(shift * c, ModeFactor{h + g, ladder.r, ladder.s});
  return out;
}

}  // namespace

std::vector<std::pair<Scalar, ModeFactor>> multiply_mode(const ModeFactor& x, const ModeFactor& y) {
  if (x.is_identity()) return {{Scalar(1), y}};
  if (y.is_identity()) return {{Scalar(1), x}};
  thread_local std::map<std::pair<ModeFactor, ModeFactor>, std::vector<std::pair<Scalar, ModeFactor>>> cache;
  auto key = std::make_pair(x, y);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto value = compute_mode_product(x, y);
  cache.emplace(std::move(key), value);
  return value;
}

NormalForm multiply(const Monomial& a, const Monomial& b) {
  std::vector<std::pair<Scalar, Monomial>> acc{{Scalar(1), Monomial{}}};
  for (int m = 1; m <= kNumModes; ++m) {
    const auto& fa = a[m];
    const auto& fb = b[m];
    if (fa.is_identity() && fb.is_identity()) continue;
    auto factors = multiply_mode(fa, fb);
    if (factors.size() == 1) {
      for (auto& [c, mono] : acc) {
        if (!factors[0].first.is_one()) c *= factors[0].first;
        mono[m] = factors[0].second;
      }
      continue;
    }
    std::vector<std::pair<Scalar, Monomial>> next;
    next.reserve(acc.size() * factors.size());
    for (const auto& [c, mono] : acc) {
      for (const auto& [fc, ff] : factors) {
        Monomial nm = mono;
        nm[m] = ff;
        next.emplace_back(c * fc, nm);
      }
    }
    acc = std::move(next);
  }
  NormalForm out;
  for (const auto& [c, mono] : acc) out.add_term(mono, c);
  return out;
}

namespace {

void accumulate_product(NormalForm& out, const Monomial& ma, const Scalar& ca, const NormalForm& b) {
  for (const auto& [mb, cb] : b.terms()) {
    const Scalar c = ca * cb;
    const NormalForm prod = multiply(ma, mb);
    for (const auto& [m, x] : prod.terms()) out.add_term(m, c * x);
  }
}

}  // namespace

NormalForm multiply_serial(const NormalForm& a, const NormalForm& b) {
  NormalForm out;
  for (const auto& [ma, ca] : a.terms()) accumulate_product(out, ma, ca, b);
  return out;
}

NormalForm multiply(const NormalForm& a, const NormalForm& b) {
  if (a.size() * b.size() < 64 || omp_get_max_threads() == 1 || omp_in_parallel()) return multiply_serial(a, b);
  std::vector<const std::pair<const Monomial, Scalar>*> lhs;
  lhs.reserve(a.size());
  for (const auto& t : a.terms()) lhs.push_back(&t);
  std::vector<NormalForm> partial(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
  {
    NormalForm& mine = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(lhs.size()); ++k)
      accumulate_product(mine, lhs[static_cast<std::size_t>(k)]->first, lhs[static_cast<std::size_t>(k)]->second, b);
  }
  NormalForm out;
  for (const auto& part : partial) out += part;
  return out;
}

NormalForm operator*(const NormalForm& a, const NormalForm& b) { return multiply(a, b); }

NormalForm commutator(const NormalForm& x, const NormalForm& y) { return x * y - y * x; }

NormalForm commutator(const NormalForm& x, const NormalForm& y, const Scalar& w) { return x * y - (y * x) * w; }

}  // namespace qlorentz
