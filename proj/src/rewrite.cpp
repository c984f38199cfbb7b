#include "qlorentz/rewrite.hpp"

#include <utility>

namespace qlorentz {

namespace {

using LK = Letter::Kind;

void add_word(WordSum& out, Word w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = out.try_emplace(std::move(w), c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) out.erase(it);
}

struct WordAlgebra {
  const Environment<NormalForm>* env;

  WordSum from_scalar(const Scalar& s) const {
    WordSum out;
    add_word(out, {}, s);
    return out;
  }
  WordSum generator(GeneratorKind g, int mode) const {
    return {{{Letter{g == GeneratorKind::kCreator ? LK::kCreator : LK::kAnnihilator, mode, 0}}, Scalar(1)}};
  }
  WordSum qpow(int halves, int mode) const { return {{{Letter{LK::kQPow, mode, halves}}, Scalar(1)}}; }
  WordSum symbol(const std::string& name) const {
    if (env) {
      auto it = env->find(name);
      if (it != env->end()) return to_words(it->second);
    }
    throw EvalError("unbound symbol '" + name + "'");
  }
  WordSum add(WordSum a, const WordSum& b) const {
    for (const auto& [w, c] : b) add_word(a, w, c);
    return a;
  }
  WordSum mul(const WordSum& a, const WordSum& b) const {
    WordSum out;
    for (const auto& [wa, ca] : a) {
      for (const auto& [wb, cb] : b) {
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        add_word(out, std::move(w), ca * cb);
      }
    }
    return out;
  }
  WordSum scale(const Scalar& c, WordSum a) const {
    if (c.is_zero()) return {};
    for (auto& [w, x] : a) x *= c;
    return a;
  }
  std::optional<Scalar> as_scalar(const WordSum& a) const {
    if (a.empty()) return Scalar();
    if (a.size() == 1 && a.begin()->first.empty()) return a.begin()->second;
    return std::nullopt;
  }
};

// A replacement for the letters [pos, pos + len) of a word.
struct Replacement {
  std::size_t pos;
  std::size_t len;
  std::vector<std::pair<Scalar, Word>> pieces;
};

// [N + k]_q on mode m as two K letters.
std::vector<std::pair<Scalar, Word>> bracket(int mode, int k) {
  const Scalar inv = Scalar::q_minus_qinv().inverse();
  return {{Scalar::p_power(2 * k) * inv, {Letter{LK::kQPow, mode, 2}}},
          {-(Scalar::p_power(-2 * k) * inv), {Letter{LK::kQPow, mode, -2}}}};
}

std::optional<Replacement> redex_at(const Word& w, std::size_t k) {
  const Letter& x = w[k];
  if (x.kind == LK::kQPow && x.h == 0) return Replacement{k, 1, {{Scalar(1), {}}}};
  if (k + 1 >= w.size()) return std::nullopt;
  const Letter& y = w[k + 1];
  if (x.mode > y.mode) return Replacement{k, 2, {{Scalar(1), {y, x}}}};
  if (x.mode != y.mode) return std::nullopt;
  if (x.kind == LK::kQPow && y.kind == LK::kQPow) {
    return Replacement{k, 2, {{Scalar(1), {Letter{LK::kQPow, x.mode, x.h + y.h}}}}};
  }
  if (y.kind == LK::kQPow) {
    const int e = x.kind == LK::kCreator ? -y.h : y.h;
    return Replacement{k, 2, {{Scalar::p_power(e), {y, x}}}};
  }
  if (x.kind == LK::kAnnihilator && y.kind == LK::kCreator) return Replacement{k, 2, bracket(x.mode, 1)};
  if (x.kind == LK::kCreator && y.kind == LK::kAnnihilator) return Replacement{k, 2, bracket(x.mode, 0)};
  return std::nullopt;
}

std::optional<Replacement> find_redex(const Word& w, Strategy strategy) {
  if (w.empty()) return std::nullopt;
  if (strategy == Strategy::kRightmost) {
    for (std::size_t k = w.size(); k-- > 0;)
      if (auto r = redex_at(w, k)) return r;
  } else {
    for (std::size_t k = 0; k < w.size(); ++k)
      if (auto r = redex_at(w, k)) return r;
  }
  return std::nullopt;
}

Monomial word_monomial(const Word& w) {
  Monomial m;
  for (const Letter& l : w) {
    ModeFactor& f = m[l.mode];
    switch (l.kind) {
      case LK::kQPow: f.h += l.h; break;
      case LK::kCreator: ++f.r; break;
      case LK::kAnnihilator: ++f.s; break;
    }
  }
  return m;
}

}  // namespace

WordSum expand_words(const Expr& e, const Environment<NormalForm>* env) { return evaluate(e, WordAlgebra{env}); }

WordSum to_words(const NormalForm& nf) {
  WordSum out;
  for (const auto& [m, c] : nf.terms()) {
    Word w;
    for (int mode = 1; mode <= kNumModes; ++mode) {
      const ModeFactor& f = m[mode];
      if (f.h != 0) w.push_back({LK::kQPow, mode, f.h});
      for (int j = 0; j < f.r; ++j) w.push_back({LK::kCreator, mode, 0});
      for (int j = 0; j < f.s; ++j) w.push_back({LK::kAnnihilator, mode, 0});
    }
    add_word(out, std::move(w), c);
  }
  return out;
}

NormalForm rewrite_normal_order(WordSum words, Strategy strategy) {
  if (strategy == Strategy::kDirect) throw std::invalid_argument("rewrite_normal_order needs a word strategy");
  NormalForm out;
  while (!words.empty()) {
    WordSum next;
    for (auto& [w, c] : words) {
      auto r = find_redex(w, strategy);
      if (!r) {
        out.add_term(word_monomial(w), c);
        continue;
      }
      for (auto& [pc, piece] : r->pieces) {
        Word nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r->pos));
        nw.insert(nw.end(), piece.begin(), piece.end());
        nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(r->pos + r->len), w.end());
        add_word(next, std::move(nw), c * pc);
      }
    }
    words = std::move(next);
  }
  return out;
}

}  // namespace qlorentz
