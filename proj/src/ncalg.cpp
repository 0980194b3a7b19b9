#include "oncgl2/ncalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace oncgl2 {

int row_index(Letter l) {
  switch (l) {
    case Letter::A:
    case Letter::B:
      return 1;
    case Letter::C:
    case Letter::D:
      return 2;
    default:
      return 0;
  }
}

int col_index(Letter l) {
  switch (l) {
    case Letter::A:
    case Letter::C:
      return 1;
    case Letter::B:
    case Letter::D:
      return 2;
    default:
      return 0;
  }
}

bool is_matrix_letter(Letter l) { return row_index(l) != 0; }

std::string_view symbol(Letter l) {
  switch (l) {
    case Letter::DeltaInv:
      return "Di";
    case Letter::Delta:
      return "D";
    case Letter::A:
      return "a";
    case Letter::B:
      return "b";
    case Letter::C:
      return "c";
    case Letter::D:
      return "d";
  }
  return "?";
}

// ---------------------------------------------------------------- Word

Word Word::subword(std::size_t pos, std::size_t len) const {
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                  letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

Word operator*(const Word& lhs, const Word& rhs) {
  std::vector<Letter> out;
  out.reserve(lhs.size() + rhs.size());
  out.insert(out.end(), lhs.begin(), lhs.end());
  out.insert(out.end(), rhs.begin(), rhs.end());
  return Word(std::move(out));
}

std::strong_ordering operator<=>(const Word& lhs, const Word& rhs) {
  if (auto c = lhs.size() <=> rhs.size(); c != 0) return c;
  for (std::size_t i = 0; i < lhs.size(); ++i)
    if (auto c = lhs[i] <=> rhs[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string Word::to_string(std::string_view separator) const {
  if (letters_.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < letters_.size()) {
    Letter l = letters_[i];
    std::size_t run = 1;
    if (!is_matrix_letter(l))
      while (i + run < letters_.size() && letters_[i + run] == l) ++run;
    if (!out.empty()) out += separator;
    out += symbol(l);
    if (run > 1) out += "^" + std::to_string(run);
    i += run;
  }
  return out;
}

// ---------------------------------------------------------------- rules

namespace {

using L = Letter;

std::vector<RewriteRule> make_rules() {
  const Rational one(1);
  const Rational minus_one(-1);
  return {
      {{L::C, L::A}, {{{L::A, L::C}, one}}},
      {{L::D, L::B}, {{{L::B, L::D}, one}}},
      {{L::D, L::A}, {{{L::B, L::C}, one}, {{L::Delta}, one}}},
      {{L::C, L::B}, {{{L::A, L::D}, one}, {{L::Delta}, minus_one}}},
      {{L::Delta, L::DeltaInv}, {{Word{}, one}}},
      {{L::DeltaInv, L::Delta}, {{Word{}, one}}},
      {{L::B, L::DeltaInv, L::A}, {{{L::A, L::DeltaInv, L::B}, one}}},
      {{L::D, L::DeltaInv, L::C}, {{{L::C, L::DeltaInv, L::D}, one}}},
      {{L::B, L::DeltaInv, L::C}, {{{L::A, L::DeltaInv, L::D}, one}, {Word{}, minus_one}}},
      {{L::D, L::DeltaInv, L::A}, {{{L::C, L::DeltaInv, L::B}, one}, {Word{}, one}}},
  };
}

bool matches_at(const Word& w, std::size_t pos, const Word& lhs) {
  if (pos + lhs.size() > w.size()) return false;
  for (std::size_t k = 0; k < lhs.size(); ++k)
    if (w[pos + k] != lhs[k]) return false;
  return true;
}

// Replaces the occurrence of rule `r` at `pos` in `w`, accumulating coef * result into `out`.
void rewrite_into(const Word& w, std::size_t pos, const RewriteRule& r, const Rational& coef,
                  NCElement::Terms& out) {
  for (const auto& [rhs, c] : r.rhs) {
    std::vector<Letter> letters;
    letters.reserve(w.size() - r.lhs.size() + rhs.size());
    letters.insert(letters.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
    letters.insert(letters.end(), rhs.begin(), rhs.end());
    letters.insert(letters.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + r.lhs.size()),
                   w.end());
    Rational add = coef * c;
    auto [it, inserted] = out.try_emplace(Word(std::move(letters)), add);
    if (!inserted) {
      it->second += add;
      if (it->second == 0) out.erase(it);
    }
  }
}

}  // namespace

const std::vector<RewriteRule>& rewrite_rules() {
  static const std::vector<RewriteRule> rules = make_rules();
  return rules;
}

std::optional<Redex> find_redex(const Word& w) {
  const auto& rules = rewrite_rules();
  for (std::size_t pos = 0; pos + 1 < w.size(); ++pos)
    for (std::size_t r = 0; r < rules.size(); ++r)
      if (matches_at(w, pos, rules[r].lhs)) return Redex{pos, r};
  return std::nullopt;
}

// ---------------------------------------------------------------- NCElement

NCElement::NCElement(int scalar) : NCElement(Rational(scalar)) {}

NCElement::NCElement(const Rational& scalar) {
  if (scalar != 0) terms_.emplace(Word{}, scalar);
}

NCElement NCElement::generator(Letter l) { return word(Word{l}); }

NCElement NCElement::word(const Word& w) {
  Terms raw;
  raw.emplace(w, Rational(1));
  return reduce(raw);
}

NCElement NCElement::reduce(const Terms& raw) {
  // Pops the deglex-largest pending word; every rewrite strictly decreases it,
  // so each word leaves the pending set at most once.
  const auto& rules = rewrite_rules();
  Terms pending;
  for (const auto& [w, c] : raw)
    if (c != 0) pending.emplace(w, c);
  NCElement out;
  while (!pending.empty()) {
    auto node = pending.extract(std::prev(pending.end()));
    const Word& w = node.key();
    if (auto redex = find_redex(w)) {
      rewrite_into(w, redex->position, rules[redex->rule], node.mapped(), pending);
    } else {
      out.terms_.insert(std::move(node));
    }
  }
  return out;
}

Rational NCElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::size_t NCElement::degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }

void NCElement::add_normal(const Word& w, const Rational& coef) {
  if (coef == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

NCElement& NCElement::operator+=(const NCElement& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_normal(w, c);
  return *this;
}

NCElement& NCElement::operator-=(const NCElement& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_normal(w, -c);
  return *this;
}

NCElement& NCElement::operator*=(const Rational& rhs) {
  if (rhs == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= rhs;
  return *this;
}

NCElement NCElement::operator-() const {
  NCElement out = *this;
  out *= Rational(-1);
  return out;
}

NCElement operator*(const NCElement& lhs, const NCElement& rhs) {
  NCElement::Terms raw;
  for (const auto& [u, cu] : lhs.terms())
    for (const auto& [v, cv] : rhs.terms()) {
      Rational c = cu * cv;
      auto [it, inserted] = raw.try_emplace(u * v, c);
      if (!inserted) it->second += c;
    }
  return NCElement::reduce(raw);
}

NCElement multiply_words(const Word& u, const Word& v) { return NCElement::word(u * v); }

NCElement power(const NCElement& x, unsigned n) {
  NCElement out(1);
  for (unsigned i = 0; i < n; ++i) out = out * x;
  return out;
}

std::string NCElement::to_string(PrintStyle style) const {
  if (terms_.empty()) return "0";
  const std::string_view sep = style == PrintStyle::Canonical ? "*" : " ";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [w, c] = *it;
    bool negative = c < 0;
    Rational mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (w.empty()) {
      out += oncgl2::to_string(mag);
    } else {
      if (mag != 1) {
        out += oncgl2::to_string(mag);
        out += sep;
      }
      out += w.to_string(sep);
    }
  }
  return out;
}

// ---------------------------------------------------------------- confluence

bool ConfluenceReport::pass() const { return unresolved() == 0; }

std::size_t ConfluenceReport::unresolved() const {
  return static_cast<std::size_t>(std::count_if(ambiguities.begin(), ambiguities.end(),
                                                [](const Ambiguity& a) { return !a.resolved(); }));
}

namespace {

NCElement reduce_once_then_normalize(const Word& w, std::size_t pos, const RewriteRule& r) {
  NCElement::Terms raw;
  rewrite_into(w, pos, r, Rational(1), raw);
  return NCElement::reduce(raw);
}

}  // namespace

ConfluenceReport check_confluence() {
  const auto& rules = rewrite_rules();
  ConfluenceReport report;
  for (std::size_t i = 0; i < rules.size(); ++i)
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Word& u = rules[i].lhs;
      const Word& v = rules[j].lhs;
      // Proper overlaps: a suffix of u equals a prefix of v.
      for (std::size_t k = 1; k < std::min(u.size(), v.size()); ++k) {
        if (u.subword(u.size() - k, k) != v.subword(0, k)) continue;
        Word w = u * v.subword(k, v.size() - k);
        report.ambiguities.push_back({w, i, j, reduce_once_then_normalize(w, 0, rules[i]),
                                      reduce_once_then_normalize(w, u.size() - k, rules[j])});
      }
      // Inclusions: v is a factor of u.
      if (i != j && v.size() <= u.size())
        for (std::size_t p = 0; p + v.size() <= u.size(); ++p)
          if (matches_at(u, p, v))
            report.ambiguities.push_back({u, i, j, reduce_once_then_normalize(u, 0, rules[i]),
                                          reduce_once_then_normalize(u, p, rules[j])});
    }
  return report;
}

// ---------------------------------------------------------------- basis

namespace {

// Whether appending l to the normal word w keeps it normal: only redexes ending
// at the new letter need checking.
bool extends_normally(const Word& w, Letter l) {
  for (const auto& r : rewrite_rules()) {
    const Word& lhs = r.lhs;
    if (lhs[lhs.size() - 1] != l || lhs.size() > w.size() + 1) continue;
    bool hit = true;
    for (std::size_t k = 0; k + 1 < lhs.size(); ++k)
      if (w[w.size() - (lhs.size() - 1) + k] != lhs[k]) {
        hit = false;
        break;
      }
    if (hit) return false;
  }
  return true;
}

}  // namespace

std::vector<Word> enumerate_basis_layer(std::size_t length) {
  std::vector<Word> layer{Word{}};
  for (std::size_t n = 0; n < length; ++n) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (Letter l : kLetters)
        if (extends_normally(w, l)) {
          Word e = w;
          e.push_back(l);
          next.push_back(std::move(e));
        }
    layer = std::move(next);
  }
  return layer;
}

std::vector<Word> enumerate_basis(std::size_t max_length) {
  std::vector<Word> out;
  for (std::size_t n = 0; n <= max_length; ++n) {
    auto layer = enumerate_basis_layer(n);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

// ---------------------------------------------------------------- tensors

TensorElement TensorElement::pure(const std::vector<NCElement>& factors) {
  TensorElement out(factors.size());
  std::vector<std::pair<Key, Rational>> acc{{Key{}, Rational(1)}};
  for (const auto& f : factors) {
    std::vector<std::pair<Key, Rational>> next;
    for (const auto& [key, c] : acc)
      for (const auto& [w, cw] : f.terms()) {
        Key k = key;
        k.push_back(w);
        next.emplace_back(std::move(k), c * cw);
      }
    acc = std::move(next);
  }
  for (const auto& [k, c] : acc) out.add_term(k, c);
  return out;
}

void TensorElement::add_term(const Key& key, const Rational& coef) {
  if (key.size() != arity_) throw std::invalid_argument("TensorElement: arity mismatch");
  if (coef == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
  return *this;
}

TensorElement operator*(const TensorElement& lhs, const TensorElement& rhs) {
  if (lhs.arity_ != rhs.arity_) throw std::invalid_argument("TensorElement product: arity mismatch");
  TensorElement out(lhs.arity_);
  for (const auto& [ku, cu] : lhs.terms_)
    for (const auto& [kv, cv] : rhs.terms_) {
      std::vector<NCElement> legs;
      legs.reserve(lhs.arity_);
      for (std::size_t f = 0; f < lhs.arity_; ++f) legs.push_back(multiply_words(ku[f], kv[f]));
      TensorElement prod = TensorElement::pure(legs);
      for (const auto& [k, c] : prod.terms_) out.add_term(k, c * cu * cv);
    }
  return out;
}

std::string TensorElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    first = false;
    Rational mag = abs(c);
    if (mag != 1) out += oncgl2::to_string(mag) + "*";
    out += "(";
    for (std::size_t f = 0; f < k.size(); ++f) {
      if (f) out += " # ";
      out += k[f].to_string();
    }
    out += ")";
  }
  return out;
}

TensorElement as_tensor(const NCElement& x) { return TensorElement::pure({x}); }

// ---------------------------------------------------------------- Hopf maps

namespace {

NCElement gen(Letter l) { return NCElement::generator(l); }

TensorElement letter_coproduct(Letter l) {
  auto t = [](Letter x, Letter y) { return TensorElement::pure({gen(x), gen(y)}); };
  switch (l) {
    case Letter::A: {
      auto out = t(L::A, L::A);
      out += t(L::B, L::C);
      return out;
    }
    case Letter::B: {
      auto out = t(L::A, L::B);
      out += t(L::B, L::D);
      return out;
    }
    case Letter::C: {
      auto out = t(L::C, L::A);
      out += t(L::D, L::C);
      return out;
    }
    case Letter::D: {
      auto out = t(L::C, L::B);
      out += t(L::D, L::D);
      return out;
    }
    case Letter::Delta:
      return t(L::Delta, L::Delta);
    case Letter::DeltaInv:
      return t(L::DeltaInv, L::DeltaInv);
  }
  throw std::logic_error("letter_coproduct");
}

NCElement letter_antipode(Letter l) {
  auto di = gen(L::DeltaInv);
  switch (l) {
    case Letter::A:
      return di * gen(L::D);
    case Letter::B:
      return -(di * gen(L::B));
    case Letter::C:
      return -(di * gen(L::C));
    case Letter::D:
      return di * gen(L::A);
    case Letter::Delta:
      return di;
    case Letter::DeltaInv:
      return gen(L::Delta);
  }
  throw std::logic_error("letter_antipode");
}

NCElement letter_antipode_inverse(Letter l) {
  auto di = gen(L::DeltaInv);
  switch (l) {
    case Letter::A:
      return gen(L::D) * di;
    case Letter::B:
      return -(gen(L::B) * di);
    case Letter::C:
      return -(gen(L::C) * di);
    case Letter::D:
      return gen(L::A) * di;
    case Letter::Delta:
      return di;
    case Letter::DeltaInv:
      return gen(L::Delta);
  }
  throw std::logic_error("letter_antipode_inverse");
}

const TensorElement& word_coproduct(const Word& w) {
  thread_local std::map<Word, TensorElement> cache;
  if (auto it = cache.find(w); it != cache.end()) return it->second;
  TensorElement out = TensorElement::pure({NCElement(1), NCElement(1)});
  for (Letter l : w) out = out * letter_coproduct(l);
  return cache.emplace(w, std::move(out)).first->second;
}

template <class LetterMap>
NCElement anti_homomorphism(const NCElement& x, LetterMap image) {
  NCElement out;
  for (const auto& [w, c] : x.terms()) {
    NCElement term(c);
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) term = term * image(*it);
    out += term;
  }
  return out;
}

}  // namespace

TensorElement coproduct(const NCElement& x) {
  TensorElement out(2);
  for (const auto& [w, c] : x.terms())
    for (const auto& [k, ck] : word_coproduct(w).terms()) out.add_term(k, c * ck);
  return out;
}

Rational counit(const NCElement& x) {
  Rational out(0);
  for (const auto& [w, c] : x.terms()) {
    bool zero = std::any_of(w.begin(), w.end(), [](Letter l) { return l == L::B || l == L::C; });
    if (!zero) out += c;
  }
  return out;
}

NCElement antipode(const NCElement& x) { return anti_homomorphism(x, letter_antipode); }

NCElement antipode_inverse(const NCElement& x) {
  return anti_homomorphism(x, letter_antipode_inverse);
}

namespace {

template <class Fn>
TensorElement map_factor(const TensorElement& t, std::size_t factor, std::size_t new_width, Fn fn) {
  if (factor >= t.arity()) throw std::out_of_range("tensor factor out of range");
  TensorElement out(t.arity() - 1 + new_width);
  for (const auto& [k, c] : t.terms()) {
    TensorElement img = fn(k[factor]);
    for (const auto& [ik, ic] : img.terms()) {
      TensorElement::Key key(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(factor));
      key.insert(key.end(), ik.begin(), ik.end());
      key.insert(key.end(), k.begin() + static_cast<std::ptrdiff_t>(factor + 1), k.end());
      out.add_term(key, c * ic);
    }
  }
  return out;
}

}  // namespace

TensorElement coproduct_at(const TensorElement& t, std::size_t factor) {
  return map_factor(t, factor, 2, [](const Word& w) { return word_coproduct(w); });
}

TensorElement counit_at(const TensorElement& t, std::size_t factor) {
  return map_factor(t, factor, 0, [](const Word& w) {
    TensorElement scalar(0);
    scalar.add_term({}, counit(NCElement::word(w)));
    return scalar;
  });
}

TensorElement antipode_at(const TensorElement& t, std::size_t factor) {
  return map_factor(t, factor, 1, [](const Word& w) { return as_tensor(antipode(NCElement::word(w))); });
}

NCElement multiply_out(const TensorElement& t) {
  NCElement::Terms raw;
  for (const auto& [k, c] : t.terms()) {
    Word w;
    for (const auto& f : k) w = w * f;
    auto [it, inserted] = raw.try_emplace(w, c);
    if (!inserted) it->second += c;
  }
  return NCElement::reduce(raw);
}

}  // namespace oncgl2
