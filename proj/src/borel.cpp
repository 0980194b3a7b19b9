#include "oncgl2/borel.hpp"

#include "oncgl2/standard.hpp"

#include <optional>
#include <random>
#include <stdexcept>

namespace oncgl2 {

namespace {

std::optional<QMonomial> letter_image(Quotient q, Letter l) {
  const bool b_side = q != Quotient::Bplus;  // central variable is a
  switch (l) {
    case Letter::A:
      return b_side ? QMonomial{1, {}} : QMonomial{0, {1}};
    case Letter::D:
      return b_side ? QMonomial{0, {1}} : QMonomial{1, {}};
    case Letter::B:
      if (q == Quotient::Bplus) return QMonomial{0, {2}};
      return std::nullopt;
    case Letter::C:
      if (q == Quotient::B) return QMonomial{0, {2}};
      return std::nullopt;
    case Letter::Delta:
      return QMonomial{1, {1}};
    case Letter::DeltaInv:
      return QMonomial{-1, {-1}};
  }
  return std::nullopt;
}

void multiply_into(QMonomial& acc, const QMonomial& rhs) {
  acc.central += rhs.central;
  for (auto s : rhs.word) {
    if (!acc.word.empty() && acc.word.back() != 2 && s != 2 && acc.word.back() == -s) acc.word.pop_back();
    else acc.word.push_back(s);
  }
}

void add(QElement& e, const QMonomial& m, const Rational& c) {
  auto& slot = e[m];
  slot += c;
  if (slot == 0) e.erase(m);
}

}  // namespace

std::string QMonomial::to_string(Quotient q) const {
  const char central_letter = q == Quotient::Bplus ? 'd' : 'a';
  const char x_letter = q == Quotient::Bplus ? 'a' : 'd';
  const char y_letter = q == Quotient::Bplus ? 'b' : 'c';
  std::string out;
  if (central != 0) {
    out += central_letter;
    if (central != 1) out += "^" + std::to_string(central);
  }
  for (auto s : word) {
    if (!out.empty()) out += "*";
    if (s == 2) out += y_letter;
    else if (s == 1) out += x_letter;
    else out += std::string(1, x_letter) + "^-1";
  }
  return out.empty() ? "1" : out;
}

QMonomial grouplike(Quotient q, const Weight& t) {
  const int central = q == Quotient::Bplus ? t.j : t.i;
  const int x_power = q == Quotient::Bplus ? t.i : t.j;
  QMonomial m{central, {}};
  for (int k = 0; k < std::abs(x_power); ++k) m.word.push_back(static_cast<std::int8_t>(x_power > 0 ? 1 : -1));
  return m;
}

QElement project(Quotient q, const Word& w) {
  QMonomial acc;
  for (Letter l : w) {
    auto img = letter_image(q, l);
    if (!img) return {};
    multiply_into(acc, *img);
  }
  return {{acc, Rational(1)}};
}

QElement project(Quotient q, const NCElement& x) {
  QElement out;
  for (const auto& [w, c] : x.terms())
    for (const auto& [m, cm] : project(q, w)) add(out, m, c * cm);
  return out;
}

NCElement psi(const NCElement& x) {
  auto image = [](Letter l) {
    switch (l) {
      case Letter::A:
        return Letter::D;
      case Letter::D:
        return Letter::A;
      case Letter::B:
        return Letter::C;
      case Letter::C:
        return Letter::B;
      default:
        return l;
    }
  };
  NCElement::Terms raw;
  for (const auto& [w, c] : x.terms()) {
    std::vector<Letter> letters;
    for (Letter l : w) letters.push_back(image(l));
    raw[Word(std::move(letters))] += c;
  }
  return NCElement::reduce(raw);
}

std::vector<Vector> semi_invariants(const Comodule& x, Quotient q, const Weight& t) {
  const QMonomial g = grouplike(q, t);
  linalg::RowEchelon system(x.dim());
  for (std::size_t j = 0; j < x.dim(); ++j) {
    std::map<QMonomial, std::map<std::size_t, Rational>> rows;
    for (std::size_t i = 0; i < x.dim(); ++i)
      for (const auto& [m, c] : project(q, x.entry(i, j))) rows[m][i] += c;
    rows[g][j] -= 1;
    for (auto& [m, row] : rows) {
      linalg::SparseRow sparse;
      for (const auto& [i, c] : row)
        if (c != 0) sparse.emplace_back(i, c);
      if (!sparse.empty()) system.add(std::move(sparse));
    }
  }
  return system.nullspace();
}

namespace {

using LegKey = std::pair<Word, QMonomial>;

std::map<LegKey, Rational> project_leg(const NCElement& f, Quotient q, bool right_leg) {
  std::map<LegKey, Rational> out;
  const TensorElement df = coproduct(f);
  for (const auto& [key, c] : df.terms()) {
    const Word& keep = right_leg ? key[0] : key[1];
    const Word& proj = right_leg ? key[1] : key[0];
    for (const auto& [m, cm] : project(q, proj)) {
      auto& slot = out[{keep, m}];
      slot += c * cm;
      if (slot == 0) out.erase({keep, m});
    }
  }
  return out;
}

bool semi_invariant(const NCElement& f, Quotient q, const Weight& t, bool right_leg) {
  std::map<LegKey, Rational> expected;
  const QMonomial g = grouplike(q, t);
  for (const auto& [w, c] : f.terms()) expected[{w, g}] = c;
  return project_leg(f, q, right_leg) == expected;
}

}  // namespace

bool is_right_semi_invariant(const NCElement& f, Quotient q, const Weight& t) {
  return semi_invariant(f, q, t, true);
}

bool is_left_semi_invariant(const NCElement& f, Quotient q, const Weight& t) {
  return semi_invariant(f, q, t, false);
}

bool subrep_test(const LambdaWord& lambda, int random_vectors) {
  Comodule nabla = build_nabla(lambda);
  Vector top(nabla.dim());
  top[nabla_highest_index(lambda)] = 1;
  auto contains_top = [&](const Vector& v) {
    auto sub = generated_subcomodule(nabla, v);
    linalg::RowEchelon span(nabla.dim());
    for (const auto& b : sub.basis) span.add_dense(b);
    return span.contains(top);
  };
  for (std::size_t i = 0; i < nabla.dim(); ++i) {
    Vector e(nabla.dim());
    e[i] = 1;
    if (!contains_top(e)) return false;
  }
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int r = 0; r < random_vectors; ++r) {
    Vector v(nabla.dim());
    bool nonzero = false;
    for (auto& x : v) {
      x = coef(rng);
      nonzero = nonzero || x != 0;
    }
    if (nonzero && !contains_top(v)) return false;
  }
  return true;
}

InducedResult induced_truncated(const Weight& t, std::size_t n) {
  const auto words = enumerate_basis(n);
  const QMonomial g = grouplike(Quotient::B, t);

  std::map<LegKey, std::map<std::size_t, Rational>> rows;
  for (std::size_t k = 0; k < words.size(); ++k) {
    for (const auto& [key, c] : project_leg(NCElement::word(words[k]), Quotient::B, true)) {
      rows[key][k] += c;
    }
    rows[{words[k], g}][k] -= 1;
  }
  linalg::RowEchelon system(words.size());
  for (auto& [key, row] : rows) {
    linalg::SparseRow sparse;
    for (const auto& [k, c] : row)
      if (c != 0) sparse.emplace_back(k, c);
    if (!sparse.empty()) system.add(std::move(sparse));
  }
  InducedResult out;
  for (const auto& v : system.nullspace()) {
    NCElement f;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k] != 0) f.add_normal(words[k], v[k]);
    out.basis.push_back(std::move(f));
  }
  out.dim = out.basis.size();
  return out;
}

std::vector<Word> induced_predicted_words(const Weight& t, std::size_t n) {
  static const Letter alphabet[] = {Letter::DeltaInv, Letter::Delta, Letter::B, Letter::D};
  std::vector<Word> out;
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 0;; ++len) {
    for (const auto& w : layer) {
      Weight s;
      for (Letter l : w) {
        if (l == Letter::Delta) s = s * Weight{1, 1};
        else if (l == Letter::DeltaInv) s = s * Weight{-1, -1};
        else s = s * Weight{0, 1};
      }
      if (s == t) out.push_back(w);
    }
    if (len == n) break;
    std::vector<Word> next;
    for (const auto& w : layer)
      for (Letter l : alphabet) {
        if (!w.empty()) {
          Letter p = w[w.size() - 1];
          if ((p == Letter::D && l == Letter::B) || (p == Letter::Delta && l == Letter::DeltaInv) ||
              (p == Letter::DeltaInv && l == Letter::Delta))
            continue;
        }
        Word e = w;
        e.push_back(l);
        next.push_back(std::move(e));
      }
    layer = std::move(next);
  }
  return out;
}

std::size_t induced_predicted(const Weight& t, std::size_t n) { return induced_predicted_words(t, n).size(); }

}  // namespace oncgl2
