#include "oncgl2/standard.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace oncgl2 {

namespace {

NCElement gen(Letter l) { return NCElement::generator(l); }

NCElement delta_power(int k) {
  NCElement out(1);
  Letter l = k >= 0 ? Letter::Delta : Letter::DeltaInv;
  for (int n = 0; n < std::abs(k); ++n) out = out * gen(l);
  return out;
}

std::string monomial_label(int y, int m) {
  auto part = [](const char* e, int p) -> std::string {
    if (p == 0) return "";
    return p == 1 ? std::string(e) : std::string(e) + "^" + std::to_string(p);
  };
  std::string s = part("e1", y - m) + part("e2", m);
  return s.empty() ? "1" : s;
}

}  // namespace

Comodule build_V() {
  return Comodule({"e1", "e2"}, {{gen(Letter::A), gen(Letter::B)}, {gen(Letter::C), gen(Letter::D)}});
}

Comodule build_R(int k) {
  std::string label = k == 0 ? "1" : (k == 1 ? "r" : "r^" + std::to_string(k));
  return Comodule::one_dimensional(delta_power(k), label);
}

Comodule build_SymV(int y) {
  if (y < 0) throw std::invalid_argument("negative symmetric power");
  // Basis index m <-> sorted tuple (1^{y-m}, 2^m). The coaction of the sorted
  // representative is summed over all tuples J with the same content.
  const NCElement m_entries[2][2] = {{gen(Letter::A), gen(Letter::B)}, {gen(Letter::C), gen(Letter::D)}};
  const std::size_t n = static_cast<std::size_t>(y) + 1;
  std::vector<std::vector<NCElement>> c(n, std::vector<NCElement>(n));
  for (std::size_t m = 0; m < n; ++m) {
    // partial[k] = sum over prefixes J of the representative with k twos in J
    std::vector<NCElement> partial{NCElement(1)};
    for (int t = 0; t < y; ++t) {
      const int row = t < y - static_cast<int>(m) ? 0 : 1;
      std::vector<NCElement> next(partial.size() + 1);
      for (std::size_t k = 0; k < partial.size(); ++k) {
        if (partial[k].is_zero()) continue;
        next[k] += partial[k] * m_entries[row][0];
        next[k + 1] += partial[k] * m_entries[row][1];
      }
      partial = std::move(next);
    }
    for (std::size_t k = 0; k < n; ++k) c[m][k] = partial[k];
  }
  std::vector<std::string> labels;
  for (std::size_t m = 0; m < n; ++m) labels.push_back(monomial_label(y, static_cast<int>(m)));
  return Comodule(std::move(labels), std::move(c));
}

Comodule build_SymV_quotient(int y) {
  if (y < 0) throw std::invalid_argument("negative symmetric power");
  Comodule vy = Comodule::unit();
  for (int t = 0; t < y; ++t) vy = tensor(vy, build_V());
  const std::size_t n = vy.dim();
  std::vector<Vector> differences;
  for (std::size_t idx = 0; idx < n; ++idx)
    for (int p = 0; p + 1 < y; ++p) {
      const std::size_t shift = static_cast<std::size_t>(y - 2 - p);
      const std::size_t hi = (idx >> (shift + 1)) & 1U;
      const std::size_t lo = (idx >> shift) & 1U;
      if (hi == lo) continue;
      std::size_t swapped = idx ^ (std::size_t{3} << shift);
      Vector v(n);
      v[idx] = 1;
      v[swapped] = -1;
      differences.push_back(std::move(v));
    }
  return quotient(vy, differences);
}

Comodule build_TV(int y) { return tensor(right_dual(build_SymV(y)), build_R(1)); }

Comodule build_M(const LambdaWord& lambda) {
  std::vector<Comodule> factors;
  for (const auto& b : lambda.blocks()) {
    if (b.kind == LambdaWord::Kind::Delta) factors.push_back(build_R(b.exponent));
    else
      for (int k = 0; k < b.exponent; ++k) factors.push_back(build_V());
  }
  return tensor(factors);
}

Comodule build_nabla(const LambdaWord& lambda) {
  std::vector<Comodule> factors;
  for (const auto& b : lambda.blocks())
    factors.push_back(b.kind == LambdaWord::Kind::Delta ? build_R(b.exponent) : build_SymV(b.exponent));
  return tensor(factors);
}

Comodule build_delta(const LambdaWord& lambda) { return right_dual(build_nabla(star_inv(lambda))); }

std::size_t nabla_dimension(const LambdaWord& lambda) {
  std::size_t n = 1;
  for (const auto& b : lambda.blocks())
    if (b.kind == LambdaWord::Kind::D) n *= static_cast<std::size_t>(b.exponent) + 1;
  return n;
}

Character nabla_character(const LambdaWord& lambda) {
  Character out{{Weight{}, 1}};
  for (const auto& b : lambda.blocks()) {
    Character f;
    if (b.kind == LambdaWord::Kind::Delta) f[Weight{b.exponent, b.exponent}] = 1;
    else
      for (int m = 0; m <= b.exponent; ++m) f[Weight{b.exponent - m, m}] = 1;
    out = character_product(out, f);
  }
  return out;
}

namespace {

std::size_t unique_index_of_weight(const Comodule& x, const Weight& t) {
  const auto& w = x.basis_weights();
  if (!w) throw std::logic_error("comodule has no weight basis");
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < w->size(); ++i)
    if ((*w)[i] == t) {
      if (found) throw std::logic_error("weight " + t.to_string() + " is not multiplicity free");
      found = i;
    }
  if (!found) throw std::logic_error("weight " + t.to_string() + " does not occur");
  return *found;
}

}  // namespace

std::size_t nabla_highest_index(const LambdaWord& lambda) {
  return unique_index_of_weight(build_nabla(lambda), wt(lambda));
}

std::size_t delta_highest_index(const LambdaWord& lambda) {
  return unique_index_of_weight(build_delta(lambda), wt(lambda));
}

Word nabla_regular_word(const LambdaWord& lambda, std::size_t index) {
  // Mixed radix, last block fastest (matches the tensor index order).
  const auto& blocks = lambda.blocks();
  std::vector<std::size_t> digit(blocks.size(), 0);
  for (std::size_t k = blocks.size(); k-- > 0;) {
    if (blocks[k].kind != LambdaWord::Kind::D) continue;
    const std::size_t radix = static_cast<std::size_t>(blocks[k].exponent) + 1;
    digit[k] = index % radix;
    index /= radix;
  }
  Word w;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const auto& b = blocks[k];
    if (b.kind == LambdaWord::Kind::Delta) {
      for (int n = 0; n < std::abs(b.exponent); ++n)
        w.push_back(b.exponent > 0 ? Letter::Delta : Letter::DeltaInv);
    } else {
      const int m = static_cast<int>(digit[k]);
      for (int n = 0; n < b.exponent - m; ++n) w.push_back(Letter::B);
      for (int n = 0; n < m; ++n) w.push_back(Letter::D);
    }
  }
  return w;
}

Verdict check_nabla_regular(const LambdaWord& lambda) {
  Comodule nabla = build_nabla(lambda);
  std::vector<NCElement> words;
  for (std::size_t i = 0; i < nabla.dim(); ++i) words.push_back(NCElement::word(nabla_regular_word(lambda, i)));
  for (std::size_t i = 0; i < nabla.dim(); ++i) {
    TensorElement expected(2);
    for (std::size_t j = 0; j < nabla.dim(); ++j)
      if (!nabla.entry(i, j).is_zero()) expected += TensorElement::pure({nabla.entry(i, j), words[j]});
    if (coproduct(words[i]) != expected)
      return {false, "coproduct of " + words[i].to_string() + " leaves the span"};
  }
  return {};
}

ComoduleMap canonical_map(const LambdaWord& lambda) {
  Comodule delta = build_delta(lambda);
  Comodule nabla = build_nabla(lambda);
  auto homs = hom_space(delta, nabla);
  if (homs.size() != 1)
    throw std::logic_error("Hom(Delta, nabla) for " + lambda.to_string() + " has dimension " +
                           std::to_string(homs.size()));
  ComoduleMap f = std::move(homs.front());
  const Weight t = wt(lambda);
  const Rational c = f(unique_index_of_weight(nabla, t), unique_index_of_weight(delta, t));
  if (c == 0) throw std::logic_error("canonical map vanishes on the highest weight");
  const Rational inv = 1 / c;
  for (std::size_t r = 0; r < f.rows(); ++r)
    for (std::size_t s = 0; s < f.cols(); ++s)
      if (f(r, s) != 0) f(r, s) *= inv;
  return f;
}

Subcomodule build_L(const LambdaWord& lambda) {
  Comodule delta = build_delta(lambda);
  Comodule nabla = build_nabla(lambda);
  ComoduleMap f = canonical_map(lambda);
  Subcomodule img = image(delta, nabla, f);
  Vector top(nabla.dim());
  top[unique_index_of_weight(nabla, wt(lambda))] = 1;
  Subcomodule gen_sub = generated_subcomodule(nabla, top);
  if (!linalg::same_span(img.basis, gen_sub.basis, nabla.dim()))
    throw std::logic_error("image of the canonical map differs from the generated subcomodule");
  return img;
}

// ---------------------------------------------------------------- filtration

std::vector<LambdaWord> nabla_multiset(const LambdaWord& lambda) {
  using Kind = LambdaWord::Kind;
  std::vector<LambdaWord> current{LambdaWord{}};
  for (const auto& b : lambda.blocks()) {
    if (b.kind == Kind::Delta) {
      const LambdaWord step = LambdaWord::delta(b.exponent);
      for (auto& mu : current) mu = mu * step;
      continue;
    }
    for (int k = 0; k < b.exponent; ++k) {
      std::vector<LambdaWord> next;
      for (const auto& mu : current) {
        next.push_back(mu * LambdaWord::d());
        const auto& mb = mu.blocks();
        if (!mb.empty() && mb.back().kind == Kind::D) {
          std::vector<LambdaWord::Block> blocks = mb;
          blocks.back().exponent -= 1;
          blocks.push_back({Kind::Delta, 1});
          next.push_back(LambdaWord::from_blocks(blocks));
        }
      }
      current = std::move(next);
    }
  }
  std::sort(current.begin(), current.end());
  return current;
}

std::vector<std::pair<Word, LambdaWord>> decompose_layer(std::size_t n) {
  static const Letter alphabet[] = {Letter::DeltaInv, Letter::Delta, Letter::C, Letter::D};
  std::vector<Word> layer{Word{}};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (Letter l : alphabet) {
        const std::size_t s = w.size();
        if (s >= 1 && ((w[s - 1] == Letter::Delta && l == Letter::DeltaInv) ||
                       (w[s - 1] == Letter::DeltaInv && l == Letter::Delta)))
          continue;
        if (s >= 2 && w[s - 2] == Letter::D && w[s - 1] == Letter::DeltaInv && l == Letter::C) continue;
        Word e = w;
        e.push_back(l);
        next.push_back(std::move(e));
      }
    layer = std::move(next);
  }
  std::vector<std::pair<Word, LambdaWord>> out;
  for (auto& w : layer) {
    std::vector<LambdaWord::Block> blocks;
    for (Letter l : w) {
      if (l == Letter::Delta) blocks.push_back({LambdaWord::Kind::Delta, 1});
      else if (l == Letter::DeltaInv) blocks.push_back({LambdaWord::Kind::Delta, -1});
      else blocks.push_back({LambdaWord::Kind::D, 1});
    }
    out.emplace_back(std::move(w), LambdaWord::from_blocks(blocks));
  }
  return out;
}

LambdaWord lambda_of_tensor_word(const std::vector<RepSymbol>& word) {
  std::vector<LambdaWord::Block> blocks;
  for (RepSymbol s : word) {
    switch (s) {
      case RepSymbol::V:
        blocks.push_back({LambdaWord::Kind::D, 1});
        break;
      case RepSymbol::R:
        blocks.push_back({LambdaWord::Kind::Delta, 1});
        break;
      case RepSymbol::Rinv:
        blocks.push_back({LambdaWord::Kind::Delta, -1});
        break;
    }
  }
  return LambdaWord::from_blocks(blocks);
}

std::vector<LambdaWord> repring_decompose(const std::vector<RepSymbol>& word) {
  return nabla_multiset(lambda_of_tensor_word(word));
}

Character repring_char(const std::vector<LambdaWord>& multiset) {
  Character out;
  for (const auto& mu : multiset) out = character_sum(out, nabla_character(mu));
  return out;
}

}  // namespace oncgl2
