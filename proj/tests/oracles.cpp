#include "oracles.hpp"

#include <array>
#include <deque>
#include <map>

namespace oracle {

using oncgl2::Character;
using oncgl2::Comodule;
using oncgl2::LambdaWord;
using oncgl2::Letter;
using oncgl2::NCElement;
using oncgl2::Weight;
using oncgl2::Word;

namespace {

bool is_delta(Letter l) { return l == Letter::Delta || l == Letter::DeltaInv; }
int row(Letter l) { return (l == Letter::A || l == Letter::B) ? 1 : 2; }
int col(Letter l) { return (l == Letter::A || l == Letter::C) ? 1 : 2; }

// Every word of the given length over `alphabet`, in odometer order.
template <class F>
void for_each_word(std::size_t length, std::size_t alphabet, F&& f) {
  std::vector<std::size_t> digits(length, 0);
  for (;;) {
    f(digits);
    std::size_t k = length;
    while (k > 0 && ++digits[k - 1] == alphabet) digits[--k] = 0;
    if (k == 0) return;
  }
}

Word word_of(const std::vector<std::size_t>& digits) {
  Word w;
  for (auto d : digits) w.push_back(oncgl2::kLetters[d]);
  return w;
}

Flat reduce(const Flat& f) {
  Flat out;
  for (int x : f) {
    if (x != 0 && !out.empty() && out.back() == -x) out.pop_back();
    else out.push_back(x);
  }
  return out;
}

}  // namespace

bool matches_basis_pattern(const Word& w) {
  struct Run {
    bool delta;
    std::size_t begin, end;
  };
  std::vector<Run> runs;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const bool d = is_delta(w[i]);
    if (runs.empty() || runs.back().delta != d) runs.push_back({d, i, i + 1});
    else runs.back().end = i + 1;
  }
  for (std::size_t r = 0; r < runs.size(); ++r) {
    const Run& run = runs[r];
    for (std::size_t i = run.begin + 1; i < run.end; ++i) {
      if (run.delta && w[i] != w[i - 1]) return false;  // delta^x has one sign
      if (!run.delta && row(w[i]) < row(w[i - 1])) return false;
    }
    const bool interior = r > 0 && r + 1 < runs.size();
    if (run.delta && interior && run.end - run.begin == 1 && w[run.begin] == Letter::DeltaInv &&
        col(w[run.begin - 1]) > col(w[run.end]))
      return false;
  }
  return true;
}

std::vector<Word> pattern_words(std::size_t length) {
  std::vector<Word> out;
  for_each_word(length, 6, [&](const auto& digits) {
    Word w = word_of(digits);
    if (matches_basis_pattern(w)) out.push_back(w);
  });
  return out;
}

std::vector<Word> brute_force_normal(std::size_t length) {
  std::vector<Word> out;
  for_each_word(length, 6, [&](const auto& digits) {
    Word w = word_of(digits);
    if (oncgl2::is_normal(w)) out.push_back(w);
  });
  return out;
}

std::size_t rank(std::vector<std::vector<Rational>> rows) {
  std::size_t r = 0;
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Rational factor = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= factor * rows[r][k];
    }
    ++r;
  }
  return r;
}

std::size_t hom_dimension(const Comodule& x, const Comodule& y) {
  const std::size_t nx = x.dim(), ny = y.dim(), unknowns = nx * ny;
  if (unknowns == 0) return 0;
  auto var = [&](std::size_t k, std::size_t j) { return k * nx + j; };
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t k = 0; k < ny; ++k) {
      std::map<Word, std::vector<Rational>> eq;
      auto slot = [&](const Word& w) -> std::vector<Rational>& {
        auto& v = eq[w];
        if (v.empty()) v.assign(unknowns, 0);
        return v;
      };
      for (std::size_t j = 0; j < nx; ++j)
        for (const auto& [w, c] : x.entry(i, j).terms()) slot(w)[var(k, j)] += c;
      for (std::size_t l = 0; l < ny; ++l)
        for (const auto& [w, c] : y.entry(l, k).terms()) slot(w)[var(l, i)] -= c;
      for (auto& [w, v] : eq) rows.push_back(std::move(v));
    }
  return unknowns - rank(std::move(rows));
}

bool is_comodule_map(const Comodule& x, const Comodule& y, const oncgl2::Matrix& f) {
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t k = 0; k < y.dim(); ++k) {
      NCElement lhs, rhs;
      for (std::size_t j = 0; j < x.dim(); ++j) lhs += x.entry(i, j) * f(k, j);
      for (std::size_t l = 0; l < y.dim(); ++l) rhs += y.entry(l, k) * f(l, i);
      if (lhs != rhs) return false;
    }
  return true;
}

Flat flatten(const LambdaWord& w) {
  Flat out;
  for (const auto& b : w.blocks()) {
    const int n = b.exponent < 0 ? -b.exponent : b.exponent;
    const int letter = b.kind == LambdaWord::Kind::D ? 0 : (b.exponent > 0 ? 1 : -1);
    out.insert(out.end(), static_cast<std::size_t>(n), letter);
  }
  return out;
}

LambdaWord unflatten(const Flat& f) {
  std::vector<LambdaWord::Block> blocks;
  for (int x : reduce(f))
    blocks.push_back(x == 0 ? LambdaWord::Block{LambdaWord::Kind::D, 1} : LambdaWord::Block{LambdaWord::Kind::Delta, x});
  return LambdaWord::from_blocks(blocks);
}

std::set<LambdaWord> below(const LambdaWord& lambda) {
  std::set<Flat> seen;
  std::deque<Flat> queue{flatten(lambda)};
  while (!queue.empty()) {
    Flat f = queue.front();
    queue.pop_front();
    auto push = [&](Flat g) {
      g = reduce(g);
      if (seen.insert(g).second) queue.push_back(g);
    };
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
      if (f[i] == 0 && f[i + 1] == 0) {
        Flat g(f.begin(), f.begin() + static_cast<long>(i));
        g.push_back(1);
        g.insert(g.end(), f.begin() + static_cast<long>(i) + 2, f.end());
        push(g);
      }
      // reduced, so a lone -1 between two d's is exactly delta^{-1}
      if (i + 2 < f.size() && f[i] == 0 && f[i + 1] == -1 && f[i + 2] == 0) {
        Flat g(f.begin(), f.begin() + static_cast<long>(i));
        g.insert(g.end(), f.begin() + static_cast<long>(i) + 3, f.end());
        push(g);
      }
    }
  }
  std::set<LambdaWord> out;
  for (const auto& f : seen) out.insert(unflatten(f));
  return out;
}

bool le1(const LambdaWord& mu, const LambdaWord& lambda) { return mu == lambda || below(lambda).contains(mu); }

LambdaWord star(const LambdaWord& lambda) {
  Flat f = flatten(lambda), out;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    if (*it == 0) {
      out.push_back(0);
      out.push_back(-1);
    } else {
      out.push_back(-*it);
    }
  }
  return unflatten(out);
}

std::vector<LambdaWord> all_lambda(std::size_t max_length) {
  std::set<LambdaWord> out;
  for (std::size_t n = 0; n <= max_length; ++n)
    for_each_word(n, 3, [&](const auto& digits) {
      Flat f;
      for (auto d : digits) f.push_back(static_cast<int>(d) - 1);
      if (reduce(f) == f) out.insert(unflatten(f));
    });
  return {out.begin(), out.end()};
}

namespace {

Character product(const Character& x, const Character& y) {
  Character out;
  for (const auto& [s, m] : x)
    for (const auto& [t, n] : y) out[s * t] += m * n;
  return out;
}

Character symmetric_power(int y) {
  Character c;
  for (int m = 0; m <= y; ++m) c[Weight{m, y - m}] += 1;
  return c;
}

}  // namespace

Character char_nabla(const LambdaWord& lambda) {
  Character c{{Weight{}, 1}};
  for (const auto& b : lambda.blocks()) {
    if (b.kind == LambdaWord::Kind::D) c = product(c, symmetric_power(b.exponent));
    else c = product(c, Character{{Weight{b.exponent, b.exponent}, 1}});
  }
  return c;
}

Character char_M(const LambdaWord& lambda) {
  Character c{{Weight{}, 1}};
  for (int x : flatten(lambda)) c = product(c, x == 0 ? symmetric_power(1) : Character{{Weight{x, x}, 1}});
  return c;
}

Character char_star(const Character& c) {
  Character out;
  for (const auto& [t, m] : c) out[Weight{-t.j, -t.i}] += m;
  return out;
}

std::size_t dim_nabla(const LambdaWord& lambda) {
  std::size_t n = 1;
  for (const auto& b : lambda.blocks())
    if (b.kind == LambdaWord::Kind::D) n *= static_cast<std::size_t>(b.exponent + 1);
  return n;
}

std::size_t layer_prediction(std::size_t n) {
  // 0 = c, 1 = d, 2 = D, 3 = Di
  std::size_t total = 0;
  for_each_word(n, 4, [&](const auto& g) {
    for (std::size_t i = 0; i + 1 < g.size(); ++i) {
      if ((g[i] == 2 && g[i + 1] == 3) || (g[i] == 3 && g[i + 1] == 2)) return;
      if (i + 2 < g.size() && g[i] == 1 && g[i + 1] == 3 && g[i + 2] == 0) return;
    }
    Flat f;
    for (auto x : g) f.push_back(x <= 1 ? 0 : (x == 2 ? 1 : -1));
    total += dim_nabla(unflatten(f));
  });
  return total;
}

std::size_t induced_count(const Weight& t, std::size_t n) {
  // 0 = Di, 1 = D, 2 = b, 3 = d
  std::size_t count = 0;
  for (std::size_t len = 0; len <= n; ++len)
    for_each_word(len, 4, [&](const auto& g) {
      Weight w;
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (i + 1 < g.size()) {
          if (g[i] == 3 && g[i + 1] == 2) return;
          if (g[i] + g[i + 1] == 1) return;
        }
        if (g[i] == 0) w = w * Weight{-1, -1};
        else if (g[i] == 1) w = w * Weight{1, 1};
        else w = w * Weight{0, 1};
      }
      if (w == t) ++count;
    });
  return count;
}

Sl2Rank sl2_rank(int a, int b, bool left_donor) {
  // monomial x1^i x2^{p-i} (x) y1^j y2^{q-j} is indexed by (i, j)
  const int ta = left_donor ? a - 1 : a + 1, tb = left_donor ? b + 1 : b - 1;
  const std::size_t source = static_cast<std::size_t>((a + 1) * (b + 1));
  if (ta < 0 || tb < 0) return {0, source, 0};
  const std::size_t target = static_cast<std::size_t>((ta + 1) * (tb + 1));
  std::vector<std::vector<Rational>> rows(source, std::vector<Rational>(target, 0));
  auto tindex = [&](int i, int j) { return static_cast<std::size_t>(i * (tb + 1) + j); };
  for (int i = 0; i <= a; ++i)
    for (int j = 0; j <= b; ++j) {
      auto& r = rows[static_cast<std::size_t>(i * (b + 1) + j)];
      if (left_donor) {
        if (i > 0) r[tindex(i - 1, j + 1)] += i;  // y1 d/dx1
        if (a - i > 0) r[tindex(i, j)] += a - i;   // y2 d/dx2
      } else {
        if (j > 0) r[tindex(i + 1, j - 1)] += j;
        if (b - j > 0) r[tindex(i, j)] += b - j;
      }
    }
  return {rank(rows), source, target};
}

bool sl2_commute(int a, int b, int c) {
  using Mono = std::array<int, 6>;  // x1 x2 y1 y2 z1 z2
  using Poly = std::map<Mono, Rational>;
  auto apply = [](const Poly& p, int from) {
    Poly out;
    for (const auto& [m, k] : p)
      for (int v = 0; v < 2; ++v) {
        if (m[from + v] == 0) continue;
        Mono n = m;
        --n[from + v];
        ++n[2 + v];
        out[n] += k * m[from + v];
      }
    std::erase_if(out, [](const auto& e) { return e.second == 0; });
    return out;
  };
  for (int i = 0; i <= a; ++i)
    for (int j = 0; j <= b; ++j)
      for (int k = 0; k <= c; ++k) {
        Poly p{{Mono{i, a - i, j, b - j, k, c - k}, 1}};
        if (apply(apply(p, 4), 0) != apply(apply(p, 0), 4)) return false;
      }
  return true;
}

}  // namespace oracle
