#include "oncgl2/checks.hpp"

#include "oncgl2/borel.hpp"
#include "oncgl2/comod.hpp"
#include "oncgl2/lambda.hpp"
#include "oncgl2/ncalg.hpp"
#include "oncgl2/simples.hpp"
#include "oncgl2/standard.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

namespace oncgl2 {

namespace {

using Suite = std::function<void(CheckResult&, std::size_t)>;

void expect(CheckResult& r, bool ok, const std::string& what) {
  ++r.cases;
  if (!ok) {
    r.pass = false;
    if (r.failures.size() < 20) r.failures.push_back(what);
  }
}

std::vector<Word> all_words(std::size_t n) {
  std::vector<Word> layer{Word{}};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (Letter l : kLetters) {
        Word e = w;
        e.push_back(l);
        next.push_back(std::move(e));
      }
    layer = std::move(next);
  }
  return layer;
}

TensorElement psi_tensor(const TensorElement& t) {
  TensorElement out(t.arity());
  for (const auto& [k, c] : t.terms()) {
    std::vector<NCElement> legs;
    for (const auto& w : k) legs.push_back(psi(NCElement::word(w)));
    TensorElement p = TensorElement::pure(legs);
    for (const auto& [pk, pc] : p.terms()) out.add_term(pk, c * pc);
  }
  return out;
}

Character m_character(const LambdaWord& lambda) {
  Character c{{Weight{}, 1}};
  for (const auto& b : lambda.blocks()) {
    if (b.kind == LambdaWord::Kind::Delta) {
      c = character_product(c, {{Weight{b.exponent, b.exponent}, 1}});
    } else {
      for (int k = 0; k < b.exponent; ++k) c = character_product(c, {{Weight{1, 0}, 1}, {Weight{0, 1}, 1}});
    }
  }
  return c;
}

LambdaWord lw(const std::vector<LambdaWord::Block>& b) { return LambdaWord::from_blocks(b); }

constexpr auto D = LambdaWord::Kind::D;
constexpr auto Dl = LambdaWord::Kind::Delta;

void suite_confluence(CheckResult& r, std::size_t n) {
  auto report = check_confluence();
  for (const auto& a : report.ambiguities)
    expect(r, a.resolved(),
           "ambiguity " + a.overlap.to_string() + ": " + a.via_first.to_string() + " vs " + a.via_second.to_string());
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<Word> filtered;
    for (auto& w : all_words(k))
      if (is_normal(w)) filtered.push_back(std::move(w));
    expect(r, filtered == enumerate_basis_layer(k), "normal words of length " + std::to_string(k));
  }
}

void suite_hopf(CheckResult& r, std::size_t n) {
  const auto basis = enumerate_basis(n);
  for (const auto& w : basis) {
    const NCElement x = NCElement::word(w);
    const std::string name = w.to_string();
    const TensorElement d = coproduct(x);
    expect(r, coproduct_at(d, 0) == coproduct_at(d, 1), "coassociativity at " + name);
    expect(r, counit_at(d, 0) == as_tensor(x), "left counit at " + name);
    expect(r, counit_at(d, 1) == as_tensor(x), "right counit at " + name);
    const NCElement eps(counit(x));
    expect(r, multiply_out(antipode_at(d, 0)) == eps, "left antipode at " + name);
    expect(r, multiply_out(antipode_at(d, 1)) == eps, "right antipode at " + name);
    expect(r, antipode(antipode_inverse(x)) == x && antipode_inverse(antipode(x)) == x,
           "antipode inverse at " + name);
    expect(r, psi(psi(x)) == x, "psi involution at " + name);
    expect(r, coproduct(psi(x)) == psi_tensor(d), "psi coalgebra map at " + name);
  }
  const auto small = enumerate_basis(std::min<std::size_t>(n, 2));
  for (const auto& u : small)
    for (const auto& v : small) {
      const NCElement x = NCElement::word(u), y = NCElement::word(v);
      expect(r, coproduct(x * y) == coproduct(x) * coproduct(y),
             "coproduct multiplicative at " + u.to_string() + "," + v.to_string());
      expect(r, counit(x * y) == counit(x) * counit(y), "counit multiplicative");
    }
  const NCElement a = NCElement::generator(Letter::A);
  expect(r, antipode(antipode(a)) != a, "S^2(a) differs from a");
}

void suite_layers(CheckResult& r, std::size_t n) {
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t layer = enumerate_basis_layer(k).size();
    std::size_t predicted = 0;
    for (const auto& [g, t] : decompose_layer(k)) predicted += nabla_dimension(t);
    expect(r, layer == predicted,
           "layer " + std::to_string(k) + ": " + std::to_string(layer) + " vs " + std::to_string(predicted));
  }
}

void suite_filtration(CheckResult& r, std::size_t n) {
  const std::vector<LambdaWord> d4 = {lw({{Dl, 2}}), lw({{D, 2}, {Dl, 1}}), lw({{D, 1}, {Dl, 1}, {D, 1}}),
                                      lw({{Dl, 1}, {D, 2}}), lw({{D, 4}})};
  auto ms = nabla_multiset(LambdaWord::d(4));
  expect(r, std::is_permutation(ms.begin(), ms.end(), d4.begin(), d4.end()), "multiset of d^4");
  const LambdaWord ex = lw({{D, 2}, {Dl, -1}, {D, 1}});
  auto ms2 = nabla_multiset(ex);
  expect(r, ms2.size() == 2 && std::count(ms2.begin(), ms2.end(), LambdaWord::d()) == 1 &&
                std::count(ms2.begin(), ms2.end(), ex) == 1,
         "multiset of d^2.Di.d");
  for (const auto& lambda : enumerate_lambda(n)) {
    const auto m = nabla_multiset(lambda);
    const std::string name = lambda.to_string();
    std::size_t dims = 0;
    int self = 0;
    bool below = true;
    for (const auto& mu : m) {
      dims += nabla_dimension(mu);
      if (mu == lambda) ++self;
      else below = below && lt1(mu, lambda);
    }
    expect(r, dims == (std::size_t{1} << lambda.d_count()), "dimension audit at " + name);
    expect(r, self == 1, "multiplicity one at " + name);
    expect(r, below, "order audit at " + name);
    const Character cm = m_character(lambda);
    expect(r, cm == repring_char(m), "character audit at " + name);
    Character dual;
    for (const auto& mu : m) dual = character_sum(dual, character_star(nabla_character(mu)));
    expect(r, m_character(star(lambda)) == dual, "star duality audit at " + name);
  }
}

void suite_standard_hom(CheckResult& r, std::size_t n) {
  const auto lambdas = enumerate_lambda(n);
  std::vector<Comodule> deltas, nablas;
  for (const auto& l : lambdas) {
    deltas.push_back(build_delta(l));
    nablas.push_back(build_nabla(l));
  }
  for (std::size_t p = 0; p < lambdas.size(); ++p)
    for (std::size_t q = 0; q < lambdas.size(); ++q) {
      const std::size_t dim = hom_space(deltas[p], nablas[q]).size();
      expect(r, dim == (p == q ? 1U : 0U),
             "Hom(Delta(" + lambdas[p].to_string() + "), nabla(" + lambdas[q].to_string() + ")) = " +
                 std::to_string(dim));
    }
}

void suite_semi(CheckResult& r, std::size_t n) {
  for (const auto& lambda : enumerate_lambda(n)) {
    const Comodule nabla = build_nabla(lambda);
    const std::string name = lambda.to_string();
    std::size_t lines = 0;
    bool right_place = true;
    for (const auto& [t, mult] : weight_decomposition(nabla)) {
      auto s = semi_invariants(nabla, Quotient::Bplus, t);
      lines += s.size();
      if (!s.empty() && t != wt(lambda)) right_place = false;
    }
    expect(r, lines == 1 && right_place, "semi-invariant line of nabla(" + name + ")");
    auto top = semi_invariants(nabla, Quotient::Bplus, wt(lambda));
    if (top.size() == 1) {
      Vector e(nabla.dim());
      e[nabla_highest_index(lambda)] = 1;
      expect(r, linalg::same_span(top, {e}, nabla.dim()), "semi-invariant is the highest vector of " + name);
    }
    expect(r, subrep_test(lambda, 5), "subcomodules of nabla(" + name + ") contain the highest vector");
  }
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> letter(0, 5), len(0, 4);
  for (int k = 0; k < 1000; ++k) {
    std::vector<Letter> ls;
    for (int i = len(rng); i > 0; --i) ls.push_back(kLetters[static_cast<std::size_t>(letter(rng))]);
    const Word w(ls);
    const NCElement x = NCElement::word(w);
    for (Quotient q : {Quotient::B, Quotient::Bplus, Quotient::T})
      expect(r, project(q, w) == project(q, x), "quotient compatibility at " + w.to_string());
  }
}

void suite_induced(CheckResult& r, std::size_t n) {
  for (int i = -2; i <= 2; ++i)
    for (int j = -2; j <= 2; ++j) {
      const Weight t{i, j};
      for (std::size_t k = 1; k <= n; ++k) {
        auto got = induced_truncated(t, k);
        const std::size_t predicted = induced_predicted(t, k);
        expect(r, got.dim == predicted,
               "induction at " + t.to_string() + ", length " + std::to_string(k) + ": " + std::to_string(got.dim) +
                   " vs " + std::to_string(predicted));
        if (!t.dominant()) expect(r, got.dim == 0, "non-dominant weight " + t.to_string());
        for (const auto& f : got.basis) {
          expect(r, is_right_semi_invariant(f, Quotient::B, t), "semi-invariance of basis at " + t.to_string());
          expect(r, is_left_semi_invariant(psi(antipode(f)), Quotient::Bplus, weight_star(t)),
                 "psi S transport at " + t.to_string());
        }
      }
    }
}

void suite_simples(CheckResult& r, std::size_t n) {
  for (const auto& lambda : enumerate_lambda(n)) {
    auto v = crosscheck(lambda);
    expect(r, v.ok, v.message);
    const BlockExpression e = classify(lambda);
    expect(r, e.satisfies_table(), "inequality table at " + lambda.to_string());
    for (std::uint32_t seed = 1; seed <= 3; ++seed)
      expect(r, normalize(classify(lambda, seed)) == e, "order independence at " + lambda.to_string());
  }
  struct Example {
    LambdaWord lambda;
    const char* expression;
    std::size_t dim;
  };
  std::vector<LambdaWord::Block> big{{D, 1}, {Dl, -1}, {D, 4}};
  for (int k = 0; k < 4; ++k) {
    big.push_back({Dl, -1});
    big.push_back({D, 1});
  }
  const Example examples[] = {
      {lw({{D, 1}, {Dl, -1}, {D, 2}}), "T2 * S1", 6},
      {lw({{D, 1}, {Dl, -1}, {D, 1}, {Dl, -1}, {D, 3}}), "T3 * S2", 12},
      {lw(big), "T1 * Ri * S3 * T5", 48},
  };
  for (const auto& ex : examples) {
    const BlockExpression e = classify(ex.lambda);
    expect(r, e.to_string() == ex.expression && e.dim() == ex.dim,
           "example " + ex.lambda.to_string() + " gives " + e.to_string());
    expect(r, build_L(ex.lambda).basis.size() == ex.dim, "rank at example " + ex.lambda.to_string());
  }
  for (const auto& lambda : enumerate_lambda(std::min<std::size_t>(n, 3))) {
    const Comodule dual = right_dual(build_L(lambda).module);
    const Comodule other = build_L(star(lambda)).module;
    expect(r, find_isomorphism(dual, other).has_value(), "L* vs L(star) at " + lambda.to_string());
  }
}

void suite_sl2(CheckResult& r, std::size_t n) {
  const int top = static_cast<int>(n);
  for (int a = 0; a <= top; ++a)
    for (int b = 0; b <= top; ++b)
      for (Donor donor : {Donor::Left, Donor::Right}) {
        const RankFlags got = sl2_rank_oracle(a, b, donor);
        const RankFlags want = sl2_predicted(a, b, donor);
        expect(r, got.injective == want.injective && got.surjective == want.surjective,
               "sl2 flags at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int c = 0; c <= 4; ++c)
        expect(r, sl2_commute(a, b, c),
               "commutation at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
}

void suite_poset(CheckResult& r, std::size_t n) {
  const auto lambdas = enumerate_lambda(n);
  std::map<LambdaWord, std::set<LambdaWord>> below;
  auto pb = [&below](const LambdaWord& l) -> const std::set<LambdaWord>& {
    auto it = below.find(l);
    if (it == below.end()) it = below.emplace(l, pi_below(l)).first;
    return it->second;
  };
  auto le = [&pb](const LambdaWord& mu, const LambdaWord& l) { return mu == l || pb(l).count(mu) > 0; };
  const auto contexts = enumerate_lambda(1);
  for (const auto& l : lambdas) {
    auto set = pb(l);
    for (const auto& mu : set) expect(r, mu.letter_length() < l.letter_length(), "length decrease below " + l.to_string());
    set.insert(l);
    expect(r, is_saturated(set), "saturation below " + l.to_string());
    for (const auto& mu : lambdas) {
      const bool base = le(mu, l);
      expect(r, base == le(star(mu), star(l)), "star invariance at " + mu.to_string() + " / " + l.to_string());
      if (base && mu != l)
        for (const auto& alpha : contexts)
          for (const auto& beta : contexts)
            expect(r, le(alpha * mu * beta, alpha * l * beta),
                   "two-sided invariance at " + mu.to_string() + " / " + l.to_string());
    }
  }
  const auto small = enumerate_lambda(std::min<std::size_t>(n, 3));
  std::vector<Comodule> nablas;
  for (const auto& l : small) nablas.push_back(build_nabla(l));
  for (std::size_t p = 0; p < small.size(); ++p)
    for (std::size_t q = 0; q < small.size(); ++q)
      if (!hom_space(nablas[p], nablas[q]).empty())
        expect(r, le(small[q], small[p]),
               "Hom(nabla(" + small[p].to_string() + "), nabla(" + small[q].to_string() + ")) is nonzero");
}

const std::map<std::string, std::pair<Suite, std::size_t>>& suites() {
  static const std::map<std::string, std::pair<Suite, std::size_t>> table = {
      {"confluence", {suite_confluence, 6}}, {"hopf", {suite_hopf, 3}},
      {"layers", {suite_layers, 6}},         {"filtration", {suite_filtration, 5}},
      {"standard-hom", {suite_standard_hom, 3}}, {"semi", {suite_semi, 4}},
      {"induced", {suite_induced, 3}},       {"simples", {suite_simples, 5}},
      {"sl2", {suite_sl2, 8}},               {"poset", {suite_poset, 4}},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& check_suite_names() {
  static const std::vector<std::string> names = {"confluence", "hopf",    "layers",  "filtration", "standard-hom",
                                                 "semi",       "induced", "simples", "sl2",        "poset"};
  return names;
}

std::size_t default_bound(const std::string& suite) {
  auto it = suites().find(suite);
  if (it == suites().end()) throw std::invalid_argument("unknown check suite: " + suite);
  return it->second.second;
}

CheckResult run_check(const std::string& suite, std::optional<std::size_t> bound) {
  auto it = suites().find(suite);
  if (it == suites().end()) throw std::invalid_argument("unknown check suite: " + suite);
  CheckResult r;
  r.name = suite;
  r.bound = bound.value_or(it->second.second);
  const auto start = std::chrono::steady_clock::now();
  try {
    it->second.first(r, r.bound);
  } catch (const std::exception& e) {
    r.pass = false;
    r.failures.push_back(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace oncgl2
