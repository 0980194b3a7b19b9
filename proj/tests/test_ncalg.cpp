#include "oracles.hpp"

#include "oncgl2/ncalg.hpp"
#include "oncgl2/parse.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace oncgl2;

namespace {

NCElement E(const char* text) { return parse_expression(text); }
NCElement gen(Letter l) { return NCElement::generator(l); }

TensorElement tensor2(const char* x, const char* y) { return TensorElement::pure({E(x), E(y)}); }

}  // namespace

TEST_CASE("generator indices") {
  CHECK(row_index(Letter::A) == 1);
  CHECK(row_index(Letter::B) == 1);
  CHECK(row_index(Letter::C) == 2);
  CHECK(col_index(Letter::C) == 1);
  CHECK(col_index(Letter::D) == 2);
  CHECK_FALSE(is_matrix_letter(Letter::Delta));
  CHECK(row_index(Letter::DeltaInv) == 0);
}

TEST_CASE("word order is degree lexicographic") {
  const Word da{Letter::D, Letter::A}, ad{Letter::A, Letter::D}, b{Letter::B};
  CHECK(ad < da);
  CHECK(b < ad);
  CHECK(Word{Letter::DeltaInv} < Word{Letter::Delta});
  CHECK(Word{} < Word{Letter::DeltaInv});
}

TEST_CASE("each rule lowers the word") {
  for (const auto& rule : rewrite_rules())
    for (const auto& [w, c] : rule.rhs) CHECK(w < rule.lhs);
  CHECK(rewrite_rules().size() == 10);
}

TEST_CASE("single rewrites") {
  CHECK(E("d*a") == E("b*c") + E("D"));
  CHECK(E("D*Di") == NCElement(1));
  CHECK(E("Di*D") == NCElement(1));
  CHECK(E("d*Di*a") == E("c*Di*b") + NCElement(1));
  CHECK(E("c*b") == E("a*d") - E("D"));
  CHECK(E("b*Di*c") == E("a*Di*d") - NCElement(1));
}

TEST_CASE("longer reductions") {
  CHECK(E("b*Di*c*a") == E("a*Di*b*c"));
  CHECK(E("c*b*Di*a") == E("a*c*Di*b"));
  CHECK(E("D*Di*D") == E("D"));
  CHECK(E("d*a - b*c") == E("D"));
  CHECK(E("a*d - c*b") == E("D"));
}

TEST_CASE("normal form is idempotent and associative") {
  std::mt19937 rng(3);
  const auto basis = enumerate_basis(3);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  for (int k = 0; k < 200; ++k) {
    const NCElement x = NCElement::word(basis[pick(rng)]);
    const NCElement y = NCElement::word(basis[pick(rng)]);
    const NCElement z = NCElement::word(basis[pick(rng)]);
    CHECK((x * y) * z == x * (y * z));
    NCElement::Terms raw((x * y).terms());
    CHECK(NCElement::reduce(raw) == x * y);
  }
}

TEST_CASE("printing") {
  CHECK(E("b*Di*c").to_string() == "a*Di*d - 1");
  CHECK(E("b*Di*c").to_string(PrintStyle::Pretty) == "a Di d - 1");
  CHECK(E("D*D*a").to_string() == "D^2*a");
  CHECK(NCElement(0).to_string() == "0");
  CHECK(NCElement(1).to_string() == "1");
  CHECK(E("1/2*b - 3").to_string() == "1/2*b - 3");
}

TEST_CASE("confluence report") {
  const ConfluenceReport r = check_confluence();
  CHECK(r.pass());
  CHECK(r.unresolved() == 0);
  bool saw_cbdia = false, saw_ddid = false;
  for (const auto& a : r.ambiguities) {
    if (a.overlap == Word{Letter::C, Letter::B, Letter::DeltaInv, Letter::A}) {
      saw_cbdia = true;
      CHECK(a.via_first == E("a*c*Di*b"));
    }
    if (a.overlap == Word{Letter::Delta, Letter::DeltaInv, Letter::Delta}) {
      saw_ddid = true;
      CHECK(a.via_first == E("D"));
    }
  }
  CHECK(saw_cbdia);
  CHECK(saw_ddid);
}

TEST_CASE("basis enumeration") {
  CHECK(enumerate_basis(0).size() == 1);
  CHECK(enumerate_basis(1).size() == 7);
  CHECK(enumerate_basis(2).size() == 37);
  for (std::size_t n = 0; n <= 5; ++n) {
    auto lib = enumerate_basis_layer(n);
    auto ref = oracle::pattern_words(n);
    CHECK(std::set<Word>(lib.begin(), lib.end()) == std::set<Word>(ref.begin(), ref.end()));
  }
  const auto b = enumerate_basis(3);
  for (std::size_t i = 1; i < b.size(); ++i) CHECK(b[i - 1] < b[i]);
}

TEST_CASE("coproduct on generators") {
  CHECK(coproduct(gen(Letter::A)) == tensor2("a", "a") + tensor2("b", "c"));
  CHECK(coproduct(gen(Letter::B)) == tensor2("a", "b") + tensor2("b", "d"));
  CHECK(coproduct(gen(Letter::C)) == tensor2("c", "a") + tensor2("d", "c"));
  CHECK(coproduct(gen(Letter::D)) == tensor2("c", "b") + tensor2("d", "d"));
  CHECK(coproduct(gen(Letter::Delta)) == tensor2("D", "D"));
  CHECK(coproduct(NCElement(1)) == tensor2("1", "1"));
}

TEST_CASE("coproduct and counit are multiplicative") {
  const auto basis = enumerate_basis(2);
  for (const auto& u : basis)
    for (const auto& v : basis) {
      const NCElement x = NCElement::word(u), y = NCElement::word(v);
      CHECK(coproduct(x * y) == coproduct(x) * coproduct(y));
      CHECK(counit(x * y) == counit(x) * counit(y));
    }
}

TEST_CASE("counit values") {
  CHECK(counit(E("a*d")) == 1);
  CHECK(counit(E("b")) == 0);
  CHECK(counit(E("Di")) == 1);
  CHECK(counit(E("3*a - c")) == 3);
}

TEST_CASE("antipode") {
  CHECK(antipode(gen(Letter::A)) == E("Di*d"));
  CHECK(antipode(gen(Letter::B)) == -E("Di*b"));
  CHECK(antipode(gen(Letter::C)) == -E("Di*c"));
  CHECK(antipode(gen(Letter::D)) == E("Di*a"));
  CHECK(antipode(gen(Letter::Delta)) == E("Di"));
  CHECK(antipode(antipode(gen(Letter::A))) != gen(Letter::A));
  for (const auto& w : enumerate_basis(3)) {
    const NCElement x = NCElement::word(w);
    CHECK(antipode(antipode_inverse(x)) == x);
    CHECK(antipode_inverse(antipode(x)) == x);
  }
}

TEST_CASE("antipode is an anti-homomorphism") {
  const auto basis = enumerate_basis(2);
  for (const auto& u : basis)
    for (const auto& v : basis) {
      const NCElement x = NCElement::word(u), y = NCElement::word(v);
      CHECK(antipode(x * y) == antipode(y) * antipode(x));
    }
}

TEST_CASE("grouplikes of length at most two") {
  std::set<std::string> found;
  for (const auto& w : enumerate_basis(2)) {
    const NCElement g = NCElement::word(w);
    if (coproduct(g) == TensorElement::pure({g, g})) found.insert(g.to_string());
  }
  CHECK(found == std::set<std::string>{"1", "D", "Di", "D^2", "Di^2"});
}

TEST_CASE("power") {
  CHECK(power(E("a"), 0) == NCElement(1));
  CHECK(power(E("D"), 3) == E("D*D*D"));
  CHECK(power(E("a + b"), 2) == E("a*a + a*b + b*a + b*b"));
}
