#include "oracles.hpp"

#include "oncgl2/parse.hpp"
#include "oncgl2/standard.hpp"

#include <doctest.h>

#include <algorithm>

using namespace oncgl2;

namespace {

LambdaWord L(const char* text) { return parse_lambda(text); }

std::vector<LambdaWord> sorted(std::vector<LambdaWord> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Column span of m as row vectors.
std::vector<Vector> span_of(const Matrix& m) {
  std::vector<Vector> out;
  for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m.column(c));
  return out;
}

std::vector<Vector> joined(std::initializer_list<std::vector<Vector>> parts) {
  std::vector<Vector> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// Coordinates of vectors against an RREF basis, read off at the pivots.
std::vector<Vector> coordinates(const std::vector<Vector>& rref, const std::vector<Vector>& vectors) {
  std::vector<std::size_t> pivots;
  for (const auto& r : rref) pivots.push_back(static_cast<std::size_t>(std::find_if(r.begin(), r.end(), [](const Rational& x) { return x != 0; }) - r.begin()));
  std::vector<Vector> out;
  for (const auto& v : vectors) {
    Vector c;
    for (auto p : pivots) c.push_back(v[p]);
    out.push_back(c);
  }
  return out;
}

// The section span(bigger) / span(smaller) of x.
Comodule section(const Comodule& x, const std::vector<Vector>& smaller, const std::vector<Vector>& bigger) {
  const Subcomodule big = restrict_to(x, bigger);
  if (smaller.empty()) return big.module;
  return quotient(big.module, coordinates(big.basis, restrict_to(x, smaller).basis));
}

}  // namespace

TEST_CASE("symmetric powers") {
  CHECK(build_SymV(3).dim() == 4);
  for (int y = 0; y <= 4; ++y) {
    CHECK(verify_comodule(build_SymV(y)));
    CHECK(build_SymV(y).coaction() == build_SymV_quotient(y).coaction());
    const Character t = weight_decomposition(build_TV(y));
    CHECK(t == character_product(weight_decomposition(build_SymV(y)), weight_decomposition(build_R(1 - y))));
  }
  CHECK(find_isomorphism(build_TV(0), build_R(1)).has_value());
  CHECK(find_isomorphism(build_TV(1), build_V()).has_value());
  CHECK(find_isomorphism(build_SymV(1), build_V()).has_value());
}

TEST_CASE("tensor words M") {
  CHECK(build_M(L("d^2")).dim() == 4);
  CHECK(build_M(L("d.Di.d")).dim() == 4);
  CHECK(build_M(L("d.Di.d")).coaction() == tensor({build_V(), build_R(-1), build_V()}).coaction());
  const auto small = enumerate_lambda(2);
  for (const auto& x : small)
    for (const auto& y : small)
      CHECK(build_M(x * y).coaction() == tensor(build_M(x), build_M(y)).coaction());
}

TEST_CASE("costandard modules") {
  CHECK(build_nabla(L("d^4")).dim() == 5);
  CHECK(build_nabla(L("d.D.d")).dim() == 4);
  for (const auto& l : enumerate_lambda(4)) {
    const Comodule x = build_nabla(l);
    CHECK(x.dim() == oracle::dim_nabla(l));
    CHECK(nabla_dimension(l) == oracle::dim_nabla(l));
    CHECK(verify_comodule(x));
    CHECK(check_nabla_regular(l));
    CHECK(weight_decomposition(x) == oracle::char_nabla(l));
  }
  CHECK(nabla_regular_word(L("d"), 0).to_string() == "b");
  CHECK(nabla_regular_word(L("d"), 1).to_string() == "d");
}

TEST_CASE("standard modules") {
  const Comodule dd = build_delta(L("D"));
  REQUIRE(dd.dim() == 1);
  CHECK(dd.entry(0, 0) == NCElement::generator(Letter::Delta));
  CHECK(find_isomorphism(build_delta(L("d")), build_V()).has_value());
  CHECK(find_isomorphism(build_delta(L("d.Di.d^2")), tensor(build_TV(2), build_V())).has_value());
  for (const auto& l : enumerate_lambda(4)) {
    const Comodule x = build_delta(l);
    CHECK(verify_comodule(x));
    CHECK(x.dim() == nabla_dimension(star_inv(l)));
    const auto e = highest_lowest_weight(x);
    CHECK(e.highest == wt(l));
    CHECK(e.highest_multiplicity == 1);
    CHECK(e.lowest_multiplicity == 1);
  }
}

TEST_CASE("canonical maps and simples") {
  for (int y = 0; y <= 4; ++y) CHECK(build_L(LambdaWord::d(y)).basis.size() == static_cast<std::size_t>(y + 1));
  CHECK(build_L(L("d.Di.d^2")).basis.size() == 6);
  for (const auto& l : enumerate_lambda(3)) {
    const Matrix f = canonical_map(l);
    CHECK(f(nabla_highest_index(l), delta_highest_index(l)) == 1);
    CHECK(verify_map(build_delta(l), build_nabla(l), f));
  }
}

TEST_CASE("nabla filtration multisets") {
  CHECK(sorted(nabla_multiset(L("d^4"))) == sorted({L("D^2"), L("d^2.D"), L("d.D.d"), L("D.d^2"), L("d^4")}));
  CHECK(sorted(nabla_multiset(L("d^2.Di.d"))) == sorted({L("d"), L("d^2.Di.d")}));
  for (const auto& l : enumerate_lambda(5)) {
    std::size_t total = 0;
    for (const auto& mu : nabla_multiset(l)) {
      total += oracle::dim_nabla(mu);
      if (mu != l) CHECK(le1(mu, l));
    }
    CHECK(total == std::size_t{1} << l.d_count());
  }
}

TEST_CASE("explicit filtration of M(d^4)") {
  const Comodule m = build_M(L("d^4"));
  Matrix omega(4, 1);  // R inside V V
  omega(1, 0) = 1;
  omega(2, 0) = -1;
  const Matrix i2 = Matrix::identity(2), i4 = Matrix::identity(4);
  const auto a = span_of(kronecker(omega, omega));
  const auto b = span_of(kronecker(i4, omega));
  const auto c = span_of(kronecker(kronecker(i2, omega), i2));
  const auto d = span_of(kronecker(omega, i4));
  const auto all = span_of(Matrix::identity(16));
  const std::vector<std::vector<Vector>> chain{{}, a, b, joined({b, c}), joined({b, c, d}), all};
  const char* sections[] = {"D^2", "d^2.D", "d.D.d", "D.d^2", "d^4"};
  for (std::size_t k = 0; k < 5; ++k) {
    const Comodule s = section(m, chain[k], chain[k + 1]);
    CHECK(find_isomorphism(s, build_nabla(L(sections[k]))).has_value());
  }
}

TEST_CASE("explicit filtration of M(d^2 Di d)") {
  const Comodule m = build_M(L("d^2.Di.d"));
  const auto maps = hom_space(build_V(), m);
  REQUIRE(maps.size() == 1);
  const auto v = span_of(maps[0]);
  const Comodule s = section(m, v, span_of(Matrix::identity(8)));
  CHECK(find_isomorphism(section(m, {}, v), build_V()).has_value());
  CHECK(find_isomorphism(s, build_nabla(L("d^2.Di.d"))).has_value());
}

TEST_CASE("layer decomposition") {
  const auto one = decompose_layer(1);
  CHECK(one.size() == 4);
  std::size_t dims = 0;
  for (const auto& [g, t] : one) dims += nabla_dimension(t);
  CHECK(dims == 6);
  CHECK(decompose_layer(2).size() == 14);
  for (const auto& [g, t] : decompose_layer(2))
    if (g == Word{Letter::C, Letter::D}) CHECK(t == L("d^2"));
  for (std::size_t n = 1; n <= 5; ++n) {
    std::size_t total = 0;
    for (const auto& [g, t] : decompose_layer(n)) total += nabla_dimension(t);
    CHECK(total == oracle::layer_prediction(n));
    CHECK(total == enumerate_basis_layer(n).size());
  }
}

TEST_CASE("representation ring") {
  using S = RepSymbol;
  CHECK(sorted(repring_decompose({S::V, S::V})) == sorted({L("d^2"), L("D")}));
  CHECK(lambda_of_tensor_word({S::V, S::Rinv, S::V}) == L("d.Di.d"));
  for (const auto& l : enumerate_lambda(5)) CHECK(repring_char(nabla_multiset(l)) == oracle::char_M(l));
  const auto small = enumerate_lambda(2);
  for (const auto& x : small)
    for (const auto& y : small)
      CHECK(repring_char(nabla_multiset(x * y)) ==
            character_product(repring_char(nabla_multiset(x)), repring_char(nabla_multiset(y))));
}
