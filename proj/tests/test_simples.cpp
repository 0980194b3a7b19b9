#include "oracles.hpp"

#include "oncgl2/parse.hpp"
#include "oncgl2/simples.hpp"
#include "oncgl2/standard.hpp"

#include <doctest.h>

using namespace oncgl2;

namespace {
LambdaWord L(const char* text) { return parse_lambda(text); }
using K = BlockExpression::Kind;
}  // namespace

TEST_CASE("segments") {
  const Segments a = split_segments(L("D^2.d^3.Di.d"));
  CHECK(a.lead == 2);
  CHECK(a.trail == 0);
  CHECK(a.segments == std::vector<std::vector<int>>{{3, 1}});
  const Segments b = split_segments(L("d^2.D^3.d"));
  CHECK(b.segments == std::vector<std::vector<int>>{{2}, {1}});
  CHECK(b.separators == std::vector<int>{3});
  const Segments c = split_segments(L("Di"));
  CHECK(c.lead == -1);
  CHECK(c.segments.empty());
}

TEST_CASE("delta grouping") {
  CHECK(delta_grouping({1, 2}).to_string() == "T2 * S1");
  CHECK(delta_grouping({1, 1, 3}).to_string() == "T3 * S2");
  CHECK(delta_grouping({1, 4, 1, 1, 1, 1}).to_string() == "T2 * S2 * T5");
  CHECK(delta_grouping({3}).to_string() == "S3");
}

TEST_CASE("worked examples") {
  const BlockExpression a = classify(L("d.Di.d^2"));
  CHECK(a.to_string() == "T2 * S1");
  CHECK(a.dim() == 6);
  const BlockExpression b = classify(L("d.Di.d.Di.d^3"));
  CHECK(b.to_string() == "T3 * S2");
  CHECK(b.dim() == 12);
  const BlockExpression c = classify(L("d.Di.d^4.Di.d.Di.d.Di.d.Di.d"));
  CHECK(c.to_string() == "T1 * Ri * S3 * T5");
  CHECK(c.dim() == 48);
  CHECK(c.satisfies_table());
}

TEST_CASE("delta powers other than -1 split the expression") {
  const LambdaWord x = L("d.Di.d^2"), y = L("d^2.Di.d");
  const BlockExpression e = classify(x * L("D^2") * y);
  CHECK(e.to_string() == classify(x).to_string() + " * R^2 * " + classify(y).to_string());
  CHECK(e.dim() == classify(x).dim() * classify(y).dim());
  CHECK(classify(L("D^3")).to_string() == "R^3");
  CHECK(classify(L("Di.d")).to_string() == "Ri * S1");
  CHECK(classify(LambdaWord{}).to_string() == "1");
}

TEST_CASE("block expressions") {
  BlockExpression e;
  e.blocks = {{K::T, 1}, {K::S, 2}};
  e.connectors = {-1};
  CHECK(e.dim() == 6);
  CHECK(e.satisfies_table());
  const BlockExpression n = normalize(e);
  CHECK(n.to_string() == "T2 * S1");
  CHECK(n.satisfies_table());
  BlockExpression bad;
  bad.blocks = {{K::T, 1}, {K::S, 1}};
  bad.connectors = {0};
  CHECK_FALSE(bad.satisfies_table());
  const Comodule m = e.assemble();
  CHECK(verify_comodule(m));
  CHECK(weight_decomposition(m) == e.character());
  CHECK(find_isomorphism(m, n.assemble()).has_value());
}

TEST_CASE("classifier agrees with the canonical map") {
  for (int y = 0; y <= 5; ++y) CHECK(crosscheck(LambdaWord::d(y)));
  for (const auto& l : enumerate_lambda(4)) {
    const Verdict v = crosscheck(l);
    CHECK_MESSAGE(v.ok, v.message);
    CHECK(classify(l).satisfies_table());
  }
}

TEST_CASE("order of surjective moves does not matter") {
  for (const auto& l : enumerate_lambda(5)) {
    const BlockExpression base = normalize(classify(l));
    for (std::uint32_t seed = 1; seed <= 3; ++seed) {
      const BlockExpression e = classify(l, seed);
      CHECK(e.dim() == base.dim());
      CHECK(normalize(e) == base);
    }
  }
}

TEST_CASE("sl2 ranks") {
  const RankFlags a = sl2_rank_oracle(2, 1, Donor::Left);
  CHECK(a.injective);
  CHECK(a.surjective);
  CHECK(a.rank == 6);
  const RankFlags b = sl2_rank_oracle(3, 2, Donor::Left);
  CHECK(b.injective);
  CHECK(b.surjective);
  CHECK(b.rank == 12);
  const RankFlags c = sl2_rank_oracle(1, 3, Donor::Left);
  CHECK_FALSE(c.injective);
  CHECK(c.surjective);
  CHECK(c.rank == 5);
  CHECK(c.source_dim == 8);
  for (int p = 0; p <= 6; ++p)
    for (int q = 0; q <= 6; ++q) {
      const auto ref = oracle::sl2_rank(p, q, false);
      const RankFlags r = sl2_rank_oracle(p, q, Donor::Right);
      CHECK(r.rank == ref.rank);
      CHECK(r.source_dim == ref.source);
      CHECK(r.target_dim == ref.target);
      const RankFlags pr = sl2_predicted(p, q, Donor::Right);
      CHECK(pr.injective == r.injective);
      CHECK(pr.surjective == r.surjective);
    }
  CHECK(sl2_commute(2, 1, 3));
  CHECK(oracle::sl2_commute(2, 1, 3));
}
