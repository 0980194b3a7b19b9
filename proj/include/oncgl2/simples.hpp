#pragma once

// Combinatorial description of the simple comodules L(lambda) as tensor
// products of S^e V, T^e V and powers of R, plus the sl2 raising-operator
// oracle behind the transfer maps.

#include "oncgl2/comod.hpp"
#include "oncgl2/lambda.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace oncgl2 {

struct Segments {
  int lead = 0;
  int trail = 0;
  /// Each segment is d^{z0} Di d^{z1} ... Di d^{zm}, stored as z.
  std::vector<std::vector<int>> segments;
  /// R-power between consecutive segments (never -1).
  std::vector<int> separators;
};

Segments split_segments(const LambdaWord& lambda);

struct BlockExpression {
  enum class Kind : unsigned char { S, T };
  struct Block {
    Kind kind;
    int exponent;
    friend bool operator==(const Block&, const Block&) = default;
  };

  int lead = 0;
  int trail = 0;
  std::vector<Block> blocks;
  /// R-power between blocks k and k+1: 0 is a plain tensor, -1 is R^{-1}.
  std::vector<int> connectors;

  std::size_t dim() const;
  /// "T1 * Ri * S3 * T5"; "1" when empty.
  std::string to_string() const;
  /// T^a S^b and S^b T^a need a >= b+1; across R^{-1} they need a+1 <= b.
  bool satisfies_table() const;
  Character character() const;
  Comodule assemble() const;

  friend bool operator==(const BlockExpression&, const BlockExpression&) = default;
};

/// Delta(segment) grouped into T-chains and leftover S-runs with plain connectors.
/// The S-runs are the symmetrized middles: the exponents describe the transfer
/// slots, not the dimension of Delta itself when a middle run has two or more V's.
BlockExpression delta_grouping(const std::vector<int>& z);

/// Image of the canonical map Delta(lambda) -> nabla(lambda) as a block
/// expression. seed 0 applies surjective transfers leftmost first; any other
/// seed picks among them pseudo-randomly.
BlockExpression classify(const LambdaWord& lambda, std::uint32_t seed = 0);

/// Rewrites T^{a-1} Ri S^a -> T^a S^{a-1} and S^a Ri T^{a-1} -> S^{a-1} T^a
/// wherever the inequality table still holds afterwards.
BlockExpression normalize(BlockExpression e);

struct RankFlags {
  bool injective;
  bool surjective;
  std::size_t rank;
  std::size_t source_dim;
  std::size_t target_dim;
};

enum class Donor { Left, Right };

/// E = y d/dx on S^a V (x) S^b V (left donor) or its mirror (right donor).
RankFlags sl2_rank_oracle(int a, int b, Donor donor);
/// The predicted flags: the donor exponent p and receiver q give injective iff
/// p >= q+1 and surjective iff p <= q+1.
RankFlags sl2_predicted(int a, int b, Donor donor);
/// E1 = y d/dx and E2 = y d/dz commute on S^a (x) S^b (x) S^c.
bool sl2_commute(int a, int b, int c);

/// classify agrees with build_L in dimension and character.
Verdict crosscheck(const LambdaWord& lambda);

}  // namespace oncgl2
