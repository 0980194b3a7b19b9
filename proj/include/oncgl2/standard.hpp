#pragma once

// The named comodules M, nabla, Delta, L, the symmetric powers S^y V and their
// twisted duals T^y V, the nabla-filtration multiset of M, and the layer
// decomposition of the length filtration of the algebra.

#include "oncgl2/comod.hpp"
#include "oncgl2/lambda.hpp"
#include "oncgl2/ncalg.hpp"

#include <string_view>
#include <utility>
#include <vector>

namespace oncgl2 {

Comodule build_V();
/// One-dimensional, coaction D^k.
Comodule build_R(int k);
/// Symmetric power, basis e1^{y-m} e2^m for m = 0..y.
Comodule build_SymV(int y);
/// The same module computed as V^{(x) y} modulo all transposition differences.
Comodule build_SymV_quotient(int y);
/// Right dual of S^y V, tensored with R.
Comodule build_TV(int y);

Comodule build_M(const LambdaWord& lambda);
Comodule build_nabla(const LambdaWord& lambda);
Comodule build_delta(const LambdaWord& lambda);

std::size_t nabla_dimension(const LambdaWord& lambda);
Character nabla_character(const LambdaWord& lambda);

/// Index of the unique weight-wt(lambda) basis vector of build_nabla / build_delta.
std::size_t nabla_highest_index(const LambdaWord& lambda);
std::size_t delta_highest_index(const LambdaWord& lambda);

/// The monomial D^{x1} b^{p1} d^{q1} ... of basis vector `index` of build_nabla.
Word nabla_regular_word(const LambdaWord& lambda, std::size_t index);
/// Whether the coaction of build_nabla agrees with the coproduct on those monomials.
Verdict check_nabla_regular(const LambdaWord& lambda);

/// Spanning map Delta(lambda) -> nabla(lambda), normalized to 1 on highest weights.
/// Throws if the Hom space is not one dimensional.
ComoduleMap canonical_map(const LambdaWord& lambda);
/// Image of canonical_map; throws if it differs from the subcomodule generated
/// by the highest-weight vector of nabla(lambda).
Subcomodule build_L(const LambdaWord& lambda);

/// Sorted multiset of the sections of the nabla-filtration of M(lambda).
std::vector<LambdaWord> nabla_multiset(const LambdaWord& lambda);

/// Words of length n in c, d, D, Di avoiding d Di c, D Di and Di D, each paired
/// with the weight word obtained by replacing c by d.
std::vector<std::pair<Word, LambdaWord>> decompose_layer(std::size_t n);

/// Symbols of the representation ring generators.
enum class RepSymbol { V, R, Rinv };
LambdaWord lambda_of_tensor_word(const std::vector<RepSymbol>& word);
std::vector<LambdaWord> repring_decompose(const std::vector<RepSymbol>& word);
Character repring_char(const std::vector<LambdaWord>& multiset);

}  // namespace oncgl2
