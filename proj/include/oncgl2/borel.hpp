#pragma once

// The Borel quotients O(B) = O/(b), O(B+) = O/(c), the torus O(T) = O/(b, c),
// the automorphism psi, semi-invariants and truncated induction.

#include "oncgl2/comod.hpp"
#include "oncgl2/lambda.hpp"
#include "oncgl2/ncalg.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace oncgl2 {

enum class Quotient { B, Bplus, T };

/// Monomial of a quotient algebra. Each quotient is a central Laurent
/// variable times a free algebra on x^{+-1} and y:
///   B:  central a, x = d, y = c;   B+: central d, x = a, y = b;   T: as B without y.
struct QMonomial {
  int central = 0;
  std::vector<std::int8_t> word;  // +1 = x, -1 = x^{-1}, 2 = y

  friend bool operator==(const QMonomial&, const QMonomial&) = default;
  friend auto operator<=>(const QMonomial&, const QMonomial&) = default;
  std::string to_string(Quotient q) const;
};

using QElement = std::map<QMonomial, Rational>;

/// The grouplike a^i d^j.
QMonomial grouplike(Quotient q, const Weight& t);
/// Image of a word (any word, not only normal ones).
QElement project(Quotient q, const Word& w);
QElement project(Quotient q, const NCElement& x);

NCElement psi(const NCElement& x);

/// Vectors v with (pi_q (x) id) rho(v) = g_t (x) v.
std::vector<Vector> semi_invariants(const Comodule& x, Quotient q, const Weight& t);

/// (id (x) pi_q) Delta(f) == f (x) g_t.
bool is_right_semi_invariant(const NCElement& f, Quotient q, const Weight& t);
/// (pi_q (x) id) Delta(f) == g_t (x) f.
bool is_left_semi_invariant(const NCElement& f, Quotient q, const Weight& t);

/// Every cyclic subcomodule of nabla(lambda) generated by a basis vector, or by
/// one of `random_vectors` pseudo-random vectors, contains the highest vector.
bool subrep_test(const LambdaWord& lambda, int random_vectors = 0);

struct InducedResult {
  std::size_t dim = 0;
  std::vector<NCElement> basis;
};

/// Right O(B)-semi-invariants of weight t inside the span of normal words of length <= n.
InducedResult induced_truncated(const Weight& t, std::size_t n);
/// Count of normal words in b, d, D, Di of length <= n and right weight t.
std::size_t induced_predicted(const Weight& t, std::size_t n);
std::vector<Word> induced_predicted_words(const Weight& t, std::size_t n);

}  // namespace oncgl2
