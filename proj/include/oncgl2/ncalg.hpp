#pragma once

// Exact arithmetic in the noncommutative coordinate ring O_nc(GL2):
// six generators a, b, c, d, D (delta), Di (delta inverse), a terminating and
// confluent rewriting system, and the Hopf structure maps.

#include "oncgl2/rational.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oncgl2 {

/// Generators, numbered in the monomial order Di < D < a < b < c < d.
enum class Letter : std::uint8_t { DeltaInv = 0, Delta = 1, A = 2, B = 3, C = 4, D = 5 };

inline constexpr std::array<Letter, 6> kLetters{Letter::DeltaInv, Letter::Delta, Letter::A,
                                                Letter::B,        Letter::C,     Letter::D};

/// Row index of the matrix entry (1 for a, b; 2 for c, d; 0 for the determinant powers).
int row_index(Letter l);
/// Column index (1 for a, c; 2 for b, d; 0 for the determinant powers).
int col_index(Letter l);
bool is_matrix_letter(Letter l);
std::string_view symbol(Letter l);

/// Finite sequence of generators, ordered degree-lexicographically.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  const std::vector<Letter>& letters() const { return letters_; }

  Word subword(std::size_t pos, std::size_t len) const;
  void push_back(Letter l) { letters_.push_back(l); }

  friend Word operator*(const Word& lhs, const Word& rhs);
  friend bool operator==(const Word& lhs, const Word& rhs) = default;
  friend std::strong_ordering operator<=>(const Word& lhs, const Word& rhs);

  /// Letters joined by separator with runs of D / Di collapsed to powers; "1" if empty.
  std::string to_string(std::string_view separator = "*") const;

 private:
  std::vector<Letter> letters_;
};

/// Left-hand side + right-hand side of an oriented relation lhs -> sum(coef * word).
struct RewriteRule {
  Word lhs;
  std::vector<std::pair<Word, Rational>> rhs;
};

/// The ten oriented relations of O_nc(GL2).
const std::vector<RewriteRule>& rewrite_rules();

struct Redex {
  std::size_t position;
  std::size_t rule;
};

/// Leftmost occurrence of any rule left-hand side, if any.
std::optional<Redex> find_redex(const Word& w);
inline bool is_normal(const Word& w) { return !find_redex(w).has_value(); }

enum class PrintStyle { Canonical, Pretty };

/// Exact rational combination of normal words.
class NCElement {
 public:
  using Terms = std::map<Word, Rational>;

  NCElement() = default;
  NCElement(int scalar);  // NOLINT(google-explicit-constructor)
  NCElement(const Rational& scalar);  // NOLINT(google-explicit-constructor)

  static NCElement generator(Letter l);
  /// Normal form of one (not necessarily normal) word.
  static NCElement word(const Word& w);
  /// Normal form of an arbitrary combination of words.
  static NCElement reduce(const Terms& raw);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Word& w) const;
  /// Length of the longest word (0 for scalars and zero).
  std::size_t degree() const;

  NCElement& operator+=(const NCElement& rhs);
  NCElement& operator-=(const NCElement& rhs);
  NCElement& operator*=(const Rational& rhs);
  NCElement operator-() const;

  friend NCElement operator+(NCElement lhs, const NCElement& rhs) { return lhs += rhs; }
  friend NCElement operator-(NCElement lhs, const NCElement& rhs) { return lhs -= rhs; }
  friend NCElement operator*(NCElement lhs, const Rational& rhs) { return lhs *= rhs; }
  friend NCElement operator*(const Rational& lhs, NCElement rhs) { return rhs *= lhs; }
  friend NCElement operator*(const NCElement& lhs, const NCElement& rhs);
  friend bool operator==(const NCElement& lhs, const NCElement& rhs) = default;

  /// Adds coef * w where w is already normal.
  void add_normal(const Word& w, const Rational& coef);

  std::string to_string(PrintStyle style = PrintStyle::Canonical) const;

 private:
  Terms terms_;
};

/// Normal form of u * v for normal words u, v.
NCElement multiply_words(const Word& u, const Word& v);
NCElement power(const NCElement& x, unsigned n);

/// One overlap or inclusion ambiguity between two rules.
struct Ambiguity {
  Word overlap;
  std::size_t first_rule;
  std::size_t second_rule;
  NCElement via_first;
  NCElement via_second;
  bool resolved() const { return via_first == via_second; }
};

struct ConfluenceReport {
  std::vector<Ambiguity> ambiguities;
  bool pass() const;
  std::size_t unresolved() const;
};

ConfluenceReport check_confluence();

/// Normal words of length <= max_length, ordered by length, then lexicographically.
std::vector<Word> enumerate_basis(std::size_t max_length);
/// Normal words of length exactly `length`.
std::vector<Word> enumerate_basis_layer(std::size_t length);

/// Element of a k-fold tensor power of the algebra, keyed by tuples of normal words.
class TensorElement {
 public:
  using Key = std::vector<Word>;
  using Terms = std::map<Key, Rational>;

  explicit TensorElement(std::size_t arity = 2) : arity_(arity) {}
  static TensorElement pure(const std::vector<NCElement>& factors);

  std::size_t arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Key& key, const Rational& coef);
  TensorElement& operator+=(const TensorElement& rhs);
  TensorElement& operator-=(const TensorElement& rhs);
  friend TensorElement operator+(TensorElement lhs, const TensorElement& rhs) { return lhs += rhs; }
  friend TensorElement operator-(TensorElement lhs, const TensorElement& rhs) { return lhs -= rhs; }
  friend TensorElement operator*(const TensorElement& lhs, const TensorElement& rhs);
  friend bool operator==(const TensorElement& lhs, const TensorElement& rhs) = default;

  std::string to_string() const;

 private:
  std::size_t arity_;
  Terms terms_;
};

TensorElement coproduct(const NCElement& x);
Rational counit(const NCElement& x);
NCElement antipode(const NCElement& x);
/// Inverse of the antipode; needed for right duals of comodules.
NCElement antipode_inverse(const NCElement& x);

/// Applies a map to one tensor factor.
TensorElement coproduct_at(const TensorElement& t, std::size_t factor);
TensorElement counit_at(const TensorElement& t, std::size_t factor);
TensorElement antipode_at(const TensorElement& t, std::size_t factor);
/// Multiplies all factors together.
NCElement multiply_out(const TensorElement& t);
/// The one-factor tensor x as an element of arity 1.
TensorElement as_tensor(const NCElement& x);

}  // namespace oncgl2
