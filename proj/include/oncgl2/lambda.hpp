#pragma once

// The weight monoid: reduced words in d and D^{+-1}, torus weights, the duality
// (-)* and its inverse, and the two partial orders.

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace oncgl2 {

/// Torus character a^i d^j. Ordered by j first, then i.
struct Weight {
  int i = 0;
  int j = 0;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend std::strong_ordering operator<=>(const Weight& lhs, const Weight& rhs) {
    if (auto c = lhs.j <=> rhs.j; c != 0) return c;
    return lhs.i <=> rhs.i;
  }
  Weight operator*(const Weight& rhs) const { return {i + rhs.i, j + rhs.j}; }

  bool dominant() const { return j >= i; }
  /// "1", "a", "d^2", "a^-1*d^2", ...
  std::string to_string() const;
};

Weight weight_star(const Weight& t);
Weight weight_sigma(const Weight& t);

/// Reduced word D^{x1} d^{y1} ... D^{xn} d^{yn}.
class LambdaWord {
 public:
  enum class Kind : unsigned char { Delta, D };
  struct Block {
    Kind kind;
    int exponent;
    friend bool operator==(const Block&, const Block&) = default;
    friend auto operator<=>(const Block&, const Block&) = default;
  };

  LambdaWord() = default;
  /// Merges adjacent blocks of the same kind and drops zero exponents.
  /// Throws on negative d exponents.
  static LambdaWord from_blocks(const std::vector<Block>& blocks);
  static LambdaWord delta(int x);
  static LambdaWord d(int y = 1);

  const std::vector<Block>& blocks() const { return blocks_; }
  bool empty() const { return blocks_.empty(); }
  std::size_t letter_length() const;
  /// Sum of the d exponents.
  int d_count() const;

  friend LambdaWord operator*(const LambdaWord& lhs, const LambdaWord& rhs);
  friend bool operator==(const LambdaWord&, const LambdaWord&) = default;
  /// By letter length, then lexicographically on the block sequence.
  friend std::strong_ordering operator<=>(const LambdaWord& lhs, const LambdaWord& rhs);

  /// Dot-separated text: "d.Di.d^2", "D^3", "1".
  std::string to_string() const;

 private:
  std::vector<Block> blocks_;
};

Weight wt(const LambdaWord& lambda);
LambdaWord star(const LambdaWord& lambda);
LambdaWord star_inv(const LambdaWord& lambda);

/// Strict comparison by weight; equal-weight distinct words are incomparable.
bool lt2(const LambdaWord& mu, const LambdaWord& lambda);
bool le2(const LambdaWord& mu, const LambdaWord& lambda);

/// One downward step: delete a factor d Di d, or replace a factor d d by D.
std::set<LambdaWord> covers_down(const LambdaWord& lambda);
bool lt1(const LambdaWord& mu, const LambdaWord& lambda);
bool le1(const LambdaWord& mu, const LambdaWord& lambda);
/// Everything strictly below lambda in the first order.
std::set<LambdaWord> pi_below(const LambdaWord& lambda);
bool is_saturated(const std::set<LambdaWord>& set);

/// All reduced words of letter length <= n, sorted.
std::vector<LambdaWord> enumerate_lambda(std::size_t n);

}  // namespace oncgl2
