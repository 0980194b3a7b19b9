#include "oncgl2/lambda.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <stdexcept>

namespace oncgl2 {

namespace {

std::string factor(char letter, int e) {
  std::string s(1, letter);
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

}  // namespace

std::string Weight::to_string() const {
  if (i == 0 && j == 0) return "1";
  std::string out;
  if (i != 0) out += factor('a', i);
  if (j != 0) {
    if (!out.empty()) out += "*";
    out += factor('d', j);
  }
  return out;
}

Weight weight_star(const Weight& t) { return {-t.j, -t.i}; }
Weight weight_sigma(const Weight& t) { return {t.j, t.i}; }

// ---------------------------------------------------------------- LambdaWord

LambdaWord LambdaWord::from_blocks(const std::vector<Block>& blocks) {
  LambdaWord out;
  for (const auto& b : blocks) {
    if (b.kind == Kind::D && b.exponent < 0) throw std::invalid_argument("negative power of d");
    if (b.exponent == 0) continue;
    if (!out.blocks_.empty() && out.blocks_.back().kind == b.kind) {
      out.blocks_.back().exponent += b.exponent;
      if (out.blocks_.back().exponent == 0) out.blocks_.pop_back();
    } else {
      out.blocks_.push_back(b);
    }
  }
  return out;
}

LambdaWord LambdaWord::delta(int x) { return from_blocks({{Kind::Delta, x}}); }
LambdaWord LambdaWord::d(int y) { return from_blocks({{Kind::D, y}}); }

std::size_t LambdaWord::letter_length() const {
  std::size_t n = 0;
  for (const auto& b : blocks_) n += static_cast<std::size_t>(std::abs(b.exponent));
  return n;
}

int LambdaWord::d_count() const {
  int n = 0;
  for (const auto& b : blocks_)
    if (b.kind == Kind::D) n += b.exponent;
  return n;
}

LambdaWord operator*(const LambdaWord& lhs, const LambdaWord& rhs) {
  std::vector<LambdaWord::Block> all = lhs.blocks_;
  all.insert(all.end(), rhs.blocks_.begin(), rhs.blocks_.end());
  return LambdaWord::from_blocks(all);
}

std::strong_ordering operator<=>(const LambdaWord& lhs, const LambdaWord& rhs) {
  if (auto c = lhs.letter_length() <=> rhs.letter_length(); c != 0) return c;
  return std::lexicographical_compare_three_way(lhs.blocks_.begin(), lhs.blocks_.end(),
                                                rhs.blocks_.begin(), rhs.blocks_.end());
}

std::string LambdaWord::to_string() const {
  if (blocks_.empty()) return "1";
  std::string out;
  for (const auto& b : blocks_) {
    if (!out.empty()) out += ".";
    if (b.kind == Kind::D) {
      out += factor('d', b.exponent);
    } else {
      out += b.exponent > 0 ? "D" : "Di";
      if (std::abs(b.exponent) != 1) out += "^" + std::to_string(std::abs(b.exponent));
    }
  }
  return out;
}

// ---------------------------------------------------------------- maps

Weight wt(const LambdaWord& lambda) {
  Weight w;
  for (const auto& b : lambda.blocks()) {
    if (b.kind == LambdaWord::Kind::Delta) {
      w.i += b.exponent;
      w.j += b.exponent;
    } else {
      w.j += b.exponent;
    }
  }
  return w;
}

namespace {

using Block = LambdaWord::Block;
using Kind = LambdaWord::Kind;

// Anti-homomorphic extension with d -> pattern, D^x -> D^{-x}.
LambdaWord anti(const LambdaWord& lambda, bool delta_first) {
  std::vector<Block> out;
  const auto& bs = lambda.blocks();
  for (auto it = bs.rbegin(); it != bs.rend(); ++it) {
    if (it->kind == Kind::Delta) {
      out.push_back({Kind::Delta, -it->exponent});
    } else {
      for (int k = 0; k < it->exponent; ++k) {
        if (delta_first) {
          out.push_back({Kind::Delta, -1});
          out.push_back({Kind::D, 1});
        } else {
          out.push_back({Kind::D, 1});
          out.push_back({Kind::Delta, -1});
        }
      }
    }
  }
  return LambdaWord::from_blocks(out);
}

}  // namespace

LambdaWord star(const LambdaWord& lambda) { return anti(lambda, false); }
LambdaWord star_inv(const LambdaWord& lambda) { return anti(lambda, true); }

bool lt2(const LambdaWord& mu, const LambdaWord& lambda) { return wt(mu) < wt(lambda); }
bool le2(const LambdaWord& mu, const LambdaWord& lambda) { return mu == lambda || lt2(mu, lambda); }

// ---------------------------------------------------------------- first order

std::set<LambdaWord> covers_down(const LambdaWord& lambda) {
  std::set<LambdaWord> out;
  const auto& bs = lambda.blocks();
  for (std::size_t p = 0; p < bs.size(); ++p) {
    if (bs[p].kind != Kind::D) continue;
    // d d -> D inside one block.
    for (int k = 1; k < bs[p].exponent; ++k) {
      std::vector<Block> next(bs.begin(), bs.begin() + static_cast<std::ptrdiff_t>(p));
      next.push_back({Kind::D, k - 1});
      next.push_back({Kind::Delta, 1});
      next.push_back({Kind::D, bs[p].exponent - k - 1});
      next.insert(next.end(), bs.begin() + static_cast<std::ptrdiff_t>(p + 1), bs.end());
      out.insert(LambdaWord::from_blocks(next));
    }
    // d Di d across a Di block.
    if (p + 2 < bs.size() && bs[p + 1].exponent == -1) {
      std::vector<Block> next(bs.begin(), bs.begin() + static_cast<std::ptrdiff_t>(p));
      next.push_back({Kind::D, bs[p].exponent - 1});
      next.push_back({Kind::D, bs[p + 2].exponent - 1});
      next.insert(next.end(), bs.begin() + static_cast<std::ptrdiff_t>(p + 3), bs.end());
      out.insert(LambdaWord::from_blocks(next));
    }
  }
  return out;
}

std::set<LambdaWord> pi_below(const LambdaWord& lambda) {
  std::set<LambdaWord> seen;
  std::deque<LambdaWord> queue{lambda};
  while (!queue.empty()) {
    LambdaWord cur = std::move(queue.front());
    queue.pop_front();
    for (auto& next : covers_down(cur))
      if (seen.insert(next).second) queue.push_back(next);
  }
  return seen;
}

bool lt1(const LambdaWord& mu, const LambdaWord& lambda) {
  if (mu.letter_length() >= lambda.letter_length()) return false;
  return pi_below(lambda).count(mu) > 0;
}

bool le1(const LambdaWord& mu, const LambdaWord& lambda) { return mu == lambda || lt1(mu, lambda); }

bool is_saturated(const std::set<LambdaWord>& set) {
  for (const auto& lambda : set)
    for (const auto& mu : covers_down(lambda))
      if (!set.count(mu)) return false;
  return true;
}

// ---------------------------------------------------------------- enumeration

namespace {

void extend(std::vector<Block>& prefix, std::size_t budget, std::vector<LambdaWord>& out) {
  out.push_back(LambdaWord::from_blocks(prefix));
  for (int e = 1; static_cast<std::size_t>(e) <= budget; ++e) {
    for (Block b : {Block{Kind::Delta, -e}, Block{Kind::Delta, e}, Block{Kind::D, e}}) {
      if (!prefix.empty() && prefix.back().kind == b.kind) continue;
      prefix.push_back(b);
      extend(prefix, budget - static_cast<std::size_t>(e), out);
      prefix.pop_back();
    }
  }
}

}  // namespace

std::vector<LambdaWord> enumerate_lambda(std::size_t n) {
  std::vector<LambdaWord> out;
  std::vector<Block> prefix;
  extend(prefix, n, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oncgl2
