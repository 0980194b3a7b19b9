#include "oncgl2/simples.hpp"

#include "oncgl2/standard.hpp"

#include <array>
#include <map>
#include <random>
#include <stdexcept>

namespace oncgl2 {

Segments split_segments(const LambdaWord& lambda) {
  using Kind = LambdaWord::Kind;
  Segments out;
  const auto& bs = lambda.blocks();
  std::size_t begin = 0;
  std::size_t end = bs.size();
  if (begin < end && bs[begin].kind == Kind::Delta) out.lead = bs[begin++].exponent;
  if (begin < end && bs[end - 1].kind == Kind::Delta) out.trail = bs[--end].exponent;
  std::vector<int> current;
  for (std::size_t k = begin; k < end; ++k) {
    if (bs[k].kind == Kind::D) {
      current.push_back(bs[k].exponent);
    } else if (bs[k].exponent != -1) {
      out.segments.push_back(std::move(current));
      current.clear();
      out.separators.push_back(bs[k].exponent);
    }
  }
  if (!current.empty()) out.segments.push_back(std::move(current));
  return out;
}

// ---------------------------------------------------------------- expressions

namespace {

using Kind = BlockExpression::Kind;
using Block = BlockExpression::Block;

std::string r_power(int k) {
  if (k == 1) return "R";
  if (k == -1) return "Ri";
  return "R^" + std::to_string(k);
}

Character sym_character(int e) {
  Character c;
  for (int m = 0; m <= e; ++m) c[Weight{e - m, m}] = 1;
  return c;
}

Character r_character(int k) { return {{Weight{k, k}, 1}}; }

bool pair_ok(const Block& left, int connector, const Block& right) {
  if (left.kind == right.kind || (connector != 0 && connector != -1)) return true;
  const int t = left.kind == Kind::T ? left.exponent : right.exponent;
  const int s = left.kind == Kind::S ? left.exponent : right.exponent;
  return connector == 0 ? t >= s + 1 : t + 1 <= s;
}

}  // namespace

std::size_t BlockExpression::dim() const {
  std::size_t n = 1;
  for (const auto& b : blocks) n *= static_cast<std::size_t>(b.exponent) + 1;
  return n;
}

std::string BlockExpression::to_string() const {
  std::vector<std::string> parts;
  if (lead != 0) parts.push_back(r_power(lead));
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (k > 0 && connectors[k - 1] != 0) parts.push_back(r_power(connectors[k - 1]));
    parts.push_back((blocks[k].kind == Kind::S ? "S" : "T") + std::to_string(blocks[k].exponent));
  }
  if (trail != 0) parts.push_back(r_power(trail));
  if (parts.empty()) return "1";
  std::string out = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) out += " * " + parts[k];
  return out;
}

bool BlockExpression::satisfies_table() const {
  for (std::size_t k = 0; k + 1 < blocks.size(); ++k)
    if (!pair_ok(blocks[k], connectors[k], blocks[k + 1])) return false;
  return true;
}

Character BlockExpression::character() const {
  Character c = r_character(lead);
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (k > 0) c = character_product(c, r_character(connectors[k - 1]));
    Character f = sym_character(blocks[k].exponent);
    if (blocks[k].kind == Kind::T)
      f = character_product(character_star(f), r_character(1));
    c = character_product(c, f);
  }
  return character_product(c, r_character(trail));
}

Comodule BlockExpression::assemble() const {
  std::vector<Comodule> factors;
  if (lead != 0) factors.push_back(build_R(lead));
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (k > 0 && connectors[k - 1] != 0) factors.push_back(build_R(connectors[k - 1]));
    factors.push_back(blocks[k].kind == Kind::S ? build_SymV(blocks[k].exponent) : build_TV(blocks[k].exponent));
  }
  if (trail != 0) factors.push_back(build_R(trail));
  return tensor(factors);
}

namespace {

// Slots of Delta(segment) with empty receivers kept.
BlockExpression segment_slots(const std::vector<int>& z) {
  if (z.empty()) throw std::invalid_argument("empty segment");
  BlockExpression e;
  auto push = [&e](Kind kind, int exponent) {
    if (!e.blocks.empty()) e.connectors.push_back(0);
    e.blocks.push_back({kind, exponent});
  };
  const std::size_t m = z.size() - 1;
  if (m == 0) {
    push(Kind::S, z[0]);
    return e;
  }
  if (z[0] >= 2) push(Kind::S, z[0] - 1);
  int chain = 1;
  for (std::size_t i = 1; i <= m; ++i) {
    ++chain;
    if (i == m) {
      push(Kind::T, chain);
      if (z[m] >= 2) push(Kind::S, z[m] - 1);
    } else if (z[i] >= 2) {
      push(Kind::T, chain);
      push(Kind::S, z[i] - 2);
      chain = 1;
    }
  }
  return e;
}

// Removes S0 and turns T0 = R into connector powers.
BlockExpression collapse(const BlockExpression& in) {
  BlockExpression out;
  out.lead = in.lead;
  out.trail = in.trail;
  int pending = in.lead;  // R-power accumulated since the last kept block
  bool any = false;
  for (std::size_t k = 0; k < in.blocks.size(); ++k) {
    if (k > 0) pending += in.connectors[k - 1];
    const Block& b = in.blocks[k];
    if (b.exponent == 0) {
      if (b.kind == Kind::T) pending += 1;
      continue;
    }
    if (any) out.connectors.push_back(pending);
    else out.lead = pending;
    out.blocks.push_back(b);
    pending = 0;
    any = true;
  }
  pending += in.trail;
  if (any) out.trail = pending;
  else {
    out.lead = pending;
    out.trail = 0;
  }
  return out;
}

struct Transfer {
  std::size_t donor;
  std::size_t receiver;
};

BlockExpression classify_segment(const std::vector<int>& z, std::mt19937* rng) {
  BlockExpression e = segment_slots(z);
  std::vector<Transfer> pending;
  for (std::size_t k = 0; k < e.blocks.size(); ++k) {
    if (e.blocks[k].kind != Kind::T) continue;
    if (k > 0 && e.blocks[k - 1].kind == Kind::S) pending.push_back({k, k - 1});
    if (k + 1 < e.blocks.size() && e.blocks[k + 1].kind == Kind::S) pending.push_back({k, k + 1});
  }
  for (;;) {
    std::vector<std::size_t> surjective;
    for (std::size_t p = 0; p < pending.size(); ++p) {
      const int donor = e.blocks[pending[p].donor].exponent;
      const int receiver = e.blocks[pending[p].receiver].exponent;
      if (donor >= 1 && donor <= receiver + 1) surjective.push_back(p);
    }
    if (surjective.empty()) break;
    std::size_t pick = surjective.front();
    if (rng) pick = surjective[std::uniform_int_distribution<std::size_t>(0, surjective.size() - 1)(*rng)];
    const Transfer t = pending[pick];
    e.blocks[t.donor].exponent -= 1;
    e.blocks[t.receiver].exponent += 1;
    e.connectors[std::min(t.donor, t.receiver)] = -1;
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return e;
}

BlockExpression join(const std::vector<BlockExpression>& parts, const Segments& s) {
  BlockExpression raw;
  raw.lead = s.lead;
  int pending = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k > 0) pending += s.separators[k - 1];
    pending += parts[k].lead;
    for (std::size_t b = 0; b < parts[k].blocks.size(); ++b) {
      if (!raw.blocks.empty()) raw.connectors.push_back(b == 0 ? pending : parts[k].connectors[b - 1]);
      else raw.lead += pending;
      raw.blocks.push_back(parts[k].blocks[b]);
      pending = 0;
    }
    pending += parts[k].trail;
  }
  raw.trail = pending + s.trail;
  if (raw.blocks.empty()) {
    raw.lead += raw.trail;
    raw.trail = 0;
  }
  return raw;
}

}  // namespace

BlockExpression delta_grouping(const std::vector<int>& z) { return collapse(segment_slots(z)); }

BlockExpression normalize(BlockExpression e) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < e.blocks.size(); ++k) {
      if (e.connectors[k] != -1) continue;
      Block& l = e.blocks[k];
      Block& r = e.blocks[k + 1];
      BlockExpression trial = e;
      if (l.kind == Kind::T && r.kind == Kind::S && r.exponent >= 2 && l.exponent == r.exponent - 1) {
        trial.blocks[k].exponent += 1;
        trial.blocks[k + 1].exponent -= 1;
      } else if (l.kind == Kind::S && r.kind == Kind::T && l.exponent >= 2 && r.exponent == l.exponent - 1) {
        trial.blocks[k].exponent -= 1;
        trial.blocks[k + 1].exponent += 1;
      } else {
        continue;
      }
      trial.connectors[k] = 0;
      if (trial.satisfies_table()) {
        e = std::move(trial);
        changed = true;
        break;
      }
    }
  }
  return e;
}

BlockExpression classify(const LambdaWord& lambda, std::uint32_t seed) {
  const Segments s = split_segments(lambda);
  std::mt19937 rng(seed);
  std::vector<BlockExpression> parts;
  for (const auto& z : s.segments) parts.push_back(collapse(classify_segment(z, seed ? &rng : nullptr)));
  BlockExpression e = normalize(join(parts, s));
  if (!e.satisfies_table())
    throw std::logic_error("classifier output " + e.to_string() + " violates the inequality table");
  return e;
}

// ---------------------------------------------------------------- sl2 oracle

RankFlags sl2_predicted(int a, int b, Donor donor) {
  const int p = donor == Donor::Left ? a : b;
  const int q = donor == Donor::Left ? b : a;
  const std::size_t src = static_cast<std::size_t>((a + 1) * (b + 1));
  const std::size_t tgt = donor == Donor::Left ? static_cast<std::size_t>(a * (b + 2))
                                               : static_cast<std::size_t>((a + 2) * b);
  const bool inj = p >= q + 1;
  const bool sur = p <= q + 1;
  return {inj, sur, inj ? src : (sur ? tgt : 0), src, tgt};
}

RankFlags sl2_rank_oracle(int a, int b, Donor donor) {
  if (a < 0 || b < 0) throw std::invalid_argument("negative exponent");
  // Source monomial (i, j) = x1^i x2^{a-i} y1^j y2^{b-j}.
  const int ta = donor == Donor::Left ? a - 1 : a + 1;
  const int tb = donor == Donor::Left ? b + 1 : b - 1;
  const std::size_t src = static_cast<std::size_t>((a + 1) * (b + 1));
  const std::size_t tgt = (ta < 0 || tb < 0) ? 0 : static_cast<std::size_t>((ta + 1) * (tb + 1));
  Matrix m(tgt, src);
  auto col = [b](int i, int j) { return static_cast<std::size_t>(i * (b + 1) + j); };
  auto row = [tb](int i, int j) { return static_cast<std::size_t>(i * (tb + 1) + j); };
  if (tgt > 0) {
    for (int i = 0; i <= a; ++i)
      for (int j = 0; j <= b; ++j) {
        if (donor == Donor::Left) {
          // y1 d/dx1 and y2 d/dx2
          if (i > 0) m(row(i - 1, j + 1), col(i, j)) += i;
          if (a - i > 0) m(row(i, j), col(i, j)) += a - i;
        } else {
          // x1 d/dy1 and x2 d/dy2
          if (j > 0) m(row(i + 1, j - 1), col(i, j)) += j;
          if (b - j > 0) m(row(i, j), col(i, j)) += b - j;
        }
      }
  }
  const std::size_t r = tgt > 0 ? linalg::rank(m) : 0;
  return {r == src, r == tgt, r, src, tgt};
}

namespace {

using Exponents = std::array<int, 6>;  // x1 x2 y1 y2 z1 z2
using Poly = std::map<Exponents, Rational>;

// sum_k to_k d/dfrom_k: peels a variable off factor `from` onto factor `to`.
Poly transfer(const Poly& p, int from, int to) {
  Poly out;
  for (const auto& [e, c] : p)
    for (int k = 0; k < 2; ++k) {
      const int f = 2 * from + k;
      if (e[f] == 0) continue;
      Exponents n = e;
      n[f] -= 1;
      n[2 * to + k] += 1;
      out[n] += c * e[f];
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

bool sl2_commute(int a, int b, int c) {
  for (int i = 0; i <= a; ++i)
    for (int j = 0; j <= b; ++j)
      for (int k = 0; k <= c; ++k) {
        Poly p{{Exponents{i, a - i, j, b - j, k, c - k}, Rational(1)}};
        if (transfer(transfer(p, 2, 1), 0, 1) != transfer(transfer(p, 0, 1), 2, 1)) return false;
      }
  return true;
}

Verdict crosscheck(const LambdaWord& lambda) {
  BlockExpression e = classify(lambda);
  Subcomodule l = build_L(lambda);
  if (e.dim() != l.basis.size())
    return {false, lambda.to_string() + ": classifier dim " + std::to_string(e.dim()) + " but rank " +
                       std::to_string(l.basis.size())};
  if (e.character() != weight_decomposition(l.module))
    return {false, lambda.to_string() + ": characters differ"};
  return {};
}

}  // namespace oncgl2
