#include "oncgl2/comod.hpp"

#include <random>
#include <stdexcept>

namespace oncgl2 {

std::optional<Weight> torus_monomial(const Word& w) {
  Weight t;
  for (Letter l : w) {
    switch (l) {
      case Letter::A:
        t.i += 1;
        break;
      case Letter::D:
        t.j += 1;
        break;
      case Letter::Delta:
        t.i += 1;
        t.j += 1;
        break;
      case Letter::DeltaInv:
        t.i -= 1;
        t.j -= 1;
        break;
      default:
        return std::nullopt;
    }
  }
  return t;
}

namespace {

std::map<Weight, Rational> project_torus(const NCElement& x) {
  std::map<Weight, Rational> out;
  for (const auto& [w, c] : x.terms())
    if (auto t = torus_monomial(w)) {
      auto& slot = out[*t];
      slot += c;
      if (slot == 0) out.erase(*t);
    }
  return out;
}

std::optional<std::vector<Weight>> diagonal_weights(const std::vector<std::vector<NCElement>>& c) {
  std::vector<Weight> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      auto p = project_torus(c[i][j]);
      if (i != j) {
        if (!p.empty()) return std::nullopt;
      } else {
        if (p.size() != 1 || p.begin()->second != 1) return std::nullopt;
        out.push_back(p.begin()->first);
      }
    }
  }
  return out;
}

using WordRows = std::map<Word, std::map<std::size_t, Rational>>;

void accumulate(WordRows& rows, const NCElement& x, std::size_t column, const Rational& scale) {
  for (const auto& [w, c] : x.terms()) {
    auto& row = rows[w];
    auto& slot = row[column];
    slot += c * scale;
    if (slot == 0) row.erase(column);
  }
}

// For u in ambient coordinates: word -> right-leg vector of rho(u) at that word.
WordRows right_legs(const Comodule& x, const Vector& u) {
  WordRows rows;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < x.dim(); ++j) accumulate(rows, x.entry(i, j), j, u[i]);
  }
  return rows;
}

Vector dense(const std::map<std::size_t, Rational>& row, std::size_t n) {
  Vector v(n);
  for (const auto& [k, c] : row) v[k] = c;
  return v;
}

std::vector<std::vector<NCElement>> square(std::size_t n) {
  return std::vector<std::vector<NCElement>>(n, std::vector<NCElement>(n));
}

}  // namespace

// ---------------------------------------------------------------- Comodule

Comodule::Comodule(std::vector<std::string> labels, std::vector<std::vector<NCElement>> coaction)
    : labels_(std::move(labels)), coaction_(std::move(coaction)) {
  if (coaction_.size() != labels_.size()) throw std::invalid_argument("Comodule: shape mismatch");
  for (const auto& row : coaction_)
    if (row.size() != labels_.size()) throw std::invalid_argument("Comodule: coaction not square");
  weights_ = diagonal_weights(coaction_);
}

Comodule Comodule::unit() { return one_dimensional(NCElement(1), "1"); }

Comodule Comodule::one_dimensional(const NCElement& x, std::string label) {
  return Comodule({std::move(label)}, {{x}});
}

Verdict verify_comodule(const Comodule& x) {
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < x.dim(); ++j) {
      if (counit(x.entry(i, j)) != (i == j ? 1 : 0))
        return {false, "counit fails at entry (" + std::to_string(i) + "," + std::to_string(j) + ")"};
      TensorElement rhs(2);
      for (std::size_t k = 0; k < x.dim(); ++k)
        rhs += TensorElement::pure({x.entry(i, k), x.entry(k, j)});
      if (coproduct(x.entry(i, j)) != rhs)
        return {false,
                "coassociativity fails at entry (" + std::to_string(i) + "," + std::to_string(j) + ")"};
    }
  return {};
}

Verdict verify_map(const Comodule& x, const Comodule& y, const ComoduleMap& f) {
  if (f.rows() != y.dim() || f.cols() != x.dim()) return {false, "map has the wrong shape"};
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < y.dim(); ++j) {
      NCElement lhs, rhs;
      for (std::size_t k = 0; k < x.dim(); ++k)
        if (f(j, k) != 0) lhs += x.entry(i, k) * f(j, k);
      for (std::size_t l = 0; l < y.dim(); ++l)
        if (f(l, i) != 0) rhs += y.entry(l, j) * f(l, i);
      if (lhs != rhs)
        return {false, "not a comodule map at (" + std::to_string(i) + "," + std::to_string(j) + ")"};
    }
  return {};
}

Comodule tensor(const Comodule& x, const Comodule& y) {
  const std::size_t n = x.dim() * y.dim();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& lx : x.labels())
    for (const auto& ly : y.labels()) {
      if (lx == "1") labels.push_back(ly);
      else if (ly == "1") labels.push_back(lx);
      else labels.push_back(lx + "." + ly);
    }
  auto c = square(n);
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < x.dim(); ++j) {
      if (x.entry(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < y.dim(); ++k)
        for (std::size_t l = 0; l < y.dim(); ++l) {
          if (y.entry(k, l).is_zero()) continue;
          c[i * y.dim() + k][j * y.dim() + l] = x.entry(i, j) * y.entry(k, l);
        }
    }
  return Comodule(std::move(labels), std::move(c));
}

Comodule tensor(const std::vector<Comodule>& factors) {
  Comodule out = Comodule::unit();
  for (const auto& f : factors) out = tensor(out, f);
  return out;
}

Comodule direct_sum(const Comodule& x, const Comodule& y) {
  const std::size_t n = x.dim() + y.dim();
  std::vector<std::string> labels = x.labels();
  labels.insert(labels.end(), y.labels().begin(), y.labels().end());
  auto c = square(n);
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < x.dim(); ++j) c[i][j] = x.entry(i, j);
  for (std::size_t i = 0; i < y.dim(); ++i)
    for (std::size_t j = 0; j < y.dim(); ++j) c[x.dim() + i][x.dim() + j] = y.entry(i, j);
  return Comodule(std::move(labels), std::move(c));
}

namespace {

template <class Fn>
Comodule dual_with(const Comodule& x, Fn fn, const char* mark) {
  auto c = square(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < x.dim(); ++j)
      if (!x.entry(j, i).is_zero()) c[i][j] = fn(x.entry(j, i));
  std::vector<std::string> labels;
  for (const auto& l : x.labels()) labels.push_back(l + mark);
  return Comodule(std::move(labels), std::move(c));
}

}  // namespace

Comodule right_dual(const Comodule& x) {
  return dual_with(x, [](const NCElement& e) { return antipode_inverse(e); }, "*");
}

Comodule left_dual(const Comodule& x) {
  return dual_with(x, [](const NCElement& e) { return antipode(e); }, "'");
}

// ---------------------------------------------------------------- Hom

std::vector<ComoduleMap> hom_space(const Comodule& x, const Comodule& y) {
  const std::size_t nx = x.dim();
  const std::size_t ny = y.dim();
  // Unknown F(j, k) gets a column index, or none if weights force it to vanish.
  std::vector<std::vector<std::optional<std::size_t>>> unknown(ny,
                                                               std::vector<std::optional<std::size_t>>(nx));
  const auto& wx = x.basis_weights();
  const auto& wy = y.basis_weights();
  const bool graded = wx.has_value() && wy.has_value();
  std::size_t count = 0;
  for (std::size_t j = 0; j < ny; ++j)
    for (std::size_t k = 0; k < nx; ++k)
      if (!graded || (*wy)[j] == (*wx)[k]) unknown[j][k] = count++;
  if (count == 0) return {};

  linalg::RowEchelon system(count);
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j) {
      WordRows rows;
      for (std::size_t k = 0; k < nx; ++k)
        if (unknown[j][k]) accumulate(rows, x.entry(i, k), *unknown[j][k], Rational(1));
      for (std::size_t l = 0; l < ny; ++l)
        if (unknown[l][i]) accumulate(rows, y.entry(l, j), *unknown[l][i], Rational(-1));
      for (auto& [w, row] : rows) {
        if (row.empty()) continue;
        system.add(linalg::SparseRow(row.begin(), row.end()));
        if (system.rank() == count) return {};
      }
    }
  std::vector<ComoduleMap> out;
  for (const auto& v : system.nullspace()) {
    ComoduleMap f(ny, nx);
    for (std::size_t j = 0; j < ny; ++j)
      for (std::size_t k = 0; k < nx; ++k)
        if (unknown[j][k]) f(j, k) = v[*unknown[j][k]];
    out.push_back(std::move(f));
  }
  return out;
}

std::optional<ComoduleMap> find_isomorphism(const Comodule& x, const Comodule& y) {
  if (x.dim() != y.dim()) return std::nullopt;
  if (x.dim() == 0) return ComoduleMap(0, 0);
  auto basis = hom_space(x, y);
  if (basis.empty()) return std::nullopt;
  for (const auto& f : basis)
    if (linalg::rank(f) == x.dim()) return f;
  // A generic combination of a basis containing an invertible map is invertible.
  std::mt19937 rng(20241014);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int attempt = 0; attempt < 16; ++attempt) {
    ComoduleMap f(y.dim(), x.dim());
    for (const auto& g : basis) {
      Rational c(coef(rng));
      for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t s = 0; s < g.cols(); ++s) f(r, s) += c * g(r, s);
    }
    if (linalg::rank(f) == x.dim()) return f;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- subobjects

Subcomodule restrict_to(const Comodule& x, const std::vector<Vector>& vectors) {
  auto basis = linalg::span_basis(vectors, x.dim());
  std::vector<std::size_t> pivots;
  for (const auto& b : basis) {
    std::size_t p = 0;
    while (b[p] == 0) ++p;
    pivots.push_back(p);
  }
  const std::size_t k = basis.size();
  auto c = square(k);
  for (std::size_t r = 0; r < k; ++r) {
    for (const auto& [w, row] : right_legs(x, basis[r])) {
      Vector leg = dense(row, x.dim());
      Vector rest = leg;
      for (std::size_t s = 0; s < k; ++s) {
        const Rational coef = leg[pivots[s]];
        if (coef == 0) continue;
        for (std::size_t q = 0; q < x.dim(); ++q) rest[q] -= coef * basis[s][q];
        c[r][s].add_normal(w, coef);
      }
      for (const auto& q : rest)
        if (q != 0) throw std::domain_error("span is not a subcomodule");
    }
  }
  std::vector<std::string> labels;
  for (std::size_t r = 0; r < k; ++r) labels.push_back("u" + std::to_string(r + 1));
  return {Comodule(std::move(labels), std::move(c)), std::move(basis)};
}

Subcomodule image(const Comodule& x, const Comodule& y, const ComoduleMap& f) {
  if (f.rows() != y.dim() || f.cols() != x.dim()) throw std::invalid_argument("image: shape mismatch");
  std::vector<Vector> columns;
  for (std::size_t i = 0; i < x.dim(); ++i) columns.push_back(f.column(i));
  return restrict_to(y, columns);
}

Subcomodule kernel(const Comodule& x, const Comodule& y, const ComoduleMap& f) {
  if (f.rows() != y.dim() || f.cols() != x.dim()) throw std::invalid_argument("kernel: shape mismatch");
  return restrict_to(x, linalg::nullspace(f));
}

Comodule quotient(const Comodule& x, const std::vector<Vector>& vectors) {
  auto sub = restrict_to(x, vectors);  // throws unless closed
  std::vector<bool> is_pivot(x.dim(), false);
  std::vector<std::pair<std::size_t, const Vector*>> pivot_rows;
  for (const auto& b : sub.basis) {
    std::size_t p = 0;
    while (b[p] == 0) ++p;
    is_pivot[p] = true;
    pivot_rows.emplace_back(p, &b);
  }
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < x.dim(); ++i)
    if (!is_pivot[i]) keep.push_back(i);
  auto c = square(keep.size());
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < keep.size(); ++a) {
    labels.push_back(x.labels()[keep[a]]);
    for (std::size_t b = 0; b < keep.size(); ++b) {
      NCElement e = x.entry(keep[a], keep[b]);
      for (const auto& [p, row] : pivot_rows)
        if ((*row)[keep[b]] != 0) e -= x.entry(keep[a], p) * (*row)[keep[b]];
      c[a][b] = std::move(e);
    }
  }
  return Comodule(std::move(labels), std::move(c));
}

Subcomodule generated_subcomodule(const Comodule& x, const Vector& v) {
  linalg::RowEchelon span(x.dim());
  std::vector<Vector> found;
  std::vector<Vector> queue;
  if (span.add_dense(v)) {
    found.push_back(v);
    queue.push_back(v);
  }
  while (!queue.empty()) {
    Vector u = std::move(queue.back());
    queue.pop_back();
    for (const auto& [w, row] : right_legs(x, u)) {
      Vector leg = dense(row, x.dim());
      if (span.add_dense(leg)) {
        found.push_back(leg);
        queue.push_back(std::move(leg));
      }
    }
    if (span.rank() == x.dim()) break;
  }
  return restrict_to(x, found);
}

// ---------------------------------------------------------------- weights

namespace {

std::map<Weight, Matrix> torus_components(const Comodule& x) {
  std::map<Weight, Matrix> out;
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < x.dim(); ++j)
      for (const auto& [t, c] : project_torus(x.entry(i, j))) {
        auto it = out.try_emplace(t, x.dim(), x.dim()).first;
        it->second(i, j) += c;
      }
  return out;
}

}  // namespace

Character weight_decomposition(const Comodule& x) {
  Character out;
  if (const auto& w = x.basis_weights()) {
    for (const auto& t : *w) ++out[t];
    return out;
  }
  std::size_t total = 0;
  for (const auto& [t, p] : torus_components(x)) {
    std::size_t r = linalg::rank(p);
    if (r) out[t] = static_cast<int>(r);
    total += r;
  }
  if (total != x.dim()) throw std::domain_error("torus coaction is not diagonalizable");
  return out;
}

std::vector<Vector> weight_space(const Comodule& x, const Weight& t) {
  std::vector<Vector> out;
  if (const auto& w = x.basis_weights()) {
    for (std::size_t i = 0; i < x.dim(); ++i)
      if ((*w)[i] == t) {
        Vector e(x.dim());
        e[i] = 1;
        out.push_back(std::move(e));
      }
    return out;
  }
  auto comps = torus_components(x);
  auto it = comps.find(t);
  if (it == comps.end()) return out;
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < x.dim(); ++r) rows.push_back(it->second.row(r));
  return linalg::span_basis(rows, x.dim());
}

Character character_product(const Character& lhs, const Character& rhs) {
  Character out;
  for (const auto& [s, m] : lhs)
    for (const auto& [t, n] : rhs) out[s * t] += m * n;
  return out;
}

Character character_sum(const Character& lhs, const Character& rhs) {
  Character out = lhs;
  for (const auto& [t, n] : rhs) out[t] += n;
  return out;
}

Character character_star(const Character& c) {
  Character out;
  for (const auto& [t, n] : c) out[weight_star(t)] += n;
  return out;
}

std::string to_string(const Character& c) {
  if (c.empty()) return "0";
  std::string out;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    if (!out.empty()) out += " + ";
    if (it->second != 1) out += std::to_string(it->second) + "*";
    out += it->first.to_string();
  }
  return out;
}

ExtremeWeights highest_lowest_weight(const Comodule& x) {
  if (x.dim() == 0) throw std::invalid_argument("zero comodule has no extreme weights");
  Character c = weight_decomposition(x);
  return {c.rbegin()->first, c.rbegin()->second, c.begin()->first, c.begin()->second};
}

}  // namespace oncgl2
