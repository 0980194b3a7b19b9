#pragma once

// Finite-dimensional left comodules over O_nc(GL2).
//
// Conventions: rho(v_i) = sum_j C[i][j] (x) v_j, and a map f is stored as a
// matrix F with f(v_i) = sum_j F(j, i) w_j.

#include "oncgl2/lambda.hpp"
#include "oncgl2/linalg.hpp"
#include "oncgl2/ncalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace oncgl2 {

using linalg::Matrix;
using linalg::Vector;
using ComoduleMap = Matrix;

class Comodule {
 public:
  Comodule() = default;
  Comodule(std::vector<std::string> labels, std::vector<std::vector<NCElement>> coaction);

  static Comodule unit();
  /// One-dimensional comodule with coaction [[x]] for a grouplike x.
  static Comodule one_dimensional(const NCElement& x, std::string label);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const NCElement& entry(std::size_t i, std::size_t j) const { return coaction_[i][j]; }
  const std::vector<std::vector<NCElement>>& coaction() const { return coaction_; }

  /// Weight of each basis vector if the coaction reduced to the torus is diagonal.
  const std::optional<std::vector<Weight>>& basis_weights() const { return weights_; }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<NCElement>> coaction_;
  std::optional<std::vector<Weight>> weights_;
};

struct Verdict {
  bool ok = true;
  std::string message;
  explicit operator bool() const { return ok; }
};

/// Coassociativity and counit, entry by entry.
Verdict verify_comodule(const Comodule& x);
/// (id (x) f) rho_X = rho_Y f, expanded over normal words.
Verdict verify_map(const Comodule& x, const Comodule& y, const ComoduleMap& f);

Comodule tensor(const Comodule& x, const Comodule& y);
Comodule tensor(const std::vector<Comodule>& factors);
Comodule direct_sum(const Comodule& x, const Comodule& y);
/// Coaction S^{-1}(C^T); evaluation X* (x) X -> 1 is a comodule map.
Comodule right_dual(const Comodule& x);
/// Coaction S(C^T); evaluation X (x) *X -> 1 is a comodule map.
Comodule left_dual(const Comodule& x);

/// Basis of the space of comodule maps X -> Y.
std::vector<ComoduleMap> hom_space(const Comodule& x, const Comodule& y);
/// Some invertible element of hom_space, if one exists.
std::optional<ComoduleMap> find_isomorphism(const Comodule& x, const Comodule& y);

/// A subcomodule together with its basis in ambient coordinates (rows, RREF).
struct Subcomodule {
  Comodule module;
  std::vector<Vector> basis;
};

/// Restriction to span(vectors); throws if the span is not a subcomodule.
Subcomodule restrict_to(const Comodule& x, const std::vector<Vector>& vectors);
Subcomodule image(const Comodule& x, const Comodule& y, const ComoduleMap& f);
Subcomodule kernel(const Comodule& x, const Comodule& y, const ComoduleMap& f);
/// X / span(vectors), on the complement spanned by the non-pivot unit vectors.
Comodule quotient(const Comodule& x, const std::vector<Vector>& vectors);
/// Smallest subcomodule containing v.
Subcomodule generated_subcomodule(const Comodule& x, const Vector& v);

/// Weight -> multiplicity.
using Character = std::map<Weight, int>;

Character weight_decomposition(const Comodule& x);
/// Basis of the t-weight space.
std::vector<Vector> weight_space(const Comodule& x, const Weight& t);
Character character_product(const Character& lhs, const Character& rhs);
Character character_sum(const Character& lhs, const Character& rhs);
Character character_star(const Character& c);
std::string to_string(const Character& c);

struct ExtremeWeights {
  Weight highest;
  int highest_multiplicity;
  Weight lowest;
  int lowest_multiplicity;
};
ExtremeWeights highest_lowest_weight(const Comodule& x);

/// Image of a word in O(T) = k[a^{+-1}, d^{+-1}] (b = c = 0), or nullopt if it vanishes.
std::optional<Weight> torus_monomial(const Word& w);

}  // namespace oncgl2
