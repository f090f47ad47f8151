#pragma once

#include <memory>
#include <span>
#include <vector>

#include "kflag/laurent.hpp"
#include "kflag/univariate.hpp"
#include "kflag/weyl_group.hpp"

namespace kflag {

/// A class in the fixed-point model of K_T(G/B): one character per T-fixed
/// point e_v, indexed by WeylElement::index.
struct EquivClass {
  std::vector<LaurentPoly> at;

  const LaurentPoly& operator[](const WeylElement& v) const { return at[v.index]; }
  LaurentPoly& operator[](const WeylElement& v) { return at[v.index]; }
  std::size_t size() const { return at.size(); }

  friend bool operator==(const EquivClass&, const EquivClass&) = default;
};

/// Expansion of a class in the Schubert basis [O_{X_w}].
struct ExpansionResult {
  std::vector<LaurentPoly> coeffs;  ///< equivariant coefficients
  std::vector<Integer> specialized;  ///< the same at e^lambda = 1
};

/// Replaces every exponent lambda of `a` by w(lambda).
LaurentPoly lp_weyl_act(const WeylGroup& g, const WeylElement& w, const LaurentPoly& a);

/// Fixed-point localization model of equivariant K-theory of G/B.
///
/// The Schubert table is built once in the constructor; afterwards the model
/// is immutable and safe to share across threads.
class KtModel {
 public:
  explicit KtModel(std::shared_ptr<const WeylGroup> group);
  /// Adopts a precomputed Schubert table (e.g. from the cache) after checking
  /// its shape, support, and diagonal. Throws IntegrityError on mismatch.
  KtModel(std::shared_ptr<const WeylGroup> group, std::vector<EquivClass> schubert_table);

  const WeylGroup& group() const { return *group_; }
  std::shared_ptr<const WeylGroup> group_ptr() const { return group_; }
  const RootDatum& datum() const { return group_->datum(); }
  int rank() const { return group_->rank(); }
  /// dim G/B = number of positive roots.
  int dim() const { return static_cast<int>(datum().positive_roots().size()); }

  EquivClass zero() const;
  /// [O_X], constant 1 at every fixed point.
  EquivClass unit() const;
  EquivClass point_class() const;

  /// (D_i f)(v) = (f(v) - e^{v(alpha_i)} f(v s_i)) / (1 - e^{v(alpha_i)}).
  EquivClass demazure(int i, const EquivClass& f) const;

  const EquivClass& schubert_class(const WeylElement& w) const { return schubert_[w.index]; }
  const std::vector<EquivClass>& schubert_table() const { return schubert_; }
  /// Recomputes [O_{X_w}] along the given reduced word (0-based letters),
  /// applying one Demazure operator per letter starting from the point class.
  EquivClass schubert_class_along(std::span<const int> word) const;

  /// [O_{X^w}] = w_o . [O_{X_{w_o w}}] translated by w_o.
  const EquivClass& opposite_schubert_class(const WeylElement& w) const {
    return opposite_[w.index];
  }
  /// Restriction at e_v is e^{-v(lambda)}.
  EquivClass line_bundle_class(const Weight& lambda) const;
  /// [omega_X] = [L(-2 rho)].
  EquivClass omega_x() const;

  EquivClass kadd(const EquivClass& a, const EquivClass& b) const;
  EquivClass ksub(const EquivClass& a, const EquivClass& b) const;
  EquivClass kscale(const EquivClass& a, const Integer& k) const;
  EquivClass kmul(const EquivClass& a, const EquivClass& b) const;
  EquivClass kdual(const EquivClass& a) const;
  /// Pointwise twist of every restriction by the Weyl element w_o.
  EquivClass translate_by_longest(const EquivClass& a) const;

  /// Euler characteristic by the Lefschetz fixed-point sum, specialized along
  /// the principal cocharacter. Throws PoleAtOne for invalid classes.
  Integer euler_characteristic(const EquivClass& f) const;

  /// Triangular back-substitution in the Schubert basis from w_o downward.
  /// Throws NotDivisible or NonzeroResidual outside the span.
  ExpansionResult expand(const EquivClass& f) const;
  /// Sum_w c_w psi_w for integer coefficients indexed by element.
  EquivClass combine(std::span<const Integer> coeffs) const;

  const std::vector<long long>& cocharacter() const { return cochar_; }

 private:
  void precompute();
  void build_schubert_table();
  void build_opposite_table();

  std::shared_ptr<const WeylGroup> group_;
  std::vector<std::vector<Weight>> simple_images_;  // [v][i] = v(alpha_i)
  std::vector<long long> cochar_;
  std::vector<UniPoly> lefschetz_den_;  // specialized prod_{alpha>0} (1 - e^{v(alpha)})
  std::vector<EquivClass> schubert_;
  std::vector<EquivClass> opposite_;
};

}  // namespace kflag
