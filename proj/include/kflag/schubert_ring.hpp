#pragma once

#include <array>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kflag/kt_model.hpp"

namespace kflag {

/// The four natural bases of K(G/B), indexed by w:
///   O              [O_{X_w}]
///   Ideal          [O_{X_w}(-dX_w)]
///   Omega          [omega_{X_w}]
///   OmegaBoundary  [omega_{X_w}(dX_w)]
enum class Basis { O, Ideal, Omega, OmegaBoundary };

std::string_view basis_name(Basis b);
Basis parse_basis(std::string_view name);

/// Integer coordinates of a non-equivariant class in one of the bases.
/// Indexed by WeylElement::index, or by position in `parabolic->min_reps`
/// when the class lives on G/P.
struct KClass {
  Basis basis = Basis::O;
  std::vector<Integer> coeffs;
  std::optional<ParabolicData> parabolic;

  friend bool operator==(const KClass& a, const KClass& b) {
    return a.basis == b.basis && a.coeffs == b.coeffs;
  }
};

using IntMatrix = std::vector<std::vector<Integer>>;

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer integer_determinant(IntMatrix m);

/// Table c[v][w] of line-bundle restriction coefficients for a fixed weight.
using LineTable = std::vector<std::vector<Integer>>;

/// The ring K(G/B) with its Schubert structure, built over a KtModel.
class SchubertRing {
 public:
  explicit SchubertRing(std::shared_ptr<const KtModel> model);

  const KtModel& model() const { return *model_; }
  std::shared_ptr<const KtModel> model_ptr() const { return model_; }
  const WeylGroup& group() const { return model_->group(); }

  int dim() const { return model_->dim(); }
  int codim(const WeylElement& w) const { return dim() - w.length; }
  /// N(u,v;w) = codim X_w - codim X_u - codim X_v on G/B.
  int n_exponent(const WeylElement& u, const WeylElement& v, const WeylElement& w) const;

  EquivClass product(const WeylElement& u, const WeylElement& v) const;
  /// c_{u,v}^w for all w.
  std::vector<Integer> structure_constants(const WeylElement& u, const WeylElement& v) const;

  /// Sum over v <= w of (-1)^{l(w)-l(v)} [O_{X_v}].
  KClass ideal_sheaf_class(const WeylElement& w) const;
  /// xi_w: sum over v >= w of (-1)^{l(v)-l(w)} [O_{X^v}].
  EquivClass opposite_ideal_class(const WeylElement& w) const;
  /// (-1)^{codim} kdual([O_{X_w}]) [omega_X].
  EquivClass omega_equiv(const WeylElement& w) const;
  /// (-1)^{codim} kdual([O_{X_w}(-dX_w)]) [omega_X].
  EquivClass omega_boundary_equiv(const WeylElement& w) const;
  KClass omega_class(const WeylElement& w) const;
  KClass omega_boundary_class(const WeylElement& w) const;

  /// Model class of basis element w of the given basis.
  EquivClass basis_element(Basis b, const WeylElement& w) const;
  /// Row u holds the O-coordinates of basis element u. Cached per basis.
  const IntMatrix& basis_matrix(Basis b) const;
  KClass change_basis(const KClass& c, Basis target) const;
  EquivClass to_equiv(const KClass& c) const;
  KClass expand_o(const EquivClass& f) const;

  /// chi(a . b)
  Integer pairing(const EquivClass& a, const EquivClass& b) const;
  Integer pairing(const KClass& a, const KClass& b) const;
  /// c^w = pairing(f, xi_w), cross-checked against the triangular expansion;
  /// throws RouteMismatch if the two routes disagree.
  std::vector<Integer> extract_coefficients_via_pairing(const EquivClass& f) const;

  /// [O_{X^v}] . [O_{X_w}] in the O-basis (zero when v is not <= w).
  KClass richardson_class(const WeylElement& v, const WeylElement& w) const;
  /// [omega_{X^v}] . [omega_{X_w}] . [omega_X]^{-1} in the model.
  EquivClass richardson_omega_equiv(const WeylElement& v, const WeylElement& w) const;

  /// c_v^w(lambda) for all w.
  std::vector<Integer> line_bundle_coeffs(const WeylElement& v, const Weight& lambda) const;
  LineTable line_bundle_table(const Weight& lambda, unsigned jobs = 1) const;

  /// Constants of K(G/P) for u, v in W^P, indexed by position in min_reps;
  /// computed through [O_{X_{uP}}] -> [O_{X_{u w_{o,P}}}]. Throws
  /// OutsideParabolicImage if the product leaves the image of that embedding.
  std::vector<Integer> parabolic_structure_constants(const ParabolicData& p, const WeylElement& u,
                                                     const WeylElement& v) const;

 private:
  std::shared_ptr<const KtModel> model_;
  mutable std::array<std::once_flag, 4> matrix_once_;
  mutable std::array<IntMatrix, 4> matrices_;
};

/// Sign of (-1)^k.
inline int parity_sign(long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace kflag
