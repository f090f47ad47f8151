#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kflag/schubert_ring.hpp"

namespace kflag {

/// One failed inequality. For Buch sweeps (u, v, w) are the triple and
/// `exponent` is N(u,v;w); for Richardson sweeps (u, v, w) = (v, w, u) of
/// Y = X^v cap X_w and `exponent` is codim X_u - codim Y.
struct SignViolation {
  std::string check;
  std::size_t u = 0;
  std::size_t v = 0;
  std::size_t w = 0;
  Integer c;
  long exponent = 0;
};

struct SignReport {
  std::string group;
  std::string check;
  std::uint64_t pairs_checked = 0;
  std::uint64_t triples_checked = 0;
  std::vector<SignViolation> violations;
  double elapsed_seconds = 0;

  bool ok() const { return violations.empty(); }
};

/// Checks c_{u,v}^w = 0 for N < 0 and (-1)^N c_{u,v}^w >= 0 for all triples,
/// on G/B or, with `parabolic`, on G/P. Unordered pairs are computed once.
SignReport verify_buch_signs(const SchubertRing& ring,
                             const std::optional<ParabolicData>& parabolic = std::nullopt,
                             unsigned jobs = 1);

/// For every v <= w, checks the alternating signs of [O_{X^v cap X_w}] and the
/// nonnegativity of its dualizing class in the omega basis.
SignReport verify_theorem_signs_richardson(const SchubertRing& ring, unsigned jobs = 1);

struct IdentityViolation {
  std::size_t v = 0;
  std::size_t w = 0;
  int index = -1;  ///< fundamental weight index where relevant
  Weight weight;
  Integer lhs;
  Integer rhs;
};

inline constexpr std::size_t kMaxListedViolations = 64;

struct IdentityCheck {
  std::string name;
  bool diagnostic = false;  ///< reported but not part of ok()
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::vector<IdentityViolation> violations;  ///< the first kMaxListedViolations
};

struct LineReport {
  std::string group;
  Weight lambda;
  Weight mu;
  std::vector<IdentityCheck> checks;
  double elapsed_seconds = 0;

  bool ok() const;
  const IdentityCheck& check(const std::string& name) const;
};

/// Line-bundle identity suite for weights lambda and mu on G/B:
///   triangularity         c_v^w = 0 unless w <= v, c_v^v = 1
///   duality               c_v^w(-l) = (-1)^{l(v)-l(w)} c_{w_o w}^{w_o v}(l)
///   additivity            c_v^w(l+m) = sum_{w<=x<=v} c_v^x(l) c_x^w(m)
///   omega_lemma_negative  c_v^w(-omega_i) = -c_{w_o s_i, v}^w          (v != w)
///   omega_lemma_positive  c_v^w(omega_i) = (-1)^{l(v)-l(w)-1} c_{w_o s_i, w_o w}^{w_o v}
///   dominant_nonnegative  c_v^w(l) >= 0 for dominant l
///   chevalley             [L(-omega_i)] = [O_X] - [O_{X_{w_o s_i}}]
/// Also reports, as diagnostics, the duality formula and the positive lemma
/// form with the index placement c_v^w(-l) = c_{w_o w}^{w_o v}(-w_o l) and
/// c_{s_i w_o, w_o v}^{w_o w}; these do not hold in general.
LineReport verify_line_identities(const SchubertRing& ring, const Weight& lambda, const Weight& mu,
                                  unsigned jobs = 1);

/// Runs the suite for several (lambda, mu) pairs, sharing coefficient tables.
std::vector<LineReport> verify_line_identities(const SchubertRing& ring,
                                               const std::vector<std::pair<Weight, Weight>>& pairs,
                                               unsigned jobs = 1);

/// {omega_i} u {-omega_i} u {rho}.
std::vector<Weight> standard_line_weights(const RootDatum& datum);
/// All ordered pairs from standard_line_weights.
std::vector<std::pair<Weight, Weight>> standard_line_pairs(const RootDatum& datum);

}  // namespace kflag
