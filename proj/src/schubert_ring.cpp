#include "kflag/schubert_ring.hpp"

#include "kflag/error.hpp"
#include "kflag/parallel.hpp"

namespace kflag {

std::string_view basis_name(Basis b) {
  switch (b) {
    case Basis::O:
      return "O";
    case Basis::Ideal:
      return "IDEAL";
    case Basis::Omega:
      return "OMEGA";
    case Basis::OmegaBoundary:
      return "OMEGA_BOUNDARY";
  }
  return "?";
}

Basis parse_basis(std::string_view name) {
  for (Basis b : {Basis::O, Basis::Ideal, Basis::Omega, Basis::OmegaBoundary})
    if (basis_name(b) == name) return b;
  throw ConfigError("unknown basis: " + std::string(name));
}

Integer integer_determinant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

SchubertRing::SchubertRing(std::shared_ptr<const KtModel> model) : model_(std::move(model)) {}

int SchubertRing::n_exponent(const WeylElement& u, const WeylElement& v, const WeylElement& w) const {
  return codim(w) - codim(u) - codim(v);
}

EquivClass SchubertRing::product(const WeylElement& u, const WeylElement& v) const {
  return model_->kmul(model_->schubert_class(u), model_->schubert_class(v));
}

std::vector<Integer> SchubertRing::structure_constants(const WeylElement& u, const WeylElement& v) const {
  return model_->expand(product(u, v)).specialized;
}

KClass SchubertRing::ideal_sheaf_class(const WeylElement& w) const {
  const auto& g = group();
  KClass out{Basis::O, std::vector<Integer>(g.size(), 0), std::nullopt};
  for (const auto& v : g.elements())
    if (g.bruhat_leq(v, w)) out.coeffs[v.index] = parity_sign(w.length - v.length);
  return out;
}

EquivClass SchubertRing::opposite_ideal_class(const WeylElement& w) const {
  const auto& g = group();
  EquivClass out = model_->zero();
  for (const auto& v : g.elements()) {
    if (!g.bruhat_leq(w, v)) continue;
    const EquivClass& opp = model_->opposite_schubert_class(v);
    out = parity_sign(v.length - w.length) > 0 ? model_->kadd(out, opp) : model_->ksub(out, opp);
  }
  return out;
}

EquivClass SchubertRing::omega_equiv(const WeylElement& w) const {
  EquivClass f = model_->kmul(model_->kdual(model_->schubert_class(w)), model_->omega_x());
  return parity_sign(codim(w)) > 0 ? f : model_->kscale(f, -1);
}

EquivClass SchubertRing::omega_boundary_equiv(const WeylElement& w) const {
  const EquivClass ideal = to_equiv(ideal_sheaf_class(w));
  EquivClass f = model_->kmul(model_->kdual(ideal), model_->omega_x());
  return parity_sign(codim(w)) > 0 ? f : model_->kscale(f, -1);
}

KClass SchubertRing::omega_class(const WeylElement& w) const { return expand_o(omega_equiv(w)); }

KClass SchubertRing::omega_boundary_class(const WeylElement& w) const {
  return expand_o(omega_boundary_equiv(w));
}

EquivClass SchubertRing::basis_element(Basis b, const WeylElement& w) const {
  switch (b) {
    case Basis::O:
      return model_->schubert_class(w);
    case Basis::Ideal:
      return to_equiv(ideal_sheaf_class(w));
    case Basis::Omega:
      return omega_equiv(w);
    case Basis::OmegaBoundary:
      return omega_boundary_equiv(w);
  }
  throw ConfigError("unknown basis");
}

const IntMatrix& SchubertRing::basis_matrix(Basis b) const {
  const auto slot = static_cast<std::size_t>(b);
  std::call_once(matrix_once_[slot], [&] {
    const auto& g = group();
    IntMatrix m(g.size());
    for (const auto& w : g.elements()) {
      if (b == Basis::Ideal) m[w.index] = ideal_sheaf_class(w).coeffs;
      else if (b == Basis::O) {
        m[w.index].assign(g.size(), 0);
        m[w.index][w.index] = 1;
      } else {
        m[w.index] = model_->expand(basis_element(b, w)).specialized;
      }
    }
    matrices_[slot] = std::move(m);
  });
  return matrices_[slot];
}

KClass SchubertRing::change_basis(const KClass& c, Basis target) const {
  if (c.parabolic) throw ConfigError("basis changes are defined on G/B classes only");
  if (c.basis == target) return c;
  const std::size_t n = group().size();
  // To O-coordinates: o = sum_u c_u M_source[u].
  std::vector<Integer> o(n, 0);
  if (c.basis == Basis::O) {
    o = c.coeffs;
  } else {
    const IntMatrix& src = basis_matrix(c.basis);
    for (std::size_t u = 0; u < n; ++u)
      if (c.coeffs[u] != 0)
        for (std::size_t w = 0; w < n; ++w) o[w] += c.coeffs[u] * src[u][w];
  }
  KClass out{target, std::vector<Integer>(n, 0), std::nullopt};
  if (target == Basis::O) {
    out.coeffs = std::move(o);
    return out;
  }
  // Unitriangular solve: row u of M is supported on w <= u, diagonal +-1.
  const IntMatrix& m = basis_matrix(target);
  for (std::size_t w = n; w-- > 0;) {
    if (o[w] == 0) continue;
    const Integer& d = m[w][w];
    if (d != 1 && d != -1) throw IntegrityError("basis matrix diagonal is not a unit");
    const Integer x = o[w] * d;
    for (std::size_t v = 0; v <= w; ++v) o[v] -= x * m[w][v];
    for (std::size_t v = w + 1; v < n; ++v)
      if (m[w][v] != 0) throw IntegrityError("basis matrix is not triangular");
    out.coeffs[w] = x;
  }
  return out;
}

EquivClass SchubertRing::to_equiv(const KClass& c) const {
  if (c.parabolic) throw ConfigError("model classes are defined on G/B only");
  const KClass o = change_basis(c, Basis::O);
  return model_->combine(o.coeffs);
}

KClass SchubertRing::expand_o(const EquivClass& f) const {
  return KClass{Basis::O, model_->expand(f).specialized, std::nullopt};
}

Integer SchubertRing::pairing(const EquivClass& a, const EquivClass& b) const {
  return model_->euler_characteristic(model_->kmul(a, b));
}

Integer SchubertRing::pairing(const KClass& a, const KClass& b) const {
  return pairing(to_equiv(a), to_equiv(b));
}

std::vector<Integer> SchubertRing::extract_coefficients_via_pairing(const EquivClass& f) const {
  const auto& g = group();
  std::vector<Integer> out(g.size(), 0);
  for (const auto& w : g.elements()) out[w.index] = pairing(f, opposite_ideal_class(w));
  const auto expanded = model_->expand(f).specialized;
  for (const auto& w : g.elements())
    if (out[w.index] != expanded[w.index])
      throw RouteMismatch("coefficient at " + WeylGroup::word_string(w) + ": pairing gives " +
                          out[w.index].str() + ", expansion gives " + expanded[w.index].str());
  return out;
}

KClass SchubertRing::richardson_class(const WeylElement& v, const WeylElement& w) const {
  return expand_o(model_->kmul(model_->opposite_schubert_class(v), model_->schubert_class(w)));
}

EquivClass SchubertRing::richardson_omega_equiv(const WeylElement& v, const WeylElement& w) const {
  const auto& m = *model_;
  const EquivClass opp = m.kmul(m.kdual(m.opposite_schubert_class(v)), m.omega_x());
  const EquivClass omega_opp = parity_sign(v.length) > 0 ? opp : m.kscale(opp, -1);
  const EquivClass inverse_omega_x = m.line_bundle_class(2 * m.datum().rho());
  return m.kmul(m.kmul(omega_opp, omega_equiv(w)), inverse_omega_x);
}

std::vector<Integer> SchubertRing::line_bundle_coeffs(const WeylElement& v, const Weight& lambda) const {
  return model_->expand(model_->kmul(model_->line_bundle_class(lambda), model_->schubert_class(v)))
      .specialized;
}

LineTable SchubertRing::line_bundle_table(const Weight& lambda, unsigned jobs) const {
  const auto& g = group();
  LineTable t(g.size());
  parallel_for(g.size(), jobs, [&](std::size_t v) { t[v] = line_bundle_coeffs(g[v], lambda); });
  return t;
}

std::vector<Integer> SchubertRing::parabolic_structure_constants(const ParabolicData& p,
                                                                 const WeylElement& u,
                                                                 const WeylElement& v) const {
  const auto& g = group();
  if (!p.position(u) || !p.position(v))
    throw ConfigError("parabolic structure constants need u, v in W^P");
  const WeylElement& wop = p.longest_in_parabolic;
  const auto full = structure_constants(g.multiply(u, wop), g.multiply(v, wop));
  std::vector<Integer> out(p.min_reps.size(), 0);
  for (const auto& z : g.elements()) {
    if (full[z.index] == 0) continue;
    const WeylElement& rep = g.multiply(z, wop);
    const auto pos = p.position(rep);
    if (!pos || g.multiply(rep, wop) != z || rep.length + wop.length != z.length)
      throw OutsideParabolicImage(WeylGroup::word_string(z) + " has coefficient " + full[z.index].str());
    out[*pos] = full[z.index];
  }
  return out;
}

}  // namespace kflag
