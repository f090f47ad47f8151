#include "kflag/kt_model.hpp"

#include "kflag/error.hpp"

namespace kflag {

namespace {

bool cochar_separates_roots(const RootDatum& d, const std::vector<long long>& k) {
  for (const auto& a : d.positive_roots()) {
    long long s = 0;
    for (int i = 0; i < d.rank(); ++i) s += a[i] * k[static_cast<std::size_t>(i)];
    if (s == 0) return false;
  }
  return true;
}

}  // namespace

KtModel::KtModel(std::shared_ptr<const WeylGroup> group) : group_(std::move(group)) {
  precompute();
  build_schubert_table();
  build_opposite_table();
}

KtModel::KtModel(std::shared_ptr<const WeylGroup> group, std::vector<EquivClass> table)
    : group_(std::move(group)) {
  precompute();
  const auto& g = *group_;
  if (table.size() != g.size()) throw IntegrityError("Schubert table has wrong number of classes");
  for (const auto& w : g.elements()) {
    const EquivClass& psi = table[w.index];
    if (psi.size() != g.size()) throw IntegrityError("Schubert class has wrong number of points");
    for (const auto& v : g.elements()) {
      for (const auto& [e, c] : psi[v].terms())
        if (e.rank() != rank()) throw IntegrityError("exponent rank mismatch in Schubert table");
      if (!psi[v].is_zero() && !g.bruhat_leq(v, w))
        throw IntegrityError("Schubert class " + WeylGroup::word_string(w) +
                             " is supported outside its Bruhat interval");
    }
    // psi_w(w) = prod over alpha > 0 with w(alpha) > 0 of (1 - e^{w(alpha)})
    LaurentPoly diag = LaurentPoly::constant(rank(), 1);
    for (const auto& a : datum().positive_roots()) {
      const Weight b = g.apply(w, a);
      if (datum().is_positive_root(b)) diag = diag * LaurentPoly::one_minus(b);
    }
    if (!(psi[w] == diag))
      throw IntegrityError("Schubert class " + WeylGroup::word_string(w) + " has a wrong diagonal entry");
  }
  schubert_ = std::move(table);
  for (const auto& w : g.elements())
    if (euler_characteristic(schubert_[w.index]) != 1)
      throw IntegrityError("Schubert class " + WeylGroup::word_string(w) +
                           " does not have Euler characteristic 1");
  build_opposite_table();
}

void KtModel::precompute() {
  const auto& g = *group_;
  const auto& d = g.datum();
  simple_images_.resize(g.size());
  for (const auto& v : g.elements()) {
    auto& row = simple_images_[v.index];
    row.reserve(static_cast<std::size_t>(rank()));
    for (int i = 0; i < rank(); ++i) row.push_back(g.apply(v, d.simple_root(i)));
  }

  cochar_ = d.principal_cocharacter();
  if (!cochar_separates_roots(d, cochar_)) {
    // Fallback for degenerate input: k_i = B^(i+1) with a growing base.
    for (long long base = 2 * static_cast<long long>(d.positive_roots().size()) + 1;; base *= 2) {
      long long p = 1;
      for (auto& k : cochar_) k = (p *= base);
      if (cochar_separates_roots(d, cochar_)) break;
      if (base > (1LL << 20)) throw IntegrityError("no cocharacter separates the roots");
    }
  }

  lefschetz_den_.resize(g.size());
  for (const auto& v : g.elements()) {
    LaurentPoly den = LaurentPoly::constant(rank(), 1);
    for (const auto& a : d.positive_roots()) den = den * LaurentPoly::one_minus(g.apply(v, a));
    lefschetz_den_[v.index] = lp_specialize_cochar(den, cochar_);
  }
}

void KtModel::build_schubert_table() {
  const auto& g = *group_;
  schubert_.assign(g.size(), zero());
  schubert_[0] = point_class();
  for (const auto& w : g.elements()) {
    if (w.index == 0) continue;
    int i = 0;
    while (!g.is_right_descent(w, i)) ++i;
    schubert_[w.index] = demazure(i, schubert_[g.right_mul(w, i).index]);
  }
}

void KtModel::build_opposite_table() {
  const auto& g = *group_;
  opposite_.clear();
  opposite_.reserve(g.size());
  for (const auto& w : g.elements())
    opposite_.push_back(translate_by_longest(schubert_[g.multiply(g.longest(), w).index]));
}

LaurentPoly lp_weyl_act(const WeylGroup& g, const WeylElement& w, const LaurentPoly& a) {
  if (w.length == 0) return a;
  return lp_map_exponents(a, [&](const Weight& x) { return g.apply(w, x); });
}

EquivClass KtModel::zero() const { return EquivClass{std::vector<LaurentPoly>(group_->size())}; }

EquivClass KtModel::unit() const {
  return EquivClass{std::vector<LaurentPoly>(group_->size(), LaurentPoly::constant(rank(), 1))};
}

EquivClass KtModel::point_class() const {
  EquivClass f = zero();
  LaurentPoly p = LaurentPoly::constant(rank(), 1);
  for (const auto& a : datum().positive_roots()) p = p * LaurentPoly::one_minus(a);
  f.at[0] = std::move(p);
  return f;
}

EquivClass KtModel::demazure(int i, const EquivClass& f) const {
  const auto& g = *group_;
  EquivClass out = zero();
  for (const auto& v : g.elements()) {
    const Weight& beta = simple_images_[v.index][static_cast<std::size_t>(i)];
    const LaurentPoly& here = f[v];
    const LaurentPoly& there = f[g.right_mul(v, i)];
    LaurentPoly num = here - there.shifted(beta);
    if (num.is_zero()) continue;
    out[v] = lp_exact_div(num, LaurentPoly::one_minus(beta));
  }
  return out;
}

EquivClass KtModel::schubert_class_along(std::span<const int> word) const {
  EquivClass f = point_class();
  for (int i : word) f = demazure(i, f);
  return f;
}

EquivClass KtModel::line_bundle_class(const Weight& lambda) const {
  if (lambda.rank() != rank()) throw ConfigError("weight has wrong length");
  EquivClass f = zero();
  for (const auto& v : group_->elements()) f[v] = LaurentPoly::monomial(-group_->apply(v, lambda));
  return f;
}

EquivClass KtModel::omega_x() const { return line_bundle_class(-(2 * datum().rho())); }

EquivClass KtModel::kadd(const EquivClass& a, const EquivClass& b) const {
  EquivClass out = a;
  for (std::size_t k = 0; k < out.size(); ++k) out.at[k] += b.at[k];
  return out;
}

EquivClass KtModel::ksub(const EquivClass& a, const EquivClass& b) const {
  EquivClass out = a;
  for (std::size_t k = 0; k < out.size(); ++k) out.at[k] -= b.at[k];
  return out;
}

EquivClass KtModel::kscale(const EquivClass& a, const Integer& k) const {
  EquivClass out = a;
  for (auto& p : out.at) p *= k;
  return out;
}

EquivClass KtModel::kmul(const EquivClass& a, const EquivClass& b) const {
  EquivClass out = zero();
  for (std::size_t k = 0; k < out.size(); ++k)
    if (!a.at[k].is_zero() && !b.at[k].is_zero()) out.at[k] = a.at[k] * b.at[k];
  return out;
}

EquivClass KtModel::kdual(const EquivClass& a) const {
  EquivClass out = zero();
  for (std::size_t k = 0; k < out.size(); ++k) out.at[k] = lp_involute(a.at[k]);
  return out;
}

EquivClass KtModel::translate_by_longest(const EquivClass& a) const {
  const auto& g = *group_;
  const WeylElement& wo = g.longest();
  EquivClass out = zero();
  for (const auto& v : g.elements()) out[v] = lp_weyl_act(g, wo, a[g.multiply(wo, v)]);
  return out;
}

Integer KtModel::euler_characteristic(const EquivClass& f) const {
  std::vector<std::pair<UniPoly, UniPoly>> terms;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f.at[k].is_zero()) continue;
    terms.emplace_back(lp_specialize_cochar(f.at[k], cochar_), lefschetz_den_[k]);
  }
  return unirational_sum_and_evaluate_at_one(terms);
}

ExpansionResult KtModel::expand(const EquivClass& f) const {
  const auto& g = *group_;
  const std::size_t n = g.size();
  ExpansionResult res;
  res.coeffs.assign(n, LaurentPoly{});
  res.specialized.assign(n, 0);
  EquivClass residual = f;
  for (std::size_t w = n; w-- > 0;) {
    if (residual.at[w].is_zero()) continue;
    const EquivClass& psi = schubert_[w];
    LaurentPoly c = lp_exact_div(residual.at[w], psi.at[w]);
    for (std::size_t v = 0; v < n; ++v)
      if (!psi.at[v].is_zero()) residual.at[v] -= c * psi.at[v];
    res.specialized[w] = lp_eval_at_one(c);
    res.coeffs[w] = std::move(c);
  }
  for (std::size_t v = 0; v < n; ++v)
    if (!residual.at[v].is_zero())
      throw NonzeroResidual("at fixed point " + WeylGroup::word_string(g[v]) + ": " +
                            residual.at[v].str());
  return res;
}

EquivClass KtModel::combine(std::span<const Integer> coeffs) const {
  EquivClass out = zero();
  for (std::size_t w = 0; w < coeffs.size(); ++w) {
    if (coeffs[w] == 0) continue;
    const EquivClass& psi = schubert_[w];
    for (std::size_t v = 0; v < out.size(); ++v)
      if (!psi.at[v].is_zero()) out.at[v] += psi.at[v] * coeffs[w];
  }
  return out;
}

}  // namespace kflag
