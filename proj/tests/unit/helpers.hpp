#pragma once

#include <map>
#include <memory>
#include <random>

#include "kflag/schubert_ring.hpp"

namespace kflag::testing {

struct Fixture {
  std::shared_ptr<const WeylGroup> group;
  std::shared_ptr<const KtModel> model;
  std::shared_ptr<const SchubertRing> ring;
};

inline Fixture make_fixture(char type, int rank) {
  Fixture f;
  f.group = std::make_shared<const WeylGroup>(build_root_datum(type, rank));
  f.model = std::make_shared<const KtModel>(f.group);
  f.ring = std::make_shared<const SchubertRing>(f.model);
  return f;
}

inline const Fixture& cached_fixture(char type, int rank) {
  static std::map<std::pair<char, int>, Fixture> cache;
  auto it = cache.find({type, rank});
  if (it == cache.end()) it = cache.emplace(std::pair{type, rank}, make_fixture(type, rank)).first;
  return it->second;
}

inline std::vector<std::pair<char, int>> small_types() { return {{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'G', 2}}; }

/// Random small-weight Laurent polynomial.
inline LaurentPoly random_poly(std::mt19937& rng, int rank, int terms = 4, int spread = 3) {
  std::uniform_int_distribution<int> e(-spread, spread);
  std::uniform_int_distribution<int> c(-5, 5);
  std::vector<LaurentPoly::Term> ts;
  for (int k = 0; k < terms; ++k) {
    Weight w(rank);
    for (int i = 0; i < rank; ++i) w[i] = e(rng);
    ts.emplace_back(w, Integer(c(rng)));
  }
  return LaurentPoly::from_terms(std::move(ts));
}

/// A random class in the R(T)-span of the Schubert classes: a combination of
/// Schubert classes with random Laurent coefficients, times a random line bundle.
inline EquivClass random_class(std::mt19937& rng, const KtModel& m) {
  const auto& g = m.group();
  EquivClass f = m.zero();
  std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
  for (int k = 0; k < 3; ++k) {
    const LaurentPoly c = random_poly(rng, g.rank(), 2, 2);
    const EquivClass& psi = m.schubert_class(g[pick(rng)]);
    for (std::size_t v = 0; v < g.size(); ++v) f.at[v] += c * psi.at[v];
  }
  std::uniform_int_distribution<int> lw(-2, 2);
  Weight lambda(g.rank());
  for (int i = 0; i < g.rank(); ++i) lambda[i] = lw(rng);
  return m.kmul(f, m.line_bundle_class(lambda));
}

}  // namespace kflag::testing
