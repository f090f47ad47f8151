#include "kflag/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <tuple>

#include "kflag/error.hpp"
#include "kflag/parallel.hpp"

namespace kflag {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void sort_violations(std::vector<SignViolation>& v) {
  std::sort(v.begin(), v.end(), [](const SignViolation& a, const SignViolation& b) {
    return std::tie(a.u, a.v, a.w, a.check) < std::tie(b.u, b.v, b.w, b.check);
  });
}

// Lazily computed coefficient tables shared by several suite runs. Only the
// orchestrating thread touches the maps; table contents are built in parallel.
class Tables {
 public:
  Tables(const SchubertRing& ring, unsigned jobs) : ring_(ring), jobs_(jobs) {}

  const LineTable& line(const Weight& lambda) {
    auto it = line_.find(lambda);
    if (it == line_.end()) it = line_.emplace(lambda, ring_.line_bundle_table(lambda, jobs_)).first;
    return it->second;
  }

  // c_{u,x}^w for fixed u, indexed [x][w].
  const LineTable& products(const WeylElement& u) {
    auto it = products_.find(u.index);
    if (it == products_.end()) {
      const auto& g = ring_.group();
      LineTable t(g.size());
      parallel_for(g.size(), jobs_, [&](std::size_t x) { t[x] = ring_.structure_constants(u, g[x]); });
      it = products_.emplace(u.index, std::move(t)).first;
    }
    return it->second;
  }

 private:
  const SchubertRing& ring_;
  unsigned jobs_;
  std::map<Weight, LineTable> line_;
  std::map<std::size_t, LineTable> products_;
};

class CheckBuilder {
 public:
  explicit CheckBuilder(std::string name, bool diagnostic = false) {
    check_.name = std::move(name);
    check_.diagnostic = diagnostic;
  }

  void compare(const Integer& lhs, const Integer& rhs, std::size_t v, std::size_t w,
               const Weight& weight, int index = -1) {
    ++check_.checked;
    if (lhs == rhs) return;
    fail(lhs, rhs, v, w, weight, index);
  }

  void fail(const Integer& lhs, const Integer& rhs, std::size_t v, std::size_t w, const Weight& weight,
            int index = -1) {
    ++check_.failed;
    if (check_.violations.size() < kMaxListedViolations)
      check_.violations.push_back(IdentityViolation{v, w, index, weight, lhs, rhs});
  }

  void count() { ++check_.checked; }

  IdentityCheck take() { return std::move(check_); }

 private:
  IdentityCheck check_;
};

LineReport run_suite(const SchubertRing& ring, Tables& tables, const Weight& lambda, const Weight& mu) {
  const auto t0 = Clock::now();
  const auto& g = ring.group();
  const auto& datum = g.datum();
  const std::size_t n = g.size();
  const WeylElement& wo = g.longest();
  const int r = datum.rank();
  const auto flip = [&](std::size_t x) { return g.multiply(wo, g[x]).index; };

  LineReport report;
  report.group = datum.label();
  report.lambda = lambda;
  report.mu = mu;

  const Weight sum = lambda + mu;
  std::vector<Weight> tri_weights{lambda, mu, sum};
  std::vector<Weight> fundamentals;
  for (int i = 0; i < r; ++i) fundamentals.push_back(datum.fundamental_weight(i));

  {
    CheckBuilder c("triangularity");
    for (const Weight& l : tri_weights) {
      const LineTable& t = tables.line(l);
      for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w = 0; w < n; ++w) {
          if (v == w) c.compare(t[v][w], 1, v, w, l);
          else if (!g.bruhat_leq(g[w], g[v])) c.compare(t[v][w], 0, v, w, l);
        }
    }
    report.checks.push_back(c.take());
  }

  {
    CheckBuilder c("duality");
    CheckBuilder printed("duality_as_printed", true);
    for (const Weight& l : {lambda, mu}) {
      const LineTable& neg = tables.line(-l);
      const LineTable& pos = tables.line(l);
      const LineTable& twisted = tables.line(-g.apply(wo, l));
      for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w = 0; w < n; ++w) {
          const int sign = parity_sign(g[v].length - g[w].length);
          c.compare(neg[v][w], sign * pos[flip(w)][flip(v)], v, w, l);
          printed.compare(neg[v][w], twisted[flip(w)][flip(v)], v, w, l);
        }
    }
    report.checks.push_back(c.take());
    report.checks.push_back(printed.take());
  }

  {
    CheckBuilder c("additivity");
    const LineTable& tl = tables.line(lambda);
    const LineTable& tm = tables.line(mu);
    const LineTable& ts = tables.line(sum);
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t w = 0; w < n; ++w) {
        Integer rhs = 0;
        for (std::size_t x = 0; x < n; ++x)
          if (g.bruhat_leq(g[w], g[x]) && g.bruhat_leq(g[x], g[v])) rhs += tl[v][x] * tm[x][w];
        c.compare(ts[v][w], rhs, v, w, sum);
      }
    report.checks.push_back(c.take());
  }

  {
    CheckBuilder neg("omega_lemma_negative");
    CheckBuilder pos("omega_lemma_positive");
    CheckBuilder printed("omega_lemma_positive_as_printed", true);
    for (int i = 0; i < r; ++i) {
      const Weight& om = fundamentals[static_cast<std::size_t>(i)];
      const LineTable& tneg = tables.line(-om);
      const LineTable& tpos = tables.line(om);
      const LineTable& right = tables.products(g.right_mul(wo, i));  // w_o s_i
      const LineTable& left = tables.products(g.left_mul(i, wo));    // s_i w_o
      for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w = 0; w < n; ++w) {
          if (v == w) continue;
          neg.compare(tneg[v][w], -right[v][w], v, w, -om, i);
          const int sign = parity_sign(g[v].length - g[w].length - 1);
          pos.compare(tpos[v][w], sign * right[flip(w)][flip(v)], v, w, om, i);
          printed.compare(tpos[v][w], sign * left[flip(v)][flip(w)], v, w, om, i);
        }
    }
    report.checks.push_back(neg.take());
    report.checks.push_back(pos.take());
    report.checks.push_back(printed.take());
  }

  {
    CheckBuilder c("dominant_nonnegative");
    std::vector<Weight> ws = tri_weights;
    ws.insert(ws.end(), fundamentals.begin(), fundamentals.end());
    for (const Weight& l : ws) {
      if (!l.is_dominant()) continue;
      const LineTable& t = tables.line(l);
      for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w = 0; w < n; ++w) {
          c.count();
          if (t[v][w] < 0) c.fail(t[v][w], 0, v, w, l);
        }
    }
    report.checks.push_back(c.take());
  }

  {
    CheckBuilder c("chevalley");
    const auto& model = ring.model();
    for (int i = 0; i < r; ++i) {
      const Weight om = fundamentals[static_cast<std::size_t>(i)];
      const auto lhs = model.expand(model.line_bundle_class(-om)).specialized;
      std::vector<Integer> rhs(n, 0);
      rhs[wo.index] += 1;
      rhs[g.right_mul(wo, i).index] -= 1;
      for (std::size_t w = 0; w < n; ++w) c.compare(lhs[w], rhs[w], wo.index, w, -om, i);
    }
    report.checks.push_back(c.take());
  }

  report.elapsed_seconds = seconds_since(t0);
  return report;
}

}  // namespace

SignReport verify_buch_signs(const SchubertRing& ring, const std::optional<ParabolicData>& parabolic,
                             unsigned jobs) {
  const auto t0 = Clock::now();
  const auto& g = ring.group();
  std::vector<WeylElement> elems;
  int dim = ring.dim();
  if (parabolic) {
    elems = parabolic->min_reps;
    dim -= parabolic->longest_in_parabolic.length;
  } else {
    elems.assign(g.elements().begin(), g.elements().end());
  }
  const std::size_t n = elems.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) pairs.emplace_back(a, b);

  std::vector<std::vector<SignViolation>> found(pairs.size());
  parallel_for(pairs.size(), jobs, [&](std::size_t k) {
    const auto [a, b] = pairs[k];
    const WeylElement& u = elems[a];
    const WeylElement& v = elems[b];
    const auto c = parabolic ? ring.parabolic_structure_constants(*parabolic, u, v)
                             : ring.structure_constants(u, v);
    for (std::size_t j = 0; j < n; ++j) {
      const WeylElement& w = elems[j];
      const long exp = (dim - w.length) - (dim - u.length) - (dim - v.length);
      const Integer& cw = c[j];
      std::string what;
      if (exp < 0 && cw != 0) what = "vanishing";
      else if (parity_sign(exp) * cw < 0) what = "sign";
      if (what.empty()) continue;
      found[k].push_back(SignViolation{what, u.index, v.index, w.index, cw, exp});
      if (a != b) found[k].push_back(SignViolation{what, v.index, u.index, w.index, cw, exp});
    }
  });

  SignReport report;
  report.group = g.datum().label();
  report.check = parabolic ? "buch_signs_parabolic" : "buch_signs";
  report.pairs_checked = pairs.size();
  report.triples_checked = static_cast<std::uint64_t>(n) * n * n;
  for (auto& f : found) report.violations.insert(report.violations.end(), f.begin(), f.end());
  sort_violations(report.violations);
  report.elapsed_seconds = seconds_since(t0);
  return report;
}

SignReport verify_theorem_signs_richardson(const SchubertRing& ring, unsigned jobs) {
  const auto t0 = Clock::now();
  const auto& g = ring.group();
  const std::size_t n = g.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w)
      if (g.bruhat_leq(g[v], g[w])) pairs.emplace_back(v, w);

  // Build the omega basis matrix once before the workers share it.
  (void)ring.basis_matrix(Basis::Omega);

  std::vector<std::vector<SignViolation>> found(pairs.size());
  parallel_for(pairs.size(), jobs, [&](std::size_t k) {
    const WeylElement& v = g[pairs[k].first];
    const WeylElement& w = g[pairs[k].second];
    const int codim_y = ring.dim() - (w.length - v.length);
    const KClass y = ring.richardson_class(v, w);
    const KClass omega = ring.change_basis(ring.expand_o(ring.richardson_omega_equiv(v, w)), Basis::Omega);
    for (std::size_t u = 0; u < n; ++u) {
      const long exp = ring.codim(g[u]) - codim_y;
      if (parity_sign(exp) * y.coeffs[u] < 0)
        found[k].push_back(SignViolation{"sign", v.index, w.index, u, y.coeffs[u], exp});
      if (omega.coeffs[u] < 0)
        found[k].push_back(SignViolation{"omega", v.index, w.index, u, omega.coeffs[u], 0});
    }
  });

  SignReport report;
  report.group = g.datum().label();
  report.check = "richardson_signs";
  report.pairs_checked = pairs.size();
  report.triples_checked = static_cast<std::uint64_t>(pairs.size()) * n;
  for (auto& f : found) report.violations.insert(report.violations.end(), f.begin(), f.end());
  sort_violations(report.violations);
  report.elapsed_seconds = seconds_since(t0);
  return report;
}

bool LineReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const IdentityCheck& c) { return c.diagnostic || c.failed == 0; });
}

const IdentityCheck& LineReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw ConfigError("no identity check named " + name);
}

std::vector<LineReport> verify_line_identities(const SchubertRing& ring,
                                               const std::vector<std::pair<Weight, Weight>>& pairs,
                                               unsigned jobs) {
  const int r = ring.group().rank();
  for (const auto& [l, m] : pairs)
    if (l.rank() != r || m.rank() != r) throw ConfigError("weight length does not match the rank");
  Tables tables(ring, jobs);
  std::vector<LineReport> out;
  out.reserve(pairs.size());
  for (const auto& [l, m] : pairs) out.push_back(run_suite(ring, tables, l, m));
  return out;
}

LineReport verify_line_identities(const SchubertRing& ring, const Weight& lambda, const Weight& mu,
                                  unsigned jobs) {
  return verify_line_identities(ring, {{lambda, mu}}, jobs).front();
}

std::vector<Weight> standard_line_weights(const RootDatum& datum) {
  std::vector<Weight> out;
  for (int i = 0; i < datum.rank(); ++i) out.push_back(datum.fundamental_weight(i));
  for (int i = 0; i < datum.rank(); ++i) out.push_back(-datum.fundamental_weight(i));
  out.push_back(datum.rho());
  return out;
}

std::vector<std::pair<Weight, Weight>> standard_line_pairs(const RootDatum& datum) {
  const auto ws = standard_line_weights(datum);
  std::vector<std::pair<Weight, Weight>> out;
  for (const auto& l : ws)
    for (const auto& m : ws) out.emplace_back(l, m);
  return out;
}

}  // namespace kflag
