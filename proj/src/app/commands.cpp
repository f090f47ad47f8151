#include "kflag/app/commands.hpp"

#include <chrono>
#include <cstdlib>
#include <sstream>

#include "kflag/app/cache.hpp"
#include "kflag/error.hpp"

namespace kflag::app {

using nlohmann::json;

namespace {

std::int64_t millis(double seconds) { return static_cast<std::int64_t>(seconds * 1000.0 + 0.5); }

std::optional<std::filesystem::path> cache_dir_for(const JobConfig& c) {
  if (c.cache_dir) return std::filesystem::path(*c.cache_dir);
  if (const char* env = std::getenv("KFLAG_CACHE_DIR"); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

json subset_json(const std::vector<int>& subset) {
  json j = json::array();
  for (int i : subset) j.push_back(i + 1);
  return j;
}

const std::vector<int>& required(const std::optional<std::vector<int>>& x, const char* flag) {
  if (!x) throw ConfigError(std::string("missing required --") + flag);
  return *x;
}

}  // namespace

Session Session::open(const JobConfig& c, bool with_model) {
  Session s;
  s.group = std::make_shared<const WeylGroup>(make_root_datum(c), c.max_weyl);
  if (with_model) {
    s.model = load_or_build_model(s.group, cache_dir_for(c), s.warnings);
    s.ring = std::make_shared<const SchubertRing>(s.model);
  }
  return s;
}

json describe_json(const Session& s, const JobConfig& c) {
  const WeylGroup& g = *s.group;
  const RootDatum& d = g.datum();
  const auto subset = resolve_subset(d, c.parabolic);
  const ParabolicData p = g.parabolic(subset);
  json j;
  j["group"] = d.label();
  j["rank"] = d.rank();
  j["cartan"] = d.cartan();
  j["positive_roots"] = d.positive_roots().size();
  j["weyl_order"] = g.size();
  j["parabolic"] = subset_json(subset);
  j["coset_count"] = p.min_reps.size();
  j["dim"] = static_cast<int>(d.positive_roots().size()) - p.longest_in_parabolic.length;
  j["longest"] = word_json(g.longest());
  j["longest_in_parabolic"] = word_json(p.longest_in_parabolic);
  return j;
}

json constants_json(const Session& s, const JobConfig& c) {
  const WeylGroup& g = *s.group;
  const SchubertRing& ring = *s.ring;
  const WeylElement& u = resolve_word(g, required(c.u, "u"));
  const WeylElement& v = resolve_word(g, required(c.v, "v"));
  const auto subset = resolve_subset(g.datum(), c.parabolic);
  json j;
  j["group"] = g.datum().label();
  j["parabolic"] = subset_json(subset);
  j["u"] = word_json(u);
  j["v"] = word_json(v);
  json rows = json::array();
  if (subset.empty()) {
    const auto cs = ring.structure_constants(u, v);
    for (const auto& w : g.elements())
      if (cs[w.index] != 0)
        rows.push_back({{"w", word_json(w)}, {"c", integer_json(cs[w.index])}, {"N", ring.n_exponent(u, v, w)}});
  } else {
    const ParabolicData p = g.parabolic(subset);
    if (!p.position(u) || !p.position(v))
      throw ConfigError("u and v must be minimal coset representatives for the parabolic subset");
    const int dim = ring.dim() - p.longest_in_parabolic.length;
    const auto cs = ring.parabolic_structure_constants(p, u, v);
    for (std::size_t k = 0; k < p.min_reps.size(); ++k) {
      if (cs[k] == 0) continue;
      const WeylElement& w = p.min_reps[k];
      const int n = (dim - w.length) - (dim - u.length) - (dim - v.length);
      rows.push_back({{"w", word_json(w)}, {"c", integer_json(cs[k])}, {"N", n}});
    }
  }
  j["constants"] = rows;
  return j;
}

json line_coeffs_json(const Session& s, const JobConfig& c) {
  const WeylGroup& g = *s.group;
  if (!c.parabolic.empty()) throw ConfigError("line-coeffs is defined on the full flag variety only");
  const WeylElement& v = resolve_word(g, required(c.v, "v"));
  const Weight lambda = resolve_weight(g.datum(), required(c.lambda, "lambda"));
  const auto cs = s.ring->line_bundle_coeffs(v, lambda);
  json j;
  j["group"] = g.datum().label();
  j["v"] = word_json(v);
  j["lambda"] = weight_json(lambda);
  j["dominant"] = lambda.is_dominant();
  json rows = json::array();
  bool nonnegative = true;
  for (const auto& w : g.elements()) {
    if (cs[w.index] == 0) continue;
    nonnegative = nonnegative && cs[w.index] > 0;
    rows.push_back({{"w", word_json(w)}, {"c", integer_json(cs[w.index])}});
  }
  j["coeffs"] = rows;
  if (lambda.is_dominant()) j["nonnegative"] = nonnegative;
  return j;
}

json richardson_json(const Session& s, const JobConfig& c) {
  const WeylGroup& g = *s.group;
  const SchubertRing& ring = *s.ring;
  if (!c.parabolic.empty()) throw ConfigError("richardson is defined on the full flag variety only");
  const WeylElement& u = resolve_word(g, required(c.u, "u"));
  const WeylElement& v = resolve_word(g, required(c.v, "v"));
  json j;
  j["group"] = g.datum().label();
  j["u"] = word_json(u);
  j["v"] = word_json(v);
  const bool nonempty = g.bruhat_leq(u, v);
  j["nonempty"] = nonempty;
  const KClass y = ring.richardson_class(u, v);
  json cls = json::array();
  bool ok = true;
  if (nonempty) {
    const int codim_y = ring.dim() - (v.length - u.length);
    j["dim"] = v.length - u.length;
    j["codim"] = codim_y;
    for (const auto& w : g.elements()) {
      const Integer& cw = y.coeffs[w.index];
      if (cw == 0) continue;
      const int e = ring.codim(w) - codim_y;
      ok = ok && parity_sign(e) * cw >= 0;
      cls.push_back({{"w", word_json(w)}, {"c", integer_json(cw)}, {"exponent", e}});
    }
    const KClass om = ring.change_basis(ring.expand_o(ring.richardson_omega_equiv(u, v)), Basis::Omega);
    json omega = json::array();
    for (const auto& w : g.elements()) {
      const Integer& cw = om.coeffs[w.index];
      if (cw == 0) continue;
      ok = ok && cw > 0;
      omega.push_back({{"w", word_json(w)}, {"c", integer_json(cw)}});
    }
    j["omega"] = omega;
    j["euler_characteristic"] = integer_json(ring.model().euler_characteristic(ring.to_equiv(y)));
  }
  j["class"] = cls;
  j["ok"] = ok;
  return j;
}

json sign_report_json(const WeylGroup& g, const SignReport& r, bool timings) {
  json j;
  j["group"] = r.group;
  j["check"] = r.check;
  j["pairs_checked"] = r.pairs_checked;
  j["triples_checked"] = r.triples_checked;
  j["ok"] = r.ok();
  j["violation_count"] = r.violations.size();
  json vs = json::array();
  for (const auto& x : r.violations)
    vs.push_back({{"check", x.check},
                  {"u", word_json(g[x.u])},
                  {"v", word_json(g[x.v])},
                  {"w", word_json(g[x.w])},
                  {"c", integer_json(x.c)},
                  {"exponent", x.exponent}});
  j["violations"] = vs;
  if (timings) j["elapsed_ms"] = millis(r.elapsed_seconds);
  return j;
}

json line_report_json(const WeylGroup& g, const LineReport& r, bool timings) {
  json j;
  j["lambda"] = weight_json(r.lambda);
  j["mu"] = weight_json(r.mu);
  j["ok"] = r.ok();
  json checks = json::array();
  for (const auto& c : r.checks) {
    json vs = json::array();
    for (const auto& x : c.violations) {
      json e{{"v", word_json(g[x.v])},
             {"w", word_json(g[x.w])},
             {"weight", weight_json(x.weight)},
             {"lhs", integer_json(x.lhs)},
             {"rhs", integer_json(x.rhs)}};
      if (x.index >= 0) e["i"] = x.index + 1;
      vs.push_back(e);
    }
    checks.push_back({{"name", c.name},
                      {"diagnostic", c.diagnostic},
                      {"checked", c.checked},
                      {"failed", c.failed},
                      {"violations", vs}});
  }
  j["checks"] = checks;
  if (timings) j["elapsed_ms"] = millis(r.elapsed_seconds);
  return j;
}

json verify_json(const Session& s, const JobConfig& c) {
  const WeylGroup& g = *s.group;
  const SchubertRing& ring = *s.ring;
  const std::string& which = c.which;
  if (which != "signs" && which != "richardson" && which != "line" && which != "all")
    throw ConfigError("--which must be one of signs, richardson, line, all");
  const auto subset = resolve_subset(g.datum(), c.parabolic);
  if (!subset.empty() && which != "signs")
    throw ConfigError("with --parabolic only --which signs is available");
  const bool all = which == "all";
  json j;
  j["group"] = g.datum().label();
  j["which"] = which;
  j["parabolic"] = subset_json(subset);
  bool ok = true;
  if (all || which == "signs") {
    std::optional<ParabolicData> p;
    if (!subset.empty()) p = g.parabolic(subset);
    const SignReport r = verify_buch_signs(ring, p, c.jobs);
    ok = ok && r.ok();
    j["signs"] = sign_report_json(g, r, c.timings);
  }
  if (all || which == "richardson") {
    const SignReport r = verify_theorem_signs_richardson(ring, c.jobs);
    ok = ok && r.ok();
    j["richardson"] = sign_report_json(g, r, c.timings);
  }
  if (all || which == "line") {
    std::vector<std::pair<Weight, Weight>> pairs;
    if (c.lambda || c.mu) {
      pairs.emplace_back(resolve_weight(g.datum(), required(c.lambda, "lambda")),
                         resolve_weight(g.datum(), required(c.mu, "mu")));
    } else {
      pairs = standard_line_pairs(g.datum());
    }
    const auto reports = verify_line_identities(ring, pairs, c.jobs);
    json rs = json::array();
    bool line_ok = true;
    for (const auto& r : reports) {
      line_ok = line_ok && r.ok();
      rs.push_back(line_report_json(g, r, c.timings));
    }
    ok = ok && line_ok;
    j["line"] = {{"ok", line_ok}, {"reports", rs}};
  }
  j["ok"] = ok;
  return j;
}

std::string constants_csv(const json& doc) {
  std::ostringstream os;
  os << "w,c,N\n";
  for (const auto& row : doc.at("constants")) {
    std::string word;
    for (const auto& a : row.at("w")) word += (word.empty() ? "" : ",") + a.dump();
    os << '"' << word << "\"," << row.at("c").dump() << ',' << row.at("N").dump() << '\n';
  }
  return os.str();
}

CommandResult run_command(const JobConfig& c) {
  if (c.format != "json" && c.format != "csv") throw ConfigError("--format must be json or csv");
  const bool is_constants = c.command == "constants" || c.command == "parabolic-constants";
  if (c.format == "csv" && !is_constants) throw ConfigError("CSV output is available for constants only");
  if (c.command == "parabolic-constants" && c.parabolic.empty())
    throw ConfigError("parabolic-constants needs --parabolic");

  CommandResult r;
  if (c.command == "describe") {
    const Session s = Session::open(c, false);
    r.json = describe_json(s, c);
    r.warnings = s.warnings;
  } else {
    const Session s = Session::open(c, true);
    r.warnings = s.warnings;
    if (is_constants) {
      r.json = constants_json(s, c);
    } else if (c.command == "line-coeffs") {
      r.json = line_coeffs_json(s, c);
      if (!r.json.value("nonnegative", true)) r.exit_code = kViolations;
    } else if (c.command == "richardson") {
      r.json = richardson_json(s, c);
      if (!r.json.at("ok").get<bool>()) r.exit_code = kViolations;
    } else if (c.command == "verify") {
      r.json = verify_json(s, c);
      if (!r.json.at("ok").get<bool>()) r.exit_code = kViolations;
    } else {
      throw ConfigError("unknown command '" + c.command + "'");
    }
  }
  r.text = c.format == "csv" ? constants_csv(r.json) : r.json.dump(2) + "\n";
  return r;
}

}  // namespace kflag::app
