// kflag: command-line front end for the K-theoretic Schubert calculus engine.
#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "kflag/app/commands.hpp"
#include "kflag/error.hpp"

using namespace kflag;
using namespace kflag::app;

int main(int argc, char** argv) {
  CLI::App cli{"Exact K-theoretic Schubert calculus on flag varieties G/P"};
  cli.require_subcommand(1);

  std::string type, cartan_file, parabolic, u, v, lambda, mu, which = "all", cache_dir, format = "json",
                                                                out;
  int rank = 0;
  unsigned jobs = 1;
  std::size_t max_weyl = kDefaultMaxWeyl;
  bool timings = false;

  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"describe", "rank, root and Weyl group counts, dim G/P"},
           {"constants", "structure constants c_{u,v}^w"},
           {"verify", "exhaustive sign and identity sweeps"},
           {"line-coeffs", "line bundle coefficients c_v^w(lambda)"},
           {"parabolic-constants", "structure constants of K(G/P)"},
           {"richardson", "class of the Richardson variety X^u cap X_v"}}) {
    subs[name] = cli.add_subcommand(name, help);
  }

  // Options are shared by every subcommand.
  for (auto& [name, sub] : subs) {
    sub->add_option("--type", type, "root system letter A..G");
    sub->add_option("--rank", rank, "rank");
    sub->add_option("--cartan", cartan_file, "JSON file: a Cartan matrix, or a job config object");
    sub->add_option("--parabolic", parabolic, "parabolic subset, e.g. 1,3");
    sub->add_option("--u", u, "reduced word, e.g. 1,2");
    sub->add_option("--v", v, "reduced word");
    sub->add_option("--lambda", lambda, "weight in fundamental coordinates, e.g. 1,0");
    sub->add_option("--mu", mu, "second weight");
    sub->add_option("--which", which, "signs|richardson|line|all");
    sub->add_option("--jobs", jobs, "worker threads (0 = all cores)");
    sub->add_option("--cache-dir", cache_dir, "Schubert table cache (default $KFLAG_CACHE_DIR)");
    sub->add_option("--max-weyl", max_weyl, "refuse Weyl groups larger than this");
    sub->add_option("--format", format, "json|csv");
    sub->add_option("--out", out, "write output to a file");
    sub->add_flag("--timings", timings, "include elapsed times in reports");
  }

  try {
    cli.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return cli.exit(e);
  } catch (const CLI::ParseError& e) {
    cli.exit(e);
    return kConfigError;
  }

  CLI::App* sub = cli.get_subcommands().front();
  auto given = [&](const char* flag) { return sub->count(flag) > 0; };

  try {
    JobConfig c;
    if (given("--cartan")) c = load_config_file(cartan_file);
    c.command = sub->get_name();
    if (given("--type")) {
      if (type.size() != 1) throw ConfigError("--type must be a single letter");
      c.type = type[0];
    }
    if (given("--rank")) c.rank = rank;
    if (given("--parabolic")) c.parabolic = parse_int_list(parabolic);
    if (given("--u")) c.u = parse_int_list(u);
    if (given("--v")) c.v = parse_int_list(v);
    if (given("--lambda")) c.lambda = parse_int_list(lambda);
    if (given("--mu")) c.mu = parse_int_list(mu);
    if (given("--which")) c.which = which;
    if (given("--jobs")) c.jobs = jobs;
    if (given("--cache-dir")) c.cache_dir = cache_dir;
    if (given("--max-weyl")) c.max_weyl = max_weyl;
    if (given("--format")) c.format = format;
    if (given("--out")) c.out = out;
    if (timings) c.timings = true;

    const CommandResult r = run_command(c);
    for (const auto& w : r.warnings) std::cerr << "warning: " << w << '\n';
    if (c.out) {
      std::ofstream f(*c.out, std::ios::trunc);
      if (!f) throw ConfigError("cannot write " + *c.out);
      f << r.text;
    } else {
      std::cout << r.text;
    }
    return r.exit_code;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const IntegrityError& e) {
    std::cerr << "integrity failure: " << e.what() << '\n';
    return kIntegrityError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kIntegrityError;
  }
}
