#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "kflag/app/cache.hpp"
#include "kflag/app/commands.hpp"
#include "kflag/error.hpp"

using namespace kflag;
using namespace kflag::app;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("kflag-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

JobConfig job(const std::string& command, char type, int rank) {
  JobConfig c;
  c.command = command;
  c.type = type;
  c.rank = rank;
  return c;
}

std::vector<std::vector<int>> words(const json& rows) {
  std::vector<std::vector<int>> out;
  for (const auto& r : rows) out.push_back(r.at("w").get<std::vector<int>>());
  return out;
}

}  // namespace

TEST_CASE("config round trip") {
  JobConfig c = job("verify", 'B', 2);
  c.parabolic = {2};
  c.u = std::vector<int>{1, 2};
  c.lambda = std::vector<int>{1, -1};
  c.which = "signs";
  c.jobs = 3;
  c.cache_dir = "/tmp/x";
  c.max_weyl = 500;
  c.format = "csv";
  c.out = "o.csv";
  c.timings = true;
  CHECK(job_config_from_json(to_json(c)) == c);
  CHECK(job_config_from_json(json::parse(to_json(c).dump())) == c);

  JobConfig m;
  m.cartan = CartanMatrix{{2, -1}, {-3, 2}};
  CHECK(job_config_from_json(to_json(m)) == m);
  CHECK(job_config_from_json(json::parse("[[2,-1],[-1,2]]")).cartan == CartanMatrix{{2, -1}, {-1, 2}});

  CHECK_THROWS_AS(job_config_from_json(json::parse(R"({"bogus": 1})")), ConfigError);
  CHECK_THROWS_AS(job_config_from_json(json::parse(R"({"rank": "two"})")), ConfigError);
}

TEST_CASE("input parsing") {
  CHECK(parse_int_list("1,2,3") == std::vector<int>{1, 2, 3});
  CHECK(parse_int_list("-1, 2") == std::vector<int>{-1, 2});
  CHECK(parse_int_list("").empty());
  CHECK(parse_int_list("e").empty());
  CHECK_THROWS_AS(parse_int_list("1,x"), ConfigError);
  CHECK_THROWS_AS(parse_int_list("1,"), ConfigError);
  CHECK_THROWS_AS(parse_int_list("1.5"), ConfigError);

  const WeylGroup g(build_root_datum('A', 2));
  CHECK(resolve_word(g, {2, 1}).word == std::vector<int>{1, 0});
  CHECK(word_json(resolve_word(g, {2, 1, 2})) == json({1, 2, 1}));  // canonical lex-min form
  CHECK_THROWS_AS(resolve_word(g, {1, 1}), ConfigError);
  CHECK_THROWS_AS(resolve_word(g, {3}), ConfigError);
  CHECK_THROWS_AS(resolve_weight(g.datum(), {1}), ConfigError);
  CHECK(resolve_subset(g.datum(), {2, 1, 2}) == std::vector<int>{0, 1});
  CHECK_THROWS_AS(resolve_subset(g.datum(), {0}), ConfigError);

  JobConfig both = job("describe", 'A', 2);
  both.cartan = CartanMatrix{{2}};
  CHECK_THROWS_AS(make_root_datum(both), ConfigError);
  JobConfig none;
  CHECK_THROWS_AS(make_root_datum(none), ConfigError);
}

TEST_CASE("describe") {
  const json a2 = run_command(job("describe", 'A', 2)).json;
  CHECK(a2.at("weyl_order") == 6);
  CHECK(a2.at("dim") == 3);
  const json a1 = run_command(job("describe", 'A', 1)).json;
  CHECK(a1.at("weyl_order") == 2);
  CHECK(a1.at("dim") == 1);
  JobConfig gr = job("describe", 'A', 3);
  gr.parabolic = {1, 3};
  const json g24 = run_command(gr).json;
  CHECK(g24.at("coset_count") == 6);
  CHECK(g24.at("dim") == 4);
  JobConfig big = job("describe", 'E', 8);
  CHECK_THROWS_AS(run_command(big), BoundExceeded);
}

TEST_CASE("constants command") {
  JobConfig c = job("constants", 'A', 2);
  c.u = std::vector<int>{1, 2};
  c.v = std::vector<int>{2, 1};
  const CommandResult r = run_command(c);
  CHECK(r.exit_code == kOk);
  const json& rows = r.json.at("constants");
  CHECK(words(rows) == std::vector<std::vector<int>>{{}, {1}, {2}});
  CHECK(rows[0].at("c") == -1);
  CHECK(rows[0].at("N") == 1);
  CHECK(rows[1].at("c") == 1);
  CHECK(rows[1].at("N") == 0);
  // deterministic rendering
  CHECK(run_command(c).text == r.text);

  c.format = "csv";
  CHECK(run_command(c).text == "w,c,N\n\"\",-1,1\n\"1\",1,0\n\"2\",1,0\n");

  JobConfig p = job("parabolic-constants", 'A', 2);
  p.parabolic = {2};
  p.u = std::vector<int>{1};
  p.v = std::vector<int>{1};
  const json pr = run_command(p).json;
  CHECK(words(pr.at("constants")) == std::vector<std::vector<int>>{{}});
  CHECK(pr.at("constants")[0].at("c") == 1);
  p.parabolic.clear();
  CHECK_THROWS_AS(run_command(p), ConfigError);

  JobConfig bad = job("constants", 'A', 2);
  bad.u = std::vector<int>{1, 1};
  bad.v = std::vector<int>{1};
  CHECK_THROWS_AS(run_command(bad), ConfigError);
  JobConfig missing = job("constants", 'A', 2);
  CHECK_THROWS_AS(run_command(missing), ConfigError);
  JobConfig csv = job("describe", 'A', 2);
  csv.format = "csv";
  CHECK_THROWS_AS(run_command(csv), ConfigError);
}

TEST_CASE("line-coeffs and richardson commands") {
  JobConfig c = job("line-coeffs", 'A', 1);
  c.v = std::vector<int>{1};
  c.lambda = std::vector<int>{4};
  const json r = run_command(c).json;
  CHECK(r.at("dominant") == true);
  CHECK(r.at("nonnegative") == true);
  CHECK(r.at("coeffs")[0].at("w") == json::array());
  CHECK(r.at("coeffs")[0].at("c") == 4);
  c.lambda = std::vector<int>{1, 0};
  CHECK_THROWS_AS(run_command(c), ConfigError);

  JobConfig y = job("richardson", 'A', 2);
  y.u = std::vector<int>{1};
  y.v = std::vector<int>{1, 2};
  const json yr = run_command(y).json;
  CHECK(yr.at("nonempty") == true);
  CHECK(yr.at("dim") == 1);
  CHECK(yr.at("euler_characteristic") == 1);
  CHECK(yr.at("ok") == true);
  y.u = std::vector<int>{2, 1};
  const json empty = run_command(y).json;
  CHECK(empty.at("nonempty") == false);
  CHECK(empty.at("class").empty());
}

TEST_CASE("verify command") {
  JobConfig a1 = job("verify", 'A', 1);
  a1.which = "signs";
  const CommandResult r1 = run_command(a1);
  CHECK(r1.exit_code == kOk);
  CHECK(r1.json.at("signs").at("triples_checked") == 8);
  CHECK_FALSE(r1.json.at("signs").contains("elapsed_ms"));

  JobConfig a2 = job("verify", 'A', 2);
  const CommandResult r2 = run_command(a2);
  CHECK(r2.exit_code == kOk);
  CHECK(r2.json.at("ok") == true);
  CHECK(r2.json.at("richardson").at("pairs_checked") == 19);
  CHECK(r2.text == run_command(a2).text);

  JobConfig bad = job("verify", 'A', 2);
  bad.which = "everything";
  CHECK_THROWS_AS(run_command(bad), ConfigError);
  JobConfig onlymu = job("verify", 'A', 2);
  onlymu.which = "line";
  onlymu.mu = std::vector<int>{1, 0};
  CHECK_THROWS_AS(run_command(onlymu), ConfigError);
}

TEST_CASE("all output numbers are integers") {
  JobConfig v = job("verify", 'B', 2);
  v.timings = true;
  const json j = run_command(v).json;
  std::function<void(const json&)> walk = [&](const json& x) {
    CHECK_FALSE(x.is_number_float());
    if (x.is_structured())
      for (const auto& y : x) walk(y);
  };
  walk(j);
}

TEST_CASE("cache round trip and failure modes") {
  const fs::path dir = fresh_dir("cache");
  const auto group = std::make_shared<const WeylGroup>(build_root_datum('A', 2));
  const KtModel model(group);
  cache_store(dir, *group, model.schubert_table());
  const fs::path path = cache_path(dir, group->datum());
  REQUIRE(fs::exists(path));

  CacheLoad hit = cache_load(dir, *group);
  CHECK(hit.status == CacheStatus::Hit);
  CHECK(hit.table == model.schubert_table());

  std::vector<std::string> warnings;
  const auto reused = load_or_build_model(group, dir, warnings);
  CHECK(warnings.empty());
  CHECK(reused->schubert_table() == model.schubert_table());

  auto read = [&] {
    std::ifstream in(path);
    return json::parse(in);
  };
  auto write = [&](const json& doc) {
    std::ofstream out(path, std::ios::trunc);
    out << doc.dump();
  };

  // bumped schema version -> recompute and rewrite
  json doc = read();
  doc["version"] = kCacheVersion + 1;
  doc["digest"] = document_digest(doc);
  write(doc);
  CHECK(cache_load(dir, *group).status == CacheStatus::VersionMismatch);
  warnings.clear();
  CHECK(load_or_build_model(group, dir, warnings)->schubert_table() == model.schubert_table());
  CHECK(warnings.size() == 1);
  CHECK(cache_load(dir, *group).status == CacheStatus::Hit);

  // content edited without updating the digest -> recompute with a warning
  doc = read();
  doc["table"][3]["restrictions"][0]["terms"][0][1] = 99;
  write(doc);
  CHECK(cache_load(dir, *group).status == CacheStatus::DigestMismatch);
  warnings.clear();
  CHECK(load_or_build_model(group, dir, warnings)->schubert_table() == model.schubert_table());
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("digest mismatch") != std::string::npos);

  // edited with a matching digest -> integrity failure at validation
  doc = read();
  doc["table"][3]["restrictions"][0]["terms"][0][1] = 99;
  doc["digest"] = document_digest(doc);
  write(doc);
  CHECK(cache_load(dir, *group).status == CacheStatus::Hit);
  warnings.clear();
  CHECK_THROWS_AS(load_or_build_model(group, dir, warnings), IntegrityError);

  // garbage -> recompute
  {
    std::ofstream out(path, std::ios::trunc);
    out << "{not json";
  }
  CHECK(cache_load(dir, *group).status == CacheStatus::Malformed);
  warnings.clear();
  CHECK(load_or_build_model(group, dir, warnings)->schubert_table() == model.schubert_table());

  // unwritable location -> computation proceeds
  warnings.clear();
  const fs::path blocker = dir / "blocker";
  { std::ofstream(blocker) << "x"; }
  CHECK(load_or_build_model(group, blocker / "sub", warnings)->schubert_table() == model.schubert_table());
  CHECK(warnings.size() == 1);

  fs::remove_all(dir);
}

TEST_CASE("cache directory from the environment") {
  const fs::path dir = fresh_dir("env");
  ::setenv("KFLAG_CACHE_DIR", dir.c_str(), 1);
  JobConfig c = job("verify", 'A', 1);
  c.which = "signs";
  CHECK(run_command(c).exit_code == kOk);
  ::unsetenv("KFLAG_CACHE_DIR");
  const auto group = WeylGroup(build_root_datum('A', 1));
  CHECK(fs::exists(cache_path(dir, group.datum())));
  fs::remove_all(dir);
}

TEST_CASE("sha256") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
