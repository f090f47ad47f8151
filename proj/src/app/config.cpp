#include "kflag/app/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

#include "kflag/error.hpp"

namespace kflag::app {

using nlohmann::json;

namespace {

const std::vector<std::string> kKeys{"command", "type",     "rank",      "cartan",  "parabolic",
                                     "u",       "v",        "lambda",    "mu",      "which",
                                     "jobs",    "cache_dir", "max_weyl", "format",  "out",
                                     "timings"};

template <class T>
T get_as(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("config field '") + key + "' has the wrong type");
  }
}

}  // namespace

json to_json(const JobConfig& c) {
  json j = json::object();
  j["command"] = c.command;
  if (c.type) j["type"] = std::string(1, *c.type);
  if (c.rank) j["rank"] = *c.rank;
  if (c.cartan) j["cartan"] = *c.cartan;
  j["parabolic"] = c.parabolic;
  if (c.u) j["u"] = *c.u;
  if (c.v) j["v"] = *c.v;
  if (c.lambda) j["lambda"] = *c.lambda;
  if (c.mu) j["mu"] = *c.mu;
  j["which"] = c.which;
  j["jobs"] = c.jobs;
  if (c.cache_dir) j["cache_dir"] = *c.cache_dir;
  j["max_weyl"] = c.max_weyl;
  j["format"] = c.format;
  if (c.out) j["out"] = *c.out;
  j["timings"] = c.timings;
  return j;
}

JobConfig job_config_from_json(const json& j) {
  if (j.is_array()) {
    JobConfig c;
    try {
      c.cartan = j.get<CartanMatrix>();
    } catch (const json::exception&) {
      throw ConfigError("Cartan matrix must be an array of integer rows");
    }
    return c;
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object or a Cartan matrix");
  for (const auto& [key, value] : j.items())
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end())
      throw ConfigError("unknown config field '" + key + "'");
  JobConfig c;
  if (j.contains("command")) c.command = get_as<std::string>(j, "command");
  if (j.contains("type")) {
    const auto t = get_as<std::string>(j, "type");
    if (t.size() != 1) throw ConfigError("type must be a single letter");
    c.type = t[0];
  }
  if (j.contains("rank")) c.rank = get_as<int>(j, "rank");
  if (j.contains("cartan")) c.cartan = get_as<CartanMatrix>(j, "cartan");
  if (j.contains("parabolic")) c.parabolic = get_as<std::vector<int>>(j, "parabolic");
  if (j.contains("u")) c.u = get_as<std::vector<int>>(j, "u");
  if (j.contains("v")) c.v = get_as<std::vector<int>>(j, "v");
  if (j.contains("lambda")) c.lambda = get_as<std::vector<int>>(j, "lambda");
  if (j.contains("mu")) c.mu = get_as<std::vector<int>>(j, "mu");
  if (j.contains("which")) c.which = get_as<std::string>(j, "which");
  if (j.contains("jobs")) c.jobs = get_as<unsigned>(j, "jobs");
  if (j.contains("cache_dir")) c.cache_dir = get_as<std::string>(j, "cache_dir");
  if (j.contains("max_weyl")) c.max_weyl = get_as<std::size_t>(j, "max_weyl");
  if (j.contains("format")) c.format = get_as<std::string>(j, "format");
  if (j.contains("out")) c.out = get_as<std::string>(j, "out");
  if (j.contains("timings")) c.timings = get_as<bool>(j, "timings");
  return c;
}

JobConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config file " + path + " is not valid JSON: " + e.what());
  }
  return job_config_from_json(j);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty() || text == "e") return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long value = 0;
    try {
      value = std::stol(item, &pos);
    } catch (const std::exception&) {
      throw ConfigError("'" + text + "' is not a comma-separated list of integers");
    }
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    if (pos != item.size() || value < std::numeric_limits<int>::min() ||
        value > std::numeric_limits<int>::max())
      throw ConfigError("'" + text + "' is not a comma-separated list of integers");
    out.push_back(static_cast<int>(value));
  }
  if (!text.empty() && text.back() == ',') throw ConfigError("trailing comma in '" + text + "'");
  return out;
}

RootDatum make_root_datum(const JobConfig& c) {
  if (c.cartan) {
    if (c.type || c.rank) throw ConfigError("give either a Cartan matrix or --type/--rank, not both");
    return RootDatum(*c.cartan, "cartan" + std::to_string(c.cartan->size()));
  }
  if (!c.type || !c.rank) throw ConfigError("a group needs --type and --rank, or --cartan");
  return build_root_datum(*c.type, *c.rank);
}

const WeylElement& resolve_word(const WeylGroup& g, const std::vector<int>& word) {
  std::vector<int> zero_based;
  zero_based.reserve(word.size());
  for (int a : word) {
    if (a < 1 || a > g.rank())
      throw ConfigError("letter " + std::to_string(a) + " is not in 1.." + std::to_string(g.rank()));
    zero_based.push_back(a - 1);
  }
  const WeylElement& w = g.from_word(zero_based);
  if (static_cast<std::size_t>(w.length) != word.size())
    throw ConfigError("word is not reduced; its element has length " + std::to_string(w.length));
  return w;
}

Weight resolve_weight(const RootDatum& d, const std::vector<int>& coords) {
  if (static_cast<int>(coords.size()) != d.rank())
    throw ConfigError("weight has " + std::to_string(coords.size()) + " coordinates, rank is " +
                      std::to_string(d.rank()));
  return Weight(std::span<const int>(coords));
}

std::vector<int> resolve_subset(const RootDatum& d, const std::vector<int>& subset) {
  std::vector<int> out;
  for (int i : subset) {
    if (i < 1 || i > d.rank())
      throw ConfigError("parabolic index " + std::to_string(i) + " is not in 1.." + std::to_string(d.rank()));
    out.push_back(i - 1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

json word_json(const WeylElement& w) {
  json j = json::array();
  for (int a : w.word) j.push_back(a + 1);
  return j;
}

json weight_json(const Weight& w) { return w.coords(); }

json integer_json(const Integer& x) {
  static const Integer lo = std::numeric_limits<std::int64_t>::min();
  static const Integer hi = std::numeric_limits<std::int64_t>::max();
  if (x >= lo && x <= hi) return static_cast<std::int64_t>(x);
  return x.str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw IntegrityError("expected an integer, found " + j.dump());
}

}  // namespace kflag::app
