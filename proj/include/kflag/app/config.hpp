#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "kflag/laurent.hpp"
#include "kflag/root_datum.hpp"
#include "kflag/weyl_group.hpp"

namespace kflag::app {

/// Everything a command needs. Words, weights and subsets are stored exactly
/// as the user wrote them (1-based letters); they are validated against the
/// group by the parse_* helpers before any computation starts.
struct JobConfig {
  std::string command;
  std::optional<char> type;
  std::optional<int> rank;
  std::optional<CartanMatrix> cartan;
  std::vector<int> parabolic;
  std::optional<std::vector<int>> u;
  std::optional<std::vector<int>> v;
  std::optional<std::vector<int>> lambda;
  std::optional<std::vector<int>> mu;
  std::string which = "all";
  unsigned jobs = 1;
  std::optional<std::string> cache_dir;
  std::size_t max_weyl = kDefaultMaxWeyl;
  std::string format = "json";
  std::optional<std::string> out;
  bool timings = false;

  friend bool operator==(const JobConfig&, const JobConfig&) = default;
};

nlohmann::json to_json(const JobConfig& c);
/// Throws ConfigError on unknown keys or wrong value types.
JobConfig job_config_from_json(const nlohmann::json& j);
/// Reads a configuration file: either a bare Cartan matrix (array of rows) or
/// an object in the to_json layout.
JobConfig load_config_file(const std::string& path);

/// Comma-separated integers; "" and "e" give the empty list.
std::vector<int> parse_int_list(const std::string& text);

RootDatum make_root_datum(const JobConfig& c);

/// 1-based letters -> element. Rejects letters out of range and non-reduced
/// words.
const WeylElement& resolve_word(const WeylGroup& g, const std::vector<int>& word);
Weight resolve_weight(const RootDatum& d, const std::vector<int>& coords);
/// 1-based indices -> sorted 0-based subset.
std::vector<int> resolve_subset(const RootDatum& d, const std::vector<int>& subset);

/// 1-based lexicographically minimal reduced word.
nlohmann::json word_json(const WeylElement& w);
nlohmann::json weight_json(const Weight& w);
/// A JSON integer when the value fits in 64 bits, otherwise its decimal string.
nlohmann::json integer_json(const Integer& x);
/// Inverse of integer_json.
Integer integer_from_json(const nlohmann::json& j);

}  // namespace kflag::app
