#include "kflag/app/cache.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <sstream>

#include "kflag/app/config.hpp"
#include "kflag/error.hpp"

namespace kflag::app {

namespace fs = std::filesystem;
using nlohmann::json;

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 15]);
  }
  return out;
}

json group_descriptor(const RootDatum& d) { return json{{"label", d.label()}, {"cartan", d.cartan()}}; }

namespace {

json poly_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(json::array({weight_json(e), integer_json(c)}));
  return terms;
}

LaurentPoly poly_from_json(const json& j, int rank) {
  std::vector<LaurentPoly::Term> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) throw IntegrityError("malformed term " + t.dump());
    const auto e = t[0].get<std::vector<int>>();
    if (static_cast<int>(e.size()) != rank) throw IntegrityError("exponent of wrong length");
    terms.emplace_back(Weight(std::span<const int>(e)), integer_from_json(t[1]));
  }
  return LaurentPoly::from_terms(std::move(terms));
}

json table_json(const WeylGroup& g, const std::vector<EquivClass>& table) {
  json out = json::array();
  for (const auto& w : g.elements()) {
    json rows = json::array();
    for (const auto& v : g.elements()) {
      const LaurentPoly& p = table[w.index][v];
      if (!p.is_zero()) rows.push_back(json{{"v", word_json(v)}, {"terms", poly_json(p)}});
    }
    out.push_back(json{{"w", word_json(w)}, {"restrictions", rows}});
  }
  return out;
}

std::vector<EquivClass> table_from_json(const WeylGroup& g, const json& j) {
  if (!j.is_array() || j.size() != g.size()) throw IntegrityError("table has the wrong number of classes");
  const auto element = [&](const json& word) -> const WeylElement& {
    return resolve_word(g, word.get<std::vector<int>>());
  };
  std::vector<EquivClass> table(g.size(), EquivClass{std::vector<LaurentPoly>(g.size())});
  std::vector<bool> seen(g.size(), false);
  for (const auto& entry : j) {
    const WeylElement& w = element(entry.at("w"));
    if (seen[w.index]) throw IntegrityError("duplicate class in table");
    seen[w.index] = true;
    for (const auto& r : entry.at("restrictions"))
      table[w.index][element(r.at("v"))] = poly_from_json(r.at("terms"), g.rank());
  }
  return table;
}

json without_digest(const json& doc) {
  json copy = doc;
  copy.erase("digest");
  return copy;
}

}  // namespace

json cache_document(const WeylGroup& g, const std::vector<EquivClass>& table) {
  json doc{{"schema", kCacheSchema},
           {"version", kCacheVersion},
           {"group", group_descriptor(g.datum())},
           {"table", table_json(g, table)}};
  doc["digest"] = document_digest(doc);
  return doc;
}

std::string document_digest(const json& doc) { return sha256_hex(without_digest(doc).dump()); }

fs::path cache_path(const fs::path& dir, const RootDatum& d) {
  const std::string key = sha256_hex(group_descriptor(d).dump()).substr(0, 16);
  return dir / ("schubert-" + d.label() + "-" + key + ".json");
}

const char* cache_status_name(CacheStatus s) {
  switch (s) {
    case CacheStatus::Hit:
      return "hit";
    case CacheStatus::Missing:
      return "missing";
    case CacheStatus::VersionMismatch:
      return "version mismatch";
    case CacheStatus::DigestMismatch:
      return "digest mismatch";
    case CacheStatus::GroupMismatch:
      return "group mismatch";
    case CacheStatus::Malformed:
      return "malformed";
  }
  return "?";
}

CacheLoad cache_load(const fs::path& dir, const WeylGroup& g) {
  const RootDatum& d = g.datum();
  CacheLoad out;
  const fs::path path = cache_path(dir, d);
  std::ifstream in(path);
  if (!in) return out;
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    out.status = CacheStatus::Malformed;
    out.detail = e.what();
    return out;
  }
  if (!doc.is_object() || doc.value("schema", "") != kCacheSchema) {
    out.status = CacheStatus::Malformed;
    out.detail = "not a Schubert table document";
    return out;
  }
  if (!doc.contains("version") || doc["version"] != kCacheVersion) {
    out.status = CacheStatus::VersionMismatch;
    out.detail = "found version " + (doc.contains("version") ? doc["version"].dump() : "none") +
                 ", expected " + std::to_string(kCacheVersion);
    return out;
  }
  if (!doc.contains("digest") || !doc["digest"].is_string() || doc["digest"] != document_digest(doc)) {
    out.status = CacheStatus::DigestMismatch;
    out.detail = "stored digest does not match the content";
    return out;
  }
  if (doc.value("group", json()) != group_descriptor(d)) {
    out.status = CacheStatus::GroupMismatch;
    out.detail = "document describes a different group";
    return out;
  }
  try {
    out.table = table_from_json(g, doc.at("table"));
  } catch (const std::exception& e) {
    out.status = CacheStatus::Malformed;
    out.detail = e.what();
    out.table.clear();
    return out;
  }
  out.status = CacheStatus::Hit;
  return out;
}

void cache_store(const fs::path& dir, const WeylGroup& g, const std::vector<EquivClass>& table) {
  const RootDatum& d = g.datum();
  fs::create_directories(dir);
  const fs::path path = cache_path(dir, d);
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << cache_document(g, table).dump(1) << '\n';
    if (!out) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  fs::rename(tmp, path);
}

std::shared_ptr<const KtModel> load_or_build_model(std::shared_ptr<const WeylGroup> group,
                                                   const std::optional<fs::path>& dir,
                                                   std::vector<std::string>& warnings) {
  if (!dir) return std::make_shared<const KtModel>(std::move(group));
  const RootDatum& d = group->datum();
  CacheLoad loaded = cache_load(*dir, *group);
  if (loaded.status == CacheStatus::Hit) {
    // Validation failures here are integrity errors, not cache misses.
    return std::make_shared<const KtModel>(std::move(group), std::move(loaded.table));
  }
  if (loaded.status != CacheStatus::Missing)
    warnings.push_back("cache entry " + cache_path(*dir, d).string() + ": " +
                       cache_status_name(loaded.status) + " (" + loaded.detail + "); recomputing");
  auto model = std::make_shared<const KtModel>(group);
  try {
    cache_store(*dir, *group, model->schubert_table());
  } catch (const std::exception& e) {
    warnings.push_back(std::string("cache not written: ") + e.what());
  }
  return model;
}

}  // namespace kflag::app
