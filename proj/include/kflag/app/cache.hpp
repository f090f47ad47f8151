#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "kflag/kt_model.hpp"

namespace kflag::app {

inline constexpr int kCacheVersion = 1;
inline constexpr const char* kCacheSchema = "kflag-schubert-table";

/// Lowercase hex SHA-256 of `data`.
std::string sha256_hex(const std::string& data);

/// {"label", "cartan"}; identifies a root datum in cache files.
nlohmann::json group_descriptor(const RootDatum& d);

/// Versioned, digested JSON document holding a Schubert restriction table.
/// The digest covers the canonical dump of every other field.
nlohmann::json cache_document(const WeylGroup& g, const std::vector<EquivClass>& table);
std::string document_digest(const nlohmann::json& doc);

/// File a table for `d` lives in, under `dir`.
std::filesystem::path cache_path(const std::filesystem::path& dir, const RootDatum& d);

enum class CacheStatus { Hit, Missing, VersionMismatch, DigestMismatch, GroupMismatch, Malformed };
const char* cache_status_name(CacheStatus s);

struct CacheLoad {
  CacheStatus status = CacheStatus::Missing;
  std::vector<EquivClass> table;  ///< filled on Hit only
  std::string detail;
};

/// Reads and checks a cache document. Never throws for I/O or format
/// problems; they come back as a status.
CacheLoad cache_load(const std::filesystem::path& dir, const WeylGroup& g);
/// Writes atomically (temp file + rename). Throws std::runtime_error on I/O failure.
void cache_store(const std::filesystem::path& dir, const WeylGroup& g,
                 const std::vector<EquivClass>& table);

/// Model for `group`, reusing the cache under `dir` when present and
/// refreshing it otherwise. Warnings (stale or corrupt entries, I/O errors)
/// are appended to `warnings`. A table whose digest matches but which fails
/// model validation raises IntegrityError.
std::shared_ptr<const KtModel> load_or_build_model(std::shared_ptr<const WeylGroup> group,
                                                   const std::optional<std::filesystem::path>& dir,
                                                   std::vector<std::string>& warnings);

}  // namespace kflag::app
