#pragma once

#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "kflag/app/config.hpp"
#include "kflag/schubert_ring.hpp"
#include "kflag/verify.hpp"

namespace kflag::app {

/// Exit codes shared by the tool and the Python layer.
enum ExitCode : int { kOk = 0, kViolations = 1, kConfigError = 2, kIntegrityError = 3 };

/// Group, model and ring for one job. Honors the cache directory (explicit or
/// KFLAG_CACHE_DIR) and the Weyl size bound.
struct Session {
  std::shared_ptr<const WeylGroup> group;
  std::shared_ptr<const KtModel> model;
  std::shared_ptr<const SchubertRing> ring;
  std::vector<std::string> warnings;

  /// With with_model false only the group is built.
  static Session open(const JobConfig& c, bool with_model = true);
};

struct CommandResult {
  nlohmann::json json;
  std::string text;  ///< rendered output (JSON or CSV)
  int exit_code = kOk;
  std::vector<std::string> warnings;
};

nlohmann::json describe_json(const Session& s, const JobConfig& c);
nlohmann::json constants_json(const Session& s, const JobConfig& c);
nlohmann::json line_coeffs_json(const Session& s, const JobConfig& c);
nlohmann::json richardson_json(const Session& s, const JobConfig& c);
nlohmann::json verify_json(const Session& s, const JobConfig& c);

nlohmann::json sign_report_json(const WeylGroup& g, const SignReport& r, bool timings);
nlohmann::json line_report_json(const WeylGroup& g, const LineReport& r, bool timings);

/// CSV for a constants document: header "w,c,N", words as quoted 1-based lists.
std::string constants_csv(const nlohmann::json& doc);

/// Runs c.command. Config and integrity failures propagate as exceptions.
CommandResult run_command(const JobConfig& c);

}  // namespace kflag::app
