#pragma once

// Command-line front end: argument parsing, the command runners, expected
// verdicts, table regeneration and report serialization.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "efx/verify.hpp"
#include "json.hpp"

namespace efx::cli {

enum class Format { json, csv, markdown };

/// Bad arguments or an unreadable input; maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitDiscrepancy = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::string command;                    // verify | properties | lemmas | alpha-star | tables | template
  std::optional<ProfileKind> profile;     // verify, properties
  std::optional<std::string> alpha;       // verify subadditive
  std::string template_path;              // template
  std::string template_suite;             // verify | properties
  Format format = Format::markdown;
  std::size_t witness_limit = 10;
  int workers = 1;
  bool timing = false;
  std::optional<kernels::Backend> backend;

  CheckOptions options() const;
};

/// Throws UsageError (with the parser's message) on bad arguments. Returns
/// std::nullopt when help was requested; `help` then holds the text.
std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::string* help);

/// One regenerated table with its cell diff against the embedded expected data.
struct TableArtifact {
  std::string id;     // "1", "2", "3a", "3b", "3c", "4", "5"
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> diffs;  // empty iff every cell matches
  std::vector<std::string> notes;  // e.g. the Table 4 ladder
};

std::vector<TableArtifact> build_tables();

struct CommandResult {
  std::string command;
  std::vector<VerdictReport> reports;
  std::vector<TableArtifact> tables;
  std::vector<std::string> notes;
  int exit_code = kExitOk;
};

/// Runs one command. Throws UsageError for bad α syntax, unknown profiles and
/// template load failures.
CommandResult run_command(const RunConfig& cfg);

nlohmann::json report_to_json(const VerdictReport& r);
/// Inverse of report_to_json; throws nlohmann::json::exception on a bad shape.
VerdictReport report_from_json(const nlohmann::json& j);
nlohmann::json table_to_json(const TableArtifact& t);
nlohmann::json result_to_json(const CommandResult& r);

std::string render(const CommandResult& r, Format f);

/// Full CLI: parse, run, print. Returns the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace efx::cli
