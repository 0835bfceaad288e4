#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "efx/cli.hpp"

namespace efx::cli {

namespace {

const std::map<std::string, ProfileKind> kProfiles = {
    {"ordinal", ProfileKind::ordinal}, {"subadditive", ProfileKind::subadditive}, {"coverage", ProfileKind::coverage}};

}  // namespace

std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::string* help) {
  RunConfig cfg;
  CLI::App app{"Exhaustive EFX counterexample verifier"};
  app.require_subcommand(1);

  std::string format = "markdown";
  std::string kernel;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "markdown"}));
  app.add_option("--witnesses", cfg.witness_limit, "Maximum witnesses per report")->check(CLI::NonNegativeNumber);
  app.add_option("--workers", cfg.workers, "Worker threads for the allocation scans")->check(CLI::Range(1, 256));
  app.add_flag("--timing", cfg.timing, "Record elapsed_ms in reports (breaks byte-identical output)");
  app.add_option("--kernel", kernel, "Force a scan kernel")->check(CLI::IsMember({"scalar", "avx2"}));

  std::string profile;
  std::string alpha;
  auto* verify = app.add_subcommand("verify", "Check that no (alpha-)EFX allocation exists");
  verify->add_option("profile", profile, "ordinal | subadditive | coverage")->required()
      ->check(CLI::IsMember({"ordinal", "subadditive", "coverage"}));
  verify->add_option("--alpha", alpha, "Approximation factor: p/q, decimal, lambda or lambda^t");

  auto* properties = app.add_subcommand("properties", "Run the valuation-class property suites");
  properties->add_option("profile", profile, "ordinal | subadditive | coverage")->required()
      ->check(CLI::IsMember({"ordinal", "subadditive", "coverage"}));

  app.add_subcommand("lemmas", "Run every lemma and proposition check");
  app.add_subcommand("alpha-star", "Minimum rank deficit and the best approximation factor");
  app.add_subcommand("tables", "Regenerate the reference tables and diff them");

  auto* tmpl = app.add_subcommand("template", "Load a typed cyclic template and run a suite");
  tmpl->add_option("path", cfg.template_path, "Template JSON file")->required();
  tmpl->add_option("suite", cfg.template_suite, "verify | properties")->required()
      ->check(CLI::IsMember({"verify", "properties"}));

  // Options are accepted before or after the subcommand.
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    if (help) *help = app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    if (help) *help = app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  cfg.command = app.get_subcommands().front()->get_name();
  if (!profile.empty()) cfg.profile = kProfiles.at(profile);
  if (!alpha.empty()) cfg.alpha = alpha;
  cfg.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::markdown;
  if (kernel == "scalar") cfg.backend = kernels::Backend::scalar;
  if (kernel == "avx2") cfg.backend = kernels::Backend::avx2;
  return cfg;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    std::string help;
    const auto cfg = parse_args(args, &help);
    if (!cfg) {
      out << help;
      return kExitOk;
    }
    const CommandResult res = run_command(*cfg);
    out << render(res, cfg->format);
    return res.exit_code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitDiscrepancy;
  }
}

}  // namespace efx::cli
