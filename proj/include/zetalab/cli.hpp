#ifndef ZETALAB_CLI_HPP
#define ZETALAB_CLI_HPP

#include "zetalab/complex.hpp"
#include "zetalab/qpoly.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace zetalab::cli {

enum ExitCode : int { kOk = 0, kCheckFailure = 1, kConfigError = 2, kConvergenceFailure = 3 };

enum class OutputFormat { csv, json };

/// Everything a command needs. Numeric inputs stay textual until a command
/// opens its precision scope.
struct RunConfig {
  std::string command;
  int precision_digits = 60;
  /// Unset: per-command default.
  std::optional<int> max_m;
  /// "re,im;re,im;..."; empty selects the command's default grid.
  std::string grid;
  OutputFormat output_format = OutputFormat::csv;
  std::string output_path;
  /// Abel damping radius, conjecture only.
  std::string abel;
  PolyFamily family = PolyFamily::Q;
  int m = 0;
  bool roots = false;
  /// Multiplies every verify tolerance; test hook for the failure path.
  std::string tolerance_scale = "1";
  static constexpr bool seedless = true;
};

/// One rectangular table; every cell is already a string.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct CommandResult {
  Table table;
  int exit_code = kOk;
  /// Diagnostic for stderr; empty on success.
  std::string message;
};

/// Header row, comma separated, LF line endings, RFC 4180 quoting.
std::string render_csv(const Table& t);
/// Array of row objects keyed by column, all values strings, 2-space indent.
std::string render_json(const Table& t);
std::string render(const Table& t, OutputFormat f);

/// Parses "re,im;re,im;..." (an item without a comma is real). Needs an
/// active precision scope. Throws ConfigError.
std::vector<Cx> parse_grid(const std::string& text);

/// Throws ConfigError on an invalid configuration.
void validate(const RunConfig& c);

CommandResult cmd_coeffs(const RunConfig& c);
CommandResult cmd_qpoly(const RunConfig& c);
CommandResult cmd_verify(const RunConfig& c);
CommandResult cmd_conjecture(const RunConfig& c);
CommandResult cmd_laguerre(const RunConfig& c);
CommandResult cmd_appendix(const RunConfig& c);

/// Dispatches on c.command and maps library exceptions to exit codes.
CommandResult execute(const RunConfig& c);

/// Full command line (args[0] is the program name). Writes the table to
/// --out or `out`, diagnostics to `err`; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zetalab::cli

#endif  // ZETALAB_CLI_HPP
