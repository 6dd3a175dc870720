#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "stirep/pulses.hpp"

namespace stirep::cli {

enum class Command { Fields, Propagate, Orders, Radius, Sweep, Contour };
enum class OutputFormat { Csv, Json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

/// Inclusive `start:stop:step` range.
struct GridSpec {
  double start = 0.0;
  double stop = 0.0;
  double step = 0.0;

  std::vector<double> values() const;
};

/// Throws DomainError on anything other than three numbers with step > 0 and
/// stop >= start.
GridSpec parse_grid(std::string_view text);

struct RunConfig {
  std::optional<Command> command;
  PulseFamily family = PulseFamily::Shaped;

  double phi0 = 0.12815;
  double v0 = 0.028;  // in units of T
  double T = 1.0;
  double rho = 0.0;

  double peak = 0.0;
  double delay = 0.0;
  double sigma = 0.04;
  double waist_factor = 1.0;
  int power = 1;
  double switch_rate = 4.0;

  std::optional<GridSpec> phi0_grid;
  std::optional<GridSpec> rho_grid;
  std::optional<GridSpec> peak_grid;
  std::optional<GridSpec> delay_grid;

  std::size_t n_grid = 4001;
  double tol = 1e-10;
  double threshold = 1e-4;
  std::string output;  // defaults to stirep_<command>.<format>
  OutputFormat format = OutputFormat::Csv;

  /// Checks every field against the owning module's preconditions.
  void validate() const;
  std::string output_path() const;
};

/// Default config, with n_grid taken from STIREP_NGRID when set.
RunConfig default_config();

/// Applies `key = value` lines (`#` starts a comment) on top of `base`.
RunConfig parse_config_text(std::string_view text, RunConfig base);

/// Parses command-line arguments; values from --config are applied first and
/// explicit flags override them. Throws DomainError on invalid input.
RunConfig parse_args(int argc, const char* const* argv);

/// Header plus rows of optional numbers (empty cell when absent).
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::optional<double>>> rows;
};

std::string format_number(double value);
std::string to_csv(const Table& table);
std::string to_json(const Table& table, std::string_view command, std::string_view summary);
Table read_csv(std::string_view text);

/// Writes to a temporary sibling file and renames it into place.
void write_atomic(const std::string& path, const std::string& content);

struct RunOutcome {
  Table table;
  std::string summary;
};

/// Executes the configured experiment without touching the filesystem.
RunOutcome execute(const RunConfig& config);

/// Full CLI behaviour: execute, write the output file, print the summary to
/// `out`, or a JSON error record to `err`. Returns the process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses and runs; used by main().
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stirep::cli
