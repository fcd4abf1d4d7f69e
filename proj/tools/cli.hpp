#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "riley/rational.hpp"
#include "riley/report.hpp"
#include "riley/two_bridge.hpp"

namespace riley::cli {

enum class Command { knot, poly, family, roots, signature, verify_conjecture, verify_theorem1, verify_theorem2, crosscheck };

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kInternal = 3 };

struct CliConfig {
  Command command = Command::knot;
  long p = 0;
  long q = 0;
  Family family = Family::EE;
  int m = 0;
  int n = 0;
  std::optional<Rational> x;
  bool isolate = false;
  bool json = false;
  int pmax = 0;
  /// An even --pmax was rounded down to the odd value below it.
  bool pmax_rounded = false;
  ReportFormat format = ReportFormat::jsonl;
  std::optional<std::string> out;
  int jobs = 1;
  int mmax = 0;
  int nmax = 0;
  std::vector<Rational> x0s;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by parse_args for -h/--help.
class HelpRequested : public std::exception {};

/// Arguments after the program name. Throws UsageError or HelpRequested.
CliConfig parse_args(const std::vector<std::string>& args);

const std::string& help_text();

/// Default worker count: RILEY_JOBS if set to a positive integer, else the
/// hardware concurrency (at least 1).
int default_jobs();

/// Executes a parsed command; returns the process exit code.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run with usage errors mapped to exit code 2.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace riley::cli
