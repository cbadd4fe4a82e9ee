#pragma once

// Command-line configuration and command dispatch for the modlie tool.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "modlie/grading.hpp"

namespace modlie::cli {

class UsageError : public Error {
 public:
  using Error::Error;
};

/// Thrown by parse_config for --help; carries the help text.
struct HelpRequested {
  std::string text;
};

enum class Command { Verify, Switch, Analyze, Oracle };
enum class Case { Preswitch, BigField, PrimeField };

std::string_view command_name(Command c);
std::string_view case_name(Case c);

struct RunConfig {
  Command command = Command::Verify;
  std::uint32_t p = 0;
  unsigned n = 1;   // height of y
  unsigned s = 1;
  unsigned n1 = 2;  // height of x
  lie::Family family = lie::Family::AlbertZassenhaus;
  Case grading_case = Case::Preswitch;
  const ff::Field* field = nullptr;
  ff::FieldElement pi;
  ff::FieldElement sigma;
  std::int64_t q = 0;
  std::int64_t N = 0;
  std::int64_t max_degree = 0;
  std::string format = "json";
  bool allow_negative_control = false;
  std::uint64_t seed = 20240601;

  dp::Heights heights() const { return {p, n1, n}; }
};

/// Parses `command [flags]` (program name excluded). A `--config FILE` JSON
/// object supplies defaults that explicit flags override. Throws UsageError.
RunConfig parse_config(const std::vector<std::string>& args);

/// Every materialized setting of the run, for the report header.
nlohmann::json echo(const RunConfig& cfg);

struct RunResult {
  int exit_code = 0;  // 0 all checks pass, 1 some check failed
  std::string output;
};

RunResult run_command(const RunConfig& cfg);

}  // namespace modlie::cli
