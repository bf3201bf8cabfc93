#pragma once

#include <optional>
#include <string>

#include "spingraph/report.hpp"
#include "spingraph/runspec.hpp"

namespace spingraph {

inline constexpr const char* kToolName = "spingraph";
inline constexpr const char* kToolVersion = "1.0.0";

// Command-line flag values; unset optionals fall back to the spec file and
// then to the built-in defaults.
struct CommandOptions {
  std::string spec_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> samples;
  std::optional<std::string> max_spin;
  std::optional<int> degree_cap;
  std::optional<int> quadrature_order;
  std::string format = "table";  // "table" or "json-like"
  std::optional<std::string> out_path;
  bool corrupt = false;            // check: negative-control fixture
  bool leg_casimirs_only = false;  // superint: truncated generator fixture
};

Report cmd_sectors(const RunSpec& spec);
Report cmd_check(const RunSpec& spec, bool corrupt, bool& failed);
Report cmd_superint(const RunSpec& spec, bool leg_casimirs_only);
Report cmd_trace(const RunSpec& spec);
Report cmd_spherical(const RunSpec& spec);
Report cmd_eval(const RunSpec& spec);

// Loads the spec, applies flag overrides, dispatches the verb, and renders
// the report to stdout or --out.  Returns the process exit code:
// 0 success, 1 check failure, 2 malformed spec or usage.
int run_command(const std::string& verb, const CommandOptions& options);

}  // namespace spingraph
