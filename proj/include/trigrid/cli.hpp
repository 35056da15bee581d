#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace trigrid::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
  kOk = 0,
  kUsageError = 1,
  kVerificationFailed = 2,
  kIoError = 3,
};

/// Invalid flag combination or out-of-range value; reported as a single line.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;     // verify-isoperimetry, packing, compress, search, lions, render
  std::string subcommand;  // simulate|exact|bounds|verify for search; simulate|couple|exact for lions
  int n = 0;
  int n_max = 0;
  std::size_t k = 0;
  std::string kind = "initial";
  int axis = 1;
  std::string side = "left";
  std::string set_path;
  std::string trace_path;
  bool exhaustive = false;
  bool allow_n6 = false;
  bool segments = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t max_m = 0;
  std::size_t max_l = 0;
  int exact_max_n = 3;
  bool render = false;
  bool bottom_first = false;
  std::string format = "json";  // json | csv | ascii
  std::string out;
  unsigned threads = 1;
};

/// Throws UsageError on the first problem found.
void validate(const RunConfig& config);

struct Report {
  std::string command;
  nlohmann::json config;
  std::string version = kVersion;
  nlohmann::json payload;
  /// Text body for csv / ascii output.
  std::string text;
  bool verified = true;
  double duration_ms = 0.0;

  nlohmann::json to_json() const;
};

/// Runs a validated configuration. Throws UsageError / IoError.
Report dispatch(const RunConfig& config);

/// Full command line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace trigrid::cli
