#pragma once

#include "kacspec/io.hpp"
#include "kacspec/limits.hpp"
#include "kacspec/symmfunc.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace kacspec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Relative --output paths are resolved against this directory when it is set.
inline constexpr const char* kOutputDirEnv = "KACSPEC_OUTPUT_DIR";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepConfig {
  std::size_t n_min = 1;
  std::size_t n_max = 10;
  /// Empty means every k in 0..floor((n+1)/2).
  std::vector<std::int64_t> ks;
  RouteSet routes;
  OutputFormat format = OutputFormat::Csv;
  /// Empty means the caller's output stream.
  std::string output;
  bool allow_large = false;
  unsigned jobs = 1;

  Limits limits() const { return allow_large ? Limits::unlimited() : Limits{}; }
  /// Throws UsageError.
  void validate() const;
};

/// "lhs_dp,rhs_dp,..." or "all". Throws UsageError on unknown names.
RouteSet parse_routes(const std::string& text);

/// Sweep over n_min..n_max; mismatching rows are also reported on `err`.
int cmd_verify(const SweepConfig& cfg, std::ostream& out, std::ostream& err);

int cmd_spectrum(std::size_t n, OutputFormat format, std::ostream& out, std::ostream& err);

struct BenchConfig {
  std::vector<std::size_t> ns;
  std::vector<std::int64_t> ks;  // empty: all valid k
  std::vector<std::string> routes{"lhs_dp", "rhs_dp", "charpoly", "rhs_enum", "determinant", "pyramid"};
  std::size_t repetitions = 5;
  bool allow_large = false;
};

/// CSV "n,route,status,repetitions,median_ns"; routes beyond their cap are
/// reported as "skipped". Timing is reported, never judged.
int cmd_bench(const BenchConfig& cfg, std::ostream& out, std::ostream& err);

/// Full command line (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kacspec::cli
