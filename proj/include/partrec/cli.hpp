#ifndef PARTREC_CLI_HPP
#define PARTREC_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace partrec::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

enum class OutputFormat { plain, csv, json };

/// Entry point shared by the executable and the tests. Writes normal output
/// to `out`, diagnostics to `err`, and returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct BenchTiming {
  std::string method;
  std::string kind;  // "p" or "parity"
  double seconds = 0.0;
  std::uint64_t checksum = 0;  // Σ values mod 2^64
};

struct BenchOptions {
  std::size_t max_n = 0;
  std::vector<std::string> methods;  // euler, gf, direct, thm7, macmahon
  // Testing aid: perturb one method's output at one index before the
  // agreement check runs.
  std::optional<std::pair<std::string, std::size_t>> fault;
};

struct BenchReport {
  std::vector<BenchTiming> timings;
  std::optional<std::size_t> first_disagreement;
  std::string disagreement;  // which methods disagreed
};

BenchReport run_bench(const BenchOptions& options);

}  // namespace partrec::cli

#endif  // PARTREC_CLI_HPP
