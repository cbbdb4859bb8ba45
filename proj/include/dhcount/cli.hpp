#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dhcount/counting.hpp"

namespace dhcount::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 2,
  kPrecondition = 3,
  kMismatch = 4,
  kPrecision = 5,
};

/// Everything a subcommand needs, as parsed from the command line.
struct RunConfig {
  std::string command;                  // count, verify, sweep, gsum-table, ...
  std::vector<std::uint32_t> p{7};      // sweep accepts several
  std::vector<std::uint32_t> r{1};
  std::uint32_t n = 3;
  std::vector<std::uint32_t> h;         // empty means (1, ..., 1)
  std::string lambda = "all";           // "g^k", coefficient list, or "all"
  std::vector<std::string> engines;     // empty means every engine
  long prec_bits = 0;                   // 0: environment or default
  int padic_pad = PadicCtx::kDefaultPad;
  std::string format = "csv";           // csv | json
  std::string output;                   // empty: stdout
  unsigned workers = 0;                 // 0: environment or hardware
  bool debug = false;
  bool no_timing = false;
  // gfun
  std::vector<std::string> top, bottom;
  // gamma-table
  std::uint32_t den = 0;                // 0: q - 1

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Parses argv-style tokens (without the program name). Throws InvalidInput
/// on malformed input; returns nullopt when help was requested (text is
/// written to `help`).
std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& help);

/// Canonical tokens reproducing cfg; parse_args(to_args(c)) == c.
std::vector<std::string> to_args(const RunConfig& cfg);

/// Runs the configured command, writing results to out and diagnostics to
/// err. Returns one of ExitCode.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Convenience: parse and run, mapping errors to exit codes.
int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// lambda spec -> field elements; "all" enumerates F_q including 0.
std::vector<FieldElement> parse_lambda(const FieldCtx& field, const std::string& spec);
/// "0" or "g^k".
std::string format_lambda(const FieldCtx& field, FieldElement x);

/// Precision and worker defaults after environment overrides
/// (DHCOUNT_PREC_BITS, DHCOUNT_WORKERS).
long effective_prec_bits(const RunConfig& cfg);
unsigned effective_workers(const RunConfig& cfg);

}  // namespace dhcount::cli
