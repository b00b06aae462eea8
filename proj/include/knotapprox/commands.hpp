#pragma once

// The four CLI commands as library calls producing a report and exit code.
//
// Exit codes: 0 success, 1 a verification check failed, 2 unreadable or
// malformed input, 3 crossing cap exceeded, 4 domain error, 5 internal
// consistency failure.

#include <cstdint>
#include <optional>
#include <string>

#include "knotapprox/algebra.hpp"
#include "knotapprox/error.hpp"
#include "knotapprox/skein.hpp"

namespace knotapprox {

enum class Command { Poly, Approx, Verify, Lambda };
enum class OutputFormat { Json, Tsv, Text };

struct RunConfig {
  Command command = Command::Poly;
  std::optional<std::string> pd;     // file path or corpus name
  std::optional<std::string> braid;  // "n: w1 w2 ..." or a file / corpus name
  std::optional<std::string> table;  // CoeffTable JSON file
  std::optional<std::string> which;  // homflypt | dubrovnik | kauffman
  std::optional<int> q_max;
  std::optional<int> n_max;
  std::optional<int> N_max;
  unsigned precision_bits = kDefaultPrecisionBits;
  std::size_t crossing_cap = kDefaultCrossingCap;
  OutputFormat format = OutputFormat::Text;
  std::uint64_t seed = 1;
  std::optional<std::string> only;
  int mutate = 0;
};

struct RunResult {
  int exit_code = 0;
  std::string output;       // report for stdout
  std::string diagnostics;  // message for stderr
};

std::optional<Command> parse_command(const std::string& name);
std::optional<OutputFormat> parse_format(const std::string& name);

int exit_code_for(ErrorKind kind) noexcept;

// Never throws for input problems; they become exit codes and diagnostics.
RunResult run(const RunConfig& config);

}  // namespace knotapprox
