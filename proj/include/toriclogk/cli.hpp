#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "toriclogk/rational.hpp"

namespace toriclogk::cli {

enum class Command { Check, R, Futaki, Classify, Sweep, Oracle, Plot, P1Conic };
enum class Format { Json, Text, Svg };

struct RunConfig {
  Command command = Command::Check;
  std::optional<std::string> input_path;
  std::optional<std::string> builtin;
  std::optional<RatVec> lambda;
  std::optional<Rational> beta;
  std::optional<long> k_max;
  std::optional<std::vector<Rational>> alphas;
  std::optional<std::string> output;  // standard output when empty
  std::optional<Format> format;       // json, or svg for plot
};

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kIoError = 1;
inline constexpr int kDomainError = 2;

/// Validates the command-specific flags, computes the report and writes it
/// to config.output (or `out`). Errors go to `err` as a one-line JSON object
/// {"error": <code>, "message": <text>}.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (CLI11) into a RunConfig and calls run().
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace toriclogk::cli
