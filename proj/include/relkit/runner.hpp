#ifndef RELKIT_RUNNER_HPP
#define RELKIT_RUNNER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relkit/document.hpp"
#include "relkit/sampling.hpp"

namespace relkit {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInputError = 2;

struct RunOptions {
  std::uint64_t seed = kDefaultSeed;
  std::optional<RatVector> point;
  std::optional<Rational> lambda;
  std::optional<RatMatrix> matrix;
};

/// Raw input: a file name (for diagnostics) and its text.
struct RunInput {
  std::string source;
  std::string text;
};

struct RunReport {
  Json json;
  int exit_code = kExitOk;
  /// One human-readable line per check, "PASS <id> <check> ..." or
  /// "FAIL <id> <check> ...".
  std::vector<std::string> lines;
};

/// Commands: ri-check, ri-point, suite, normal-cone, separate, qri-sep,
/// graph-ri, epi-ri, image-ri, diff-ri, seq-classify, verify,
/// verify-corpus. Never throws for bad input; errors become exit code 2.
RunReport run(const std::string& command, const RunOptions& options, const std::vector<RunInput>& inputs);

const std::vector<std::string>& command_names();

/// "1/2,0" -> (1/2, 0).
RatVector parse_vector_arg(std::string_view text);
/// "1,1;0,1" -> rows (1,1) and (0,1).
RatMatrix parse_matrix_arg(std::string_view text);

}  // namespace relkit

#endif  // RELKIT_RUNNER_HPP
