#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mbasis::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kBudgetExceeded = 3,
  kInvariantViolation = 4,
};

inline constexpr std::uint64_t kDefaultSeed = 20240611;
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct RunConfig {
  std::string subcommand;
  std::string model_path;
  /// Absent: 2 * max(rank A, 4), a heuristic with no completeness guarantee.
  std::optional<std::int64_t> max_degree;
  std::uint64_t seed = kDefaultSeed;
  std::string format = "text";
  std::string output;  // empty: stdout
  std::uint64_t budget = kDefaultBudget;

  // fibers
  std::string t;
  std::size_t min_size = 1;
  // indispensable
  bool monomials = false;
  bool binomials = false;
  std::size_t walk_steps = 0;
  // basis
  std::string verify_path;
  // check-norm-reducing
  std::string basis_path;
};

/// Parses argv-style arguments (without the program name) and runs the
/// subcommand. Reports go to `out` (or --output), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mbasis::cli
