#pragma once
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tds {

// Exit codes shared by the CLI and the batch runner.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitInvalid = 4;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed files, bad arguments, violated preconditions on caller data.
struct input_error : error {
  using error::error;
};

// The instance admits no total dominating set (isolated points), or a
// solver precondition on minimum degree failed. Carries offending ids.
struct infeasible_error : error {
  std::vector<int> ids;
  explicit infeasible_error(const std::string& msg, std::vector<int> bad = {})
      : error(msg), ids(std::move(bad)) {}
};

// A search exceeded its configured node budget. Never a wrong answer.
struct budget_error : error {
  using error::error;
};

// An internal invariant failed; a bug, not bad input.
struct internal_error : error {
  using error::error;
};

}  // namespace tds
