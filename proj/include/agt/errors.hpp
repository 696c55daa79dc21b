#pragma once

#include <stdexcept>
#include <string>

namespace agt {

// Base class for everything this library throws on purpose.
struct AgtError : std::runtime_error {
  explicit AgtError(const std::string& msg) : std::runtime_error(msg) {}
};

// Scenario / spec validation failures.
struct ValidationError : AgtError {
  using AgtError::AgtError;
};

struct NonPositiveWeight : ValidationError {
  using ValidationError::ValidationError;
};
struct MissingSelfLoop : ValidationError {
  using ValidationError::ValidationError;
};
struct GoalUnreachable : ValidationError {
  using ValidationError::ValidationError;
};
struct PriorNotNormalized : ValidationError {
  using ValidationError::ValidationError;
};
struct ScenarioParseError : ValidationError {
  using ValidationError::ValidationError;
};
struct StrategyDomainMismatch : ValidationError {
  using ValidationError::ValidationError;
};
struct ConfigInvalid : ValidationError {
  using ValidationError::ValidationError;
};
struct UnknownFormat : ValidationError {
  using ValidationError::ValidationError;
};

// Runtime failures.
struct NoOutgoingEdge : AgtError {
  using AgtError::AgtError;
};
struct IllegalAction : AgtError {
  using AgtError::AgtError;
};
struct DepthCapExceeded : AgtError {
  using AgtError::AgtError;
};
struct SizeLimitExceeded : AgtError {
  using AgtError::AgtError;
};
struct NonConvergence : AgtError {
  using AgtError::AgtError;
};
struct DegenerateValue : AgtError {
  using AgtError::AgtError;
};

// Solve budget ran out before the requested gap was reached.
struct IterationBudgetExhausted : AgtError {
  double best_gap;
  int iterations;
  IterationBudgetExhausted(const std::string& msg, double gap, int iters)
      : AgtError(msg), best_gap(gap), iterations(iters) {}
};

}  // namespace agt
