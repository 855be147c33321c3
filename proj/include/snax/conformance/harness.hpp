#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "snax/runtime/engine.hpp"

namespace snax {

struct ConformanceFailure {
  std::size_t schedule = 0;
  std::size_t step = 0;  // 0 is the initial configuration
  std::string rule;
  std::string item;
  std::string detail;
};

struct ConformanceReport {
  std::size_t schedules = 0;
  std::size_t steps = 0;
  std::vector<ConformanceFailure> failures;

  bool ok() const { return failures.empty(); }
  /// "schedules=N steps=M failures=K"
  std::string summary() const;
  /// One "failure schedule=S step=N rule=R item=I detail=D" per failure.
  std::vector<std::string> records() const;
};

/// Runs each schedule, re-typing the configuration after every step and
/// requiring the output context to grow monotonically.
ConformanceReport preservationHarness(const Engine& engine, const std::string& entry,
                                      const std::vector<SchedulerSpec>& schedules, std::size_t stepBound = 100000);

struct ProgressResult {
  enum class Kind { Pass, StuckFound, BoundExceeded };
  Kind kind = Kind::Pass;
  std::size_t states = 0;
  std::vector<std::string> stuck;
};

std::string kindName(ProgressResult::Kind k);

/// Every reachable configuration is final or can step.
ProgressResult progressHarness(const Engine& engine, const std::string& entry, std::size_t bound = 100000);

}  // namespace snax
