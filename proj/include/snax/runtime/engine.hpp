#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "snax/runtime/configuration.hpp"

namespace snax {

struct Step {
  enum class Rule { Cut, Snip, Write, Read, Copy, Call };
  Rule rule;
  std::size_t thread = 0;  // index into Configuration::threads
  Address dest;            // the thread's destination, or the written cell
  std::optional<Address> src;
};

std::string ruleName(Step::Rule r);

/// Broken engine invariants: never raised for checked programs.
class EngineError : public std::runtime_error {
 public:
  enum class Kind { IllFormedSnip, DoubleWrite, PassMismatch, UnexpandedCopy, BadEntry };
  EngineError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
  Kind kind;
};

std::string kindName(EngineError::Kind k);

struct EngineOptions {
  /// Fault injection: snips spawn their writer without the empty cell.
  bool skipSnipEmptyCell = false;
};

class Scheduler {
 public:
  virtual ~Scheduler() = default;
  /// Index into `steps` (non-empty).
  virtual std::size_t choose(const std::vector<Step>& steps, const Configuration& c) = 0;
};

class RoundRobinScheduler : public Scheduler {
 public:
  std::size_t choose(const std::vector<Step>& steps, const Configuration& c) override;

 private:
  std::optional<std::uint64_t> last_;
};

class SeededRandomScheduler : public Scheduler {
 public:
  explicit SeededRandomScheduler(std::uint64_t seed) : rng_(seed) {}
  std::size_t choose(const std::vector<Step>& steps, const Configuration& c) override;

 private:
  std::mt19937_64 rng_;
};

/// Always the first enabled step: the leftmost path of the exhaustive search.
class FirstStepScheduler : public Scheduler {
 public:
  std::size_t choose(const std::vector<Step>&, const Configuration&) override { return 0; }
};

struct SchedulerSpec {
  enum class Kind { RoundRobin, SeededRandom, Exhaustive };
  Kind kind = Kind::SeededRandom;
  std::uint64_t seed = 0;
};

std::unique_ptr<Scheduler> makeScheduler(const SchedulerSpec& spec);

struct RunOutcome {
  enum class Kind { Final, Stuck, BoundExceeded };
  Kind kind = Kind::Final;
  Configuration config;
  std::vector<std::string> trace;
  std::vector<std::string> blocked;  // one reason per stuck thread
  std::size_t steps = 0;
};

std::string kindName(RunOutcome::Kind k);

/// Executes a checked signature. SNAX copies are η-expanded on construction.
class Engine {
 public:
  Engine(const Signature& sig, Dialect dialect, EngineOptions options = {});

  const Signature& signature() const { return sig_; }
  Dialect dialect() const { return dialect_; }

  /// {thread α0 (body[α0/z]), cell α0} for a zero-argument procedure.
  Configuration initial(const std::string& entry) const;

  std::vector<Step> enabledSteps(const Configuration& c) const;
  Configuration applyStep(const Configuration& c, const Step& s) const;
  std::string traceLine(std::size_t n, const Configuration& before, const Step& s) const;
  /// Why each thread of a stuck configuration cannot move.
  std::vector<std::string> blockedReasons(const Configuration& c) const;

  RunOutcome run(const std::string& entry, Scheduler& scheduler, std::size_t stepBound) const;

 private:
  Signature sig_;
  Dialect dialect_;
  EngineOptions options_;

  std::optional<Step> stepFor(const Configuration& c, std::size_t i) const;
};

/// pass(S, T) for the given dialect; throws EngineError on a shape mismatch.
ProcPtr pass(const Storable& s, const Costorable& t, Dialect dialect);

}  // namespace snax
