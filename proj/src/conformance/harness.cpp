#include "snax/conformance/harness.hpp"

#include "snax/conformance/configuration_typing.hpp"
#include "snax/conformance/explore.hpp"
#include "snax/core/wellformed.hpp"

namespace snax {

std::string ConformanceReport::summary() const {
  return "schedules=" + std::to_string(schedules) + " steps=" + std::to_string(steps) +
         " failures=" + std::to_string(failures.size());
}

std::vector<std::string> ConformanceReport::records() const {
  std::vector<std::string> out;
  for (const auto& f : failures)
    out.push_back("failure schedule=" + std::to_string(f.schedule) + " step=" + std::to_string(f.step) +
                  " rule=" + f.rule + " item=" + f.item + " detail=" + f.detail);
  return out;
}

std::string kindName(ProgressResult::Kind k) {
  switch (k) {
    case ProgressResult::Kind::Pass: return "Pass";
    case ProgressResult::Kind::StuckFound: return "StuckFound";
    case ProgressResult::Kind::BoundExceeded: return "BoundExceeded";
  }
  return {};
}

namespace {

// Returns the first entry of `before` missing from `after`, if any.
const ConfigEntry* lostEntry(const ConfigContext& before, const ConfigContext& after, const Signature& sig) {
  for (const auto& e : before) {
    const ConfigEntry* now = findEntry(after, e.addr);
    if (!now || !typeEqual(now->type, e.type, sig)) return &e;
  }
  return nullptr;
}

}  // namespace

ConformanceReport preservationHarness(const Engine& engine, const std::string& entry,
                                      const std::vector<SchedulerSpec>& schedules, std::size_t stepBound) {
  const Signature& sig = engine.signature();
  ConformanceReport report;
  for (std::size_t s = 0; s < schedules.size(); ++s) {
    ++report.schedules;
    auto scheduler = makeScheduler(schedules[s]);
    Configuration c = engine.initial(entry);
    ConfigTyping typed = checkConfiguration({}, c, sig, engine.dialect());
    if (!typed.ok()) {
      report.failures.push_back({s, 0, typed.failure->rule, typed.failure->item, typed.failure->detail});
      continue;
    }
    ConfigContext delta = *typed.output;
    for (std::size_t n = 1; n <= stepBound; ++n) {
      std::vector<Step> steps;
      try {
        steps = engine.enabledSteps(c);
        if (steps.empty()) break;
        c = engine.applyStep(c, steps[scheduler->choose(steps, c)]);
      } catch (const EngineError& e) {
        report.failures.push_back({s, n, "ENGINE", kindName(e.kind), e.what()});
        break;
      }
      ++report.steps;
      typed = checkConfiguration({}, c, sig, engine.dialect());
      if (!typed.ok()) {
        report.failures.push_back({s, n, typed.failure->rule, typed.failure->item, typed.failure->detail});
        break;
      }
      if (const ConfigEntry* lost = lostEntry(delta, *typed.output, sig)) {
        report.failures.push_back({s, n, "GROW", renderAddress(lost->addr), "output context lost an entry"});
        break;
      }
      delta = std::move(*typed.output);
    }
  }
  return report;
}

ProgressResult progressHarness(const Engine& engine, const std::string& entry, std::size_t bound) {
  Exploration ex = exploreInterleavings(engine, entry, bound);
  ProgressResult out;
  out.states = ex.states;
  out.stuck = ex.stuck;
  out.stuck.insert(out.stuck.end(), ex.errors.begin(), ex.errors.end());
  if (!out.stuck.empty())
    out.kind = ProgressResult::Kind::StuckFound;
  else if (ex.boundExceeded)
    out.kind = ProgressResult::Kind::BoundExceeded;
  return out;
}

}  // namespace snax
