#include "snax/runtime/engine.hpp"

#include <algorithm>

#include "snax/core/substitute.hpp"
#include "snax/parser/render.hpp"
#include "snax/runtime/dst.hpp"
#include "snax/runtime/eta.hpp"

namespace snax {

std::string ruleName(Step::Rule r) {
  switch (r) {
    case Step::Rule::Cut: return "CUT";
    case Step::Rule::Snip: return "SNIP";
    case Step::Rule::Write: return "WRITE";
    case Step::Rule::Read: return "READ";
    case Step::Rule::Copy: return "COPY";
    case Step::Rule::Call: return "CALL";
  }
  return {};
}

std::string kindName(EngineError::Kind k) {
  switch (k) {
    case EngineError::Kind::IllFormedSnip: return "IllFormedSnip";
    case EngineError::Kind::DoubleWrite: return "DoubleWrite";
    case EngineError::Kind::PassMismatch: return "PassMismatch";
    case EngineError::Kind::UnexpandedCopy: return "UnexpandedCopy";
    case EngineError::Kind::BadEntry: return "BadEntry";
  }
  return {};
}

std::string kindName(RunOutcome::Kind k) {
  switch (k) {
    case RunOutcome::Kind::Final: return "Final";
    case RunOutcome::Kind::Stuck: return "Stuck";
    case RunOutcome::Kind::BoundExceeded: return "BoundExceeded";
  }
  return {};
}

std::size_t RoundRobinScheduler::choose(const std::vector<Step>& steps, const Configuration& c) {
  std::size_t best = 0;
  std::optional<std::size_t> after;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    std::uint64_t id = c.threads[steps[i].thread].id;
    if (id < c.threads[steps[best].thread].id) best = i;
    if (last_ && id > *last_ && (!after || id < c.threads[steps[*after].thread].id)) after = i;
  }
  std::size_t pick = after.value_or(best);
  last_ = c.threads[steps[pick].thread].id;
  return pick;
}

std::size_t SeededRandomScheduler::choose(const std::vector<Step>& steps, const Configuration&) {
  return static_cast<std::size_t>(rng_() % steps.size());
}

std::unique_ptr<Scheduler> makeScheduler(const SchedulerSpec& spec) {
  switch (spec.kind) {
    case SchedulerSpec::Kind::RoundRobin: return std::make_unique<RoundRobinScheduler>();
    case SchedulerSpec::Kind::SeededRandom: return std::make_unique<SeededRandomScheduler>(spec.seed);
    case SchedulerSpec::Kind::Exhaustive: return std::make_unique<FirstStepScheduler>();
  }
  return nullptr;
}

ProcPtr pass(const Storable& s, const Costorable& t, Dialect dialect) {
  auto mismatch = [&]() -> ProcPtr {
    throw EngineError(EngineError::Kind::PassMismatch,
                      "cannot pass " + renderStorable(s) + " to " + renderCostorable(t));
  };
  if (const auto* v = s.as<Storable::Pair>()) {
    const auto* k = t.as<Costorable::Pair>();
    if (!k) return mismatch();
    if (dialect == Dialect::Snax || !v->components || !k->binders) return k->body;
    return substitute(k->body, Substitution{{k->binders->first, v->components->first},
                                            {k->binders->second, v->components->second}});
  }
  if (s.as<Storable::Unit>()) {
    const auto* k = t.as<Costorable::Unit>();
    return k ? k->body : mismatch();
  }
  if (const auto* v = s.as<Storable::Tag>()) {
    const auto* k = t.as<Costorable::Sum>();
    if (!k) return mismatch();
    for (const auto& br : k->branches) {
      if (br.label != v->label) continue;
      if (dialect == Dialect::Snax || !br.binder || !v->payload) return br.body;
      return substitute(br.body, *v->payload, *br.binder);
    }
    return mismatch();
  }
  if (const auto* v = s.as<Storable::Ptr>()) {
    const auto* k = t.as<Costorable::Ptr>();
    return k ? substitute(k->body, v->target, k->binder) : mismatch();
  }
  const auto* v = s.as<Storable::Cont>();
  const auto* k = t.as<Costorable::Apply>();
  if (!k) return mismatch();
  return substitute(v->body, Substitution{{v->arg, k->arg}, {v->dest, k->dest}});
}

Engine::Engine(const Signature& sig, Dialect dialect, EngineOptions options)
    : sig_(expandSignature(sig, dialect)), dialect_(dialect), options_(options) {
  sig_.dialect = dialect;
}

Configuration Engine::initial(const std::string& entry) const {
  const ProcDef* def = sig_.findProc(entry);
  if (!def) throw EngineError(EngineError::Kind::BadEntry, "no procedure named " + entry);
  if (!def->params.empty())
    throw EngineError(EngineError::Kind::BadEntry, "entry procedure " + entry + " must take no arguments");
  Configuration c;
  BlockId root = c.allocate(def->destType);
  c.threads.push_back({c.nextThread++, Address::block(root), substitute(def->body, Address::block(root), def->destVar)});
  return c;
}

std::optional<Step> Engine::stepFor(const Configuration& c, std::size_t i) const {
  const Thread& t = c.threads[i];
  const ProcPtr& p = t.proc;
  if (p->is<Process::Cut>()) return Step{Step::Rule::Cut, i, t.dest, std::nullopt};
  if (const auto* n = p->as<Process::Snip>()) {
    auto d = dst(n->writer);
    if (d.size() != 1 || *d.begin() != n->target)
      throw EngineError(EngineError::Kind::IllFormedSnip,
                        "snip " + renderAddress(n->target) + " writer does not write exactly that address");
    return Step{Step::Rule::Snip, i, n->target, std::nullopt};
  }
  if (const auto* n = p->as<Process::Write>()) {
    if (n->dest != t.dest || !c.hasCell(n->dest)) return std::nullopt;
    return Step{Step::Rule::Write, i, n->dest, std::nullopt};
  }
  if (const auto* n = p->as<Process::Read>()) {
    if (!c.filled(n->src)) return std::nullopt;
    return Step{Step::Rule::Read, i, t.dest, n->src};
  }
  if (const auto* n = p->as<Process::Copy>()) {
    if (n->dest != t.dest || !c.filled(n->src) || !c.hasCell(n->dest)) return std::nullopt;
    return Step{Step::Rule::Copy, i, n->dest, n->src};
  }
  return Step{Step::Rule::Call, i, t.dest, std::nullopt};
}

std::vector<Step> Engine::enabledSteps(const Configuration& c) const {
  std::vector<Step> out;
  for (std::size_t i = 0; i < c.threads.size(); ++i)
    if (auto s = stepFor(c, i)) out.push_back(*s);
  return out;
}

Configuration Engine::applyStep(const Configuration& before, const Step& s) const {
  Configuration c = before;
  Thread& t = c.threads.at(s.thread);
  const ProcPtr p = t.proc;
  auto fill = [&](const Address& a, const Storable& value) {
    auto it = c.cells.find(a);
    if (it == c.cells.end()) throw EngineError(EngineError::Kind::DoubleWrite, "no cell at " + renderAddress(a));
    if (it->second) throw EngineError(EngineError::Kind::DoubleWrite, "cell " + renderAddress(a) + " is already filled");
    it->second = value;
    c.threads.erase(c.threads.begin() + static_cast<std::ptrdiff_t>(s.thread));
  };
  switch (s.rule) {
    case Step::Rule::Cut: {
      const auto* n = p->as<Process::Cut>();
      Address alpha = Address::block(c.allocate(n->type));
      t.proc = substitute(n->reader, alpha, n->var);
      c.threads.push_back({c.nextThread++, alpha, substitute(n->writer, alpha, n->var)});
      break;
    }
    case Step::Rule::Snip: {
      const auto* n = p->as<Process::Snip>();
      if (!options_.skipSnipEmptyCell) {
        if (c.hasCell(n->target))
          throw EngineError(EngineError::Kind::IllFormedSnip, "cell " + renderAddress(n->target) + " already exists");
        c.cells[n->target] = std::nullopt;
      }
      t.proc = n->reader;
      c.threads.push_back({c.nextThread++, n->target, n->writer});
      break;
    }
    case Step::Rule::Write: {
      const auto* n = p->as<Process::Write>();
      fill(n->dest, n->value);
      break;
    }
    case Step::Rule::Read: {
      const auto* n = p->as<Process::Read>();
      const Storable* payload = c.filled(n->src);
      if (!payload) throw EngineError(EngineError::Kind::PassMismatch, "read of empty " + renderAddress(n->src));
      t.proc = pass(*payload, n->handler, dialect_);
      break;
    }
    case Step::Rule::Copy: {
      const auto* n = p->as<Process::Copy>();
      const Storable* payload = c.filled(n->src);
      if (!payload) throw EngineError(EngineError::Kind::PassMismatch, "copy of empty " + renderAddress(n->src));
      if (dialect_ == Dialect::Snax && !payload->as<Storable::Ptr>() && !payload->as<Storable::Cont>())
        throw EngineError(EngineError::Kind::UnexpandedCopy,
                          "copy of " + renderStorable(*payload) + " needs expansion first");
      Storable value = *payload;
      fill(n->dest, value);
      break;
    }
    case Step::Rule::Call: {
      const auto* n = p->as<Process::Call>();
      const ProcDef* def = sig_.findProc(n->proc);
      if (!def || def->params.size() != n->args.size())
        throw EngineError(EngineError::Kind::BadEntry, "bad call to " + n->proc);
      Substitution sub{{def->destVar, n->dest}};
      for (std::size_t i = 0; i < n->args.size(); ++i) sub[def->params[i].var] = n->args[i];
      t.proc = substitute(def->body, sub);
      break;
    }
  }
  return c;
}

std::string Engine::traceLine(std::size_t n, const Configuration& before, const Step& s) const {
  std::string out = "step " + std::to_string(n) + ": " + ruleName(s.rule) + " @ dest=" + renderAddress(s.dest);
  if (s.src) out += " src=" + renderAddress(*s.src);
  if (s.rule == Step::Rule::Cut) out += " fresh=α" + std::to_string(before.nextBlock);
  return out;
}

std::vector<std::string> Engine::blockedReasons(const Configuration& c) const {
  std::vector<std::string> out;
  for (const auto& t : c.threads) {
    std::string who = "thread @" + renderAddress(t.dest) + ": ";
    if (const auto* n = t.proc->as<Process::Read>()) {
      out.push_back(who + "read awaits " + (c.hasCell(n->src) ? "empty " : "unallocated ") + renderAddress(n->src));
    } else if (const auto* n = t.proc->as<Process::Copy>()) {
      if (!c.filled(n->src))
        out.push_back(who + "copy awaits " + (c.hasCell(n->src) ? "empty " : "unallocated ") + renderAddress(n->src));
      else
        out.push_back(who + "copy target " + renderAddress(n->dest) + " has no empty cell");
    } else if (const auto* n = t.proc->as<Process::Write>()) {
      out.push_back(who + "write target " + renderAddress(n->dest) + " has no empty cell");
    } else {
      out.push_back(who + "cannot step: " + renderProcess(t.proc));
    }
  }
  return out;
}

RunOutcome Engine::run(const std::string& entry, Scheduler& scheduler, std::size_t stepBound) const {
  RunOutcome out;
  out.config = initial(entry);
  for (;;) {
    auto steps = enabledSteps(out.config);
    if (steps.empty()) {
      if (out.config.final()) {
        out.kind = RunOutcome::Kind::Final;
      } else {
        out.kind = RunOutcome::Kind::Stuck;
        out.blocked = blockedReasons(out.config);
      }
      return out;
    }
    if (out.steps >= stepBound) {
      out.kind = RunOutcome::Kind::BoundExceeded;
      return out;
    }
    const Step& s = steps[scheduler.choose(steps, out.config)];
    out.trace.push_back(traceLine(out.steps + 1, out.config, s));
    out.config = applyStep(out.config, s);
    ++out.steps;
  }
}

}  // namespace snax
