#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "snax/conformance/explore.hpp"
#include "snax/conformance/harness.hpp"
#include "snax/layout/layout.hpp"
#include "snax/parser/parser.hpp"
#include "snax/runtime/engine.hpp"
#include "snax/typecheck/checker.hpp"

namespace snax {

namespace {

struct Options {
  std::string file;
  std::string dialect = "snax";
  std::string entry = "main";
  std::string scheduler = "seeded";
  std::uint64_t seed = 0;
  std::size_t bound = 100000;
  bool dump = false;
  bool unchecked = false;
  std::size_t schedules = 100;
  std::string typeName;
};

struct Loaded {
  Signature sig;
  Dialect dialect;
};

class Failed {
 public:
  explicit Failed(int code) : code(code) {}
  int code;
};

Loaded load(const Options& o, std::ostream& out, std::ostream& err) {
  std::ifstream in(o.file, std::ios::binary);
  if (!in) {
    err << "error: cannot read " << o.file << "\n";
    throw Failed(kExitUsage);
  }
  std::stringstream text;
  text << in.rdbuf();
  SourceFile src{o.file, text.str(), o.dialect == "sax" ? Dialect::Sax : Dialect::Snax};
  ParseResult parsed = parseSignature(src);
  if (!parsed.ok()) {
    out << formatParseError(*parsed.error) << "\n";
    throw Failed(kExitRejected);
  }
  Signature sig = std::move(*parsed.signature);
  auto diags = checkSignature(sig.dialect, sig);
  if (o.unchecked) {
    for (const auto& d : diags) err << "warning: " << o.file << ": " << formatDiagnostic(d) << "\n";
  } else {
    for (const auto& d : diags) out << o.file << ": " << formatDiagnostic(d) << "\n";
    if (!diags.empty()) throw Failed(kExitRejected);
  }
  Dialect dialect = sig.dialect;
  return {std::move(sig), dialect};
}

SchedulerSpec schedulerSpec(const Options& o) {
  SchedulerSpec spec;
  spec.seed = o.seed;
  if (o.scheduler == "rr") spec.kind = SchedulerSpec::Kind::RoundRobin;
  else if (o.scheduler == "exhaustive") spec.kind = SchedulerSpec::Kind::Exhaustive;
  else spec.kind = SchedulerSpec::Kind::SeededRandom;
  return spec;
}

int exitFor(RunOutcome::Kind k) {
  switch (k) {
    case RunOutcome::Kind::Final: return kExitOk;
    case RunOutcome::Kind::Stuck: return kExitStuck;
    case RunOutcome::Kind::BoundExceeded: return kExitBound;
  }
  return kExitOk;
}

int doCheck(const Options& o, std::ostream& out, std::ostream& err) {
  Loaded l = load(o, out, err);
  out << "ok: " << l.sig.definitionCount() << " definitions\n";
  return kExitOk;
}

int doRun(const Options& o, bool trace, std::ostream& out, std::ostream& err) {
  Loaded l = load(o, out, err);
  Engine engine(l.sig, l.dialect);
  auto scheduler = makeScheduler(schedulerSpec(o));
  RunOutcome r = engine.run(o.entry, *scheduler, o.bound);
  if (trace)
    for (const auto& line : r.trace) out << line << "\n";
  out << kindName(r.kind) << " after " << r.steps << " steps\n";
  for (const auto& b : r.blocked) out << "blocked: " << b << "\n";
  if (o.dump) out << renderMemory(r.config, engine.signature());
  return exitFor(r.kind);
}

int doLayout(const Options& o, std::ostream& out, std::ostream& err) {
  Loaded l = load(o, out, err);
  TypePtr t;
  try {
    t = parseType(o.typeName);
  } catch (const ParseFailure& e) {
    err << "error: bad type " << o.typeName << ": " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    out << layoutReport(t, l.sig) << "\n";
  } catch (const std::exception& e) {
    out << "error: " << e.what() << "\n";
    return kExitRejected;
  }
  return kExitOk;
}

int doConform(const Options& o, std::ostream& out, std::ostream& err) {
  Loaded l = load(o, out, err);
  Engine engine(l.sig, l.dialect);
  std::vector<SchedulerSpec> specs;
  for (std::size_t i = 0; i < o.schedules; ++i)
    specs.push_back({SchedulerSpec::Kind::SeededRandom, o.seed + i});
  ConformanceReport report = preservationHarness(engine, o.entry, specs);
  out << "preservation: " << report.summary() << "\n";
  for (const auto& r : report.records()) out << r << "\n";

  Exploration ex = exploreInterleavings(engine, o.entry, o.bound);
  out << "progress: states=" << ex.states << " stuck=" << ex.stuck.size() + ex.errors.size()
      << (ex.boundExceeded ? " bound-exceeded" : "") << "\n";
  for (const auto& s : ex.stuck) out << "stuck state:\n" << s;
  for (const auto& e : ex.errors) out << "engine error: " << e << "\n";
  out << "determinism: finals=" << ex.finals.size() << "\n";

  if (!report.ok() || !ex.stuck.empty() || !ex.errors.empty()) return kExitConformance;
  if (ex.boundExceeded) return kExitBound;
  return kExitOk;
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"SAX/SNAX checker, interpreter and conformance harness", "snax"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> dialects{"sax", "snax"};

  auto addDialect = [&](CLI::App* sub) {
    sub->add_option("--dialect", o.dialect, "Dialect when the file has no #dialect pragma")
        ->check(CLI::IsMember(dialects))
        ->capture_default_str();
  };
  auto addFile = [&](CLI::App* sub) { sub->add_option("file", o.file, "Signature file")->required(); };
  auto addExec = [&](CLI::App* sub) {
    sub->add_option("--entry", o.entry, "Zero-argument entry procedure")->capture_default_str();
    sub->add_option("--scheduler", o.scheduler, "rr, seeded or exhaustive")
        ->check(CLI::IsMember({"rr", "seeded", "exhaustive"}))
        ->capture_default_str();
    sub->add_option("--seed", o.seed, "Seed for the seeded scheduler")->capture_default_str();
    sub->add_option("--bound", o.bound, "Step bound")->capture_default_str();
    sub->add_flag("--dump", o.dump, "Print the final memory");
    sub->add_flag("--unchecked", o.unchecked, "Execute even when type checking fails");
  };

  auto* check = app.add_subcommand("check", "Parse and type-check a signature");
  addFile(check);
  addDialect(check);

  auto* run = app.add_subcommand("run", "Run an entry procedure to completion");
  addFile(run);
  addDialect(run);
  addExec(run);

  auto* trace = app.add_subcommand("trace", "Run and print one line per step");
  addFile(trace);
  addDialect(trace);
  addExec(trace);

  auto* layout = app.add_subcommand("layout", "Print the size and offsets of a type");
  addFile(layout);
  layout->add_option("type", o.typeName, "Type expression or name")->required();
  addDialect(layout);

  auto* conform = app.add_subcommand("conform", "Preservation, progress and determinism checks");
  addFile(conform);
  addDialect(conform);
  conform->add_option("--entry", o.entry, "Zero-argument entry procedure")->capture_default_str();
  conform->add_option("--schedules", o.schedules, "Number of seeded schedules")->capture_default_str();
  conform->add_option("--seed", o.seed, "First seed")->capture_default_str();
  conform->add_option("--bound", o.bound, "State bound for exhaustive exploration")->capture_default_str();
  conform->add_flag("--unchecked", o.unchecked, "Execute even when type checking fails");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (check->parsed()) return doCheck(o, out, err);
    if (run->parsed()) return doRun(o, false, out, err);
    if (trace->parsed()) return doRun(o, true, out, err);
    if (layout->parsed()) return doLayout(o, out, err);
    return doConform(o, out, err);
  } catch (const Failed& f) {
    return f.code;
  } catch (const EngineError& e) {
    err << "error: " << kindName(e.kind) << ": " << e.what() << "\n";
    return e.kind == EngineError::Kind::BadEntry ? kExitUsage : kExitStuck;
  }
}

}  // namespace snax
