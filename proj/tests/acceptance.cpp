// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "oracles.hpp"
#include "snax/conformance/explore.hpp"
#include "snax/conformance/harness.hpp"
#include "snax/core/alpha.hpp"
#include "snax/parser/render.hpp"
#include "snax/runtime/dst.hpp"
#include "snax/typecheck/checker.hpp"

using namespace snax;
using namespace testsupport;

namespace {

std::string corpus(const std::string& name) { return std::string(CORPUS_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Signature load(const std::string& name) { return loadSignature(corpus(name), slurp(corpus(name))); }

Address root(std::uint64_t id, Path p = {}) { return Address::block(BlockId{id}, std::move(p)); }

// Each check appends a reason to `why` and returns false on failure.
struct Check {
  std::vector<std::string> why;
  bool expect(bool ok, const std::string& what) {
    if (!ok) why.push_back(what);
    return ok;
  }
};

double seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since).count();
}

const std::vector<std::string> kRunnable = {"neg.snax", "neg.sax", "swap.snax", "map_main.snax", "map.sax",
                                            "layouts.snax"};

void corpusAccepted(Check& c) {
  auto t0 = std::chrono::steady_clock::now();
  for (auto [file, dialect] : {std::pair{"map.sax", Dialect::Sax}, std::pair{"swap.snax", Dialect::Snax},
                               std::pair{"neg.sax", Dialect::Sax}, std::pair{"neg.snax", Dialect::Snax},
                               std::pair{"map.snax", Dialect::Snax}}) {
    auto sig = load(file);
    c.expect(sig.dialect == dialect, std::string(file) + " has the wrong dialect");
    auto d = checkSignature(dialect, sig);
    c.expect(d.empty(), std::string(file) + ": " + (d.empty() ? "" : formatDiagnostic(d.front())));
  }
  double s = seconds(t0);
  c.expect(s < 1.0, "took " + std::to_string(s) + " s");
}

void corpusRejected(Check& c) {
  auto firstKind = [](const char* f) {
    auto sig = load(f);
    auto d = checkSignature(sig.dialect, sig);
    return d.empty() ? std::string("accepted") : d.front().kind;
  };
  for (auto [file, kind] : {std::pair{"unguarded.snax", "Unguarded"}, std::pair{"pair_write.snax", "EligibilityViolation"},
                            std::pair{"double_write.snax", "DestinationClash"}}) {
    auto got = firstKind(file);
    c.expect(got == kind, std::string(file) + " gave " + got);
  }
  auto r = parseSignature(SourceFile{"sax_form.snax", slurp(corpus("sax_form.snax"))});
  c.expect(!r.ok() && r.error->kind == ParseError::Kind::DialectMismatch, "sax_form.snax not a DialectMismatch");
}

void executionCorrect(Check& c) {
  auto timed = [&](const Signature& sig, const std::string& entry, SchedulerSpec spec) {
    auto t0 = std::chrono::steady_clock::now();
    auto r = runEntry(sig, entry, spec);
    double s = seconds(t0);
    c.expect(s < 1.0, entry + " took " + std::to_string(s) + " s");
    c.expect(r.kind == RunOutcome::Kind::Final, entry + " ended " + kindName(r.kind));
    return r;
  };
  for (const char* f : {"neg.snax", "neg.sax"}) {
    auto sig = load(f);
    c.expect(tagAt(timed(sig, "main", {}).config.cells, root(0)) == "ff", std::string(f) + ": tt did not become ff");
    c.expect(tagAt(timed(sig, "main_ff", {}).config.cells, root(0)) == "tt", std::string(f) + ": ff did not become tt");
  }
  auto swap = timed(load("swap.snax"), "main", {SchedulerSpec::Kind::RoundRobin});
  const auto& cells = swap.config.cells;
  auto p1 = Path{Projection::pi1()};
  auto p2 = Path{Projection::pi2()};
  c.expect(tagAt(cells, root(1, p1)) == "tt" && tagAt(cells, root(1, p2)) == "blue", "swap source changed");
  c.expect(tagAt(cells, root(0, p1)) == tagAt(cells, root(1, p2)) && tagAt(cells, root(0, p2)) == tagAt(cells, root(1, p1)),
           "swap did not exchange the components");
  std::vector<std::string> expected{"ff", "tt"};
  c.expect(snaxList(timed(load("map_main.snax"), "main", {}).config.cells, root(0)) == expected,
           "SNAX map did not decode to [ff, tt]");
  c.expect(saxList(timed(load("map.sax"), "main", {}).config.cells, root(0)) == expected,
           "SAX map did not decode to [ff, tt]");
}

// Sizes from the recurrences, evaluated by hand for each type below.
void layoutNumbers(Check& c) {
  auto sig = load("layouts.snax");
  auto unit = unitType();
  c.expect(size(unit, sig) == 0, "size(1) != 0");
  c.expect(size(downType(nameType("bool")), sig) == 1, "size(dn bool) != 1");
  c.expect(size(arrowType(nameType("bool"), nameType("bool")), sig) == 1, "size(bool -> bool) != 1");
  c.expect(size(nameType("bool"), sig) == 1, "size(bool) != 1");       // 1 + max(0, 0)
  c.expect(size(nameType("boollist"), sig) == 3, "size(boollist) != 3");  // 1 + max(0, 1 + 1)
  c.expect(size(nameType("hlist"), sig) == 2, "size(hlist) != 2");        // 1 + max(1, 1)
  auto run = runEntry(load("map_main.snax"), "main1");
  std::map<const Process*, int> conts;
  auto list = ptrAt(run.config.cells, root(0));
  if (!c.expect(list.has_value(), "no list pointer after map over [tt]")) return;
  auto slots = blockSlots(*list->blockId(), run.config.cells, run.config.blockTypes, sig, conts);
  c.expect(slots.size() == 3 && slots[0] == "cons" && slots[1] == "ff" && slots[2].rfind("\xE2\x86\x92\xCE\xB1", 0) == 0,
           "cons block is not [cons|ff|addr]");
  auto built = runEntry(load("layouts.snax"), "flat");
  auto flat = ptrAt(built.config.cells, root(0));
  if (!c.expect(flat.has_value(), "flat list has no pointer")) return;
  slots = blockSlots(*flat->blockId(), built.config.cells, built.config.blockTypes, sig, conts);
  c.expect(slots.size() == 3 && slots[0] == "cons" && slots[1] == "tt" && slots[2].rfind("\xE2\x86\x92\xCE\xB1", 0) == 0,
           "flat cons block is not [cons|tt|addr]");
}

std::vector<std::pair<std::string, std::string>> entries() {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& f : kRunnable) {
    auto sig = load(f);
    for (const auto& def : sig.procs())
      if (def.params.empty()) out.emplace_back(f, def.name);
  }
  return out;
}

void preservationAtScale(Check& c) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<SchedulerSpec> specs;
  for (std::uint64_t s = 0; s < 100; ++s) specs.push_back({SchedulerSpec::Kind::SeededRandom, s});
  std::size_t steps = 0;
  auto all = entries();
  for (const auto& [f, entry] : all) {
    auto sig = load(f);
    Engine engine(sig, sig.dialect);
    auto report = preservationHarness(engine, entry, specs);
    steps += report.steps;
    c.expect(report.ok(), f + " " + entry + ": " + (report.ok() ? "" : report.records().front()));
  }
  double s = seconds(t0);
  c.expect(s < 30.0, "took " + std::to_string(s) + " s");
  std::cout << "  preservation: " << all.size() << " entries, " << steps << " steps\n";
}

// Negation, swap, and map over lists of length 0, 1 and 2.
const std::vector<std::pair<std::string, std::string>> kExplored = {
    {"neg.snax", "main"},      {"neg.snax", "main_ff"},    {"neg.sax", "main"},  {"swap.snax", "main"},
    {"map_main.snax", "main0"}, {"map_main.snax", "main1"}, {"map_main.snax", "main"}, {"map.sax", "main"}};

std::map<std::pair<std::string, std::string>, Exploration> explorations;

const Exploration& explored(const std::pair<std::string, std::string>& which) {
  auto it = explorations.find(which);
  if (it != explorations.end()) return it->second;
  auto sig = load(which.first);
  Engine engine(sig, sig.dialect);
  return explorations[which] = exploreInterleavings(engine, which.second, 100000);
}

void progressAtScale(Check& c) {
  for (const auto& w : kExplored) {
    const auto& e = explored(w);
    std::string name = w.first + " " + w.second;
    c.expect(!e.boundExceeded, name + " exceeded the state bound");
    c.expect(e.stuck.empty() && e.errors.empty(), name + " has a stuck state");
    std::cout << "  " << name << ": states=" << e.states << "\n";
  }
}

void determinism(Check& c) {
  for (const auto& w : kExplored) {
    const auto& e = explored(w);
    c.expect(e.finals.size() == 1, w.first + " " + w.second + " has " + std::to_string(e.finals.size()) + " finals");
  }
}

void oracleCrossChecks(Check& c) {
  ProcessGen gen(2024);
  std::size_t disagreements = 0;
  for (int i = 0; i < 1000; ++i) {
    auto p = gen.process(5);
    if (dst(p) != naiveDst(p)) ++disagreements;
  }
  c.expect(disagreements == 0, std::to_string(disagreements) + " dst disagreements");

  auto sig = load("map_main.snax");
  auto r = runEntry(sig, "copy_tt_ff");
  if (!c.expect(r.kind == RunOutcome::Kind::Final, "copy run did not finish")) return;
  const auto& cells = r.config.cells;
  auto src = ptrAt(cells, root(1));
  if (!c.expect(src.has_value(), "copy source missing")) return;
  std::map<const Process*, int> conts;
  auto slotsOf = [&](const Address& a) {
    return blockSlots(*a.blockId(), cells, r.config.blockTypes, sig, conts);
  };
  std::vector<Path> paths{{}};
  for (const auto& p : enumeratePaths(nameType("boollist"), sig)) paths.push_back(p.path);
  for (const auto& path : paths) {
    auto a = cells.find(src->project(path));
    auto b = cells.find(root(0, path));
    std::string at = renderPath(path);
    if (!c.expect((a == cells.end()) == (b == cells.end()), "cell presence differs at " + at)) continue;
    if (a == cells.end()) continue;
    if (!c.expect(a->second && b->second, "empty cell at " + at)) continue;
    const auto* pa = a->second->as<Storable::Ptr>();
    const auto* pb = b->second->as<Storable::Ptr>();
    if (pa && pb)
      c.expect(pa->target == pb->target || slotsOf(pa->target) == slotsOf(pb->target), "pointer differs at " + at);
    else
      c.expect(renderStorable(*a->second) == renderStorable(*b->second), "slot differs at " + at);
  }
}

void roundTrip(Check& c) {
  for (const char* f : {"map.snax", "map_main.snax", "neg.snax", "neg.sax", "swap.snax", "map.sax", "layouts.snax",
                        "unguarded.snax", "pair_write.snax", "double_write.snax"}) {
    auto sig = load(f);
    auto text = renderSignature(sig);
    try {
      auto again = loadSignature(f, text);
      c.expect(alphaEqual(sig, again), std::string(f) + " changed in the round trip");
      c.expect(renderSignature(again) == text, std::string(f) + " renders differently the second time");
    } catch (const std::exception& e) {
      c.expect(false, std::string(f) + ": " + e.what());
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"corpus programs check", corpusAccepted},
      {"corpus rejections carry their kinds", corpusRejected},
      {"execution results", executionCorrect},
      {"layout numbers", layoutNumbers},
      {"preservation at scale", preservationAtScale},
      {"progress at scale", progressAtScale},
      {"determinism", determinism},
      {"oracle cross-checks", oracleCrossChecks},
      {"round trip", roundTrip},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.why.push_back(std::string("exception: ") + e.what());
    }
    bool ok = c.why.empty();
    failed += ok ? 0 : 1;
    std::printf("[%s] %zu. %s (%.2f s)\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), seconds(t0));
    for (const auto& w : c.why) std::printf("  %s\n", w.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
