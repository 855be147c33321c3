#include <doctest.h>

#include <functional>

#include "snax/core/wellformed.hpp"
#include "snax/layout/layout.hpp"
#include "snax/runtime/configuration.hpp"
#include "support.hpp"

using namespace snax;
using testsupport::addr;
using testsupport::block;

namespace {

const char* kTypes =
    "type bool = +{ 'tt : 1, 'ff : 1 }\n"
    "type boollist = +{ 'nil : 1, 'cons : bool * dn boollist }\n"
    "type hlist = +{ 'nil : dn 1, 'cons : dn (dn bool * dn hlist) }\n"
    "type triple = bool * (1 * (dn bool * bool))\n"
    "type empty = +{ }\n";

// Sizes computed directly from the type grammar, without memoization.
std::size_t naiveSize(const TypePtr& t, const Signature& sig) {
  TypePtr u = unfoldName(t, sig);
  if (u->is<Type::Unit>()) return 0;
  if (u->is<Type::Down>() || u->is<Type::Arrow>()) return 1;
  if (const auto* n = u->as<Type::Tensor>()) return naiveSize(n->left, sig) + naiveSize(n->right, sig);
  std::size_t widest = 0;
  for (const auto& br : u->as<Type::Sum>()->branches) widest = std::max(widest, naiveSize(br.second, sig));
  return 1 + widest;
}

TypePtr named(const std::string& n) { return nameType(n); }

}  // namespace

TEST_CASE("sizes of base types") {
  auto sig = testsupport::parseText(kTypes);
  CHECK(size(unitType(), sig) == 0);
  CHECK(size(downType(named("boollist")), sig) == 1);
  CHECK(size(arrowType(named("bool"), named("bool")), sig) == 1);
  CHECK(size(named("bool"), sig) == 1);
  CHECK(size(named("boollist"), sig) == 3);
  CHECK(size(named("hlist"), sig) == 2);
  CHECK(size(named("triple"), sig) == 3);
  CHECK(size(named("empty"), sig) == 1);
}

TEST_CASE("memoized sizes agree with direct recursion") {
  auto sig = testsupport::loadCorpus("map_main.snax");
  SizeTable table(sig);
  for (const auto& def : sig.types()) {
    CAPTURE(def.name);
    CHECK(table.size(named(def.name)) == naiveSize(named(def.name), sig));
  }
  for (const auto& def : sig.procs()) {
    CHECK(table.size(def.destType) == naiveSize(def.destType, sig));
    for (const auto& p : def.params) CHECK(table.size(p.type) == naiveSize(p.type, sig));
  }
}

TEST_CASE("path offsets in a flat list") {
  auto sig = testsupport::parseText(kTypes);
  auto list = named("boollist");
  CHECK(pathOffset(list, {}, sig) == 0);
  CHECK(pathOffset(list, addr("x.'cons").path, sig) == 1);
  CHECK(pathOffset(list, addr("x.'cons.1").path, sig) == 1);
  CHECK(pathOffset(list, addr("x.'cons.2").path, sig) == 2);
  CHECK(pathOffset(list, addr("x.'nil").path, sig) == 1);
  CHECK(pathOffset(named("triple"), addr("x.2.2.2").path, sig) == 2);
  CHECK(pathOffset(named("triple"), addr("x.2.2.1").path, sig) == 1);
  CHECK_THROWS_AS(pathOffset(list, addr("x.1").path, sig), InvalidPath);
  CHECK_THROWS_AS(pathOffset(list, addr("x.'cons.2.1").path, sig), InvalidPath);
  CHECK_THROWS_AS(pathOffset(list, addr("x.'missing").path, sig), InvalidPath);
}

TEST_CASE("concretize resolves block-rooted addresses") {
  auto sig = testsupport::parseText(kTypes);
  BlockTyping blocks{{BlockId{0}, named("boollist")}, {BlockId{4}, named("triple")}};
  CHECK(concretize(block(0, ".'cons.2"), blocks, sig) == ConcreteAddress{BlockId{0}, 2});
  CHECK(concretize(block(4, ".2.2.2"), blocks, sig) == ConcreteAddress{BlockId{4}, 2});
  CHECK_THROWS_AS(concretize(block(9), blocks, sig), InvalidPath);
  CHECK_THROWS_AS(concretize(addr("x.1"), blocks, sig), InvalidPath);
}

TEST_CASE("layout report for boollist") {
  auto sig = testsupport::loadCorpus("map.snax");
  CHECK(layoutReport(named("boollist"), sig) ==
        "size 3; .'nil @1 (width 0); .'cons @1 (width 2); .'cons.1 @1 (width 1); .'cons.1.'tt @2 (width 0); "
        ".'cons.1.'ff @2 (width 0); .'cons.2 @2 (width 1)");
  CHECK(layoutReport(unitType(), sig) == "size 0");
}

TEST_CASE("every path lies inside its value and siblings are disjoint") {
  auto sig = testsupport::parseText(kTypes);
  for (const char* name : {"bool", "boollist", "hlist", "triple"}) {
    CAPTURE(name);
    auto t = named(name);
    auto total = size(t, sig);
    auto paths = enumeratePaths(t, sig);
    std::map<Path, PathLayout> byPath;
    for (const auto& p : paths) {
      CHECK(p.offset + p.width <= total);
      CHECK(p.width == naiveSize(p.type, sig));
      CHECK(p.offset == pathOffset(t, p.path, sig));
      CHECK(typeEqual(p.type, typeAtPath(t, p.path, sig), sig));
      byPath[p.path] = p;
    }
    for (const auto& [path, lay] : byPath) {
      if (path.empty()) continue;
      Path parent(path.begin(), path.end() - 1);
      std::size_t base = parent.empty() ? 0 : byPath.at(parent).offset;
      std::size_t parentWidth = parent.empty() ? total : byPath.at(parent).width;
      CHECK(lay.offset >= base);
      CHECK(lay.offset + lay.width <= base + parentWidth);
      if (path.back().kind == Projection::Kind::Tag) CHECK(lay.offset == base + 1);
      if (path.back().kind == Projection::Kind::Pi2) {
        Path left = parent;
        left.push_back(Projection::pi1());
        CHECK(byPath.at(left).offset + byPath.at(left).width == lay.offset);
      }
    }
  }
}

TEST_CASE("enumeration stops at shifts and arrows") {
  auto sig = testsupport::parseText(kTypes);
  auto paths = enumeratePaths(named("hlist"), sig);
  REQUIRE(paths.size() == 2);
  CHECK(renderPath(paths[0].path) == ".'nil");
  CHECK(renderPath(paths[1].path) == ".'cons");
  CHECK(enumeratePaths(downType(named("boollist")), sig).empty());
}

TEST_CASE("memory after the map run") {
  auto sig = testsupport::loadCorpus("map_main.snax");
  auto r = testsupport::runEntry(sig, "main", {SchedulerSpec::Kind::RoundRobin});
  REQUIRE(r.kind == RunOutcome::Kind::Final);
  auto text = renderMemory(r.config, sig);
  CHECK(text.find("block \xCE\xB1" "0 : dn boollist [\xE2\x86\x92\xCE\xB1") != std::string::npos);
  CHECK(text.find("[cons|ff|\xE2\x86\x92\xCE\xB1") != std::string::npos);
  CHECK(text.find("[cons|tt|\xE2\x86\x92\xCE\xB1") != std::string::npos);
  CHECK(text.find("[nil|_|_]") != std::string::npos);
  CHECK(text.find("[cont@0]") != std::string::npos);
  std::map<const Process*, int> conts;
  for (BlockId b : r.config.blocks) {
    auto slots = blockSlots(b, r.config.cells, r.config.blockTypes, sig, conts);
    CHECK(slots.size() == size(r.config.blockTypes.at(b), sig));
  }
}

TEST_CASE("memory after negation") {
  auto sig = testsupport::loadCorpus("neg.snax");
  auto r = testsupport::runEntry(sig, "main");
  auto text = renderMemory(r.config, sig);
  CHECK(text.rfind("block \xCE\xB1" "0 : bool [ff] (.'ff=())\n", 0) == 0);
}

TEST_CASE("an indirection-heavy list takes one extra block per shift") {
  auto sig = testsupport::loadCorpus("layouts.snax");
  CHECK(size(named("boollist"), sig) == 3);
  CHECK(size(named("hlist"), sig) == 2);
  CHECK(size(named("hbool"), sig) == 2);
  auto heavy = testsupport::runEntry(sig, "heavy");
  auto flat = testsupport::runEntry(sig, "flat");
  REQUIRE(heavy.kind == RunOutcome::Kind::Final);
  REQUIRE(flat.kind == RunOutcome::Kind::Final);
  // every block beyond the root is the target of one filled shift cell
  auto shifts = [&](const Configuration& c) {
    std::size_t n = 0;
    for (const auto& [a, v] : c.cells) {
      if (!v || !v->as<Storable::Ptr>()) continue;
      auto root = c.blockTypes.at(*a.blockId());
      if (unfoldName(typeAtPath(root, a.path, sig), sig)->is<Type::Down>()) ++n;
    }
    return n;
  };
  CHECK(heavy.config.blocks.size() == 1 + shifts(heavy.config));
  CHECK(flat.config.blocks.size() == 1 + shifts(flat.config));
  CHECK(shifts(heavy.config) == 4);
  CHECK(shifts(flat.config) == 2);
  CHECK(heavy.config.blocks.size() > flat.config.blocks.size());
  CHECK(testsupport::snaxList(flat.config.cells, block(0)) == std::vector<std::string>{"tt"});
  auto text = renderMemory(heavy.config, sig);
  CHECK(text.find("block \xCE\xB1" "0 : hlist [cons|\xE2\x86\x92\xCE\xB1") == 0);
}
