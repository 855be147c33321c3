#include <doctest.h>

#include "support.hpp"

using namespace snax;
using testsupport::addr;
using testsupport::parseText;

namespace {

const char* kBool = "type bool = +{ 'tt : 1, 'ff : 1 }\n";

std::optional<TypeError::Kind> kindOf(const Signature& sig, const Context& ctx, const std::string& proc,
                                      const std::string& dest, const TypePtr& destType) {
  auto err = checkProcess(sig.dialect, sig, ctx, parseProcess(proc, sig.dialect), addr(dest), destType);
  if (!err) return std::nullopt;
  return err->kind;
}

std::vector<std::string> kinds(const std::vector<Diagnostic>& ds) {
  std::vector<std::string> out;
  for (const auto& d : ds) out.push_back(d.kind);
  return out;
}

}  // namespace

TEST_CASE("checkPresupposition") {
  Context ctx;
  ctx.addOrdinary(addr("b"), unitType());
  CHECK_FALSE(checkPresupposition(ctx, addr("a")));
  auto clash = checkPresupposition(ctx, addr("b.1"));
  REQUIRE(clash);
  CHECK(clash->kind == TypeError::Kind::DestinationClash);
  CHECK(clash->detail.find("b") != std::string::npos);
  CHECK_FALSE(checkPresupposition(Context{}, addr("z.'k.2")));
  Context eli;
  eli.addEligible(addr("d.1"), unitType());
  CHECK_FALSE(checkPresupposition(eli, addr("d.1")));
}

TEST_CASE("swap") {
  auto sig = parseText(std::string(kBool) + "type color = +{ 'red : 1, 'blue : 1 }\n");
  auto A1 = nameType("bool"), A2 = nameType("color");
  Context ctx;
  ctx.addOrdinary(addr("p"), tensorType(A1, A2));
  CHECK_FALSE(kindOf(sig, ctx, "read p ((,) => q.1 <~ (copy q.1 p.2); q.2 <~ (copy q.2 p.1); write q (,))", "q",
                     tensorType(A2, A1)));
  // Components in the wrong order.
  CHECK(kindOf(sig, ctx, "read p ((,) => q.1 <~ (copy q.1 p.1); q.2 <~ (copy q.2 p.2); write q (,))", "q",
               tensorType(A2, A1)) == TypeError::Kind::TypeMismatch);
}

TEST_CASE("negation") {
  auto sig = parseText(kBool);
  Context ctx;
  ctx.addOrdinary(addr("a"), nameType("bool"));
  CHECK_FALSE(kindOf(sig, ctx,
                     "read a ('tt => b.'ff <~ (write b.'ff ()); write b 'ff | 'ff => b.'tt <~ (write b.'tt ()); "
                     "write b 'tt)",
                     "b", nameType("bool")));
  // The tag write without its eligible projection.
  CHECK(kindOf(sig, ctx, "read a ('tt => write b 'ff | 'ff => write b 'tt)", "b", nameType("bool")) ==
        TypeError::Kind::EligibilityViolation);
  // A branch for a label the sum does not have.
  CHECK(kindOf(sig, ctx,
               "read a ('tt => b.'ff <~ (write b.'ff ()); write b 'ff | 'no => b.'tt <~ (write b.'tt ()); write b "
               "'tt)",
               "b", nameType("bool")) == TypeError::Kind::TypeMismatch);
}

TEST_CASE("pair write needs both eligible projections") {
  auto sig = parseText("");
  CHECK(kindOf(sig, Context{}, "write q (,)", "q", tensorType(unitType(), unitType())) ==
        TypeError::Kind::EligibilityViolation);
  Context half;
  half.addEligible(addr("q.1"), unitType());
  CHECK(kindOf(sig, half, "write q (,)", "q", tensorType(unitType(), unitType())) ==
        TypeError::Kind::EligibilityViolation);
  Context ordinary;
  ordinary.addOrdinary(addr("q.1"), unitType());
  ordinary.addOrdinary(addr("q.2"), unitType());
  CHECK(kindOf(sig, ordinary, "write q (,)", "q", tensorType(unitType(), unitType())) ==
        TypeError::Kind::EligibilityViolation);
  Context both;
  both.addEligible(addr("q.1"), unitType());
  both.addEligible(addr("q.2"), unitType());
  CHECK_FALSE(kindOf(sig, both, "write q (,)", "q", tensorType(unitType(), unitType())));
}

TEST_CASE("eligible entries may not be weakened") {
  auto sig = parseText("");
  Context ctx;
  ctx.addEligible(addr("q.1"), unitType());
  CHECK(kindOf(sig, ctx, "write q ()", "q", unitType()) == TypeError::Kind::UnusedEligible);
  auto bsig = parseText(kBool);
  Context a;
  a.addOrdinary(addr("a"), nameType("bool"));
  CHECK(kindOf(bsig, a, "b.'tt <~ (write b.'tt ()); copy b a", "b", nameType("bool")) ==
        TypeError::Kind::UnusedEligible);
}

TEST_CASE("eligible entries can also be read as ordinary ones") {
  auto sig = parseText("");
  auto pair = tensorType(unitType(), unitType());
  CHECK_FALSE(kindOf(sig, Context{}, "q.1 <~ (write q.1 ()); read q.1 (() => q.2 <~ (write q.2 ()); write q (,))",
                     "q", pair));
}

TEST_CASE("snip discipline") {
  auto sig = parseText(kBool);
  auto b = nameType("bool");
  CHECK(kindOf(sig, Context{}, "b.'tt <~ (write b.'tt ()); b.'tt <~ (write b.'tt ()); write b 'tt", "b", b) ==
        TypeError::Kind::DestinationClash);
  // Targets must lie strictly inside the destination.
  CHECK(kindOf(sig, Context{}, "c.'tt <~ (write c.'tt ()); write b 'tt", "b", b) ==
        TypeError::Kind::EligibilityViolation);
  CHECK(kindOf(sig, Context{}, "b <~ (write b 'tt); write b 'tt", "b", b) == TypeError::Kind::EligibilityViolation);
  // A target that is not a path of the destination type.
  CHECK(kindOf(sig, Context{}, "b.1 <~ (write b.1 ()); write b 'tt", "b", b) == TypeError::Kind::TypeMismatch);
  // The writer must write the target.
  auto pair = tensorType(unitType(), unitType());
  CHECK(kindOf(sig, Context{}, "q.1 <~ (write q.2 ()); q.2 <~ (write q.2 ()); write q (,)", "q", pair).has_value());
  // Nested snips: the outer writer consumes the inner projections.
  auto nested = tensorType(pair, unitType());
  CHECK_FALSE(kindOf(sig, Context{},
                     "q.1.1 <~ (write q.1.1 ()); q.1.2 <~ (write q.1.2 ()); q.1 <~ (write q.1 (,)); q.2 <~ (write "
                     "q.2 ()); write q (,)",
                     "q", nested));
  // A snip comparable with a live eligible entry.
  Context z;
  z.addOrdinary(addr("z"), pair);
  CHECK(kindOf(sig, z, "q.1.1 <~ (write q.1.1 ()); q.1 <~ (copy q.1 z); q.2 <~ (write q.2 ()); write q (,)", "q",
               tensorType(pair, unitType())) == TypeError::Kind::EligibilityViolation);
}

TEST_CASE("cut freshness and presupposition") {
  auto sig = parseText("");
  Context ctx;
  ctx.addOrdinary(addr("x"), unitType());
  CHECK(kindOf(sig, ctx, "x : 1 <- (write x ()); write d ()", "d", unitType()) ==
        TypeError::Kind::DestinationClash);
  // The writer of a cut sees every eligible entry demoted.
  Context eli;
  eli.addEligible(addr("d.1"), unitType());
  eli.addEligible(addr("d.2"), unitType());
  CHECK(kindOf(sig, eli, "y : 1 <- (write d (,)); write d (,)", "d", tensorType(unitType(), unitType())).has_value());
}

TEST_CASE("unknown address, undefined proc, arity") {
  auto sig = parseText("proc one (d : 1) = write d ()\n");
  CHECK(kindOf(sig, Context{}, "copy d nowhere", "d", unitType()) == TypeError::Kind::UnknownAddress);
  CHECK(kindOf(sig, Context{}, "call none d", "d", unitType()) == TypeError::Kind::UndefinedProc);
  Context ctx;
  ctx.addOrdinary(addr("u"), unitType());
  CHECK(kindOf(sig, ctx, "call one d u", "d", unitType()) == TypeError::Kind::ArityMismatch);
  CHECK_FALSE(kindOf(sig, ctx, "call one d", "d", unitType()));
  CHECK(kindOf(sig, ctx, "call one d", "d", downType(unitType())) == TypeError::Kind::TypeMismatch);
}

TEST_CASE("dialect violations") {
  auto sig = parseText("");
  auto saxForm = makeWrite(addr("d"), {Storable::Tag{"k", addr("u")}});
  Context ctx;
  ctx.addOrdinary(addr("u"), unitType());
  auto err = checkProcess(Dialect::Snax, sig, ctx, saxForm, addr("d"), sumType({{"k", unitType()}}));
  REQUIRE(err);
  CHECK(err->kind == TypeError::Kind::DialectViolation);
}

TEST_CASE("functions and pointers") {
  auto sig = parseText(kBool);
  auto b = nameType("bool");
  Context ctx;
  ctx.addOrdinary(addr("f"), arrowType(b, b));
  ctx.addOrdinary(addr("x"), b);
  CHECK_FALSE(kindOf(sig, ctx, "read f (x ; y)", "y", b));
  CHECK(kindOf(sig, ctx, "read f (x ; y)", "y", unitType()) == TypeError::Kind::TypeMismatch);
  CHECK_FALSE(kindOf(sig, Context{}, "write g cont (v, w) => (copy w v)", "g", arrowType(b, b)));
  Context p;
  p.addOrdinary(addr("xp"), downType(b));
  CHECK_FALSE(kindOf(sig, p, "read xp (ptr x => y : bool <- (copy y x); write yp ptr y)", "yp", downType(b)));
}

TEST_CASE("SAX dialect") {
  auto sig = parseText(std::string("#dialect sax\n") + kBool);
  Context ctx;
  ctx.addOrdinary(addr("a"), nameType("bool"));
  CHECK_FALSE(kindOf(sig, ctx, "read a ('tt x => write b 'ff x | 'ff y => write b 'tt y)", "b", nameType("bool")));
  CHECK(kindOf(sig, ctx, "read a ('tt x => write b 'ff a | 'ff y => write b 'tt y)", "b", nameType("bool")) ==
        TypeError::Kind::TypeMismatch);
  CHECK_FALSE(kindOf(sig, ctx, "u : 1 <- (write u ()); v : 1 <- (write v ()); write q (u, v)", "q",
                     tensorType(unitType(), unitType())));
}

TEST_CASE("checkSignature on the map programs") {
  CHECK(checkSignature(Dialect::Snax, testsupport::loadCorpus("map.snax")).empty());
  auto sax = testsupport::loadCorpus("map.sax");
  CHECK(checkSignature(Dialect::Sax, sax).empty());
  for (const char* f : {"neg.snax", "neg.sax", "swap.snax", "map_main.snax", "layouts.snax"}) {
    CAPTURE(f);
    auto sig = testsupport::loadCorpus(f);
    CHECK(checkSignature(sig.dialect, sig).empty());
  }
}

TEST_CASE("map with its recursive call's arguments swapped") {
  std::string text = testsupport::readFile(testsupport::corpusPath("map.snax"));
  auto at = text.find("call map ys.'cons.2 f xs.'cons.2");
  REQUIRE(at != std::string::npos);
  text.replace(at, std::string("call map ys.'cons.2 f xs.'cons.2").size(), "call map ys.'cons.2 xs.'cons.2 f");
  auto ds = checkSignature(Dialect::Snax, parseText(text));
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].definition == "map");
  CHECK(ds[0].kind == "TypeMismatch");
  CHECK(formatDiagnostic(ds[0]).rfind("map:", 0) == 0);
}

TEST_CASE("corpus rejections carry their designated kinds") {
  auto reject = [](const char* f) {
    auto sig = testsupport::loadCorpus(f);
    return kinds(checkSignature(sig.dialect, sig));
  };
  CHECK(reject("unguarded.snax") == std::vector<std::string>{"Unguarded"});
  CHECK(reject("pair_write.snax") == std::vector<std::string>{"EligibilityViolation"});
  CHECK(reject("double_write.snax") == std::vector<std::string>{"DestinationClash"});
  auto r = parseSignature(SourceFile{"sax_form.snax", testsupport::readFile(testsupport::corpusPath("sax_form.snax"))});
  REQUIRE_FALSE(r.ok());
  CHECK(r.error->kind == ParseError::Kind::DialectMismatch);
}

TEST_CASE("checkSignature continues across definitions") {
  auto sig = parseText("type b = 1\nproc p (d : b) = write d (,)\nproc q (d : b) = copy d e\nproc r (d : b) = write d ()\n");
  auto ds = checkSignature(Dialect::Snax, sig);
  REQUIRE(ds.size() == 2);
  CHECK(ds[0].definition == "p");
  CHECK(ds[1].definition == "q");
  CHECK(ds[1].kind == "UnknownAddress");
}

TEST_CASE("well-formedness errors stop before bodies") {
  auto ds = checkSignature(Dialect::Snax, parseText("type t = t\nproc p (d : t) = copy d x\n"));
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].kind == "NonContractive");
  auto undefined = checkSignature(Dialect::Snax, parseText("proc p (d : nope) = copy d x\n"));
  REQUIRE(undefined.size() == 1);
  CHECK(undefined[0].kind == "UndefinedTypeName");
  // SAX does not require guardedness.
  auto sax = parseText("#dialect sax\ntype l = +{ 'nil : 1, 'cons : 1 * l }\n");
  CHECK(checkSignature(Dialect::Sax, sax).empty());
}

