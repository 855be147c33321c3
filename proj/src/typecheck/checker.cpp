#include "snax/typecheck/checker.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

#include "snax/core/wellformed.hpp"

namespace snax {

std::string formatDiagnostic(const Diagnostic& d) {
  return d.definition + ":" + std::to_string(d.loc.line) + ":" + std::to_string(d.loc.column) + ": " + d.kind +
         ": " + d.message;
}

namespace {

struct Failure : std::runtime_error {
  explicit Failure(TypeError e) : std::runtime_error(e.detail), error(std::move(e)) {}
  TypeError error;
};

using Consumed = std::set<Address>;

class Checker {
 public:
  Checker(Dialect dialect, const Signature& sig) : dialect_(dialect), sig_(sig) {}

  void top(const Context& ctx, const ProcPtr& p, const Address& dest, const TypePtr& destType) {
    Consumed used = check(ctx, p, dest, destType);
    for (const auto& a : ctx.eligibleAddresses())
      if (!used.count(a))
        fail(TypeError::Kind::UnusedEligible, "eligible " + renderAddress(a) + " is never written", p->loc);
  }

 private:
  Dialect dialect_;
  const Signature& sig_;

  [[noreturn]] static void fail(TypeError::Kind k, std::string detail, SourceLoc loc) {
    throw Failure(TypeError{k, std::move(detail), loc});
  }

  bool sax() const { return dialect_ == Dialect::Sax; }

  TypePtr unfold(const TypePtr& t) const { return unfoldName(t, sig_); }
  bool same(const TypePtr& a, const TypePtr& b) const { return typeEqual(a, b, sig_); }

  void expectType(const TypePtr& actual, const TypePtr& expected, const std::string& what, SourceLoc loc) const {
    if (!same(actual, expected))
      fail(TypeError::Kind::TypeMismatch,
           what + " has type " + renderType(actual) + " but " + renderType(expected) + " is expected", loc);
  }

  void saxAddress(const Address& a, SourceLoc loc) const {
    if (sax() && !a.path.empty())
      fail(TypeError::Kind::DialectViolation, "projection " + renderAddress(a) + " in a sax program", loc);
  }

  const Entry& lookup(const Context& ctx, const Address& a, SourceLoc loc) const {
    saxAddress(a, loc);
    const Entry* e = ctx.find(a);
    if (!e) fail(TypeError::Kind::UnknownAddress, "no antecedent for " + renderAddress(a), loc);
    return *e;
  }

  // A process must write its own destination.
  void expectDest(const Context& ctx, const Address& target, const Address& dest, SourceLoc loc) const {
    saxAddress(target, loc);
    if (target == dest) return;
    for (const auto& e : ctx.entries())
      if (!e.eligible && wextends(target, e.addr))
        fail(TypeError::Kind::DestinationClash,
             renderAddress(target) + " extends antecedent " + renderAddress(e.addr) + "; there would be two writers",
             loc);
    fail(TypeError::Kind::TypeMismatch,
         "writes " + renderAddress(target) + " but the destination is " + renderAddress(dest), loc);
  }

  void freshBinder(const Context& ctx, const std::string& x, const Address& dest, SourceLoc loc) const {
    auto clash = [&](const Address& a) { return a.varName() && *a.varName() == x; };
    bool taken = clash(dest) || std::any_of(ctx.entries().begin(), ctx.entries().end(),
                                            [&](const Entry& e) { return clash(e.addr); });
    if (taken) fail(TypeError::Kind::DestinationClash, "binder " + x + " is not fresh", loc);
  }

  // Eligible projection required by a write axiom.
  TypePtr consumeEligible(const Context& ctx, const Address& a, Consumed& used, SourceLoc loc) const {
    const Entry* e = ctx.find(a);
    if (!e || !e->eligible)
      fail(TypeError::Kind::EligibilityViolation,
           "write needs eligible " + renderAddress(a) + (e ? " but it is only ordinary" : " but it is missing"), loc);
    used.insert(a);
    return e->type;
  }

  Consumed check(const Context& ctx, const ProcPtr& p, const Address& dest, const TypePtr& destType) {
    if (auto err = checkPresupposition(ctx, dest)) {
      err->loc = p->loc;
      throw Failure(*err);
    }
    Consumed used = dispatch(ctx, p, dest, destType);
    for (const auto& a : used) {
      assert(extends(a, dest));
      if (!extends(a, dest))
        throw std::logic_error("consumed eligible " + renderAddress(a) + " does not extend " + renderAddress(dest));
    }
    return used;
  }

  Consumed dispatch(const Context& ctx, const ProcPtr& p, const Address& dest, const TypePtr& destType) {
    const SourceLoc loc = p->loc;
    if (const auto* n = p->as<Process::Cut>()) {
      freshBinder(ctx, n->var, dest, loc);
      Address x = Address::var(n->var);
      Context writerCtx = ctx.demoted();
      Consumed w = check(writerCtx, n->writer, x, n->type);
      if (!w.empty()) throw std::logic_error("cut writer consumed an eligible entry");
      Context readerCtx = ctx;
      readerCtx.addOrdinary(x, n->type);
      return check(readerCtx, n->reader, dest, destType);
    }
    if (const auto* n = p->as<Process::Snip>()) {
      if (sax()) fail(TypeError::Kind::DialectViolation, "snip in a sax program", loc);
      const Address& a = n->target;
      if (!extends(a, dest))
        fail(TypeError::Kind::EligibilityViolation,
             "snip target " + renderAddress(a) + " does not extend destination " + renderAddress(dest), loc);
      for (const auto& e : ctx.entries())
        if (!e.eligible && wextends(a, e.addr))
          fail(TypeError::Kind::DestinationClash,
               "snip target " + renderAddress(a) + " extends antecedent " + renderAddress(e.addr), loc);
      TypePtr at = typeAtPath(destType, pathSuffix(a, dest), sig_);
      if (!at)
        fail(TypeError::Kind::TypeMismatch,
             "no component " + renderPath(pathSuffix(a, dest)) + " in type " + renderType(destType), loc);
      Consumed w = check(ctx, n->writer, a, at);
      std::vector<Address> wv(w.begin(), w.end());
      Context readerCtx = ctx.demoted(wv);
      for (const auto& e : readerCtx.entries()) {
        if (!e.eligible) continue;
        if (e.addr == a)
          fail(TypeError::Kind::DestinationClash, "snip target " + renderAddress(a) + " is already eligible", loc);
        if (wextends(e.addr, a) || wextends(a, e.addr))
          fail(TypeError::Kind::EligibilityViolation,
               "snip target " + renderAddress(a) + " overlaps eligible " + renderAddress(e.addr), loc);
      }
      readerCtx.addEligible(a, at);
      Consumed r = check(readerCtx, n->reader, dest, destType);
      if (!r.erase(a))
        fail(TypeError::Kind::UnusedEligible, "snip target " + renderAddress(a) + " is never consumed", loc);
      r.insert(w.begin(), w.end());
      return r;
    }
    if (const auto* n = p->as<Process::Copy>()) {
      expectDest(ctx, n->dest, dest, loc);
      const Entry& src = lookup(ctx, n->src, loc);
      expectType(src.type, destType, "copy source " + renderAddress(n->src), loc);
      return {};
    }
    if (const auto* n = p->as<Process::Write>()) {
      expectDest(ctx, n->dest, dest, loc);
      return write(ctx, n->value, dest, destType, loc);
    }
    if (const auto* n = p->as<Process::Read>()) return read(ctx, *n, dest, destType, loc);

    const auto* n = p->as<Process::Call>();
    const ProcDef* def = sig_.findProc(n->proc);
    if (!def) fail(TypeError::Kind::UndefinedProc, "undefined procedure " + n->proc, loc);
    if (def->params.size() != n->args.size())
      fail(TypeError::Kind::ArityMismatch,
           n->proc + " expects " + std::to_string(def->params.size()) + " arguments but gets " +
               std::to_string(n->args.size()),
           loc);
    expectDest(ctx, n->dest, dest, loc);
    expectType(def->destType, destType, "result of " + n->proc, loc);
    for (std::size_t i = 0; i < n->args.size(); ++i) {
      const Entry& arg = lookup(ctx, n->args[i], loc);
      expectType(arg.type, def->params[i].type, "argument " + renderAddress(n->args[i]) + " of " + n->proc, loc);
    }
    return {};
  }

  Consumed write(const Context& ctx, const Storable& s, const Address& dest, const TypePtr& destType, SourceLoc loc) {
    TypePtr c = unfold(destType);
    auto wrong = [&](const std::string& what) {
      fail(TypeError::Kind::TypeMismatch, "cannot write " + what + " at type " + renderType(destType), loc);
    };
    Consumed used;
    if (const auto* v = s.as<Storable::Pair>()) {
      const auto* t = c->as<Type::Tensor>();
      if (!t) wrong("a pair");
      if (v->components) {
        expectType(lookup(ctx, v->components->first, loc).type, t->left, renderAddress(v->components->first), loc);
        expectType(lookup(ctx, v->components->second, loc).type, t->right, renderAddress(v->components->second), loc);
        return used;
      }
      Address a1 = dest.project(Projection::pi1());
      Address a2 = dest.project(Projection::pi2());
      expectType(consumeEligible(ctx, a1, used, loc), t->left, renderAddress(a1), loc);
      expectType(consumeEligible(ctx, a2, used, loc), t->right, renderAddress(a2), loc);
      return used;
    }
    if (s.as<Storable::Unit>()) {
      if (!c->is<Type::Unit>()) wrong("()");
      return used;
    }
    if (const auto* v = s.as<Storable::Tag>()) {
      const auto* t = c->as<Type::Sum>();
      if (!t) wrong("tag '" + v->label);
      TypePtr branch = sumBranch(*t, v->label);
      if (!branch) wrong("tag '" + v->label);
      if (v->payload) {
        expectType(lookup(ctx, *v->payload, loc).type, branch, renderAddress(*v->payload), loc);
        return used;
      }
      Address ak = dest.project(Projection::tag(v->label));
      expectType(consumeEligible(ctx, ak, used, loc), branch, renderAddress(ak), loc);
      return used;
    }
    if (const auto* v = s.as<Storable::Ptr>()) {
      const auto* t = c->as<Type::Down>();
      if (!t) wrong("a pointer");
      expectType(lookup(ctx, v->target, loc).type, t->inner, "pointee " + renderAddress(v->target), loc);
      return used;
    }
    const auto* v = s.as<Storable::Cont>();
    const auto* t = c->as<Type::Arrow>();
    if (!t) wrong("a continuation");
    freshBinder(ctx, v->arg, dest, loc);
    freshBinder(ctx, v->dest, dest, loc);
    if (v->arg == v->dest) fail(TypeError::Kind::DestinationClash, "continuation binders coincide", loc);
    Context body = ctx.demoted();
    body.addOrdinary(Address::var(v->arg), t->domain);
    Consumed inner = check(body, v->body, Address::var(v->dest), t->codomain);
    if (!inner.empty()) throw std::logic_error("continuation body consumed an eligible entry");
    return used;
  }

  Consumed read(const Context& ctx, const Process::Read& n, const Address& dest, const TypePtr& destType,
                SourceLoc loc) {
    const Entry& src = lookup(ctx, n.src, loc);
    TypePtr a = unfold(src.type);
    const Address& at = n.src;
    auto wrong = [&](const std::string& what) {
      fail(TypeError::Kind::TypeMismatch,
           "cannot read " + renderAddress(at) + " : " + renderType(src.type) + " with " + what, loc);
    };
    const auto& h = n.handler;
    if (const auto* k = h.as<Costorable::Pair>()) {
      const auto* t = a->as<Type::Tensor>();
      if (!t) wrong("a pair pattern");
      Context inner = ctx;
      if (k->binders) {
        freshBinder(ctx, k->binders->first, dest, loc);
        freshBinder(ctx, k->binders->second, dest, loc);
        inner.addOrdinary(Address::var(k->binders->first), t->left);
        inner.addOrdinary(Address::var(k->binders->second), t->right);
      } else {
        inner.addOrdinary(at.project(Projection::pi1()), t->left);
        inner.addOrdinary(at.project(Projection::pi2()), t->right);
      }
      return check(inner, k->body, dest, destType);
    }
    if (const auto* k = h.as<Costorable::Unit>()) {
      if (!a->is<Type::Unit>()) wrong("a unit pattern");
      return check(ctx, k->body, dest, destType);
    }
    if (const auto* k = h.as<Costorable::Sum>()) {
      const auto* t = a->as<Type::Sum>();
      if (!t) wrong("branches");
      std::set<Label> seen;
      for (const auto& br : k->branches) {
        if (!sumBranch(*t, br.label)) wrong("an extra branch '" + br.label);
        seen.insert(br.label);
      }
      for (const auto& [label, _] : t->branches)
        if (!seen.count(label)) wrong("no branch for '" + label);
      std::optional<Consumed> common;
      for (const auto& br : k->branches) {
        Context inner = ctx;
        TypePtr bt = sumBranch(*t, br.label);
        if (br.binder) {
          freshBinder(ctx, *br.binder, dest, loc);
          inner.addOrdinary(Address::var(*br.binder), bt);
        } else {
          inner.addOrdinary(at.project(Projection::tag(br.label)), bt);
        }
        Consumed used = check(inner, br.body, dest, destType);
        if (common && *common != used)
          fail(TypeError::Kind::EligibilityViolation, "branch '" + br.label + " consumes different eligible entries",
               br.body->loc);
        common = std::move(used);
      }
      return common.value_or(Consumed{});
    }
    if (const auto* k = h.as<Costorable::Ptr>()) {
      const auto* t = a->as<Type::Down>();
      if (!t) wrong("a pointer pattern");
      freshBinder(ctx, k->binder, dest, loc);
      Context inner = ctx;
      inner.addOrdinary(Address::var(k->binder), t->inner);
      return check(inner, k->body, dest, destType);
    }
    const auto* k = h.as<Costorable::Apply>();
    const auto* t = a->as<Type::Arrow>();
    if (!t) wrong("an application");
    expectType(lookup(ctx, k->arg, loc).type, t->domain, "argument " + renderAddress(k->arg), loc);
    expectDest(ctx, k->dest, dest, loc);
    expectType(t->codomain, destType, "result of " + renderAddress(at), loc);
    return {};
  }
};

}  // namespace

std::optional<TypeError> checkProcess(Dialect dialect, const Signature& sig, const Context& ctx, const ProcPtr& p,
                                      const Address& dest, const TypePtr& destType) {
  if (const Process* bad = dialectMismatch(p, dialect))
    return TypeError{TypeError::Kind::DialectViolation,
                     "form does not belong to the " + dialectName(dialect) + " dialect", bad->loc};
  try {
    Checker(dialect, sig).top(ctx, p, dest, destType);
  } catch (const Failure& f) {
    return f.error;
  } catch (const UndefinedTypeName& e) {
    return TypeError{TypeError::Kind::TypeMismatch, e.what(), p->loc};
  }
  return std::nullopt;
}

std::vector<Diagnostic> checkSignature(Dialect dialect, const Signature& sig) {
  std::vector<Diagnostic> out;
  auto report = [&](const std::vector<SignatureError>& errors) {
    for (const auto& e : errors) out.push_back({e.name, e.loc, kindName(e.kind), e.detail});
  };
  report(checkTypeNames(sig));
  if (!out.empty()) return out;
  report(checkContractive(sig));
  if (!out.empty()) return out;
  if (dialect == Dialect::Snax) report(checkGuarded(sig));

  for (const auto& def : sig.procs()) {
    Context ctx;
    for (const auto& prm : def.params) {
      if (ctx.find(Address::var(prm.var))) {
        out.push_back({def.name, def.loc, kindName(TypeError::Kind::DestinationClash),
                       "parameter " + prm.var + " is bound twice"});
        break;
      }
      ctx.addOrdinary(Address::var(prm.var), prm.type);
    }
    if (ctx.entries().size() != def.params.size()) continue;
    if (auto err = checkProcess(dialect, sig, ctx, def.body, Address::var(def.destVar), def.destType))
      out.push_back({def.name, err->loc, kindName(err->kind), err->detail});
  }
  return out;
}

}  // namespace snax
