#include "snax/runtime/eta.hpp"

#include "snax/core/wellformed.hpp"

namespace snax {

ProcPtr etaCopy(const Address& a, const Address& b, const TypePtr& type, const Signature& sig) {
  TypePtr t = unfoldName(type, sig);
  if (const auto* n = t->as<Type::Tensor>()) {
    Address a1 = a.project(Projection::pi1()), b1 = b.project(Projection::pi1());
    Address a2 = a.project(Projection::pi2()), b2 = b.project(Projection::pi2());
    auto inner = makeSnip(a1, etaCopy(a1, b1, n->left, sig),
                          makeSnip(a2, etaCopy(a2, b2, n->right, sig), makeWrite(a, {Storable::Pair{}})));
    return makeRead(b, {Costorable::Pair{std::nullopt, inner}});
  }
  if (t->is<Type::Unit>()) return makeRead(b, {Costorable::Unit{makeWrite(a, {Storable::Unit{}})}});
  if (const auto* n = t->as<Type::Sum>()) {
    Costorable::Sum sum;
    for (const auto& [label, branch] : n->branches) {
      Address al = a.project(Projection::tag(label));
      Address bl = b.project(Projection::tag(label));
      sum.branches.push_back({label, std::nullopt,
                              makeSnip(al, etaCopy(al, bl, branch, sig), makeWrite(a, {Storable::Tag{label, {}}}))});
    }
    return makeRead(b, {std::move(sum)});
  }
  return makeCopy(a, b);
}

namespace {

class Expander {
 public:
  explicit Expander(const Signature& sig) : sig_(sig) {}

  ProcPtr run(const ProcPtr& p, const Address& dest, const TypePtr& destType) {
    if (const auto* n = p->as<Process::Cut>())
      return makeCut(n->var, n->type, run(n->writer, Address::var(n->var), n->type), run(n->reader, dest, destType),
                     p->loc);
    if (const auto* n = p->as<Process::Snip>()) {
      TypePtr at = typeAtPath(destType, pathSuffix(n->target, dest), sig_);
      return makeSnip(n->target, run(n->writer, n->target, at), run(n->reader, dest, destType), p->loc);
    }
    if (const auto* n = p->as<Process::Copy>()) return etaCopy(n->dest, n->src, destType, sig_);
    if (const auto* n = p->as<Process::Write>()) {
      const auto* c = n->value.as<Storable::Cont>();
      if (!c) return p;
      const auto* arrow = unfoldName(destType, sig_)->as<Type::Arrow>();
      return makeWrite(n->dest, {Storable::Cont{c->arg, c->dest, run(c->body, Address::var(c->dest), arrow->codomain)}},
                       p->loc);
    }
    if (const auto* n = p->as<Process::Read>()) {
      const auto& h = n->handler;
      auto body = [&](const ProcPtr& b) { return run(b, dest, destType); };
      if (const auto* k = h.as<Costorable::Pair>())
        return makeRead(n->src, {Costorable::Pair{k->binders, body(k->body)}}, p->loc);
      if (const auto* k = h.as<Costorable::Unit>()) return makeRead(n->src, {Costorable::Unit{body(k->body)}}, p->loc);
      if (const auto* k = h.as<Costorable::Ptr>())
        return makeRead(n->src, {Costorable::Ptr{k->binder, body(k->body)}}, p->loc);
      if (const auto* k = h.as<Costorable::Sum>()) {
        Costorable::Sum sum;
        for (const auto& br : k->branches) sum.branches.push_back({br.label, br.binder, body(br.body)});
        return makeRead(n->src, {std::move(sum)}, p->loc);
      }
      return p;
    }
    return p;
  }

 private:
  const Signature& sig_;
};

}  // namespace

ProcPtr etaExpandCopies(const ProcPtr& p, const Signature& sig, const Address& dest, const TypePtr& destType) {
  return Expander(sig).run(p, dest, destType);
}

Signature expandSignature(const Signature& sig, Dialect dialect) {
  Signature out = sig;
  if (dialect == Dialect::Sax) return out;
  for (auto& def : out.mutableProcs())
    def.body = Expander(sig).run(def.body, Address::var(def.destVar), def.destType);
  return out;
}

}  // namespace snax
