#include "snax/core/substitute.hpp"

#include <vector>

namespace snax {

namespace {

void collectFree(const ProcPtr& p, std::set<std::string> bound, std::set<std::string>& out);

void noteHead(const Address& a, const std::set<std::string>& bound, std::set<std::string>& out) {
  if (const auto* v = a.varName(); v && !bound.count(*v)) out.insert(*v);
}

void collectFree(const ProcPtr& p, std::set<std::string> bound, std::set<std::string>& out) {
  if (const auto* n = p->as<Process::Cut>()) {
    bound.insert(n->var);
    collectFree(n->writer, bound, out);
    collectFree(n->reader, bound, out);
  } else if (const auto* n = p->as<Process::Snip>()) {
    noteHead(n->target, bound, out);
    collectFree(n->writer, bound, out);
    collectFree(n->reader, bound, out);
  } else if (const auto* n = p->as<Process::Copy>()) {
    noteHead(n->dest, bound, out);
    noteHead(n->src, bound, out);
  } else if (const auto* n = p->as<Process::Write>()) {
    noteHead(n->dest, bound, out);
    if (const auto* c = n->value.as<Storable::Cont>()) {
      auto inner = bound;
      inner.insert(c->arg);
      inner.insert(c->dest);
      collectFree(c->body, inner, out);
    } else {
      for (const auto& a : mentionedAddresses(n->value)) noteHead(a, bound, out);
    }
  } else if (const auto* n = p->as<Process::Read>()) {
    noteHead(n->src, bound, out);
    const auto& h = n->handler;
    if (const auto* k = h.as<Costorable::Pair>()) {
      auto inner = bound;
      if (k->binders) {
        inner.insert(k->binders->first);
        inner.insert(k->binders->second);
      }
      collectFree(k->body, inner, out);
    } else if (const auto* k = h.as<Costorable::Unit>()) {
      collectFree(k->body, bound, out);
    } else if (const auto* k = h.as<Costorable::Sum>()) {
      for (const auto& br : k->branches) {
        auto inner = bound;
        if (br.binder) inner.insert(*br.binder);
        collectFree(br.body, inner, out);
      }
    } else if (const auto* k = h.as<Costorable::Ptr>()) {
      auto inner = bound;
      inner.insert(k->binder);
      collectFree(k->body, inner, out);
    } else if (const auto* k = h.as<Costorable::Apply>()) {
      noteHead(k->arg, bound, out);
      noteHead(k->dest, bound, out);
    }
  } else if (const auto* n = p->as<Process::Call>()) {
    noteHead(n->dest, bound, out);
    for (const auto& a : n->args) noteHead(a, bound, out);
  }
}

class Substituter {
 public:
  ProcPtr run(const ProcPtr& p, const Substitution& s) {
    if (s.empty()) return p;
    if (const auto* n = p->as<Process::Cut>()) {
      std::vector<std::string> binders{n->var};
      auto inner = enter(binders, {n->writer, n->reader}, s);
      return makeCut(binders[0], n->type, run(n->writer, inner), run(n->reader, inner), p->loc);
    }
    if (const auto* n = p->as<Process::Snip>())
      return makeSnip(substituteAddress(n->target, s), run(n->writer, s), run(n->reader, s), p->loc);
    if (const auto* n = p->as<Process::Copy>())
      return makeCopy(substituteAddress(n->dest, s), substituteAddress(n->src, s), p->loc);
    if (const auto* n = p->as<Process::Write>())
      return makeWrite(substituteAddress(n->dest, s), storable(n->value, s), p->loc);
    if (const auto* n = p->as<Process::Read>())
      return makeRead(substituteAddress(n->src, s), costorable(n->handler, s), p->loc);
    const auto* n = p->as<Process::Call>();
    std::vector<Address> args;
    args.reserve(n->args.size());
    for (const auto& a : n->args) args.push_back(substituteAddress(a, s));
    return makeCall(n->proc, substituteAddress(n->dest, s), std::move(args), p->loc);
  }

 private:
  // Renames binders that collide with variable heads of the replacements and
  // returns the substitution in force beneath them.
  Substitution enter(std::vector<std::string>& binders, std::vector<ProcPtr> scope, const Substitution& s) {
    Substitution inner = s;
    for (const auto& b : binders) inner.erase(b);
    std::set<std::string> heads;
    for (const auto& [x, a] : inner)
      if (const auto* v = a.varName()) heads.insert(*v);
    for (auto& b : binders) {
      if (!heads.count(b)) continue;
      std::set<std::string> avoid = heads;
      for (const auto& body : scope) {
        auto fv = freeVariables(body);
        avoid.insert(fv.begin(), fv.end());
      }
      for (const auto& [x, a] : inner) avoid.insert(x);
      for (const auto& other : binders) avoid.insert(other);
      std::string fresh = b;
      while (avoid.count(fresh)) fresh += '\'';
      inner[b] = Address::var(fresh);
      b = fresh;
    }
    return inner;
  }

  Storable storable(const Storable& v, const Substitution& s) {
    if (const auto* n = v.as<Storable::Pair>()) {
      if (!n->components) return v;
      return {Storable::Pair{std::make_pair(substituteAddress(n->components->first, s),
                                            substituteAddress(n->components->second, s))}};
    }
    if (const auto* n = v.as<Storable::Tag>()) {
      if (!n->payload) return v;
      return {Storable::Tag{n->label, substituteAddress(*n->payload, s)}};
    }
    if (const auto* n = v.as<Storable::Ptr>()) return {Storable::Ptr{substituteAddress(n->target, s)}};
    if (const auto* n = v.as<Storable::Cont>()) {
      std::vector<std::string> binders{n->arg, n->dest};
      auto inner = enter(binders, {n->body}, s);
      return {Storable::Cont{binders[0], binders[1], run(n->body, inner)}};
    }
    return v;
  }

  Costorable costorable(const Costorable& h, const Substitution& s) {
    if (const auto* k = h.as<Costorable::Pair>()) {
      if (!k->binders) return {Costorable::Pair{std::nullopt, run(k->body, s)}};
      std::vector<std::string> binders{k->binders->first, k->binders->second};
      auto inner = enter(binders, {k->body}, s);
      return {Costorable::Pair{std::make_pair(binders[0], binders[1]), run(k->body, inner)}};
    }
    if (const auto* k = h.as<Costorable::Unit>()) return {Costorable::Unit{run(k->body, s)}};
    if (const auto* k = h.as<Costorable::Sum>()) {
      Costorable::Sum out;
      for (const auto& br : k->branches) {
        if (!br.binder) {
          out.branches.push_back({br.label, std::nullopt, run(br.body, s)});
          continue;
        }
        std::vector<std::string> binders{*br.binder};
        auto inner = enter(binders, {br.body}, s);
        out.branches.push_back({br.label, binders[0], run(br.body, inner)});
      }
      return {std::move(out)};
    }
    if (const auto* k = h.as<Costorable::Ptr>()) {
      std::vector<std::string> binders{k->binder};
      auto inner = enter(binders, {k->body}, s);
      return {Costorable::Ptr{binders[0], run(k->body, inner)}};
    }
    const auto* k = h.as<Costorable::Apply>();
    return {Costorable::Apply{substituteAddress(k->arg, s), substituteAddress(k->dest, s)}};
  }
};

}  // namespace

Address substituteAddress(const Address& a, const Substitution& s) {
  const auto* v = a.varName();
  if (!v) return a;
  auto it = s.find(*v);
  if (it == s.end()) return a;
  return it->second.project(a.path);
}

ProcPtr substitute(const ProcPtr& p, const Address& a, const std::string& x) {
  return substitute(p, Substitution{{x, a}});
}

ProcPtr substitute(const ProcPtr& p, const Substitution& s) { return Substituter{}.run(p, s); }

std::set<std::string> freeVariables(const ProcPtr& p) {
  std::set<std::string> out;
  collectFree(p, {}, out);
  return out;
}

}  // namespace snax
