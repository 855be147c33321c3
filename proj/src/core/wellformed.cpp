#include "snax/core/wellformed.hpp"

#include <functional>
#include <map>
#include <set>
#include <utility>

namespace snax {

std::string kindName(SignatureError::Kind k) {
  switch (k) {
    case SignatureError::Kind::UndefinedTypeName: return "UndefinedTypeName";
    case SignatureError::Kind::NonContractive: return "NonContractive";
    case SignatureError::Kind::Unguarded: return "Unguarded";
  }
  return {};
}

TypePtr unfoldName(const TypePtr& t, const Signature& sig) {
  TypePtr cur = t;
  // A contractive chain visits each name at most once.
  for (std::size_t steps = 0; steps <= sig.types().size(); ++steps) {
    const auto* n = cur->as<Type::Name>();
    if (!n) return cur;
    const auto* def = sig.findType(n->name);
    if (!def) throw UndefinedTypeName(n->name);
    cur = def->body;
  }
  throw std::logic_error("non-contractive type name " + renderType(t));
}

namespace {

class Bisimulation {
 public:
  explicit Bisimulation(const Signature& sig) : sig_(sig) {}

  bool equal(const TypePtr& a, const TypePtr& b) {
    if (a == b) return true;
    if (!assumed_.insert({a.get(), b.get()}).second) return true;
    TypePtr x = unfoldName(a, sig_);
    TypePtr y = unfoldName(b, sig_);
    if (x->node.index() != y->node.index()) return false;
    if (const auto* l = x->as<Type::Tensor>()) {
      const auto* r = y->as<Type::Tensor>();
      return equal(l->left, r->left) && equal(l->right, r->right);
    }
    if (x->is<Type::Unit>()) return true;
    if (const auto* l = x->as<Type::Sum>()) {
      const auto* r = y->as<Type::Sum>();
      if (l->branches.size() != r->branches.size()) return false;
      for (const auto& [label, branch] : l->branches) {
        auto other = sumBranch(*r, label);
        if (!other || !equal(branch, other)) return false;
      }
      return true;
    }
    if (const auto* l = x->as<Type::Down>()) return equal(l->inner, y->as<Type::Down>()->inner);
    const auto* l = x->as<Type::Arrow>();
    const auto* r = y->as<Type::Arrow>();
    return equal(l->domain, r->domain) && equal(l->codomain, r->codomain);
  }

 private:
  const Signature& sig_;
  std::set<std::pair<const Type*, const Type*>> assumed_;
};

void forEachName(const TypePtr& t, const std::function<void(const std::string&)>& f) {
  if (const auto* n = t->as<Type::Tensor>()) {
    forEachName(n->left, f);
    forEachName(n->right, f);
  } else if (const auto* n = t->as<Type::Sum>()) {
    for (const auto& br : n->branches) forEachName(br.second, f);
  } else if (const auto* n = t->as<Type::Down>()) {
    forEachName(n->inner, f);
  } else if (const auto* n = t->as<Type::Arrow>()) {
    forEachName(n->domain, f);
    forEachName(n->codomain, f);
  } else if (const auto* n = t->as<Type::Name>()) {
    f(n->name);
  }
}

void forEachCutType(const ProcPtr& p, const std::function<void(const TypePtr&)>& f) {
  if (const auto* n = p->as<Process::Cut>()) {
    f(n->type);
    forEachCutType(n->writer, f);
    forEachCutType(n->reader, f);
  } else if (const auto* n = p->as<Process::Snip>()) {
    forEachCutType(n->writer, f);
    forEachCutType(n->reader, f);
  } else if (const auto* n = p->as<Process::Write>()) {
    if (const auto* c = n->value.as<Storable::Cont>()) forEachCutType(c->body, f);
  } else if (const auto* n = p->as<Process::Read>()) {
    const auto& h = n->handler;
    if (const auto* k = h.as<Costorable::Pair>()) forEachCutType(k->body, f);
    else if (const auto* k = h.as<Costorable::Unit>()) forEachCutType(k->body, f);
    else if (const auto* k = h.as<Costorable::Ptr>()) forEachCutType(k->body, f);
    else if (const auto* k = h.as<Costorable::Sum>())
      for (const auto& br : k->branches) forEachCutType(br.body, f);
  }
}

// Name occurrences in `t` not beneath dn or ->, with their position paths.
void unguardedOccurrences(const TypePtr& t, Path& at, std::vector<std::pair<std::string, Path>>& out) {
  if (const auto* n = t->as<Type::Tensor>()) {
    at.push_back(Projection::pi1());
    unguardedOccurrences(n->left, at, out);
    at.back() = Projection::pi2();
    unguardedOccurrences(n->right, at, out);
    at.pop_back();
  } else if (const auto* n = t->as<Type::Sum>()) {
    for (const auto& [label, branch] : n->branches) {
      at.push_back(Projection::tag(label));
      unguardedOccurrences(branch, at, out);
      at.pop_back();
    }
  } else if (const auto* n = t->as<Type::Name>()) {
    out.emplace_back(n->name, at);
  }
}

// Finds a cycle through `start` in a labelled graph; returns the edge labels.
template <class Edge>
bool findCycle(const std::string& start, const std::string& node,
               const std::map<std::string, std::vector<Edge>>& graph, std::set<std::string>& seen,
               std::vector<const Edge*>& trail) {
  auto it = graph.find(node);
  if (it == graph.end()) return false;
  for (const auto& e : it->second) {
    trail.push_back(&e);
    if (e.target == start) return true;
    if (seen.insert(e.target).second && findCycle(start, e.target, graph, seen, trail)) return true;
    trail.pop_back();
  }
  return false;
}

struct NameEdge {
  std::string target;
  Path position;
};

}  // namespace

bool typeEqual(const TypePtr& a, const TypePtr& b, const Signature& sig) {
  return Bisimulation(sig).equal(a, b);
}

std::vector<SignatureError> checkTypeNames(const Signature& sig) {
  std::vector<SignatureError> errors;
  std::set<std::string> reported;
  auto check = [&](const TypePtr& t, SourceLoc loc) {
    forEachName(t, [&](const std::string& name) {
      if (!sig.findType(name) && reported.insert(name).second)
        errors.push_back({SignatureError::Kind::UndefinedTypeName, name, "undefined type name " + name, loc});
    });
  };
  for (const auto& def : sig.types()) check(def.body, def.loc);
  for (const auto& def : sig.procs()) {
    check(def.destType, def.loc);
    for (const auto& p : def.params) check(p.type, def.loc);
    forEachCutType(def.body, [&](const TypePtr& t) { check(t, def.loc); });
  }
  return errors;
}

std::vector<SignatureError> checkContractive(const Signature& sig) {
  std::vector<SignatureError> errors;

  std::map<std::string, std::vector<NameEdge>> names;
  for (const auto& def : sig.types())
    if (const auto* n = def.body->as<Type::Name>()) names[def.name].push_back({n->name, {}});
  std::set<std::string> inCycle;
  for (const auto& def : sig.types()) {
    if (inCycle.count(def.name)) continue;
    std::set<std::string> seen;
    std::vector<const NameEdge*> trail;
    if (!findCycle(def.name, def.name, names, seen, trail)) continue;
    std::string cycle = def.name;
    for (const auto* e : trail) {
      cycle += " = " + e->target;
      inCycle.insert(e->target);
    }
    errors.push_back({SignatureError::Kind::NonContractive, def.name, "type cycle " + cycle, def.loc});
  }

  std::map<std::string, std::vector<NameEdge>> calls;
  for (const auto& def : sig.procs())
    if (const auto* c = def.body->as<Process::Call>()) calls[def.name].push_back({c->proc, {}});
  inCycle.clear();
  for (const auto& def : sig.procs()) {
    if (inCycle.count(def.name)) continue;
    std::set<std::string> seen;
    std::vector<const NameEdge*> trail;
    if (!findCycle(def.name, def.name, calls, seen, trail)) continue;
    std::string cycle = def.name;
    for (const auto* e : trail) {
      cycle += " -> " + e->target;
      inCycle.insert(e->target);
    }
    errors.push_back({SignatureError::Kind::NonContractive, def.name, "bare call cycle " + cycle, def.loc});
  }
  return errors;
}

std::vector<SignatureError> checkGuarded(const Signature& sig) {
  std::map<std::string, std::vector<NameEdge>> graph;
  for (const auto& def : sig.types()) {
    Path at;
    std::vector<std::pair<std::string, Path>> occ;
    unguardedOccurrences(def.body, at, occ);
    for (auto& [name, position] : occ) graph[def.name].push_back({name, position});
  }
  std::vector<SignatureError> errors;
  std::set<std::string> inCycle;
  for (const auto& def : sig.types()) {
    if (inCycle.count(def.name)) continue;
    std::set<std::string> seen;
    std::vector<const NameEdge*> trail;
    if (!findCycle(def.name, def.name, graph, seen, trail)) continue;
    std::string from = def.name;
    std::string detail;
    for (const auto* e : trail) {
      if (!detail.empty()) detail += ", ";
      detail += from + renderPath(e->position) + " : " + e->target;
      from = e->target;
      inCycle.insert(e->target);
    }
    errors.push_back({SignatureError::Kind::Unguarded, def.name, "unguarded recursion at " + detail, def.loc});
  }
  return errors;
}

TypePtr projectType(const TypePtr& t, const Projection& p, const Signature& sig) {
  TypePtr u = unfoldName(t, sig);
  switch (p.kind) {
    case Projection::Kind::Pi1:
      if (const auto* n = u->as<Type::Tensor>()) return n->left;
      return nullptr;
    case Projection::Kind::Pi2:
      if (const auto* n = u->as<Type::Tensor>()) return n->right;
      return nullptr;
    case Projection::Kind::Tag:
      if (const auto* n = u->as<Type::Sum>()) return sumBranch(*n, p.label);
      return nullptr;
  }
  return nullptr;
}

TypePtr typeAtPath(const TypePtr& root, const Path& path, const Signature& sig) {
  TypePtr cur = root;
  for (const auto& hop : path) {
    cur = projectType(cur, hop, sig);
    if (!cur) return nullptr;
  }
  return cur;
}

}  // namespace snax
