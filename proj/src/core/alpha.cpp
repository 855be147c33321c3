#include "snax/core/alpha.hpp"

#include <map>
#include <string>

namespace snax {

namespace {

class AlphaEq {
 public:
  void bind(const std::string& x, const std::string& y) {
    left_[x] = y;
    right_[y] = x;
  }

  bool var(const std::string& x, const std::string& y) const {
    auto l = left_.find(x);
    auto r = right_.find(y);
    if (l == left_.end() && r == right_.end()) return x == y;  // both free
    return l != left_.end() && r != right_.end() && l->second == y && r->second == x;
  }

  bool addr(const Address& a, const Address& b) const {
    if (a.path != b.path) return false;
    const auto* x = a.varName();
    const auto* y = b.varName();
    if (x && y) return var(*x, *y);
    if (x || y) return false;
    return *a.blockId() == *b.blockId();
  }

  bool proc(const ProcPtr& p, const ProcPtr& q) const {
    if (p->node.index() != q->node.index()) return false;
    if (const auto* a = p->as<Process::Cut>()) {
      const auto* b = q->as<Process::Cut>();
      if (!typeSyntaxEqual(a->type, b->type)) return false;
      AlphaEq inner = *this;
      inner.bind(a->var, b->var);
      return inner.proc(a->writer, b->writer) && inner.proc(a->reader, b->reader);
    }
    if (const auto* a = p->as<Process::Snip>()) {
      const auto* b = q->as<Process::Snip>();
      return addr(a->target, b->target) && proc(a->writer, b->writer) && proc(a->reader, b->reader);
    }
    if (const auto* a = p->as<Process::Copy>()) {
      const auto* b = q->as<Process::Copy>();
      return addr(a->dest, b->dest) && addr(a->src, b->src);
    }
    if (const auto* a = p->as<Process::Write>()) {
      const auto* b = q->as<Process::Write>();
      return addr(a->dest, b->dest) && storable(a->value, b->value);
    }
    if (const auto* a = p->as<Process::Read>()) {
      const auto* b = q->as<Process::Read>();
      return addr(a->src, b->src) && costorable(a->handler, b->handler);
    }
    const auto* a = p->as<Process::Call>();
    const auto* b = q->as<Process::Call>();
    if (a->proc != b->proc || a->args.size() != b->args.size() || !addr(a->dest, b->dest)) return false;
    for (std::size_t i = 0; i < a->args.size(); ++i)
      if (!addr(a->args[i], b->args[i])) return false;
    return true;
  }

  bool storable(const Storable& s, const Storable& t) const {
    if (s.node.index() != t.node.index()) return false;
    if (const auto* a = s.as<Storable::Pair>()) {
      const auto* b = t.as<Storable::Pair>();
      if (a->components.has_value() != b->components.has_value()) return false;
      return !a->components ||
             (addr(a->components->first, b->components->first) && addr(a->components->second, b->components->second));
    }
    if (const auto* a = s.as<Storable::Tag>()) {
      const auto* b = t.as<Storable::Tag>();
      if (a->label != b->label || a->payload.has_value() != b->payload.has_value()) return false;
      return !a->payload || addr(*a->payload, *b->payload);
    }
    if (const auto* a = s.as<Storable::Ptr>()) return addr(a->target, t.as<Storable::Ptr>()->target);
    if (const auto* a = s.as<Storable::Cont>()) {
      const auto* b = t.as<Storable::Cont>();
      AlphaEq inner = *this;
      inner.bind(a->arg, b->arg);
      inner.bind(a->dest, b->dest);
      return inner.proc(a->body, b->body);
    }
    return true;
  }

  bool costorable(const Costorable& h, const Costorable& k) const {
    if (h.node.index() != k.node.index()) return false;
    if (const auto* a = h.as<Costorable::Pair>()) {
      const auto* b = k.as<Costorable::Pair>();
      if (a->binders.has_value() != b->binders.has_value()) return false;
      AlphaEq inner = *this;
      if (a->binders) {
        inner.bind(a->binders->first, b->binders->first);
        inner.bind(a->binders->second, b->binders->second);
      }
      return inner.proc(a->body, b->body);
    }
    if (const auto* a = h.as<Costorable::Unit>()) return proc(a->body, k.as<Costorable::Unit>()->body);
    if (const auto* a = h.as<Costorable::Sum>()) {
      const auto* b = k.as<Costorable::Sum>();
      if (a->branches.size() != b->branches.size()) return false;
      for (std::size_t i = 0; i < a->branches.size(); ++i) {
        const auto& x = a->branches[i];
        const auto& y = b->branches[i];
        if (x.label != y.label || x.binder.has_value() != y.binder.has_value()) return false;
        AlphaEq inner = *this;
        if (x.binder) inner.bind(*x.binder, *y.binder);
        if (!inner.proc(x.body, y.body)) return false;
      }
      return true;
    }
    if (const auto* a = h.as<Costorable::Ptr>()) {
      const auto* b = k.as<Costorable::Ptr>();
      AlphaEq inner = *this;
      inner.bind(a->binder, b->binder);
      return inner.proc(a->body, b->body);
    }
    const auto* a = h.as<Costorable::Apply>();
    const auto* b = k.as<Costorable::Apply>();
    return addr(a->arg, b->arg) && addr(a->dest, b->dest);
  }

 private:
  std::map<std::string, std::string> left_;
  std::map<std::string, std::string> right_;
};

}  // namespace

bool alphaEqual(const ProcPtr& a, const ProcPtr& b) { return AlphaEq{}.proc(a, b); }

bool alphaEqual(const Signature& a, const Signature& b) {
  if (a.dialect != b.dialect || a.types().size() != b.types().size() || a.procs().size() != b.procs().size())
    return false;
  for (std::size_t i = 0; i < a.types().size(); ++i) {
    const auto& x = a.types()[i];
    const auto& y = b.types()[i];
    if (x.name != y.name || !typeSyntaxEqual(x.body, y.body)) return false;
  }
  for (std::size_t i = 0; i < a.procs().size(); ++i) {
    const auto& x = a.procs()[i];
    const auto& y = b.procs()[i];
    if (x.name != y.name || x.params.size() != y.params.size() || !typeSyntaxEqual(x.destType, y.destType))
      return false;
    AlphaEq eq;
    eq.bind(x.destVar, y.destVar);
    for (std::size_t j = 0; j < x.params.size(); ++j) {
      if (!typeSyntaxEqual(x.params[j].type, y.params[j].type)) return false;
      eq.bind(x.params[j].var, y.params[j].var);
    }
    if (!eq.proc(x.body, y.body)) return false;
  }
  return true;
}

}  // namespace snax
