#include "snax/parser/render.hpp"

namespace snax {

std::string renderStorable(const Storable& s) {
  if (const auto* n = s.as<Storable::Pair>()) {
    if (!n->components) return "(,)";
    return "(" + renderAddress(n->components->first) + ", " + renderAddress(n->components->second) + ")";
  }
  if (s.as<Storable::Unit>()) return "()";
  if (const auto* n = s.as<Storable::Tag>()) {
    std::string out = "'" + n->label;
    if (n->payload) out += " " + renderAddress(*n->payload);
    return out;
  }
  if (const auto* n = s.as<Storable::Ptr>()) return "ptr " + renderAddress(n->target);
  const auto* n = s.as<Storable::Cont>();
  return "cont (" + n->arg + ", " + n->dest + ") => (" + renderProcess(n->body) + ")";
}

std::string renderCostorable(const Costorable& k) {
  if (const auto* n = k.as<Costorable::Pair>()) {
    std::string pat = n->binders ? "(" + n->binders->first + ", " + n->binders->second + ")" : "(,)";
    return "(" + pat + " => " + renderProcess(n->body) + ")";
  }
  if (const auto* n = k.as<Costorable::Unit>()) return "(() => " + renderProcess(n->body) + ")";
  if (const auto* n = k.as<Costorable::Sum>()) {
    std::string out = "(";
    for (std::size_t i = 0; i < n->branches.size(); ++i) {
      const auto& br = n->branches[i];
      if (i) out += " | ";
      out += "'" + br.label;
      if (br.binder) out += " " + *br.binder;
      out += " => " + renderProcess(br.body);
    }
    return out + ")";
  }
  if (const auto* n = k.as<Costorable::Ptr>()) return "(ptr " + n->binder + " => " + renderProcess(n->body) + ")";
  const auto* n = k.as<Costorable::Apply>();
  return "(" + renderAddress(n->arg) + " ; " + renderAddress(n->dest) + ")";
}

std::string renderProcess(const ProcPtr& p) {
  if (const auto* n = p->as<Process::Cut>())
    return n->var + " : " + renderType(n->type) + " <- (" + renderProcess(n->writer) + "); " +
           renderProcess(n->reader);
  if (const auto* n = p->as<Process::Snip>())
    return renderAddress(n->target) + " <~ (" + renderProcess(n->writer) + "); " + renderProcess(n->reader);
  if (const auto* n = p->as<Process::Copy>()) return "copy " + renderAddress(n->dest) + " " + renderAddress(n->src);
  if (const auto* n = p->as<Process::Write>())
    return "write " + renderAddress(n->dest) + " " + renderStorable(n->value);
  if (const auto* n = p->as<Process::Read>())
    return "read " + renderAddress(n->src) + " " + renderCostorable(n->handler);
  const auto* n = p->as<Process::Call>();
  std::string out = "call " + n->proc + " " + renderAddress(n->dest);
  for (const auto& a : n->args) out += " " + renderAddress(a);
  return out;
}

std::string renderSignature(const Signature& sig) {
  std::string out = "#dialect " + dialectName(sig.dialect) + "\n";
  for (const auto& t : sig.types()) out += "type " + t.name + " = " + renderType(t.body) + "\n";
  for (const auto& d : sig.procs()) {
    out += "proc " + d.name + " (" + d.destVar + " : " + renderType(d.destType) + ")";
    for (const auto& prm : d.params) out += " (" + prm.var + " : " + renderType(prm.type) + ")";
    out += " = " + renderProcess(d.body) + "\n";
  }
  return out;
}

}  // namespace snax
