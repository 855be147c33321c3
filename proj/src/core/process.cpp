#include "snax/core/process.hpp"

namespace snax {

std::string dialectName(Dialect d) { return d == Dialect::Sax ? "sax" : "snax"; }

namespace {

ProcPtr make(Process::Cut n, SourceLoc loc) { return std::make_shared<const Process>(Process{std::move(n), loc}); }
ProcPtr make(Process::Snip n, SourceLoc loc) { return std::make_shared<const Process>(Process{std::move(n), loc}); }
ProcPtr make(Process::Copy n, SourceLoc loc) { return std::make_shared<const Process>(Process{std::move(n), loc}); }
ProcPtr make(Process::Write n, SourceLoc loc) { return std::make_shared<const Process>(Process{std::move(n), loc}); }
ProcPtr make(Process::Read n, SourceLoc loc) { return std::make_shared<const Process>(Process{std::move(n), loc}); }
ProcPtr make(Process::Call n, SourceLoc loc) { return std::make_shared<const Process>(Process{std::move(n), loc}); }

void collect(const ProcPtr& p, std::vector<Address>& out);

void collect(const Storable& s, std::vector<Address>& out) {
  if (const auto* n = s.as<Storable::Pair>()) {
    if (n->components) {
      out.push_back(n->components->first);
      out.push_back(n->components->second);
    }
  } else if (const auto* n = s.as<Storable::Tag>()) {
    if (n->payload) out.push_back(*n->payload);
  } else if (const auto* n = s.as<Storable::Ptr>()) {
    out.push_back(n->target);
  } else if (const auto* n = s.as<Storable::Cont>()) {
    collect(n->body, out);
  }
}

void collect(const ProcPtr& p, std::vector<Address>& out) {
  if (const auto* n = p->as<Process::Cut>()) {
    collect(n->writer, out);
    collect(n->reader, out);
  } else if (const auto* n = p->as<Process::Snip>()) {
    out.push_back(n->target);
    collect(n->writer, out);
    collect(n->reader, out);
  } else if (const auto* n = p->as<Process::Copy>()) {
    out.push_back(n->dest);
    out.push_back(n->src);
  } else if (const auto* n = p->as<Process::Write>()) {
    out.push_back(n->dest);
    collect(n->value, out);
  } else if (const auto* n = p->as<Process::Read>()) {
    out.push_back(n->src);
    const auto& h = n->handler;
    if (const auto* k = h.as<Costorable::Pair>()) collect(k->body, out);
    else if (const auto* k = h.as<Costorable::Unit>()) collect(k->body, out);
    else if (const auto* k = h.as<Costorable::Sum>()) {
      for (const auto& br : k->branches) collect(br.body, out);
    } else if (const auto* k = h.as<Costorable::Ptr>()) collect(k->body, out);
    else if (const auto* k = h.as<Costorable::Apply>()) {
      out.push_back(k->arg);
      out.push_back(k->dest);
    }
  } else if (const auto* n = p->as<Process::Call>()) {
    out.push_back(n->dest);
    out.insert(out.end(), n->args.begin(), n->args.end());
  }
}

}  // namespace

ProcPtr makeCut(std::string var, TypePtr type, ProcPtr writer, ProcPtr reader, SourceLoc loc) {
  return make(Process::Cut{std::move(var), std::move(type), std::move(writer), std::move(reader)}, loc);
}
ProcPtr makeSnip(Address target, ProcPtr writer, ProcPtr reader, SourceLoc loc) {
  return make(Process::Snip{std::move(target), std::move(writer), std::move(reader)}, loc);
}
ProcPtr makeCopy(Address dest, Address src, SourceLoc loc) {
  return make(Process::Copy{std::move(dest), std::move(src)}, loc);
}
ProcPtr makeWrite(Address dest, Storable value, SourceLoc loc) {
  return make(Process::Write{std::move(dest), std::move(value)}, loc);
}
ProcPtr makeRead(Address src, Costorable handler, SourceLoc loc) {
  return make(Process::Read{std::move(src), std::move(handler)}, loc);
}
ProcPtr makeCall(std::string proc, Address dest, std::vector<Address> args, SourceLoc loc) {
  return make(Process::Call{std::move(proc), std::move(dest), std::move(args)}, loc);
}

std::vector<Address> mentionedAddresses(const ProcPtr& p) {
  std::vector<Address> out;
  collect(p, out);
  return out;
}

std::vector<Address> mentionedAddresses(const Storable& s) {
  std::vector<Address> out;
  collect(s, out);
  return out;
}

const Process* dialectMismatch(const ProcPtr& p, Dialect dialect) {
  const bool sax = dialect == Dialect::Sax;
  if (const auto* n = p->as<Process::Cut>()) {
    if (auto* bad = dialectMismatch(n->writer, dialect)) return bad;
    return dialectMismatch(n->reader, dialect);
  }
  if (const auto* n = p->as<Process::Snip>()) {
    if (sax) return p.get();
    if (auto* bad = dialectMismatch(n->writer, dialect)) return bad;
    return dialectMismatch(n->reader, dialect);
  }
  if (const auto* n = p->as<Process::Write>()) {
    const auto& v = n->value;
    if (const auto* s = v.as<Storable::Pair>()) return s->components.has_value() == sax ? nullptr : p.get();
    if (const auto* s = v.as<Storable::Tag>()) return s->payload.has_value() == sax ? nullptr : p.get();
    if (const auto* s = v.as<Storable::Cont>()) return dialectMismatch(s->body, dialect);
    return nullptr;
  }
  if (const auto* n = p->as<Process::Read>()) {
    const auto& h = n->handler;
    if (const auto* k = h.as<Costorable::Pair>()) {
      if (k->binders.has_value() != sax) return p.get();
      return dialectMismatch(k->body, dialect);
    }
    if (const auto* k = h.as<Costorable::Unit>()) return dialectMismatch(k->body, dialect);
    if (const auto* k = h.as<Costorable::Sum>()) {
      for (const auto& br : k->branches) {
        if (br.binder.has_value() != sax) return p.get();
        if (auto* bad = dialectMismatch(br.body, dialect)) return bad;
      }
      return nullptr;
    }
    if (const auto* k = h.as<Costorable::Ptr>()) return dialectMismatch(k->body, dialect);
    return nullptr;
  }
  return nullptr;
}

}  // namespace snax
