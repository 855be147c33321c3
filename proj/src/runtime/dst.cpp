#include "snax/runtime/dst.hpp"

namespace snax {

std::set<Address> dst(const ProcPtr& p) {
  if (const auto* n = p->as<Process::Cut>()) return dst(n->reader);
  if (const auto* n = p->as<Process::Snip>()) return dst(n->reader);
  if (const auto* n = p->as<Process::Copy>()) return {n->dest};
  if (const auto* n = p->as<Process::Write>()) return {n->dest};
  if (const auto* n = p->as<Process::Call>()) return {n->dest};
  const auto& h = p->as<Process::Read>()->handler;
  if (const auto* k = h.as<Costorable::Pair>()) return dst(k->body);
  if (const auto* k = h.as<Costorable::Unit>()) return dst(k->body);
  if (const auto* k = h.as<Costorable::Ptr>()) return dst(k->body);
  if (const auto* k = h.as<Costorable::Apply>()) return {k->dest};
  std::set<Address> out;
  for (const auto& br : h.as<Costorable::Sum>()->branches) {
    auto part = dst(br.body);
    out.insert(part.begin(), part.end());
  }
  return out;
}

}  // namespace snax
