#include "snax/conformance/models.hpp"

#include "snax/core/wellformed.hpp"

namespace snax {

const ConfigEntry* findEntry(const ConfigContext& cctx, const Address& a) {
  for (const auto& e : cctx)
    if (e.addr == a) return &e;
  return nullptr;
}

bool modelsC(const ConfigContext& cctx, const Context& ctx, const Address& dest, const Signature* sig) {
  auto sameType = [&](const TypePtr& a, const TypePtr& b) {
    return sig ? typeEqual(a, b, *sig) : typeSyntaxEqual(a, b);
  };
  for (const auto& e : ctx.entries()) {
    const ConfigEntry* c = findEntry(cctx, e.addr);
    if (!c || !sameType(c->type, e.type)) return false;      // (i), (ii)
    if (e.eligible && !extends(e.addr, dest)) return false;  // (ii)
  }
  for (const auto& c : cctx) {
    if (!extends(c.addr, dest)) continue;
    bool covered = false;
    for (const auto& e : ctx.entries()) {
      if (!e.eligible) continue;
      if (e.addr == c.addr || extends(c.addr, e.addr)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;  // (iii)
  }
  return true;
}

}  // namespace snax
