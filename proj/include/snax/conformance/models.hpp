#pragma once

#include <vector>

#include "snax/core/signature.hpp"
#include "snax/typecheck/context.hpp"

namespace snax {

struct ConfigEntry {
  Address addr;
  TypePtr type;
};

/// Configuration context: distinct runtime addresses, no eligibility.
using ConfigContext = std::vector<ConfigEntry>;

const ConfigEntry* findEntry(const ConfigContext& cctx, const Address& a);

/// cctx ⊨_dest ctx: (i) ordinary entries occur in cctx; (ii) eligible
/// entries occur in cctx and strictly extend dest; (iii) every cctx entry
/// strictly extending dest is eligible in ctx or strictly extends an
/// eligible entry. Types are compared with typeEqual when `sig` is given,
/// syntactically otherwise.
bool modelsC(const ConfigContext& cctx, const Context& ctx, const Address& dest, const Signature* sig = nullptr);

}  // namespace snax
