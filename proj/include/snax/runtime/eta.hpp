#pragma once

#include "snax/core/signature.hpp"

namespace snax {

/// η(copy a b : A): reads and rewrites componentwise until only copies at
/// dn and -> types remain.
ProcPtr etaCopy(const Address& a, const Address& b, const TypePtr& type, const Signature& sig);

/// Expands every copy in `p`, which writes `dest : destType`. Copy types are
/// recovered from the destinations along the way (cut annotations, snip
/// projections, continuation codomains).
ProcPtr etaExpandCopies(const ProcPtr& p, const Signature& sig, const Address& dest, const TypePtr& destType);

/// Every procedure body expanded; SAX signatures come back unchanged.
Signature expandSignature(const Signature& sig, Dialect dialect);

}  // namespace snax
