#pragma once

#include <map>
#include <set>
#include <string>

#include "snax/core/process.hpp"

namespace snax {

/// Simultaneous substitution of addresses for variable heads.
using Substitution = std::map<std::string, Address>;

/// Re-roots `a` when its head is a substituted variable: [c/x](x·p) = c·p.
Address substituteAddress(const Address& a, const Substitution& s);

/// [a/x]P: replaces free occurrences of `x` as an address head, renaming
/// binders that would capture a variable head of the replacement.
ProcPtr substitute(const ProcPtr& p, const Address& a, const std::string& x);
ProcPtr substitute(const ProcPtr& p, const Substitution& s);

/// Variables that occur free as address heads.
std::set<std::string> freeVariables(const ProcPtr& p);

}  // namespace snax
