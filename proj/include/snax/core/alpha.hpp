#pragma once

#include "snax/core/process.hpp"
#include "snax/core/signature.hpp"

namespace snax {

/// Equality up to consistent renaming of bound variables.
bool alphaEqual(const ProcPtr& a, const ProcPtr& b);

/// Same dialect, same definitions in the same order, with type bodies
/// syntactically equal and process bodies alpha-equal. Parameter and
/// destination names count as binders.
bool alphaEqual(const Signature& a, const Signature& b);

}  // namespace snax
