#pragma once

#include <string>

#include "snax/core/signature.hpp"

namespace snax {

/// Single-line surface syntax.
std::string renderProcess(const ProcPtr& p);
std::string renderStorable(const Storable& s);
std::string renderCostorable(const Costorable& k);

/// One definition per line, preceded by the dialect pragma.
std::string renderSignature(const Signature& sig);

}  // namespace snax
