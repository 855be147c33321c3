#pragma once

#include <optional>
#include <string>
#include <vector>

#include "snax/core/signature.hpp"
#include "snax/typecheck/context.hpp"

namespace snax {

/// Decides ctx ⊢ p :: (dest : destType). Every eligible entry of ctx must be
/// consumed; ordinary entries may be weakened or contracted freely.
/// Precondition: the signature's type names are defined and contractive.
std::optional<TypeError> checkProcess(Dialect dialect, const Signature& sig, const Context& ctx, const ProcPtr& p,
                                      const Address& dest, const TypePtr& destType);

struct Diagnostic {
  std::string definition;
  SourceLoc loc;
  std::string kind;
  std::string message;
};

/// "definition:line:col: Kind: message"
std::string formatDiagnostic(const Diagnostic& d);

/// Well-formedness (type names, contractivity, guardedness for SNAX), then
/// every procedure body. Reports the first error of each definition.
std::vector<Diagnostic> checkSignature(Dialect dialect, const Signature& sig);

}  // namespace snax
