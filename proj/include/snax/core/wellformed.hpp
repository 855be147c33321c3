#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "snax/core/address.hpp"
#include "snax/core/signature.hpp"

namespace snax {

struct SignatureError {
  enum class Kind { UndefinedTypeName, NonContractive, Unguarded };
  Kind kind;
  std::string name;    // offending type or procedure
  std::string detail;  // cycle or occurrence path
  SourceLoc loc;
};

std::string kindName(SignatureError::Kind k);

class UndefinedTypeName : public std::runtime_error {
 public:
  explicit UndefinedTypeName(const std::string& name)
      : std::runtime_error("undefined type name " + name), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// Unfolds names until the head is a structural constructor.
/// Throws UndefinedTypeName; throws std::logic_error on a non-contractive cycle.
TypePtr unfoldName(const TypePtr& t, const Signature& sig);

/// Equirecursive equality by coinductive bisimulation.
bool typeEqual(const TypePtr& a, const TypePtr& b, const Signature& sig);

/// Every Name used in type definitions, procedure headers and cut annotations is defined.
std::vector<SignatureError> checkTypeNames(const Signature& sig);

/// No Name-to-Name definition cycles; no procedure whose body is a bare call cycle.
std::vector<SignatureError> checkContractive(const Signature& sig);

/// Every recursive occurrence of a type name lies beneath dn or ->.
std::vector<SignatureError> checkGuarded(const Signature& sig);

/// Component type reached by one projection, or nullptr when the
/// projection does not match the (unfolded) type.
TypePtr projectType(const TypePtr& t, const Projection& p, const Signature& sig);
TypePtr typeAtPath(const TypePtr& root, const Path& path, const Signature& sig);

}  // namespace snax
