#pragma once

#include <optional>
#include <string>
#include <vector>

#include "snax/core/process.hpp"

namespace snax {

struct TypeError {
  enum class Kind {
    UnknownAddress,
    TypeMismatch,
    DestinationClash,
    EligibilityViolation,
    UnusedEligible,
    DialectViolation,
    UndefinedProc,
    ArityMismatch
  };
  Kind kind;
  std::string detail;
  SourceLoc loc;
};

std::string kindName(TypeError::Kind k);

struct Entry {
  Address addr;
  TypePtr type;
  bool eligible = false;
};

/// Typing context. An address occurs at most once: adding an ordinary
/// entry for an address that is already present is contraction (an
/// eligible entry stays eligible).
class Context {
 public:
  Context() = default;
  explicit Context(std::vector<Entry> entries);

  void add(Entry e);
  void addOrdinary(Address a, TypePtr t) { add({std::move(a), std::move(t), false}); }
  void addEligible(Address a, TypePtr t) { add({std::move(a), std::move(t), true}); }

  const Entry* find(const Address& a) const;
  const std::vector<Entry>& entries() const { return entries_; }
  std::vector<Address> eligibleAddresses() const;

  /// Same context with every eligible entry turned ordinary (C_E then weakening).
  Context demoted() const;
  /// Demotes only the listed addresses.
  Context demoted(const std::vector<Address>& which) const;

 private:
  std::vector<Entry> entries_;
};

/// The destination must not weakly extend any ordinary entry.
std::optional<TypeError> checkPresupposition(const Context& ctx, const Address& dest);

std::string renderContext(const Context& ctx);

}  // namespace snax
