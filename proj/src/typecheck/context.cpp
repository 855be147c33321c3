#include "snax/typecheck/context.hpp"

#include <algorithm>

namespace snax {

std::string kindName(TypeError::Kind k) {
  switch (k) {
    case TypeError::Kind::UnknownAddress: return "UnknownAddress";
    case TypeError::Kind::TypeMismatch: return "TypeMismatch";
    case TypeError::Kind::DestinationClash: return "DestinationClash";
    case TypeError::Kind::EligibilityViolation: return "EligibilityViolation";
    case TypeError::Kind::UnusedEligible: return "UnusedEligible";
    case TypeError::Kind::DialectViolation: return "DialectViolation";
    case TypeError::Kind::UndefinedProc: return "UndefinedProc";
    case TypeError::Kind::ArityMismatch: return "ArityMismatch";
  }
  return {};
}

Context::Context(std::vector<Entry> entries) {
  for (auto& e : entries) add(std::move(e));
}

void Context::add(Entry e) {
  for (auto& existing : entries_) {
    if (existing.addr == e.addr) {
      existing.eligible = existing.eligible || e.eligible;
      return;
    }
  }
  entries_.push_back(std::move(e));
}

const Entry* Context::find(const Address& a) const {
  for (const auto& e : entries_)
    if (e.addr == a) return &e;
  return nullptr;
}

std::vector<Address> Context::eligibleAddresses() const {
  std::vector<Address> out;
  for (const auto& e : entries_)
    if (e.eligible) out.push_back(e.addr);
  return out;
}

Context Context::demoted() const {
  Context out = *this;
  for (auto& e : out.entries_) e.eligible = false;
  return out;
}

Context Context::demoted(const std::vector<Address>& which) const {
  Context out = *this;
  for (auto& e : out.entries_)
    if (std::find(which.begin(), which.end(), e.addr) != which.end()) e.eligible = false;
  return out;
}

std::optional<TypeError> checkPresupposition(const Context& ctx, const Address& dest) {
  for (const auto& e : ctx.entries()) {
    if (!e.eligible && wextends(dest, e.addr))
      return TypeError{TypeError::Kind::DestinationClash,
                       "destination " + renderAddress(dest) + " extends antecedent " + renderAddress(e.addr) +
                           "; there would be two writers",
                       {}};
  }
  return std::nullopt;
}

std::string renderContext(const Context& ctx) {
  std::string out;
  for (const auto& e : ctx.entries()) {
    if (!out.empty()) out += ", ";
    out += (e.eligible ? "eli " : "") + renderAddress(e.addr) + " : " + renderType(e.type);
  }
  return out.empty() ? "." : out;
}

}  // namespace snax
