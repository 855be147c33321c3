#pragma once

#include <optional>
#include <string>

#include "snax/conformance/models.hpp"
#include "snax/runtime/configuration.hpp"

namespace snax {

struct ConfigFailure {
  std::string rule;  // THREAD, CELL or JOIN
  std::string item;
  std::string detail;
};

struct ConfigTyping {
  std::optional<ConfigContext> output;
  std::optional<ConfigFailure> failure;
  bool ok() const { return output.has_value(); }
};

/// The context ⊨_c needs for an item at `dest`: the minimal entries of
/// cctx strictly extending dest are eligible, every other entry except
/// those dest weakly extends is ordinary. SAX contexts are all ordinary.
Context reconstructContext(const ConfigContext& cctx, const Address& dest, Dialect dialect);

/// cctxIn ⊨ c :: cctxOut, threading items through JOIN in dependency order
/// (an item follows the items it mentions and the items strictly extending
/// its address; remaining ties follow creation order).
ConfigTyping checkConfiguration(const ConfigContext& cctxIn, const Configuration& c, const Signature& sig,
                                Dialect dialect);

}  // namespace snax
