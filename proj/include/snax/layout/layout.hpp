#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "snax/core/signature.hpp"

namespace snax {

/// Memoized sizes in words: |1| = 0, |dn A| = |A -> B| = 1,
/// |A * B| = |A| + |B|, |+{l : A_l}| = 1 + max |A_l| (max of nothing is 0).
class SizeTable {
 public:
  explicit SizeTable(const Signature& sig) : sig_(sig) {}
  std::size_t size(const TypePtr& t);

 private:
  const Signature& sig_;
  std::map<std::string, std::size_t> names_;
  std::vector<std::string> inProgress_;
};

std::size_t size(const TypePtr& t, const Signature& sig);

using BlockTyping = std::map<BlockId, TypePtr>;

struct ConcreteAddress {
  BlockId block;
  std::size_t offset = 0;
  auto operator<=>(const ConcreteAddress&) const = default;
};

class InvalidPath : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Word offset of `path` inside a value of type `root`; throws InvalidPath.
std::size_t pathOffset(const TypePtr& root, const Path& path, const Signature& sig);
ConcreteAddress concretize(const Address& a, const BlockTyping& blocks, const Signature& sig);

struct PathLayout {
  Path path;
  TypePtr type;
  std::size_t offset = 0;
  std::size_t width = 0;
};

/// Every non-empty projection path of `t` in preorder, not descending below dn or ->.
std::vector<PathLayout> enumeratePaths(const TypePtr& t, const Signature& sig);

/// "size N; .path @off (width w); ..."
std::string layoutReport(const TypePtr& t, const Signature& sig);

/// Cells keyed by full address; nullopt marks an allocated but empty cell.
using CellMap = std::map<Address, std::optional<Storable>>;

/// Slot strings of one block: tags without the quote, "→α<id><path>" for
/// stored addresses, "cont@<n>" for continuations, "_" for empty words.
/// Continuation numbers come from `conts` (assigned on first sight).
std::vector<std::string> blockSlots(BlockId block, const CellMap& cells, const BlockTyping& blocks,
                                    const Signature& sig, std::map<const Process*, int>& conts);

/// One "block α<id> : <type> [slot|slot|...]" line per block in `order`,
/// followed by "(path=() ...)" when zero-width cells are filled.
std::string renderMemory(const CellMap& cells, const std::vector<BlockId>& order, const BlockTyping& blocks,
                         const Signature& sig);

}  // namespace snax
