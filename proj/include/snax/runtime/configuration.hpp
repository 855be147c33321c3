#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "snax/layout/layout.hpp"

namespace snax {

/// A running process obliged to write `dest`.
struct Thread {
  std::uint64_t id = 0;
  Address dest;
  ProcPtr proc;
};

/// The multiset of running processes and cells. Threads are kept in
/// creation order; cells persist once filled.
struct Configuration {
  std::vector<Thread> threads;
  CellMap cells;
  std::vector<BlockId> blocks;  // allocation order
  BlockTyping blockTypes;
  std::uint64_t nextBlock = 0;
  std::uint64_t nextThread = 0;

  bool final() const { return threads.empty(); }
  bool hasCell(const Address& a) const { return cells.count(a) != 0; }
  /// Payload of a filled cell, else nullptr.
  const Storable* filled(const Address& a) const;

  BlockId allocate(TypePtr rootType);
};

std::string renderMemory(const Configuration& c, const Signature& sig);
/// Threads, empty cells and filled cells, one per line.
std::string renderConfiguration(const Configuration& c);

}  // namespace snax
