#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "snax/runtime/engine.hpp"

namespace snax {

/// Configuration text with blocks renamed by discovery order from the root
/// block, so configurations equal up to a bijective renaming of block ids
/// get the same string.
std::string canonicalForm(const Configuration& c);

struct Exploration {
  std::size_t states = 0;
  std::size_t transitions = 0;
  std::set<std::string> finals;      // canonical final memories
  std::vector<std::string> stuck;    // canonical stuck non-final states
  std::vector<std::string> errors;   // engine errors raised while stepping
  bool boundExceeded = false;
};

/// Depth-first search over every scheduler choice, merging states equal up
/// to block renaming. Stops once more than `bound` distinct states are seen.
Exploration exploreInterleavings(const Engine& engine, const std::string& entry, std::size_t bound = 100000);

}  // namespace snax
