#pragma once

#include <set>

#include "snax/core/process.hpp"

namespace snax {

/// Addresses a process will write: recurses through composition readers and
/// read handlers (union over branches). dst(call p c ...) = {c}.
std::set<Address> dst(const ProcPtr& p);

}  // namespace snax
