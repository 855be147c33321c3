#include "snax/core/address.hpp"

#include <algorithm>
#include <cassert>

namespace snax {

Address Address::project(Projection p) const {
  Address out = *this;
  out.path.push_back(std::move(p));
  return out;
}

Address Address::project(const Path& suffix) const {
  Address out = *this;
  out.path.insert(out.path.end(), suffix.begin(), suffix.end());
  return out;
}

bool extends(const Address& a, const Address& c) {
  if (a.head != c.head || a.path.size() <= c.path.size()) return false;
  return std::equal(c.path.begin(), c.path.end(), a.path.begin());
}

bool wextends(const Address& a, const Address& c) { return a == c || extends(a, c); }

Path pathSuffix(const Address& a, const Address& c) {
  assert(wextends(a, c));
  return Path(a.path.begin() + static_cast<std::ptrdiff_t>(c.path.size()), a.path.end());
}

std::string renderProjection(const Projection& p) {
  switch (p.kind) {
    case Projection::Kind::Pi1: return ".1";
    case Projection::Kind::Pi2: return ".2";
    case Projection::Kind::Tag: return ".'" + p.label;
  }
  return {};
}

std::string renderPath(const Path& p) {
  std::string out;
  for (const auto& hop : p) out += renderProjection(hop);
  return out;
}

std::string renderAddress(const Address& a) {
  std::string out = a.isBlock() ? "α" + std::to_string(a.blockId()->value) : *a.varName();
  return out + renderPath(a.path);
}

}  // namespace snax
