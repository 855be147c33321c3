#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "snax/core/type.hpp"

namespace snax {

/// Runtime memory block, written α<id>.
struct BlockId {
  std::uint64_t value = 0;
  auto operator<=>(const BlockId&) const = default;
};

/// One hop of a projection path: .1, .2 or .'label.
struct Projection {
  enum class Kind { Pi1, Pi2, Tag };
  Kind kind = Kind::Pi1;
  Label label;  // only for Tag

  static Projection pi1() { return {Kind::Pi1, {}}; }
  static Projection pi2() { return {Kind::Pi2, {}}; }
  static Projection tag(Label l) { return {Kind::Tag, std::move(l)}; }

  auto operator<=>(const Projection&) const = default;
};

using Path = std::vector<Projection>;

/// A static variable or runtime block at the head, followed by a projection path.
/// The head itself is never a projection.
struct Address {
  std::variant<std::string, BlockId> head;
  Path path;

  static Address var(std::string name, Path path = {}) { return {std::move(name), std::move(path)}; }
  static Address block(BlockId id, Path path = {}) { return {id, std::move(path)}; }

  bool isBlock() const { return std::holds_alternative<BlockId>(head); }
  const std::string* varName() const { return std::get_if<std::string>(&head); }
  const BlockId* blockId() const { return std::get_if<BlockId>(&head); }

  Address project(Projection p) const;
  Address project(const Path& suffix) const;
  /// Same head, empty path.
  Address root() const { return {head, {}}; }

  auto operator<=>(const Address&) const = default;
};

/// `a` strictly extends `c`: a = c·p for a non-empty p.
bool extends(const Address& a, const Address& c);
/// `a` weakly extends `c`: a = c or extends(a, c).
bool wextends(const Address& a, const Address& c);
/// Suffix p with a = c·p; requires wextends(a, c).
Path pathSuffix(const Address& a, const Address& c);

std::string renderProjection(const Projection& p);
std::string renderPath(const Path& p);
std::string renderAddress(const Address& a);

}  // namespace snax
