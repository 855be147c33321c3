#include "snax/layout/layout.hpp"

#include <algorithm>

#include "snax/core/wellformed.hpp"

namespace snax {

std::size_t SizeTable::size(const TypePtr& t) {
  if (const auto* n = t->as<Type::Tensor>()) return size(n->left) + size(n->right);
  if (t->is<Type::Unit>()) return 0;
  if (const auto* n = t->as<Type::Sum>()) {
    std::size_t widest = 0;
    for (const auto& br : n->branches) widest = std::max(widest, size(br.second));
    return 1 + widest;
  }
  if (t->is<Type::Down>() || t->is<Type::Arrow>()) return 1;
  const auto& name = t->as<Type::Name>()->name;
  if (auto it = names_.find(name); it != names_.end()) return it->second;
  if (std::find(inProgress_.begin(), inProgress_.end(), name) != inProgress_.end())
    throw std::logic_error("unbounded size: " + name + " recurs without a dn or -> guard");
  const TypeDef* def = sig_.findType(name);
  if (!def) throw UndefinedTypeName(name);
  inProgress_.push_back(name);
  std::size_t s = size(def->body);
  inProgress_.pop_back();
  names_[name] = s;
  return s;
}

std::size_t size(const TypePtr& t, const Signature& sig) { return SizeTable(sig).size(t); }

namespace {

std::size_t walk(SizeTable& sizes, const TypePtr& root, const Path& path, const Signature& sig, TypePtr* last) {
  std::size_t offset = 0;
  TypePtr cur = root;
  for (const auto& hop : path) {
    TypePtr u = unfoldName(cur, sig);
    switch (hop.kind) {
      case Projection::Kind::Pi1:
        if (!u->is<Type::Tensor>()) throw InvalidPath(".1 applied at type " + renderType(cur));
        cur = u->as<Type::Tensor>()->left;
        break;
      case Projection::Kind::Pi2: {
        const auto* t = u->as<Type::Tensor>();
        if (!t) throw InvalidPath(".2 applied at type " + renderType(cur));
        offset += sizes.size(t->left);
        cur = t->right;
        break;
      }
      case Projection::Kind::Tag: {
        const auto* s = u->as<Type::Sum>();
        TypePtr b = s ? sumBranch(*s, hop.label) : nullptr;
        if (!b) throw InvalidPath(".'" + hop.label + " applied at type " + renderType(cur));
        offset += 1;
        cur = b;
        break;
      }
    }
  }
  if (last) *last = cur;
  return offset;
}

void enumerate(SizeTable& sizes, const TypePtr& t, Path& at, std::size_t offset, const Signature& sig,
               std::vector<PathLayout>& out) {
  TypePtr u = unfoldName(t, sig);
  auto visit = [&](Projection hop, const TypePtr& child, std::size_t childOffset) {
    at.push_back(std::move(hop));
    out.push_back({at, child, childOffset, sizes.size(child)});
    enumerate(sizes, child, at, childOffset, sig, out);
    at.pop_back();
  };
  if (const auto* n = u->as<Type::Tensor>()) {
    visit(Projection::pi1(), n->left, offset);
    visit(Projection::pi2(), n->right, offset + sizes.size(n->left));
  } else if (const auto* n = u->as<Type::Sum>()) {
    for (const auto& [label, branch] : n->branches) visit(Projection::tag(label), branch, offset + 1);
  }
}

std::string payloadSlot(const Storable& s, std::map<const Process*, int>& conts) {
  if (const auto* v = s.as<Storable::Tag>()) return v->label;
  if (const auto* v = s.as<Storable::Ptr>()) return "→" + renderAddress(v->target);
  if (const auto* v = s.as<Storable::Cont>()) {
    auto [it, _] = conts.emplace(v->body.get(), static_cast<int>(conts.size()));
    return "cont@" + std::to_string(it->second);
  }
  return {};
}

bool zeroWidth(const Storable& s) { return s.as<Storable::Unit>() || s.as<Storable::Pair>(); }

auto blockRange(const CellMap& cells, BlockId block) {
  auto lo = cells.lower_bound(Address::block(block));
  auto hi = cells.lower_bound(Address::block(BlockId{block.value + 1}));
  return std::make_pair(lo, hi);
}

}  // namespace

std::size_t pathOffset(const TypePtr& root, const Path& path, const Signature& sig) {
  SizeTable sizes(sig);
  return walk(sizes, root, path, sig, nullptr);
}

ConcreteAddress concretize(const Address& a, const BlockTyping& blocks, const Signature& sig) {
  const BlockId* id = a.blockId();
  if (!id) throw InvalidPath("address " + renderAddress(a) + " has no runtime block");
  auto it = blocks.find(*id);
  if (it == blocks.end()) throw InvalidPath("block " + renderAddress(a.root()) + " has no recorded type");
  return {*id, pathOffset(it->second, a.path, sig)};
}

std::vector<PathLayout> enumeratePaths(const TypePtr& t, const Signature& sig) {
  SizeTable sizes(sig);
  std::vector<PathLayout> out;
  Path at;
  enumerate(sizes, t, at, 0, sig, out);
  return out;
}

std::string layoutReport(const TypePtr& t, const Signature& sig) {
  std::string out = "size " + std::to_string(size(t, sig));
  for (const auto& p : enumeratePaths(t, sig))
    out += "; " + renderPath(p.path) + " @" + std::to_string(p.offset) + " (width " + std::to_string(p.width) + ")";
  return out;
}

std::vector<std::string> blockSlots(BlockId block, const CellMap& cells, const BlockTyping& blocks,
                                    const Signature& sig, std::map<const Process*, int>& conts) {
  auto [lo, hi] = blockRange(cells, block);
  std::vector<std::string> slots;
  if (sig.dialect == Dialect::Sax) {
    // Indirect layout: a block holds one storable with its address components.
    auto root = cells.find(Address::block(block));
    if (root == cells.end() || !root->second) return {"_"};
    const Storable& s = *root->second;
    if (const auto* v = s.as<Storable::Pair>()) {
      if (v->components) {
        slots.push_back("→" + renderAddress(v->components->first));
        slots.push_back("→" + renderAddress(v->components->second));
      }
    } else if (const auto* v = s.as<Storable::Tag>()) {
      slots.push_back(v->label);
      if (v->payload) slots.push_back("→" + renderAddress(*v->payload));
    } else if (!s.as<Storable::Unit>()) {
      slots.push_back(payloadSlot(s, conts));
    }
    return slots;
  }
  auto type = blocks.find(block);
  if (type == blocks.end()) throw InvalidPath("block α" + std::to_string(block.value) + " has no recorded type");
  SizeTable sizes(sig);
  slots.assign(sizes.size(type->second), "_");
  for (auto it = lo; it != hi; ++it) {
    if (!it->second || zeroWidth(*it->second)) continue;
    std::size_t off = walk(sizes, type->second, it->first.path, sig, nullptr);
    if (off >= slots.size()) throw InvalidPath("cell " + renderAddress(it->first) + " lies outside its block");
    slots[off] = payloadSlot(*it->second, conts);
  }
  return slots;
}

std::string renderMemory(const CellMap& cells, const std::vector<BlockId>& order, const BlockTyping& blocks,
                         const Signature& sig) {
  std::map<const Process*, int> conts;
  std::string out;
  for (const auto& id : order) {
    auto type = blocks.find(id);
    out += "block α" + std::to_string(id.value) + " : " +
           (type == blocks.end() ? std::string("?") : renderType(type->second)) + " [";
    auto slots = blockSlots(id, cells, blocks, sig, conts);
    for (std::size_t i = 0; i < slots.size(); ++i) out += (i ? "|" : "") + slots[i];
    out += "]";
    std::string notes;
    auto [lo, hi] = blockRange(cells, id);
    for (auto it = lo; it != hi; ++it) {
      if (!it->second || !zeroWidth(*it->second) || sig.dialect == Dialect::Sax) continue;
      if (!notes.empty()) notes += " ";
      notes += (it->first.path.empty() ? std::string(".") : renderPath(it->first.path)) + "=" +
               (it->second->as<Storable::Unit>() ? "()" : "(,)");
    }
    if (!notes.empty()) out += " (" + notes + ")";
    out += "\n";
  }
  return out;
}

}  // namespace snax
