#include "snax/runtime/configuration.hpp"

#include "snax/parser/render.hpp"

namespace snax {

const Storable* Configuration::filled(const Address& a) const {
  auto it = cells.find(a);
  if (it == cells.end() || !it->second) return nullptr;
  return &*it->second;
}

BlockId Configuration::allocate(TypePtr rootType) {
  BlockId id{nextBlock++};
  blocks.push_back(id);
  blockTypes[id] = std::move(rootType);
  cells[Address::block(id)] = std::nullopt;
  return id;
}

std::string renderMemory(const Configuration& c, const Signature& sig) {
  return renderMemory(c.cells, c.blocks, c.blockTypes, sig);
}

std::string renderConfiguration(const Configuration& c) {
  std::string out;
  for (const auto& t : c.threads)
    out += "thread " + renderAddress(t.dest) + " (" + renderProcess(t.proc) + ")\n";
  for (const auto& [a, s] : c.cells)
    out += "cell " + renderAddress(a) + " " + (s ? "<" + renderStorable(*s) + ">" : std::string("<>")) + "\n";
  return out;
}

}  // namespace snax
