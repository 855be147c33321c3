#include "snax/core/signature.hpp"

namespace snax {

bool Signature::addType(TypeDef def) {
  if (typeIndex_.count(def.name)) return false;
  typeIndex_.emplace(def.name, types_.size());
  types_.push_back(std::move(def));
  return true;
}

bool Signature::addProc(ProcDef def) {
  if (procIndex_.count(def.name)) return false;
  procIndex_.emplace(def.name, procs_.size());
  procs_.push_back(std::move(def));
  return true;
}

const TypeDef* Signature::findType(const std::string& name) const {
  auto it = typeIndex_.find(name);
  return it == typeIndex_.end() ? nullptr : &types_[it->second];
}

const ProcDef* Signature::findProc(const std::string& name) const {
  auto it = procIndex_.find(name);
  return it == procIndex_.end() ? nullptr : &procs_[it->second];
}

}  // namespace snax
