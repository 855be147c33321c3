#pragma once

#include <map>
#include <string>
#include <vector>

#include "snax/core/process.hpp"
#include "snax/core/type.hpp"

namespace snax {

struct TypeDef {
  std::string name;
  TypePtr body;
  SourceLoc loc;
};

struct Param {
  std::string var;
  TypePtr type;
};

/// proc name (dest : destType) (x1 : A1) ... (xn : An) = body
struct ProcDef {
  std::string name;
  std::string destVar;
  TypePtr destType;
  std::vector<Param> params;
  ProcPtr body;
  SourceLoc loc;
};

/// Type and process definitions in declaration order, with name lookup.
class Signature {
 public:
  Dialect dialect = Dialect::Snax;

  /// Returns false (and leaves the signature unchanged) on a duplicate name.
  bool addType(TypeDef def);
  bool addProc(ProcDef def);

  const TypeDef* findType(const std::string& name) const;
  const ProcDef* findProc(const std::string& name) const;

  const std::vector<TypeDef>& types() const { return types_; }
  const std::vector<ProcDef>& procs() const { return procs_; }
  std::vector<ProcDef>& mutableProcs() { return procs_; }

  std::size_t definitionCount() const { return types_.size() + procs_.size(); }

 private:
  std::vector<TypeDef> types_;
  std::vector<ProcDef> procs_;
  std::map<std::string, std::size_t> typeIndex_;
  std::map<std::string, std::size_t> procIndex_;
};

}  // namespace snax
