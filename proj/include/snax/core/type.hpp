#pragma once

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace snax {

using Label = std::string;

struct Type;
using TypePtr = std::shared_ptr<const Type>;

// A ::= A * A | 1 | +{l : A_l} | dn A | A -> A | t
struct Type {
  struct Tensor {
    TypePtr left;
    TypePtr right;
  };
  struct Unit {};
  struct Sum {
    // Written order is kept for rendering; equality ignores it.
    std::vector<std::pair<Label, TypePtr>> branches;
  };
  struct Down {
    TypePtr inner;
  };
  struct Arrow {
    TypePtr domain;
    TypePtr codomain;
  };
  struct Name {
    std::string name;
  };

  std::variant<Tensor, Unit, Sum, Down, Arrow, Name> node;

  template <class T> const T* as() const { return std::get_if<T>(&node); }
  template <class T> bool is() const { return std::holds_alternative<T>(node); }
};

TypePtr tensorType(TypePtr left, TypePtr right);
TypePtr unitType();
TypePtr sumType(std::vector<std::pair<Label, TypePtr>> branches);
TypePtr downType(TypePtr inner);
TypePtr arrowType(TypePtr domain, TypePtr codomain);
TypePtr nameType(std::string name);

/// Branch type for `label`, or nullptr when the sum has no such label.
TypePtr sumBranch(const Type::Sum& sum, const Label& label);

/// Syntactic equality (names compared by name, sum branches by label set).
bool typeSyntaxEqual(const TypePtr& a, const TypePtr& b);

/// Surface-syntax rendering, e.g. `+{'nil : 1, 'cons : bool * dn boollist}`.
std::string renderType(const TypePtr& t);

}  // namespace snax
