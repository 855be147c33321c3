#include "snax/core/type.hpp"

#include <algorithm>
#include <sstream>

namespace snax {

namespace {

TypePtr make(Type::Tensor n) { return std::make_shared<const Type>(Type{std::move(n)}); }
TypePtr make(Type::Sum n) { return std::make_shared<const Type>(Type{std::move(n)}); }
TypePtr make(Type::Down n) { return std::make_shared<const Type>(Type{std::move(n)}); }
TypePtr make(Type::Arrow n) { return std::make_shared<const Type>(Type{std::move(n)}); }
TypePtr make(Type::Name n) { return std::make_shared<const Type>(Type{std::move(n)}); }

// Precedence levels: 0 = arrow, 1 = tensor, 2 = atomic.
void render(std::ostream& out, const TypePtr& t, int level) {
  if (const auto* n = t->as<Type::Arrow>()) {
    if (level > 0) out << '(';
    render(out, n->domain, 1);
    out << " -> ";
    render(out, n->codomain, 0);
    if (level > 0) out << ')';
  } else if (const auto* n = t->as<Type::Tensor>()) {
    if (level > 1) out << '(';
    render(out, n->left, 2);
    out << " * ";
    render(out, n->right, 1);
    if (level > 1) out << ')';
  } else if (t->is<Type::Unit>()) {
    out << '1';
  } else if (const auto* n = t->as<Type::Sum>()) {
    out << "+{";
    bool first = true;
    for (const auto& [label, branch] : n->branches) {
      if (!first) out << ", ";
      first = false;
      out << '\'' << label << " : ";
      render(out, branch, 0);
    }
    out << '}';
  } else if (const auto* n = t->as<Type::Down>()) {
    out << "dn ";
    render(out, n->inner, 2);
  } else if (const auto* n = t->as<Type::Name>()) {
    out << n->name;
  }
}

}  // namespace

TypePtr tensorType(TypePtr left, TypePtr right) {
  return make(Type::Tensor{std::move(left), std::move(right)});
}

TypePtr unitType() {
  static const TypePtr unit = std::make_shared<const Type>(Type{Type::Unit{}});
  return unit;
}

TypePtr sumType(std::vector<std::pair<Label, TypePtr>> branches) {
  return make(Type::Sum{std::move(branches)});
}

TypePtr downType(TypePtr inner) { return make(Type::Down{std::move(inner)}); }

TypePtr arrowType(TypePtr domain, TypePtr codomain) {
  return make(Type::Arrow{std::move(domain), std::move(codomain)});
}

TypePtr nameType(std::string name) { return make(Type::Name{std::move(name)}); }

TypePtr sumBranch(const Type::Sum& sum, const Label& label) {
  for (const auto& [l, t] : sum.branches)
    if (l == label) return t;
  return nullptr;
}

bool typeSyntaxEqual(const TypePtr& a, const TypePtr& b) {
  if (a == b) return true;
  if (a->node.index() != b->node.index()) return false;
  if (const auto* x = a->as<Type::Tensor>()) {
    const auto* y = b->as<Type::Tensor>();
    return typeSyntaxEqual(x->left, y->left) && typeSyntaxEqual(x->right, y->right);
  }
  if (a->is<Type::Unit>()) return true;
  if (const auto* x = a->as<Type::Sum>()) {
    const auto* y = b->as<Type::Sum>();
    if (x->branches.size() != y->branches.size()) return false;
    return std::all_of(x->branches.begin(), x->branches.end(), [&](const auto& br) {
      auto other = sumBranch(*y, br.first);
      return other && typeSyntaxEqual(br.second, other);
    });
  }
  if (const auto* x = a->as<Type::Down>()) return typeSyntaxEqual(x->inner, b->as<Type::Down>()->inner);
  if (const auto* x = a->as<Type::Arrow>()) {
    const auto* y = b->as<Type::Arrow>();
    return typeSyntaxEqual(x->domain, y->domain) && typeSyntaxEqual(x->codomain, y->codomain);
  }
  return a->as<Type::Name>()->name == b->as<Type::Name>()->name;
}

std::string renderType(const TypePtr& t) {
  std::ostringstream out;
  render(out, t, 0);
  return out.str();
}

}  // namespace snax
