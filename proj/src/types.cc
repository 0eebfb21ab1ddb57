#include "natded/types.h"

#include <algorithm>
#include <tuple>

#include "natded/error.h"

namespace natded {

std::string_view reason_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::kType:
      return "type-error";
    case ErrorCode::kLanguage:
      return "language-error";
    case ErrorCode::kTheory:
      return "theory-error";
    case ErrorCode::kShape:
      return "shape-error";
    case ErrorCode::kEigenvariable:
      return "eigenvariable-error";
    case ErrorCode::kClass:
      return "class-error";
    case ErrorCode::kCertificate:
      return "certificate-error";
    case ErrorCode::kEmptyGoal:
      return "empty-goal-error";
  }
  return "error";
}

Type::Type() : Type(boolean()) {}

Type Type::var(std::string name) {
  return Type(std::make_shared<const Node>(
      Node{TypeKind::kVar, std::move(name), {}}));
}

Type Type::boolean() {
  static const Type kBool(
      std::make_shared<const Node>(Node{TypeKind::kBool, "", {}}));
  return kBool;
}

Type Type::nat() {
  static const Type kNat(
      std::make_shared<const Node>(Node{TypeKind::kNat, "", {}}));
  return kNat;
}

Type Type::list(Type elem) {
  return Type(std::make_shared<const Node>(
      Node{TypeKind::kList, "", {std::move(elem)}}));
}

Type Type::arrow(Type dom, Type cod) {
  return Type(std::make_shared<const Node>(
      Node{TypeKind::kArrow, "", {std::move(dom), std::move(cod)}}));
}

Type Type::prod(Type left, Type right) {
  return Type(std::make_shared<const Node>(
      Node{TypeKind::kProd, "", {std::move(left), std::move(right)}}));
}

bool operator==(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.node_->name != b.node_->name) return false;
  return a.node_->args == b.node_->args;
}

bool operator<(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return false;
  if (a.kind() != b.kind()) return a.kind() < b.kind();
  if (a.node_->name != b.node_->name) return a.node_->name < b.node_->name;
  return a.node_->args < b.node_->args;
}

std::string Type::to_string() const {
  switch (kind()) {
    case TypeKind::kVar:
      return name();
    case TypeKind::kBool:
      return "B";
    case TypeKind::kNat:
      return "N";
    case TypeKind::kList:
      return "L(" + arg(0).to_string() + ")";
    case TypeKind::kArrow:
      return "(" + arg(0).to_string() + "->" + arg(1).to_string() + ")";
    case TypeKind::kProd:
      return "(" + arg(0).to_string() + "*" + arg(1).to_string() + ")";
  }
  return "?";
}

bool operator<(const ObjVar& a, const ObjVar& b) {
  return std::tie(a.name, a.index, a.ty) < std::tie(b.name, b.index, b.ty);
}

bool VarSet::contains(const ObjVar& v) const {
  return std::binary_search(vars_.begin(), vars_.end(), v);
}

void VarSet::insert(const ObjVar& v) {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
  if (it == vars_.end() || !(*it == v)) vars_.insert(it, v);
}

void VarSet::erase(const ObjVar& v) {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
  if (it != vars_.end() && *it == v) vars_.erase(it);
}

void VarSet::merge(const VarSet& other) {
  if (other.vars_.empty()) return;
  if (vars_.empty()) {
    vars_ = other.vars_;
    return;
  }
  std::vector<ObjVar> out;
  out.reserve(vars_.size() + other.vars_.size());
  std::set_union(vars_.begin(), vars_.end(), other.vars_.begin(),
                 other.vars_.end(), std::back_inserter(out));
  vars_ = std::move(out);
}

ObjVar fresh_avoiding(const ObjVar& x, NameSupply& supply,
                      std::initializer_list<const VarSet*> avoid) {
  for (;;) {
    ObjVar candidate = supply.fresh(x);
    bool clash = candidate == x;
    for (const VarSet* set : avoid) {
      if (set != nullptr && set->contains(candidate)) clash = true;
    }
    if (!clash) return candidate;
  }
}

}  // namespace natded
