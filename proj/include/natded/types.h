#ifndef NATDED_TYPES_H_
#define NATDED_TYPES_H_

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

namespace natded {

enum class TypeKind { kVar, kBool, kNat, kList, kArrow, kProd };

// Simple types over booleans, naturals, lists, products and arrows.
// Immutable; copies share structure.
class Type {
 public:
  // Defaults to B; exists so aggregates holding a Type stay regular.
  Type();

  static Type var(std::string name);
  static Type boolean();
  static Type nat();
  static Type list(Type elem);
  static Type arrow(Type dom, Type cod);
  static Type prod(Type left, Type right);

  TypeKind kind() const { return node_->kind; }
  // Only meaningful for kVar.
  const std::string& name() const { return node_->name; }
  // kList: elem. kArrow: dom, cod. kProd: left, right.
  const Type& arg(std::size_t i) const { return node_->args.at(i); }

  bool is_bool() const { return kind() == TypeKind::kBool; }
  bool is_arrow() const { return kind() == TypeKind::kArrow; }

  friend bool operator==(const Type& a, const Type& b);
  friend bool operator<(const Type& a, const Type& b);

  std::string to_string() const;

 private:
  struct Node {
    TypeKind kind;
    std::string name;
    std::vector<Type> args;
  };
  explicit Type(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Object variable. Identity is the full triple (name, index, type).
struct ObjVar {
  std::string name;
  std::uint64_t index = 0;
  Type ty;

  friend bool operator==(const ObjVar& a, const ObjVar& b) {
    return a.index == b.index && a.name == b.name && a.ty == b.ty;
  }
  friend bool operator<(const ObjVar& a, const ObjVar& b);
};

// Source of fresh indices. Every draw strictly increases the counter.
class NameSupply {
 public:
  NameSupply() = default;
  explicit NameSupply(std::uint64_t start) : next_index_(start) {}

  std::uint64_t draw() { return next_index_++; }
  std::uint64_t peek() const { return next_index_; }
  // Never moves backwards.
  void reserve_above(std::uint64_t index) {
    if (index >= next_index_) next_index_ = index + 1;
  }

  ObjVar fresh(const ObjVar& like) { return {like.name, draw(), like.ty}; }

 private:
  std::uint64_t next_index_ = 0;
};

// Sorted, duplicate-free set of object variables. Used for free-variable
// caches on terms and formulas.
class VarSet {
 public:
  VarSet() = default;
  explicit VarSet(ObjVar v) { vars_.push_back(std::move(v)); }

  bool contains(const ObjVar& v) const;
  bool empty() const { return vars_.empty(); }
  std::size_t size() const { return vars_.size(); }
  auto begin() const { return vars_.begin(); }
  auto end() const { return vars_.end(); }

  void insert(const ObjVar& v);
  void erase(const ObjVar& v);
  void merge(const VarSet& other);

  friend bool operator==(const VarSet&, const VarSet&) = default;

 private:
  std::vector<ObjVar> vars_;
};

// Draws a variable with x's name and type from `supply` until it is free in
// none of the avoid sets.
ObjVar fresh_avoiding(const ObjVar& x, NameSupply& supply,
                      std::initializer_list<const VarSet*> avoid);

}  // namespace natded

#endif  // NATDED_TYPES_H_
