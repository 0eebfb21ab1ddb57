#ifndef NATDED_TERM_H_
#define NATDED_TERM_H_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "natded/types.h"

namespace natded {

enum class TermKind { kVar, kConst, kApp, kLam };

// Constructors and destructors. The number of type parameters each one takes
// is fixed:
//   Pair<t,r>        : t -> r -> t*r
//   Tt, Ff           : B
//   Zero             : N
//   Succ             : N -> N
//   Nil<t>           : L(t)
//   Cons<t>          : t -> L(t) -> L(t)
//   Split<r,s,t>     : r*s -> (r -> s -> t) -> t
//   Cases<t>         : B -> t -> t -> t
//   RecNat<t>        : N -> t -> (N -> t -> t) -> t
//   RecList<r,t>     : L(r) -> t -> (r -> L(r) -> t -> t) -> t
enum class ConstTag {
  kPair,
  kTt,
  kFf,
  kZero,
  kSucc,
  kNil,
  kCons,
  kSplit,
  kCases,
  kRecNat,
  kRecList,
};

std::size_t const_arity(ConstTag tag);
Type const_type(ConstTag tag, const std::vector<Type>& params);

// Typed lambda term. Every value is well-typed: the factories throw
// TypeError on ill-typed combinations, so type() is total.
class Term {
 public:
  static Term var(ObjVar v);
  static Term constant(ConstTag tag, std::vector<Type> params = {});
  static Term app(Term fun, Term arg);
  // Left-nested application f a1 ... an.
  static Term apps(Term fun, std::initializer_list<Term> args);
  static Term lam(ObjVar bound, Term body);

  static Term tt() { return constant(ConstTag::kTt); }
  static Term ff() { return constant(ConstTag::kFf); }
  static Term zero() { return constant(ConstTag::kZero); }

  TermKind kind() const { return node_->kind; }
  // kVar: the variable. kLam: the bound variable.
  const ObjVar& variable() const { return node_->var; }
  ConstTag tag() const { return node_->tag; }
  const std::vector<Type>& params() const { return node_->params; }
  const Term& fun() const { return node_->kids[0]; }
  const Term& arg() const { return node_->kids[1]; }
  const Term& body() const { return node_->kids[0]; }

  const Type& type() const { return node_->ty; }
  const VarSet& free_vars() const { return node_->free; }
  bool occurs_free(const ObjVar& x) const { return node_->free.contains(x); }

  bool is_const(ConstTag t) const {
    return kind() == TermKind::kConst && tag() == t;
  }
  // Pointer identity; cheap pre-check before structural comparison.
  bool same_node(const Term& other) const { return node_ == other.node_; }

 private:
  struct Node {
    TermKind kind;
    ObjVar var;
    ConstTag tag = ConstTag::kTt;
    std::vector<Type> params;
    std::vector<Term> kids;
    Type ty;
    VarSet free;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

inline const Type& type_of(const Term& t) { return t.type(); }

// Capture-avoiding substitution t[x := s]. Bound variables of t that would
// capture a free variable of s are renamed with indices drawn from supply.
Term subst_term(const Term& t, const ObjVar& x, const Term& s,
                NameSupply& supply);

// Equality up to consistent renaming of bound variables.
bool alpha_eq(const Term& a, const Term& b);

// Nameless rendering: bound variables become binder positions, free
// variables keep their identity. alpha_eq(a, b) iff the keys agree.
std::string canonical_key(const Term& t);

namespace detail {
// Binder-aware primitives shared with formula comparison. Each stack holds
// the enclosing binders, innermost last.
using BinderStack = std::vector<const ObjVar*>;
long binder_position(const BinderStack& stack, const ObjVar& v);
bool alpha_eq_under(const Term& a, const Term& b, BinderStack& sa,
                    BinderStack& sb);
void append_key(const Term& t, BinderStack& stack, std::string& out);
}  // namespace detail

// Moves supply past every variable index occurring in t, free or bound.
void note_indices(const Term& t, NameSupply& supply);

// Number of nodes; constants and variables count one.
std::size_t term_size(const Term& t);

}  // namespace natded

#endif  // NATDED_TERM_H_
