#ifndef NATDED_FORMULA_H_
#define NATDED_FORMULA_H_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "natded/term.h"
#include "natded/types.h"

namespace natded {

// The four arithmetics. Languages: NA has atoms, ->, /\, forall; MA adds
// bot; HA and PA add \/ and exists. Theories are ordered NA <= MA and
// NA <= HA <= PA; MA and HA are incomparable.
enum class TheoryId { kNA, kMA, kHA, kPA };

std::string_view theory_name(TheoryId th);
std::optional<TheoryId> parse_theory(std::string_view name);
bool theory_leq(TheoryId a, TheoryId b);
// Least upper bound. Throws TheoryError for MA joined with HA or PA, since
// no theory contains both bot and the strong connectives.
TheoryId theory_join(TheoryId a, TheoryId b);

enum class FormulaKind { kBot, kAtom, kImp, kAnd, kAll, kOr, kEx };

class Formula {
 public:
  static Formula bot();
  // Throws TypeError unless t : B.
  static Formula atom(Term t);
  static Formula imp(Formula prem, Formula concl);
  static Formula conj(Formula left, Formula right);
  static Formula all(ObjVar bound, Formula body);
  static Formula disj(Formula left, Formula right);
  static Formula ex(ObjVar bound, Formula body);

  // T := atom(tt), F := atom(ff), ~A := A -> F.
  static Formula truth();
  static Formula falsity();
  static Formula neg(Formula a);
  // a1 -> a2 -> ... -> concl
  static Formula imps(std::initializer_list<Formula> prems, Formula concl);

  FormulaKind kind() const { return node_->kind; }
  const Term& term() const { return node_->atom; }
  const ObjVar& bound() const { return node_->bound; }
  // kImp: premise/conclusion. kAnd, kOr: left/right. Binders: body = left.
  const Formula& left() const { return node_->kids[0]; }
  const Formula& right() const { return node_->kids[1]; }
  const Formula& body() const { return node_->kids[0]; }

  const VarSet& free_vars() const { return node_->free; }
  bool occurs_free(const ObjVar& x) const { return node_->free.contains(x); }
  bool has_bot() const { return node_->has_bot; }
  bool has_strong() const { return node_->has_strong; }
  // Number of formula nodes; atoms count one regardless of their term.
  std::size_t size() const { return node_->size; }

  bool is(FormulaKind k) const { return kind() == k; }
  bool is_truth() const;
  bool is_falsity() const;
  bool same_node(const Formula& other) const { return node_ == other.node_; }

 private:
  struct Node {
    FormulaKind kind;
    Term atom;
    ObjVar bound;
    std::vector<Formula> kids;
    VarSet free;
    bool has_bot = false;
    bool has_strong = false;
    std::size_t size = 1;
  };
  explicit Formula(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}
  static Formula binary(FormulaKind kind, Formula a, Formula b);
  static Formula binder(FormulaKind kind, ObjVar x, Formula body);

  std::shared_ptr<const Node> node_;
};

// Alpha-equivalence; formulas are compared this way everywhere.
bool alpha_eq(const Formula& a, const Formula& b);
std::string canonical_key(const Formula& a);

bool in_language(const Formula& a, TheoryId th);
// Least theory whose language contains a. Throws LanguageError when a
// mixes bot with \/ or exists.
TheoryId language_of(const Formula& a);

// A^S: every bot replaced by S, binders renamed where they would capture a
// free variable of S. Throws LanguageError if a contains \/ or exists.
Formula subst_bot(const Formula& a, const Formula& s, NameSupply& supply);
// A^F, the instance used throughout the class machinery.
Formula subst_bot_false(const Formula& a);

// Capture-avoiding a[x := t]. Throws TypeError on a type mismatch.
Formula subst_formula_var(const Formula& a, const ObjVar& x, const Term& t,
                          NameSupply& supply);

// Goedel-Gentzen negative translation. Throws LanguageError on bot.
Formula gg_translate(const Formula& a);

Formula weak_or(const Formula& a, const Formula& b);
Formula weak_exists(const ObjVar& x, const Formula& a);
Formula weak_and(const Formula& a, const Formula& b);

void note_indices(const Formula& a, NameSupply& supply);
// A supply that never reissues an index used anywhere in the given formulas.
NameSupply supply_after(std::initializer_list<const Formula*> formulas);

}  // namespace natded

#endif  // NATDED_FORMULA_H_
