#include "natded/formula.h"

#include "natded/error.h"

namespace natded {

std::string_view theory_name(TheoryId th) {
  switch (th) {
    case TheoryId::kNA:
      return "NA";
    case TheoryId::kMA:
      return "MA";
    case TheoryId::kHA:
      return "HA";
    case TheoryId::kPA:
      return "PA";
  }
  return "?";
}

std::optional<TheoryId> parse_theory(std::string_view name) {
  if (name == "NA") return TheoryId::kNA;
  if (name == "MA") return TheoryId::kMA;
  if (name == "HA") return TheoryId::kHA;
  if (name == "PA") return TheoryId::kPA;
  return std::nullopt;
}

bool theory_leq(TheoryId a, TheoryId b) {
  if (a == b || a == TheoryId::kNA) return true;
  return a == TheoryId::kHA && b == TheoryId::kPA;
}

TheoryId theory_join(TheoryId a, TheoryId b) {
  if (theory_leq(a, b)) return b;
  if (theory_leq(b, a)) return a;
  throw TheoryError("no theory contains both " + std::string(theory_name(a)) +
                    " and " + std::string(theory_name(b)) + " content");
}

Formula Formula::bot() {
  static const Formula kBot(std::make_shared<const Node>(
      Node{FormulaKind::kBot, Term::tt(), ObjVar{}, {}, {}, true, false, 1}));
  return kBot;
}

Formula Formula::atom(Term t) {
  if (!t.type().is_bool()) {
    throw TypeError("atom of non-boolean term of type " +
                    t.type().to_string());
  }
  VarSet free = t.free_vars();
  return Formula(std::make_shared<const Node>(Node{
      FormulaKind::kAtom, std::move(t), ObjVar{}, {}, std::move(free), false,
      false, 1}));
}

Formula Formula::binary(FormulaKind kind, Formula a, Formula b) {
  VarSet free = a.free_vars();
  free.merge(b.free_vars());
  bool bot = a.has_bot() || b.has_bot();
  bool strong = kind == FormulaKind::kOr || a.has_strong() || b.has_strong();
  std::size_t size = 1 + a.size() + b.size();
  return Formula(std::make_shared<const Node>(
      Node{kind, Term::tt(), ObjVar{}, {std::move(a), std::move(b)},
           std::move(free), bot, strong, size}));
}

Formula Formula::binder(FormulaKind kind, ObjVar x, Formula body) {
  VarSet free = body.free_vars();
  free.erase(x);
  bool bot = body.has_bot();
  bool strong = kind == FormulaKind::kEx || body.has_strong();
  std::size_t size = 1 + body.size();
  return Formula(std::make_shared<const Node>(
      Node{kind, Term::tt(), std::move(x), {std::move(body)}, std::move(free),
           bot, strong, size}));
}

Formula Formula::imp(Formula prem, Formula concl) {
  return binary(FormulaKind::kImp, std::move(prem), std::move(concl));
}
Formula Formula::conj(Formula left, Formula right) {
  return binary(FormulaKind::kAnd, std::move(left), std::move(right));
}
Formula Formula::disj(Formula left, Formula right) {
  return binary(FormulaKind::kOr, std::move(left), std::move(right));
}
Formula Formula::all(ObjVar bound, Formula body) {
  return binder(FormulaKind::kAll, std::move(bound), std::move(body));
}
Formula Formula::ex(ObjVar bound, Formula body) {
  return binder(FormulaKind::kEx, std::move(bound), std::move(body));
}

Formula Formula::truth() {
  static const Formula kTruth = atom(Term::tt());
  return kTruth;
}
Formula Formula::falsity() {
  static const Formula kFalsity = atom(Term::ff());
  return kFalsity;
}
Formula Formula::neg(Formula a) { return imp(std::move(a), falsity()); }

Formula Formula::imps(std::initializer_list<Formula> prems, Formula concl) {
  std::vector<Formula> v(prems);
  for (std::size_t i = v.size(); i-- > 0;) concl = imp(v[i], concl);
  return concl;
}

bool Formula::is_truth() const {
  return kind() == FormulaKind::kAtom && term().is_const(ConstTag::kTt);
}
bool Formula::is_falsity() const {
  return kind() == FormulaKind::kAtom && term().is_const(ConstTag::kFf);
}

namespace {

using detail::BinderStack;

bool alpha_impl(const Formula& a, const Formula& b, BinderStack& sa,
                BinderStack& sb) {
  if (a.kind() != b.kind()) return false;
  if (sa.empty() && a.same_node(b)) return true;
  switch (a.kind()) {
    case FormulaKind::kBot:
      return true;
    case FormulaKind::kAtom:
      return detail::alpha_eq_under(a.term(), b.term(), sa, sb);
    case FormulaKind::kImp:
    case FormulaKind::kAnd:
    case FormulaKind::kOr:
      return alpha_impl(a.left(), b.left(), sa, sb) &&
             alpha_impl(a.right(), b.right(), sa, sb);
    case FormulaKind::kAll:
    case FormulaKind::kEx: {
      if (!(a.bound().ty == b.bound().ty)) return false;
      sa.push_back(&a.bound());
      sb.push_back(&b.bound());
      bool eq = alpha_impl(a.body(), b.body(), sa, sb);
      sa.pop_back();
      sb.pop_back();
      return eq;
    }
  }
  return false;
}

void key_impl(const Formula& a, BinderStack& stack, std::string& out) {
  switch (a.kind()) {
    case FormulaKind::kBot:
      out += "_|_ ";
      return;
    case FormulaKind::kAtom:
      out += "(at ";
      detail::append_key(a.term(), stack, out);
      out += ") ";
      return;
    case FormulaKind::kImp:
    case FormulaKind::kAnd:
    case FormulaKind::kOr:
      out += a.is(FormulaKind::kImp)   ? "(-> "
             : a.is(FormulaKind::kAnd) ? "(& "
                                       : "(| ";
      key_impl(a.left(), stack, out);
      key_impl(a.right(), stack, out);
      out += ") ";
      return;
    case FormulaKind::kAll:
    case FormulaKind::kEx:
      out += a.is(FormulaKind::kAll) ? "(A " : "(E ";
      out += a.bound().ty.to_string() + " ";
      stack.push_back(&a.bound());
      key_impl(a.body(), stack, out);
      stack.pop_back();
      out += ") ";
      return;
  }
}

Formula rebuild_binary(const Formula& a, Formula l, Formula r) {
  if (l.same_node(a.left()) && r.same_node(a.right())) return a;
  switch (a.kind()) {
    case FormulaKind::kImp:
      return Formula::imp(std::move(l), std::move(r));
    case FormulaKind::kAnd:
      return Formula::conj(std::move(l), std::move(r));
    default:
      return Formula::disj(std::move(l), std::move(r));
  }
}

Formula rebuild_binder(const Formula& a, ObjVar x, Formula body) {
  return a.is(FormulaKind::kAll) ? Formula::all(std::move(x), std::move(body))
                                 : Formula::ex(std::move(x), std::move(body));
}

Formula subst_var_impl(const Formula& a, const ObjVar& x, const Term& t,
                       NameSupply& supply) {
  if (!a.occurs_free(x)) return a;
  switch (a.kind()) {
    case FormulaKind::kBot:
      return a;
    case FormulaKind::kAtom:
      return Formula::atom(subst_term(a.term(), x, t, supply));
    case FormulaKind::kImp:
    case FormulaKind::kAnd:
    case FormulaKind::kOr:
      return rebuild_binary(a, subst_var_impl(a.left(), x, t, supply),
                            subst_var_impl(a.right(), x, t, supply));
    case FormulaKind::kAll:
    case FormulaKind::kEx: {
      ObjVar y = a.bound();
      Formula body = a.body();
      if (t.occurs_free(y)) {
        ObjVar fresh =
            fresh_avoiding(y, supply, {&t.free_vars(), &body.free_vars()});
        body = subst_var_impl(body, y, Term::var(fresh), supply);
        y = fresh;
      }
      return rebuild_binder(a, y, subst_var_impl(body, x, t, supply));
    }
  }
  return a;
}

Formula subst_bot_impl(const Formula& a, const Formula& s,
                       NameSupply& supply) {
  if (!a.has_bot()) return a;
  switch (a.kind()) {
    case FormulaKind::kBot:
      return s;
    case FormulaKind::kAtom:
      return a;
    case FormulaKind::kImp:
    case FormulaKind::kAnd:
      return rebuild_binary(a, subst_bot_impl(a.left(), s, supply),
                            subst_bot_impl(a.right(), s, supply));
    case FormulaKind::kAll: {
      ObjVar x = a.bound();
      Formula body = a.body();
      if (s.occurs_free(x)) {
        ObjVar fresh =
            fresh_avoiding(x, supply, {&s.free_vars(), &body.free_vars()});
        body = subst_var_impl(body, x, Term::var(fresh), supply);
        x = fresh;
      }
      return Formula::all(x, subst_bot_impl(body, s, supply));
    }
    case FormulaKind::kOr:
    case FormulaKind::kEx:
      break;
  }
  throw LanguageError("bot substitution into a formula with \\/ or exists");
}

void note_impl(const Formula& a, NameSupply& supply) {
  switch (a.kind()) {
    case FormulaKind::kBot:
      return;
    case FormulaKind::kAtom:
      note_indices(a.term(), supply);
      return;
    case FormulaKind::kImp:
    case FormulaKind::kAnd:
    case FormulaKind::kOr:
      note_impl(a.left(), supply);
      note_impl(a.right(), supply);
      return;
    case FormulaKind::kAll:
    case FormulaKind::kEx:
      supply.reserve_above(a.bound().index);
      note_impl(a.body(), supply);
      return;
  }
}

}  // namespace

bool alpha_eq(const Formula& a, const Formula& b) {
  BinderStack sa, sb;
  return alpha_impl(a, b, sa, sb);
}

std::string canonical_key(const Formula& a) {
  BinderStack stack;
  std::string out;
  key_impl(a, stack, out);
  return out;
}

bool in_language(const Formula& a, TheoryId th) {
  switch (th) {
    case TheoryId::kNA:
      return !a.has_bot() && !a.has_strong();
    case TheoryId::kMA:
      return !a.has_strong();
    case TheoryId::kHA:
    case TheoryId::kPA:
      return !a.has_bot();
  }
  return false;
}

TheoryId language_of(const Formula& a) {
  if (a.has_bot() && a.has_strong()) {
    throw LanguageError("formula mixes bot with \\/ or exists");
  }
  if (a.has_bot()) return TheoryId::kMA;
  if (a.has_strong()) return TheoryId::kHA;
  return TheoryId::kNA;
}

Formula subst_bot(const Formula& a, const Formula& s, NameSupply& supply) {
  if (a.has_strong()) {
    throw LanguageError("bot substitution into a formula with \\/ or exists");
  }
  return subst_bot_impl(a, s, supply);
}

Formula subst_bot_false(const Formula& a) {
  // F is closed, so no binder is ever renamed and the supply goes unused.
  NameSupply unused;
  return subst_bot(a, Formula::falsity(), unused);
}

Formula subst_formula_var(const Formula& a, const ObjVar& x, const Term& t,
                          NameSupply& supply) {
  if (!(t.type() == x.ty)) {
    throw TypeError("substituting a term of type " + t.type().to_string() +
                    " for a variable of type " + x.ty.to_string());
  }
  return subst_var_impl(a, x, t, supply);
}

Formula gg_translate(const Formula& a) {
  switch (a.kind()) {
    case FormulaKind::kBot:
      throw LanguageError("negative translation is undefined on bot");
    case FormulaKind::kAtom:
      return a.is_falsity() ? a : Formula::neg(Formula::neg(a));
    case FormulaKind::kImp:
      return Formula::imp(gg_translate(a.left()), gg_translate(a.right()));
    case FormulaKind::kAnd:
      return Formula::conj(gg_translate(a.left()), gg_translate(a.right()));
    case FormulaKind::kAll:
      return Formula::all(a.bound(), gg_translate(a.body()));
    case FormulaKind::kOr:
      return weak_or(gg_translate(a.left()), gg_translate(a.right()));
    case FormulaKind::kEx:
      return weak_exists(a.bound(), gg_translate(a.body()));
  }
  return a;
}

Formula weak_or(const Formula& a, const Formula& b) {
  return Formula::neg(Formula::conj(Formula::neg(a), Formula::neg(b)));
}

Formula weak_exists(const ObjVar& x, const Formula& a) {
  return Formula::neg(Formula::all(x, Formula::neg(a)));
}

Formula weak_and(const Formula& a, const Formula& b) {
  return Formula::neg(Formula::imp(a, Formula::neg(b)));
}

void note_indices(const Formula& a, NameSupply& supply) {
  note_impl(a, supply);
}

NameSupply supply_after(std::initializer_list<const Formula*> formulas) {
  NameSupply supply;
  for (const Formula* f : formulas) note_indices(*f, supply);
  return supply;
}

}  // namespace natded
