#include "natded/proof.h"

#include <unordered_set>

#include "natded/error.h"

namespace natded {

TheoryId axiom_theory(AxiomKind kind) {
  switch (kind) {
    case AxiomKind::kTruth:
    case AxiomKind::kBoolCases:
    case AxiomKind::kIndNat:
    case AxiomKind::kIndList:
      return TheoryId::kNA;
    case AxiomKind::kBotPlus:
      return TheoryId::kMA;
    case AxiomKind::kOrIntroL:
    case AxiomKind::kOrIntroR:
    case AxiomKind::kOrElim:
    case AxiomKind::kExIntro:
    case AxiomKind::kExElim:
      return TheoryId::kHA;
    case AxiomKind::kLem:
      return TheoryId::kPA;
  }
  return TheoryId::kPA;
}

namespace {

constexpr std::pair<AxiomKind, std::string_view> kAxiomNames[] = {
    {AxiomKind::kTruth, "truth"},        {AxiomKind::kBoolCases, "bool-cases"},
    {AxiomKind::kIndNat, "ind-nat"},     {AxiomKind::kIndList, "ind-list"},
    {AxiomKind::kBotPlus, "botplus"},    {AxiomKind::kOrIntroL, "or-intro-l"},
    {AxiomKind::kOrIntroR, "or-intro-r"}, {AxiomKind::kOrElim, "or-elim"},
    {AxiomKind::kExIntro, "ex-intro"},   {AxiomKind::kExElim, "ex-elim"},
    {AxiomKind::kLem, "lem"},
};

std::string describe(const AssumptionVar& u) {
  return u.name + "_" + std::to_string(u.index);
}

void merge_assumptions(AssumptionMap& into, const AssumptionMap& from) {
  for (const auto& [key, u] : from) {
    auto [it, inserted] = into.emplace(key, u);
    if (!inserted && !alpha_eq(it->second.formula, u.formula)) {
      throw ShapeError("assumption variable " + describe(u) +
                       " is used at two different formulas");
    }
  }
}

TheoryId join_all(TheoryId base, const std::vector<Proof>& kids) {
  for (const Proof& k : kids) base = theory_join(base, k.min_theory());
  return base;
}

NameSupply supply_for(const AxiomId& id) {
  NameSupply supply;
  for (const ObjVar& v : id.vars) supply.reserve_above(v.index);
  for (const Formula& f : id.formulas) note_indices(f, supply);
  if (id.term) note_indices(*id.term, supply);
  return supply;
}

void expect_params(const AxiomId& id, std::size_t vars, std::size_t formulas,
                   bool term) {
  if (id.vars.size() != vars || id.formulas.size() != formulas ||
      id.term.has_value() != term) {
    throw ShapeError("wrong parameters for axiom " +
                     std::string(axiom_name(id.kind)));
  }
}

}  // namespace

std::string_view axiom_name(AxiomKind kind) {
  for (const auto& [k, name] : kAxiomNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<AxiomKind> parse_axiom_name(std::string_view name) {
  for (const auto& [k, n] : kAxiomNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::string_view rule_name(Rule rule) {
  switch (rule) {
    case Rule::kAssume:
      return "assume";
    case Rule::kAxiom:
      return "axiom";
    case Rule::kAndIntro:
      return "pair-pf";
    case Rule::kProj:
      return "proj";
    case Rule::kImpElim:
      return "app-pf";
    case Rule::kImpIntro:
      return "lam-pf";
    case Rule::kAllElim:
      return "inst";
    case Rule::kAllIntro:
      return "gen";
  }
  return "?";
}

AxiomId AxiomId::truth() { return {AxiomKind::kTruth, {}, {}, std::nullopt}; }
AxiomId AxiomId::bool_cases(ObjVar b, Formula a) {
  return {AxiomKind::kBoolCases, {std::move(b)}, {std::move(a)}, std::nullopt};
}
AxiomId AxiomId::ind_nat(ObjVar n, Formula a) {
  return {AxiomKind::kIndNat, {std::move(n)}, {std::move(a)}, std::nullopt};
}
AxiomId AxiomId::ind_list(ObjVar l, ObjVar elem, Formula a) {
  return {AxiomKind::kIndList,
          {std::move(l), std::move(elem)},
          {std::move(a)},
          std::nullopt};
}
AxiomId AxiomId::bot_plus() {
  return {AxiomKind::kBotPlus, {}, {}, std::nullopt};
}
AxiomId AxiomId::or_intro_l(Formula a, Formula b) {
  return {AxiomKind::kOrIntroL, {}, {std::move(a), std::move(b)}, std::nullopt};
}
AxiomId AxiomId::or_intro_r(Formula a, Formula b) {
  return {AxiomKind::kOrIntroR, {}, {std::move(a), std::move(b)}, std::nullopt};
}
AxiomId AxiomId::or_elim(Formula a, Formula b, Formula c) {
  return {AxiomKind::kOrElim,
          {},
          {std::move(a), std::move(b), std::move(c)},
          std::nullopt};
}
AxiomId AxiomId::ex_intro(Formula a, ObjVar x, Term t) {
  return {AxiomKind::kExIntro, {std::move(x)}, {std::move(a)}, std::move(t)};
}
AxiomId AxiomId::ex_elim(Formula a, ObjVar x, Formula c) {
  return {AxiomKind::kExElim,
          {std::move(x)},
          {std::move(a), std::move(c)},
          std::nullopt};
}
AxiomId AxiomId::lem(Formula a) {
  return {AxiomKind::kLem, {}, {std::move(a)}, std::nullopt};
}

Formula axiom_formula(const AxiomId& id) {
  using F = Formula;
  NameSupply supply = supply_for(id);
  auto at = [&](const Formula& a, const ObjVar& x, const Term& t) {
    return subst_formula_var(a, x, t, supply);
  };
  switch (id.kind) {
    case AxiomKind::kTruth:
      expect_params(id, 0, 0, false);
      return F::truth();
    case AxiomKind::kBotPlus:
      expect_params(id, 0, 0, false);
      return F::imp(F::falsity(), F::bot());
    case AxiomKind::kBoolCases: {
      expect_params(id, 1, 1, false);
      const ObjVar& b = id.vars[0];
      const Formula& a = id.formulas[0];
      if (!b.ty.is_bool()) throw TypeError("case variable must have type B");
      return F::all(b, F::imps({at(a, b, Term::tt()), at(a, b, Term::ff())}, a));
    }
    case AxiomKind::kIndNat: {
      expect_params(id, 1, 1, false);
      const ObjVar& n = id.vars[0];
      const Formula& a = id.formulas[0];
      if (!(n.ty == Type::nat())) {
        throw TypeError("induction variable must have type N");
      }
      Term succ_n = Term::app(Term::constant(ConstTag::kSucc), Term::var(n));
      Formula step = F::all(n, F::imp(a, at(a, n, succ_n)));
      return F::all(n, F::imps({at(a, n, Term::zero()), step}, a));
    }
    case AxiomKind::kIndList: {
      expect_params(id, 2, 1, false);
      const ObjVar& l = id.vars[0];
      const ObjVar& x = id.vars[1];
      const Formula& a = id.formulas[0];
      if (l.ty.kind() != TypeKind::kList) {
        throw TypeError("list induction variable must have a list type");
      }
      const Type& elem = l.ty.arg(0);
      if (!(x.ty == elem)) {
        throw TypeError("element variable must have the list's element type");
      }
      if (a.occurs_free(x)) {
        throw EigenvariableError(
            "element variable of list induction is free in the formula");
      }
      Term nil = Term::constant(ConstTag::kNil, {elem});
      Term cons = Term::apps(Term::constant(ConstTag::kCons, {elem}),
                             {Term::var(x), Term::var(l)});
      Formula step = F::all(x, F::all(l, F::imp(a, at(a, l, cons))));
      return F::all(l, F::imps({at(a, l, nil), step}, a));
    }
    case AxiomKind::kOrIntroL:
      expect_params(id, 0, 2, false);
      return F::imp(id.formulas[0], F::disj(id.formulas[0], id.formulas[1]));
    case AxiomKind::kOrIntroR:
      expect_params(id, 0, 2, false);
      return F::imp(id.formulas[1], F::disj(id.formulas[0], id.formulas[1]));
    case AxiomKind::kOrElim: {
      expect_params(id, 0, 3, false);
      const Formula& a = id.formulas[0];
      const Formula& b = id.formulas[1];
      const Formula& c = id.formulas[2];
      return F::imps({F::disj(a, b), F::imp(a, c), F::imp(b, c)}, c);
    }
    case AxiomKind::kExIntro: {
      expect_params(id, 1, 1, true);
      const ObjVar& x = id.vars[0];
      const Formula& a = id.formulas[0];
      if (!(id.term->type() == x.ty)) {
        throw TypeError("existential witness has type " +
                        id.term->type().to_string() + ", expected " +
                        x.ty.to_string());
      }
      return F::imp(at(a, x, *id.term), F::ex(x, a));
    }
    case AxiomKind::kExElim: {
      expect_params(id, 1, 2, false);
      const ObjVar& x = id.vars[0];
      const Formula& a = id.formulas[0];
      const Formula& c = id.formulas[1];
      if (c.occurs_free(x)) {
        throw EigenvariableError(
            "existential elimination: bound variable is free in the goal");
      }
      return F::imps({F::ex(x, a), F::all(x, F::imp(a, c))}, c);
    }
    case AxiomKind::kLem:
      expect_params(id, 0, 1, false);
      return F::disj(id.formulas[0], F::neg(id.formulas[0]));
  }
  throw ShapeError("unknown axiom");
}

Proof Proof::assume(AssumptionVar u) {
  TheoryId th = language_of(u.formula);
  Formula concl = u.formula;
  AssumptionMap free;
  free.emplace(key_of(u), u);
  return Proof(std::make_shared<const Node>(
      Node{Rule::kAssume, {}, std::move(u), std::nullopt, std::nullopt,
           std::nullopt, 0, std::move(concl), std::move(free), th}));
}

Proof Proof::axiom(const AxiomId& id, TheoryId th) {
  if (!theory_leq(axiom_theory(id.kind), th)) {
    throw TheoryError("axiom " + std::string(axiom_name(id.kind)) +
                      " is not available in " + std::string(theory_name(th)));
  }
  Formula concl = axiom_formula(id);
  TheoryId lang = language_of(concl);
  if (!theory_leq(lang, th)) {
    throw LanguageError("axiom instance is not a formula of " +
                        std::string(theory_name(th)));
  }
  TheoryId least = theory_join(axiom_theory(id.kind), lang);
  return Proof(std::make_shared<const Node>(
      Node{Rule::kAxiom, {}, std::nullopt, id, std::nullopt, std::nullopt, 0,
           std::move(concl), {}, least}));
}

Proof Proof::and_intro(Proof left, Proof right) {
  Formula concl = Formula::conj(left.conclusion(), right.conclusion());
  AssumptionMap free = left.free_assumptions();
  merge_assumptions(free, right.free_assumptions());
  std::vector<Proof> kids{std::move(left), std::move(right)};
  TheoryId th = join_all(language_of(concl), kids);
  return Proof(std::make_shared<const Node>(
      Node{Rule::kAndIntro, std::move(kids), std::nullopt, std::nullopt,
           std::nullopt, std::nullopt, 0, std::move(concl), std::move(free),
           th}));
}

Proof Proof::proj(int side, Proof m) {
  if (side != 0 && side != 1) throw ShapeError("projection side must be 0 or 1");
  if (!m.conclusion().is(FormulaKind::kAnd)) {
    throw ShapeError("projection from a proof that does not end in a conjunction");
  }
  Formula concl = side == 0 ? m.conclusion().left() : m.conclusion().right();
  AssumptionMap free = m.free_assumptions();
  TheoryId th = m.min_theory();
  return Proof(std::make_shared<const Node>(
      Node{Rule::kProj, {std::move(m)}, std::nullopt, std::nullopt,
           std::nullopt, std::nullopt, side, std::move(concl), std::move(free),
           th}));
}

Proof Proof::imp_elim(Proof fun, Proof arg) {
  const Formula& f = fun.conclusion();
  if (!f.is(FormulaKind::kImp)) {
    throw ShapeError("modus ponens with a major premise that is not an implication");
  }
  if (!alpha_eq(f.left(), arg.conclusion())) {
    throw ShapeError("modus ponens: minor premise does not match the antecedent");
  }
  Formula concl = f.right();
  AssumptionMap free = fun.free_assumptions();
  merge_assumptions(free, arg.free_assumptions());
  std::vector<Proof> kids{std::move(fun), std::move(arg)};
  TheoryId th = join_all(TheoryId::kNA, kids);
  return Proof(std::make_shared<const Node>(
      Node{Rule::kImpElim, std::move(kids), std::nullopt, std::nullopt,
           std::nullopt, std::nullopt, 0, std::move(concl), std::move(free),
           th}));
}

Proof Proof::imp_intro(AssumptionVar u, Proof body) {
  AssumptionMap free = body.free_assumptions();
  auto it = free.find(key_of(u));
  if (it != free.end()) {
    if (!alpha_eq(it->second.formula, u.formula)) {
      throw ShapeError("discharged assumption " + describe(u) +
                       " occurs at a different formula");
    }
    free.erase(it);
  }
  Formula concl = Formula::imp(u.formula, body.conclusion());
  std::vector<Proof> kids{std::move(body)};
  TheoryId th = join_all(language_of(concl), kids);
  return Proof(std::make_shared<const Node>(
      Node{Rule::kImpIntro, std::move(kids), std::move(u), std::nullopt,
           std::nullopt, std::nullopt, 0, std::move(concl), std::move(free),
           th}));
}

Proof Proof::all_elim(Proof m, Term t, NameSupply& supply) {
  const Formula& f = m.conclusion();
  if (!f.is(FormulaKind::kAll)) {
    throw ShapeError("instantiation of a proof that does not end in a universal");
  }
  if (!(t.type() == f.bound().ty)) {
    throw TypeError("instantiating a variable of type " +
                    f.bound().ty.to_string() + " with a term of type " +
                    t.type().to_string());
  }
  Formula concl = subst_formula_var(f.body(), f.bound(), t, supply);
  AssumptionMap free = m.free_assumptions();
  TheoryId th = m.min_theory();
  return Proof(std::make_shared<const Node>(
      Node{Rule::kAllElim, {std::move(m)}, std::nullopt, std::nullopt,
           std::move(t), std::nullopt, 0, std::move(concl), std::move(free),
           th}));
}

Proof Proof::all_intro(ObjVar x, Proof body) {
  for (const auto& [key, u] : body.free_assumptions()) {
    if (u.formula.occurs_free(x)) {
      throw EigenvariableError("variable " + x.name + "_" +
                               std::to_string(x.index) +
                               " is free in open assumption " + describe(u));
    }
  }
  Formula concl = Formula::all(x, body.conclusion());
  AssumptionMap free = body.free_assumptions();
  TheoryId th = body.min_theory();
  return Proof(std::make_shared<const Node>(
      Node{Rule::kAllIntro, {std::move(body)}, std::nullopt, std::nullopt,
           std::nullopt, std::move(x), 0, std::move(concl), std::move(free),
           th}));
}

Proof build(Rule rule, std::span<const Proof> premises,
            const RuleParams& params, NameSupply& supply) {
  auto need = [&](std::size_t n) {
    if (premises.size() != n) {
      throw ShapeError("rule " + std::string(rule_name(rule)) + " expects " +
                       std::to_string(n) + " premises");
    }
  };
  auto missing = [&](const char* what) {
    return ShapeError("rule " + std::string(rule_name(rule)) + " needs " +
                      what);
  };
  switch (rule) {
    case Rule::kAssume:
      need(0);
      if (!params.assumption) throw missing("an assumption variable");
      return Proof::assume(*params.assumption);
    case Rule::kAxiom:
      need(0);
      if (!params.axiom) throw missing("an axiom");
      return Proof::axiom(*params.axiom, params.theory.value_or(TheoryId::kPA));
    case Rule::kAndIntro:
      need(2);
      return Proof::and_intro(premises[0], premises[1]);
    case Rule::kProj:
      need(1);
      return Proof::proj(params.side, premises[0]);
    case Rule::kImpElim:
      need(2);
      return Proof::imp_elim(premises[0], premises[1]);
    case Rule::kImpIntro:
      need(1);
      if (!params.assumption) throw missing("an assumption variable");
      return Proof::imp_intro(*params.assumption, premises[0]);
    case Rule::kAllElim:
      need(1);
      if (!params.term) throw missing("a term");
      return Proof::all_elim(premises[0], *params.term, supply);
    case Rule::kAllIntro:
      need(1);
      if (!params.var) throw missing("a variable");
      return Proof::all_intro(*params.var, premises[0]);
  }
  throw ShapeError("unknown rule");
}

Judgement inspect(const Proof& m) {
  Judgement j{m.min_theory(), {}, m.conclusion()};
  for (const auto& [key, u] : m.free_assumptions()) j.assumptions.push_back(u);
  return j;
}

namespace {

void note_proof(const Proof& m, NameSupply& supply,
                std::unordered_set<const void*>& seen) {
  if (!seen.insert(m.identity()).second) return;
  note_indices(m.conclusion(), supply);
  switch (m.rule()) {
    case Rule::kAssume:
    case Rule::kImpIntro:
      supply.reserve_above(m.assumption().index);
      note_indices(m.assumption().formula, supply);
      break;
    case Rule::kAxiom:
      for (const ObjVar& v : m.axiom_id().vars) supply.reserve_above(v.index);
      for (const Formula& f : m.axiom_id().formulas) note_indices(f, supply);
      if (m.axiom_id().term) note_indices(*m.axiom_id().term, supply);
      break;
    case Rule::kAllElim:
      note_indices(m.term(), supply);
      break;
    case Rule::kAllIntro:
      supply.reserve_above(m.eigenvariable().index);
      break;
    default:
      break;
  }
  for (const Proof& k : m.premises()) note_proof(k, supply, seen);
}

}  // namespace

void note_indices(const Proof& m, NameSupply& supply) {
  std::unordered_set<const void*> seen;
  note_proof(m, supply, seen);
}

NameSupply supply_after(const Proof& m) {
  NameSupply supply;
  note_indices(m, supply);
  return supply;
}

}  // namespace natded
