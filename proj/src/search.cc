#include "natded/search.h"

#include <functional>
#include <stdexcept>
#include <vector>

#include "natded/derived.h"
#include "natded/error.h"

namespace natded {
namespace {

using F = Formula;

struct Ctx {
  std::vector<Proof> hyps;
  std::vector<Term> eigen;
  bool reductio = false;
};

// Whether eliminations on h can end in goal. Under a quantifier only the
// outer connective is compared, since the instance is not known yet.
bool reaches(const F& h, const F& goal, bool loose) {
  if (loose ? h.kind() == goal.kind() : alpha_eq(h, goal)) return true;
  if (h.is_falsity()) return true;
  switch (h.kind()) {
    case FormulaKind::kImp:
      return reaches(h.right(), goal, loose);
    case FormulaKind::kAnd:
      return reaches(h.left(), goal, loose) || reaches(h.right(), goal, loose);
    case FormulaKind::kAll:
      return reaches(h.body(), goal, true);
    default:
      return false;
  }
}

void collect_terms(const Term& t, const VarSet& bound, std::vector<Term>& out) {
  bool closed_under = true;
  for (const ObjVar& v : t.free_vars()) {
    if (bound.contains(v)) closed_under = false;
  }
  if (closed_under) {
    bool seen = false;
    for (const Term& u : out) seen = seen || alpha_eq(u, t);
    if (!seen) out.push_back(t);
  }
  if (t.kind() == TermKind::kApp) {
    collect_terms(t.fun(), bound, out);
    collect_terms(t.arg(), bound, out);
  }
}

void collect_terms(const F& a, VarSet bound, std::vector<Term>& out) {
  switch (a.kind()) {
    case FormulaKind::kBot:
      return;
    case FormulaKind::kAtom:
      return collect_terms(a.term(), bound, out);
    case FormulaKind::kAll:
    case FormulaKind::kEx:
      bound.insert(a.bound());
      return collect_terms(a.body(), bound, out);
    default:
      collect_terms(a.left(), bound, out);
      collect_terms(a.right(), bound, out);
  }
}

class Searcher {
 public:
  Searcher(const F& root, TheoryId th, std::size_t budget)
      : th_(th), budget_(budget), supply_(supply_after({&root})) {
    pool_ = {Term::tt(), Term::ff(), Term::zero()};
    collect_terms(root, VarSet(), pool_);
  }

  std::optional<Proof> prove(const Ctx& ctx, const F& goal, std::size_t d) {
    if (d == 0 || budget_ == 0) return std::nullopt;
    --budget_;
    for (const Proof& h : ctx.hyps) {
      if (alpha_eq(h.conclusion(), goal)) return h;
    }
    switch (goal.kind()) {
      case FormulaKind::kImp: {
        AssumptionVar u{"u", supply_.draw(), goal.left()};
        Ctx inner = ctx;
        inner.hyps.push_back(Proof::assume(u));
        auto r = prove(inner, goal.right(), d - 1);
        if (!r) return std::nullopt;
        return Proof::imp_intro(u, *r);
      }
      case FormulaKind::kAnd: {
        auto l = prove(ctx, goal.left(), d - 1);
        if (!l) return std::nullopt;
        auto r = prove(ctx, goal.right(), d - 1);
        if (!r) return std::nullopt;
        return Proof::and_intro(*l, *r);
      }
      case FormulaKind::kAll: {
        ObjVar y = supply_.fresh(goal.bound());
        Ctx inner = ctx;
        inner.eigen.push_back(Term::var(y));
        auto r = prove(inner, instance(goal, Term::var(y)), d - 1);
        if (!r) return std::nullopt;
        return Proof::all_intro(y, *r);
      }
      default:
        break;
    }
    if (goal.is_truth()) return Proof::axiom(AxiomId::truth(), th_);
    if (auto r = strong_intro(ctx, goal, d)) return r;
    for (const Proof& h : ctx.hyps) {
      if (!reaches(h.conclusion(), goal, false)) continue;
      if (auto r = chain(ctx, h, goal, d)) return r;
    }
    if (auto r = strong_elim(ctx, goal, d)) return r;
    if (th_ == TheoryId::kPA && !ctx.reductio && d >= 2) return reductio(ctx, goal, d);
    return std::nullopt;
  }

 private:
  F instance(const F& binder, const Term& t) {
    return subst_formula_var(binder.body(), binder.bound(), t, supply_);
  }

  std::vector<Term> terms(const Ctx& ctx, const Type& ty) const {
    std::vector<Term> out;
    for (const auto* src : {&pool_, &ctx.eigen}) {
      for (const Term& t : *src) {
        if (t.type() == ty) out.push_back(t);
      }
    }
    return out;
  }

  Proof ax(const AxiomId& id) { return Proof::axiom(id, th_); }

  // Eliminations applied to p until its conclusion is the goal. Arguments of
  // implications are searched one level deeper.
  std::optional<Proof> chain(const Ctx& ctx, const Proof& p, const F& goal,
                             std::size_t d) {
    const F& h = p.conclusion();
    if (alpha_eq(h, goal)) return p;
    if (h.is_falsity()) return Proof::imp_elim(prove_efq(goal, th_), p);
    switch (h.kind()) {
      case FormulaKind::kImp: {
        if (!reaches(h.right(), goal, false)) return std::nullopt;
        auto a = prove(ctx, h.left(), d - 1);
        if (!a) return std::nullopt;
        return chain(ctx, Proof::imp_elim(p, *a), goal, d);
      }
      case FormulaKind::kAnd:
        for (int side : {0, 1}) {
          const F& part = side == 0 ? h.left() : h.right();
          if (!reaches(part, goal, false)) continue;
          if (auto r = chain(ctx, Proof::proj(side, p), goal, d)) return r;
        }
        return std::nullopt;
      case FormulaKind::kAll:
        for (const Term& t : terms(ctx, h.bound().ty)) {
          if (budget_ == 0) break;
          if (auto r = chain(ctx, Proof::all_elim(p, t, supply_), goal, d)) {
            return r;
          }
        }
        return std::nullopt;
      default:
        return std::nullopt;
    }
  }

  std::optional<Proof> strong_intro(const Ctx& ctx, const F& goal,
                                    std::size_t d) {
    if (goal.is(FormulaKind::kOr)) {
      const F& l = goal.left();
      const F& r = goal.right();
      if (auto p = prove(ctx, l, d - 1)) {
        return Proof::imp_elim(ax(AxiomId::or_intro_l(l, r)), *p);
      }
      if (auto p = prove(ctx, r, d - 1)) {
        return Proof::imp_elim(ax(AxiomId::or_intro_r(l, r)), *p);
      }
    }
    if (goal.is(FormulaKind::kEx)) {
      for (const Term& t : terms(ctx, goal.bound().ty)) {
        if (auto p = prove(ctx, instance(goal, t), d - 1)) {
          return Proof::imp_elim(
              ax(AxiomId::ex_intro(goal.body(), goal.bound(), t)), *p);
        }
      }
    }
    return std::nullopt;
  }

  // Case analysis on a disjunctive or existential hypothesis, which is
  // dropped from the context of the branches.
  std::optional<Proof> strong_elim(const Ctx& ctx, const F& goal,
                                   std::size_t d) {
    for (std::size_t i = 0; i < ctx.hyps.size(); ++i) {
      const Proof& h = ctx.hyps[i];
      const F& hf = h.conclusion();
      if (!hf.is(FormulaKind::kOr) && !hf.is(FormulaKind::kEx)) continue;
      Ctx rest = ctx;
      rest.hyps.erase(rest.hyps.begin() + static_cast<std::ptrdiff_t>(i));
      if (hf.is(FormulaKind::kOr)) {
        auto l = prove(rest, F::imp(hf.left(), goal), d - 1);
        if (!l) continue;
        auto r = prove(rest, F::imp(hf.right(), goal), d - 1);
        if (!r) continue;
        Proof elim = ax(AxiomId::or_elim(hf.left(), hf.right(), goal));
        return Proof::imp_elim(Proof::imp_elim(Proof::imp_elim(elim, h), *l),
                               *r);
      }
      ObjVar y = supply_.fresh(hf.bound());
      F body = instance(hf, Term::var(y));
      auto k = prove(rest, F::all(y, F::imp(body, goal)), d - 1);
      if (!k) continue;
      Proof elim = ax(AxiomId::ex_elim(body, y, goal));
      return Proof::imp_elim(Proof::imp_elim(elim, h), *k);
    }
    return std::nullopt;
  }

  // A from A \/ ~A, with ~A added as a hypothesis once per branch.
  std::optional<Proof> reductio(const Ctx& ctx, const F& goal, std::size_t d) {
    F neg = F::neg(goal);
    AssumptionVar v{"v", supply_.draw(), neg};
    Ctx inner = ctx;
    inner.reductio = true;
    inner.hyps.push_back(Proof::assume(v));
    auto p = prove(inner, goal, d - 1);
    if (!p) return std::nullopt;
    AssumptionVar u{"u", supply_.draw(), goal};
    Proof same = Proof::imp_intro(u, Proof::assume(u));
    Proof elim = ax(AxiomId::or_elim(goal, neg, goal));
    Proof lem = ax(AxiomId::lem(goal));
    return Proof::imp_elim(
        Proof::imp_elim(Proof::imp_elim(elim, lem), same),
        Proof::imp_intro(v, *p));
  }

  TheoryId th_;
  std::size_t budget_;
  NameSupply supply_;
  std::vector<Term> pool_;
};

}  // namespace

SearchVerdict bounded_derivable(const Formula& a, TheoryId th,
                                std::size_t depth, SearchLimits limits) {
  if (!in_language(a, th)) {
    throw LanguageError("formula is not in the language of " +
                        std::string(theory_name(th)));
  }
  Searcher s(a, th, limits.max_nodes);
  std::optional<Proof> found = s.prove(Ctx{}, a, depth);
  if (!found) return {SearchVerdict::Kind::kUnknown, std::nullopt, depth};
  if (!found->closed() || !theory_leq(found->min_theory(), th) ||
      !alpha_eq(found->conclusion(), a)) {
    throw std::logic_error("search produced an unexpected witness");
  }
  return {SearchVerdict::Kind::kDerivable, found, depth};
}

}  // namespace natded
