#include "natded/derived.h"

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "builder.h"
#include "natded/classes.h"
#include "natded/error.h"

namespace natded {
namespace {

using detail::Builder;
using F = Formula;

// Synthesizers promise a conclusion; a mismatch is a bug here, not a user
// error.
Proof expect(Proof m, const Formula& target, const char* who) {
  if (!alpha_eq(m.conclusion(), target) || !m.closed()) {
    throw std::logic_error(std::string(who) + " produced an unexpected proof");
  }
  return m;
}

Proof identity(Builder& bld, const Formula& a) {
  return bld.lam(a, [](Proof u) { return u; });
}

ObjVar fresh_bool(Builder& bld) {
  return bld.fresh_var({"b", 0, Type::boolean()});
}

// Closed proof of the boolean case scheme instantiated at t:
// (B(tt) -> B(ff) -> B(t)) applied to the two branch proofs.
Proof by_cases(Builder& bld, const ObjVar& b, const Formula& scheme,
               const Term& t, Proof on_tt, Proof on_ff) {
  Proof ax = bld.inst(bld.ax(AxiomId::bool_cases(b, scheme)), t);
  return bld.app(ax, {std::move(on_tt), std::move(on_ff)});
}

Proof efq_rec(Builder& bld, const Formula& a) {
  const Formula f = F::falsity();
  switch (a.kind()) {
    case FormulaKind::kBot:
      return bld.ax(AxiomId::bot_plus());
    case FormulaKind::kAtom: {
      ObjVar b = fresh_bool(bld);
      Formula scheme = F::imp(f, F::atom(Term::var(b)));
      Proof on_tt = bld.lam(f, [&](Proof) { return bld.truth(); });
      Proof on_ff = identity(bld, f);
      return by_cases(bld, b, scheme, a.term(), on_tt, on_ff);
    }
    case FormulaKind::kImp: {
      Proof ih = efq_rec(bld, a.right());
      return bld.lam(f, [&](Proof u) {
        return bld.lam(a.left(), [&](Proof) { return bld.app(ih, u); });
      });
    }
    case FormulaKind::kAnd: {
      Proof l = efq_rec(bld, a.left());
      Proof r = efq_rec(bld, a.right());
      return bld.lam(f, [&](Proof u) {
        return bld.pair(bld.app(l, u), bld.app(r, u));
      });
    }
    case FormulaKind::kAll: {
      Proof ih = efq_rec(bld, a.body());
      return bld.lam(f, [&](Proof u) {
        return bld.gen(a.bound(), bld.app(ih, u));
      });
    }
    case FormulaKind::kOr: {
      Proof ih = efq_rec(bld, a.left());
      Proof intro = bld.ax(AxiomId::or_intro_l(a.left(), a.right()));
      return bld.lam(f, [&](Proof u) { return bld.app(intro, bld.app(ih, u)); });
    }
    case FormulaKind::kEx: {
      Proof ih = efq_rec(bld, a.body());
      Proof intro =
          bld.ax(AxiomId::ex_intro(a.body(), a.bound(), Term::var(a.bound())));
      return bld.lam(f, [&](Proof u) { return bld.app(intro, bld.app(ih, u)); });
    }
  }
  throw std::logic_error("unknown formula kind");
}

// ---------------------------------------------------------------------------
// Bot substitution in proofs.

class BotSubst {
 public:
  BotSubst(const Formula& s, NameSupply& supply, TheoryId th)
      : s_(s), supply_(supply), th_(th) {}

  // Pairs (x, x'): eigenvariable x is renamed to the fresh x' below the
  // binder that introduced it.
  using Renaming = std::vector<std::pair<ObjVar, ObjVar>>;

  Proof go(const Proof& m, const Renaming& sigma) {
    auto memo_key = std::make_pair(m.identity(), key(sigma));
    if (auto it = memo_.find(memo_key); it != memo_.end()) return it->second;
    Proof out = step(m, sigma);
    memo_.emplace(memo_key, out);
    return out;
  }

 private:
  Proof step(const Proof& m, const Renaming& sigma) {
    switch (m.rule()) {
      case Rule::kAssume:
        return Proof::assume(hyp(m.assumption(), sigma));
      case Rule::kAxiom:
        return axiom(m.axiom_id(), sigma);
      case Rule::kAndIntro:
        return Proof::and_intro(go(m.premise(0), sigma),
                                go(m.premise(1), sigma));
      case Rule::kProj:
        return Proof::proj(m.side(), go(m.premise(0), sigma));
      case Rule::kImpElim:
        return Proof::imp_elim(go(m.premise(0), sigma),
                               go(m.premise(1), sigma));
      case Rule::kImpIntro: {
        AssumptionVar u = hyp(m.assumption(), sigma);
        return Proof::imp_intro(u, go(m.premise(0), sigma));
      }
      case Rule::kAllElim:
        return Proof::all_elim(go(m.premise(0), sigma),
                               rename(m.term(), sigma), supply_);
      case Rule::kAllIntro: {
        const ObjVar& x = m.eigenvariable();
        Renaming inner = without(sigma, x);
        ObjVar x2 = x;
        if (s_.occurs_free(x)) {
          x2 = supply_.fresh(x);
          inner.emplace_back(x, x2);
        }
        return Proof::all_intro(x2, go(m.premise(0), inner));
      }
    }
    throw std::logic_error("unknown rule");
  }

  Proof axiom(const AxiomId& id, const Renaming& sigma) {
    switch (id.kind) {
      case AxiomKind::kTruth:
        return Proof::axiom(id, th_);
      case AxiomKind::kBotPlus:
        if (!efq_) efq_ = prove_efq(s_, th_);
        return *efq_;
      case AxiomKind::kBoolCases:
      case AxiomKind::kIndNat: {
        auto [x, body] = scheme(id.vars[0], id.formulas[0], sigma);
        AxiomId out = id;
        out.vars = {x};
        out.formulas = {body};
        return Proof::axiom(out, th_);
      }
      case AxiomKind::kIndList: {
        auto [l, body] = scheme(id.vars[0], id.formulas[0], sigma);
        ObjVar elem = id.vars[1];
        if (s_.occurs_free(elem)) elem = supply_.fresh(elem);
        AxiomId out = id;
        out.vars = {l, elem};
        out.formulas = {body};
        return Proof::axiom(out, th_);
      }
      default:
        throw LanguageError("axiom " + std::string(axiom_name(id.kind)) +
                            " does not belong to an MA proof");
    }
  }

  // Scheme variable x bound in body: renamed when S mentions it, then the
  // body is renamed and substituted.
  std::pair<ObjVar, Formula> scheme(const ObjVar& x, const Formula& body,
                                    const Renaming& sigma) {
    ObjVar x2 = x;
    Formula b = body;
    if (s_.occurs_free(x)) {
      x2 = supply_.fresh(x);
      b = subst_formula_var(b, x, Term::var(x2), supply_);
    }
    return {x2, translate(b, without(sigma, x))};
  }

  AssumptionVar hyp(const AssumptionVar& u, const Renaming& sigma) {
    Formula a = rename(u.formula, sigma);
    auto k = std::make_tuple(u.name, u.index, canonical_key(a));
    if (auto it = hyps_.find(k); it != hyps_.end()) return it->second;
    AssumptionVar out{u.name, supply_.draw(), subst_bot(a, s_, supply_)};
    hyps_.emplace(k, out);
    return out;
  }

  Formula translate(const Formula& a, const Renaming& sigma) {
    return subst_bot(rename(a, sigma), s_, supply_);
  }

  Formula rename(Formula a, const Renaming& sigma) {
    for (const auto& [x, x2] : sigma) {
      a = subst_formula_var(a, x, Term::var(x2), supply_);
    }
    return a;
  }

  Term rename(Term t, const Renaming& sigma) {
    for (const auto& [x, x2] : sigma) {
      t = subst_term(t, x, Term::var(x2), supply_);
    }
    return t;
  }

  static Renaming without(const Renaming& sigma, const ObjVar& x) {
    Renaming out;
    for (const auto& entry : sigma) {
      if (!(entry.first == x)) out.push_back(entry);
    }
    return out;
  }

  static std::string key(const Renaming& sigma) {
    std::string out;
    for (const auto& [x, x2] : sigma) {
      out += x.name + "." + std::to_string(x.index) + ":" + x.ty.to_string() +
             ">" + std::to_string(x2.index) + ";";
    }
    return out;
  }

  const Formula& s_;
  NameSupply& supply_;
  TheoryId th_;
  std::optional<Proof> efq_;
  std::map<std::tuple<std::string, std::uint64_t, std::string>, AssumptionVar>
      hyps_;
  std::map<std::pair<const void*, std::string>, Proof> memo_;
};

// ---------------------------------------------------------------------------
// Case distinction for Q-formulas.

Proof case_distinction(Builder& bld, const Formula& a, const Formula& s);

// (B /\ C -> S) -> (~(B /\ C) -> S) -> S
Proof conj_case(Builder& bld, const Formula& b, const Formula& c,
                const Formula& s) {
  Formula a = F::conj(b, c);
  Proof ih_b = case_distinction(bld, b, F::imp(c, s));
  Proof ih_c = case_distinction(bld, c, s);
  return bld.lam(F::imp(a, s), [&](Proof h1) {
    return bld.lam(F::imp(F::neg(a), s), [&](Proof h2) {
      Proof pos = bld.lam(b, [&](Proof pb) {
        return bld.lam(c, [&](Proof pc) { return bld.app(h1, bld.pair(pb, pc)); });
      });
      Proof neg_b = bld.lam(F::neg(b), [&](Proof nb) {
        return bld.lam(c, [&](Proof) {
          return bld.app(h2, bld.lam(a, [&](Proof p) {
            return bld.app(nb, bld.fst(p));
          }));
        });
      });
      Proof neg_c = bld.lam(F::neg(c), [&](Proof nc) {
        return bld.app(h2, bld.lam(a, [&](Proof p) {
          return bld.app(nc, bld.snd(p));
        }));
      });
      return bld.app(ih_c, {bld.app(ih_b, {pos, neg_b}), neg_c});
    });
  });
}

Proof case_distinction(Builder& bld, const Formula& a, const Formula& s) {
  switch (a.kind()) {
    case FormulaKind::kAtom: {
      ObjVar b = fresh_bool(bld);
      Formula ab = F::atom(Term::var(b));
      Formula scheme = F::imps({F::imp(ab, s), F::imp(F::neg(ab), s)}, s);
      Formula t = F::truth();
      Formula f = F::falsity();
      Proof on_tt = bld.lam(F::imp(t, s), [&](Proof h1) {
        return bld.lam(F::imp(F::neg(t), s),
                       [&](Proof) { return bld.app(h1, bld.truth()); });
      });
      Proof on_ff = bld.lam(F::imp(f, s), [&](Proof) {
        return bld.lam(F::imp(F::neg(f), s), [&](Proof h2) {
          return bld.app(h2, identity(bld, f));
        });
      });
      return by_cases(bld, b, scheme, a.term(), on_tt, on_ff);
    }
    case FormulaKind::kImp: {
      const Formula& b = a.left();
      const Formula& c = a.right();
      Proof ih_b = case_distinction(bld, b, F::imp(F::neg(c), s));
      Proof ih_c = case_distinction(bld, c, s);
      Proof efq_c = efq_rec(bld, c);
      return bld.lam(F::imp(a, s), [&](Proof h1) {
        return bld.lam(F::imp(F::neg(a), s), [&](Proof h2) {
          Proof pos_c = bld.lam(c, [&](Proof pc) {
            return bld.app(h1, bld.lam(b, [&](Proof) { return pc; }));
          });
          Proof pos_b = bld.lam(b, [&](Proof pb) {
            return bld.lam(F::neg(c), [&](Proof nc) {
              return bld.app(h2, bld.lam(a, [&](Proof pf) {
                return bld.app(nc, bld.app(pf, pb));
              }));
            });
          });
          Proof neg_b = bld.lam(F::neg(b), [&](Proof nb) {
            return bld.lam(F::neg(c), [&](Proof) {
              return bld.app(h1, bld.lam(b, [&](Proof pb) {
                return bld.app(efq_c, bld.app(nb, pb));
              }));
            });
          });
          return bld.app(ih_c, {pos_c, bld.app(ih_b, {pos_b, neg_b})});
        });
      });
    }
    case FormulaKind::kAnd:
      return conj_case(bld, a.left(), a.right(), s);
    case FormulaKind::kAll: {
      // forall b B(b) is equivalent to B(tt) /\ B(ff) via the case scheme.
      const ObjVar& x = a.bound();
      const Formula& body = a.body();
      Formula on_tt = subst_formula_var(body, x, Term::tt(), bld.supply());
      Formula on_ff = subst_formula_var(body, x, Term::ff(), bld.supply());
      Formula c = F::conj(on_tt, on_ff);
      Proof to_all = bld.lam(c, [&](Proof p) {
        Proof cases = bld.inst(bld.ax(AxiomId::bool_cases(x, body)), Term::var(x));
        return bld.gen(x, bld.app(cases, {bld.fst(p), bld.snd(p)}));
      });
      Proof to_conj = bld.lam(a, [&](Proof h) {
        return bld.pair(bld.inst(h, Term::tt()), bld.inst(h, Term::ff()));
      });
      Proof conj = conj_case(bld, on_tt, on_ff, s);
      return bld.lam(F::imp(a, s), [&](Proof h1) {
        return bld.lam(F::imp(F::neg(a), s), [&](Proof h2) {
          Proof pos = bld.lam(c, [&](Proof pc) {
            return bld.app(h1, bld.app(to_all, pc));
          });
          Proof neg = bld.lam(F::neg(c), [&](Proof nc) {
            return bld.app(h2, bld.lam(a, [&](Proof pa) {
              return bld.app(nc, bld.app(to_conj, pa));
            }));
          });
          return bld.app(conj, {pos, neg});
        });
      });
    }
    default:
      throw ClassError("formula is not in Q");
  }
}

// ---------------------------------------------------------------------------
// Goedel-Gentzen equivalence.

struct Equiv {
  Proof to;    // A -> A'
  Proof from;  // A' -> A
};

Equiv gg_equiv(Builder& bld, const Formula& a) {
  Formula a2 = gg_translate(a);
  switch (a.kind()) {
    case FormulaKind::kAtom: {
      if (a.is_falsity()) return {identity(bld, a), identity(bld, a)};
      Proof to = bld.lam(a, [&](Proof u) {
        return bld.lam(F::neg(a), [&](Proof v) { return bld.app(v, u); });
      });
      ObjVar b = fresh_bool(bld);
      Formula ab = F::atom(Term::var(b));
      Formula scheme = F::imp(F::neg(F::neg(ab)), ab);
      Formula t = F::truth();
      Formula f = F::falsity();
      Proof on_tt =
          bld.lam(F::neg(F::neg(t)), [&](Proof) { return bld.truth(); });
      Proof on_ff = bld.lam(F::neg(F::neg(f)), [&](Proof v) {
        return bld.app(v, identity(bld, f));
      });
      return {to, by_cases(bld, b, scheme, a.term(), on_tt, on_ff)};
    }
    case FormulaKind::kImp: {
      Equiv l = gg_equiv(bld, a.left());
      Equiv r = gg_equiv(bld, a.right());
      Formula l2 = gg_translate(a.left());
      Proof to = bld.lam(a, [&](Proof f) {
        return bld.lam(l2, [&](Proof x) {
          return bld.app(r.to, bld.app(f, bld.app(l.from, x)));
        });
      });
      Proof from = bld.lam(a2, [&](Proof f) {
        return bld.lam(a.left(), [&](Proof x) {
          return bld.app(r.from, bld.app(f, bld.app(l.to, x)));
        });
      });
      return {to, from};
    }
    case FormulaKind::kAnd: {
      Equiv l = gg_equiv(bld, a.left());
      Equiv r = gg_equiv(bld, a.right());
      Proof to = bld.lam(a, [&](Proof p) {
        return bld.pair(bld.app(l.to, bld.fst(p)), bld.app(r.to, bld.snd(p)));
      });
      Proof from = bld.lam(a2, [&](Proof p) {
        return bld.pair(bld.app(l.from, bld.fst(p)),
                        bld.app(r.from, bld.snd(p)));
      });
      return {to, from};
    }
    case FormulaKind::kAll: {
      const ObjVar& x = a.bound();
      Equiv e = gg_equiv(bld, a.body());
      Proof to = bld.lam(a, [&](Proof h) {
        return bld.gen(x, bld.app(e.to, bld.inst(h, Term::var(x))));
      });
      Proof from = bld.lam(a2, [&](Proof h) {
        return bld.gen(x, bld.app(e.from, bld.inst(h, Term::var(x))));
      });
      return {to, from};
    }
    default:
      throw LanguageError("equivalence with the negative translation needs an NA formula");
  }
}

}  // namespace

Formula efq_target(const Formula& a) { return F::imp(F::falsity(), a); }

Formula gg_equiv_target(const Formula& a) {
  Formula a2 = gg_translate(a);
  return F::conj(F::imp(a, a2), F::imp(a2, a));
}

Formula case_distinction_target(const Formula& a, const Formula& s) {
  return F::imps({F::imp(a, s), F::imp(F::neg(a), s)}, s);
}

Proof prove_efq(const Formula& a, TheoryId th) {
  if (!in_language(a, th)) {
    throw LanguageError("ex falso: formula is not in the language of " +
                        std::string(theory_name(th)));
  }
  NameSupply supply = supply_after({&a});
  Builder bld(supply, th);
  return expect(efq_rec(bld, a), efq_target(a), "ex falso");
}

Proof subst_bot_proof(const Proof& m, const Formula& s, NameSupply& supply) {
  if (!theory_leq(m.min_theory(), TheoryId::kMA)) {
    throw LanguageError("bot substitution needs an MA proof");
  }
  TheoryId th = language_of(s);
  note_indices(m, supply);
  note_indices(s, supply);
  BotSubst run(s, supply, th);
  Proof out = run.go(m, {});
  if (!alpha_eq(out.conclusion(), subst_bot(m.conclusion(), s, supply))) {
    throw std::logic_error("bot substitution produced an unexpected proof");
  }
  return out;
}

Proof prove_gg_equiv(const Formula& a) {
  if (!in_language(a, TheoryId::kNA)) {
    throw LanguageError("equivalence with the negative translation needs an NA formula");
  }
  NameSupply supply = supply_after({&a});
  Builder bld(supply, TheoryId::kNA);
  Equiv e = gg_equiv(bld, a);
  return expect(bld.pair(e.to, e.from), gg_equiv_target(a),
                "negative translation equivalence");
}

Proof prove_case_distinction(const Formula& a, const Formula& s, TheoryId th) {
  if (!in_Q(a)) throw ClassError("case distinction needs a formula in Q");
  if (!in_language(s, th)) {
    throw LanguageError("case distinction: S is not in the language of " +
                        std::string(theory_name(th)));
  }
  NameSupply supply = supply_after({&a, &s});
  Builder bld(supply, th);
  return expect(case_distinction(bld, a, s), case_distinction_target(a, s),
                "case distinction");
}

}  // namespace natded
