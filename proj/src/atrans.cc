#include "natded/atrans.h"

#include <stdexcept>
#include <string>

#include "builder.h"
#include "natded/classes.h"
#include "natded/derived.h"
#include "natded/error.h"

namespace natded {
namespace {

using detail::Builder;
using F = Formula;

bool closed_ma(const Proof& m) {
  return m.closed() && theory_leq(m.min_theory(), TheoryId::kMA);
}

void check_input(const TranslationInput& in) {
  if (!closed_ma(in.premise)) {
    throw ShapeError("premise must be a closed MA proof");
  }
  if (!alpha_eq(in.premise.conclusion(), premise_target(in.d, in.g, in.x))) {
    throw ShapeError("premise does not prove D -> all x (G -> bot) -> bot");
  }
  if (!closed_ma(in.cert_d) ||
      !alpha_eq(in.cert_d.conclusion(),
                certificate_target(in.d, ClassId::kDefinite))) {
    throw CertificateError("D certificate must be a closed MA proof of D^F -> D");
  }
  F g_target = F::all(in.x, certificate_target(in.g, ClassId::kGoal));
  if (!closed_ma(in.cert_g) || !alpha_eq(in.cert_g.conclusion(), g_target)) {
    throw CertificateError(
        "G certificate must be a closed MA proof of all x (G -> (G^F -> bot) "
        "-> bot)");
  }
}

void note_all(const TranslationInput& in, NameSupply& supply) {
  note_indices(in.premise, supply);
  note_indices(in.cert_d, supply);
  note_indices(in.cert_g, supply);
  note_indices(in.d, supply);
  note_indices(in.g, supply);
  supply.reserve_above(in.x.index);
}

// The eigenvariable used for x: x itself unless D^F mentions it.
ObjVar eigen(const TranslationInput& in, const F& df, NameSupply& supply) {
  return df.occurs_free(in.x) ? fresh_avoiding(in.x, supply, {&df.free_vars()})
                              : in.x;
}

F rename(const F& a, const ObjVar& x, const ObjVar& y, NameSupply& supply) {
  if (x == y) return a;
  return subst_formula_var(a, x, Term::var(y), supply);
}

Proof check(Proof m, const F& target, TheoryId th, const char* who) {
  if (!m.closed() || !theory_leq(m.min_theory(), th) ||
      !alpha_eq(m.conclusion(), target)) {
    throw std::logic_error(std::string(who) + " produced an unexpected proof");
  }
  return m;
}

Proof negative_goal(const TranslationInput& in, NameSupply& supply) {
  F df = subst_bot_false(in.d);
  F gf = subst_bot_false(in.g);
  ObjVar y = eigen(in, df, supply);
  F gy = rename(in.g, in.x, y, supply);
  Builder bld(supply, TheoryId::kMA);
  Proof m = bld.lam(df, [&](Proof d) {
    return bld.lam(F::all(in.x, F::imp(gf, F::bot())), [&](Proof k) {
      Proof all_g = bld.gen(y, bld.lam(gy, [&](Proof g) {
        return bld.app(bld.inst(in.cert_g, Term::var(y)),
                       {g, bld.inst(k, Term::var(y))});
      }));
      return bld.app(in.premise, {bld.app(in.cert_d, d), all_g});
    });
  });
  F target = F::imps({df, F::all(in.x, F::imp(gf, F::bot()))}, F::bot());
  return check(m, target, TheoryId::kMA, "negative goal");
}

}  // namespace

Formula premise_target(const Formula& d, const Formula& g, const ObjVar& x) {
  return F::imps({d, F::all(x, F::imp(g, F::bot()))}, F::bot());
}

Formula translation_target(const Formula& d, const Formula& g,
                           const ObjVar& x) {
  return F::imp(subst_bot_false(d), F::ex(x, subst_bot_false(g)));
}

PremiseShape read_premise(const Formula& c) {
  auto bad = [] {
    return ShapeError("premise does not prove D -> all x (G -> bot) -> bot");
  };
  if (!c.is(FormulaKind::kImp)) throw bad();
  const F& rest = c.right();
  if (!rest.is(FormulaKind::kImp) || !rest.right().is(FormulaKind::kBot)) {
    throw bad();
  }
  const F& all = rest.left();
  if (!all.is(FormulaKind::kAll) || !all.body().is(FormulaKind::kImp) ||
      !all.body().right().is(FormulaKind::kBot)) {
    throw bad();
  }
  return {c.left(), all.body().left(), all.bound()};
}

TranslationInput TranslationInput::from_premise(Proof premise, Proof cert_d,
                                                Proof cert_g) {
  PremiseShape shape = read_premise(premise.conclusion());
  return {std::move(premise), shape.d,           shape.g,
          shape.x,            std::move(cert_d), std::move(cert_g)};
}

Proof prove_negative_goal(const TranslationInput& in, NameSupply& supply) {
  check_input(in);
  note_all(in, supply);
  return negative_goal(in, supply);
}

Proof refined_a_translate(const TranslationInput& in, NameSupply& supply) {
  check_input(in);
  note_all(in, supply);
  Proof goal = negative_goal(in, supply);

  F df = subst_bot_false(in.d);
  F gf = subst_bot_false(in.g);
  F s = F::ex(in.x, gf);
  Proof n = subst_bot_proof(goal, s, supply);

  ObjVar y = eigen(in, df, supply);
  F gy = rename(gf, in.x, y, supply);
  Builder bld(supply, TheoryId::kHA);
  Proof out = bld.lam(df, [&](Proof d) {
    Proof intro = bld.gen(y, bld.lam(gy, [&](Proof g) {
      return bld.app(bld.ax(AxiomId::ex_intro(gf, in.x, Term::var(y))), g);
    }));
    return bld.app(n, {d, intro});
  });
  return check(out, translation_target(in.d, in.g, in.x), TheoryId::kHA,
               "refined A-translation");
}

Proof a_translate_classified(const Formula& d, const Formula& g,
                             const ObjVar& x, const Proof& premise,
                             NameSupply& supply) {
  std::optional<Proof> cert_d = certify(d, ClassId::kDefinite);
  if (!cert_d) throw ClassError("D is not a definite formula");
  std::optional<Proof> cert_g = certify(g, ClassId::kGoal);
  if (!cert_g) throw ClassError("G is not a goal formula");
  // Certificates are closed, so generalizing over x is always allowed.
  TranslationInput in{premise, d, g, x, *cert_d, Proof::all_intro(x, *cert_g)};
  return refined_a_translate(in, supply);
}

std::pair<Formula, Formula> pack_premises(const std::vector<Formula>& ds,
                                          const std::vector<Formula>& gs) {
  if (gs.empty()) throw EmptyGoalError("at least one goal formula is needed");
  auto pack = [](const std::vector<Formula>& xs) {
    F acc = xs.back();
    for (auto it = xs.rbegin() + 1; it != xs.rend(); ++it) {
      acc = F::conj(*it, acc);
    }
    return acc;
  };
  return {ds.empty() ? F::truth() : pack(ds), pack(gs)};
}

TranslationInstance random_translation_instance(Generator& gen) {
  const auto& vars = generator_variables();
  for (;;) {
    ObjVar x = vars[gen.uniform(vars.size())];
    F g = gen.formula(8);
    if (!classify(g).in_G) continue;
    Term t = gen.pool_term(x.ty);
    NameSupply supply;
    note_indices(g, supply);
    F gt = subst_formula_var(g, x, t, supply);
    // D is G(t), or G(t) paired with another formula on a random side.
    int side = static_cast<int>(gen.uniform(3)) - 1;
    F d = gt;
    if (side >= 0) {
      F other = gen.formula(6);
      d = side == 0 ? F::conj(gt, other) : F::conj(other, gt);
    }
    if (!classify(d).in_D) continue;
    note_indices(d, supply);
    Builder bld(supply, TheoryId::kMA);
    Proof premise = bld.lam(d, [&](Proof u) {
      return bld.lam(F::all(x, F::imp(g, F::bot())), [&](Proof k) {
        Proof arg = side < 0 ? u : Proof::proj(side, u);
        return bld.app(bld.inst(k, t), arg);
      });
    });
    return {d, g, x, premise};
  }
}

}  // namespace natded
