#include <gtest/gtest.h>

#include "natded/atrans.h"
#include "natded/classes.h"
#include "natded/error.h"
#include "natded/generate.h"
#include "test_support.h"

namespace natded {
namespace {

using F = Formula;
using testing::atom_var;
using testing::bvar;

constexpr TheoryId kMA = TheoryId::kMA;
constexpr TheoryId kHA = TheoryId::kHA;

// lam d. lam k. k t proof_of_g_t, where proof_of_g_t proves G(t) from d.
Proof premise_by_witness(const F& d, const F& g, const ObjVar& x,
                         const Term& t,
                         const std::function<Proof(Proof)>& from_d) {
  AssumptionVar ud{"d", 1, d};
  AssumptionVar uk{"k", 1, F::all(x, F::imp(g, F::bot()))};
  NameSupply supply(10);
  Proof kt = Proof::all_elim(Proof::assume(uk), t, supply);
  Proof body = Proof::imp_elim(kt, from_d(Proof::assume(ud)));
  return Proof::imp_intro(ud, Proof::imp_intro(uk, body));
}

Proof truth_premise(const F& g, const ObjVar& x, const Term& t) {
  return premise_by_witness(F::truth(), g, x, t, [](Proof) {
    return Proof::axiom(AxiomId::truth(), TheoryId::kNA);
  });
}

void expect_translation(const Proof& out, const F& d, const F& g,
                        const ObjVar& x) {
  EXPECT_TRUE(out.closed());
  EXPECT_TRUE(theory_leq(out.min_theory(), kHA));
  EXPECT_TRUE(testing::cache_sound(out));
  F expected = F::imp(subst_bot_false(d), F::ex(x, subst_bot_false(g)));
  EXPECT_TRUE(alpha_eq(out.conclusion(), expected));
}

TEST(ATranslate, TruthAtNat) {
  ObjVar n = testing::nvar("n");
  Proof premise = truth_premise(F::truth(), n, Term::zero());
  NameSupply supply;
  Proof out = a_translate_classified(F::truth(), F::truth(), n, premise, supply);
  expect_translation(out, F::truth(), F::truth(), n);
  EXPECT_TRUE(alpha_eq(out.conclusion(),
                       F::imp(F::truth(), F::ex(n, F::truth()))));
}

TEST(ATranslate, BooleanWitness) {
  ObjVar b = bvar("b");
  Proof premise = truth_premise(atom_var(b), b, Term::tt());
  NameSupply supply;
  Proof out = a_translate_classified(F::truth(), atom_var(b), b, premise, supply);
  expect_translation(out, F::truth(), atom_var(b), b);
}

TEST(ATranslate, BotInstance) {
  // bot -> all x (bot -> bot) -> bot, using the assumption bot.
  ObjVar n = testing::nvar("n");
  Proof premise = premise_by_witness(F::bot(), F::bot(), n, Term::zero(),
                                     [](Proof d) { return d; });
  NameSupply supply;
  Proof out = a_translate_classified(F::bot(), F::bot(), n, premise, supply);
  expect_translation(out, F::bot(), F::bot(), n);
  EXPECT_TRUE(alpha_eq(out.conclusion(),
                       F::imp(F::falsity(), F::ex(n, F::falsity()))));
}

TEST(ATranslate, ExplicitCertificates) {
  ObjVar b = bvar("b");
  F g = atom_var(b);
  Proof premise = truth_premise(g, b, Term::tt());
  Proof cert_d = *certify(F::truth(), ClassId::kDefinite);
  Proof cert_g = Proof::all_intro(b, *certify(g, ClassId::kGoal));
  TranslationInput in = TranslationInput::from_premise(premise, cert_d, cert_g);
  EXPECT_TRUE(alpha_eq(in.d, F::truth()));
  EXPECT_TRUE(in.x == b);

  NameSupply s1;
  Proof mid = prove_negative_goal(in, s1);
  EXPECT_TRUE(mid.closed());
  EXPECT_TRUE(theory_leq(mid.min_theory(), kMA));

  NameSupply s2;
  Proof theorem = refined_a_translate(in, s2);
  NameSupply s3;
  Proof corollary = a_translate_classified(in.d, in.g, in.x, premise, s3);
  EXPECT_TRUE(alpha_eq(theorem.conclusion(), corollary.conclusion()));
}

TEST(ATranslate, ShapeErrors) {
  Proof truth = Proof::axiom(AxiomId::truth(), TheoryId::kNA);
  EXPECT_THROW(TranslationInput::from_premise(truth, truth, truth), ShapeError);
  // D -> bot without the quantified spine.
  AssumptionVar u{"u", 0, F::bot()};
  Proof no_spine = Proof::imp_intro(u, Proof::assume(u));
  EXPECT_THROW(TranslationInput::from_premise(no_spine, truth, truth),
               ShapeError);
}

TEST(ATranslate, CertificateErrors) {
  ObjVar b = bvar("b");
  F g = atom_var(b);
  Proof premise = truth_premise(g, b, Term::tt());
  Proof cert_d = *certify(F::truth(), ClassId::kDefinite);
  Proof open_g = *certify(g, ClassId::kGoal);  // not generalized over b
  TranslationInput in = TranslationInput::from_premise(premise, cert_d, open_g);
  NameSupply supply;
  EXPECT_THROW(refined_a_translate(in, supply), CertificateError);
  in.cert_g = Proof::all_intro(b, open_g);
  in.cert_d = open_g;
  EXPECT_THROW(refined_a_translate(in, supply), CertificateError);
}

TEST(ATranslate, UnclassifiedFormulasRejected) {
  DefiniteGap gap = definite_gap_witness();
  ObjVar n = testing::nvar("n");
  Proof premise = premise_by_witness(
      gap.formula, F::truth(), n, Term::zero(),
      [](Proof) { return Proof::axiom(AxiomId::truth(), TheoryId::kNA); });
  NameSupply supply;
  EXPECT_THROW(a_translate_classified(gap.formula, F::truth(), n, premise, supply),
               ClassError);
}

TEST(ATranslate, EigenvariableFreeInD) {
  // D = atom(b) mentions the quantified variable b.
  ObjVar b = bvar("b");
  F d = atom_var(b);
  Proof premise = premise_by_witness(d, atom_var(b), b, Term::var(b),
                                     [](Proof u) { return u; });
  NameSupply supply;
  Proof out = a_translate_classified(d, atom_var(b), b, premise, supply);
  expect_translation(out, d, atom_var(b), b);
}

TEST(ATranslate, GeneratedInstances) {
  Generator gen({.seed = 91, .max_size = 8, .language = kMA});
  for (int i = 0; i < 100; ++i) {
    TranslationInstance inst = random_translation_instance(gen);
    ASSERT_TRUE(classify(inst.d).in_D);
    ASSERT_TRUE(classify(inst.g).in_G);
    NameSupply supply;
    Proof out = a_translate_classified(inst.d, inst.g, inst.x, inst.premise,
                                       supply);
    expect_translation(out, inst.d, inst.g, inst.x);
  }
}

TEST(PackPremises, Shapes) {
  F d0 = atom_var(bvar("p")), d1 = F::bot();
  F g0 = atom_var(bvar("q")), g1 = F::falsity(), g2 = F::truth();
  auto [d, g] = pack_premises({}, {g0});
  EXPECT_TRUE(alpha_eq(d, F::truth()));
  EXPECT_TRUE(alpha_eq(g, g0));
  auto [dd, gg] = pack_premises({d0, d1}, {g0, g1});
  EXPECT_TRUE(alpha_eq(dd, F::conj(d0, d1)));
  EXPECT_TRUE(alpha_eq(gg, F::conj(g0, g1)));
  auto [d_one, g_one] = pack_premises({d0}, {g0});
  EXPECT_TRUE(alpha_eq(d_one, d0));
  EXPECT_TRUE(alpha_eq(g_one, g0));
  auto [d3, g3] = pack_premises({d0}, {g0, g1, g2});
  EXPECT_TRUE(alpha_eq(g3, F::conj(g0, F::conj(g1, g2))));
  EXPECT_THROW(pack_premises({d0}, {}), EmptyGoalError);
}

}  // namespace
}  // namespace natded
