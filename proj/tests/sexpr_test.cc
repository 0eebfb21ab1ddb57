#include <gtest/gtest.h>

#include "natded/classes.h"
#include "natded/derived.h"
#include "natded/error.h"
#include "natded/generate.h"
#include "natded/sexpr.h"
#include "test_support.h"

namespace natded {
namespace {

using F = Formula;
using testing::atom_var;
using testing::bvar;

bool same_proof(const Proof& a, const Proof& b) {
  return alpha_eq(a.conclusion(), b.conclusion()) &&
         a.min_theory() == b.min_theory() &&
         testing::same_assumptions(a.free_assumptions(), b.free_assumptions()) &&
         print(a) == print(b);
}

TEST(Sexpr, ReaderBasics) {
  Sexpr s = read_sexpr("  (a (b c) ; comment\n d)  ");
  EXPECT_EQ(print_sexpr(s), "(a (b c) d)");
  EXPECT_EQ(s.head(), "a");
  EXPECT_THROW(read_sexpr("(a"), ParseError);
  EXPECT_THROW(read_sexpr("a)"), ParseError);
  EXPECT_THROW(read_sexpr("(a) (b)"), ParseError);
  EXPECT_THROW(read_sexpr(""), ParseError);
}

TEST(Sexpr, TruthExample) {
  Proof m = parse_proof("(axiom truth)", TheoryId::kNA);
  EXPECT_EQ(print(m.conclusion()), "(atom (tt))");
  EXPECT_THROW(parse_proof("(axiom botplus)", TheoryId::kNA), TheoryError);
}

TEST(Sexpr, UnknownForms) {
  EXPECT_THROW(parse_formula("(iff (bot) (bot))"), ParseError);
  EXPECT_THROW(parse_formula("(atom (var x nope (bool)))"), ParseError);
  EXPECT_THROW(parse_proof("(axiom frobnicate)", TheoryId::kPA), ParseError);
  EXPECT_THROW(parse_proof("(axiom lem)", TheoryId::kPA), ParseError);
  EXPECT_THROW(parse_formula("(atom (zero))"), TypeError);
}

TEST(Sexpr, ConstantsAndTypes) {
  const char* terms[] = {
      "(app (succ) (zero))",
      "(nil (tvar a))",
      "(app (app (cons (nat)) (zero)) (nil (nat)))",
      "(app (app (pair (bool) (nat)) (tt)) (zero))",
      "(cases (list (prod (bool) (nat))))",
      "(recnat (arrow (nat) (bool)))",
      "(reclist (bool) (nat))",
      "(split (bool) (nat) (bool))",
      "(lam (var x 3 (nat)) (var x 3 (nat)))",
  };
  for (const char* t : terms) {
    EXPECT_EQ(print(term_from_sexpr(read_sexpr(t))), t);
  }
}

TEST(Sexpr, AxiomParameters) {
  ObjVar b = bvar("b");
  ObjVar n = testing::nvar("n");
  ObjVar l{"l", 0, Type::list(Type::nat())};
  F p = atom_var(b);
  std::vector<AxiomId> ids{
      AxiomId::truth(),           AxiomId::bot_plus(),
      AxiomId::bool_cases(b, p),  AxiomId::ind_nat(n, F::truth()),
      AxiomId::ind_list(l, n, F::truth()),
      AxiomId::or_intro_l(p, F::truth()), AxiomId::or_intro_r(p, F::truth()),
      AxiomId::or_elim(p, p, p),  AxiomId::ex_intro(p, b, Term::tt()),
      AxiomId::ex_elim(p, b, F::truth()), AxiomId::lem(p),
  };
  for (const AxiomId& id : ids) {
    TheoryId th = axiom_theory(id.kind);
    Proof m = Proof::axiom(id, th);
    Proof back = parse_proof(print(m), th);
    EXPECT_TRUE(same_proof(m, back)) << print(m);
  }
}

TEST(Sexpr, FormulaRoundTrip) {
  for (TheoryId th : {TheoryId::kMA, TheoryId::kPA}) {
    Generator gen({.seed = 111, .max_size = 12, .language = th});
    for (int i = 0; i < 500; ++i) {
      F a = gen.formula();
      F back = parse_formula(print(a));
      EXPECT_TRUE(alpha_eq(a, back));
      EXPECT_EQ(print(back), print(a));
    }
  }
}

TEST(Sexpr, TermRoundTrip) {
  testing::TermGen gen(112);
  for (int i = 0; i < 500; ++i) {
    Term t = gen.term(gen.pick({Type::boolean(), Type::nat()}), 4);
    Term back = term_from_sexpr(read_sexpr(print(t)));
    EXPECT_TRUE(alpha_eq(t, back));
  }
}

TEST(Sexpr, ProofRoundTrip) {
  Generator gen({.seed = 113, .max_size = 8, .language = TheoryId::kMA});
  for (int i = 0; i < 200; ++i) {
    Proof m = gen.ma_proof_with_bot(12);
    EXPECT_TRUE(same_proof(m, parse_proof(print(m), TheoryId::kMA)));
  }
  Generator fgen({.seed = 114, .max_size = 8, .language = TheoryId::kMA});
  for (int i = 0; i < 100; ++i) {
    F a = fgen.formula();
    auto r = classify(a, true);
    for (const auto& cert : {r.cert_D, r.cert_G, r.cert_R, r.cert_I}) {
      if (!cert) continue;
      EXPECT_TRUE(same_proof(*cert, parse_proof(print(*cert), TheoryId::kMA)));
    }
  }
}

}  // namespace
}  // namespace natded
