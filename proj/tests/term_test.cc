#include <gtest/gtest.h>

#include <set>

#include "natded/error.h"
#include "natded/term.h"
#include "test_support.h"

namespace natded {
namespace {

using testing::bvar;
using testing::nvar;

TEST(TypeOf, Constants) {
  EXPECT_EQ(type_of(Term::tt()), Type::boolean());
  EXPECT_EQ(type_of(Term::zero()), Type::nat());
  EXPECT_EQ(type_of(Term::constant(ConstTag::kCases, {Type::nat()})),
            Type::arrow(Type::boolean(),
                        Type::arrow(Type::nat(),
                                    Type::arrow(Type::nat(), Type::nat()))));
}

TEST(TypeOf, IdentityLambda) {
  ObjVar x = nvar("x");
  EXPECT_EQ(type_of(Term::lam(x, Term::var(x))),
            Type::arrow(Type::nat(), Type::nat()));
}

TEST(TypeOf, SuccZero) {
  Term t = Term::app(Term::constant(ConstTag::kSucc), Term::zero());
  EXPECT_EQ(type_of(t), Type::nat());
}

TEST(TypeOf, IllTypedRejected) {
  EXPECT_THROW(Term::app(Term::constant(ConstTag::kSucc), Term::tt()),
               TypeError);
  EXPECT_THROW(Term::app(Term::tt(), Term::tt()), TypeError);
  EXPECT_THROW(Term::constant(ConstTag::kCases), TypeError);
  EXPECT_THROW(Term::constant(ConstTag::kTt, {Type::nat()}), TypeError);
}

TEST(TypeOf, RecListSignature) {
  Type r = Type::nat();
  Type t = Type::boolean();
  Type expected = Type::arrow(
      Type::list(r),
      Type::arrow(t, Type::arrow(Type::arrow(r, Type::arrow(Type::list(r),
                                                            Type::arrow(t, t))),
                                 t)));
  EXPECT_EQ(type_of(Term::constant(ConstTag::kRecList, {r, t})), expected);
}

TEST(Subst, DirectHit) {
  NameSupply supply;
  ObjVar x = nvar("x");
  Term out = subst_term(Term::var(x), x, Term::zero(), supply);
  EXPECT_TRUE(alpha_eq(out, Term::zero()));
}

TEST(Subst, TypeMismatch) {
  NameSupply supply;
  ObjVar x = nvar("x");
  EXPECT_THROW(subst_term(Term::var(x), x, Term::tt(), supply), TypeError);
}

TEST(Subst, CaptureAvoided) {
  NameSupply supply(10);
  ObjVar x = nvar("x");
  ObjVar y = nvar("y");
  Term t = Term::lam(y, Term::var(x));
  Term out = subst_term(t, x, Term::var(y), supply);
  ASSERT_EQ(out.kind(), TermKind::kLam);
  EXPECT_FALSE(out.variable() == y);
  EXPECT_EQ(out.variable().ty, y.ty);
  EXPECT_TRUE(alpha_eq(out.body(), Term::var(y)));
  EXPECT_TRUE(out.occurs_free(y));
  // Oracle: substitution on the locally nameless form.
  EXPECT_EQ(testing::to_db(out),
            testing::db_subst(testing::to_db(t), testing::db_label(x),
                              testing::to_db(Term::var(y))));
}

TEST(Subst, BoundOccurrenceShadows) {
  NameSupply supply;
  ObjVar x = nvar("x");
  Term t = Term::lam(x, Term::var(x));
  Term out = subst_term(t, x, Term::zero(), supply);
  EXPECT_TRUE(alpha_eq(out, t));
  EXPECT_TRUE(out.variable() == x);
}

TEST(AlphaEq, Examples) {
  ObjVar x = nvar("x");
  ObjVar y = nvar("y");
  EXPECT_TRUE(alpha_eq(Term::lam(x, Term::var(x)), Term::lam(y, Term::var(y))));
  EXPECT_FALSE(alpha_eq(Term::lam(x, Term::var(x)), Term::lam(x, Term::zero())));
  ObjVar f{"f", 0, Type::arrow(Type::nat(), Type::nat())};
  Term fx = Term::app(Term::var(f), Term::var(x));
  EXPECT_TRUE(alpha_eq(fx, Term::app(Term::var(f), Term::var(x))));
}

TEST(AlphaEq, FreeVersusBound) {
  ObjVar x = nvar("x");
  ObjVar y = nvar("y");
  // \x. y  vs  \y. y
  EXPECT_FALSE(alpha_eq(Term::lam(x, Term::var(y)), Term::lam(y, Term::var(y))));
  // Same name, different types are different variables.
  ObjVar xb = bvar("x");
  EXPECT_FALSE(alpha_eq(Term::var(x), Term::var(xb)));
  // Binder types must agree.
  EXPECT_FALSE(alpha_eq(Term::lam(x, Term::zero()), Term::lam(xb, Term::zero())));
}

class RandomTerms : public ::testing::Test {
 protected:
  std::vector<Term> sample(std::size_t n, std::uint64_t seed) {
    testing::TermGen gen(seed);
    std::vector<Term> out;
    for (std::size_t i = 0; i < n; ++i) {
      Type ty = gen.pick({Type::boolean(), Type::nat(),
                          Type::arrow(Type::nat(), Type::boolean())});
      out.push_back(gen.term(ty, 4));
    }
    return out;
  }
};

TEST_F(RandomTerms, SubstMatchesNamelessOracle) {
  testing::TermGen gen(7);
  std::vector<Term> terms = sample(1000, 1);
  for (const Term& t : terms) {
    for (const ObjVar& x : gen.pool()) {
      Term s = gen.term(x.ty, 2);
      NameSupply supply = NameSupply(1000);
      Term out = subst_term(t, x, s, supply);
      ASSERT_EQ(testing::to_db(out),
                testing::db_subst(testing::to_db(t), testing::db_label(x),
                                  testing::to_db(s)));
      ASSERT_EQ(type_of(out), type_of(t));
    }
  }
}

TEST_F(RandomTerms, IdentitySubstitution) {
  testing::TermGen gen(3);
  for (const Term& t : sample(1000, 2)) {
    for (const ObjVar& x : gen.pool()) {
      NameSupply supply(500);
      EXPECT_TRUE(alpha_eq(subst_term(t, x, Term::var(x), supply), t));
    }
  }
}

TEST_F(RandomTerms, AlphaEqIsEquivalence) {
  std::vector<Term> terms = sample(1000, 4);
  // Renamed copies: substitute every bound variable via a no-op substitution
  // against a term that mentions all pool variables, forcing renames.
  testing::TermGen gen(5);
  std::vector<Term> renamed;
  for (const Term& t : terms) {
    NameSupply supply(2000);
    ObjVar dummy = nvar("unused", 99);
    renamed.push_back(subst_term(t, dummy, Term::zero(), supply));
  }
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const Term& a = terms[i];
    const Term& b = renamed[i];
    const Term& c = terms[(i + 1) % terms.size()];
    EXPECT_TRUE(alpha_eq(a, a));
    EXPECT_EQ(alpha_eq(a, b), alpha_eq(b, a));
    EXPECT_EQ(alpha_eq(a, c), alpha_eq(c, a));
    if (alpha_eq(a, b) && alpha_eq(b, c)) {
      EXPECT_TRUE(alpha_eq(a, c));
    }
    EXPECT_EQ(alpha_eq(a, c), canonical_key(a) == canonical_key(c));
  }
}

TEST(NameSupply, DrawsNeverRepeat) {
  NameSupply supply;
  std::set<std::uint64_t> seen;
  testing::TermGen gen(11);
  for (int i = 0; i < 2000; ++i) {
    if (i % 3 == 0) {
      Term t = gen.term(Type::nat(), 3);
      ObjVar x = gen.pick_var(Type::nat());
      std::uint64_t before = supply.peek();
      (void)subst_term(t, x, gen.term(Type::nat(), 2), supply);
      EXPECT_GE(supply.peek(), before);
    }
    std::uint64_t idx = supply.draw();
    EXPECT_TRUE(seen.insert(idx).second);
  }
  supply.reserve_above(3);
  EXPECT_FALSE(seen.contains(supply.draw()));
}

TEST(NameSupply, FreshAvoiding) {
  NameSupply supply(5);
  ObjVar x = nvar("x", 5);
  VarSet avoid(nvar("x", 6));
  ObjVar y = fresh_avoiding(x, supply, {&avoid});
  EXPECT_FALSE(y == x);
  EXPECT_FALSE(avoid.contains(y));
  EXPECT_EQ(y.ty, x.ty);
}

}  // namespace
}  // namespace natded
