#ifndef NATDED_DERIVED_H_
#define NATDED_DERIVED_H_

#include "natded/formula.h"
#include "natded/proof.h"

namespace natded {

// Closed proof of F -> A in th, by induction on A. Throws LanguageError
// unless A is a formula of th.
Proof prove_efq(const Formula& a, TheoryId th);

// Replaces bot by S throughout an MA proof. The result proves
// subst_bot(conclusion(m), s); each free assumption u : A of m becomes a
// fresh assumption u' : A^S, and every use of bot+ becomes an ex-falso proof
// of F -> S. Eigenvariables and scheme variables that would capture a free
// variable of S are renamed. The result lives in language_of(s) (NA if s
// mentions neither bot nor the strong connectives). Throws LanguageError if
// m is not an MA proof.
Proof subst_bot_proof(const Proof& m, const Formula& s, NameSupply& supply);

// Closed NA proof of (A -> A') /\ (A' -> A) with A' = gg_translate(A).
// Throws LanguageError unless A is an NA formula.
Proof prove_gg_equiv(const Formula& a);

// Closed proof of (A -> S) -> (~A -> S) -> S in th for A in Q. Throws
// ClassError if A is not in Q and LanguageError if S is not a formula of th.
Proof prove_case_distinction(const Formula& a, const Formula& s, TheoryId th);

// The formulas the synthesizers above promise.
Formula efq_target(const Formula& a);
Formula gg_equiv_target(const Formula& a);
Formula case_distinction_target(const Formula& a, const Formula& s);

}  // namespace natded

#endif  // NATDED_DERIVED_H_
