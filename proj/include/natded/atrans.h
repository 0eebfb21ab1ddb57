#ifndef NATDED_ATRANS_H_
#define NATDED_ATRANS_H_

#include <utility>
#include <vector>

#include "natded/formula.h"
#include "natded/generate.h"
#include "natded/proof.h"

namespace natded {

// Data for the refined A-translation.
//   premise : D -> all x (G -> bot) -> bot      (closed, MA)
//   cert_d  : D^F -> D                          (closed, MA)
//   cert_g  : all x (G -> (G^F -> bot) -> bot)  (closed, MA)
struct TranslationInput {
  Proof premise;
  Formula d;
  Formula g;
  ObjVar x;
  Proof cert_d;
  Proof cert_g;

  // Reads D, G and x off the premise's conclusion. Throws ShapeError if it
  // does not have the form above.
  static TranslationInput from_premise(Proof premise, Proof cert_d,
                                       Proof cert_g);
};

// D, G and x of a formula D -> all x (G -> bot) -> bot. Throws ShapeError
// on any other shape.
struct PremiseShape {
  Formula d;
  Formula g;
  ObjVar x;
};
PremiseShape read_premise(const Formula& c);

// Formula (D -> all x (G -> bot) -> bot).
Formula premise_target(const Formula& d, const Formula& g, const ObjVar& x);
// Formula (D^F -> ex x G^F).
Formula translation_target(const Formula& d, const Formula& g,
                           const ObjVar& x);

// Closed MA proof of D^F -> all x (G^F -> bot) -> bot. Same errors as
// refined_a_translate.
Proof prove_negative_goal(const TranslationInput& in, NameSupply& supply);

// Closed HA proof of translation_target(d, g, x). Throws ShapeError if the
// premise is open, above MA, or does not prove premise_target, and
// CertificateError if a certificate is open, above MA, or proves the wrong
// formula.
Proof refined_a_translate(const TranslationInput& in, NameSupply& supply);

// As above with certificates synthesized from the formula classes. Throws
// ClassError unless D is definite and G is a goal formula.
Proof a_translate_classified(const Formula& d, const Formula& g,
                             const ObjVar& x, const Proof& premise,
                             NameSupply& supply);

// Packs D0 -> ... -> D(n-1) -> all x (G0 -> ... -> G(m-1) -> bot) -> bot
// into one D and one G: right-nested conjunctions, with D = T when there are
// no Ds. Throws EmptyGoalError when gs is empty.
std::pair<Formula, Formula> pack_premises(const std::vector<Formula>& ds,
                                          const std::vector<Formula>& gs);

// A premise instance for the classified translation: D is definite, G is a
// goal formula, and the premise proves premise_target(d, g, x) by
// instantiating x at a pool term t with D containing G(t) as a conjunct.
struct TranslationInstance {
  Formula d;
  Formula g;
  ObjVar x;
  Proof premise;
};
TranslationInstance random_translation_instance(Generator& gen);

}  // namespace natded

#endif  // NATDED_ATRANS_H_
