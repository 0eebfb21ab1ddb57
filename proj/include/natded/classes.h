#ifndef NATDED_CLASSES_H_
#define NATDED_CLASSES_H_

#include <optional>
#include <string_view>

#include "natded/formula.h"
#include "natded/proof.h"

namespace natded {

enum class ClassId { kQ, kQF, kDefinite, kGoal, kRelevant, kIrrelevant };

std::string_view class_name(ClassId c);  // "Q", "QF", "D", "G", "R", "I"

// Atoms closed under ->, /\ and forall over booleans (checked through both
// boolean instances). Bot and the strong connectives are never in Q.
bool in_Q(const Formula& a);

struct ClassReport {
  bool in_Q = false;
  bool in_QF = false;
  bool in_D = false;
  bool in_G = false;
  bool in_R = false;
  bool in_I = false;
  // Filled for the classes that hold when certificates are requested.
  std::optional<Proof> cert_D;
  std::optional<Proof> cert_G;
  std::optional<Proof> cert_R;
  std::optional<Proof> cert_I;

  bool holds(ClassId c) const;
};

// Membership in Q, QF, D, G, R and I. Throws LanguageError unless A is an
// MA formula.
ClassReport classify(const Formula& a, bool with_certificates = false);

// Which subcase to use when several apply: the first one in the order of
// the membership clauses, or the last. Both give valid certificates.
enum class SubcaseOrder { kFirst, kLast };

// The property a member of c satisfies:
//   D : A^F -> A          G : A -> (A^F -> bot) -> bot
//   R : (~A^F -> bot) -> A     I : A -> A^F
//   Q : (A -> bot) -> (~A -> bot) -> bot, and QF the same for A^F.
Formula certificate_target(const Formula& a, ClassId c);

// A closed MA proof of certificate_target(a, c) if a is in c, else nothing.
// Throws LanguageError unless A is an MA formula.
std::optional<Proof> certify(const Formula& a, ClassId c,
                             SubcaseOrder order = SubcaseOrder::kFirst);

// A formula outside D whose D-certificate is nevertheless provable:
// with x : N, f : N -> B and A = f x,
//   S = all x (~~A -> A),  T = (all x A -> bot) -> bot,
// formula = S -> T and proof a closed MA proof of (S -> T)^F -> S -> T.
struct DefiniteGap {
  Formula formula;
  Proof proof;
};
DefiniteGap definite_gap_witness();

}  // namespace natded

#endif  // NATDED_CLASSES_H_
