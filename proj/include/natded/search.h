#ifndef NATDED_SEARCH_H_
#define NATDED_SEARCH_H_

#include <cstddef>
#include <optional>

#include "natded/formula.h"
#include "natded/proof.h"

namespace natded {

// Outcome of a bounded search. The search never claims non-derivability:
// exhausting the depth or node budget gives kUnknown.
struct SearchVerdict {
  enum class Kind { kDerivable, kUnknown };
  Kind kind = Kind::kUnknown;
  std::optional<Proof> witness;  // set iff kDerivable
  std::size_t depth = 0;         // depth searched

  bool derivable() const { return kind == Kind::kDerivable; }
};

struct SearchLimits {
  std::size_t max_nodes = 200000;
};

// Goal-directed backward search for a closed proof of A in th. Uses the
// introduction rules, backchaining through hypotheses (->, /\ and forall
// eliminations), Truth, bot+, ex falso from F, the disjunction and
// existential axioms in HA and PA, and excluded middle on the goal in PA.
// Quantifiers are instantiated from a finite pool: subterms of A, tt, ff, 0
// and the eigenvariables in scope. Induction and boolean case analysis are
// not searched. Throws LanguageError unless A is a formula of th.
SearchVerdict bounded_derivable(const Formula& a, TheoryId th,
                                std::size_t depth, SearchLimits limits = {});

}  // namespace natded

#endif  // NATDED_SEARCH_H_
