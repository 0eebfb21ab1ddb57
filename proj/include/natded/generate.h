#ifndef NATDED_GENERATE_H_
#define NATDED_GENERATE_H_

#include <cstdint>
#include <random>
#include <vector>

#include "natded/formula.h"
#include "natded/proof.h"
#include "natded/term.h"

namespace natded {

// Random generation of formulas and proofs for property tests.
struct GenConfig {
  std::uint64_t seed = 0;
  std::size_t max_size = 12;
  TheoryId language = TheoryId::kMA;
  // Boolean terms used as atom payloads; empty selects default_atom_pool().
  std::vector<Term> atom_pool;
};

// Variables bound by generated quantifiers. The default atom pool mentions
// them so quantifiers are not always vacuous.
const std::vector<ObjVar>& generator_variables();
std::vector<Term> default_atom_pool();

class Generator {
 public:
  explicit Generator(GenConfig cfg);

  // A formula of cfg.language with at most cfg.max_size nodes.
  Formula formula();
  Formula formula(std::size_t max_size);
  // A formula of at most max_size nodes containing bot (MA only).
  Formula formula_with_bot(std::size_t max_size);
  // A Q-formula: atoms under ->, /\ and forall over booleans.
  Formula q_formula(std::size_t max_size);
  // A term of the given type from the pool, used for instantiation.
  Term pool_term(const Type& ty);

  // Forward-constructed MA proof that mentions bot in some formula. It may
  // have free assumptions; `steps` bounds the number of rule applications.
  Proof ma_proof_with_bot(std::size_t steps);

  std::mt19937_64& rng() { return rng_; }
  std::size_t uniform(std::size_t n);  // in [0, n)
  bool chance(double p);

 private:
  Formula gen(std::size_t budget, bool allow_bot, bool allow_strong);
  Formula leaf(bool allow_bot);
  Proof ma_proof_attempt(std::size_t steps);

  GenConfig cfg_;
  std::mt19937_64 rng_;
  NameSupply supply_;
};

Formula gen_formula(const GenConfig& cfg);

}  // namespace natded

#endif  // NATDED_GENERATE_H_
