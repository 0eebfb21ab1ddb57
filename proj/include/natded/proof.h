#ifndef NATDED_PROOF_H_
#define NATDED_PROOF_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "natded/formula.h"
#include "natded/term.h"
#include "natded/types.h"

namespace natded {

// Assumption variable. Identity is (name, index); the formula is fixed when
// the variable is created and the kernel rejects any proof that uses one
// identity at two different formulas.
struct AssumptionVar {
  std::string name;
  std::uint64_t index = 0;
  Formula formula = Formula::truth();

  bool same_identity(const AssumptionVar& o) const {
    return index == o.index && name == o.name;
  }
};

struct AssumptionKey {
  std::string name;
  std::uint64_t index;
  friend auto operator<=>(const AssumptionKey&, const AssumptionKey&) = default;
};

inline AssumptionKey key_of(const AssumptionVar& u) { return {u.name, u.index}; }

using AssumptionMap = std::map<AssumptionKey, AssumptionVar>;

enum class AxiomKind {
  kTruth,
  kBoolCases,
  kIndNat,
  kIndList,
  kBotPlus,
  kOrIntroL,
  kOrIntroR,
  kOrElim,
  kExIntro,
  kExElim,
  kLem,
};

// Least theory offering the axiom.
TheoryId axiom_theory(AxiomKind kind);
std::string_view axiom_name(AxiomKind kind);
std::optional<AxiomKind> parse_axiom_name(std::string_view name);

// An axiom together with the parameters that instantiate its scheme.
//   Truth                 : T
//   BoolCases(b, A)       : all b (A(tt) -> A(ff) -> A(b))
//   IndNat(n, A)          : all n (A(0) -> all n (A(n) -> A(S n)) -> A(n))
//   IndList(l, x, A)      : all l (A(nil) -> all x all l (A(l) -> A(x::l))
//                                 -> A(l))
//   BotPlus               : F -> bot
//   OrIntroL(A, B)        : A -> A \/ B
//   OrIntroR(A, B)        : B -> A \/ B
//   OrElim(A, B, C)       : A \/ B -> (A -> C) -> (B -> C) -> C
//   ExIntro(A, x, t)      : A(t) -> ex x A
//   ExElim(A, x, C)       : ex x A -> all x (A -> C) -> C
//   Lem(A)                : A \/ ~A
struct AxiomId {
  AxiomKind kind = AxiomKind::kTruth;
  std::vector<ObjVar> vars;
  std::vector<Formula> formulas;
  std::optional<Term> term;

  static AxiomId truth();
  static AxiomId bool_cases(ObjVar b, Formula a);
  static AxiomId ind_nat(ObjVar n, Formula a);
  static AxiomId ind_list(ObjVar l, ObjVar elem, Formula a);
  static AxiomId bot_plus();
  static AxiomId or_intro_l(Formula a, Formula b);
  static AxiomId or_intro_r(Formula a, Formula b);
  static AxiomId or_elim(Formula a, Formula b, Formula c);
  static AxiomId ex_intro(Formula a, ObjVar x, Term t);
  static AxiomId ex_elim(Formula a, ObjVar x, Formula c);
  static AxiomId lem(Formula a);
};

enum class Rule {
  kAssume,
  kAxiom,
  kAndIntro,
  kProj,
  kImpElim,
  kImpIntro,
  kAllElim,
  kAllIntro,
};

// What a proof establishes: in `theory`, from `assumptions`, `conclusion`.
struct Judgement {
  TheoryId theory;
  std::vector<AssumptionVar> assumptions;
  Formula conclusion;
};

// Natural-deduction proof term. The only way to obtain a Proof is through
// the factories below, each of which checks its rule's side conditions, so
// every Proof value is correct by construction. The conclusion, the free
// assumptions and the least theory are computed once and cached.
class Proof {
 public:
  static Proof assume(AssumptionVar u);
  // Throws TheoryError if the axiom is not available in th, LanguageError if
  // its instance leaves th's language, and TypeError or EigenvariableError
  // when the scheme parameters are ill-formed.
  static Proof axiom(const AxiomId& id, TheoryId th);
  static Proof and_intro(Proof left, Proof right);
  // side 0 projects the left conjunct, 1 the right.
  static Proof proj(int side, Proof m);
  static Proof imp_elim(Proof fun, Proof arg);
  static Proof imp_intro(AssumptionVar u, Proof body);
  static Proof all_elim(Proof m, Term t, NameSupply& supply);
  static Proof all_intro(ObjVar x, Proof body);

  Rule rule() const { return node_->rule; }
  const std::vector<Proof>& premises() const { return node_->kids; }
  const Proof& premise(std::size_t i) const { return node_->kids.at(i); }
  // kAssume, kImpIntro.
  const AssumptionVar& assumption() const { return *node_->asm_var; }
  // kAxiom.
  const AxiomId& axiom_id() const { return *node_->axiom; }
  // kAllElim.
  const Term& term() const { return *node_->term; }
  // kAllIntro.
  const ObjVar& eigenvariable() const { return *node_->var; }
  // kProj.
  int side() const { return node_->side; }

  const Formula& conclusion() const { return node_->conclusion; }
  const AssumptionMap& free_assumptions() const { return node_->free; }
  TheoryId min_theory() const { return node_->theory; }
  bool closed() const { return node_->free.empty(); }
  // Shared sub-proofs have the same identity; for memoized traversals.
  const void* identity() const { return node_.get(); }

 private:
  struct Node {
    Rule rule;
    std::vector<Proof> kids;
    std::optional<AssumptionVar> asm_var;
    std::optional<AxiomId> axiom;
    std::optional<Term> term;
    std::optional<ObjVar> var;
    int side = 0;
    Formula conclusion;
    AssumptionMap free;
    TheoryId theory;
  };
  explicit Proof(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Instance formula of an axiom scheme, with its side conditions checked.
Formula axiom_formula(const AxiomId& id);

// Parameters for the generic rule dispatcher.
struct RuleParams {
  std::optional<AssumptionVar> assumption;
  std::optional<AxiomId> axiom;
  std::optional<TheoryId> theory;
  std::optional<Term> term;
  std::optional<ObjVar> var;
  int side = 0;
};

// Applies `rule` to `premises`. Throws ShapeError when the number of
// premises or parameters does not fit the rule, and otherwise whatever the
// corresponding factory throws.
Proof build(Rule rule, std::span<const Proof> premises,
            const RuleParams& params, NameSupply& supply);

Judgement inspect(const Proof& m);

std::string_view rule_name(Rule rule);

// Moves supply past every object- and assumption-variable index in m.
void note_indices(const Proof& m, NameSupply& supply);
NameSupply supply_after(const Proof& m);

}  // namespace natded

#endif  // NATDED_PROOF_H_
