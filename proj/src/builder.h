// Small combinators for writing proof terms in synthesizers. Everything goes
// through the kernel factories; the helpers only manage fresh assumption
// variables.
#ifndef NATDED_SRC_BUILDER_H_
#define NATDED_SRC_BUILDER_H_

#include <initializer_list>
#include <utility>

#include "natded/proof.h"

namespace natded::detail {

class Builder {
 public:
  Builder(NameSupply& supply, TheoryId theory)
      : supply_(supply), theory_(theory) {}

  NameSupply& supply() { return supply_; }
  TheoryId theory() const { return theory_; }

  AssumptionVar hyp(Formula a) { return {"u", supply_.draw(), std::move(a)}; }

  // lam(A, [](Proof u) { ... }) proves A -> B from a body proving B.
  template <class Body>
  Proof lam(const Formula& a, Body&& body) {
    AssumptionVar u = hyp(a);
    return Proof::imp_intro(u, std::forward<Body>(body)(Proof::assume(u)));
  }

  Proof app(Proof f, Proof a) { return Proof::imp_elim(std::move(f), std::move(a)); }
  Proof app(Proof f, std::initializer_list<Proof> args) {
    for (const Proof& a : args) f = Proof::imp_elim(std::move(f), a);
    return f;
  }
  Proof inst(Proof m, const Term& t) {
    return Proof::all_elim(std::move(m), t, supply_);
  }
  Proof gen(const ObjVar& x, Proof m) { return Proof::all_intro(x, std::move(m)); }
  Proof pair(Proof a, Proof b) { return Proof::and_intro(std::move(a), std::move(b)); }
  Proof fst(Proof m) { return Proof::proj(0, std::move(m)); }
  Proof snd(Proof m) { return Proof::proj(1, std::move(m)); }
  Proof ax(const AxiomId& id) { return Proof::axiom(id, theory_); }
  Proof truth() { return ax(AxiomId::truth()); }

  ObjVar fresh_var(const ObjVar& like) { return supply_.fresh(like); }

 private:
  NameSupply& supply_;
  TheoryId theory_;
};

}  // namespace natded::detail

#endif  // NATDED_SRC_BUILDER_H_
