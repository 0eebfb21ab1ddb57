#ifndef NATDED_SEXPR_H_
#define NATDED_SEXPR_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "natded/formula.h"
#include "natded/proof.h"
#include "natded/term.h"
#include "natded/types.h"

namespace natded {

// Malformed text or an unknown form. Not a KernelError: a parse failure says
// nothing about the logic.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Sexpr {
  std::string atom;          // set for atoms
  std::vector<Sexpr> items;  // set for lists
  bool is_list = false;

  static Sexpr symbol(std::string s) { return {std::move(s), {}, false}; }
  static Sexpr list(std::vector<Sexpr> xs) { return {"", std::move(xs), true}; }

  // Head symbol of a non-empty list whose first item is an atom, else "".
  std::string_view head() const;
};

// Exactly one toplevel form; ';' starts a comment running to end of line.
Sexpr read_sexpr(std::string_view text);
std::string print_sexpr(const Sexpr& s);

//   types    (bool) (nat) (list T) (arrow T R) (prod T R) (tvar NAME)
//   terms    (var NAME IDX T) (app M N) (lam (var ...) M) (tt) (ff) (zero)
//            (succ) (nil T) (cons T) (pair T R) (split R S T) (cases T)
//            (recnat T) (reclist R T)
//   formulas (bot) (atom M) (imp A B) (and A B) (all (var ...) A) (or A B)
//            (ex (var ...) A)
//   proofs   (assume NAME IDX A) (axiom ID PARAMS...) (pair-pf M N)
//            (proj0 M) (proj1 M) (app-pf M N) (lam-pf (assume ...) M)
//            (inst M TERM) (gen (var ...) M)
// Axiom parameters follow the scheme's argument order, e.g.
// (axiom bool-cases (var b 0 (bool)) A) or (axiom ex-intro A (var ...) TERM).
Sexpr to_sexpr(const Type& t);
Sexpr to_sexpr(const Term& t);
Sexpr to_sexpr(const Formula& a);
Sexpr to_sexpr(const Proof& m);

Type type_from_sexpr(const Sexpr& s);
Term term_from_sexpr(const Sexpr& s);
Formula formula_from_sexpr(const Sexpr& s);
// Builds the proof with the kernel's factories; axioms are taken in th, so
// kernel errors propagate as KernelError.
Proof proof_from_sexpr(const Sexpr& s, TheoryId th);

std::string print(const Term& t);
std::string print(const Formula& a);
std::string print(const Proof& m);
Formula parse_formula(std::string_view text);
Proof parse_proof(std::string_view text, TheoryId th);

}  // namespace natded

#endif  // NATDED_SEXPR_H_
