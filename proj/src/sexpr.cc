#include "natded/sexpr.h"

#include <charconv>
#include <utility>

namespace natded {
namespace {

using F = Formula;

bool delimiter(char c) {
  return c == '(' || c == ')' || c == ';' || c == ' ' || c == '\t' ||
         c == '\n' || c == '\r';
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  Sexpr read() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input");
    char c = text_[pos_];
    if (c == ')') throw ParseError("unexpected ')'");
    if (c != '(') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && !delimiter(text_[pos_])) ++pos_;
      return Sexpr::symbol(std::string(text_.substr(start, pos_ - start)));
    }
    ++pos_;
    std::vector<Sexpr> items;
    for (;;) {
      skip();
      if (pos_ >= text_.size()) throw ParseError("missing ')'");
      if (text_[pos_] == ')') {
        ++pos_;
        return Sexpr::list(std::move(items));
      }
      items.push_back(read());
    }
  }

  bool at_end() {
    skip();
    return pos_ >= text_.size();
  }

 private:
  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ++pos_;
      } else {
        return;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Sexpr sym(std::string s) { return Sexpr::symbol(std::move(s)); }

Sexpr form(std::string head, std::vector<Sexpr> rest = {}) {
  rest.insert(rest.begin(), sym(std::move(head)));
  return Sexpr::list(std::move(rest));
}

const std::vector<Sexpr>& args(const Sexpr& s, std::size_t n,
                               std::string_view what) {
  if (!s.is_list || s.items.size() != n + 1) {
    throw ParseError("malformed " + std::string(what) + ": " + print_sexpr(s));
  }
  return s.items;
}

const std::string& atom_of(const Sexpr& s, std::string_view what) {
  if (s.is_list) throw ParseError("expected " + std::string(what));
  return s.atom;
}

std::uint64_t index_of(const Sexpr& s) {
  const std::string& a = atom_of(s, "an index");
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(a.data(), a.data() + a.size(), v);
  if (ec != std::errc() || p != a.data() + a.size()) {
    throw ParseError("bad index: " + a);
  }
  return v;
}

Sexpr var_sexpr(const ObjVar& v) {
  return form("var", {sym(v.name), sym(std::to_string(v.index)), to_sexpr(v.ty)});
}

ObjVar var_from_sexpr(const Sexpr& s) {
  if (s.head() != "var") throw ParseError("expected (var NAME IDX T)");
  const auto& xs = args(s, 3, "variable");
  return {atom_of(xs[1], "a name"), index_of(xs[2]), type_from_sexpr(xs[3])};
}

struct ConstName {
  ConstTag tag;
  std::string_view name;
  std::size_t params;
};

constexpr ConstName kConstNames[] = {
    {ConstTag::kPair, "pair", 2},    {ConstTag::kTt, "tt", 0},
    {ConstTag::kFf, "ff", 0},        {ConstTag::kZero, "zero", 0},
    {ConstTag::kSucc, "succ", 0},    {ConstTag::kNil, "nil", 1},
    {ConstTag::kCons, "cons", 1},    {ConstTag::kSplit, "split", 3},
    {ConstTag::kCases, "cases", 1},  {ConstTag::kRecNat, "recnat", 1},
    {ConstTag::kRecList, "reclist", 2},
};

// Parameter slots of each axiom scheme: V variable, F formula, T term.
std::string_view axiom_slots(AxiomKind k) {
  switch (k) {
    case AxiomKind::kTruth:
    case AxiomKind::kBotPlus:
      return "";
    case AxiomKind::kBoolCases:
    case AxiomKind::kIndNat:
      return "VF";
    case AxiomKind::kIndList:
      return "VVF";
    case AxiomKind::kOrIntroL:
    case AxiomKind::kOrIntroR:
      return "FF";
    case AxiomKind::kOrElim:
      return "FFF";
    case AxiomKind::kExIntro:
      return "FVT";
    case AxiomKind::kExElim:
      return "FVF";
    case AxiomKind::kLem:
      return "F";
  }
  return "";
}

AxiomId axiom_from_parts(AxiomKind k, const std::vector<ObjVar>& v,
                         const std::vector<F>& f, const std::vector<Term>& t) {
  switch (k) {
    case AxiomKind::kTruth: return AxiomId::truth();
    case AxiomKind::kBotPlus: return AxiomId::bot_plus();
    case AxiomKind::kBoolCases: return AxiomId::bool_cases(v[0], f[0]);
    case AxiomKind::kIndNat: return AxiomId::ind_nat(v[0], f[0]);
    case AxiomKind::kIndList: return AxiomId::ind_list(v[0], v[1], f[0]);
    case AxiomKind::kOrIntroL: return AxiomId::or_intro_l(f[0], f[1]);
    case AxiomKind::kOrIntroR: return AxiomId::or_intro_r(f[0], f[1]);
    case AxiomKind::kOrElim: return AxiomId::or_elim(f[0], f[1], f[2]);
    case AxiomKind::kExIntro: return AxiomId::ex_intro(f[0], v[0], t[0]);
    case AxiomKind::kExElim: return AxiomId::ex_elim(f[0], v[0], f[1]);
    case AxiomKind::kLem: return AxiomId::lem(f[0]);
  }
  throw ParseError("unknown axiom");
}

AssumptionVar assumption_from_sexpr(const Sexpr& s) {
  if (s.head() != "assume") throw ParseError("expected (assume NAME IDX A)");
  const auto& xs = args(s, 3, "assumption");
  return {atom_of(xs[1], "a name"), index_of(xs[2]), formula_from_sexpr(xs[3])};
}

Sexpr assumption_sexpr(const AssumptionVar& u) {
  return form("assume", {sym(u.name), sym(std::to_string(u.index)),
                         to_sexpr(u.formula)});
}

}  // namespace

std::string_view Sexpr::head() const {
  if (!is_list || items.empty() || items[0].is_list) return "";
  return items[0].atom;
}

Sexpr read_sexpr(std::string_view text) {
  Reader r(text);
  Sexpr s = r.read();
  if (!r.at_end()) throw ParseError("trailing input after the toplevel form");
  return s;
}

std::string print_sexpr(const Sexpr& s) {
  if (!s.is_list) return s.atom;
  std::string out = "(";
  for (std::size_t i = 0; i < s.items.size(); ++i) {
    if (i > 0) out += ' ';
    out += print_sexpr(s.items[i]);
  }
  return out + ")";
}

Sexpr to_sexpr(const Type& t) {
  switch (t.kind()) {
    case TypeKind::kVar: return form("tvar", {sym(t.name())});
    case TypeKind::kBool: return form("bool");
    case TypeKind::kNat: return form("nat");
    case TypeKind::kList: return form("list", {to_sexpr(t.arg(0))});
    case TypeKind::kArrow:
      return form("arrow", {to_sexpr(t.arg(0)), to_sexpr(t.arg(1))});
    case TypeKind::kProd:
      return form("prod", {to_sexpr(t.arg(0)), to_sexpr(t.arg(1))});
  }
  throw ParseError("unknown type");
}

Type type_from_sexpr(const Sexpr& s) {
  std::string_view h = s.head();
  if (h == "bool" && s.items.size() == 1) return Type::boolean();
  if (h == "nat" && s.items.size() == 1) return Type::nat();
  if (h == "tvar") return Type::var(atom_of(args(s, 1, "type")[1], "a name"));
  if (h == "list") return Type::list(type_from_sexpr(args(s, 1, "type")[1]));
  if (h == "arrow" || h == "prod") {
    const auto& xs = args(s, 2, "type");
    Type a = type_from_sexpr(xs[1]);
    Type b = type_from_sexpr(xs[2]);
    return h == "arrow" ? Type::arrow(a, b) : Type::prod(a, b);
  }
  throw ParseError("unknown type form: " + print_sexpr(s));
}

Sexpr to_sexpr(const Term& t) {
  switch (t.kind()) {
    case TermKind::kVar: return var_sexpr(t.variable());
    case TermKind::kApp: return form("app", {to_sexpr(t.fun()), to_sexpr(t.arg())});
    case TermKind::kLam:
      return form("lam", {var_sexpr(t.variable()), to_sexpr(t.body())});
    case TermKind::kConst:
      for (const ConstName& c : kConstNames) {
        if (c.tag != t.tag()) continue;
        std::vector<Sexpr> ps;
        for (const Type& p : t.params()) ps.push_back(to_sexpr(p));
        return form(std::string(c.name), std::move(ps));
      }
  }
  throw ParseError("unknown term");
}

Term term_from_sexpr(const Sexpr& s) {
  std::string_view h = s.head();
  if (h == "var") return Term::var(var_from_sexpr(s));
  if (h == "app") {
    const auto& xs = args(s, 2, "application");
    return Term::app(term_from_sexpr(xs[1]), term_from_sexpr(xs[2]));
  }
  if (h == "lam") {
    const auto& xs = args(s, 2, "abstraction");
    return Term::lam(var_from_sexpr(xs[1]), term_from_sexpr(xs[2]));
  }
  for (const ConstName& c : kConstNames) {
    if (c.name != h) continue;
    const auto& xs = args(s, c.params, "constant");
    std::vector<Type> ps;
    for (std::size_t i = 1; i < xs.size(); ++i) ps.push_back(type_from_sexpr(xs[i]));
    return Term::constant(c.tag, std::move(ps));
  }
  throw ParseError("unknown term form: " + print_sexpr(s));
}

Sexpr to_sexpr(const Formula& a) {
  switch (a.kind()) {
    case FormulaKind::kBot: return form("bot");
    case FormulaKind::kAtom: return form("atom", {to_sexpr(a.term())});
    case FormulaKind::kImp:
      return form("imp", {to_sexpr(a.left()), to_sexpr(a.right())});
    case FormulaKind::kAnd:
      return form("and", {to_sexpr(a.left()), to_sexpr(a.right())});
    case FormulaKind::kOr:
      return form("or", {to_sexpr(a.left()), to_sexpr(a.right())});
    case FormulaKind::kAll:
      return form("all", {var_sexpr(a.bound()), to_sexpr(a.body())});
    case FormulaKind::kEx:
      return form("ex", {var_sexpr(a.bound()), to_sexpr(a.body())});
  }
  throw ParseError("unknown formula");
}

Formula formula_from_sexpr(const Sexpr& s) {
  std::string_view h = s.head();
  if (h == "bot" && s.items.size() == 1) return F::bot();
  if (h == "atom") return F::atom(term_from_sexpr(args(s, 1, "atom")[1]));
  if (h == "imp" || h == "and" || h == "or") {
    const auto& xs = args(s, 2, "formula");
    F l = formula_from_sexpr(xs[1]);
    F r = formula_from_sexpr(xs[2]);
    if (h == "imp") return F::imp(l, r);
    return h == "and" ? F::conj(l, r) : F::disj(l, r);
  }
  if (h == "all" || h == "ex") {
    const auto& xs = args(s, 2, "quantifier");
    ObjVar x = var_from_sexpr(xs[1]);
    F body = formula_from_sexpr(xs[2]);
    return h == "all" ? F::all(x, body) : F::ex(x, body);
  }
  throw ParseError("unknown formula form: " + print_sexpr(s));
}

Sexpr to_sexpr(const Proof& m) {
  switch (m.rule()) {
    case Rule::kAssume: return assumption_sexpr(m.assumption());
    case Rule::kAxiom: {
      const AxiomId& id = m.axiom_id();
      std::vector<Sexpr> xs{sym(std::string(axiom_name(id.kind)))};
      std::size_t v = 0, f = 0;
      for (char slot : axiom_slots(id.kind)) {
        if (slot == 'V') xs.push_back(var_sexpr(id.vars.at(v++)));
        if (slot == 'F') xs.push_back(to_sexpr(id.formulas.at(f++)));
        if (slot == 'T') xs.push_back(to_sexpr(*id.term));
      }
      return form("axiom", std::move(xs));
    }
    case Rule::kAndIntro:
      return form("pair-pf", {to_sexpr(m.premise(0)), to_sexpr(m.premise(1))});
    case Rule::kProj:
      return form(m.side() == 0 ? "proj0" : "proj1", {to_sexpr(m.premise(0))});
    case Rule::kImpElim:
      return form("app-pf", {to_sexpr(m.premise(0)), to_sexpr(m.premise(1))});
    case Rule::kImpIntro:
      return form("lam-pf",
                  {assumption_sexpr(m.assumption()), to_sexpr(m.premise(0))});
    case Rule::kAllElim:
      return form("inst", {to_sexpr(m.premise(0)), to_sexpr(m.term())});
    case Rule::kAllIntro:
      return form("gen", {var_sexpr(m.eigenvariable()), to_sexpr(m.premise(0))});
  }
  throw ParseError("unknown proof rule");
}

Proof proof_from_sexpr(const Sexpr& s, TheoryId th) {
  std::string_view h = s.head();
  if (h == "assume") return Proof::assume(assumption_from_sexpr(s));
  if (h == "axiom") {
    if (s.items.size() < 2) throw ParseError("axiom without a name");
    const std::string& name = atom_of(s.items[1], "an axiom name");
    auto kind = parse_axiom_name(name);
    if (!kind) throw ParseError("unknown axiom: " + name);
    std::string_view slots = axiom_slots(*kind);
    const auto& xs = args(s, slots.size() + 1, "axiom");
    std::vector<ObjVar> vs;
    std::vector<F> fs;
    std::vector<Term> ts;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      const Sexpr& p = xs[i + 2];
      if (slots[i] == 'V') vs.push_back(var_from_sexpr(p));
      if (slots[i] == 'F') fs.push_back(formula_from_sexpr(p));
      if (slots[i] == 'T') ts.push_back(term_from_sexpr(p));
    }
    return Proof::axiom(axiom_from_parts(*kind, vs, fs, ts), th);
  }
  if (h == "pair-pf" || h == "app-pf") {
    const auto& xs = args(s, 2, "proof");
    Proof a = proof_from_sexpr(xs[1], th);
    Proof b = proof_from_sexpr(xs[2], th);
    return h == "pair-pf" ? Proof::and_intro(a, b) : Proof::imp_elim(a, b);
  }
  if (h == "proj0" || h == "proj1") {
    return Proof::proj(h == "proj0" ? 0 : 1,
                       proof_from_sexpr(args(s, 1, "projection")[1], th));
  }
  if (h == "lam-pf") {
    const auto& xs = args(s, 2, "proof abstraction");
    return Proof::imp_intro(assumption_from_sexpr(xs[1]),
                            proof_from_sexpr(xs[2], th));
  }
  if (h == "inst") {
    const auto& xs = args(s, 2, "instantiation");
    Proof m = proof_from_sexpr(xs[1], th);
    Term t = term_from_sexpr(xs[2]);
    NameSupply supply = supply_after(m);
    note_indices(t, supply);
    return Proof::all_elim(m, t, supply);
  }
  if (h == "gen") {
    const auto& xs = args(s, 2, "generalization");
    return Proof::all_intro(var_from_sexpr(xs[1]), proof_from_sexpr(xs[2], th));
  }
  throw ParseError("unknown proof form: " + print_sexpr(s));
}

std::string print(const Term& t) { return print_sexpr(to_sexpr(t)); }
std::string print(const Formula& a) { return print_sexpr(to_sexpr(a)); }
std::string print(const Proof& m) { return print_sexpr(to_sexpr(m)); }

Formula parse_formula(std::string_view text) {
  return formula_from_sexpr(read_sexpr(text));
}

Proof parse_proof(std::string_view text, TheoryId th) {
  return proof_from_sexpr(read_sexpr(text), th);
}

}  // namespace natded
