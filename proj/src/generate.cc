#include "natded/generate.h"

#include <functional>

#include "natded/error.h"

namespace natded {
namespace {

bool mentions_bot(const Proof& m) {
  if (m.conclusion().has_bot()) return true;
  for (const Proof& k : m.premises()) {
    if (mentions_bot(k)) return true;
  }
  return false;
}

}  // namespace

const std::vector<ObjVar>& generator_variables() {
  static const std::vector<ObjVar> kVars{
      {"b", 0, Type::boolean()},
      {"c", 0, Type::boolean()},
      {"n", 0, Type::nat()},
  };
  return kVars;
}

std::vector<Term> default_atom_pool() {
  const auto& v = generator_variables();
  ObjVar p{"p", 0, Type::boolean()};
  ObjVar m{"m", 0, Type::nat()};
  ObjVar f{"f", 0, Type::arrow(Type::nat(), Type::boolean())};
  return {
      Term::tt(),
      Term::ff(),
      Term::var(v[0]),
      Term::var(v[1]),
      Term::var(p),
      Term::app(Term::var(f), Term::var(v[2])),
      Term::app(Term::var(f), Term::var(m)),
  };
}

Generator::Generator(GenConfig cfg)
    : cfg_(std::move(cfg)), rng_(cfg_.seed), supply_(100) {
  if (cfg_.atom_pool.empty()) cfg_.atom_pool = default_atom_pool();
  for (const Term& t : cfg_.atom_pool) note_indices(t, supply_);
}

std::size_t Generator::uniform(std::size_t n) {
  std::uniform_int_distribution<std::size_t> d(0, n - 1);
  return d(rng_);
}

bool Generator::chance(double p) {
  std::bernoulli_distribution d(p);
  return d(rng_);
}

Formula Generator::leaf(bool allow_bot) {
  if (allow_bot && chance(0.3)) return Formula::bot();
  return Formula::atom(cfg_.atom_pool[uniform(cfg_.atom_pool.size())]);
}

Formula Generator::gen(std::size_t budget, bool allow_bot, bool allow_strong) {
  if (budget <= 1 || chance(0.25)) return leaf(allow_bot);
  enum Op { kImp, kAnd, kAll, kOr, kEx };
  std::vector<std::pair<Op, int>> ops{{kImp, 5}, {kAnd, 2}, {kAll, 3}};
  if (allow_strong) {
    ops.push_back({kOr, 2});
    ops.push_back({kEx, 2});
  }
  int total = 0;
  for (const auto& [op, w] : ops) total += w;
  int pick = static_cast<int>(uniform(static_cast<std::size_t>(total)));
  Op op = kImp;
  for (const auto& [o, w] : ops) {
    if (pick < w) {
      op = o;
      break;
    }
    pick -= w;
  }
  const auto& vars = generator_variables();
  switch (op) {
    case kAll:
    case kEx: {
      const ObjVar& x = vars[uniform(vars.size())];
      Formula body = gen(budget - 1, allow_bot, allow_strong);
      return op == kAll ? Formula::all(x, body) : Formula::ex(x, body);
    }
    default: {
      if (budget < 3) return leaf(allow_bot);
      std::size_t left_budget = 1 + uniform(budget - 2);
      Formula l = gen(left_budget, allow_bot, allow_strong);
      Formula r = gen(budget - 1 - l.size(), allow_bot, allow_strong);
      if (op == kImp) return Formula::imp(l, r);
      if (op == kAnd) return Formula::conj(l, r);
      return Formula::disj(l, r);
    }
  }
}

Formula Generator::formula() { return formula(cfg_.max_size); }

Formula Generator::formula(std::size_t max_size) {
  bool bot = cfg_.language == TheoryId::kMA;
  bool strong =
      cfg_.language == TheoryId::kHA || cfg_.language == TheoryId::kPA;
  std::size_t budget = 1 + uniform(std::max<std::size_t>(max_size, 1));
  return gen(budget, bot, strong);
}

Formula Generator::formula_with_bot(std::size_t max_size) {
  for (;;) {
    std::size_t budget = 1 + uniform(std::max<std::size_t>(max_size, 1));
    Formula a = gen(budget, true, false);
    if (a.has_bot()) return a;
  }
}

Formula Generator::q_formula(std::size_t max_size) {
  std::function<Formula(std::size_t)> go = [&](std::size_t budget) -> Formula {
    if (budget <= 1 || chance(0.25)) {
      return Formula::atom(cfg_.atom_pool[uniform(cfg_.atom_pool.size())]);
    }
    std::size_t op = uniform(4);
    if (op == 3) {
      const ObjVar& x = generator_variables()[uniform(2)];
      return Formula::all(x, go(budget - 1));
    }
    if (budget < 3) return go(1);
    std::size_t left_budget = 1 + uniform(budget - 2);
    Formula l = go(left_budget);
    Formula r = go(budget - 1 - l.size());
    return op == 2 ? Formula::conj(l, r) : Formula::imp(l, r);
  };
  return go(1 + uniform(std::max<std::size_t>(max_size, 1)));
}

Term Generator::pool_term(const Type& ty) {
  std::vector<Term> options;
  if (ty.is_bool()) {
    options = {Term::tt(), Term::ff()};
    for (const ObjVar& v : generator_variables()) {
      if (v.ty.is_bool()) options.push_back(Term::var(v));
    }
  } else if (ty == Type::nat()) {
    options = {Term::zero(),
               Term::app(Term::constant(ConstTag::kSucc), Term::zero())};
    for (const ObjVar& v : generator_variables()) {
      if (v.ty == Type::nat()) options.push_back(Term::var(v));
    }
  } else {
    throw TypeError("no pool terms of type " + ty.to_string());
  }
  return options[uniform(options.size())];
}

Proof Generator::ma_proof_with_bot(std::size_t steps) {
  for (;;) {
    Proof m = ma_proof_attempt(steps);
    if (mentions_bot(m)) return m;
  }
}

Proof Generator::ma_proof_attempt(std::size_t steps) {
  const TheoryId th = TheoryId::kMA;
  std::vector<Proof> pool;
  auto new_assumption = [&](Formula a) {
    AssumptionVar u{"u", supply_.draw(), std::move(a)};
    pool.push_back(Proof::assume(u));
    return pool.back();
  };
  auto random_formula = [&] { return gen(1 + uniform(5), true, false); };
  auto pick = [&]() -> const Proof& { return pool[uniform(pool.size())]; };

  new_assumption(random_formula());
  new_assumption(chance(0.5) ? Formula::bot() : random_formula());
  pool.push_back(Proof::axiom(AxiomId::truth(), th));
  if (chance(0.5)) pool.push_back(Proof::axiom(AxiomId::bot_plus(), th));

  for (std::size_t i = 0; i < steps; ++i) {
    switch (uniform(8)) {
      case 0:
        new_assumption(random_formula());
        break;
      case 1:
        pool.push_back(Proof::and_intro(pick(), pick()));
        break;
      case 2: {
        Proof m = pick();
        if (m.conclusion().is(FormulaKind::kAnd)) {
          pool.push_back(Proof::proj(static_cast<int>(uniform(2)), m));
        }
        break;
      }
      case 3: {
        Proof f = pick();
        if (!f.conclusion().is(FormulaKind::kImp)) break;
        std::optional<Proof> arg;
        for (const Proof& p : pool) {
          if (alpha_eq(p.conclusion(), f.conclusion().left())) {
            arg = p;
            break;
          }
        }
        if (!arg) arg = new_assumption(f.conclusion().left());
        pool.push_back(Proof::imp_elim(f, *arg));
        break;
      }
      case 4:
      case 5: {
        Proof m = pick();
        const AssumptionMap& free = m.free_assumptions();
        AssumptionVar u;
        if (!free.empty() && chance(0.7)) {
          auto it = free.begin();
          std::advance(it, static_cast<long>(uniform(free.size())));
          u = it->second;
        } else {
          u = {"u", supply_.draw(), random_formula()};
        }
        pool.push_back(Proof::imp_intro(u, m));
        break;
      }
      case 6: {
        Proof m = pick();
        const Formula& c = m.conclusion();
        if (c.is(FormulaKind::kAll)) {
          pool.push_back(Proof::all_elim(m, pool_term(c.bound().ty), supply_));
        } else if (chance(0.5)) {
          const ObjVar& b = generator_variables()[uniform(2)];
          pool.push_back(
              Proof::axiom(AxiomId::bool_cases(b, random_formula()), th));
        }
        break;
      }
      case 7: {
        Proof m = pick();
        const auto& vars = generator_variables();
        const ObjVar& x = vars[uniform(vars.size())];
        bool blocked = false;
        for (const auto& [key, u] : m.free_assumptions()) {
          if (u.formula.occurs_free(x)) blocked = true;
        }
        if (!blocked) pool.push_back(Proof::all_intro(x, m));
        break;
      }
    }
  }
  // Prefer recent, larger proofs.
  std::size_t from = pool.size() > 4 ? pool.size() - 4 : 0;
  return pool[from + uniform(pool.size() - from)];
}

Formula gen_formula(const GenConfig& cfg) { return Generator(cfg).formula(); }

}  // namespace natded
