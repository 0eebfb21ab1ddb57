#include "natded/classes.h"

#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "builder.h"
#include "natded/derived.h"
#include "natded/error.h"

namespace natded {
namespace {

using detail::Builder;
using F = Formula;

Formula instance(const Formula& body, const ObjVar& x, const Term& t) {
  // t is closed, so no binder of body needs renaming.
  NameSupply supply;
  return subst_formula_var(body, x, t, supply);
}

bool q_member(const Formula& a) {
  switch (a.kind()) {
    case FormulaKind::kAtom:
      return true;
    case FormulaKind::kImp:
    case FormulaKind::kAnd:
      return q_member(a.left()) && q_member(a.right());
    case FormulaKind::kAll:
      return a.bound().ty.is_bool() &&
             q_member(instance(a.body(), a.bound(), Term::tt())) &&
             q_member(instance(a.body(), a.bound(), Term::ff()));
    default:
      return false;
  }
}

struct Flags {
  bool q = false;
  bool qf = false;
  bool d = false;
  bool g = false;
  bool r = false;
  bool i = false;

  bool get(ClassId c) const {
    switch (c) {
      case ClassId::kQ:
        return q;
      case ClassId::kQF:
        return qf;
      case ClassId::kDefinite:
        return d;
      case ClassId::kGoal:
        return g;
      case ClassId::kRelevant:
        return r;
      case ClassId::kIrrelevant:
        return i;
    }
    return false;
  }
};

class Classifier {
 public:
  const Flags& flags(const Formula& a) {
    std::string key = canonical_key(a);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Flags f = compute(a);
    return memo_.emplace(std::move(key), f).first->second;
  }

 private:
  Flags compute(const Formula& a) {
    Flags out;
    switch (a.kind()) {
      case FormulaKind::kBot:
        out.d = out.g = out.r = true;
        break;
      case FormulaKind::kAtom:
        out.d = out.g = out.i = true;
        out.r = a.term().is_const(ConstTag::kTt);
        break;
      case FormulaKind::kImp: {
        Flags l = flags(a.left());
        Flags r = flags(a.right());
        out.d = (l.i && r.d) || (l.g && r.r);
        out.g = ((l.r || (l.d && l.qf)) && r.g) || (l.d && r.i);
        out.r = l.g && r.r;
        out.i = l.d && r.i;
        break;
      }
      case FormulaKind::kAnd: {
        Flags l = flags(a.left());
        Flags r = flags(a.right());
        out.d = l.d && r.d;
        out.g = l.g && r.g;
        out.r = l.r && r.r;
        out.i = l.i && r.i;
        break;
      }
      case FormulaKind::kAll: {
        Flags b = flags(a.body());
        out.d = b.d || b.r;
        out.r = b.r;
        out.i = b.i;
        out.g = b.i || (a.bound().ty.is_bool() &&
                         flags(instance(a.body(), a.bound(), Term::tt())).g &&
                         flags(instance(a.body(), a.bound(), Term::ff())).g);
        break;
      }
      case FormulaKind::kOr:
      case FormulaKind::kEx:
        throw LanguageError("formula classes are defined for MA formulas only");
    }
    out.q = q_member(a);
    out.qf = q_member(subst_bot_false(a));
    return out;
  }

  std::unordered_map<std::string, Flags> memo_;
};

// Certificates by simultaneous recursion over the four properties.
class Certifier {
 public:
  Certifier(const Formula& root, SubcaseOrder order)
      : supply_(supply_after({&root})),
        bld_(supply_, TheoryId::kMA),
        order_(order) {}

  Classifier& classifier() { return classes_; }

  std::optional<Proof> cert(const Formula& a, ClassId c) {
    if (!classes_.flags(a).get(c)) return std::nullopt;
    auto key = std::make_pair(canonical_key(a), c);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Proof m = build(a, c);
    if (!alpha_eq(m.conclusion(), certificate_target(a, c)) || !m.closed() ||
        !theory_leq(m.min_theory(), TheoryId::kMA)) {
      throw std::logic_error("certificate synthesis produced an unexpected proof");
    }
    memo_.emplace(key, m);
    return m;
  }

 private:
  Proof need(const Formula& a, ClassId c) { return *cert(a, c); }

  // Picks among applicable subcases according to the order.
  int choose(std::initializer_list<bool> applicable) {
    int chosen = -1;
    int idx = 0;
    for (bool ok : applicable) {
      if (ok) {
        chosen = idx;
        if (order_ == SubcaseOrder::kFirst) return chosen;
      }
      ++idx;
    }
    if (chosen < 0) throw std::logic_error("no applicable subcase");
    return chosen;
  }

  const Flags& fl(const Formula& a) { return classes_.flags(a); }

  Proof efq(const Formula& a) { return prove_efq(a, TheoryId::kMA); }
  Proof bot_plus() { return bld_.ax(AxiomId::bot_plus()); }
  Proof identity(const Formula& a) {
    return bld_.lam(a, [](Proof u) { return u; });
  }

  Proof build(const Formula& a, ClassId c) {
    switch (c) {
      case ClassId::kQ:
        return prove_case_distinction(a, F::bot(), TheoryId::kMA);
      case ClassId::kQF:
        return prove_case_distinction(subst_bot_false(a), F::bot(),
                                      TheoryId::kMA);
      case ClassId::kDefinite:
        return definite(a);
      case ClassId::kGoal:
        return goal(a);
      case ClassId::kRelevant:
        return relevant(a);
      case ClassId::kIrrelevant:
        return irrelevant(a);
    }
    throw std::logic_error("unknown class");
  }

  // A^F -> A
  Proof definite(const Formula& a) {
    Builder& b = bld_;
    switch (a.kind()) {
      case FormulaKind::kBot:
        return bot_plus();
      case FormulaKind::kAtom:
        return identity(a);
      case FormulaKind::kImp: {
        const Formula& p = a.left();
        const Formula& q = a.right();
        Formula pf = subst_bot_false(p);
        Formula qf = subst_bot_false(q);
        int sub = choose({fl(p).i && fl(q).d, fl(p).g && fl(q).r});
        if (sub == 0) {
          Proof i_p = need(p, ClassId::kIrrelevant);
          Proof d_q = need(q, ClassId::kDefinite);
          return b.lam(F::imp(pf, qf), [&](Proof f) {
            return b.lam(p, [&](Proof x) {
              return b.app(d_q, b.app(f, b.app(i_p, x)));
            });
          });
        }
        Proof g_p = need(p, ClassId::kGoal);
        Proof r_q = need(q, ClassId::kRelevant);
        return b.lam(F::imp(pf, qf), [&](Proof f) {
          return b.lam(p, [&](Proof x) {
            return b.app(r_q, b.lam(F::neg(qf), [&](Proof nq) {
              return b.app(b.app(g_p, x), b.lam(pf, [&](Proof y) {
                return b.app(bot_plus(), b.app(nq, b.app(f, y)));
              }));
            }));
          });
        });
      }
      case FormulaKind::kAnd: {
        Proof d_l = need(a.left(), ClassId::kDefinite);
        Proof d_r = need(a.right(), ClassId::kDefinite);
        return b.lam(subst_bot_false(a), [&](Proof p) {
          return b.pair(b.app(d_l, b.fst(p)), b.app(d_r, b.snd(p)));
        });
      }
      case FormulaKind::kAll: {
        const ObjVar& x = a.bound();
        const Formula& body = a.body();
        Formula bf = subst_bot_false(body);
        int sub = choose({fl(body).d, fl(body).r});
        if (sub == 0) {
          Proof d_b = need(body, ClassId::kDefinite);
          return b.lam(F::all(x, bf), [&](Proof h) {
            return b.gen(x, b.app(d_b, b.inst(h, Term::var(x))));
          });
        }
        Proof r_b = need(body, ClassId::kRelevant);
        return b.lam(F::all(x, bf), [&](Proof h) {
          return b.gen(x, b.app(r_b, b.lam(F::neg(bf), [&](Proof na) {
            return b.app(bot_plus(), b.app(na, b.inst(h, Term::var(x))));
          })));
        });
      }
      default:
        break;
    }
    throw std::logic_error("definite certificate for a non-member");
  }

  // A -> (A^F -> bot) -> bot
  Proof goal(const Formula& a) {
    Builder& b = bld_;
    const Formula bot = F::bot();
    Formula af = subst_bot_false(a);
    switch (a.kind()) {
      case FormulaKind::kBot:
        return b.lam(a, [&](Proof u) {
          return b.lam(F::imp(af, bot), [&](Proof) { return u; });
        });
      case FormulaKind::kAtom:
        return b.lam(a, [&](Proof u) {
          return b.lam(F::imp(af, bot), [&](Proof v) { return b.app(v, u); });
        });
      case FormulaKind::kImp: {
        const Formula& p = a.left();
        const Formula& q = a.right();
        Formula pf = subst_bot_false(p);
        Formula qf = subst_bot_false(q);
        const Flags& fp = fl(p);
        const Flags& fq = fl(q);
        int sub = choose({fp.r && fq.g, fp.d && fp.qf && fq.g, fp.d && fq.i});
        // From ~P^F and k : (P^F -> Q^F) -> bot, derive bot.
        auto refute = [&](Proof k, Proof np) {
          Proof efq_q = efq(qf);
          return b.app(k, b.lam(pf, [&](Proof y) {
            return b.app(efq_q, b.app(np, y));
          }));
        };
        if (sub == 0) {
          Proof r_p = need(p, ClassId::kRelevant);
          Proof g_q = need(q, ClassId::kGoal);
          return b.lam(a, [&](Proof f) {
            return b.lam(F::imp(af, bot), [&](Proof k) {
              Proof pa = b.app(r_p, b.lam(F::neg(pf), [&](Proof np) {
                return refute(k, np);
              }));
              Proof kq = b.lam(qf, [&](Proof z) {
                return b.app(k, b.lam(pf, [&](Proof) { return z; }));
              });
              return b.app(b.app(g_q, b.app(f, pa)), kq);
            });
          });
        }
        if (sub == 1) {
          Proof d_p = need(p, ClassId::kDefinite);
          Proof g_q = need(q, ClassId::kGoal);
          Proof cases = prove_case_distinction(pf, bot, TheoryId::kMA);
          return b.lam(a, [&](Proof f) {
            return b.lam(F::imp(af, bot), [&](Proof k) {
              Proof pos = b.lam(pf, [&](Proof y) {
                Proof kq = b.lam(qf, [&](Proof z) {
                  return b.app(k, b.lam(pf, [&](Proof) { return z; }));
                });
                return b.app(b.app(g_q, b.app(f, b.app(d_p, y))), kq);
              });
              Proof neg = b.lam(F::neg(pf), [&](Proof np) {
                return refute(k, np);
              });
              return b.app(cases, {pos, neg});
            });
          });
        }
        Proof d_p = need(p, ClassId::kDefinite);
        Proof i_q = need(q, ClassId::kIrrelevant);
        return b.lam(a, [&](Proof f) {
          return b.lam(F::imp(af, bot), [&](Proof k) {
            return b.app(k, b.lam(pf, [&](Proof y) {
              return b.app(i_q, b.app(f, b.app(d_p, y)));
            }));
          });
        });
      }
      case FormulaKind::kAnd: {
        const Formula& l = a.left();
        const Formula& r = a.right();
        Proof g_l = need(l, ClassId::kGoal);
        Proof g_r = need(r, ClassId::kGoal);
        return b.lam(a, [&](Proof p) {
          return b.lam(F::imp(af, bot), [&](Proof k) {
            return b.app(b.app(g_l, b.fst(p)),
                         b.lam(subst_bot_false(l), [&](Proof x) {
                           return b.app(b.app(g_r, b.snd(p)),
                                        b.lam(subst_bot_false(r), [&](Proof y) {
                                          return b.app(k, b.pair(x, y));
                                        }));
                         }));
          });
        });
      }
      case FormulaKind::kAll: {
        const ObjVar& x = a.bound();
        const Formula& body = a.body();
        Formula bf = subst_bot_false(body);
        bool bool_split = x.ty.is_bool() &&
                          fl(instance(body, x, Term::tt())).g &&
                          fl(instance(body, x, Term::ff())).g;
        int sub = choose({fl(body).i, bool_split});
        if (sub == 0) {
          Proof i_b = need(body, ClassId::kIrrelevant);
          return b.lam(a, [&](Proof h) {
            return b.lam(F::imp(af, bot), [&](Proof k) {
              return b.app(k, b.gen(x, b.app(i_b, b.inst(h, Term::var(x)))));
            });
          });
        }
        Formula on_tt = instance(body, x, Term::tt());
        Formula on_ff = instance(body, x, Term::ff());
        Proof g_tt = need(on_tt, ClassId::kGoal);
        Proof g_ff = need(on_ff, ClassId::kGoal);
        return b.lam(a, [&](Proof h) {
          return b.lam(F::imp(af, bot), [&](Proof k) {
            Proof inner = b.lam(subst_bot_false(on_tt), [&](Proof t) {
              return b.app(
                  b.app(g_ff, b.inst(h, Term::ff())),
                  b.lam(subst_bot_false(on_ff), [&](Proof f) {
                    Proof cases = b.inst(b.ax(AxiomId::bool_cases(x, bf)),
                                         Term::var(x));
                    return b.app(k, b.gen(x, b.app(cases, {t, f})));
                  }));
            });
            return b.app(b.app(g_tt, b.inst(h, Term::tt())), inner);
          });
        });
      }
      default:
        break;
    }
    throw std::logic_error("goal certificate for a non-member");
  }

  // (~A^F -> bot) -> A
  Proof relevant(const Formula& a) {
    Builder& b = bld_;
    const Formula bot = F::bot();
    Formula af = subst_bot_false(a);
    Formula hyp = F::imp(F::neg(af), bot);
    switch (a.kind()) {
      case FormulaKind::kBot:
        return b.lam(hyp, [&](Proof h) {
          return b.app(h, identity(F::falsity()));
        });
      case FormulaKind::kAtom:
        return b.lam(hyp, [&](Proof) { return b.truth(); });
      case FormulaKind::kImp: {
        const Formula& p = a.left();
        const Formula& q = a.right();
        Formula pf = subst_bot_false(p);
        Formula qf = subst_bot_false(q);
        Proof g_p = need(p, ClassId::kGoal);
        Proof r_q = need(q, ClassId::kRelevant);
        return b.lam(hyp, [&](Proof h) {
          return b.lam(p, [&](Proof x) {
            return b.app(r_q, b.lam(F::neg(qf), [&](Proof nq) {
              return b.app(b.app(g_p, x), b.lam(pf, [&](Proof y) {
                return b.app(h, b.lam(af, [&](Proof g) {
                  return b.app(nq, b.app(g, y));
                }));
              }));
            }));
          });
        });
      }
      case FormulaKind::kAnd: {
        Formula lf = subst_bot_false(a.left());
        Formula rf = subst_bot_false(a.right());
        Proof r_l = need(a.left(), ClassId::kRelevant);
        Proof r_r = need(a.right(), ClassId::kRelevant);
        return b.lam(hyp, [&](Proof h) {
          Proof left = b.app(r_l, b.lam(F::neg(lf), [&](Proof nl) {
            return b.app(h, b.lam(af, [&](Proof q) {
              return b.app(nl, b.fst(q));
            }));
          }));
          Proof right = b.app(r_r, b.lam(F::neg(rf), [&](Proof nr) {
            return b.app(h, b.lam(af, [&](Proof q) {
              return b.app(nr, b.snd(q));
            }));
          }));
          return b.pair(left, right);
        });
      }
      case FormulaKind::kAll: {
        const ObjVar& x = a.bound();
        Formula bf = subst_bot_false(a.body());
        Proof r_b = need(a.body(), ClassId::kRelevant);
        return b.lam(hyp, [&](Proof h) {
          return b.gen(x, b.app(r_b, b.lam(F::neg(bf), [&](Proof na) {
            return b.app(h, b.lam(af, [&](Proof q) {
              return b.app(na, b.inst(q, Term::var(x)));
            }));
          })));
        });
      }
      default:
        break;
    }
    throw std::logic_error("relevant certificate for a non-member");
  }

  // A -> A^F
  Proof irrelevant(const Formula& a) {
    Builder& b = bld_;
    switch (a.kind()) {
      case FormulaKind::kAtom:
        return identity(a);
      case FormulaKind::kImp: {
        Formula pf = subst_bot_false(a.left());
        Proof d_p = need(a.left(), ClassId::kDefinite);
        Proof i_q = need(a.right(), ClassId::kIrrelevant);
        return b.lam(a, [&](Proof f) {
          return b.lam(pf, [&](Proof y) {
            return b.app(i_q, b.app(f, b.app(d_p, y)));
          });
        });
      }
      case FormulaKind::kAnd: {
        Proof i_l = need(a.left(), ClassId::kIrrelevant);
        Proof i_r = need(a.right(), ClassId::kIrrelevant);
        return b.lam(a, [&](Proof p) {
          return b.pair(b.app(i_l, b.fst(p)), b.app(i_r, b.snd(p)));
        });
      }
      case FormulaKind::kAll: {
        const ObjVar& x = a.bound();
        Proof i_b = need(a.body(), ClassId::kIrrelevant);
        return b.lam(a, [&](Proof h) {
          return b.gen(x, b.app(i_b, b.inst(h, Term::var(x))));
        });
      }
      default:
        break;
    }
    throw std::logic_error("irrelevant certificate for a non-member");
  }

  NameSupply supply_;
  Builder bld_;
  SubcaseOrder order_;
  Classifier classes_;
  std::map<std::pair<std::string, ClassId>, Proof> memo_;
};

void require_ma(const Formula& a) {
  if (!in_language(a, TheoryId::kMA)) {
    throw LanguageError("formula classes are defined for MA formulas only");
  }
}

}  // namespace

std::string_view class_name(ClassId c) {
  switch (c) {
    case ClassId::kQ:
      return "Q";
    case ClassId::kQF:
      return "QF";
    case ClassId::kDefinite:
      return "D";
    case ClassId::kGoal:
      return "G";
    case ClassId::kRelevant:
      return "R";
    case ClassId::kIrrelevant:
      return "I";
  }
  return "?";
}

bool in_Q(const Formula& a) { return q_member(a); }

bool ClassReport::holds(ClassId c) const {
  switch (c) {
    case ClassId::kQ:
      return in_Q;
    case ClassId::kQF:
      return in_QF;
    case ClassId::kDefinite:
      return in_D;
    case ClassId::kGoal:
      return in_G;
    case ClassId::kRelevant:
      return in_R;
    case ClassId::kIrrelevant:
      return in_I;
  }
  return false;
}

ClassReport classify(const Formula& a, bool with_certificates) {
  require_ma(a);
  Certifier certs(a, SubcaseOrder::kFirst);
  const Flags f = certs.classifier().flags(a);
  ClassReport report;
  report.in_Q = f.q;
  report.in_QF = f.qf;
  report.in_D = f.d;
  report.in_G = f.g;
  report.in_R = f.r;
  report.in_I = f.i;
  if (with_certificates) {
    report.cert_D = certs.cert(a, ClassId::kDefinite);
    report.cert_G = certs.cert(a, ClassId::kGoal);
    report.cert_R = certs.cert(a, ClassId::kRelevant);
    report.cert_I = certs.cert(a, ClassId::kIrrelevant);
  }
  return report;
}

Formula certificate_target(const Formula& a, ClassId c) {
  const Formula bot = F::bot();
  Formula af = subst_bot_false(a);
  switch (c) {
    case ClassId::kQ:
      return case_distinction_target(a, bot);
    case ClassId::kQF:
      return case_distinction_target(af, bot);
    case ClassId::kDefinite:
      return F::imp(af, a);
    case ClassId::kGoal:
      return F::imps({a, F::imp(af, bot)}, bot);
    case ClassId::kRelevant:
      return F::imp(F::imp(F::neg(af), bot), a);
    case ClassId::kIrrelevant:
      return F::imp(a, af);
  }
  throw std::logic_error("unknown class");
}

std::optional<Proof> certify(const Formula& a, ClassId c, SubcaseOrder order) {
  require_ma(a);
  Certifier certs(a, order);
  return certs.cert(a, c);
}

DefiniteGap definite_gap_witness() {
  ObjVar x{"x", 0, Type::nat()};
  ObjVar f{"f", 0, Type::arrow(Type::nat(), Type::boolean())};
  F a = F::atom(Term::app(Term::var(f), Term::var(x)));
  F s = F::all(x, F::imp(F::neg(F::neg(a)), a));
  F t = F::imps({F::imp(F::all(x, a), F::bot())}, F::bot());
  F st = F::imp(s, t);

  NameSupply supply(1);
  Builder bld(supply, TheoryId::kMA);
  // lam h s k. k (gen x. s x (lam na. h s (lam q. na (q x))))
  Proof m = bld.lam(subst_bot_false(st), [&](Proof h) {
    return bld.lam(s, [&](Proof us) {
      return bld.lam(F::imp(F::all(x, a), F::bot()), [&](Proof k) {
        Proof ax = bld.app(bld.inst(us, Term::var(x)), bld.lam(F::neg(a), [&](Proof na) {
          return bld.app(h, {us, bld.lam(F::all(x, a), [&](Proof q) {
                               return bld.app(na, bld.inst(q, Term::var(x)));
                             })});
        }));
        return bld.app(k, bld.gen(x, ax));
      });
    });
  });
  return {st, m};
}

}  // namespace natded
