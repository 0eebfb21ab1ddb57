#include "natded/term.h"

#include <algorithm>

#include "natded/error.h"

namespace natded {

std::size_t const_arity(ConstTag tag) {
  switch (tag) {
    case ConstTag::kTt:
    case ConstTag::kFf:
    case ConstTag::kZero:
    case ConstTag::kSucc:
      return 0;
    case ConstTag::kNil:
    case ConstTag::kCons:
    case ConstTag::kCases:
    case ConstTag::kRecNat:
      return 1;
    case ConstTag::kPair:
    case ConstTag::kRecList:
      return 2;
    case ConstTag::kSplit:
      return 3;
  }
  return 0;
}

Type const_type(ConstTag tag, const std::vector<Type>& p) {
  if (p.size() != const_arity(tag)) {
    throw TypeError("constant expects " + std::to_string(const_arity(tag)) +
                    " type parameters, got " + std::to_string(p.size()));
  }
  const Type b = Type::boolean();
  const Type n = Type::nat();
  auto fn = [](std::initializer_list<Type> chain) {
    // right-nested arrows: a -> b -> ... -> z
    std::vector<Type> v(chain);
    Type out = v.back();
    for (std::size_t i = v.size() - 1; i-- > 0;) out = Type::arrow(v[i], out);
    return out;
  };
  switch (tag) {
    case ConstTag::kPair:
      return fn({p[0], p[1], Type::prod(p[0], p[1])});
    case ConstTag::kTt:
    case ConstTag::kFf:
      return b;
    case ConstTag::kZero:
      return n;
    case ConstTag::kSucc:
      return Type::arrow(n, n);
    case ConstTag::kNil:
      return Type::list(p[0]);
    case ConstTag::kCons:
      return fn({p[0], Type::list(p[0]), Type::list(p[0])});
    case ConstTag::kSplit:
      return fn({Type::prod(p[0], p[1]), fn({p[0], p[1], p[2]}), p[2]});
    case ConstTag::kCases:
      return fn({b, p[0], p[0], p[0]});
    case ConstTag::kRecNat:
      return fn({n, p[0], fn({n, p[0], p[0]}), p[0]});
    case ConstTag::kRecList: {
      const Type l = Type::list(p[0]);
      return fn({l, p[1], fn({p[0], l, p[1], p[1]}), p[1]});
    }
  }
  throw TypeError("unknown constant");
}

Term Term::var(ObjVar v) {
  Type ty = v.ty;
  VarSet free(v);
  return Term(std::make_shared<const Node>(
      Node{TermKind::kVar, std::move(v), ConstTag::kTt, {}, {}, std::move(ty),
           std::move(free)}));
}

Term Term::constant(ConstTag tag, std::vector<Type> params) {
  Type ty = const_type(tag, params);
  return Term(std::make_shared<const Node>(
      Node{TermKind::kConst, ObjVar{"", 0, ty}, tag, std::move(params), {},
           ty, VarSet()}));
}

Term Term::app(Term fun, Term arg) {
  const Type& ft = fun.type();
  if (!ft.is_arrow()) {
    throw TypeError("application of non-function of type " + ft.to_string());
  }
  if (!(ft.arg(0) == arg.type())) {
    throw TypeError("argument type " + arg.type().to_string() +
                    " does not match domain " + ft.arg(0).to_string());
  }
  Type ty = ft.arg(1);
  VarSet free = fun.free_vars();
  free.merge(arg.free_vars());
  return Term(std::make_shared<const Node>(
      Node{TermKind::kApp, ObjVar{"", 0, ty}, ConstTag::kTt, {},
           {std::move(fun), std::move(arg)}, ty, std::move(free)}));
}

Term Term::apps(Term fun, std::initializer_list<Term> args) {
  for (const Term& a : args) fun = app(std::move(fun), a);
  return fun;
}

Term Term::lam(ObjVar bound, Term body) {
  Type ty = Type::arrow(bound.ty, body.type());
  VarSet free = body.free_vars();
  free.erase(bound);
  return Term(std::make_shared<const Node>(
      Node{TermKind::kLam, std::move(bound), ConstTag::kTt, {},
           {std::move(body)}, std::move(ty), std::move(free)}));
}

namespace {

Term subst_impl(const Term& t, const ObjVar& x, const Term& s,
                NameSupply& supply) {
  if (!t.occurs_free(x)) return t;
  switch (t.kind()) {
    case TermKind::kVar:
      return s;
    case TermKind::kConst:
      return t;
    case TermKind::kApp:
      return Term::app(subst_impl(t.fun(), x, s, supply),
                       subst_impl(t.arg(), x, s, supply));
    case TermKind::kLam: {
      ObjVar y = t.variable();
      Term body = t.body();
      if (s.occurs_free(y)) {
        ObjVar fresh =
            fresh_avoiding(y, supply, {&s.free_vars(), &body.free_vars()});
        body = subst_impl(body, y, Term::var(fresh), supply);
        y = fresh;
      }
      return Term::lam(y, subst_impl(body, x, s, supply));
    }
  }
  return t;
}

using detail::binder_position;
using detail::BinderStack;

bool alpha_impl(const Term& a, const Term& b, BinderStack& sa,
                BinderStack& sb) {
  if (a.kind() != b.kind()) return false;
  if (sa.empty() && a.same_node(b)) return true;
  switch (a.kind()) {
    case TermKind::kVar: {
      long pa = binder_position(sa, a.variable());
      long pb = binder_position(sb, b.variable());
      if (pa != pb) return false;
      return pa >= 0 || a.variable() == b.variable();
    }
    case TermKind::kConst:
      return a.tag() == b.tag() && a.params() == b.params();
    case TermKind::kApp:
      return alpha_impl(a.fun(), b.fun(), sa, sb) &&
             alpha_impl(a.arg(), b.arg(), sa, sb);
    case TermKind::kLam: {
      if (!(a.variable().ty == b.variable().ty)) return false;
      sa.push_back(&a.variable());
      sb.push_back(&b.variable());
      bool eq = alpha_impl(a.body(), b.body(), sa, sb);
      sa.pop_back();
      sb.pop_back();
      return eq;
    }
  }
  return false;
}

void key_impl(const Term& t, BinderStack& stack, std::string& out) {
  switch (t.kind()) {
    case TermKind::kVar: {
      long p = binder_position(stack, t.variable());
      if (p >= 0) {
        out += "#" + std::to_string(p);
      } else {
        const ObjVar& v = t.variable();
        out += "$" + v.name + "." + std::to_string(v.index) + ":" +
               v.ty.to_string();
      }
      out += ' ';
      return;
    }
    case TermKind::kConst:
      out += "c" + std::to_string(static_cast<int>(t.tag()));
      for (const Type& p : t.params()) out += "," + p.to_string();
      out += ' ';
      return;
    case TermKind::kApp:
      out += "(@ ";
      key_impl(t.fun(), stack, out);
      key_impl(t.arg(), stack, out);
      out += ") ";
      return;
    case TermKind::kLam:
      out += "(\\" + t.variable().ty.to_string() + " ";
      stack.push_back(&t.variable());
      key_impl(t.body(), stack, out);
      stack.pop_back();
      out += ") ";
      return;
  }
}

}  // namespace

namespace detail {

// Position of the innermost binder for v, counted from the inside; -1 if free.
long binder_position(const BinderStack& stack, const ObjVar& v) {
  for (std::size_t i = stack.size(); i-- > 0;) {
    if (*stack[i] == v) return static_cast<long>(stack.size() - 1 - i);
  }
  return -1;
}

bool alpha_eq_under(const Term& a, const Term& b, BinderStack& sa,
                    BinderStack& sb) {
  return alpha_impl(a, b, sa, sb);
}

void append_key(const Term& t, BinderStack& stack, std::string& out) {
  key_impl(t, stack, out);
}

}  // namespace detail

Term subst_term(const Term& t, const ObjVar& x, const Term& s,
                NameSupply& supply) {
  if (!(s.type() == x.ty)) {
    throw TypeError("substituting a term of type " + s.type().to_string() +
                    " for a variable of type " + x.ty.to_string());
  }
  return subst_impl(t, x, s, supply);
}

bool alpha_eq(const Term& a, const Term& b) {
  BinderStack sa, sb;
  return alpha_impl(a, b, sa, sb);
}

std::string canonical_key(const Term& t) {
  BinderStack stack;
  std::string out;
  key_impl(t, stack, out);
  return out;
}

void note_indices(const Term& t, NameSupply& supply) {
  switch (t.kind()) {
    case TermKind::kVar:
      supply.reserve_above(t.variable().index);
      return;
    case TermKind::kConst:
      return;
    case TermKind::kApp:
      note_indices(t.fun(), supply);
      note_indices(t.arg(), supply);
      return;
    case TermKind::kLam:
      supply.reserve_above(t.variable().index);
      note_indices(t.body(), supply);
      return;
  }
}

std::size_t term_size(const Term& t) {
  switch (t.kind()) {
    case TermKind::kVar:
    case TermKind::kConst:
      return 1;
    case TermKind::kApp:
      return 1 + term_size(t.fun()) + term_size(t.arg());
    case TermKind::kLam:
      return 1 + term_size(t.body());
  }
  return 1;
}

}  // namespace natded
