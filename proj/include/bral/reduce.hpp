// reduce.hpp
// Copyright (c) 2026, the bral authors
// Licensed under the Apache License Version 2.0.
//
// Capture-avoiding substitution, alpha equivalence, beta/eta normalization
// and unfolding of combinator constants into their defining lambda terms.
// Reduction is normal order (leftmost outermost), one fuel unit per
// contracted redex; an exhausted budget means "possibly divergent".

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bral/term.hpp"

namespace bral {

struct Fuel {
  std::uint64_t steps = 100000;
};

inline constexpr std::uint64_t kDefaultFuelSteps = 100000;

// Smallest positive numeric suffix that avoids every taken name.
inline std::string fresh_name(const std::string& base, const std::set<std::string>& taken) {
  for (unsigned k = 1;; ++k) {
    std::string cand = base + std::to_string(k);
    if (!taken.contains(cand)) return cand;
  }
}

namespace detail {
inline Term substitute_impl(const Term& t, const Var& x, const Term& s);

inline Term subst_rec(const Term& t, const Var& x, std::uint32_t xid, const Term& s) {
  if (!detail::fv_contains(t.fv_ids(), xid)) return t;  // x not free below
  switch (t.kind()) {
    case Term::Kind::Var: return s;  // a variable with x free is x itself
    case Term::Kind::Prim: return t;
    case Term::Kind::App: {
      Term f = subst_rec(t.fun(), x, xid, s);
      Term a = subst_rec(t.arg(), x, xid, s);
      if (f.id() == t.fun().id() && a.id() == t.arg().id()) return t;
      return Term::app(std::move(f), std::move(a));
    }
    case Term::Kind::Abs: {
      // x free in t implies binder != x and x free in the body
      if (occurs_free(s, Var(t.binder()))) {
        std::set<std::string> taken;
        all_names_into(t.body(), taken);
        all_names_into(s, taken);
        taken.insert(x.name);
        std::string nb = fresh_name(t.binder(), taken);
        Term renamed = substitute_impl(t.body(), Var(t.binder()), Term::var(nb));
        return Term::abs(nb, subst_rec(renamed, x, xid, s));
      }
      return Term::abs(t.binder(), subst_rec(t.body(), x, xid, s));
    }
  }
  return t;
}

inline Term substitute_impl(const Term& t, const Var& x, const Term& s) {
  return subst_rec(t, x, intern_name(x.name), s);
}
}  // namespace detail

// t[x := s], renaming bound variables when they would capture.
inline Term substitute(const Term& t, const Var& x, const Term& s) {
  return detail::substitute_impl(t, x, s);
}

namespace detail {
inline bool alpha_rec(const Term& a, const Term& b,
                      std::vector<std::pair<std::string, std::string>>& env) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Prim: return a.comb() == b.comb();
    case Term::Kind::Var: {
      for (auto it = env.rbegin(); it != env.rend(); ++it) {
        bool la = it->first == a.name(), lb = it->second == b.name();
        if (la || lb) return la && lb;
      }
      return a.name() == b.name();
    }
    case Term::Kind::App:
      return alpha_rec(a.fun(), b.fun(), env) && alpha_rec(a.arg(), b.arg(), env);
    case Term::Kind::Abs: {
      env.emplace_back(a.binder(), b.binder());
      bool ok = alpha_rec(a.body(), b.body(), env);
      env.pop_back();
      return ok;
    }
  }
  return false;
}
}  // namespace detail

inline bool alpha_equal(const Term& a, const Term& b) {
  if (a.id() == b.id()) return true;
  std::vector<std::pair<std::string, std::string>> env;
  return detail::alpha_rec(a, b, env);
}

inline bool is_beta_normal(const Term& t) { return t.beta_normal(); }

namespace detail {

// Weak head normal form. Contracts head redexes only; nullopt on empty fuel.
// Returns the input handle unchanged when no head redex exists.
inline std::optional<Term> whnf(const Term& input, std::uint64_t& fuel) {
  Term t = input;
  std::vector<Term> args;
  bool contracted = false;
  for (;;) {
    while (t.is_app()) {
      args.push_back(t.arg());
      t = t.fun();
    }
    if (t.is_abs() && !args.empty()) {
      if (fuel == 0) return std::nullopt;
      --fuel;
      contracted = true;
      Term a = std::move(args.back());
      args.pop_back();
      t = substitute(t.body(), Var(t.binder()), a);
      continue;
    }
    if (!contracted) return input;
    while (!args.empty()) {
      t = Term::app(t, std::move(args.back()));
      args.pop_back();
    }
    return t;
  }
}

inline std::optional<Term> beta_nf(const Term& input, std::uint64_t& fuel) {
  if (input.beta_normal()) return input;
  auto head = whnf(input, fuel);
  if (!head) return std::nullopt;
  Term t = *head;
  switch (t.kind()) {
    case Term::Kind::Var:
    case Term::Kind::Prim: return t;
    case Term::Kind::Abs: {
      auto body = beta_nf(t.body(), fuel);
      if (!body) return std::nullopt;
      if (body->id() == t.body().id()) return t;
      return Term::abs(t.binder(), *body);
    }
    case Term::Kind::App: {
      // Head is inert (variable or constant); normalize the spine arguments.
      std::vector<Term> args;
      Term headterm = t;
      while (headterm.is_app()) {
        args.push_back(headterm.arg());
        headterm = headterm.fun();
      }
      bool changed = false;
      std::vector<Term> norm;
      norm.reserve(args.size());
      for (auto it = args.rbegin(); it != args.rend(); ++it) {
        auto a = beta_nf(*it, fuel);
        if (!a) return std::nullopt;
        changed = changed || a->id() != it->id();
        norm.push_back(*a);
      }
      if (!changed) return t;
      for (const Term& a : norm) headterm = Term::app(headterm, a);
      return headterm;
    }
  }
  return t;
}

inline std::optional<Term> eta_nf(const Term& t, std::uint64_t& fuel) {
  switch (t.kind()) {
    case Term::Kind::Var:
    case Term::Kind::Prim: return t;
    case Term::Kind::App: {
      auto f = eta_nf(t.fun(), fuel);
      if (!f) return std::nullopt;
      auto a = eta_nf(t.arg(), fuel);
      if (!a) return std::nullopt;
      if (f->id() == t.fun().id() && a->id() == t.arg().id()) return t;
      return Term::app(*f, *a);
    }
    case Term::Kind::Abs: {
      auto body = eta_nf(t.body(), fuel);
      if (!body) return std::nullopt;
      if (body->is_app() && body->arg().is_var() && body->arg().name() == t.binder() &&
          !occurs_free(body->fun(), Var(t.binder()))) {
        if (fuel == 0) return std::nullopt;
        --fuel;
        return body->fun();
      }
      return Term::abs(t.binder(), *body);
    }
  }
  return t;
}

}  // namespace detail

// Normal-order beta normalization. nullopt when the fuel budget runs out.
inline std::optional<Term> beta_normalize(const Term& t, Fuel fuel = {}) {
  std::uint64_t budget = fuel.steps;
  return detail::beta_nf(t, budget);
}

// Innermost-first eta contraction; meant to run on beta-normal input.
inline std::optional<Term> eta_normalize(const Term& t, Fuel fuel = {}) {
  std::uint64_t budget = fuel.steps;
  return detail::eta_nf(t, budget);
}

// Canonical beta-eta normal form (beta first, then eta) under one budget.
inline std::optional<Term> beta_eta_normal_form(const Term& t, Fuel fuel = {}) {
  std::uint64_t budget = fuel.steps;
  auto b = detail::beta_nf(t, budget);
  if (!b) return std::nullopt;
  return detail::eta_nf(*b, budget);
}

// Defining closed lambda terms of the nine combinators.
inline const Term& comb_definition(Comb c) {
  auto lam = [](std::initializer_list<const char*> binders, Term body) {
    std::vector<const char*> bs(binders);
    for (auto it = bs.rbegin(); it != bs.rend(); ++it) body = Term::abs(*it, std::move(body));
    return body;
  };
  auto v = [](const char* n) { return Term::var(n); };
  static const Term defs[] = {
      // S = \x y z. x z (y z)
      lam({"x", "y", "z"}, spine(v("x"), v("z"), Term::app(v("y"), v("z")))),
      // K = \x y. x
      lam({"x", "y"}, v("x")),
      // I = \x. x
      lam({"x"}, v("x")),
      // B = \x y z. x (y z)
      lam({"x", "y", "z"}, Term::app(v("x"), Term::app(v("y"), v("z")))),
      // C = \x y z. x z y
      lam({"x", "y", "z"}, spine(v("x"), v("z"), v("y"))),
      // S' = \k x y z. k (x z) (y z)
      lam({"k", "x", "y", "z"},
          spine(v("k"), Term::app(v("x"), v("z")), Term::app(v("y"), v("z")))),
      // B' = \k x y z. k x (y z)
      lam({"k", "x", "y", "z"}, spine(v("k"), v("x"), Term::app(v("y"), v("z")))),
      // C' = \k x y z. k (x z) y
      lam({"k", "x", "y", "z"}, spine(v("k"), Term::app(v("x"), v("z")), v("y"))),
      // B* = \f x y z. f (x (y z))
      lam({"f", "x", "y", "z"},
          Term::app(v("f"), Term::app(v("x"), Term::app(v("y"), v("z"))))),
  };
  return defs[static_cast<std::size_t>(c)];
}

// CL term to lambda term with every constant replaced by its definition.
inline Term unfold(const ClTerm& t) {
  switch (t.kind()) {
    case ClTerm::Kind::Var: return Term::var(t.name());
    case ClTerm::Kind::Prim: return comb_definition(t.comb());
    case ClTerm::Kind::App: return Term::app(unfold(t.fun()), unfold(t.arg()));
  }
  return Term::var("?");
}

// Same replacement on lambda terms that mention constants.
inline Term unfold_constants(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var: return t;
    case Term::Kind::Prim: return comb_definition(t.comb());
    case Term::Kind::App: return Term::app(unfold_constants(t.fun()), unfold_constants(t.arg()));
    case Term::Kind::Abs: return Term::abs(t.binder(), unfold_constants(t.body()));
  }
  return t;
}

}  // namespace bral
