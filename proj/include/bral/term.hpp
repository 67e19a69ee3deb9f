// term.hpp
// Copyright (c) 2026, the bral authors
// Licensed under the Apache License Version 2.0.
//
// Immutable term trees. Term is the full lambda calculus (variables,
// applications, abstractions and primitive combinator constants); ClTerm is
// combinatory logic, i.e. the same thing with abstraction removed. Handles
// are cheap to copy and subterms are shared freely.
//
// Every node carries its exact free-variable set as a sorted vector of
// interned name ids, so occurrence checks never walk the tree. Lambda nodes
// also carry a "contains no beta-redex" flag. Both are maintained at
// construction.

#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace bral {

// The nine primitive combinators. Their defining closed lambda terms live in
// reduce.hpp (comb_definition).
enum class Comb : std::uint8_t { S, K, I, B, C, Sp, Bp, Cp, Bstar };

inline constexpr Comb kAllCombs[] = {Comb::S,  Comb::K,  Comb::I,
                                     Comb::B,  Comb::C,  Comb::Sp,
                                     Comb::Bp, Comb::Cp, Comb::Bstar};

constexpr std::string_view comb_name(Comb c) {
  switch (c) {
    case Comb::S: return "S";
    case Comb::K: return "K";
    case Comb::I: return "I";
    case Comb::B: return "B";
    case Comb::C: return "C";
    case Comb::Sp: return "S'";
    case Comb::Bp: return "B'";
    case Comb::Cp: return "C'";
    case Comb::Bstar: return "B*";
  }
  return "?";
}

constexpr std::optional<Comb> comb_from_name(std::string_view s) {
  for (Comb c : kAllCombs)
    if (comb_name(c) == s) return c;
  return std::nullopt;
}

// A variable. Names start with a lowercase letter and never collide with
// combinator names (the parser enforces this; hand-built terms should too).
struct Var {
  std::string name;

  explicit Var(std::string n) : name(std::move(n)) {}
  bool operator==(const Var&) const = default;
  auto operator<=>(const Var&) const = default;
};

namespace detail {

struct NameRegistry {
  std::mutex mu;
  std::unordered_map<std::string, std::uint32_t> ids;
  std::vector<std::string> names;

  static NameRegistry& instance() {
    static NameRegistry reg;
    return reg;
  }
};

inline std::uint32_t intern_name(const std::string& name) {
  NameRegistry& reg = NameRegistry::instance();
  std::lock_guard<std::mutex> lock(reg.mu);
  auto [it, fresh] = reg.ids.emplace(name, static_cast<std::uint32_t>(reg.names.size()));
  if (fresh) reg.names.push_back(name);
  return it->second;
}

inline std::string interned_name(std::uint32_t id) {
  NameRegistry& reg = NameRegistry::instance();
  std::lock_guard<std::mutex> lock(reg.mu);
  return reg.names[id];
}

using FvSet = std::vector<std::uint32_t>;  // sorted, unique
using FvSetPtr = std::shared_ptr<const FvSet>;

inline const FvSetPtr& empty_fv() {
  static const FvSetPtr empty = std::make_shared<const FvSet>();
  return empty;
}

// Variable leaves repeat massively; intern their singleton sets.
inline FvSetPtr singleton_fv(std::uint32_t id) {
  static std::mutex mu;
  static std::unordered_map<std::uint32_t, FvSetPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto [it, fresh] = cache.emplace(id, nullptr);
  if (fresh) it->second = std::make_shared<const FvSet>(FvSet{id});
  return it->second;
}

inline FvSetPtr fv_union(const FvSetPtr& a, const FvSetPtr& b) {
  if (a->empty() || a == b) return b;
  if (b->empty()) return a;
  if (std::includes(a->begin(), a->end(), b->begin(), b->end())) return a;
  if (std::includes(b->begin(), b->end(), a->begin(), a->end())) return b;
  FvSet out;
  out.reserve(a->size() + b->size());
  std::set_union(a->begin(), a->end(), b->begin(), b->end(), std::back_inserter(out));
  return std::make_shared<const FvSet>(std::move(out));
}

inline FvSetPtr fv_minus(const FvSetPtr& a, std::uint32_t id) {
  auto it = std::lower_bound(a->begin(), a->end(), id);
  if (it == a->end() || *it != id) return a;
  if (a->size() == 1) return empty_fv();
  FvSet out;
  out.reserve(a->size() - 1);
  out.insert(out.end(), a->begin(), it);
  out.insert(out.end(), it + 1, a->end());
  return std::make_shared<const FvSet>(std::move(out));
}

inline bool fv_contains(const FvSet& a, std::uint32_t id) {
  return std::binary_search(a.begin(), a.end(), id);
}

}  // namespace detail

class Term {
 public:
  enum class Kind : std::uint8_t { Var, App, Abs, Prim };

  static Term var(std::string name) {
    detail::FvSetPtr fv = detail::singleton_fv(detail::intern_name(name));
    return Term(std::make_shared<Node>(
        Node{Kind::Var, std::move(name), nullptr, nullptr, Comb::S, std::move(fv), true}));
  }
  static Term var(const Var& v) { return var(v.name); }
  static Term app(Term fun, Term arg) {
    detail::FvSetPtr fv = detail::fv_union(fun.node_->fv, arg.node_->fv);
    bool nf = !fun.is_abs() && fun.node_->noredex && arg.node_->noredex;
    return Term(std::make_shared<Node>(Node{Kind::App, {}, std::move(fun.node_),
                                            std::move(arg.node_), Comb::S, std::move(fv), nf}));
  }
  static Term abs(std::string binder, Term body) {
    detail::FvSetPtr fv = detail::fv_minus(body.node_->fv, detail::intern_name(binder));
    bool nf = body.node_->noredex;
    return Term(std::make_shared<Node>(Node{Kind::Abs, std::move(binder), std::move(body.node_),
                                            nullptr, Comb::S, std::move(fv), nf}));
  }
  static Term prim(Comb c) {
    return Term(
        std::make_shared<Node>(Node{Kind::Prim, {}, nullptr, nullptr, c, detail::empty_fv(), true}));
  }

  Kind kind() const { return node_->kind; }
  bool is_var() const { return kind() == Kind::Var; }
  bool is_app() const { return kind() == Kind::App; }
  bool is_abs() const { return kind() == Kind::Abs; }
  bool is_prim() const { return kind() == Kind::Prim; }

  const std::string& name() const { return node_->name; }    // Var
  const std::string& binder() const { return node_->name; }  // Abs
  Term fun() const { return Term(node_->a); }                // App
  Term arg() const { return Term(node_->b); }                // App
  Term body() const { return Term(node_->a); }               // Abs
  Comb comb() const { return node_->comb; }                  // Prim

  // Identity of the underlying node; used as an equality fast path.
  const void* id() const { return node_.get(); }
  const detail::FvSet& fv_ids() const { return *node_->fv; }
  // No subterm has the shape (\x. s) u; maintained at construction.
  bool beta_normal() const { return node_->noredex; }

 private:
  struct Node {
    Kind kind;
    std::string name;  // Var name or Abs binder
    std::shared_ptr<const Node> a, b;
    Comb comb;
    detail::FvSetPtr fv;
    bool noredex;
  };

  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

class ClTerm {
 public:
  enum class Kind : std::uint8_t { Var, App, Prim };

  static ClTerm var(std::string name) {
    detail::FvSetPtr fv = detail::singleton_fv(detail::intern_name(name));
    return ClTerm(std::make_shared<Node>(
        Node{Kind::Var, std::move(name), nullptr, nullptr, Comb::S, std::move(fv)}));
  }
  static ClTerm var(const Var& v) { return var(v.name); }
  static ClTerm app(ClTerm fun, ClTerm arg) {
    detail::FvSetPtr fv = detail::fv_union(fun.node_->fv, arg.node_->fv);
    return ClTerm(std::make_shared<Node>(
        Node{Kind::App, {}, std::move(fun.node_), std::move(arg.node_), Comb::S, std::move(fv)}));
  }
  static ClTerm prim(Comb c) {
    return ClTerm(
        std::make_shared<Node>(Node{Kind::Prim, {}, nullptr, nullptr, c, detail::empty_fv()}));
  }

  Kind kind() const { return node_->kind; }
  bool is_var() const { return kind() == Kind::Var; }
  bool is_app() const { return kind() == Kind::App; }
  bool is_prim() const { return kind() == Kind::Prim; }

  const std::string& name() const { return node_->name; }
  ClTerm fun() const { return ClTerm(node_->a); }
  ClTerm arg() const { return ClTerm(node_->b); }
  Comb comb() const { return node_->comb; }

  const void* id() const { return node_.get(); }
  const detail::FvSet& fv_ids() const { return *node_->fv; }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const Node> a, b;
    Comb comb;
    detail::FvSetPtr fv;
  };

  explicit ClTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Left-folded application: spine(f, a, b) == f a b.
template <typename T, typename... Rest>
T spine(T head, Rest... rest) {
  ((head = T::app(std::move(head), std::move(rest))), ...);
  return head;
}

inline bool operator==(const Term& a, const Term& b) {
  if (a.id() == b.id()) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Var: return a.name() == b.name();
    case Term::Kind::Prim: return a.comb() == b.comb();
    case Term::Kind::App: return a.fun() == b.fun() && a.arg() == b.arg();
    case Term::Kind::Abs: return a.binder() == b.binder() && a.body() == b.body();
  }
  return false;
}
inline bool operator!=(const Term& a, const Term& b) { return !(a == b); }

inline bool operator==(const ClTerm& a, const ClTerm& b) {
  if (a.id() == b.id()) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case ClTerm::Kind::Var: return a.name() == b.name();
    case ClTerm::Kind::Prim: return a.comb() == b.comb();
    case ClTerm::Kind::App: return a.fun() == b.fun() && a.arg() == b.arg();
  }
  return false;
}
inline bool operator!=(const ClTerm& a, const ClTerm& b) { return !(a == b); }

// Structure-preserving injection CL -> lambda (constants stay constants).
inline Term to_lambda(const ClTerm& t) {
  switch (t.kind()) {
    case ClTerm::Kind::Var: return Term::var(t.name());
    case ClTerm::Kind::Prim: return Term::prim(t.comb());
    case ClTerm::Kind::App: return Term::app(to_lambda(t.fun()), to_lambda(t.arg()));
  }
  return Term::var("?");
}

inline bool occurs_free(const Term& t, const Var& x) {
  return detail::fv_contains(t.fv_ids(), detail::intern_name(x.name));
}

inline bool occurs_free(const ClTerm& t, const Var& x) {
  return detail::fv_contains(t.fv_ids(), detail::intern_name(x.name));
}

inline std::set<Var> free_vars(const Term& t) {
  std::set<Var> out;
  for (std::uint32_t id : t.fv_ids()) out.insert(Var(detail::interned_name(id)));
  return out;
}

inline std::set<Var> free_vars(const ClTerm& t) {
  std::set<Var> out;
  for (std::uint32_t id : t.fv_ids()) out.insert(Var(detail::interned_name(id)));
  return out;
}

// A CL term is closed when it mentions no variables at all.
inline bool is_closed(const ClTerm& t) { return t.fv_ids().empty(); }

// Size measure: number of atoms (variable and constant occurrences). Binders
// are not counted, so atom_count(\x. x) == 1.
inline std::size_t atom_count(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var:
    case Term::Kind::Prim: return 1;
    case Term::Kind::App: return atom_count(t.fun()) + atom_count(t.arg());
    case Term::Kind::Abs: return atom_count(t.body());
  }
  return 0;
}

inline std::size_t atom_count(const ClTerm& t) {
  switch (t.kind()) {
    case ClTerm::Kind::Var:
    case ClTerm::Kind::Prim: return 1;
    case ClTerm::Kind::App: return atom_count(t.fun()) + atom_count(t.arg());
  }
  return 0;
}

// Node count (atoms + applications + abstractions); the shrinker's measure.
inline std::size_t node_count(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var:
    case Term::Kind::Prim: return 1;
    case Term::Kind::App: return 1 + node_count(t.fun()) + node_count(t.arg());
    case Term::Kind::Abs: return 1 + node_count(t.body());
  }
  return 0;
}

// Every name that occurs anywhere in the term, bound or free.
inline void all_names_into(const Term& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::Var: out.insert(t.name()); return;
    case Term::Kind::Prim: return;
    case Term::Kind::App:
      all_names_into(t.fun(), out);
      all_names_into(t.arg(), out);
      return;
    case Term::Kind::Abs:
      out.insert(t.binder());
      all_names_into(t.body(), out);
      return;
  }
}

}  // namespace bral
