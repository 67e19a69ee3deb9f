// lab.hpp
// Copyright (c) 2026, the bral authors
// Licensed under the Apache License Version 2.0.
//
// The equivalence lab: a beta-eta equality oracle for CL terms, a
// differential harness that hunts for inputs on which two algorithms
// disagree syntactically, a counterexample shrinker and a per-algorithm
// correctness check. Differential comparison is structural on purpose;
// the oracle is the separate, weaker semantic check.

#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bral/abstraction.hpp"
#include "bral/generate.hpp"
#include "bral/reduce.hpp"
#include "bral/syntax.hpp"
#include "bral/term.hpp"

namespace bral {

enum class Tri : std::uint8_t { Equal, NotEqual, Unknown };

// Beta-eta equality of CL terms, decided by unfolding constants and
// comparing canonical beta-eta normal forms up to alpha. Unknown when either
// side runs out of fuel.
inline Tri semantically_equal(const ClTerm& a, const ClTerm& b, Fuel fuel = {}) {
  auto na = beta_eta_normal_form(unfold(a), fuel);
  if (!na) return Tri::Unknown;
  auto nb = beta_eta_normal_form(unfold(b), fuel);
  if (!nb) return Tri::Unknown;
  return alpha_equal(*na, *nb) ? Tri::Equal : Tri::NotEqual;
}

struct CheckReport {
  bool fv_ok = false;
  Tri semantic = Tri::Unknown;
};

// The two defining properties of an abstraction algorithm, checked on one
// term: translation preserves free variables and is beta-eta equal to the
// input.
inline CheckReport check_correctness(Alg alg, const Term& t, Fuel fuel = {}) {
  CheckReport rep;
  ClTerm out = translate(alg, t);
  rep.fv_ok = free_vars(out) == free_vars(t);
  auto lhs = beta_eta_normal_form(unfold(out), fuel);
  auto rhs = beta_eta_normal_form(unfold_constants(t), fuel);
  if (!lhs || !rhs)
    rep.semantic = Tri::Unknown;
  else
    rep.semantic = alpha_equal(*lhs, *rhs) ? Tri::Equal : Tri::NotEqual;
  return rep;
}

struct EqualVerdict {
  std::uint64_t trials = 0;
};
struct DistinguishedVerdict {
  std::uint64_t trial = 0;
  Term witness;
  ClTerm out_a;
  ClTerm out_b;
};
struct UnknownVerdict {
  std::string reason;
};
using Verdict = std::variant<EqualVerdict, DistinguishedVerdict, UnknownVerdict>;

enum class TermClass : std::uint8_t { BetaNormal, AllTerms };

struct RandomSource {
  GeneratorConfig config;
  TermClass cls = TermClass::BetaNormal;
  std::uint64_t trials = 1000;
};

using Corpus = std::vector<Term>;
using DifferentialSource = std::variant<Corpus, RandomSource>;

// Translate each source term under both algorithms; the first syntactic
// mismatch is the verdict.
inline Verdict differential(Alg alg_a, Alg alg_b, const DifferentialSource& source) {
  auto run_one = [&](const Term& t, std::uint64_t i) -> std::optional<DistinguishedVerdict> {
    ClTerm a = translate(alg_a, t);
    ClTerm b = translate(alg_b, t);
    if (a == b) return std::nullopt;
    return DistinguishedVerdict{i, t, std::move(a), std::move(b)};
  };
  if (const auto* corpus = std::get_if<Corpus>(&source)) {
    for (std::uint64_t i = 0; i < corpus->size(); ++i)
      if (auto d = run_one((*corpus)[i], i)) return *d;
    return EqualVerdict{corpus->size()};
  }
  const auto& rnd = std::get<RandomSource>(source);
  for (std::uint64_t i = 0; i < rnd.trials; ++i) {
    Term t = rnd.cls == TermClass::BetaNormal ? gen_beta_normal(rnd.config, i)
                                              : gen_lambda(rnd.config, i);
    if (auto d = run_one(t, i)) return *d;
  }
  return EqualVerdict{rnd.trials};
}

// Same idea one level down: random CL terms, compared under abstract() with
// a variable drawn from the pool (so both the occurring and non-occurring
// cases are exercised).
inline Verdict differential_abstract(Alg alg_a, Alg alg_b, const GeneratorConfig& cfg,
                                     std::uint64_t trials) {
  for (std::uint64_t i = 0; i < trials; ++i) {
    ClTerm t = gen_cl(cfg, i);
    SplitMix64 rng = detail::trial_rng(cfg, i ^ 0x517CC1B727220A95ull);
    Var x(cfg.free_var_pool.empty()
              ? "x"
              : cfg.free_var_pool[rng.below(cfg.free_var_pool.size())]);
    ClTerm a = abstract(alg_a, x, t);
    ClTerm b = abstract(alg_b, x, t);
    if (a != b)
      return DistinguishedVerdict{i, Term::abs(x.name, to_lambda(t)), std::move(a), std::move(b)};
  }
  return EqualVerdict{trials};
}

// Greedy shrinking to a local minimum: drop an application argument, replace
// a compound subterm by a fresh variable, or unwrap an abstraction, keeping
// the predicate true and the node count strictly decreasing.
namespace detail {

inline void shrink_steps(const Term& node, const std::function<Term(const Term&)>& rebuild,
                         const std::string& fresh, std::vector<Term>& out) {
  switch (node.kind()) {
    case Term::Kind::Var:
    case Term::Kind::Prim: return;
    case Term::Kind::App:
      out.push_back(rebuild(node.fun()));        // drop the argument
      out.push_back(rebuild(Term::var(fresh)));  // forget the whole subterm
      shrink_steps(node.fun(),
                   [&](const Term& r) { return rebuild(Term::app(r, node.arg())); }, fresh, out);
      shrink_steps(node.arg(),
                   [&](const Term& r) { return rebuild(Term::app(node.fun(), r)); }, fresh, out);
      return;
    case Term::Kind::Abs:
      out.push_back(rebuild(node.body()));  // unwrap the binder
      out.push_back(rebuild(Term::var(fresh)));
      shrink_steps(node.body(),
                   [&](const Term& r) { return rebuild(Term::abs(node.binder(), r)); }, fresh,
                   out);
      return;
  }
}

}  // namespace detail

inline Term shrink(const Term& witness, const std::function<bool(const Term&)>& distinguishes) {
  Term cur = witness;
  std::set<std::string> names;
  all_names_into(cur, names);
  const std::string fresh = fresh_name("h", names);
  bool improved = true;
  while (improved) {
    improved = false;
    std::vector<Term> cands;
    detail::shrink_steps(cur, [](const Term& r) { return r; }, fresh, cands);
    for (const Term& c : cands) {
      if (node_count(c) < node_count(cur) && distinguishes(c)) {
        cur = c;
        improved = true;
        break;
      }
    }
  }
  return cur;
}

// One term per line; everything after '#' is a comment; blank lines skipped.
inline Corpus load_corpus(std::istream& in) {
  Corpus out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    std::size_t b = line.find_last_not_of(" \t\r");
    try {
      out.push_back(parse_lambda(line.substr(a, b - a + 1)));
    } catch (const ParseError& e) {
      throw ParseError(e.message() + " (corpus line " + std::to_string(lineno) + ")", e.line(),
                       e.column(), e.expected());
    }
  }
  return out;
}

}  // namespace bral
