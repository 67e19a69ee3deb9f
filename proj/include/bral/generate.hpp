// generate.hpp
// Copyright (c) 2026, the bral authors
// Licensed under the Apache License Version 2.0.
//
// Deterministic random term generators. The same configuration always yields
// the same term sequence; per-trial seeds are derived from the master seed by
// a counter hash so trials are order independent.

#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "bral/term.hpp"

namespace bral {

// splitmix64, the usual constants.
struct SplitMix64 {
  std::uint64_t state = 0;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }
};

struct GeneratorConfig {
  std::uint64_t seed = 0;
  int max_size = 40;  // atom budget
  std::vector<std::string> free_var_pool = {"a", "b", "c", "d"};
  double abs_prob = 0.35;
  double comb_prob = 0.25;  // CL generator only: probability of a constant atom
};

namespace detail {

inline SplitMix64 trial_rng(const GeneratorConfig& cfg, std::uint64_t trial) {
  SplitMix64 rng{cfg.seed ^ (0xA0761D6478BD642Full * (trial + 1))};
  rng.next();
  return rng;
}

struct GenState {
  const GeneratorConfig& cfg;
  SplitMix64& rng;
  std::vector<std::string> scope;
  int binder_counter = 0;

  std::string fresh_binder() { return "x" + std::to_string(++binder_counter); }

  bool has_vars() const { return !scope.empty() || !cfg.free_var_pool.empty(); }

  std::string pick_var() {
    std::size_t n = scope.size() + cfg.free_var_pool.size();
    std::size_t i = rng.below(n);
    return i < scope.size() ? scope[i] : cfg.free_var_pool[i - scope.size()];
  }
};

// Arbitrary lambda terms; redexes arise whenever the function side of an
// application comes out as an abstraction.
inline Term gen_any(GenState& st, int budget) {
  if (st.rng.chance(st.cfg.abs_prob) || !st.has_vars()) {
    std::string b = st.fresh_binder();
    st.scope.push_back(b);
    Term body = gen_any(st, budget);
    st.scope.pop_back();
    return Term::abs(b, body);
  }
  if (budget >= 2 && st.rng.chance(0.75)) {
    int left = 1 + static_cast<int>(st.rng.below(static_cast<std::uint64_t>(budget - 1)));
    Term f = gen_any(st, left);
    Term a = gen_any(st, budget - left);
    return Term::app(std::move(f), std::move(a));
  }
  return Term::var(st.pick_var());
}

// Beta-normal terms: nf ::= \x. nf | v nf1 ... nfk. The grammar cannot build
// a redex.
inline Term gen_nf(GenState& st, int budget) {
  if (st.rng.chance(st.cfg.abs_prob) || !st.has_vars()) {
    std::string b = st.fresh_binder();
    st.scope.push_back(b);
    Term body = gen_nf(st, budget);
    st.scope.pop_back();
    return Term::abs(b, body);
  }
  Term head = Term::var(st.pick_var());
  int arg_budget = budget - 1;
  if (arg_budget <= 0) return head;
  int k = static_cast<int>(st.rng.below(static_cast<std::uint64_t>(std::min(arg_budget, 5)) + 1));
  for (int i = 0; i < k; ++i) {
    int remaining_args = k - i - 1;
    int share = 1 + static_cast<int>(st.rng.below(
                        static_cast<std::uint64_t>(arg_budget - remaining_args)));
    head = Term::app(std::move(head), gen_nf(st, share));
    arg_budget -= share;
  }
  return head;
}

inline ClTerm gen_cl_rec(GenState& st, int budget) {
  if (budget >= 2 && st.rng.chance(0.75)) {
    int left = 1 + static_cast<int>(st.rng.below(static_cast<std::uint64_t>(budget - 1)));
    ClTerm f = gen_cl_rec(st, left);
    ClTerm a = gen_cl_rec(st, budget - left);
    return ClTerm::app(std::move(f), std::move(a));
  }
  if (st.rng.chance(st.cfg.comb_prob) || !st.has_vars())
    return ClTerm::prim(kAllCombs[st.rng.below(std::size(kAllCombs))]);
  return ClTerm::var(st.pick_var());
}

}  // namespace detail

inline Term gen_lambda(const GeneratorConfig& cfg, std::uint64_t trial = 0) {
  SplitMix64 rng = detail::trial_rng(cfg, trial);
  detail::GenState st{cfg, rng, {}, 0};
  return detail::gen_any(st, cfg.max_size < 1 ? 1 : cfg.max_size);
}

inline Term gen_beta_normal(const GeneratorConfig& cfg, std::uint64_t trial = 0) {
  SplitMix64 rng = detail::trial_rng(cfg, trial);
  detail::GenState st{cfg, rng, {}, 0};
  return detail::gen_nf(st, cfg.max_size < 1 ? 1 : cfg.max_size);
}

inline ClTerm gen_cl(const GeneratorConfig& cfg, std::uint64_t trial = 0) {
  SplitMix64 rng = detail::trial_rng(cfg, trial);
  detail::GenState st{cfg, rng, {}, 0};
  return detail::gen_cl_rec(st, cfg.max_size < 1 ? 1 : cfg.max_size);
}

}  // namespace bral
