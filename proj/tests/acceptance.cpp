// acceptance.cpp
// Copyright (c) 2026, the bral authors
// Licensed under the Apache License Version 2.0.
//
// End-to-end acceptance suite. Each criterion prints exactly one PASS/FAIL
// line (details on extra indented lines) and the process exits nonzero if
// any criterion fails. Every tolerance is pinned here, in code.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "bral/lab.hpp"
#include "bral/metrics.hpp"

using namespace bral;
using Clock = std::chrono::steady_clock;

namespace {

int criteria_failed = 0;
std::vector<std::string> details;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int number, const char* name, bool ok, const std::string& extra = "") {
  std::printf("criterion %d (%s): %s%s\n", number, name, ok ? "PASS" : "FAIL",
              extra.empty() ? "" : (" " + extra).c_str());
  for (const std::string& d : details) std::printf("  %s\n", d.c_str());
  details.clear();
  if (!ok) ++criteria_failed;
}

bool expect_eq(const std::string& what, const std::string& got, const std::string& want) {
  if (got == want) return true;
  details.push_back(what + ": got \"" + got + "\", want \"" + want + "\"");
  return false;
}

std::string tr(Alg alg, const char* term) { return print_cl(translate(alg, parse_lambda(term))); }
std::string ab(Alg alg, const char* x, const char* t) {
  return print_cl(abstract(alg, Var(x), parse_cl(t)));
}

// ---------------------------------------------------------------- criterion 1
void criterion_golden() {
  auto t0 = Clock::now();
  int ok = 0, total = 0;
  auto item = [&](bool pass) {
    ++total;
    ok += pass;
  };
  item(expect_eq("(fab) [x] y y x", ab(Alg::Fab, "x", "y y x"), "S (S (K y) (K y)) I"));
  item(expect_eq("(abf') [x] y y x", ab(Alg::AbfPrime, "x", "y y x"), "S (K (y y)) I"));
  item(expect_eq("(abcf') [x] S (K y) (K y) x", ab(Alg::AbcfPrime, "x", "S (K y) (K y) x"),
                 "S (K y) (K y)"));
  item(expect_eq("S on \\y. (\\z. x) y y", tr(Alg::Schonfinkel, "\\y. (\\z. x) y y"),
                 "S (K x) I"));
  item(expect_eq("S' on \\y. (\\z. x) y y", tr(Alg::SchonfinkelPrime, "\\y. (\\z. x) y y"), "x"));
  item(expect_eq("S [x] K S x (K S x)", ab(Alg::Schonfinkel, "x", "K S x (K S x)"),
                 "S (K S) (K S)"));
  item(expect_eq("S' [x] K S x (K S x)", ab(Alg::SchonfinkelPrime, "x", "K S x (K S x)"),
                 "K (S S)"));
  item(expect_eq("S' on \\y. z ((\\x. x) y)", tr(Alg::SchonfinkelPrime, "\\y. z ((\\x. x) y)"),
                 "z"));
  item(expect_eq("S on \\y. z ((\\x. x) y)", tr(Alg::Schonfinkel, "\\y. z ((\\x. x) y)"),
                 "B z I"));
  item(expect_eq("T'' on \\x y z. y (x z) x", tr(Alg::TDoublePrime, "\\x y z. y (x z) x"),
                 "S' (C' C) (C B) I"));
  item(expect_eq("T' on \\x y z. y (x z) x", tr(Alg::TPrime, "\\x y z. y (x z) x"),
                 "S (B C (C C')) I"));
  item(expect_eq("T* on \\x y. x (x (x y)) x", tr(Alg::TStar, "\\x y. x (x (x y)) x"),
                 "S (S C' (S B I)) I"));
  item(expect_eq("T*'' on \\x y. x (x (x y)) x", tr(Alg::TStarDoublePrime, "\\x y. x (x (x y)) x"),
                 "S' C (S (S B* I) I) I"));
  item(expect_eq("S on \\x y. x", tr(Alg::Schonfinkel, "\\x y. x"), "K"));
  item(expect_eq("S' on \\x y. x", tr(Alg::SchonfinkelPrime, "\\x y. x"), "K"));
  item(expect_eq("S on \\x y z. x z (y z)", tr(Alg::Schonfinkel, "\\x y z. x z (y z)"), "S"));
  item(expect_eq("S' on \\x y z. x z (y z)", tr(Alg::SchonfinkelPrime, "\\x y z. x z (y z)"),
                 "S"));
  {
    ++total;
    std::string fab_k = tr(Alg::Fab, "\\x y. x");
    if (fab_k != "K")
      ++ok;
    else
      details.push_back("(fab) on \\x y. x unexpectedly printed \"K\"");
  }
  double secs = seconds_since(t0);
  bool time_ok = secs < 1.0;
  if (!time_ok) details.push_back("runtime " + std::to_string(secs) + "s exceeds 1s");
  char buf[64];
  std::snprintf(buf, sizeof buf, "(%d/%d items, %.2fs)", ok, total, secs);
  report(1, "golden corpus, exact match", ok == total && time_ok, buf);
}

// ---------------------------------------------------------------- criterion 2
void criterion_t_tprime_on_nf() {
  auto t0 = Clock::now();
  GeneratorConfig cfg;
  cfg.seed = 0;
  cfg.max_size = 60;
  std::uint64_t mismatches = 0;
  for (std::uint64_t i = 0; i < 10000; ++i) {
    Term t = gen_beta_normal(cfg, i);
    if (translate(Alg::T, t) != translate(Alg::TPrime, t)) {
      ++mismatches;
      if (details.size() < 3) details.push_back("mismatch on " + print_lambda(t));
    }
  }
  double secs = seconds_since(t0);
  bool time_ok = secs < 60.0;
  if (!time_ok) details.push_back("runtime " + std::to_string(secs) + "s exceeds 60s");
  char buf[96];
  std::snprintf(buf, sizeof buf, "(10000 beta-normal terms, %llu mismatches, %.1fs)",
                (unsigned long long)mismatches, secs);
  report(2, "T = T' on beta-normal forms", mismatches == 0 && time_ok, buf);
}

// ---------------------------------------------------------------- criterion 3
void criterion_eta_free_turner() {
  GeneratorConfig cfg;
  cfg.seed = 0;
  cfg.max_size = 40;
  std::uint64_t tr_mismatch = 0, ab_mismatch = 0;
  for (std::uint64_t i = 0; i < 10000; ++i) {
    Term t = gen_lambda(cfg, i);
    if (translate(Alg::TMinusEta, t) != translate(Alg::TPrimeMinusEta, t)) ++tr_mismatch;
  }
  GeneratorConfig clcfg;
  clcfg.seed = 0;
  clcfg.max_size = 30;
  for (std::uint64_t i = 0; i < 10000; ++i) {
    ClTerm t = gen_cl(clcfg, i);
    SplitMix64 rng = detail::trial_rng(clcfg, i ^ 0x517CC1B727220A95ull);
    Var x(clcfg.free_var_pool[rng.below(clcfg.free_var_pool.size())]);
    if (abstract(Alg::TMinusEta, x, t) != abstract(Alg::TPrimeMinusEta, x, t)) ++ab_mismatch;
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "(translate %llu, abstract %llu mismatches)",
                (unsigned long long)tr_mismatch, (unsigned long long)ab_mismatch);
  report(3, "T-noeta = T'-noeta everywhere", tr_mismatch == 0 && ab_mismatch == 0, buf);
}

// ---------------------------------------------------------------- criterion 4
void criterion_other_equivalences() {
  GeneratorConfig nf;
  nf.seed = 0;
  nf.max_size = 40;
  std::uint64_t s_mismatch = 0, tstar_mismatch = 0, s_eta_mismatch = 0;
  for (std::uint64_t i = 0; i < 10000; ++i) {
    Term t = gen_beta_normal(nf, i);
    if (translate(Alg::Schonfinkel, t) != translate(Alg::SchonfinkelPrime, t)) ++s_mismatch;
  }
  for (std::uint64_t i = 0; i < 10000; ++i) {
    Term t = gen_beta_normal(nf, i + 50000);
    if (translate(Alg::TStar, t) != translate(Alg::TStarPrime, t)) ++tstar_mismatch;
  }
  GeneratorConfig all;
  all.seed = 0;
  all.max_size = 40;
  for (std::uint64_t i = 0; i < 10000; ++i) {
    Term t = gen_lambda(all, i);
    if (translate(Alg::SchonfinkelMinusEta, t) != translate(Alg::SchonfinkelPrimeMinusEta, t))
      ++s_eta_mismatch;
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "(S/S' %llu, T*/T*' %llu, S-noeta/S'-noeta %llu)",
                (unsigned long long)s_mismatch, (unsigned long long)tstar_mismatch,
                (unsigned long long)s_eta_mismatch);
  report(4, "S = S' and T* = T*' on normal forms; eta-free S pair everywhere",
         s_mismatch == 0 && tstar_mismatch == 0 && s_eta_mismatch == 0, buf);
}

// ---------------------------------------------------------------- criterion 5
void criterion_sensitivity() {
  bool all_ok = true;
  auto hunt = [&](Alg a, Alg b, const char* label) {
    RandomSource src{GeneratorConfig{}, TermClass::BetaNormal, 10000};
    src.config.seed = 0;
    src.config.max_size = 40;
    Verdict v = differential(a, b, src);
    auto* d = std::get_if<DistinguishedVerdict>(&v);
    if (!d) {
      details.push_back(std::string(label) + ": no witness within 10000 trials");
      all_ok = false;
      return;
    }
    auto distinguishes = [&](const Term& t) { return translate(a, t) != translate(b, t); };
    Term small = shrink(d->witness, distinguishes);
    std::size_t atoms = atom_count(small);
    details.push_back(std::string(label) + ": witness at trial " + std::to_string(d->trial) +
                      ", shrunk to " + std::to_string(atoms) + " atoms: " + print_lambda(small));
    if (atoms > 10 || !distinguishes(small)) {
      details.push_back(std::string(label) + ": shrink failed its bound");
      all_ok = false;
    }
  };
  hunt(Alg::TPrime, Alg::TDoublePrime, "T' vs T''");
  hunt(Alg::TStar, Alg::TStarDoublePrime, "T* vs T*''");
  report(5, "non-equivalent pairs are distinguished and witnesses shrink", all_ok);
}

// ---------------------------------------------------------------- criterion 6
void criterion_lemma_suites() {
  GeneratorConfig cfg;
  cfg.seed = 0;
  cfg.max_size = 15;
  std::uint64_t violations = 0;
  std::uint64_t t_normal_seen = 0;
  Var fresh("w0");
  for (std::uint64_t i = 0; i < 5000; ++i) {
    ClTerm t = gen_cl(cfg, i);
    SplitMix64 rng = detail::trial_rng(cfg, i ^ 0x517CC1B727220A95ull);
    Var x(cfg.free_var_pool[rng.below(cfg.free_var_pool.size())]);

    // K-lemma and the t x lemma for T'
    if (abstract(Alg::TPrime, fresh, t) != ClTerm::app(ClTerm::prim(Comb::K), t)) ++violations;
    if (abstract(Alg::TPrime, fresh, ClTerm::app(t, ClTerm::var(fresh))) != t) ++violations;

    if (!is_t_normal(t)) continue;
    ++t_normal_seen;

    ClTerm out = abstract(Alg::T, x, t);
    // preservation
    if (!is_t_normal(out)) ++violations;
    // agreement with T' on T-normal input
    if (out != abstract(Alg::TPrime, x, t)) ++violations;
    // inversion
    if (auto s = detail::match1(out, Comb::K)) {
      if (!(*s == t) || occurs_free(t, x)) ++violations;
    } else if (out.is_prim() && out.comb() == Comb::I) {
      if (!(t == ClTerm::var(x))) ++violations;
    } else if (auto bs = detail::match2(out, Comb::B)) {
      if (!t.is_app() || !(bs->first == t.fun()) || occurs_free(t.fun(), x) ||
          !(bs->second == abstract(Alg::T, x, t.arg())))
        ++violations;
    } else if (auto bp = detail::match3(out, Comb::Bp)) {
      if (!t.is_app() || !t.fun().is_app() || !((*bp)[0] == t.fun().fun()) ||
          !((*bp)[1] == t.fun().arg()) || occurs_free(t.fun(), x) ||
          !((*bp)[2] == abstract(Alg::T, x, t.arg())))
        ++violations;
    }
  }
  // translating beta-normal forms gives T-normal terms
  GeneratorConfig nf;
  nf.seed = 0;
  nf.max_size = 30;
  for (std::uint64_t i = 0; i < 5000; ++i)
    if (!is_t_normal(translate(Alg::T, gen_beta_normal(nf, i)))) ++violations;

  char buf[96];
  std::snprintf(buf, sizeof buf, "(%llu violations, %llu T-normal samples)",
                (unsigned long long)violations, (unsigned long long)t_normal_seen);
  report(6, "normality lemma suites", violations == 0 && t_normal_seen >= 1000, buf);
}

// ---------------------------------------------------------------- criterion 7
void criterion_correctness_oracle() {
  GeneratorConfig cfg;
  cfg.seed = 0;
  cfg.max_size = 25;
  bool all_ok = true;
  for (Alg alg : kAllAlgs) {
    std::uint64_t fv_fail = 0, neq = 0, unknown = 0;
    for (std::uint64_t i = 0; i < 500; ++i) {
      Term t = gen_lambda(cfg, i);
      CheckReport rep = check_correctness(alg, t, Fuel{100000});
      if (!rep.fv_ok) ++fv_fail;
      if (rep.semantic == Tri::NotEqual) ++neq;
      if (rep.semantic == Tri::Unknown) ++unknown;
    }
    double unknown_rate = static_cast<double>(unknown) / 500.0;
    bool ok = fv_fail == 0 && neq == 0 && unknown_rate < 0.05;
    char buf[128];
    std::snprintf(buf, sizeof buf, "%-9s fv-fail %llu, not-equal %llu, unknown %llu (%.1f%%)",
                  std::string(alg_cli_name(alg)).c_str(), (unsigned long long)fv_fail,
                  (unsigned long long)neq, (unsigned long long)unknown, 100.0 * unknown_rate);
    details.push_back(buf);
    all_ok = all_ok && ok;
  }
  report(7, "correctness oracle on all 17 algorithms", all_ok);
}

// ---------------------------------------------------------------- criterion 8
void criterion_rewrite_mode() {
  ClTerm input = parse_cl("S (K a) (K a)");
  std::string once = print_cl(abstract(Alg::AbfPrime, Var("x"), input));
  std::string rewritten = print_cl(abstract_rewrite_mode(Alg::AbfPrime, Var("x"), input));
  bool ok = once == "K (S (K a) (K a))" && rewritten != "K (S (K a) (K a))";
  details.push_back("single-pass: " + once);
  details.push_back("rewrite-mode: " + rewritten);
  report(8, "optimisations as rewrite rules change the result", ok);
}

// ---------------------------------------------------------------- criterion 9
void criterion_growth() {
  auto t0 = Clock::now();
  GrowthReport t_rep = growth_experiment(Alg::T, Family::NestedShared, 40);
  GrowthReport abf_rep = growth_experiment(Alg::Abf, Family::NestedShared, 40);
  bool slope_ok = t_rep.fitted_slope <= 2.3;
  bool rel_ok = t_rep.fitted_slope < abf_rep.fitted_slope;
  bool pointwise_ok = true;
  for (std::size_t i = 0; i < t_rep.rows.size(); ++i)
    pointwise_ok = pointwise_ok && t_rep.rows[i].output_size <= abf_rep.rows[i].output_size;
  double secs = seconds_since(t0);
  bool time_ok = secs < 30.0;
  char buf[128];
  std::snprintf(buf, sizeof buf, "(slope T %.4f, slope abf %.4f, %.1fs)", t_rep.fitted_slope,
                abf_rep.fitted_slope, secs);
  if (!slope_ok) details.push_back("slope of T exceeds 2.3");
  if (!rel_ok) details.push_back("T does not grow slower than abf");
  if (!pointwise_ok) details.push_back("T output exceeds abf output somewhere");
  if (!time_ok) details.push_back("runtime exceeds 30s");
  report(9, "growth regression", slope_ok && rel_ok && pointwise_ok && time_ok, buf);
}

}  // namespace

int main() {
  criterion_golden();
  criterion_t_tprime_on_nf();
  criterion_eta_free_turner();
  criterion_other_equivalences();
  criterion_sensitivity();
  criterion_lemma_suites();
  criterion_correctness_oracle();
  criterion_rewrite_mode();
  criterion_growth();
  if (criteria_failed == 0) {
    std::printf("all 9 criteria pass\n");
    return 0;
  }
  std::printf("%d criteria failed\n", criteria_failed);
  return 1;
}
