// bral.cpp
// Copyright (c) 2026, the bral authors
// Licensed under the Apache License Version 2.0.
//
// Command-line front end: translate lambda terms to combinators, compare two
// algorithms on a corpus or on random terms, check the correctness laws, and
// run translation-size benchmarks.
//
// Exit codes: 0 success or Equal, 1 Distinguished or check failure,
// 2 usage or parse error, 3 Unknown (fuel exhausted).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "bral/bral.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kDistinguished = 1;
constexpr int kUsage = 2;
constexpr int kUnknownExit = 3;

std::string algorithm_help() {
  std::string out = "algorithm names:";
  for (bral::Alg a : bral::kAllAlgs) {
    out += "\n  ";
    out += bral::alg_cli_name(a);
    out.append(12 - bral::alg_cli_name(a).size(), ' ');
    out += bral::alg_display_name(a);
  }
  return out;
}

bral::Alg parse_alg(const std::string& name) {
  auto a = bral::alg_from_cli_name(name);
  if (!a) throw CLI::ValidationError("--alg", "unknown algorithm '" + name + "'");
  return *a;
}

// The term comes from a quoted argument, from a file, or from stdin when the
// argument is "-".
std::string term_text(const std::string& arg, const std::string& in_file) {
  if (!in_file.empty()) {
    std::ifstream f(in_file);
    if (!f) throw CLI::ValidationError("--in-file", "cannot read '" + in_file + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }
  if (arg == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  return arg;
}

int run_translate(const std::string& alg_name, const std::string& term_arg,
                  const std::string& in_file, bool trace) {
  bral::Alg alg = parse_alg(alg_name);
  bral::Term t = bral::parse_lambda(term_text(term_arg, in_file));
  bral::Trace tr;
  bral::ClTerm out = bral::translate(alg, t, trace ? &tr : nullptr);
  if (trace) {
    for (const auto& e : tr) {
      std::cout << "# " << e.rule;
      if (!e.at.empty()) std::cout << " at " << e.at;
      std::cout << "\n";
    }
  }
  std::cout << bral::print_cl(out) << "\n";
  return kOk;
}

void print_verdict(const bral::Verdict& v) {
  if (const auto* eq = std::get_if<bral::EqualVerdict>(&v)) {
    std::cout << "verdict: equal\ntrials: " << eq->trials << "\n";
  } else if (const auto* d = std::get_if<bral::DistinguishedVerdict>(&v)) {
    std::cout << "verdict: distinguished\ntrial: " << d->trial
              << "\nwitness: " << bral::print_lambda(d->witness)
              << "\nout-a: " << bral::print_cl(d->out_a)
              << "\nout-b: " << bral::print_cl(d->out_b) << "\n";
  } else {
    std::cout << "verdict: unknown\nreason: " << std::get<bral::UnknownVerdict>(v).reason << "\n";
  }
}

int run_compare(const std::string& a_name, const std::string& b_name, bool normal_forms,
                const std::string& corpus_file, std::uint64_t trials,
                std::uint64_t seed, int max_size) {
  bral::Alg a = parse_alg(a_name), b = parse_alg(b_name);
  bral::DifferentialSource source;
  if (!corpus_file.empty()) {
    std::ifstream f(corpus_file);
    if (!f) throw CLI::ValidationError("--corpus", "cannot read '" + corpus_file + "'");
    source = bral::load_corpus(f);
  } else {
    bral::GeneratorConfig cfg;
    cfg.seed = seed;
    cfg.max_size = max_size;
    source = bral::RandomSource{cfg, normal_forms ? bral::TermClass::BetaNormal
                                                  : bral::TermClass::AllTerms,
                                trials};
  }
  bral::Verdict v = bral::differential(a, b, source);
  print_verdict(v);
  if (std::holds_alternative<bral::EqualVerdict>(v)) return kOk;
  if (std::holds_alternative<bral::DistinguishedVerdict>(v)) return kDistinguished;
  return kUnknownExit;
}

int run_check(const std::string& alg_name, std::uint64_t trials, std::uint64_t seed, int max_size,
              std::uint64_t fuel) {
  bral::Alg alg = parse_alg(alg_name);
  bral::GeneratorConfig cfg;
  cfg.seed = seed;
  cfg.max_size = max_size;
  std::uint64_t fv_pass = 0, fv_fail = 0, eq = 0, neq = 0, unknown = 0;
  for (std::uint64_t i = 0; i < trials; ++i) {
    bral::Term t = bral::gen_lambda(cfg, i);
    bral::CheckReport rep = bral::check_correctness(alg, t, bral::Fuel{fuel});
    (rep.fv_ok ? fv_pass : fv_fail)++;
    switch (rep.semantic) {
      case bral::Tri::Equal: ++eq; break;
      case bral::Tri::NotEqual: ++neq; break;
      case bral::Tri::Unknown: ++unknown; break;
    }
  }
  std::cout << "algorithm: " << bral::alg_cli_name(alg) << "\ntrials: " << trials
            << "\nfv-pass: " << fv_pass << "\nfv-fail: " << fv_fail << "\nequal: " << eq
            << "\nnot-equal: " << neq << "\nunknown: " << unknown << "\n";
  if (fv_fail > 0 || neq > 0) return kDistinguished;
  if (unknown > 0) return kUnknownExit;
  return kOk;
}

int run_bench(const std::string& alg_name, const std::string& family_name, int max_n,
              const std::string& out_file) {
  bral::Alg alg = parse_alg(alg_name);
  auto family = bral::family_from_cli_name(family_name);
  if (!family) throw CLI::ValidationError("--family", "expected 'fan' or 'nested'");
  bral::GrowthReport rep = bral::growth_experiment(alg, *family, max_n);
  std::string csv = bral::emit_csv(rep);
  if (!out_file.empty()) {
    std::ofstream f(out_file);
    if (!f) throw CLI::ValidationError("--out", "cannot write '" + out_file + "'");
    f << csv;
    if (!f.good()) throw CLI::ValidationError("--out", "short write to '" + out_file + "'");
    char line[48];
    std::snprintf(line, sizeof line, "slope=%.4f\n", rep.fitted_slope);
    std::cout << line;
  } else {
    std::cout << csv;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bral - a bracket abstraction laboratory"};
  app.require_subcommand(1);
  app.footer(algorithm_help());

  std::string alg_a, alg_b, alg_name, term_arg, in_file, corpus_file, family_name, out_file;
  bool trace = false, normal_forms = false, all_terms = false;
  std::uint64_t trials = 1000, seed = 0, fuel = bral::kDefaultFuelSteps;
  int max_size = 40, max_n = 40;

  CLI::App* translate = app.add_subcommand("translate", "translate a lambda term to combinators");
  translate->add_option("--alg", alg_name, "algorithm")->required();
  translate->add_option("term", term_arg, "term ('-' reads standard input)");
  translate->add_option("--in-file", in_file, "read the term from a file");
  translate->add_flag("--trace", trace, "print fired equations, one per line");

  CLI::App* compare = app.add_subcommand("compare", "differential comparison of two algorithms");
  compare->add_option("--alg-a", alg_a, "first algorithm")->required();
  compare->add_option("--alg-b", alg_b, "second algorithm")->required();
  CLI::Option* onf = compare->add_flag("--normal-forms", normal_forms, "random beta-normal terms");
  CLI::Option* oall = compare->add_flag("--all-terms", all_terms, "random arbitrary terms");
  CLI::Option* ocorp = compare->add_option("--corpus", corpus_file, "one term per line");
  onf->excludes(oall, ocorp);
  oall->excludes(ocorp);
  compare->add_option("--trials", trials, "number of random trials");
  compare->add_option("--seed", seed, "master seed");
  compare->add_option("--max-size", max_size, "atom budget per generated term");

  CLI::App* check = app.add_subcommand("check", "free-variable law and semantic correctness");
  check->add_option("--alg", alg_name, "algorithm")->required();
  check->add_option("--trials", trials, "number of random trials");
  check->add_option("--seed", seed, "master seed");
  check->add_option("--max-size", max_size, "atom budget per generated term");
  check->add_option("--fuel", fuel, "reduction step budget for the oracle");

  CLI::App* bench = app.add_subcommand("bench", "translation-size growth experiment");
  bench->add_option("--alg", alg_name, "algorithm")->required();
  bench->add_option("--family", family_name, "term family: fan | nested")->required();
  bench->add_option("--max-n", max_n, "largest family index");
  bench->add_option("--out", out_file, "write CSV here (slope goes to stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (app.got_subcommand(translate)) {
      if (term_arg.empty() && in_file.empty()) {
        std::cerr << "translate: a term argument or --in-file is required\n";
        return kUsage;
      }
      return run_translate(alg_name, term_arg, in_file, trace);
    }
    if (app.got_subcommand(compare)) {
      if (!normal_forms && !all_terms && corpus_file.empty()) {
        std::cerr << "compare: one of --normal-forms, --all-terms or --corpus is required\n";
        return kUsage;
      }
      return run_compare(alg_a, alg_b, normal_forms, corpus_file, trials, seed, max_size);
    }
    if (app.got_subcommand(check)) return run_check(alg_name, trials, seed, max_size, fuel);
    if (app.got_subcommand(bench)) return run_bench(alg_name, family_name, max_n, out_file);
  } catch (const bral::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
