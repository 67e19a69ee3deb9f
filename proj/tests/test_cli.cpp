// test_cli.cpp
// Copyright (c) 2026, the bral authors
// Licensed under the Apache License Version 2.0.
//
// Drives the installed binary end to end through popen.

#include <catch2/catch.hpp>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "bral/lab.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_raw(const std::string& cmd) {
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

RunResult run_cli(const std::string& args) {
  return run_raw(std::string(BRAL_CLI_PATH) + " " + args);
}

std::string data_path(const char* name) { return std::string(BRAL_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("translate prints the combinator term", "[cli]") {
  RunResult r = run_cli("translate --alg s \"\\y. (\\z. x) y y\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "S (K x) I\n");

  r = run_cli("translate --alg s1 \"\\y. (\\z. x) y y\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "x\n");

  r = run_cli("translate --alg t \"\\x. x\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "I\n");
}

TEST_CASE("translate reads stdin when the term is '-'", "[cli]") {
  RunResult r = run_raw("echo '\\x. x' | " + std::string(BRAL_CLI_PATH) + " translate --alg t -");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "I\n");
}

TEST_CASE("translate reads a file with --in-file", "[cli]") {
  std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                     "/bral_term_input.txt";
  {
    std::ofstream f(path);
    f << "\\y. (\\z. x) y y\n";
  }
  RunResult r = run_cli("translate --alg s --in-file " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "S (K x) I\n");
  std::remove(path.c_str());
}

TEST_CASE("usage and parse errors exit with 2", "[cli]") {
  CHECK(run_cli("translate --alg nope \"x\"").exit_code == 2);
  CHECK(run_cli("translate --alg t \"x ((\"").exit_code == 2);
  CHECK(run_cli("translate --alg t").exit_code == 2);
  CHECK(run_cli("compare --alg-a t --alg-b t1").exit_code == 2);
  CHECK(run_cli("bench --alg t").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("trace output keeps the term on the last line", "[cli]") {
  RunResult r = run_cli("translate --alg t2 --trace \"\\x y z. y (x z) x\"");
  CHECK(r.exit_code == 0);
  REQUIRE_FALSE(r.out.empty());
  std::istringstream lines(r.out);
  std::string line, last;
  int traced = 0;
  while (std::getline(lines, line)) {
    if (line.rfind("# ", 0) == 0)
      ++traced;
    else
      last = line;
  }
  CHECK(traced > 5);
  CHECK(last == "S' (C' C) (C B) I");
  // the whole trace output is a valid corpus: comments plus one term
  std::istringstream again(r.out);
  bral::Corpus c = bral::load_corpus(again);
  REQUIRE(c.size() == 1);
  CHECK(bral::print_lambda(c[0]) == "S' (C' C) (C B) I");
}

TEST_CASE("compare on the distinguishing corpus", "[cli]") {
  RunResult r = run_cli("compare --alg-a s --alg-b s1 --corpus " +
                        data_path("paper_counterexamples.txt"));
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("verdict: distinguished") != std::string::npos);
  CHECK(r.out.find("out-a: S (K x) I") != std::string::npos);
  CHECK(r.out.find("out-b: x") != std::string::npos);
}

TEST_CASE("help lists the algorithm table", "[cli]") {
  RunResult r = run_cli("--help");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("algorithm names:") != std::string::npos);
  CHECK(r.out.find("tstar2") != std::string::npos);
  CHECK(r.out.find("absdash1") != std::string::npos);
}

TEST_CASE("compare on a corpus where the algorithms agree", "[cli]") {
  // the eta-free pair coincides on every term, redexes or not
  RunResult r = run_cli("compare --alg-a t-noeta --alg-b t1-noeta --corpus " +
                        data_path("paper_counterexamples.txt"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("verdict: equal") != std::string::npos);
  CHECK(r.out.find("trials: 5") != std::string::npos);
}

TEST_CASE("compare equal pairs exit zero", "[cli]") {
  RunResult r = run_cli("compare --alg-a t --alg-b t1 --normal-forms --trials 300 --seed 7");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("verdict: equal") != std::string::npos);
  CHECK(r.out.find("trials: 300") != std::string::npos);

  r = run_cli("compare --alg-a t-noeta --alg-b t1-noeta --all-terms --trials 300 --seed 7");
  CHECK(r.exit_code == 0);
}

TEST_CASE("check exits by verdict", "[cli]") {
  RunResult r = run_cli("check --alg t --trials 50 --max-size 15");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("not-equal: 0") != std::string::npos);
  // with almost no fuel the oracle cannot decide and says so
  r = run_cli("check --alg s --trials 20 --max-size 18 --fuel 1");
  CHECK(r.exit_code == 3);
  CHECK(r.out.find("unknown: 0") == std::string::npos);
}

TEST_CASE("bench writes a csv file and prints the slope", "[cli]") {
  std::string out_file = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                         "/bral_bench_test.csv";
  std::remove(out_file.c_str());
  RunResult r = run_cli("bench --alg t --family nested --max-n 12 --out " + out_file);
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("slope=", 0) == 0);
  std::ifstream f(out_file);
  REQUIRE(f.good());
  std::string line;
  int rows = 0;
  REQUIRE(std::getline(f, line));
  CHECK(line == "n,input_size,output_size");
  while (std::getline(f, line))
    if (!line.empty() && line[0] != '#') ++rows;
  CHECK(rows == 12);
  std::remove(out_file.c_str());

  // without --out the csv goes to stdout
  r = run_cli("bench --alg abf --family fan --max-n 10");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("n,input_size,output_size\n", 0) == 0);
  CHECK(r.out.find("# slope=") != std::string::npos);
  {
    std::istringstream body(r.out);
    int data_rows = 0;
    for (std::string l; std::getline(body, l);)
      if (!l.empty() && l[0] != '#' && l[0] != 'n') ++data_rows;
    CHECK(data_rows == 10);
  }

  CHECK(run_cli("bench --alg t --family nested --out /nonexistent-dir/x.csv").exit_code == 2);
}

TEST_CASE("cli output re-parses to the library result", "[cli]") {
  bral::GeneratorConfig cfg;
  cfg.max_size = 15;
  for (std::uint64_t i = 0; i < 10; ++i) {
    bral::Term t = bral::gen_beta_normal(cfg, i);
    RunResult r = run_cli("translate --alg t1 \"" + bral::print_lambda(t) + "\"");
    REQUIRE(r.exit_code == 0);
    std::string printed = r.out.substr(0, r.out.size() - 1);  // strip newline
    CHECK(bral::parse_cl(printed) == bral::translate(bral::Alg::TPrime, t));
  }
}
