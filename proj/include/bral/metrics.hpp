// metrics.hpp
// Copyright (c) 2026, the bral authors
// Licensed under the Apache License Version 2.0.
//
// Translation-size experiments over two term families that stress
// multi-variable sharing. Size is the atom count (see term.hpp); the fitted
// slope is a log-log least-squares fit over the larger half of n, which
// suppresses small-n noise.

#pragma once

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "bral/abstraction.hpp"
#include "bral/term.hpp"

namespace bral {

enum class Family : std::uint8_t { FanApply, NestedShared };

constexpr std::string_view family_cli_name(Family f) {
  switch (f) {
    case Family::FanApply: return "fan";
    case Family::NestedShared: return "nested";
  }
  return "?";
}

constexpr std::optional<Family> family_from_cli_name(std::string_view s) {
  if (s == "fan") return Family::FanApply;
  if (s == "nested") return Family::NestedShared;
  return std::nullopt;
}

// FanApply(n)     = \x1...xn. x1 x2 ... xn
// NestedShared(n) = \x1...xn. (x1 ... xn) (x1 ... xn)
// Both are closed beta-normal forms.
inline Term term_family(Family f, int n) {
  if (n < 1) throw std::invalid_argument("term_family: n must be positive");
  auto var_i = [](int i) { return Term::var("x" + std::to_string(i)); };
  Term row = var_i(1);
  for (int i = 2; i <= n; ++i) row = Term::app(std::move(row), var_i(i));
  Term body = f == Family::FanApply ? row : Term::app(row, row);
  for (int i = n; i >= 1; --i) body = Term::abs("x" + std::to_string(i), std::move(body));
  return body;
}

struct GrowthRow {
  int n = 0;
  std::size_t input_size = 0;
  std::size_t output_size = 0;
};

struct GrowthReport {
  Alg alg;
  Family family;
  std::vector<GrowthRow> rows;
  double fitted_slope = 0.0;
};

namespace detail {

inline double fit_loglog_slope(const std::vector<GrowthRow>& rows) {
  // least squares on (log n, log output_size), over the larger half of n
  std::size_t from = rows.size() / 2;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t m = 0;
  for (std::size_t i = from; i < rows.size(); ++i) {
    double lx = std::log(static_cast<double>(rows[i].n));
    double ly = std::log(static_cast<double>(rows[i].output_size));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++m;
  }
  double denom = m * sxx - sx * sx;
  if (denom == 0) return 0.0;
  return (m * sxy - sx * sy) / denom;
}

}  // namespace detail

inline GrowthReport growth_experiment(Alg alg, Family f, int n_max) {
  if (n_max < 8) throw std::invalid_argument("growth_experiment: n_max must be at least 8");
  GrowthReport rep{alg, f, {}, 0.0};
  rep.rows.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    Term t = term_family(f, n);
    ClTerm out = translate(alg, t);
    rep.rows.push_back({n, atom_count(t), atom_count(out)});
  }
  rep.fitted_slope = detail::fit_loglog_slope(rep.rows);
  return rep;
}

// Header, one row per n, then a final "# slope=..." comment (4 decimals).
inline std::string emit_csv(const GrowthReport& rep) {
  std::string out = "n,input_size,output_size\n";
  for (const GrowthRow& r : rep.rows) {
    out += std::to_string(r.n);
    out += ',';
    out += std::to_string(r.input_size);
    out += ',';
    out += std::to_string(r.output_size);
    out += '\n';
  }
  char slope[48];
  std::snprintf(slope, sizeof slope, "# slope=%.4f\n", rep.fitted_slope);
  out += slope;
  return out;
}

}  // namespace bral
