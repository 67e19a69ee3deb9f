// abstraction.hpp
// Copyright (c) 2026, the bral authors
// Licensed under the Apache License Version 2.0.
//
// Bracket abstraction algorithms. Each algorithm is an ordered table of
// equations over CL terms; the first equation whose pattern and side
// condition match is used. Some algorithms are instead defined by an
// optimisation table: the abstraction skeleton always builds S-nodes and a
// single Opt pass rewrites each freshly built S-node at its root, first
// matching optimisation wins. abstract_rewrite_mode applies the same
// optimisation tables as a rewrite system to fixpoint instead, which is a
// genuinely different (and generally weaker) algorithm.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bral/term.hpp"

namespace bral {

enum class Alg : std::uint8_t {
  Fab,
  Abf,
  AbfPrime,
  AbcfPrime,
  Schonfinkel,
  SchonfinkelPrime,
  SchonfinkelMinusEta,
  SchonfinkelPrimeMinusEta,
  T,
  TPrime,
  TDoublePrime,
  TMinusEta,
  TPrimeMinusEta,
  AbsDash1,
  TStar,
  TStarPrime,
  TStarDoublePrime,
};

inline constexpr std::array<Alg, 17> kAllAlgs = {
    Alg::Fab,
    Alg::Abf,
    Alg::AbfPrime,
    Alg::AbcfPrime,
    Alg::Schonfinkel,
    Alg::SchonfinkelPrime,
    Alg::SchonfinkelMinusEta,
    Alg::SchonfinkelPrimeMinusEta,
    Alg::T,
    Alg::TPrime,
    Alg::TDoublePrime,
    Alg::TMinusEta,
    Alg::TPrimeMinusEta,
    Alg::AbsDash1,
    Alg::TStar,
    Alg::TStarPrime,
    Alg::TStarDoublePrime,
};

constexpr std::string_view alg_cli_name(Alg a) {
  switch (a) {
    case Alg::Fab: return "fab";
    case Alg::Abf: return "abf";
    case Alg::AbfPrime: return "abf1";
    case Alg::AbcfPrime: return "abcf1";
    case Alg::Schonfinkel: return "s";
    case Alg::SchonfinkelPrime: return "s1";
    case Alg::SchonfinkelMinusEta: return "s-noeta";
    case Alg::SchonfinkelPrimeMinusEta: return "s1-noeta";
    case Alg::T: return "t";
    case Alg::TPrime: return "t1";
    case Alg::TDoublePrime: return "t2";
    case Alg::TMinusEta: return "t-noeta";
    case Alg::TPrimeMinusEta: return "t1-noeta";
    case Alg::AbsDash1: return "absdash1";
    case Alg::TStar: return "tstar";
    case Alg::TStarPrime: return "tstar1";
    case Alg::TStarDoublePrime: return "tstar2";
  }
  return "?";
}

constexpr std::string_view alg_display_name(Alg a) {
  switch (a) {
    case Alg::Fab: return "(fab)";
    case Alg::Abf: return "(abf)";
    case Alg::AbfPrime: return "(abf')";
    case Alg::AbcfPrime: return "(abcf')";
    case Alg::Schonfinkel: return "S";
    case Alg::SchonfinkelPrime: return "S'";
    case Alg::SchonfinkelMinusEta: return "S-noeta";
    case Alg::SchonfinkelPrimeMinusEta: return "S'-noeta";
    case Alg::T: return "T";
    case Alg::TPrime: return "T'";
    case Alg::TDoublePrime: return "T''";
    case Alg::TMinusEta: return "T-noeta";
    case Alg::TPrimeMinusEta: return "T'-noeta";
    case Alg::AbsDash1: return "Abs/Dash/1";
    case Alg::TStar: return "T*";
    case Alg::TStarPrime: return "T*'";
    case Alg::TStarDoublePrime: return "T*''";
  }
  return "?";
}

constexpr std::optional<Alg> alg_from_cli_name(std::string_view s) {
  for (Alg a : kAllAlgs)
    if (alg_cli_name(a) == s) return a;
  return std::nullopt;
}

struct TraceEntry {
  std::string rule;  // e.g. "T.4", "T'.opt.3", "[x]"
  std::string at;    // path from the abstraction input: "", "fun", "fun.arg", ...
};
using Trace = std::vector<TraceEntry>;

namespace detail {

enum class Eq : std::uint8_t {
  KFree,     // K t             if x not free in t
  IVar,      // I               if t = x
  Eta,       // s               if t = s x, x not free in s
  CMid,      // C u v           if t = u x v, x free in neither u nor v
  SMid,      // S u [x]v        if t = u x v, x not free in u
  BpTri,     // B' u s [x]v     if t = u s v, x free in neither u nor s
  CpTri,     // C' u [x]s v     if t = u s v, x free in neither u nor v
  SpTri,     // S' u [x]s [x]v  if t = u s v, x not free in u
  BFun,      // B s [x]v        if t = s v, x not free in s
  BStarOrB,  // B* s v1 v2 if t = s v, x not free in s, [x]v = B v1 v2; else B s [x]v
  CArg,      // C [x]s v        if t = s v, x not free in v
  SApp,      // S [x]s [x]v     if t = s v
  KAny,      // K t             unconditional
};

struct EqRow {
  Eq eq;
  const char* label;
  const char* alt_label = nullptr;  // BStarOrB: label of the plain-B branch
};

struct EqTableDef {
  const char* name;
  bool closed_u;  // equations with metavariable u additionally need u closed
  std::span<const EqRow> rows;
};

enum class OptRule : std::uint8_t {
  KK_K,        // S (K s) (K t)      -> K (s t)
  KI_Id,       // S (K s) I          -> s
  KApp_Bp,     // S (K (u s)) t      -> B' u s t
  K_B,         // S (K s) t          -> B s t
  B_K_Cp,      // S (B u s) (K t)    -> C' u s t
  Bp_K_Cp,     // S (B' u1 u2 s) (K t) -> C' (u1 u2) s t
  Any_K_C,     // S s (K t)          -> C s t
  B_Sp,        // S (B u s) t        -> S' u s t
  Bp_Sp,       // S (B' u1 u2 s) t   -> S' (u1 u2) s t
  KB_Bstar,    // S (K u) (B s t)    -> B* u s t
  Bstar_K_Cp,  // S (B* u s1 s2) (K t) -> C' u (B s1 s2) t
  Bstar_Sp,    // S (B* u s1 s2) t   -> S' u (B s1 s2) t
  Fallback,    // S s t              -> S s t
};

struct OptRow {
  OptRule rule;
  const char* label;
};

struct OptTableDef {
  const char* name;
  std::span<const OptRow> rows;
};

inline constexpr EqRow kFabRows[] = {
    {Eq::SApp, "1"}, {Eq::IVar, "2"}, {Eq::KAny, "3"}};
inline constexpr EqRow kAbfRows[] = {
    {Eq::IVar, "1"}, {Eq::KFree, "2"}, {Eq::SApp, "3"}};
inline constexpr EqRow kSRows[] = {
    {Eq::KFree, "1"}, {Eq::IVar, "2"}, {Eq::Eta, "3"},
    {Eq::BFun, "4"},  {Eq::CArg, "5"}, {Eq::SApp, "6"}};
inline constexpr EqRow kSNoEtaRows[] = {
    {Eq::KFree, "1"}, {Eq::IVar, "2"}, {Eq::BFun, "4"},
    {Eq::CArg, "5"},  {Eq::SApp, "6"}};
inline constexpr EqRow kTRows[] = {
    {Eq::KFree, "1"}, {Eq::IVar, "2"},  {Eq::Eta, "3"},   {Eq::CMid, "4"},
    {Eq::SMid, "5"},  {Eq::BpTri, "6"}, {Eq::CpTri, "7"}, {Eq::SpTri, "8"},
    {Eq::BFun, "9"},  {Eq::CArg, "10"}, {Eq::SApp, "11"}};
inline constexpr EqRow kTNoEtaRows[] = {
    {Eq::KFree, "1"}, {Eq::IVar, "2"},  {Eq::BpTri, "6"}, {Eq::CpTri, "7"},
    {Eq::SpTri, "8"}, {Eq::BFun, "9"},  {Eq::CArg, "10"}, {Eq::SApp, "11"}};
inline constexpr EqRow kAbsDash1Rows[] = {
    {Eq::KFree, "1"}, {Eq::IVar, "2"}, {Eq::BpTri, "6"}, {Eq::CpTri, "7"},
    {Eq::SpTri, "8"}, {Eq::Eta, "3"},  {Eq::BFun, "9"},  {Eq::CArg, "10"},
    {Eq::SApp, "11"}};
inline constexpr EqRow kTStarRows[] = {
    {Eq::KFree, "1"},          {Eq::IVar, "2"},  {Eq::Eta, "3"},
    {Eq::BStarOrB, "B*", "9"}, {Eq::CMid, "4"},  {Eq::SMid, "5"},
    {Eq::CpTri, "7"},          {Eq::SpTri, "8"}, {Eq::CArg, "10"},
    {Eq::SApp, "11"}};

inline constexpr EqTableDef kFabTable{"fab", false, kFabRows};
inline constexpr EqTableDef kAbfTable{"abf", false, kAbfRows};
inline constexpr EqTableDef kSTable{"S", false, kSRows};
inline constexpr EqTableDef kSNoEtaTable{"S-noeta", false, kSNoEtaRows};
inline constexpr EqTableDef kTTable{"T", false, kTRows};
inline constexpr EqTableDef kTDoublePrimeTable{"T''", true, kTRows};
inline constexpr EqTableDef kTNoEtaTable{"T-noeta", false, kTNoEtaRows};
inline constexpr EqTableDef kAbsDash1Table{"Abs/Dash/1", true, kAbsDash1Rows};
inline constexpr EqTableDef kTStarTable{"T*", false, kTStarRows};

inline constexpr OptRow kAbfPrimeOpt[] = {{OptRule::KK_K, "1"}, {OptRule::Fallback, "2"}};
inline constexpr OptRow kAbcfPrimeOpt[] = {
    {OptRule::KK_K, "1"}, {OptRule::KI_Id, "2"}, {OptRule::Fallback, "3"}};
inline constexpr OptRow kSPrimeOpt[] = {
    {OptRule::KK_K, "1"}, {OptRule::KI_Id, "2"}, {OptRule::K_B, "3"},
    {OptRule::Any_K_C, "4"}, {OptRule::Fallback, "5"}};
inline constexpr OptRow kSPrimeNoEtaOpt[] = {
    {OptRule::KK_K, "1"}, {OptRule::K_B, "3"},
    {OptRule::Any_K_C, "4"}, {OptRule::Fallback, "5"}};
inline constexpr OptRow kTPrimeOpt[] = {
    {OptRule::KK_K, "1"},   {OptRule::KI_Id, "2"},   {OptRule::KApp_Bp, "3"},
    {OptRule::K_B, "4"},    {OptRule::B_K_Cp, "5"},  {OptRule::Bp_K_Cp, "6"},
    {OptRule::Any_K_C, "7"}, {OptRule::B_Sp, "8"},   {OptRule::Bp_Sp, "9"},
    {OptRule::Fallback, "10"}};
inline constexpr OptRow kTPrimeNoEtaOpt[] = {
    {OptRule::KK_K, "1"},    {OptRule::KApp_Bp, "3"}, {OptRule::K_B, "4"},
    {OptRule::B_K_Cp, "5"},  {OptRule::Bp_K_Cp, "6"}, {OptRule::Any_K_C, "7"},
    {OptRule::B_Sp, "8"},    {OptRule::Bp_Sp, "9"},   {OptRule::Fallback, "10"}};
inline constexpr OptRow kTStarPrimeOpt[] = {
    {OptRule::KK_K, "1"},    {OptRule::KI_Id, "2"},      {OptRule::KB_Bstar, "3"},
    {OptRule::K_B, "4"},     {OptRule::B_K_Cp, "5"},     {OptRule::Bstar_K_Cp, "6"},
    {OptRule::Any_K_C, "7"}, {OptRule::B_Sp, "8"},       {OptRule::Bstar_Sp, "9"},
    {OptRule::Fallback, "10"}};
inline constexpr OptRow kTStarDoublePrimeOpt[] = {
    {OptRule::KK_K, "1"},    {OptRule::KI_Id, "2"}, {OptRule::KB_Bstar, "3"},
    {OptRule::K_B, "4"},     {OptRule::B_K_Cp, "5"}, {OptRule::Any_K_C, "7"},
    {OptRule::B_Sp, "8"},    {OptRule::Fallback, "10"}};

inline constexpr OptTableDef kAbfPrimeTable{"abf'", kAbfPrimeOpt};
inline constexpr OptTableDef kAbcfPrimeTable{"abcf'", kAbcfPrimeOpt};
inline constexpr OptTableDef kSPrimeTable{"S'", kSPrimeOpt};
inline constexpr OptTableDef kSPrimeNoEtaTable{"S'-noeta", kSPrimeNoEtaOpt};
inline constexpr OptTableDef kTPrimeTable{"T'", kTPrimeOpt};
inline constexpr OptTableDef kTPrimeNoEtaTable{"T'-noeta", kTPrimeNoEtaOpt};
inline constexpr OptTableDef kTStarPrimeTable{"T*'", kTStarPrimeOpt};
inline constexpr OptTableDef kTStarDoublePrimeTable{"T*''", kTStarDoublePrimeOpt};

constexpr const EqTableDef* eq_table(Alg a) {
  switch (a) {
    case Alg::Fab: return &kFabTable;
    case Alg::Abf: return &kAbfTable;
    case Alg::Schonfinkel: return &kSTable;
    case Alg::SchonfinkelMinusEta: return &kSNoEtaTable;
    case Alg::T: return &kTTable;
    case Alg::TDoublePrime: return &kTDoublePrimeTable;
    case Alg::TMinusEta: return &kTNoEtaTable;
    case Alg::AbsDash1: return &kAbsDash1Table;
    case Alg::TStar: return &kTStarTable;
    default: return nullptr;
  }
}

constexpr const OptTableDef* opt_table(Alg a) {
  switch (a) {
    case Alg::AbfPrime: return &kAbfPrimeTable;
    case Alg::AbcfPrime: return &kAbcfPrimeTable;
    case Alg::SchonfinkelPrime: return &kSPrimeTable;
    case Alg::SchonfinkelPrimeMinusEta: return &kSPrimeNoEtaTable;
    case Alg::TPrime: return &kTPrimeTable;
    case Alg::TPrimeMinusEta: return &kTPrimeNoEtaTable;
    case Alg::TStarPrime: return &kTStarPrimeTable;
    case Alg::TStarDoublePrime: return &kTStarDoublePrimeTable;
    default: return nullptr;
  }
}

inline std::string join_path(const std::string& p, const char* leg) {
  return p.empty() ? std::string(leg) : p + "." + leg;
}

inline bool is_prim(const ClTerm& t, Comb c) { return t.is_prim() && t.comb() == c; }

// t = c a
inline std::optional<ClTerm> match1(const ClTerm& t, Comb c) {
  if (t.is_app() && is_prim(t.fun(), c)) return t.arg();
  return std::nullopt;
}
// t = c a b
inline std::optional<std::pair<ClTerm, ClTerm>> match2(const ClTerm& t, Comb c) {
  if (!t.is_app()) return std::nullopt;
  if (auto a = match1(t.fun(), c)) return std::pair{*a, t.arg()};
  return std::nullopt;
}
// t = c a b d
inline std::optional<std::array<ClTerm, 3>> match3(const ClTerm& t, Comb c) {
  if (!t.is_app()) return std::nullopt;
  if (auto ab = match2(t.fun(), c)) return std::array{ab->first, ab->second, t.arg()};
  return std::nullopt;
}

inline ClTerm cp(Comb c) { return ClTerm::prim(c); }

inline std::optional<ClTerm> opt_try(const OptTableDef& table, const ClTerm& s1,
                                     const ClTerm& s2, bool with_fallback,
                                     const char** fired = nullptr) {
  for (const OptRow& row : table.rows) {
    auto hit = [&](ClTerm r) {
      if (fired) *fired = row.label;
      return r;
    };
    switch (row.rule) {
      case OptRule::KK_K:
        if (auto a = match1(s1, Comb::K))
          if (auto b = match1(s2, Comb::K))
            return hit(ClTerm::app(cp(Comb::K), ClTerm::app(*a, *b)));
        break;
      case OptRule::KI_Id:
        if (is_prim(s2, Comb::I))
          if (auto a = match1(s1, Comb::K)) return hit(*a);
        break;
      case OptRule::KApp_Bp:
        if (auto a = match1(s1, Comb::K))
          if (a->is_app()) return hit(spine(cp(Comb::Bp), a->fun(), a->arg(), s2));
        break;
      case OptRule::K_B:
        if (auto a = match1(s1, Comb::K)) return hit(spine(cp(Comb::B), *a, s2));
        break;
      case OptRule::B_K_Cp:
        if (auto us = match2(s1, Comb::B))
          if (auto t2 = match1(s2, Comb::K))
            return hit(spine(cp(Comb::Cp), us->first, us->second, *t2));
        break;
      case OptRule::Bp_K_Cp:
        if (auto u12s = match3(s1, Comb::Bp))
          if (auto t2 = match1(s2, Comb::K))
            return hit(spine(cp(Comb::Cp), ClTerm::app((*u12s)[0], (*u12s)[1]), (*u12s)[2], *t2));
        break;
      case OptRule::Any_K_C:
        if (auto t2 = match1(s2, Comb::K)) return hit(spine(cp(Comb::C), s1, *t2));
        break;
      case OptRule::B_Sp:
        if (auto us = match2(s1, Comb::B))
          return hit(spine(cp(Comb::Sp), us->first, us->second, s2));
        break;
      case OptRule::Bp_Sp:
        if (auto u12s = match3(s1, Comb::Bp))
          return hit(spine(cp(Comb::Sp), ClTerm::app((*u12s)[0], (*u12s)[1]), (*u12s)[2], s2));
        break;
      case OptRule::KB_Bstar:
        if (auto a = match1(s1, Comb::K))
          if (auto st = match2(s2, Comb::B))
            return hit(spine(cp(Comb::Bstar), *a, st->first, st->second));
        break;
      case OptRule::Bstar_K_Cp:
        if (auto us12 = match3(s1, Comb::Bstar))
          if (auto t2 = match1(s2, Comb::K))
            return hit(spine(cp(Comb::Cp), (*us12)[0],
                             spine(cp(Comb::B), (*us12)[1], (*us12)[2]), *t2));
        break;
      case OptRule::Bstar_Sp:
        if (auto us12 = match3(s1, Comb::Bstar))
          return hit(spine(cp(Comb::Sp), (*us12)[0],
                           spine(cp(Comb::B), (*us12)[1], (*us12)[2]), s2));
        break;
      case OptRule::Fallback:
        if (with_fallback) return hit(spine(cp(Comb::S), s1, s2));
        return std::nullopt;
    }
  }
  return std::nullopt;
}

inline ClTerm abstract_opt_based(const OptTableDef& table, const Var& x, const ClTerm& t,
                                 Trace* trace, const std::string& path) {
  std::string name(table.name);
  if (t.is_app()) {
    if (trace) trace->push_back({name + ".app", path});
    ClTerm a = abstract_opt_based(table, x, t.fun(), trace, join_path(path, "fun"));
    ClTerm b = abstract_opt_based(table, x, t.arg(), trace, join_path(path, "arg"));
    const char* fired = nullptr;
    ClTerm r = *opt_try(table, a, b, /*with_fallback=*/true, &fired);
    if (trace) trace->push_back({name + ".opt." + fired, path});
    return r;
  }
  if (t.is_var() && t.name() == x.name) {
    if (trace) trace->push_back({name + ".I", path});
    return cp(Comb::I);
  }
  if (trace) trace->push_back({name + ".K", path});
  return ClTerm::app(cp(Comb::K), t);
}

inline ClTerm abstract_eq_based(const EqTableDef& table, const Var& x, const ClTerm& t,
                                Trace* trace, const std::string& path) {
  auto rec = [&](const ClTerm& sub, const char* leg) {
    return abstract_eq_based(table, x, sub, trace, join_path(path, leg));
  };
  auto fire = [&](const char* label) {
    if (trace) trace->push_back({std::string(table.name) + "." + label, path});
  };
  // u is closed when required by the table (T'' and Abs/Dash/1).
  auto u_ok = [&](const ClTerm& u) {
    return !occurs_free(u, x) && (!table.closed_u || is_closed(u));
  };

  for (const EqRow& row : table.rows) {
    switch (row.eq) {
      case Eq::KFree:
        if (!occurs_free(t, x)) {
          fire(row.label);
          return ClTerm::app(cp(Comb::K), t);
        }
        break;
      case Eq::IVar:
        if (t.is_var() && t.name() == x.name) {
          fire(row.label);
          return cp(Comb::I);
        }
        break;
      case Eq::Eta:
        if (t.is_app() && t.arg().is_var() && t.arg().name() == x.name &&
            !occurs_free(t.fun(), x)) {
          fire(row.label);
          return t.fun();
        }
        break;
      case Eq::CMid:
        if (t.is_app() && t.fun().is_app()) {
          ClTerm u = t.fun().fun(), mid = t.fun().arg(), v = t.arg();
          if (mid.is_var() && mid.name() == x.name && u_ok(u) && !occurs_free(v, x)) {
            fire(row.label);
            return spine(cp(Comb::C), u, v);
          }
        }
        break;
      case Eq::SMid:
        if (t.is_app() && t.fun().is_app()) {
          ClTerm u = t.fun().fun(), mid = t.fun().arg();
          if (mid.is_var() && mid.name() == x.name && u_ok(u)) {
            fire(row.label);
            return spine(cp(Comb::S), u, rec(t.arg(), "arg"));
          }
        }
        break;
      case Eq::BpTri:
        if (t.is_app() && t.fun().is_app()) {
          ClTerm u = t.fun().fun(), s = t.fun().arg();
          if (u_ok(u) && !occurs_free(s, x)) {
            fire(row.label);
            return spine(cp(Comb::Bp), u, s, rec(t.arg(), "arg"));
          }
        }
        break;
      case Eq::CpTri:
        if (t.is_app() && t.fun().is_app()) {
          ClTerm u = t.fun().fun(), s = t.fun().arg(), v = t.arg();
          if (u_ok(u) && !occurs_free(v, x)) {
            fire(row.label);
            return spine(cp(Comb::Cp), u, rec(s, "fun.arg"), v);
          }
        }
        break;
      case Eq::SpTri:
        if (t.is_app() && t.fun().is_app()) {
          ClTerm u = t.fun().fun(), s = t.fun().arg();
          if (u_ok(u)) {
            fire(row.label);
            return spine(cp(Comb::Sp), u, rec(s, "fun.arg"), rec(t.arg(), "arg"));
          }
        }
        break;
      case Eq::BFun:
        if (t.is_app() && !occurs_free(t.fun(), x)) {
          fire(row.label);
          return spine(cp(Comb::B), t.fun(), rec(t.arg(), "arg"));
        }
        break;
      case Eq::BStarOrB:
        if (t.is_app() && !occurs_free(t.fun(), x)) {
          std::size_t mark = trace ? trace->size() : 0;
          ClTerm r = rec(t.arg(), "arg");
          const char* label = row.alt_label;
          ClTerm out = spine(cp(Comb::B), t.fun(), r);
          if (auto v12 = match2(r, Comb::B)) {
            label = row.label;
            out = spine(cp(Comb::Bstar), t.fun(), v12->first, v12->second);
          }
          if (trace)
            trace->insert(trace->begin() + static_cast<std::ptrdiff_t>(mark),
                          {std::string(table.name) + "." + label, path});
          return out;
        }
        break;
      case Eq::CArg:
        if (t.is_app() && !occurs_free(t.arg(), x)) {
          fire(row.label);
          return spine(cp(Comb::C), rec(t.fun(), "fun"), t.arg());
        }
        break;
      case Eq::SApp:
        if (t.is_app()) {
          fire(row.label);
          return spine(cp(Comb::S), rec(t.fun(), "fun"), rec(t.arg(), "arg"));
        }
        break;
      case Eq::KAny:
        fire(row.label);
        return ClTerm::app(cp(Comb::K), t);
    }
  }
  throw std::logic_error("abstraction table fell through");
}

// Leftmost-innermost rewriting with the table's optimisations, to fixpoint.
inline ClTerm rewrite_fixpoint(const OptTableDef& table, const ClTerm& t) {
  ClTerm cur = t;
  if (cur.is_app())
    cur = ClTerm::app(rewrite_fixpoint(table, cur.fun()), rewrite_fixpoint(table, cur.arg()));
  if (auto s12 = match2(cur, Comb::S))
    if (auto r = opt_try(table, s12->first, s12->second, /*with_fallback=*/false))
      return rewrite_fixpoint(table, *r);
  return cur;
}

}  // namespace detail

inline bool alg_uses_opt(Alg a) { return detail::opt_table(a) != nullptr; }

// Abstract x from t with the chosen algorithm.
inline ClTerm abstract(Alg alg, const Var& x, const ClTerm& t, Trace* trace = nullptr) {
  if (const auto* ot = detail::opt_table(alg))
    return detail::abstract_opt_based(*ot, x, t, trace, "");
  return detail::abstract_eq_based(*detail::eq_table(alg), x, t, trace, "");
}

// The optimisation step on its own: the result of Opt{S s1 s2}.
inline ClTerm opt(Alg alg, const ClTerm& s1, const ClTerm& s2) {
  const auto* ot = detail::opt_table(alg);
  if (!ot) throw std::invalid_argument("opt: algorithm has no optimisation table");
  return *detail::opt_try(*ot, s1, s2, /*with_fallback=*/true);
}

// Multivariate abstraction: [x1,...,xn]t = [x1]([x2](...[xn]t)).
inline ClTerm abstract_multi(Alg alg, std::span<const Var> xs, const ClTerm& t) {
  if (xs.empty()) throw std::invalid_argument("abstract_multi: no variables");
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (xs[i] == xs[j]) throw std::invalid_argument("abstract_multi: duplicate variable");
  ClTerm cur = t;
  for (std::size_t i = xs.size(); i-- > 0;) cur = abstract(alg, xs[i], cur);
  return cur;
}

// The induced translation: variables and constants map to themselves,
// applications map pointwise, every abstraction is processed innermost-first.
inline ClTerm translate(Alg alg, const Term& t, Trace* trace = nullptr) {
  switch (t.kind()) {
    case Term::Kind::Var: return ClTerm::var(t.name());
    case Term::Kind::Prim: return ClTerm::prim(t.comb());
    case Term::Kind::App:
      return ClTerm::app(translate(alg, t.fun(), trace), translate(alg, t.arg(), trace));
    case Term::Kind::Abs: {
      ClTerm body = translate(alg, t.body(), trace);
      if (trace) trace->push_back({"abstract [" + t.binder() + "]", ""});
      return abstract(alg, Var(t.binder()), body, trace);
    }
  }
  throw std::logic_error("bad term");
}

// Optimisations applied as rewrite rules anywhere in the intermediate term,
// to fixpoint, after each S-introduction.
inline ClTerm abstract_rewrite_mode(Alg alg, const Var& x, const ClTerm& t) {
  const auto* ot = detail::opt_table(alg);
  if (!ot) throw std::invalid_argument("abstract_rewrite_mode: algorithm has no optimisation table");
  if (t.is_app()) {
    ClTerm built = spine(detail::cp(Comb::S), abstract_rewrite_mode(alg, x, t.fun()),
                         abstract_rewrite_mode(alg, x, t.arg()));
    return detail::rewrite_fixpoint(*ot, built);
  }
  if (t.is_var() && t.name() == x.name) return detail::cp(Comb::I);
  return ClTerm::app(detail::cp(Comb::K), t);
}

namespace detail {

// True when some node of t is exactly head applied to argc arguments.
inline bool node_headed(const ClTerm& t, Comb head, int argc) {
  ClTerm cur = t;
  for (int i = 0; i < argc; ++i) {
    if (!cur.is_app()) return false;
    cur = cur.fun();
  }
  return is_prim(cur, head);
}

inline bool any_node_headed(const ClTerm& t, Comb head, int argc) {
  if (node_headed(t, head, argc)) return true;
  if (t.is_app())
    return any_node_headed(t.fun(), head, argc) || any_node_headed(t.arg(), head, argc);
  return false;
}

}  // namespace detail

// Forbidden-pattern scans characterizing translation images of normal forms.
inline bool is_t_normal(const ClTerm& t) {
  return !detail::any_node_headed(t, Comb::K, 2) && !detail::any_node_headed(t, Comb::I, 1) &&
         !detail::any_node_headed(t, Comb::B, 3) && !detail::any_node_headed(t, Comb::Bp, 4);
}

inline bool is_s_normal(const ClTerm& t) {
  return !detail::any_node_headed(t, Comb::K, 2) && !detail::any_node_headed(t, Comb::I, 1);
}

inline bool is_tstar_normal(const ClTerm& t) {
  return !detail::any_node_headed(t, Comb::K, 2) && !detail::any_node_headed(t, Comb::I, 1) &&
         !detail::any_node_headed(t, Comb::B, 3) && !detail::any_node_headed(t, Comb::Bstar, 4);
}

}  // namespace bral
