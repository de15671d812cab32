#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <partrec/cli.hpp>
#include <partrec/counting.hpp>
#include <partrec/oracle.hpp>
#include <partrec/verify.hpp>

using namespace partrec;
using oracle::ConstraintKind;

namespace {

// Time limits in seconds.
constexpr double kAnchorLimit = 1.0;
constexpr double kRecurrenceLimit = 60.0;
constexpr double kIdentityLimit = 30.0;
constexpr double kEulerLimit = 10.0;

constexpr std::size_t kRecurrenceBound = 2000;
constexpr std::size_t kIdentityBound = 500;
constexpr int kOracleBound = 40;
constexpr int kOracleBoundRestricted = 25;
constexpr std::size_t kParityBound = 5000;
constexpr std::size_t kEulerBound = 10000;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool ok;
  std::string detail;
};

Outcome anchored_values() {
  const auto start = Clock::now();
  struct Anchor {
    Family family;
    ConstraintKind kind;
    int n;
    long expected;
  };
  const std::vector<Anchor> anchors = {{Family::p, ConstraintKind::unrestricted, 5, 7},
                                       {Family::p2, ConstraintKind::two_color, 2, 5},
                                       {Family::op, ConstraintKind::overpartition, 3, 8}};
  std::ostringstream detail;
  bool ok = true;
  for (const auto& a : anchors) {
    const BigInt gf = build_table(a.family, a.n, Method::gf).values.at(a.n);
    const auto brute = oracle::count_partitions(a.n, a.kind);
    const bool good = gf == a.expected && brute == static_cast<unsigned long>(a.expected);
    ok = ok && good;
    detail << to_string(a.family) << '(' << a.n << ")=" << gf.get_str() << '/' << brute << ' ';
  }
  const double t = seconds_since(start);
  detail << "t=" << t << "s";
  return {ok && t < kAnchorLimit, detail.str()};
}

Outcome run_named(const std::vector<std::string>& names, std::size_t bound, double limit) {
  const auto start = Clock::now();
  const auto tables = verify::TableSet::build(bound);
  std::ostringstream detail;
  bool ok = true;
  for (const auto& name : names) {
    const auto* spec = verify::find_check(name);
    if (spec == nullptr) {
      ok = false;
      detail << name << ":missing ";
      continue;
    }
    const auto r = verify::run_check(*spec, tables, bound);
    if (!r.passed()) {
      ok = false;
      detail << name << ":fail@" << r.failure->n << ' ';
    }
  }
  const double t = seconds_since(start);
  detail << names.size() << " checks n<=" << bound << " t=" << t << "s";
  return {ok && t < limit, detail.str()};
}

Outcome oracle_equivalence() {
  const auto tables = verify::TableSet::build(kOracleBound);
  const std::vector<std::pair<ConstraintKind, Family>> pairs = {
      {ConstraintKind::unrestricted, Family::p},  {ConstraintKind::distinct, Family::q},
      {ConstraintKind::distinct_odd, Family::qq}, {ConstraintKind::two_color, Family::p2},
      {ConstraintKind::overpartition, Family::op}, {ConstraintKind::restricted_overpartition, Family::opr}};
  std::ostringstream detail;
  bool ok = true;
  for (const auto& [kind, family] : pairs) {
    const int limit = kind == ConstraintKind::restricted_overpartition ? kOracleBoundRestricted : kOracleBound;
    for (int n = 0; n <= limit; ++n) {
      if (tables.table(family).values[n] != static_cast<unsigned long>(oracle::count_partitions(n, kind))) {
        ok = false;
        detail << to_string(family) << " differs at n=" << n << ' ';
        break;
      }
    }
    detail << to_string(family) << "<=" << limit << ' ';
  }
  return {ok, detail.str()};
}

Outcome parity_triple() {
  const auto direct = parity_table(kParityBound, ParityMethod::direct);
  const auto thm7 = parity_table(kParityBound, ParityMethod::thm7);
  const auto macmahon = parity_table(kParityBound, ParityMethod::macmahon);
  const auto qq = qq_table(kParityBound);
  for (std::size_t n = 0; n <= kParityBound; ++n) {
    const int qq_parity = mpz_odd_p(qq.values[n].get_mpz_t()) ? 1 : 0;
    if (direct[n] != thm7[n] || direct[n] != macmahon[n] || qq_parity != direct[n]) {
      return {false, "disagreement at n=" + std::to_string(n)};
    }
  }
  return {true, "n<=" + std::to_string(kParityBound)};
}

Outcome fault_injection() {
  constexpr std::size_t bound = 120;
  const auto clean = verify::TableSet::build(bound);
  if (!verify::all_passed(verify::run_all(clean, bound))) return {false, "clean tables fail"};
  // Each mutation must fail somewhere, and at least one failure must point at
  // the index that determines it.
  struct Mutation {
    Family family;
    std::size_t index;
    std::int64_t expected;
  };
  const std::vector<Mutation> mutations = {{Family::p, 7, 7},   {Family::q, 3, 6},  {Family::qq, 8, 8},
                                           {Family::p2, 3, 6},  {Family::op, 4, 8}, {Family::opr, 3, 7},
                                           {Family::v, 9, 9},   {Family::p, 100, 100}};
  std::ostringstream detail;
  bool ok = true;
  for (const auto& m : mutations) {
    auto bad = clean;
    bad.table(m.family).values[m.index] += 1;
    bool hit = false;
    std::size_t failing = 0;
    for (const auto& r : verify::run_all(bad, bound)) {
      if (r.passed()) continue;
      ++failing;
      hit = hit || r.failure->n == m.expected;
    }
    detail << to_string(m.family) << '[' << m.index << "]:" << failing << ' ';
    ok = ok && hit;
  }
  return {ok, detail.str()};
}

Outcome euler_performance() {
  const auto start = Clock::now();
  const auto p = p_table_recurrence(kEulerBound);
  const double t = seconds_since(start);
  cli::BenchOptions opts;
  opts.max_n = kEulerBound;
  opts.methods = {"euler", "gf", "direct", "thm7", "macmahon"};
  const auto report = cli::run_bench(opts);
  const bool agree = !report.first_disagreement.has_value();
  std::ostringstream detail;
  detail << "p(" << kEulerBound << ") has " << p.values.back().get_str().size() << " digits, t=" << t
         << "s, bench " << (agree ? "agrees" : "disagrees");
  return {t < kEulerLimit && agree, detail.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"anchored values", anchored_values},
      {"recurrence checks",
       [] {
         return run_named({"euler", "ewell", "thm1", "thm2", "thm3", "thm4", "thm5", "thm6", "thm7",
                           "macmahon"},
                          kRecurrenceBound, kRecurrenceLimit);
       }},
      {"series identities",
       [] {
         return run_named({"pentagonal", "phi_product", "psi_product", "jacobi_heptagonal",
                           "jacobi_octagonal", "quintuple_heptagonal", "quintuple_lemma2_odd",
                           "quintuple_lemma2_even", "lemma1_plus", "lemma1_minus", "lemma2_odd",
                           "lemma2_even"},
                          kIdentityBound, kIdentityLimit);
       }},
      {"oracle equivalence", oracle_equivalence},
      {"parity agreement", parity_triple},
      {"fault injection", fault_injection},
      {"euler performance", euler_performance},
  };
  int failed = 0;
  int index = 1;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << index++ << " " << name << ": " << o.detail
              << std::endl;
    if (!o.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
