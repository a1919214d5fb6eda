// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "charsum/bounds.hpp"
#include "charsum/characters.hpp"
#include "charsum/charsums.hpp"
#include "charsum/geometry.hpp"
#include "charsum/sweep.hpp"
#include "charsum/verify.hpp"

using namespace charsum;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

bool rel_close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::abs(b); }

struct Outcome {
  bool ok;
  std::string detail;
};

// 1: hyperbola vs naive for every primitive pair 3 <= q1 <= q2 <= 25
Outcome oracle_equivalence() {
  std::vector<DirichletCharacter> prim;
  for (std::uint64_t q = 3; q <= 25; ++q) {
    for (auto i : primitive_indices(q)) prim.push_back(character_at(q, i));
  }
  std::uint64_t checked = 0, bad = 0;
  double worst = 0;
  for (std::size_t a = 0; a < prim.size(); ++a) {
    for (std::size_t b = 0; b < prim.size(); ++b) {
      if (prim[a].modulus() > prim[b].modulus()) continue;
      for (double T : {10.0, 50.0, 100.0, 500.0, 1000.0}) {
        const auto n = convolution_sum_naive(prim[a], prim[b], T).to_complex();
        const auto h = convolution_sum_hyperbola(prim[a], prim[b], T).to_complex();
        const double d = std::abs(n - h);
        worst = std::max(worst, d);
        bad += d > 1e-9;
        ++checked;
      }
    }
  }
  return {bad == 0, std::to_string(checked) + " sums, max |naive - hyperbola| = " + fmt(worst)};
}

// 2: decomposition sum, point accounting and coverage
Outcome decomposition() {
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs = {
      {3, 3}, {5, 7}, {4, 9}, {8, 8}, {11, 13}, {12, 25}, {1, 7}, {16, 5}, {19, 19}, {21, 23}};
  bool ok = true;
  std::uint64_t points = 0, slabs = 0;
  for (double T : {16.0, 100.0, 1000.0, 2000.0}) {
    const int depth = minimum_depth(T);
    std::uint64_t lattice = 0;
    for (std::uint64_t x = 1; static_cast<double>(x * x) < T; ++x) {
      for (std::uint64_t y = 1; static_cast<double>(x * y) < T; ++y) ++lattice;
    }
    for (auto [q1, q2] : pairs) {
      const auto chars1 = enumerate_characters(q1);
      const auto chars2 = enumerate_characters(q2);
      const auto& c1 = chars1[chars1.size() / 2];
      const auto& c2 = chars2[chars2.size() - 1];
      const auto d = decomposition_sum(c1, c2, T, depth);
      ok = ok && approx_equal(d.sum, region_sum(c1, c2, Region::omega1(T)), 1e-9);
      ok = ok && d.points == lattice;
      points += d.points;
    }
    for (int k = 1; std::ldexp(std::sqrt(T), k - 1) < T; ++k) {
      const auto r = cover_check(T, k, depth, 1.0);
      ok = ok && r.ok() && r.uncovered_in_strip == 0;
      ++slabs;
    }
  }
  return {ok, std::to_string(points) + " points accounted, " + std::to_string(slabs) +
                  " slabs with no uncovered or doubly covered point"};
}

// 3: chain closed forms and the family area lemmas to order 12
Outcome lemma_suite() {
  const auto chain = check_chain_areas(1000, 20261016);
  bool ok = chain.ok(1e-12);
  double r_ratio = 0, u_ratio = 0, order_ratio = 0;
  std::uint64_t members = 0;
  for (double T : {16.0, 1e3, 1e6}) {
    for (int k = 1; k <= 8; ++k) {
      const auto f = check_family(T, k, 12);
      ok = ok && f.ok();
      members += f.members;
      r_ratio = std::max(r_ratio, f.max_r_ratio);
      u_ratio = std::max(u_ratio, f.max_u_ratio);
      order_ratio = std::max(order_ratio, f.max_order_ratio);
    }
  }
  return {ok, "chain rel err " +
                  fmt(std::max({chain.max_rel_err_phi, chain.max_rel_err_u_phi, chain.max_rel_err_next})) +
                  "; " + std::to_string(members) + " members, max area ratios r " + fmt(r_ratio) +
                  " u " + fmt(u_ratio) + " order " + fmt(order_ratio)};
}

// 4: divisor-sum residual and strip counts
Outcome divisor_and_strip() {
  const auto scan = scan_divisor_residual(1'000'000);
  bool ok = scan.max_normalized < 3.0;
  double worst = 0;
  for (double T : {1e3, 1e4, 1e5}) {
    for (double e : {0.6, 0.75, 0.9}) {
      const auto m = measure_strip(T, std::pow(T, e));
      std::cout << "  strip T=" << fmt(T) << " t=T^" << e << " count=" << m.count
                << " count/(t ln T)=" << fmt(m.per_t_log_T) << " count/t=" << fmt(m.per_t) << "\n";
      worst = std::max(worst, m.per_t_log_T);
    }
  }
  ok = ok && worst <= 5.0;
  return {ok, "max |residual|/sqrt(T) = " + fmt(scan.max_normalized) + " at T=" +
                  std::to_string(scan.argmax) + "; max count/(t ln T) = " + fmt(worst)};
}

// 5: interval maxima for every character mod prime q <= 2000
Outcome burgess() {
  const auto records = burgess_scan(2000, 1);
  bool pv = true;
  double c = 0;
  for (const auto& r : records) {
    pv = pv && r.max_abs <= r.pv_bound;
    c = std::max(c, r.c_burgess);
  }
  const bool same = burgess_csv(records) == slurp(std::string(CHARSUM_FIXTURES) + "/burgess_baseline.csv");
  return {pv && same, std::to_string(records.size()) + " primes, sqrt(q) ln q " +
                          (pv ? "holds" : "violated") + ", fitted r=2 constant " + fmt(c) +
                          ", baseline " + (same ? "reproduced" : "differs")};
}

// 6: branch continuity and the q1 = q2 reduction
Outcome formulas() {
  const std::vector<double> qs = {3, 5, 7, 11, 23, 50, 97, 199, 500, 1999};
  double worst = 0;
  std::uint64_t checks = 0;
  for (double a : qs) {
    for (double b : qs) {
      const double q1 = std::min(a, b), q2 = std::max(a, b);
      for (int v : {1, 2}) {
        const double Tj = theorem1_threshold(q1, q2, v);
        const auto lo = theorem1_bound(Tj, q1, q2, 0, v);
        const auto hi = theorem1_bound(2 * Tj, q1, q2, 0, v);
        worst = std::max(worst, std::abs(evaluate(hi.exponents, Tj, q1, q2) / lo.value - 1));
        ++checks;
      }
    }
  }
  double cor_worst = 0;
  for (double q : qs) {
    for (int j = 1; j <= 3; ++j) {
      const double Tj = corollary1_threshold(q, j);
      const auto lo = corollary1_bound(Tj, q, 0);
      const auto hi = corollary1_bound(Tj * 1.5, q, 0);
      cor_worst = std::max(cor_worst, std::abs(evaluate(hi.exponents, Tj, q, q) / lo.value - 1));
    }
  }
  double reduce_worst = 0;
  for (double q : qs) {
    for (double e = 0.67; e <= 2.25; e += 0.01) {
      const double T = std::pow(q, e);
      const int variant = T <= corollary1_threshold(q, 1) ? 1 : 2;
      const double t1 = theorem1_bound(T, q, q, 0, variant).value;
      reduce_worst = std::max(reduce_worst, std::abs(t1 / corollary1_bound(T, q, 0).value - 1));
    }
  }
  const bool ok = worst <= 1e-9 && cor_worst <= 1e-9 && reduce_worst <= 1e-12;
  return {ok, std::to_string(checks) + " theorem joins, max rel gap " + fmt(worst) +
                  "; corollary joins " + fmt(cor_worst) + "; q1=q2 reduction " + fmt(reduce_worst)};
}

// 7: sweep regression under several job counts
Outcome sweep_regression() {
  const std::string dir = CHARSUM_FIXTURES;
  const auto baseline = slurp(dir + "/sweep_thm1_baseline.csv");
  auto cfg = load_sweep_config(dir + "/thm1_sweep.conf");
  bool ok = true;
  std::size_t n = 0;
  double c = 0;
  for (unsigned jobs : {1u, 4u}) {
    cfg.jobs = jobs;
    const auto res = sweep(cfg);
    ok = ok && to_csv(res.records) == baseline;
    n = res.records.size();
    c = fit_constant(res.records);
  }
  return {ok, std::to_string(n) + " records, max ratio " + fmt(c) + ", byte-identical for jobs 1 and 4"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 oracle equivalence", oracle_equivalence},
      {"2 decomposition correctness", decomposition},
      {"3 lemma suite", lemma_suite},
      {"4 divisor asymptotic and strip count", divisor_and_strip},
      {"5 interval sums mod primes", burgess},
      {"6 bound formulas", formulas},
      {"7 sweep regression", sweep_regression},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " [" << name << "] " << o.detail << " (" << fmt(s)
              << " s)" << std::endl;
  }
  return failed ? 1 : 0;
}
