#include "charsum/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <unordered_map>

#include "charsum/bounds.hpp"
#include "charsum/charsums.hpp"
#include "charsum/geometry.hpp"
#include "pair_accumulator.hpp"
#include "parallel.hpp"

namespace charsum {

namespace {

constexpr double kSlack = 1e-12;

bool leq(double a, double b) { return a <= b * (1.0 + kSlack); }

double rel_err(double got, double want) {
  if (want == 0.0) return std::abs(got);
  return std::abs(got - want) / std::abs(want);
}

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::uint64_t point_key(std::int64_t x, std::int64_t y) {
  return (static_cast<std::uint64_t>(x) << 32U) | static_cast<std::uint64_t>(y);
}

// Lattice points of the slab {x >= 1, x^2 < T, xy < T, y0 <= y < y1} for
// slab k >= 1, with y0 = 2^(k-1) sqrt T and y1 = 2^k sqrt T.
std::vector<std::pair<std::int64_t, std::int64_t>> slab_points(double T, int k) {
  const double s = std::sqrt(T);
  const double y0 = std::ldexp(s, k - 1);
  const double y1 = std::ldexp(s, k);
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t x = 1; static_cast<double>(x * x) < T; ++x) {
    const auto y_lo = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(y0)));
    for (std::int64_t y = y_lo; static_cast<double>(y) < y1 && static_cast<double>(x * y) < T; ++y) {
      out.emplace_back(x, y);
    }
  }
  return out;
}

// U_k followed by the family of pi_k, the rectangles that tile slab k.
std::vector<Rect> slab_rectangles(double T, int k, int depth) {
  std::vector<Rect> rects;
  rects.push_back(u_k_rect(T, k));
  for (auto& m : generate_family(T, k, depth)) rects.push_back(m.rect);
  return rects;
}

bool in_strip(std::int64_t x, std::int64_t y, double T, double t) {
  const auto xy = static_cast<double>(x * y);
  return xy >= T - 2.0 * t && xy <= T;
}

}  // namespace

std::uint64_t strip_count(double T, double t) {
  if (!(t > 1.0) || !(t < T) || !std::isfinite(T)) {
    throw std::invalid_argument("strip_count: requires 1 < t < T");
  }
  const auto n = lattice_bound(T);
  const double lo = T - 2.0 * t;
  std::uint64_t count = 0;
  for (std::uint64_t x = 1; x <= n; ++x) {
    const auto y_hi = n / x;
    auto y_lo = lo <= static_cast<double>(x) ? std::uint64_t{1}
                                             : static_cast<std::uint64_t>(std::ceil(lo / static_cast<double>(x)));
    // Guard the division rounding in both directions.
    while (y_lo > 1 && static_cast<double>(x * (y_lo - 1)) >= lo) --y_lo;
    while (static_cast<double>(x * y_lo) < lo) ++y_lo;
    if (y_hi >= y_lo) count += y_hi - y_lo + 1;
  }
  return count;
}

std::uint64_t divisor_sum(std::uint64_t T) {
  std::uint64_t total = 0;
  for (std::uint64_t x = 1; x <= T; ++x) total += T / x;
  return total;
}

std::uint64_t divisor_sum_hyperbola(std::uint64_t T) {
  std::uint64_t s = 0;
  while ((s + 1) * (s + 1) <= T) ++s;
  std::uint64_t total = 0;
  for (std::uint64_t x = 1; x <= s; ++x) total += T / x;
  return 2 * total - s * s;
}

double divisor_residual(std::uint64_t T) {
  if (T < 1) throw std::invalid_argument("divisor_residual: T must be >= 1");
  const auto t = static_cast<double>(T);
  return static_cast<double>(divisor_sum(T)) - t * std::log(t) - (2.0 * kEulerGamma - 1.0) * t;
}

ResidualScan scan_divisor_residual(std::uint64_t T_max) {
  std::vector<std::uint32_t> d(T_max + 1, 0);
  for (std::uint64_t a = 1; a <= T_max; ++a) {
    for (std::uint64_t b = a; b <= T_max; b += a) ++d[b];
  }
  ResidualScan scan{T_max, 0.0, 0};
  std::uint64_t D = 0;
  for (std::uint64_t T = 1; T <= T_max; ++T) {
    D += d[T];
    const auto t = static_cast<double>(T);
    const double res = static_cast<double>(D) - t * std::log(t) - (2.0 * kEulerGamma - 1.0) * t;
    const double norm = std::abs(res) / std::sqrt(t);
    if (norm > scan.max_normalized) {
      scan.max_normalized = norm;
      scan.argmax = T;
    }
  }
  return scan;
}

StripMeasurement measure_strip(double T, double t) {
  StripMeasurement m;
  m.T = T;
  m.t = t;
  m.count = strip_count(T, t);
  m.per_t_log_T = static_cast<double>(m.count) / (t * std::log(T));
  m.per_t = static_cast<double>(m.count) / t;
  return m;
}

int minimum_depth(double T) { return static_cast<int>(std::ceil(std::log2(T))) + 2; }

CoverReport cover_check(double T, int k, int depth, double t) {
  if (k < 1) throw std::invalid_argument("cover_check: k must be >= 1");
  CoverReport report;
  report.T = T;
  report.k = k;
  report.depth = depth;

  const auto points = slab_points(T, k);
  std::unordered_map<std::uint64_t, std::uint32_t> hits;
  hits.reserve(points.size() * 2);
  for (const auto& [x, y] : points) hits.emplace(point_key(x, y), 0);

  for (const auto& rect : slab_rectangles(T, k, depth)) {
    for (const auto& [x, y] : rect_lattice_points(rect)) {
      auto it = hits.find(point_key(x, y));
      if (it == hits.end()) {
        ++report.outside_slab;
      } else {
        ++it->second;
      }
    }
  }
  report.slab_points = points.size();
  for (const auto& [x, y] : points) {
    const auto n = hits[point_key(x, y)];
    if (n == 1) {
      ++report.covered;
    } else if (n > 1) {
      ++report.multiply_covered;
    } else if (in_strip(x, y, T, t)) {
      ++report.uncovered_in_strip;
    } else {
      ++report.uncovered;
    }
  }
  return report;
}

DecompositionResult decomposition_sum(const DirichletCharacter& chi1,
                                      const DirichletCharacter& chi2, double T, int depth,
                                      double t) {
  if (!(T > 1.0) || !std::isfinite(T)) throw std::invalid_argument("decomposition_sum: T must be > 1");
  detail::PairAccumulator acc(chi1.order(), chi2.order());
  const detail::PairValue value(chi1, chi2, acc);
  DecompositionResult result;
  auto take = [&](std::int64_t x, std::int64_t y) {
    const auto idx = value(x, y);
    if (idx >= 0) acc.add(static_cast<std::uint64_t>(idx), 1);
    ++result.points;
  };

  // U_0 restricted to y >= 1.
  const Rect u0 = u_k_rect(T, 0);
  ++result.rectangles;
  for (const auto& [x, y] : rect_lattice_points(u0)) {
    if (y < 1) continue;
    take(x, y);
    ++result.rect_points;
  }

  const double s = std::sqrt(T);
  for (int k = 1; std::ldexp(s, k - 1) < T; ++k) {
    const auto points = slab_points(T, k);
    std::unordered_map<std::uint64_t, std::uint32_t> hits;
    hits.reserve(points.size() * 2);
    for (const auto& [x, y] : points) hits.emplace(point_key(x, y), 0);

    for (const auto& rect : slab_rectangles(T, k, depth)) {
      ++result.rectangles;
      for (const auto& [x, y] : rect_lattice_points(rect)) {
        auto it = hits.find(point_key(x, y));
        if (it == hits.end()) {
          throw VerificationFailure("decomposition_sum: rectangle point outside its slab");
        }
        if (++it->second > 1) throw VerificationFailure("decomposition_sum: point covered twice");
        take(x, y);
        ++result.rect_points;
      }
    }
    for (const auto& [x, y] : points) {
      if (hits[point_key(x, y)] != 0) continue;
      if (!in_strip(x, y, T, t)) {
        throw VerificationFailure("decomposition_sum: uncovered point outside the strip; depth " +
                                  std::to_string(depth) + " is insufficient");
      }
      take(x, y);
      ++result.strip_points;
    }
  }
  result.sum = acc.finish();
  return result;
}

ChainCheck check_chain_areas(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> x0_dist(1.0, 50.0);
  std::uniform_real_distribution<double> delta_frac(0.25, 3.0);
  std::uniform_real_distribution<double> log_T(0.0, std::log(1e6));
  std::uniform_int_distribution<int> n_dist(1, 5);

  ChainCheck check;
  check.chains = count;
  for (std::size_t i = 0; i < count; ++i) {
    const double x0 = x0_dist(rng);
    const double x = x0 + delta_frac(rng) * x0;
    const double T = std::exp(log_T(rng)) * x;
    const int n = n_dist(rng);
    const ChainParams c(x0, x, T);
    const Rect phi = chain_rect(c, n);
    const auto closed = chain_areas_closed(c, n);
    check.max_rel_err_phi = std::max(check.max_rel_err_phi, rel_err(closed.phi, phi.area()));
    check.max_rel_err_u_phi =
        std::max(check.max_rel_err_u_phi, rel_err(closed.u_phi, u_op(phi).area()));
    const Rect next = chain_rect(c, n + 1);
    const Rect via_r = r_op(phi);
    for (auto [a, b] : {std::pair{next.x0(), via_r.x0()}, std::pair{next.x1(), via_r.x1()},
                        std::pair{next.y0(), via_r.y0()}, std::pair{next.y1(), via_r.y1()}}) {
      check.max_rel_err_next = std::max(check.max_rel_err_next, rel_err(b, a));
    }
  }
  return check;
}

FamilyCheck check_family(double T, int k, int max_order) {
  FamilyCheck check;
  check.T = T;
  check.k = k;
  check.max_order = max_order;
  check.per_order.assign(static_cast<std::size_t>(max_order) + 1, 0);

  std::vector<double> order_bound(static_cast<std::size_t>(max_order) + 1);
  for (int l = 0; l <= max_order; ++l) order_bound[static_cast<std::size_t>(l)] = lemma5_bound(T, k, l);

  for (const auto& m : generate_family(T, k, max_order)) {
    ++check.members;
    ++check.per_order[static_cast<std::size_t>(m.order)];
    const Rect& p = m.rect;
    if (!(std::abs(p.x1() * p.y1() - T) <= kOnHyperbolaTol * T)) ++check.on_gamma_violations;

    const double area = p.area();
    const double ratio = p.width() / p.x1();
    if (!leq(ratio, 0.5)) ++check.ratio_violations;

    const Rect r = r_op(p);
    const Rect u = u_op(p);
    const double r_ratio = r.area() / (area / 4.0);
    check.max_r_ratio = std::max(check.max_r_ratio, r_ratio);
    if (!leq(r_ratio, 1.0)) ++check.r_area_violations;

    const double u_bound = area / (4.0 * (1.0 - 1.5 * ratio));
    const double u_ratio = u.area() / u_bound;
    check.max_u_ratio = std::max(check.max_u_ratio, u_ratio);
    if (!leq(u_ratio, 1.0)) ++check.u_area_violations;

    for (const Rect* child : {&r, &u}) {
      if (!leq(child->width() / child->x1(), (2.0 / 3.0) * ratio)) ++check.contraction_violations;
    }

    const double o_ratio = area / order_bound[static_cast<std::size_t>(m.order)];
    check.max_order_ratio = std::max(check.max_order_ratio, o_ratio);
    if (!leq(o_ratio, 1.0)) ++check.order_area_violations;
  }
  for (int l = 0; l <= max_order; ++l) {
    if (check.per_order[static_cast<std::size_t>(l)] != (std::uint64_t{1} << l)) ++check.count_violations;
  }
  return check;
}

std::vector<BurgessRecord> burgess_scan(std::uint64_t q_max, unsigned jobs) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t q = 3; q <= q_max; ++q) {
    if (is_prime(q)) primes.push_back(q);
  }
  std::vector<BurgessRecord> out(primes.size());
  detail::parallel_for(primes.size(), jobs, [&](std::size_t i) {
    const auto q = primes[i];
    BurgessRecord rec;
    rec.q = q;
    rec.pv_bound = std::sqrt(static_cast<double>(q)) * std::log(static_cast<double>(q));
    const auto chars = enumerate_characters(q);
    for (std::size_t idx = 1; idx < chars.size(); ++idx) {
      const auto best = max_interval_sum(chars[idx], q);
      ++rec.characters;
      if (best.magnitude > rec.max_abs) {
        rec.max_abs = best.magnitude;
        rec.chi_index = idx;
        rec.M = best.M;
        rec.N = best.N;
      }
      const double c = best.magnitude / burgess_rhs(static_cast<double>(best.N), q, 2, true);
      rec.c_burgess = std::max(rec.c_burgess, c);
    }
    out[i] = rec;
  });
  return out;
}

std::string burgess_csv(const std::vector<BurgessRecord>& records) {
  std::ostringstream os;
  os << "q,characters,max_abs,chi,M,N,pv_bound,c_burgess2\n";
  for (const auto& r : records) {
    os << r.q << ',' << r.characters << ',' << fmt12(r.max_abs) << ',' << r.chi_index << ',' << r.M
       << ',' << r.N << ',' << fmt12(r.pv_bound) << ',' << fmt12(r.c_burgess) << '\n';
  }
  return os.str();
}

}  // namespace charsum
