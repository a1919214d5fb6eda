#include "charsum/charsums.hpp"

#include "pair_accumulator.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace charsum {

namespace {

using detail::lifted_table;
using detail::PairAccumulator;

// Histogram of the prefix sum A(n) = sum_{y<=n} chi(y), kept as a cursor
// over one period so that successive queries cost the residue distance.
class PrefixCursor {
 public:
  explicit PrefixCursor(const DirichletCharacter& chi)
      : chi_(chi), hist_(chi.order(), 0) {}

  // Counts per exponent class for A(n); whole periods skipped unless chi
  // is principal.
  const std::vector<std::int64_t>& at(std::uint64_t n) {
    const auto q = chi_.modulus();
    move_to(n % q);
    periods_ = n / q;
    view_ = hist_;
    if (chi_.is_principal()) view_[0] += static_cast<std::int64_t>(periods_ * chi_.group().phi);
    return view_;
  }

 private:
  void move_to(std::uint64_t r) {
    while (pos_ < r) {
      ++pos_;
      const auto e = chi_.exponent_at(pos_);
      if (e != DirichletCharacter::kZero) ++hist_[static_cast<std::size_t>(e)];
    }
    while (pos_ > r) {
      const auto e = chi_.exponent_at(pos_);
      if (e != DirichletCharacter::kZero) --hist_[static_cast<std::size_t>(e)];
      --pos_;
    }
  }

  const DirichletCharacter& chi_;
  std::vector<std::int64_t> hist_;
  std::vector<std::int64_t> view_;
  std::uint64_t pos_ = 0;
  std::uint64_t periods_ = 0;
};

std::uint64_t isqrt(std::uint64_t n) {
  auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (s * s > n) --s;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s;
}

CyclotomicSum histogram_sum(const std::vector<std::int64_t>& counts) {
  CyclotomicSum out(counts.size());
  for (std::size_t j = 0; j < counts.size(); ++j) out.add_term(j, counts[j]);
  return out;
}

}  // namespace

std::uint64_t lattice_bound(double T) {
  if (!std::isfinite(T) || T < 0.0) throw std::invalid_argument("T must be finite and >= 0");
  return static_cast<std::uint64_t>(std::floor(T));
}

CyclotomicSum interval_sum(const DirichletCharacter& chi, std::uint64_t M, std::uint64_t N) {
  const auto q = chi.modulus();
  CyclotomicSum out(chi.order());
  if (chi.is_principal()) out.add_term(0, static_cast<std::int64_t>((N / q) * chi.group().phi));
  const auto rem = N % q;
  auto r = (M + 1) % q;
  for (std::uint64_t i = 0; i < rem; ++i) {
    const auto e = chi.exponent_at(r);
    if (e != DirichletCharacter::kZero) out.add_term(static_cast<std::uint64_t>(e));
    if (++r == q) r = 0;
  }
  return out;
}

CyclotomicSum convolution_sum_naive(const DirichletCharacter& chi1,
                                    const DirichletCharacter& chi2, double T) {
  const auto n = lattice_bound(T);
  PairAccumulator acc(chi1.order(), chi2.order());
  const auto L = static_cast<std::int64_t>(acc.order());
  const auto t1 = lifted_table(chi1, acc.scale1());
  const auto t2 = lifted_table(chi2, acc.scale2());
  const auto q1 = chi1.modulus();
  const auto q2 = chi2.modulus();
  for (std::uint64_t x = 1; x <= n; ++x) {
    const auto base = t1[x % q1];
    if (base < 0) continue;
    const auto ymax = n / x;
    std::uint64_t r = 1 % q2;
    for (std::uint64_t y = 1; y <= ymax; ++y) {
      const auto e = t2[r];
      if (e >= 0) {
        auto idx = base + e;
        if (idx >= L) idx -= L;
        acc.add(static_cast<std::uint64_t>(idx), 1);
      }
      if (++r == q2) r = 0;
    }
  }
  return acc.finish();
}

CyclotomicSum convolution_sum_hyperbola(const DirichletCharacter& chi1,
                                        const DirichletCharacter& chi2, double T) {
  const auto n = lattice_bound(T);
  PairAccumulator acc(chi1.order(), chi2.order());
  if (n == 0) return acc.finish();
  const auto L = static_cast<std::int64_t>(acc.order());
  const auto s = isqrt(n);
  const auto t1 = lifted_table(chi1, acc.scale1());
  const auto t2 = lifted_table(chi2, acc.scale2());
  const auto step1 = static_cast<std::int64_t>(acc.scale1());
  const auto step2 = static_cast<std::int64_t>(acc.scale2());

  // One half of the identity: sum_{a<=s} f(a) * B(n/a), where B is the
  // prefix sum of g. `step_g` lifts g's exponent classes.
  auto half = [&](const std::vector<std::int64_t>& f_table, std::uint64_t qf,
                  const DirichletCharacter& g, std::int64_t step_g) {
    PrefixCursor cursor(g);
    for (std::uint64_t a = 1; a <= s; ++a) {
      const auto base = f_table[a % qf];
      if (base < 0) continue;
      const auto& counts = cursor.at(n / a);
      std::int64_t idx = base;
      for (std::size_t j = 0; j < counts.size(); ++j) {
        if (counts[j] != 0) acc.add(static_cast<std::uint64_t>(idx), counts[j]);
        idx += step_g;
        if (idx >= L) idx -= L;
      }
    }
  };
  half(t1, chi1.modulus(), chi2, step2);
  half(t2, chi2.modulus(), chi1, step1);

  PrefixCursor c1(chi1);
  PrefixCursor c2(chi2);
  const auto square = histogram_sum(c1.at(s)) * histogram_sum(c2.at(s));
  CyclotomicSum out = acc.finish();
  out -= square;
  return out;
}

CyclotomicSum region_sum(const DirichletCharacter& chi1, const DirichletCharacter& chi2,
                         const Region& region) {
  PairAccumulator acc(chi1.order(), chi2.order());
  const detail::PairValue value_index(chi1, chi2, acc);

  if (region.kind == RegionKind::RectRegion) {
    for (const auto& [x, y] : rect_lattice_points(region.rect)) {
      const auto idx = value_index(x, y);
      if (idx >= 0) acc.add(static_cast<std::uint64_t>(idx), 1);
    }
    return acc.finish();
  }
  if (!std::isfinite(region.T) || !std::isfinite(region.t)) {
    throw std::invalid_argument("region_sum: unbounded region " + region.name());
  }
  // Every non-rectangle region lies in {x, y >= 1, xy <= T}.
  const auto n = lattice_bound(region.T);
  for (std::uint64_t x = 1; x <= n; ++x) {
    for (std::uint64_t y = 1; y <= n / x; ++y) {
      const auto xi = static_cast<std::int64_t>(x);
      const auto yi = static_cast<std::int64_t>(y);
      if (!region_contains(region, xi, yi)) continue;
      const auto idx = value_index(xi, yi);
      if (idx >= 0) acc.add(static_cast<std::uint64_t>(idx), 1);
    }
  }
  return acc.finish();
}

namespace {

struct HullPoint {
  double x, y;
  std::uint64_t index;
};

double cross(const HullPoint& o, const HullPoint& a, const HullPoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

std::vector<HullPoint> convex_hull(std::vector<HullPoint> pts) {
  std::sort(pts.begin(), pts.end(), [](const HullPoint& a, const HullPoint& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.index < b.index;
  });
  if (pts.size() < 3) return pts;
  std::vector<HullPoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace

IntervalMax max_interval_sum(const DirichletCharacter& chi, std::uint64_t n_max) {
  const auto q = chi.modulus();
  if (chi.is_principal()) {
    throw std::invalid_argument("max_interval_sum: principal character");
  }
  if (n_max < 1 || n_max > q) throw std::invalid_argument("max_interval_sum: need 1 <= N_max <= q");

  // prefix[r] = sum_{1<=n<=r} chi(n); periodic with period q.
  std::vector<std::complex<double>> prefix(q);
  std::complex<double> acc{0.0, 0.0};
  for (std::uint64_t r = 1; r < q; ++r) {
    const auto e = chi.exponent_at(r);
    if (e != DirichletCharacter::kZero) acc += root_of_unity(static_cast<std::uint64_t>(e), chi.order());
    prefix[r] = acc;
  }

  IntervalMax best;
  if (n_max + 1 >= q) {
    // Every ordered pair of distinct residues a < b gives the interval
    // (a, b]; its complement in the period has the negated sum.
    std::vector<HullPoint> pts;
    pts.reserve(q);
    for (std::uint64_t r = 0; r < q; ++r) pts.push_back({prefix[r].real(), prefix[r].imag(), r});
    const auto hull = convex_hull(std::move(pts));
    double best_sq = -1.0;
    std::uint64_t a_best = 0, b_best = 0;
    for (std::size_t i = 0; i < hull.size(); ++i) {
      for (std::size_t j = i + 1; j < hull.size(); ++j) {
        const double dx = hull[i].x - hull[j].x;
        const double dy = hull[i].y - hull[j].y;
        const double d2 = dx * dx + dy * dy;
        if (d2 > best_sq) {
          best_sq = d2;
          a_best = std::min(hull[i].index, hull[j].index);
          b_best = std::max(hull[i].index, hull[j].index);
        }
      }
    }
    best.magnitude = std::sqrt(std::max(best_sq, 0.0));
    best.M = a_best;
    best.N = b_best - a_best;
    return best;
  }

  for (std::uint64_t M = 0; M < q; ++M) {
    for (std::uint64_t N = 1; N <= n_max; ++N) {
      const double v = std::abs(prefix[(M + N) % q] - prefix[M]);
      if (v > best.magnitude) best = {v, M, N};
    }
  }
  return best;
}

}  // namespace charsum
