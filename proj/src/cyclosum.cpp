#include "charsum/cyclosum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace charsum {

std::complex<double> root_of_unity(std::uint64_t j, std::uint64_t m) {
  j %= m;
  // Exponents above m/2 map to negative angles so the argument of sin/cos
  // stays in [-pi, pi].
  const auto signed_j = (2 * j > m) ? static_cast<double>(j) - static_cast<double>(m)
                                    : static_cast<double>(j);
  const double angle = 2.0 * std::numbers::pi * signed_j / static_cast<double>(m);
  if (4 * j == m) return {0.0, 1.0};
  if (2 * j == m) return {-1.0, 0.0};
  if (4 * j == 3 * m) return {0.0, -1.0};
  return {std::cos(angle), std::sin(angle)};
}

CyclotomicSum::CyclotomicSum(std::uint64_t order) : order_(order) {
  if (order == 0) throw std::invalid_argument("CyclotomicSum: order must be >= 1");
  if (is_dense()) dense_.assign(order, 0);
}

CyclotomicSum CyclotomicSum::from_counts(std::uint64_t order,
                                         const std::vector<std::int64_t>& counts) {
  if (counts.size() != order) {
    throw std::invalid_argument("CyclotomicSum::from_counts: size mismatch");
  }
  CyclotomicSum s(order);
  if (s.is_dense()) {
    s.dense_ = counts;
  } else {
    for (std::uint64_t j = 0; j < order; ++j) {
      if (counts[j] != 0) s.sparse_.emplace_hint(s.sparse_.end(), j, counts[j]);
    }
  }
  return s;
}

void CyclotomicSum::add_term(std::uint64_t j, std::int64_t mult) {
  if (j >= order_) {
    throw std::out_of_range("CyclotomicSum::add_term: exponent " + std::to_string(j) +
                            " not below order " + std::to_string(order_));
  }
  if (mult == 0) return;
  if (is_dense()) {
    dense_[j] += mult;
    return;
  }
  auto it = sparse_.find(j);
  if (it == sparse_.end()) {
    sparse_.emplace(j, mult);
  } else if ((it->second += mult) == 0) {
    sparse_.erase(it);
  }
}

std::int64_t CyclotomicSum::count(std::uint64_t j) const {
  if (j >= order_) throw std::out_of_range("CyclotomicSum::count: exponent out of range");
  if (is_dense()) return dense_[j];
  auto it = sparse_.find(j);
  return it == sparse_.end() ? 0 : it->second;
}

std::vector<std::pair<std::uint64_t, std::int64_t>> CyclotomicSum::entries() const {
  std::vector<std::pair<std::uint64_t, std::int64_t>> out;
  if (is_dense()) {
    for (std::uint64_t j = 0; j < order_; ++j) {
      if (dense_[j] != 0) out.emplace_back(j, dense_[j]);
    }
  } else {
    out.assign(sparse_.begin(), sparse_.end());
  }
  return out;
}

CyclotomicSum CyclotomicSum::lift(std::uint64_t new_order) const {
  if (new_order == 0 || new_order % order_ != 0) {
    throw std::invalid_argument("CyclotomicSum::lift: " + std::to_string(new_order) +
                                " is not a multiple of " + std::to_string(order_));
  }
  const std::uint64_t scale = new_order / order_;
  CyclotomicSum out(new_order);
  for (const auto& [j, c] : entries()) out.add_term(j * scale, c);
  return out;
}

std::complex<double> CyclotomicSum::to_complex() const {
  // Real and imaginary parts accumulated separately in long double; the
  // summation order is fixed (increasing j) so results are reproducible.
  long double re = 0.0L;
  long double im = 0.0L;
  for (const auto& [j, c] : entries()) {
    const auto z = root_of_unity(j, order_);
    re += static_cast<long double>(c) * z.real();
    im += static_cast<long double>(c) * z.imag();
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

CyclotomicSum CyclotomicSum::canonical() const {
  CyclotomicSum out = *this;
  if (order_ < 2) return out;
  if (is_dense()) {
    const auto lo = *std::min_element(dense_.begin(), dense_.end());
    if (lo != 0) {
      for (auto& c : out.dense_) c -= lo;
    }
    return out;
  }
  // Sparse: a missing class has count 0, so only all-nonzero histograms of
  // one sign can shift.
  if (sparse_.size() != order_) return out;
  std::int64_t lo = std::numeric_limits<std::int64_t>::max();
  for (const auto& [j, c] : sparse_) lo = std::min(lo, c);
  if (lo <= 0) return out;
  out.sparse_.clear();
  for (const auto& [j, c] : sparse_) {
    if (c != lo) out.sparse_.emplace_hint(out.sparse_.end(), j, c - lo);
  }
  return out;
}

std::uint64_t CyclotomicSum::total_multiplicity() const {
  std::uint64_t total = 0;
  for (const auto& [j, c] : entries()) total += static_cast<std::uint64_t>(c < 0 ? -c : c);
  return total;
}

bool CyclotomicSum::empty() const {
  if (is_dense()) {
    return std::all_of(dense_.begin(), dense_.end(), [](auto c) { return c == 0; });
  }
  return sparse_.empty();
}

void CyclotomicSum::accumulate(const CyclotomicSum& other, std::int64_t sign) {
  if (other.order_ != order_) {
    const auto l = std::lcm(order_, other.order_);
    CyclotomicSum lifted = (l == order_) ? *this : lift(l);
    lifted.accumulate(other.order_ == l ? other : other.lift(l), sign);
    *this = std::move(lifted);
    return;
  }
  if (is_dense()) {
    for (std::uint64_t j = 0; j < order_; ++j) dense_[j] += sign * other.dense_[j];
  } else {
    for (const auto& [j, c] : other.sparse_) add_term(j, sign * c);
  }
}

CyclotomicSum& CyclotomicSum::operator+=(const CyclotomicSum& other) {
  accumulate(other, 1);
  return *this;
}

CyclotomicSum& CyclotomicSum::operator-=(const CyclotomicSum& other) {
  accumulate(other, -1);
  return *this;
}

CyclotomicSum operator*(const CyclotomicSum& a, const CyclotomicSum& b) {
  const auto l = std::lcm(a.order_, b.order_);
  const auto sa = l / a.order_;
  const auto sb = l / b.order_;
  const auto ea = a.entries();
  const auto eb = b.entries();
  CyclotomicSum out(l);
  for (const auto& [ja, ca] : ea) {
    for (const auto& [jb, cb] : eb) out.add_term((ja * sa + jb * sb) % l, ca * cb);
  }
  return out;
}

bool operator==(const CyclotomicSum& a, const CyclotomicSum& b) {
  if (a.order_ != b.order_) return false;
  if (a.is_dense()) return a.dense_ == b.dense_;
  return a.sparse_ == b.sparse_;
}

bool approx_equal(const CyclotomicSum& a, const CyclotomicSum& b, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("approx_equal: tol must be positive");
  return std::abs(a.to_complex() - b.to_complex()) <= tol;
}

double accumulation_tolerance(const CyclotomicSum& a, const CyclotomicSum& b) {
  const double terms =
      static_cast<double>(a.total_multiplicity() + b.total_multiplicity()) + 1.0;
  return 64.0 * terms * std::numeric_limits<double>::epsilon();
}

}  // namespace charsum
