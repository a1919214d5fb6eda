#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace charsum {

// Exact sum of m-th roots of unity stored as an integer multiplicity per
// exponent class. counts[j] is the coefficient of exp(2*pi*i*j/m).
//
// Histograms are not canonical for m > 1 (cyclotomic relations), so two
// different algorithms can produce different histograms for the same value.
// Compare those through approx_equal(); compare runs of one algorithm with ==.
class CyclotomicSum {
 public:
  // Orders up to this bound use a dense vector, larger ones a sparse map.
  static constexpr std::uint64_t kDenseLimit = 10'000;

  explicit CyclotomicSum(std::uint64_t order = 1);

  // Builds from a dense count vector of length `order`.
  static CyclotomicSum from_counts(std::uint64_t order,
                                   const std::vector<std::int64_t>& counts);

  std::uint64_t order() const { return order_; }
  bool is_dense() const { return order_ <= kDenseLimit; }

  // counts[j] += mult. Throws std::out_of_range unless j < order().
  void add_term(std::uint64_t j, std::int64_t mult = 1);
  std::int64_t count(std::uint64_t j) const;

  // Re-expresses the sum in order new_order (a multiple of order()).
  // Throws std::invalid_argument otherwise.
  CyclotomicSum lift(std::uint64_t new_order) const;

  std::complex<double> to_complex() const;
  double magnitude() const { return std::abs(to_complex()); }

  // Removes the largest multiple of (1, 1, ..., 1) that fits under every
  // count; that vector sums to zero for m >= 2. Two histograms that differ
  // by whole copies of the full root set share one canonical form.
  CyclotomicSum canonical() const;

  // Sum of |counts[j]| over all classes.
  std::uint64_t total_multiplicity() const;
  bool empty() const;

  // Nonzero (j, count) pairs in increasing j.
  std::vector<std::pair<std::uint64_t, std::int64_t>> entries() const;

  // Mixed-order arithmetic lifts both operands to lcm of the orders.
  CyclotomicSum& operator+=(const CyclotomicSum& other);
  CyclotomicSum& operator-=(const CyclotomicSum& other);
  friend CyclotomicSum operator+(CyclotomicSum a, const CyclotomicSum& b) {
    return a += b;
  }
  friend CyclotomicSum operator-(CyclotomicSum a, const CyclotomicSum& b) {
    return a -= b;
  }
  friend CyclotomicSum operator*(const CyclotomicSum& a,
                                 const CyclotomicSum& b);

  // Exact histogram equality; orders must match.
  friend bool operator==(const CyclotomicSum& a, const CyclotomicSum& b);

 private:
  void accumulate(const CyclotomicSum& other, std::int64_t sign);

  std::uint64_t order_;
  std::vector<std::int64_t> dense_;
  std::map<std::uint64_t, std::int64_t> sparse_;
};

// |to_complex(a) - to_complex(b)| <= tol.
bool approx_equal(const CyclotomicSum& a, const CyclotomicSum& b, double tol);

// Tolerance proportional to the number of terms times machine epsilon.
double accumulation_tolerance(const CyclotomicSum& a, const CyclotomicSum& b);

// exp(2*pi*i*j/m) with the angle reduced to [-pi, pi] first.
std::complex<double> root_of_unity(std::uint64_t j, std::uint64_t m);

}  // namespace charsum
