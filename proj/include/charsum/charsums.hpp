#pragma once

#include <cstdint>

#include "charsum/characters.hpp"
#include "charsum/cyclosum.hpp"
#include "charsum/geometry.hpp"

namespace charsum {

// floor(T) for the lattice condition xy <= T; 0 when T < 1.
// Throws std::invalid_argument for negative or non-finite T.
std::uint64_t lattice_bound(double T);

// Sum of chi(n) over M < n <= M + N. Whole periods are skipped for
// non-principal characters and counted as phi(q) for the principal one, so
// the work is O(min(N, q)). The result has order chi.order().
CyclotomicSum interval_sum(const DirichletCharacter& chi, std::uint64_t M, std::uint64_t N);

// S(T) = sum over x, y >= 1 with xy <= T of chi1(x) chi2(y), by the plain
// double loop. Reference oracle; O(T log T). Order lcm(m1, m2).
CyclotomicSum convolution_sum_naive(const DirichletCharacter& chi1,
                                    const DirichletCharacter& chi2, double T);

// Same value through the hyperbola identity
//   sum_{x<=s} chi1(x) A2(T/x) + sum_{y<=s} chi2(y) A1(T/y) - A1(s) A2(s)
// with s = floor(sqrt T) and A_i the prefix sums of chi_i.
CyclotomicSum convolution_sum_hyperbola(const DirichletCharacter& chi1,
                                        const DirichletCharacter& chi2, double T);

// S(region) = sum over the lattice points of the region of chi1(x) chi2(y).
// Throws std::invalid_argument when the region is unbounded.
CyclotomicSum region_sum(const DirichletCharacter& chi1, const DirichletCharacter& chi2,
                         const Region& region);

struct IntervalMax {
  double magnitude = 0.0;
  std::uint64_t M = 0;
  std::uint64_t N = 0;
};

// max |sum_{M<n<=M+N} chi(n)| over 0 <= M < q, 1 <= N <= n_max, with a
// witness. Throws std::invalid_argument for the principal character or
// n_max outside [1, q]. For n_max >= q - 1 the maximum is the diameter of
// the prefix-sum point set, found through its convex hull.
IntervalMax max_interval_sum(const DirichletCharacter& chi, std::uint64_t n_max);

}  // namespace charsum
