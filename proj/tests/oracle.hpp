#pragma once

// Brute-force references written without the library's tables, histograms
// or hyperbola machinery.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <vector>

#include "charsum/characters.hpp"

namespace oracle {

using cplx = std::complex<long double>;

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

inline std::uint64_t phi(std::uint64_t q) {
  std::uint64_t n = 0;
  for (std::uint64_t a = 1; a <= q; ++a) n += gcd(a, q) == 1;
  return q == 1 ? 1 : n;
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

// Legendre symbol by Euler's criterion, p an odd prime.
inline int legendre(std::uint64_t n, std::uint64_t p) {
  n %= p;
  if (n == 0) return 0;
  return powmod(n, (p - 1) / 2, p) == 1 ? 1 : -1;
}

inline int mobius(std::uint64_t n) {
  int mu = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

// Number of primitive characters mod q: sum_{d | q} mu(q/d) phi(d).
inline std::uint64_t primitive_count(std::uint64_t q) {
  std::int64_t total = 0;
  for (std::uint64_t d = 1; d <= q; ++d) {
    if (q % d == 0) total += mobius(q / d) * static_cast<std::int64_t>(phi(d));
  }
  return static_cast<std::uint64_t>(total);
}

// chi(n) as a complex number from the generator description alone:
// solve n = prod g_i^{k_i} by search and multiply the generator values.
inline cplx value(const charsum::DirichletCharacter& chi, std::uint64_t n) {
  const auto q = chi.modulus();
  if (q == 1) return 1;
  n %= q;
  if (gcd(n, q) != 1) return 0;
  cplx v = 1;
  std::size_t gi = 0;
  for (const auto& comp : chi.group().components) {
    const auto pa = comp.modulus;
    const auto r = n % pa;
    // brute-force search over all exponent tuples of this component
    std::vector<std::uint64_t> k(comp.generators.size(), 0);
    bool found = false;
    while (!found) {
      std::uint64_t x = 1 % pa;
      for (std::size_t i = 0; i < k.size(); ++i) {
        x = x * powmod(comp.generators[i].residue, k[i], pa) % pa;
      }
      if (x == r) {
        found = true;
        break;
      }
      std::size_t i = 0;
      while (i < k.size() && ++k[i] == comp.generators[i].order) k[i++] = 0;
      if (i == k.size()) break;
    }
    if (!found) return cplx(NAN, NAN);
    for (std::size_t i = 0; i < k.size(); ++i) {
      const long double ang = 2.0L * std::acos(-1.0L) *
                              static_cast<long double>(chi.exponents()[gi + i] * k[i] %
                                                       comp.generators[i].order) /
                              static_cast<long double>(comp.generators[i].order);
      v *= cplx(std::cos(ang), std::sin(ang));
    }
    gi += k.size();
  }
  return v;
}

inline std::vector<cplx> table(const charsum::DirichletCharacter& chi) {
  std::vector<cplx> t(chi.modulus());
  for (std::uint64_t r = 0; r < chi.modulus(); ++r) t[r] = value(chi, r);
  return t;
}

// S(T) by the double loop over complex values, x, y >= 1, xy <= T.
inline cplx convolution(const std::vector<cplx>& t1, const std::vector<cplx>& t2, double T) {
  cplx s = 0;
  if (T < 1) return s;
  const auto n = static_cast<std::uint64_t>(std::floor(T));
  for (std::uint64_t x = 1; x <= n; ++x) {
    cplx inner = 0;
    for (std::uint64_t y = 1; x * y <= n; ++y) inner += t2[y % t2.size()];
    s += t1[x % t1.size()] * inner;
  }
  return s;
}

// max over 0 <= M < q, 1 <= N <= n_max of |sum_{M<n<=M+N} chi(n)|.
inline long double max_interval(const std::vector<cplx>& t, std::uint64_t n_max) {
  const auto q = t.size();
  long double best = 0;
  for (std::uint64_t M = 0; M < q; ++M) {
    cplx s = 0;
    for (std::uint64_t N = 1; N <= n_max; ++N) {
      s += t[(M + N) % q];
      best = std::max(best, std::abs(s));
    }
  }
  return best;
}

}  // namespace oracle
