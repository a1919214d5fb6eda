#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace charsum {

// T below the lower end of a theorem's stated range.
class BelowRangeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Theorem { Theorem1Small, Theorem1Large, Corollary1, Theorem2 };

// value = c * T^t * q1^a * q2^b * (ln q1)^d * (ln q2)^e
struct Monomial {
  double T = 0, q1 = 0, q2 = 0, log_q1 = 0, log_q2 = 0;
};

struct RegimeBound {
  Theorem theorem = Theorem::Theorem1Small;
  int branch = 1;
  double T_low = 0;   // branch range for T
  double T_high = 0;  // +inf for the last branch
  Monomial exponents;
  double value = 0;
  double c = 1.0;
  double epsilon = 0.0;
  int r = 0;  // Theorem2 only

  // e.g. "thm1.v1.b2", "cor1.b3", "thm2.r3.b1".
  std::string label() const;
};

double evaluate(const Monomial& m, double T, double q1, double q2, double c = 1.0);

// Right side of Burgess' inequality for sum_{M<n<=M+N} chi(n):
//   c N^(1-1/r) q^((r+1)/(4r^2) + eps)          (r in {1,2,3})
//   c N^(1-1/r) q^((r+1)/(4r^2)) (ln q)^(1/r)   (q prime, r >= 1)
// Throws std::invalid_argument for r outside the path's range or a
// composite q on the prime path.
double burgess_rhs(double N, std::uint64_t q, int r, bool prime_modulus, double c = 1.0,
                   double eps = 0.0);

// Branch thresholds.
double theorem1_lower(double q1, double q2, int variant);      // Q^(1/3) or Q^(3/8)
double theorem1_threshold(double q1, double q2, int variant);  // q1^(4/3)q2^(1/3) or q1^(9/8)q2^(3/8)

// variant 1: T^(2/3) Q^(1/9+eps) up to q1^(4/3) q2^(1/3), then T^(3/4) q2^(1/12+eps).
// variant 2: T^(1/2) Q^(3/16+eps) up to q1^(9/8) q2^(3/8), then T^(2/3) q2^(1/8+eps).
// The threshold itself belongs to branch 1. Throws std::invalid_argument for
// q1 > q2 or a bad variant, BelowRangeError below the variant's range.
RegimeBound theorem1_bound(double T, double q1, double q2, double eps, int variant, double c = 1.0);

// q1 = q2 = q; branches split at q^(11/12), q^(3/2), q^(9/4). The q
// exponent is stored in the q2 slot. BelowRangeError for T < q^(2/3).
RegimeBound corollary1_bound(double T, double q, double eps, double c = 1.0);
double corollary1_threshold(double q, int join);  // join 1..3

// 1 for r = 2, else 0.
int nu_r(int r);
// q1^((r+1)^2/4r) q2^((r+1)/4r) (ln q1)^(r+1) (ln q2)^(nu_r r (r+1) + r^2 + 1)
double theorem2_threshold(double q1, double q2, int r);
double theorem2_lower(double q1, double q2, int r);  // Q^((r+1)/4r)

// Prime moduli, r >= 2. Throws std::invalid_argument for composite moduli,
// q1 > q2 or r < 2; BelowRangeError below Q^((r+1)/4r).
RegimeBound theorem2_bound(double T, std::uint64_t q1, std::uint64_t q2, int r, double c = 1.0);

// Split heights t used to cut the region under the hyperbola.
double small_T_split(double T, double q2);                  // T^(3/4) q2^(1/12)
double large_T_split(double T, double q2);                  // T^(2/3) q2^(1/8)
double prime_split(double T, double q2, int r);             // T^(r/(r+1)) q2^(1/4r) (ln q2)^((1-r)/(r+1))

// Ratios between the two competing terms at the split height, eps = 0:
//   small T:  t / (T t^(-1/3) q2^(1/9))
//   large T:  t / (T t^(-1/2) q2^(3/16))
//   prime r:  t ln q2 / (T t^(-1/r) q2^((r+1)/4r^2) (ln q2)^(1/r))
// Each is 1 by construction of t.
double small_T_balance(double T, double q2);
double large_T_balance(double T, double q2);
double prime_balance(double T, double q2, int r);

// Comparison bound from earlier work, T^(13/18) q^(5/27), used in reports.
double reference_bound_q_equal(double T, double q);

}  // namespace charsum
