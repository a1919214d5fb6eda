#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "charsum/characters.hpp"
#include "charsum/cyclosum.hpp"

namespace charsum {

// Raised when a lemma, oracle or coverage check is violated.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kEulerGamma = 0.57721566490153286061;

// #{(x, y) : x, y >= 1, T - 2t <= xy <= T} by direct enumeration.
// Requires 1 < t < T.
std::uint64_t strip_count(double T, double t);

// sum_{x<=T} floor(T/x), direct O(T) loop.
std::uint64_t divisor_sum(std::uint64_t T);
// Same count from 2 sum_{x<=s} floor(T/x) - s^2, s = floor(sqrt T).
std::uint64_t divisor_sum_hyperbola(std::uint64_t T);
// divisor_sum(T) - T ln T - (2 gamma - 1) T.
double divisor_residual(std::uint64_t T);

struct ResidualScan {
  std::uint64_t T_max = 0;
  double max_normalized = 0.0;  // max |residual| / sqrt T
  std::uint64_t argmax = 0;
};
// Every T in [1, T_max], using a divisor-count sieve.
ResidualScan scan_divisor_residual(std::uint64_t T_max);

struct StripMeasurement {
  double T = 0, t = 0;
  std::uint64_t count = 0;
  double per_t_log_T = 0;  // count / (t ln T)
  double per_t = 0;        // count / t
};
StripMeasurement measure_strip(double T, double t);

// Smallest depth at which the family leaves no lattice point uncovered:
// ceil(log2 T) + 2.
int minimum_depth(double T);

struct CoverReport {
  double T = 0;
  int k = 0, depth = 0;
  std::uint64_t slab_points = 0;
  std::uint64_t covered = 0;             // exactly once
  std::uint64_t multiply_covered = 0;
  std::uint64_t uncovered_in_strip = 0;  // left over, inside T - 2t <= xy <= T
  std::uint64_t uncovered = 0;           // left over, outside the strip
  std::uint64_t outside_slab = 0;        // rectangle points not in the slab
  bool ok() const { return multiply_covered == 0 && uncovered == 0 && outside_slab == 0; }
};

// Classifies every lattice point of the slab
//   {xy < T, x < sqrt T, 2^(k-1) sqrt T <= y < 2^k sqrt T}
// against U_k and the family generated from pi_k to order `depth`.
CoverReport cover_check(double T, int k, int depth, double t);

struct DecompositionResult {
  CyclotomicSum sum;
  std::uint64_t points = 0;        // accounting counter
  std::uint64_t rect_points = 0;   // points reached through U_k or family members
  std::uint64_t strip_points = 0;  // leftovers enumerated directly
  std::uint64_t rectangles = 0;
};

// S(Omega_1) assembled from U_0, then per slab k >= 1 from U_k, the family
// of pi_k to order `depth`, and any leftover points of the strip
// T - 2t <= xy <= T. Throws VerificationFailure on a double-covered point
// or on a leftover outside the strip.
DecompositionResult decomposition_sum(const DirichletCharacter& chi1,
                                      const DirichletCharacter& chi2, double T, int depth,
                                      double t = 1.0);

// Closed-form chain areas against direct areas over random chains.
struct ChainCheck {
  std::size_t chains = 0;
  double max_rel_err_phi = 0;
  double max_rel_err_u_phi = 0;
  double max_rel_err_next = 0;  // Phi_{n+1} against r(Phi_n), coordinates
  bool ok(double tol) const {
    return max_rel_err_phi <= tol && max_rel_err_u_phi <= tol && max_rel_err_next <= tol;
  }
};
ChainCheck check_chain_areas(std::size_t count, std::uint64_t seed);

struct FamilyCheck {
  double T = 0;
  int k = 0, max_order = 0;
  std::vector<std::uint64_t> per_order;
  std::uint64_t members = 0;
  std::uint64_t on_gamma_violations = 0;
  std::uint64_t r_area_violations = 0;   // |r(P)| <= |P|/4
  std::uint64_t u_area_violations = 0;   // |u(P)| <= |P| / (4 (1 - 3 delta / 2 x1))
  std::uint64_t order_area_violations = 0;  // |P| <= lemma5_bound
  std::uint64_t ratio_violations = 0;    // delta/x1 <= 1/2
  std::uint64_t contraction_violations = 0;  // child ratio <= (2/3) parent ratio
  std::uint64_t count_violations = 0;    // per_order[l] != 2^l
  double max_r_ratio = 0;      // |r(P)| / (|P|/4)
  double max_u_ratio = 0;      // |u(P)| / bound
  double max_order_ratio = 0;  // |P| / lemma5_bound
  bool ok() const {
    return on_gamma_violations + r_area_violations + u_area_violations + order_area_violations +
               ratio_violations + contraction_violations + count_violations ==
           0;
  }
};
FamilyCheck check_family(double T, int k, int max_order);

struct BurgessRecord {
  std::uint64_t q = 0;
  std::uint64_t characters = 0;
  double max_abs = 0;           // max over characters of the interval maximum
  std::uint64_t chi_index = 0;  // attaining character
  std::uint64_t M = 0, N = 0;   // attaining interval
  double pv_bound = 0;          // sqrt(q) ln q
  double c_burgess = 0;         // max over characters of max_abs / burgess_rhs(N*, q, 2)
};

// Every non-principal character mod every prime 3 <= q <= q_max.
std::vector<BurgessRecord> burgess_scan(std::uint64_t q_max, unsigned jobs = 1);
std::string burgess_csv(const std::vector<BurgessRecord>& records);

}  // namespace charsum
