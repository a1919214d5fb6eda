#include "charsum/bounds.hpp"

#include <cmath>
#include <limits>

#include "charsum/characters.hpp"

namespace charsum {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(std::string(what) + " must be finite and positive");
  }
}

}  // namespace

std::string RegimeBound::label() const {
  switch (theorem) {
    case Theorem::Theorem1Small: return "thm1.v1.b" + std::to_string(branch);
    case Theorem::Theorem1Large: return "thm1.v2.b" + std::to_string(branch);
    case Theorem::Corollary1: return "cor1.b" + std::to_string(branch);
    case Theorem::Theorem2: return "thm2.r" + std::to_string(r) + ".b" + std::to_string(branch);
  }
  return "?";
}

double evaluate(const Monomial& m, double T, double q1, double q2, double c) {
  double v = c * std::pow(T, m.T);
  if (m.q1 != 0) v *= std::pow(q1, m.q1);
  if (m.q2 != 0) v *= std::pow(q2, m.q2);
  if (m.log_q1 != 0) v *= std::pow(std::log(q1), m.log_q1);
  if (m.log_q2 != 0) v *= std::pow(std::log(q2), m.log_q2);
  return v;
}

double burgess_rhs(double N, std::uint64_t q, int r, bool prime_modulus, double c, double eps) {
  if (N < 0) throw std::invalid_argument("burgess_rhs: N must be >= 0");
  if (q < 1) throw std::invalid_argument("burgess_rhs: q must be >= 1");
  const double rd = r;
  const double qd = static_cast<double>(q);
  const double base = std::pow(N, 1.0 - 1.0 / rd);
  const double q_exp = (rd + 1.0) / (4.0 * rd * rd);
  if (prime_modulus) {
    if (r < 1) throw std::invalid_argument("burgess_rhs: prime path needs r >= 1");
    if (!is_prime(q)) throw std::invalid_argument("burgess_rhs: q is not prime");
    return c * base * std::pow(qd, q_exp) * std::pow(std::log(qd), 1.0 / rd);
  }
  if (r < 1 || r > 3) throw std::invalid_argument("burgess_rhs: r must be in {1, 2, 3}");
  return c * base * std::pow(qd, q_exp + eps);
}

double theorem1_lower(double q1, double q2, int variant) {
  const double Q = q1 * q2;
  if (variant == 1) return std::cbrt(Q);
  if (variant == 2) return std::pow(Q, 3.0 / 8.0);
  throw std::invalid_argument("theorem1: variant must be 1 or 2");
}

double theorem1_threshold(double q1, double q2, int variant) {
  if (variant == 1) return std::pow(q1, 4.0 / 3.0) * std::cbrt(q2);
  if (variant == 2) return std::pow(q1, 9.0 / 8.0) * std::pow(q2, 3.0 / 8.0);
  throw std::invalid_argument("theorem1: variant must be 1 or 2");
}

RegimeBound theorem1_bound(double T, double q1, double q2, double eps, int variant, double c) {
  require_positive(T, "T");
  require_positive(q1, "q1");
  require_positive(q2, "q2");
  if (q1 > q2) throw std::invalid_argument("theorem1_bound: requires q1 <= q2");
  const double lower = theorem1_lower(q1, q2, variant);
  const double threshold = theorem1_threshold(q1, q2, variant);
  if (T < lower) throw BelowRangeError("theorem1_bound: T below the stated range");

  RegimeBound b;
  b.theorem = variant == 1 ? Theorem::Theorem1Small : Theorem::Theorem1Large;
  b.c = c;
  b.epsilon = eps;
  if (T <= threshold) {
    b.branch = 1;
    b.T_low = lower;
    b.T_high = threshold;
    const double qe = (variant == 1 ? 1.0 / 9.0 : 3.0 / 16.0) + eps;
    b.exponents = {variant == 1 ? 2.0 / 3.0 : 0.5, qe, qe, 0, 0};
  } else {
    b.branch = 2;
    b.T_low = threshold;
    b.T_high = kInf;
    b.exponents = {variant == 1 ? 0.75 : 2.0 / 3.0, 0.0,
                   (variant == 1 ? 1.0 / 12.0 : 1.0 / 8.0) + eps, 0, 0};
  }
  b.value = evaluate(b.exponents, T, q1, q2, c);
  return b;
}

double corollary1_threshold(double q, int join) {
  switch (join) {
    case 1: return std::pow(q, 11.0 / 12.0);
    case 2: return std::pow(q, 1.5);
    case 3: return std::pow(q, 2.25);
    default: throw std::invalid_argument("corollary1_threshold: join must be 1, 2 or 3");
  }
}

RegimeBound corollary1_bound(double T, double q, double eps, double c) {
  require_positive(T, "T");
  require_positive(q, "q");
  const double lower = std::pow(q, 2.0 / 3.0);
  if (T < lower) throw BelowRangeError("corollary1_bound: T below q^(2/3)");
  const double j1 = corollary1_threshold(q, 1);
  const double j2 = corollary1_threshold(q, 2);
  const double j3 = corollary1_threshold(q, 3);

  RegimeBound b;
  b.theorem = Theorem::Corollary1;
  b.c = c;
  b.epsilon = eps;
  if (T <= j1) {
    b.branch = 1;
    b.T_low = lower;
    b.T_high = j1;
    b.exponents = {2.0 / 3.0, 0, 2.0 / 9.0 + eps, 0, 0};
  } else if (T <= j2) {
    b.branch = 2;
    b.T_low = j1;
    b.T_high = j2;
    b.exponents = {0.5, 0, 3.0 / 8.0 + eps, 0, 0};
  } else if (T <= j3) {
    b.branch = 3;
    b.T_low = j2;
    b.T_high = j3;
    b.exponents = {2.0 / 3.0, 0, 1.0 / 8.0 + eps, 0, 0};
  } else {
    b.branch = 4;
    b.T_low = j3;
    b.T_high = kInf;
    b.exponents = {0.5, 0, 0.5 + eps, 0, 0};
  }
  b.value = evaluate(b.exponents, T, q, q, c);
  return b;
}

int nu_r(int r) { return r == 2 ? 1 : 0; }

double theorem2_threshold(double q1, double q2, int r) {
  const double rd = r;
  const double log_q2_exp = nu_r(r) * rd * (rd + 1.0) + rd * rd + 1.0;
  return std::pow(q1, (rd + 1.0) * (rd + 1.0) / (4.0 * rd)) * std::pow(q2, (rd + 1.0) / (4.0 * rd)) *
         std::pow(std::log(q1), rd + 1.0) * std::pow(std::log(q2), log_q2_exp);
}

double theorem2_lower(double q1, double q2, int r) {
  const double rd = r;
  return std::pow(q1 * q2, (rd + 1.0) / (4.0 * rd));
}

RegimeBound theorem2_bound(double T, std::uint64_t q1, std::uint64_t q2, int r, double c) {
  require_positive(T, "T");
  if (r < 2) throw std::invalid_argument("theorem2_bound: r must be >= 2");
  if (!is_prime(q1) || !is_prime(q2)) throw std::invalid_argument("theorem2_bound: moduli must be prime");
  if (q1 > q2) throw std::invalid_argument("theorem2_bound: requires q1 <= q2");
  const double a = static_cast<double>(q1);
  const double b2 = static_cast<double>(q2);
  const double lower = theorem2_lower(a, b2, r);
  if (T < lower) throw BelowRangeError("theorem2_bound: T below (q1 q2)^((r+1)/4r)");
  const double threshold = theorem2_threshold(a, b2, r);
  const double rd = r;

  RegimeBound b;
  b.theorem = Theorem::Theorem2;
  b.r = r;
  b.c = c;
  if (T <= threshold) {
    b.branch = 1;
    b.T_low = lower;
    b.T_high = threshold;
    const double qe = (rd + 1.0) / (4.0 * rd * rd);
    b.exponents = {1.0 - 1.0 / rd, qe, qe, 1.0 / rd, 1.0 / rd + nu_r(r) + 1.0};
  } else {
    b.branch = 2;
    b.T_low = threshold;
    b.T_high = kInf;
    b.exponents = {rd / (rd + 1.0), 0.0, 1.0 / (4.0 * rd), 0.0, 2.0 / (rd + 1.0)};
  }
  b.value = evaluate(b.exponents, T, a, b2, c);
  return b;
}

double small_T_split(double T, double q2) { return std::pow(T, 0.75) * std::pow(q2, 1.0 / 12.0); }

double large_T_split(double T, double q2) { return std::pow(T, 2.0 / 3.0) * std::pow(q2, 0.125); }

double prime_split(double T, double q2, int r) {
  const double rd = r;
  return std::pow(T, rd / (rd + 1.0)) * std::pow(q2, 1.0 / (4.0 * rd)) *
         std::pow(std::log(q2), (1.0 - rd) / (rd + 1.0));
}

double small_T_balance(double T, double q2) {
  const double t = small_T_split(T, q2);
  return t / (T * std::pow(t, -1.0 / 3.0) * std::pow(q2, 1.0 / 9.0));
}

double large_T_balance(double T, double q2) {
  const double t = large_T_split(T, q2);
  return t / (T * std::pow(t, -0.5) * std::pow(q2, 3.0 / 16.0));
}

double prime_balance(double T, double q2, int r) {
  const double rd = r;
  const double t = prime_split(T, q2, r);
  const double lq = std::log(q2);
  return t * lq /
         (T * std::pow(t, -1.0 / rd) * std::pow(q2, (rd + 1.0) / (4.0 * rd * rd)) *
          std::pow(lq, 1.0 / rd));
}

double reference_bound_q_equal(double T, double q) {
  return std::pow(T, 13.0 / 18.0) * std::pow(q, 5.0 / 27.0);
}

}  // namespace charsum
