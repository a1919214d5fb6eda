#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "charsum/bounds.hpp"

using namespace charsum;

namespace {

bool rel_close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::abs(b); }

}  // namespace

TEST_CASE("burgess_rhs") {
  const double expect = 10.0 * std::pow(101.0, 3.0 / 16) * std::sqrt(std::log(101.0));
  CHECK(burgess_rhs(100, 101, 2, true) == doctest::Approx(expect).epsilon(1e-14));
  CHECK(burgess_rhs(100, 101, 2, true) == doctest::Approx(51.0).epsilon(0.01));
  CHECK(burgess_rhs(50, 25, 1, false) == doctest::Approx(5.0).epsilon(1e-14));
  CHECK_THROWS_AS(burgess_rhs(10, 30, 4, false), std::invalid_argument);
  CHECK_THROWS_AS(burgess_rhs(10, 91, 2, true), std::invalid_argument);
  CHECK(burgess_rhs(10, 30, 3, false, 2.0, 0.1) ==
        doctest::Approx(2.0 * std::pow(10.0, 2.0 / 3) * std::pow(30.0, 4.0 / 36 + 0.1)));
}

TEST_CASE("theorem1 threshold identities") {
  for (double q1 : {3.0, 17.0, 101.0}) {
    for (double q2 : {101.0, 1000.0}) {
      const double T1 = theorem1_threshold(q1, q2, 1);
      CHECK(T1 == doctest::Approx(std::pow(q1, 4.0 / 3) * std::cbrt(q2)));
      const auto b = theorem1_bound(T1, q1, q2, 0, 1);
      CHECK(b.branch == 1);
      CHECK(rel_close(b.value, q1 * std::cbrt(q2), 1e-12));
      const double T2 = theorem1_threshold(q1, q2, 2);
      const auto b2 = theorem1_bound(T2, q1, q2, 0, 2);
      CHECK(rel_close(b2.value, std::pow(q1, 0.75) * std::pow(q2, 0.375), 1e-12));
    }
  }
}

TEST_CASE("theorem1 branches and errors") {
  const double q = 50;
  const double T = std::pow(q, 0.8);
  const auto b = theorem1_bound(T, q, q, 0, 1);
  CHECK(b.branch == 1);
  CHECK(rel_close(b.value, std::pow(T, 2.0 / 3) * std::pow(q, 2.0 / 9), 1e-12));
  CHECK(b.label() == "thm1.v1.b1");
  const auto hi = theorem1_bound(1e6, 3, 5, 0, 1);
  CHECK(hi.branch == 2);
  CHECK(rel_close(hi.value, std::pow(1e6, 0.75) * std::pow(5.0, 1.0 / 12), 1e-12));
  CHECK_THROWS_AS(theorem1_bound(100, 7, 5, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(theorem1_bound(100, 5, 7, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(theorem1_bound(1.0, 5, 7, 0, 1), BelowRangeError);
  // eps raises the q-power only
  const auto e = theorem1_bound(T, q, q, 0.1, 1);
  CHECK(rel_close(e.value / b.value, std::pow(q * q, 0.1), 1e-12));
}

TEST_CASE("corollary1 branches") {
  const double q = 37;
  auto b = corollary1_bound(q, q, 0);
  CHECK(b.branch == 2);
  CHECK(rel_close(b.value, std::pow(q, 7.0 / 8), 1e-12));
  b = corollary1_bound(q * q, q, 0);
  CHECK(b.branch == 3);
  CHECK(rel_close(b.value, std::pow(q, 35.0 / 24), 1e-12));
  b = corollary1_bound(q * q * q, q, 0);
  CHECK(b.branch == 4);
  CHECK(rel_close(b.value, q * q, 1e-12));
  CHECK(b.label() == "cor1.b4");
  CHECK_THROWS_AS(corollary1_bound(std::pow(q, 0.6), q, 0), BelowRangeError);
}

TEST_CASE("corollary1 joins are continuous") {
  // all three joins meet: q^(11/12) and both later ones
  for (double q : {5.0, 101.0, 1999.0}) {
    for (int j = 1; j <= 3; ++j) {
      const double T = corollary1_threshold(q, j);
      const double below = corollary1_bound(T, q, 0).value;
      const double above = corollary1_bound(T * (1 + 1e-13), q, 0).value;
      CHECK_MESSAGE(rel_close(above, below, 1e-9), "join " << j);
    }
  }
}

TEST_CASE("theorem1 with q1 = q2 reproduces corollary1 branches 1-3") {
  for (double q : {5.0, 31.0, 200.0}) {
    for (double e = 0.67; e < 2.25; e += 0.05) {
      const double T = std::pow(q, e);
      const auto c = corollary1_bound(T, q, 0);
      const int variant = T <= corollary1_threshold(q, 1) ? 1 : 2;
      const auto t1 = theorem1_bound(T, q, q, 0, variant);
      CHECK(rel_close(t1.value, c.value, 1e-12));
    }
  }
}

TEST_CASE("monotone within branches") {
  for (int variant : {1, 2}) {
    double prev = 0;
    const double lo = theorem1_lower(7, 11, variant);
    for (double T = lo; T < lo * 1e4; T *= 1.1) {
      const double v = theorem1_bound(T, 7, 11, 0, variant).value;
      CHECK(v >= prev);
      prev = v;
    }
  }
}

TEST_CASE("theorem2") {
  CHECK(nu_r(2) == 1);
  CHECK(nu_r(3) == 0);
  const double q1 = 101, q2 = 103;
  CHECK(rel_close(theorem2_threshold(q1, q2, 2),
                  std::pow(q1, 9.0 / 8) * std::pow(q2, 3.0 / 8) * std::pow(std::log(q1), 3) *
                      std::pow(std::log(q2), 11),
                  1e-12));
  for (int r : {2, 3, 5}) {
    const double Tr = theorem2_threshold(q1, q2, r);
    const auto a = theorem2_bound(Tr, 101, 103, r);
    const auto b = theorem2_bound(Tr * (1 + 1e-13), 101, 103, r);
    CHECK(a.branch == 1);
    CHECK(b.branch == 2);
    CHECK(rel_close(a.value, b.value, 1e-9));
    CHECK(a.label() == "thm2.r" + std::to_string(r) + ".b1");
  }
  CHECK_THROWS_AS(theorem2_bound(1e6, 100, 103, 2), std::invalid_argument);
  CHECK_THROWS_AS(theorem2_bound(1e6, 101, 103, 1), std::invalid_argument);
  CHECK_THROWS_AS(theorem2_bound(1e6, 103, 101, 2), std::invalid_argument);
  CHECK_THROWS_AS(theorem2_bound(2, 101, 103, 2), BelowRangeError);
}

TEST_CASE("split heights balance") {
  for (double T : {10.0, 1e3, 1e6}) {
    for (double q2 : {3.0, 97.0, 2003.0}) {
      CHECK(small_T_balance(T, q2) == doctest::Approx(1.0).epsilon(1e-9));
      CHECK(large_T_balance(T, q2) == doctest::Approx(1.0).epsilon(1e-9));
      for (int r : {2, 3, 4}) CHECK(prime_balance(T, q2, r) == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
  CHECK(small_T_split(16, 81) == doctest::Approx(8 * std::pow(81.0, 1.0 / 12)));
  CHECK(large_T_split(64, 256) == doctest::Approx(16 * 2.0));
  CHECK(reference_bound_q_equal(64, 27) ==
        doctest::Approx(std::pow(64.0, 13.0 / 18) * std::pow(27.0, 5.0 / 27)));
}
