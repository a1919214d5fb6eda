#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_map>
#include <utility>
#include <vector>

#include "charsum/characters.hpp"
#include "charsum/cyclosum.hpp"

namespace charsum::detail {

// Accumulates products chi1(x) chi2(y) as exponents modulo L = lcm(m1, m2).
class PairAccumulator {
 public:
  static constexpr std::uint64_t kDenseWorkLimit = std::uint64_t{1} << 22;

  PairAccumulator(std::uint64_t m1, std::uint64_t m2)
      : order_(std::lcm(m1, m2)), scale1_(order_ / m1), scale2_(order_ / m2) {
    if (order_ <= kDenseWorkLimit) dense_.assign(order_, 0);
  }

  std::uint64_t order() const { return order_; }
  std::uint64_t scale1() const { return scale1_; }
  std::uint64_t scale2() const { return scale2_; }

  // `lifted` must already be reduced below order().
  void add(std::uint64_t lifted, std::int64_t mult) {
    if (!dense_.empty()) {
      dense_[lifted] += mult;
    } else {
      sparse_[lifted] += mult;
    }
  }

  CyclotomicSum finish() const {
    if (!dense_.empty()) {
      if (order_ <= CyclotomicSum::kDenseLimit) return CyclotomicSum::from_counts(order_, dense_);
      CyclotomicSum out(order_);
      for (std::uint64_t j = 0; j < order_; ++j) {
        if (dense_[j] != 0) out.add_term(j, dense_[j]);
      }
      return out;
    }
    std::vector<std::pair<std::uint64_t, std::int64_t>> items(sparse_.begin(), sparse_.end());
    std::sort(items.begin(), items.end());
    CyclotomicSum out(order_);
    for (const auto& [j, c] : items) {
      if (c != 0) out.add_term(j, c);
    }
    return out;
  }

 private:
  std::uint64_t order_, scale1_, scale2_;
  std::vector<std::int64_t> dense_;
  std::unordered_map<std::uint64_t, std::int64_t> sparse_;
};

// Exponents of chi over one period scaled by `scale`; -1 marks zeros.
inline std::vector<std::int64_t> lifted_table(const DirichletCharacter& chi, std::uint64_t scale) {
  const auto q = chi.modulus();
  std::vector<std::int64_t> out(q);
  for (std::uint64_t r = 0; r < q; ++r) {
    const auto e = chi.exponent_at(r);
    out[r] = e == DirichletCharacter::kZero
                 ? -1
                 : static_cast<std::int64_t>(e) * static_cast<std::int64_t>(scale);
  }
  return out;
}

// Lifted index of chi1(x) chi2(y), or -1 when the product vanishes.
class PairValue {
 public:
  PairValue(const DirichletCharacter& chi1, const DirichletCharacter& chi2,
            const PairAccumulator& acc)
      : t1_(lifted_table(chi1, acc.scale1())),
        t2_(lifted_table(chi2, acc.scale2())),
        L_(static_cast<std::int64_t>(acc.order())) {}

  std::int64_t operator()(std::int64_t x, std::int64_t y) const {
    const auto q1 = static_cast<std::int64_t>(t1_.size());
    const auto q2 = static_cast<std::int64_t>(t2_.size());
    const auto a = t1_[static_cast<std::size_t>(((x % q1) + q1) % q1)];
    const auto b = t2_[static_cast<std::size_t>(((y % q2) + q2) % q2)];
    if (a < 0 || b < 0) return -1;
    return (a + b) % L_;
  }

 private:
  std::vector<std::int64_t> t1_, t2_;
  std::int64_t L_;
};

}  // namespace charsum::detail
