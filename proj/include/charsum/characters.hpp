#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace charsum {

struct PrimeFactor {
  std::uint64_t prime;
  unsigned exponent;
  friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

// Trial division; primes strictly increasing. factorize(1) is empty.
std::vector<PrimeFactor> factorize(std::uint64_t q);
bool is_prime(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t q);
std::vector<std::uint64_t> divisors(std::uint64_t q);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

struct Generator {
  std::uint64_t residue;
  std::uint64_t order;
};

// The unit group of Z/p^a as a product of cyclic groups, with discrete logs.
//   odd p:       one generator (a primitive root) of order phi(p^a)
//   p = 2, a=1:  trivial group, no generators
//   p = 2, a=2:  -1 of order 2
//   p = 2, a>=3: -1 of order 2 and 5 of order 2^(a-2)
struct PrimePowerComponent {
  std::uint64_t prime = 0;
  unsigned exponent = 0;
  std::uint64_t modulus = 0;  // p^a
  std::vector<Generator> generators;
  // log_table[g][r]: exponent of generator g for residue r, -1 off units.
  std::vector<std::vector<std::int32_t>> log_table;

  static PrimePowerComponent build(std::uint64_t p, unsigned a);

  bool is_unit(std::uint64_t r) const { return r % prime != 0; }
  // Exponent vector of a unit residue; nullopt for non-units.
  std::optional<std::vector<std::uint64_t>> log(std::uint64_t r) const;
  // Product of generator powers, mod p^a.
  std::uint64_t reconstruct(std::span<const std::uint64_t> exps) const;
};

// (Z/q)^* for one modulus. Shared between all characters of that modulus.
struct UnitGroup {
  std::uint64_t modulus = 1;
  std::uint64_t phi = 1;
  std::vector<PrimePowerComponent> components;  // sorted by prime

  static std::shared_ptr<const UnitGroup> build(std::uint64_t q);
  std::size_t generator_count() const;
};

// A Dirichlet character mod q, stored as one exponent per generator of the
// unit group. chi(g_i) = exp(2*pi*i * e_i / ord(g_i)).
//
// Values are returned as exponents j modulo the character order m, meaning
// chi(n) = exp(2*pi*i*j/m); nullopt stands for the value 0.
class DirichletCharacter {
 public:
  // Value tables are precomputed for moduli up to this bound.
  static constexpr std::uint64_t kTableLimit = 1'000'000;
  static constexpr std::int32_t kZero = -1;

  DirichletCharacter(std::shared_ptr<const UnitGroup> group,
                     std::vector<std::uint64_t> exponents);

  std::uint64_t modulus() const { return group_->modulus; }
  std::uint64_t order() const { return order_; }
  const std::vector<std::uint64_t>& exponents() const { return exponents_; }
  const UnitGroup& group() const { return *group_; }
  bool is_principal() const { return order_ == 1; }

  std::optional<std::uint64_t> eval(std::int64_t n) const;
  // Exponent of chi(r) for 0 <= r < q, or kZero.
  std::int32_t exponent_at(std::uint64_t r) const {
    return table_.empty() ? compute_exponent(r) : table_[r];
  }
  std::complex<double> value(std::int64_t n) const;

  // Smallest divisor d of q such that chi(n) = 1 whenever n = 1 mod d and
  // gcd(n, q) = 1. Exhaustive over divisors and residues.
  std::uint64_t conductor() const;
  bool is_primitive() const { return conductor() == modulus(); }

 private:
  std::int32_t compute_exponent(std::uint64_t r) const;

  std::shared_ptr<const UnitGroup> group_;
  std::vector<std::uint64_t> exponents_;
  std::vector<std::uint64_t> coefficients_;  // e_i * m / ord(g_i)
  std::uint64_t order_ = 1;
  std::vector<std::int32_t> table_;
};

// All phi(q) characters mod q in canonical order: exponent tuples listed
// lexicographically, components sorted by prime and, for p = 2, the
// generator -1 before 5. Index 0 is the principal character.
std::vector<DirichletCharacter> enumerate_characters(std::uint64_t q);

// The character at canonical index `index`; throws std::out_of_range.
DirichletCharacter character_at(std::uint64_t q, std::uint64_t index);

// Indices (into enumerate_characters(q)) of the primitive characters.
std::vector<std::size_t> primitive_indices(std::uint64_t q);

}  // namespace charsum
