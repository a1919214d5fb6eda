#include "charsum/characters.hpp"

#include "charsum/cyclosum.hpp"

#include <climits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace charsum {

std::vector<PrimeFactor> factorize(std::uint64_t q) {
  std::vector<PrimeFactor> out;
  for (std::uint64_t p = 2; p * p <= q; p += (p == 2 ? 1 : 2)) {
    if (q % p != 0) continue;
    unsigned a = 0;
    while (q % p == 0) {
      q /= p;
      ++a;
    }
    out.push_back({p, a});
  }
  if (q > 1) out.push_back({q, 1});
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  const auto f = factorize(n);
  return f.size() == 1 && f.front().exponent == 1;
}

std::uint64_t euler_phi(std::uint64_t q) {
  std::uint64_t phi = q;
  for (const auto& [p, a] : factorize(q)) phi = phi / p * (p - 1);
  return phi;
}

std::vector<std::uint64_t> divisors(std::uint64_t q) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= q; ++d) {
    if (q % d != 0) continue;
    small.push_back(d);
    if (d != q / d) large.push_back(q / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  unsigned __int128 result = 1;
  unsigned __int128 b = base % mod;
  while (exp > 0) {
    if (exp & 1U) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1U;
  }
  return static_cast<std::uint64_t>(result);
}

namespace {

std::uint64_t ipow(std::uint64_t p, unsigned a) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < a; ++i) r *= p;
  return r;
}

std::uint64_t primitive_root_mod_prime(std::uint64_t p) {
  if (p == 2) return 1;
  const auto factors = factorize(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (const auto& f : factors) {
      if (pow_mod(g, (p - 1) / f.prime, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root modulo " + std::to_string(p));
}

}  // namespace

PrimePowerComponent PrimePowerComponent::build(std::uint64_t p, unsigned a) {
  if (a == 0 || p < 2) throw std::invalid_argument("PrimePowerComponent: bad prime power");
  PrimePowerComponent c;
  c.prime = p;
  c.exponent = a;
  c.modulus = ipow(p, a);
  const auto pa = c.modulus;
  if (pa > static_cast<std::uint64_t>(INT32_MAX)) {
    throw std::invalid_argument("PrimePowerComponent: prime power too large for log tables");
  }

  if (p != 2) {
    std::uint64_t g = primitive_root_mod_prime(p);
    if (a >= 2 && pow_mod(g, p - 1, p * p) == 1) g += p;
    const std::uint64_t phi = pa / p * (p - 1);
    c.generators.push_back({g % pa, phi});
    c.log_table.assign(1, std::vector<std::int32_t>(pa, -1));
    std::uint64_t x = 1;
    for (std::uint64_t i = 0; i < phi; ++i) {
      c.log_table[0][x] = static_cast<std::int32_t>(i);
      x = x * g % pa;
    }
    return c;
  }

  if (a == 1) return c;
  if (a == 2) {
    c.generators.push_back({3, 2});
    c.log_table.assign(1, std::vector<std::int32_t>(4, -1));
    c.log_table[0][1] = 0;
    c.log_table[0][3] = 1;
    return c;
  }
  const std::uint64_t half = pa / 4;  // order of 5
  c.generators.push_back({pa - 1, 2});
  c.generators.push_back({5, half});
  c.log_table.assign(2, std::vector<std::int32_t>(pa, -1));
  std::uint64_t x = 1;
  for (std::uint64_t t = 0; t < half; ++t) {
    c.log_table[0][x] = 0;
    c.log_table[1][x] = static_cast<std::int32_t>(t);
    c.log_table[0][pa - x] = 1;
    c.log_table[1][pa - x] = static_cast<std::int32_t>(t);
    x = x * 5 % pa;
  }
  return c;
}

std::optional<std::vector<std::uint64_t>> PrimePowerComponent::log(std::uint64_t r) const {
  r %= modulus;
  if (!is_unit(r)) return std::nullopt;
  std::vector<std::uint64_t> out;
  out.reserve(generators.size());
  for (const auto& table : log_table) out.push_back(static_cast<std::uint64_t>(table[r]));
  return out;
}

std::uint64_t PrimePowerComponent::reconstruct(std::span<const std::uint64_t> exps) const {
  if (exps.size() != generators.size()) {
    throw std::invalid_argument("PrimePowerComponent::reconstruct: wrong exponent count");
  }
  std::uint64_t r = 1 % modulus;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    r = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) *
                                   pow_mod(generators[i].residue, exps[i], modulus) %
                                   modulus);
  }
  return r;
}

std::shared_ptr<const UnitGroup> UnitGroup::build(std::uint64_t q) {
  if (q == 0) throw std::invalid_argument("UnitGroup: modulus must be >= 1");
  auto g = std::make_shared<UnitGroup>();
  g->modulus = q;
  g->phi = euler_phi(q);
  for (const auto& [p, a] : factorize(q)) g->components.push_back(PrimePowerComponent::build(p, a));
  return g;
}

std::size_t UnitGroup::generator_count() const {
  std::size_t n = 0;
  for (const auto& c : components) n += c.generators.size();
  return n;
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const UnitGroup> group,
                                       std::vector<std::uint64_t> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
  if (!group_) throw std::invalid_argument("DirichletCharacter: null group");
  if (exponents_.size() != group_->generator_count()) {
    throw std::invalid_argument("DirichletCharacter: expected " +
                                std::to_string(group_->generator_count()) + " exponents");
  }
  std::vector<std::uint64_t> orders;
  for (const auto& c : group_->components) {
    for (const auto& g : c.generators) orders.push_back(g.order);
  }
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (exponents_[i] >= orders[i]) {
      throw std::invalid_argument("DirichletCharacter: exponent out of range");
    }
    order_ = std::lcm(order_, orders[i] / std::gcd(exponents_[i], orders[i]));
  }
  coefficients_.resize(orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (exponents_[i] == 0) continue;
    const auto g = std::gcd(exponents_[i], orders[i]);
    coefficients_[i] = (exponents_[i] / g) * (order_ / (orders[i] / g));
  }
  if (group_->modulus <= kTableLimit) {
    table_.resize(group_->modulus);
    for (std::uint64_t r = 0; r < group_->modulus; ++r) table_[r] = compute_exponent(r);
  }
}

std::int32_t DirichletCharacter::compute_exponent(std::uint64_t r) const {
  unsigned __int128 j = 0;
  std::size_t gi = 0;
  for (const auto& c : group_->components) {
    const auto rr = r % c.modulus;
    if (!c.is_unit(rr)) return kZero;
    for (std::size_t k = 0; k < c.generators.size(); ++k, ++gi) {
      j += static_cast<unsigned __int128>(coefficients_[gi]) *
           static_cast<std::uint64_t>(c.log_table[k][rr]);
    }
  }
  return static_cast<std::int32_t>(j % order_);
}

std::optional<std::uint64_t> DirichletCharacter::eval(std::int64_t n) const {
  const auto q = static_cast<std::int64_t>(modulus());
  const auto r = static_cast<std::uint64_t>(((n % q) + q) % q);
  const auto e = exponent_at(r);
  if (e == kZero) return std::nullopt;
  return static_cast<std::uint64_t>(e);
}

std::complex<double> DirichletCharacter::value(std::int64_t n) const {
  const auto e = eval(n);
  if (!e) return {0.0, 0.0};
  return root_of_unity(*e, order_);
}

std::uint64_t DirichletCharacter::conductor() const {
  const auto q = modulus();
  for (const auto d : divisors(q)) {
    bool factors = true;
    for (std::uint64_t n = 1 + d; n < q; n += d) {
      if (std::gcd(n, q) != 1) continue;
      if (exponent_at(n) != 0) {
        factors = false;
        break;
      }
    }
    if (factors) return d;
  }
  return q;
}

std::vector<DirichletCharacter> enumerate_characters(std::uint64_t q) {
  const auto group = UnitGroup::build(q);
  std::vector<std::uint64_t> orders;
  for (const auto& c : group->components) {
    for (const auto& g : c.generators) orders.push_back(g.order);
  }
  std::vector<DirichletCharacter> out;
  out.reserve(group->phi);
  std::vector<std::uint64_t> digits(orders.size(), 0);
  for (std::uint64_t i = 0; i < group->phi; ++i) {
    out.emplace_back(group, digits);
    // Mixed-radix increment, last digit fastest.
    for (std::size_t k = digits.size(); k-- > 0;) {
      if (++digits[k] < orders[k]) break;
      digits[k] = 0;
    }
  }
  return out;
}

DirichletCharacter character_at(std::uint64_t q, std::uint64_t index) {
  const auto group = UnitGroup::build(q);
  if (index >= group->phi) {
    throw std::out_of_range("character index " + std::to_string(index) + " out of range for q=" +
                            std::to_string(q) + " (phi=" + std::to_string(group->phi) + ")");
  }
  std::vector<std::uint64_t> orders;
  for (const auto& c : group->components) {
    for (const auto& g : c.generators) orders.push_back(g.order);
  }
  std::vector<std::uint64_t> digits(orders.size(), 0);
  for (std::size_t k = orders.size(); k-- > 0;) {
    digits[k] = index % orders[k];
    index /= orders[k];
  }
  return DirichletCharacter(group, std::move(digits));
}

std::vector<std::size_t> primitive_indices(std::uint64_t q) {
  const auto chars = enumerate_characters(q);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    if (chars[i].is_primitive()) out.push_back(i);
  }
  return out;
}

}  // namespace charsum
