#include "nsep/ffield.hpp"

#include <algorithm>

namespace nsep {

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31)) throw NotPrime("modulus must be < 2^31");
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
}

bool PrimeField::is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const noexcept {
  std::uint64_t base = a % p_, r = 1;
  while (e) {
    if (e & 1) r = (r * base) % p_;
    base = (base * base) % p_;
    e >>= 1;
  }
  return std::uint32_t(r);
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw NotInvertible("division by zero in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

std::uint64_t PrimeField::element_order(std::uint32_t a) const {
  if (a % p_ == 0) throw NotInvertible("zero has no multiplicative order");
  std::uint64_t ord = p_ - 1;
  for (std::uint64_t q : prime_factors(p_ - 1))
    while (ord % q == 0 && pow(a, ord / q) == 1) ord /= q;
  return ord;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint32_t smallest_primitive_root(const PrimeField& f) {
  std::uint32_t p = f.modulus();
  if (p == 2) return 1;
  auto qs = prime_factors(p - 1);
  for (std::uint32_t g = 2; g < p; ++g) {
    bool primitive = true;
    for (std::uint64_t q : qs)
      if (f.pow(g, (p - 1) / q) == 1) {
        primitive = false;
        break;
      }
    if (primitive) return g;
  }
  throw SearchExhausted("no primitive root found (impossible for prime modulus)");
}

std::uint32_t element_of_order_value(const PrimeField& f, std::uint64_t n) {
  if (n == 0 || (f.modulus() - 1) % n != 0)
    throw OrderUnavailable("no element of order " + std::to_string(n) + " in F_" +
                           std::to_string(f.modulus()));
  std::uint32_t g = smallest_primitive_root(f);
  return f.pow(g, (f.modulus() - 1) / n);
}

FieldElement element_of_order(const PrimeField& f, std::uint64_t n) {
  return {element_of_order_value(f, n), f};
}

PrimeField choose_prime(std::uint64_t group_order, std::uint64_t min_elements) {
  if (group_order == 0) throw BadParameter("group order must be positive");
  for (std::uint64_t p = group_order + 1;; p += group_order) {
    if (p >= (1ull << 31))
      throw SearchExhausted("no admissible prime below 2^31");
    if (p > min_elements && PrimeField::is_prime(p)) return PrimeField(std::uint32_t(p));
  }
}

}  // namespace nsep
