#pragma once
#include <cstdint>
#include <vector>

#include "nsep/errors.hpp"

namespace nsep {

// Prime field F_p, p < 2^31.  Elements are residues in [0, p); all
// arithmetic is exact, with 64-bit intermediates.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint64_t s = std::uint64_t(a) + b;
    return s >= p_ ? std::uint32_t(s - p_) : std::uint32_t(s);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : std::uint32_t(a + std::uint64_t(p_) - b);
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return std::uint32_t((std::uint64_t(a) * b) % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
  std::uint32_t inv(std::uint32_t a) const;  // NotInvertible on 0
  // Reduce an arbitrary signed 64-bit integer into [0, p).
  std::uint32_t reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % std::int64_t(p_);
    if (r < 0) r += p_;
    return std::uint32_t(r);
  }

  // Multiplicative order of a nonzero residue.
  std::uint64_t element_order(std::uint32_t a) const;

  bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }

  static bool is_prime(std::uint64_t n) noexcept;

 private:
  std::uint32_t p_;
};

// An element tagged with its field; convenience wrapper for API-level code.
struct FieldElement {
  std::uint32_t value = 0;
  const PrimeField* field = nullptr;

  FieldElement() = default;
  FieldElement(std::uint32_t v, const PrimeField& f) : value(v % f.modulus()), field(&f) {}

  friend FieldElement operator+(FieldElement a, FieldElement b) {
    check(a, b);
    return {a.field->add(a.value, b.value), *a.field};
  }
  friend FieldElement operator-(FieldElement a, FieldElement b) {
    check(a, b);
    return {a.field->sub(a.value, b.value), *a.field};
  }
  friend FieldElement operator*(FieldElement a, FieldElement b) {
    check(a, b);
    return {a.field->mul(a.value, b.value), *a.field};
  }
  friend FieldElement operator/(FieldElement a, FieldElement b) {
    check(a, b);
    return {a.field->mul(a.value, a.field->inv(b.value)), *a.field};
  }
  friend bool operator==(FieldElement a, FieldElement b) {
    check(a, b);
    return a.value == b.value;
  }

 private:
  static void check(const FieldElement& a, const FieldElement& b) {
    if (!a.field || !b.field || !(*a.field == *b.field))
      throw ContextMismatch("field elements from different prime fields");
  }
};

// Distinct prime factors of n, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

// Smallest primitive root modulo p (deterministic).
std::uint32_t smallest_primitive_root(const PrimeField& f);

// The canonical element of multiplicative order n: smallest primitive root
// raised to (p-1)/n.  Throws OrderUnavailable unless n divides p-1.
FieldElement element_of_order(const PrimeField& f, std::uint64_t n);
std::uint32_t element_of_order_value(const PrimeField& f, std::uint64_t n);

// Smallest prime p with p = 1 (mod group_order) and p > min_elements.
PrimeField choose_prime(std::uint64_t group_order, std::uint64_t min_elements);

}  // namespace nsep
