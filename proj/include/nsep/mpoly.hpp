#pragma once
#include <array>
#include <cstdint>
#include <cstring>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nsep/errors.hpp"
#include "nsep/ffield.hpp"

namespace nsep {

// Hard upper bound on ambient variable count (doubled contexts plus one
// auxiliary variable stay well below this for every catalogued computation).
constexpr int kMaxVars = 32;

// Variables are grouped in named blocks; a block of size 1 renders as its
// bare name, larger blocks render as name + 1-based index (x1, x2, ...).
class VariableContext;
using Ctx = std::shared_ptr<const VariableContext>;

class VariableContext {
 public:
  static Ctx make(const PrimeField& field,
                  std::vector<std::pair<std::string, int>> blocks);

  const PrimeField& field() const noexcept { return field_; }
  int nvars() const noexcept { return nvars_; }
  int nblocks() const noexcept { return int(blocks_.size()); }
  const std::pair<std::string, int>& block(int b) const { return blocks_[b]; }
  const std::vector<std::pair<std::string, int>>& blocks() const { return blocks_; }
  int block_offset(int b) const { return offsets_[b]; }
  int block_of_var(int v) const { return block_of_var_[v]; }
  const std::string& var_name(int v) const { return names_[v]; }
  // Index of a variable by display name, -1 if absent.
  int var_index(const std::string& name) const;

  bool same_as(const VariableContext& o) const {
    return field_ == o.field_ && blocks_ == o.blocks_;
  }

  // New context with every block duplicated (copies renamed with `suffix`),
  // originals first.  Used for the doubled-variable separation ideal.
  Ctx doubled(const std::string& suffix) const;
  // New context with one extra size-1 block appended.
  Ctx extended(const std::string& block_name) const;

 private:
  VariableContext(const PrimeField& f, std::vector<std::pair<std::string, int>> b);
  PrimeField field_;
  std::vector<std::pair<std::string, int>> blocks_;
  std::vector<std::string> names_;
  std::vector<int> offsets_, block_of_var_;
  int nvars_ = 0;
};

inline void check_same_ctx(const Ctx& a, const Ctx& b) {
  if (a.get() == b.get()) return;
  if (!a || !b || !a->same_as(*b))
    throw ContextMismatch("polynomials from different variable contexts");
}

struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};
  std::int32_t deg = 0;

  bool operator==(const Monomial& o) const noexcept { return e == o.e; }

  static Monomial one() { return Monomial{}; }
  static Monomial var(int i, int power = 1) {
    Monomial m;
    m.e[i] = std::uint8_t(power);
    m.deg = power;
    return m;
  }
  Monomial times(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
      int s = e[i] + o.e[i];
      if (s > 255) throw DimensionMismatch("monomial exponent overflow");
      r.e[i] = std::uint8_t(s);
    }
    r.deg = deg + o.deg;
    return r;
  }
  bool divides(const Monomial& o) const noexcept {
    if (deg > o.deg) return false;
    // byte-parallel exponent comparison: with every exponent below 128,
    // (o.e[i] + 128) - e[i] stays within its byte, and its high bit is set
    // exactly when e[i] <= o.e[i]
    constexpr std::uint64_t kHi = 0x8080808080808080ull;
    std::uint64_t a[4], b[4];
    std::memcpy(a, e.data(), sizeof a);
    std::memcpy(b, o.e.data(), sizeof b);
    if (((a[0] | b[0] | a[1] | b[1] | a[2] | b[2] | a[3] | b[3]) & kHi) == 0) {
      for (int w = 0; w < 4; ++w)
        if ((((b[w] | kHi) - a[w]) & kHi) != kHi) return false;
      return true;
    }
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  Monomial quotient_of(const Monomial& num) const {  // num / *this
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = std::uint8_t(num.e[i] - e[i]);
    r.deg = num.deg - deg;
    return r;
  }
  Monomial lcm_with(const Monomial& o) const {
    Monomial r;
    int d = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      r.e[i] = std::max(e[i], o.e[i]);
      d += r.e[i];
    }
    r.deg = d;
    return r;
  }
  bool coprime_with(const Monomial& o) const noexcept {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] && o.e[i]) return false;
    return true;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    const std::uint64_t* w = reinterpret_cast<const std::uint64_t*>(m.e.data());
    for (int i = 0; i < 4; ++i) {
      h ^= w[i];
      h *= 1099511628211ull;
    }
    return std::size_t(h);
  }
};

struct TermOrder {
  enum Kind { kLex, kGrevlex } kind = kGrevlex;
  // Optional variable priority permutation: priority[k] = variable index of
  // the k-th most significant variable.  Empty means the natural sequence.
  std::vector<int> priority;

  static TermOrder lex() { return {kLex, {}}; }
  static TermOrder grevlex() { return {kGrevlex, {}}; }

  // Three-way comparison: negative if a < b, 0 if equal, positive if a > b.
  int compare(const Monomial& a, const Monomial& b) const noexcept;
  bool less(const Monomial& a, const Monomial& b) const noexcept {
    return compare(a, b) < 0;
  }
  bool operator==(const TermOrder& o) const = default;
};

// Canonical order used for the internal normal form of every Polynomial.
int canonical_compare(const Monomial& a, const Monomial& b) noexcept;

using Term = std::pair<Monomial, std::uint32_t>;

// Sparse exact polynomial over F_p.  Terms are kept sorted in descending
// canonical (grevlex) order with no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Ctx ctx) : ctx_(std::move(ctx)) {}

  static Polynomial zero(Ctx ctx) { return Polynomial(std::move(ctx)); }
  static Polynomial constant(Ctx ctx, std::uint32_t c);
  static Polynomial variable(Ctx ctx, int index, int power = 1);
  static Polynomial from_terms(Ctx ctx, std::vector<Term> terms);  // normalizes

  const Ctx& context() const noexcept { return ctx_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int degree() const noexcept;          // -1 for the zero polynomial
  std::size_t term_count() const noexcept { return terms_.size(); }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  bool operator==(const Polynomial& o) const;

  Polynomial scaled(std::uint32_t c) const;
  Polynomial times_term(const Monomial& m, std::uint32_t c) const;
  Polynomial pow(unsigned e) const;

  // Leading term w.r.t. an arbitrary order (linear scan).
  const Term& leading_term(const TermOrder& order) const;

  std::uint32_t evaluate(const std::vector<std::uint32_t>& point) const;

  bool is_homogeneous() const;
  // Per-block degree vector; throws NonHomogeneous if terms disagree.
  std::vector<int> multidegree() const;

  // x_j -> sum_i rows[j][i] * x_i  (rows is nvars x nvars, row-major).
  Polynomial substitute_linear(const std::vector<std::uint32_t>& rows) const;

  // Map into a context that contains this context's variables as a prefix
  // (identical block layout for the shared prefix), optionally shifting all
  // variable indices by `shift`.
  Polynomial lifted(Ctx target, int shift = 0) const;

  std::uint64_t fnv_hash() const;  // over the canonical serialization

 private:
  Ctx ctx_;
  std::vector<Term> terms_;
  friend Polynomial poly_from_sorted(Ctx, std::vector<Term>);
};

// Adopt an already-normalized (descending canonical, zero-free) term vector.
Polynomial poly_from_sorted(Ctx ctx, std::vector<Term> terms);

// All monomials of the given total degree, strictly decreasing in `order`.
std::vector<Monomial> monomials_of_degree(const Ctx& ctx, int d,
                                          const TermOrder& order);
// All monomials with the given per-block degree vector.
std::vector<Monomial> monomials_of_multidegree(const Ctx& ctx,
                                               const std::vector<int>& mdeg,
                                               const TermOrder& order);

std::string render(const Polynomial& f);
std::string render(const Monomial& m, const Ctx& ctx);
Polynomial parse_poly(const Ctx& ctx, const std::string& text);

}  // namespace nsep
