#pragma once
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nsep/errors.hpp"
#include "nsep/ffield.hpp"

namespace nsep {

// Dense square matrix over F_p, row-major entries in [0, p).
struct Matrix {
  int n = 0;
  std::vector<std::uint32_t> a;

  Matrix() = default;
  Matrix(int size, std::vector<std::uint32_t> entries) : n(size), a(std::move(entries)) {
    if (int(a.size()) != n * n) throw DimensionMismatch("matrix entry count");
  }
  static Matrix identity(int n);

  std::uint32_t& at(int r, int c) { return a[std::size_t(r) * n + c]; }
  std::uint32_t at(int r, int c) const { return a[std::size_t(r) * n + c]; }
  bool operator==(const Matrix& o) const = default;
};

Matrix mat_mul(const PrimeField& F, const Matrix& x, const Matrix& y);
Matrix mat_inv(const PrimeField& F, const Matrix& x);  // NotInvertible if singular
std::vector<std::uint32_t> mat_apply(const PrimeField& F, const Matrix& x,
                                     const std::vector<std::uint32_t>& v);
Matrix block_diagonal(const std::vector<Matrix>& blocks);

// Product of generators, left to right; empty = identity.
using Word = std::vector<int>;

struct GroupElement {
  Matrix matrix;
  Word word;
};

class MatrixRep;
using Group = std::shared_ptr<const MatrixRep>;

// A finite matrix group over F_p, fully enumerated from its generators by
// breadth-first closure.  Element order is deterministic: by word length,
// then lexicographically on matrix entries within a layer; index 0 is the
// identity.
class MatrixRep {
 public:
  static Group generate(const PrimeField& field,
                        std::vector<std::pair<std::string, Matrix>> generators,
                        std::size_t cap = 100000);

  const PrimeField& field() const noexcept { return field_; }
  int dimension() const noexcept { return dim_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<GroupElement>& elements() const noexcept { return elements_; }
  const std::vector<std::pair<std::string, Matrix>>& generators() const noexcept {
    return generators_;
  }

  int element_index(const Matrix& m) const;  // -1 if absent
  int generator_element(int k) const { return generator_elements_[k]; }
  int multiply(int i, int j) const;  // Cayley table when cached, else matrix lookup
  int inverse(int i) const { return inverse_[i]; }
  std::uint64_t element_order(int i) const;

 private:
  MatrixRep() : field_(2) {}
  PrimeField field_;
  int dim_ = 0;
  std::vector<std::pair<std::string, Matrix>> generators_;
  std::vector<int> generator_elements_;
  std::vector<GroupElement> elements_;
  std::map<std::vector<std::uint32_t>, int> index_;  // matrix entries -> index
  std::vector<int> cayley_;                          // order x order
  std::vector<int> inverse_;
};

// Block-diagonal combination of representations of the same abstract group
// (matching generator lists, index-aligned).  The element table of the
// result is the image group, which may be a proper quotient.
Group direct_sum_rep(const std::vector<Group>& blocks);

// ----------------------------------------------------------------- orbits

std::vector<std::vector<std::uint32_t>> orbit(const Group& g,
                                              const std::vector<std::uint32_t>& v);
// Witnessing element index with g·v = w, if any.
std::optional<int> same_orbit(const Group& g, const std::vector<std::uint32_t>& v,
                              const std::vector<std::uint32_t>& w);
std::vector<int> stabilizer(const Group& g, const std::vector<std::uint32_t>& v);

// --------------------------------------------------------------- subgroups

// Subset of element indices of a parent group of order <= 64, as a bitmask.
struct Subgroup {
  std::uint64_t mask = 0;
  int order() const noexcept { return __builtin_popcountll(mask); }
  bool contains(int i) const noexcept { return (mask >> i) & 1; }
  bool contains_all(const Subgroup& o) const noexcept {
    return (mask & o.mask) == o.mask;
  }
  bool operator==(const Subgroup& o) const = default;
};

Subgroup subgroup_closure(const Group& g, const std::vector<int>& elems);
bool subgroup_is_normal(const Group& g, const Subgroup& h);
Subgroup commutator_subgroup(const Group& g);

// Every subgroup exactly once, sorted by (order, mask); requires |G| <= cap
// (and <= 64 in any case).
std::vector<Subgroup> subgroup_lattice(const Group& g, std::size_t cap = 64);
std::vector<Subgroup> normal_subgroups(const Group& g);

// Maximum size of an intersection-independent set of subgroups: no member
// contains the intersection of the others (the intersection of the empty
// family is G itself).  `prime_power_prune` caps branches containing a
// cyclic subgroup of prime-power order at size 2; it is a pure optimization
// and never changes the result.
int mu(const Group& g, bool prime_power_prune = true);

// ---------------------------------------------------------------- characters

// A homomorphism G -> F_p^*, tabulated on every element.
struct Character {
  std::vector<std::uint32_t> values;  // indexed by element index

  std::uint32_t on(int element) const { return values[element]; }
  bool is_trivial() const {
    for (auto v : values)
      if (v != 1) return false;
    return true;
  }
  bool operator==(const Character& o) const = default;
};

// All |G/[G,G]| characters, deterministically ordered (value table
// lexicographic, trivial character first).
std::vector<Character> characters(const Group& g);
std::uint64_t character_order(const PrimeField& F, const Character& chi);
Character trivial_character(const Group& g);
// Pointwise product and inverse make the characters a group.
Character character_product(const PrimeField& F, const Character& a, const Character& b);
Character character_inverse(const PrimeField& F, const Character& a);

// ----------------------------------------------------- homomorphism checks

// Images of every element under gen[k] -> gen_images[k], by word
// evaluation; throws NotRepresentation unless the map is a homomorphism.
std::vector<Matrix> element_images(const Group& g, const std::vector<Matrix>& gen_images);
bool is_representation(const Group& g, const std::vector<Matrix>& gen_images);

// Relabel a representation of G with kernel containing N as the faithful
// image group (a quotient of G/N; equal to it when the kernel is exactly N).
Group quotient_rep(const Group& g, const Subgroup& n,
                   const std::vector<std::pair<std::string, Matrix>>& gen_images);

// --------------------------------------------------------------- symmetries

// All automorphisms of G as permutations of element indices (identity
// first), found by exhausting order-compatible generator-image tuples.
std::vector<std::vector<int>> automorphisms(const Group& g);

// Histogram of element orders (order -> count); distinguishes e.g. the two
// nonabelian groups of order 8.
std::map<std::uint64_t, int> order_profile(const Group& g);

}  // namespace nsep
