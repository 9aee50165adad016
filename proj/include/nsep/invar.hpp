#pragma once
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nsep/groebner.hpp"
#include "nsep/grp.hpp"
#include "nsep/mpoly.hpp"

namespace nsep {

// One summand of a module: either a >=2-dimensional irreducible block or a
// character line (dimension 1, with its weight).  `gen_images` gives the
// action of each group generator on the block, index-aligned with the
// group's generator list.
struct ModuleBlock {
  std::string name;                // variable block name in the context
  std::vector<Matrix> gen_images;  // one square matrix per group generator
  std::optional<Character> weight; // required iff the block is 1-dimensional

  int dim() const { return gen_images.empty() ? 0 : gen_images.front().n; }
};

struct GradedInvariantBasis;

// A finite group together with a block-diagonal action on a polynomial ring.
// Construction validates that the block images define a representation of
// the group (word evaluation agrees for every element) and that every
// 1-dimensional block matches its declared character; it then tabulates the
// full block-diagonal matrix of every element.
class ModuleSpec {
 public:
  ModuleSpec(Group g, std::vector<ModuleBlock> blocks);

  const Group& group() const noexcept { return group_; }
  const Ctx& context() const noexcept { return ctx_; }
  const std::vector<ModuleBlock>& blocks() const noexcept { return blocks_; }
  int dimension() const noexcept { return dim_; }
  // Full block-diagonal matrix of element i.
  const Matrix& element_matrix(int i) const { return element_mats_[std::size_t(i)]; }

 private:
  struct SliceMemo;  // cached slice kernel solves, shared across copies
  Group group_;
  std::vector<ModuleBlock> blocks_;
  Ctx ctx_;
  int dim_ = 0;
  std::vector<Matrix> element_mats_;
  std::shared_ptr<SliceMemo> memo_;
  friend GradedInvariantBasis invariant_basis(const ModuleSpec&,
                                              const std::vector<int>&,
                                              const Character&);
};

// The action g·x_j = sum_i psi(g^-1)_ji x_i extended to polynomials as an
// algebra automorphism; degree- and multidegree-preserving.
Polynomial act(const ModuleSpec& m, int element, const Polynomial& f);

// Averaging projection |G|^-1 sum_g g·f onto the invariant ring; idempotent,
// identity on invariants.  Throws ModularCharacteristic if p divides |G|.
Polynomial reynolds(const ModuleSpec& m, const Polynomial& f);

// Echelonized basis of a graded piece of the relative invariants
// {f : g·f = chi(g^-1) f for all g}; the trivial character gives ordinary
// invariants.
struct GradedInvariantBasis {
  int degree = 0;
  std::vector<int> multidegree;  // empty for a total-degree slice
  std::vector<Polynomial> basis;
  Character weight;
};

GradedInvariantBasis invariant_basis(const ModuleSpec& m, int degree,
                                     const Character& weight);
GradedInvariantBasis invariant_basis(const ModuleSpec& m,
                                     const std::vector<int>& multidegree,
                                     const Character& weight);
// Ordinary (trivial-weight) invariants.
GradedInvariantBasis invariant_basis(const ModuleSpec& m, int degree);

// A minimal homogeneous generating set of the invariant ring, found degree
// by degree: a new generator is any graded basis element outside the span
// of products of lower-degree invariants.  beta is the largest degree that
// contributes a generator.
struct GeneratingSet {
  std::vector<std::pair<Polynomial, int>> generators;  // (polynomial, degree)
  int beta = 0;
};

// degree_cap = 0 scans up to the Noether bound |G|.
GeneratingSet minimal_generators(const ModuleSpec& m, int degree_cap = 0);
int beta(const ModuleSpec& m, int degree_cap = 0);

// True if some group element acts on the module as -identity; all invariants
// then live in even degrees.
bool has_parity_certificate(const ModuleSpec& m);

// The ideal of K[V] generated by the positive-degree invariant generators.
IdealBasis hilbert_ideal(const ModuleSpec& m, const GeneratingSet& gens);

// Dimension of {X : X a_k = b_k X for every index k} — the space of module
// homomorphisms between the representations given by the two image lists.
int intertwiner_dim(const PrimeField& F, const std::vector<Matrix>& a,
                    const std::vector<Matrix>& b);

// Schur test over a splitting field: commutant is exactly the scalars.
bool is_irreducible(const PrimeField& F, const std::vector<Matrix>& images);
bool is_irreducible(const Group& g);

// --------------------------------------------------- dense F_p linear algebra

// Row space tracker over F_p with rows kept in reduced echelon form.
class Echelon {
 public:
  explicit Echelon(const PrimeField& F) : F_(&F) {}
  // Reduces v against the span; if a nonzero remainder is left, adds it
  // (normalized) and returns true.
  bool insert(std::vector<std::uint32_t> v);
  // True if v lies in the current row space.
  bool contains(std::vector<std::uint32_t> v) const;
  int rank() const noexcept { return int(rows_.size()); }

 private:
  std::vector<std::uint32_t> residue(std::vector<std::uint32_t> v) const;
  const PrimeField* F_;
  std::vector<std::vector<std::uint32_t>> rows_;  // pivot columns increasing
  std::vector<std::size_t> pivots_;
};

// Reduced-echelon kernel basis of the matrix given by `rows` (each of length
// `cols`), deterministic: one vector per free column, in increasing column
// order, with unit in the free position.
std::vector<std::vector<std::uint32_t>> kernel_basis(
    const PrimeField& F, std::vector<std::vector<std::uint32_t>> rows,
    std::size_t cols);

}  // namespace nsep
