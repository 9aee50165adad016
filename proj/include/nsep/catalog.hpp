#pragma once
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nsep/septool.hpp"

namespace nsep {

// Expected values for one catalogue row, with a note saying how this tool
// certifies them (witness + radical sweep, Davenport recomputation, or a
// closed family formula).
struct Expectations {
  std::optional<int> beta;
  std::optional<int> beta_sep;
  std::string source;
};

// An automorphism of a catalogued group, one word per generator: generator k
// maps to the product of the generators listed in generator_images[k].
struct AutomorphismSpec {
  std::string name;
  std::vector<Word> generator_images;
};

// A named relative invariant; the label's subscript records its weight on
// the generator list.  The polynomial lives in the context of the owning
// entry's fixture module.
struct NamedRelativeInvariant {
  std::string label;
  std::vector<std::uint32_t> weight_on_generators;
  Polynomial poly;
};

// Concrete, field-instantiated objects for one catalogue entry: the faithful
// matrix group, its complete irreducible list, witness pairs, automorphisms,
// and named relative-invariant fixtures, ready for invar/septool.
struct BuiltEntry {
  std::string id;
  std::string name;
  Group group;
  // Complete pairwise non-isomorphic list over a splitting prime field:
  // blocks of dimension >= 2 first (named "x", "y"), then the character
  // lines (named "t1", "t2", ... with the trivial character first).
  std::vector<ModuleBlock> irreducibles;
  // One single-block module per irreducible, index-aligned.
  std::vector<ModuleSpec> modules;
  std::vector<WitnessPair> witnesses;
  std::vector<AutomorphismSpec> automorphisms;
  std::optional<ModuleSpec> fixture_module;
  std::vector<NamedRelativeInvariant> fixtures;
  // For abelian entries: the cyclic factor orders, for Davenport-constant
  // cross-checks.  Empty for non-abelian entries.
  std::vector<int> abelian_cyclic_orders;
  Expectations expected;
};

// Field-independent catalogue row: metadata plus the builder.
struct CatalogEntry {
  std::string id;    // canonical id, e.g. "(16,12)" or "dic:8"
  std::string name;  // display name
  std::size_t order = 0;
  bool abelian = false;
  int max_block_dim = 1;
  // Multiplicative orders the base field must admit; all divide |G|.
  std::vector<std::uint64_t> root_orders;
  Expectations expected;
  std::function<BuiltEntry(const PrimeField&)> builder;
};

// The fixed catalogue: the ten small-group table rows, C2, and the family
// instances exercised by the verification suite.
const std::vector<CatalogEntry>& catalog_entries();

// Parameterized family description for listings.
struct FamilyInfo {
  std::string prefix;         // id prefix, e.g. "dic"
  std::string parameter;      // meaning and constraints of the id parameter
  std::string description;
  std::string value_formula;  // separating bound as a function of the parameter
};
const std::vector<FamilyInfo>& catalog_families();

// Entry lookup by id.  Accepts canonical ids, aliases ("pauli", "a4", "q8",
// GAP-style ids of family instances), and parameterized family ids
// ("dic:20", "d2nxc2:8", "m2n:32", "d2n:32", "sd2n:32").  Ids are
// case-insensitive and ignore spaces.  Throws UnknownGroup for unknown ids
// and BadParameter for malformed family parameters.
CatalogEntry catalog_lookup(const std::string& id);

// Instantiate an entry over a concrete field.  Throws RootUnavailable unless
// every required root order divides p - 1.
BuiltEntry build(const std::string& id, const PrimeField& field);

// Smallest prime satisfying the default preconditions for the entry:
// p = 1 (mod |G|) and p > (max block dimension - 1) * |G|.
PrimeField auto_prime(const CatalogEntry& entry);

// One row of the expected-value table driven by verify-all.
struct ExpectedRow {
  std::string id;
  std::string name;
  int beta = 0;
  int beta_sep = 0;
  std::string source;
};
std::vector<ExpectedRow> expected_table();

// Tabulate the character with the given values on the group's generators;
// throws NotRepresentation unless the assignment extends to a homomorphism.
Character character_from_generator_values(const Group& g,
                                          const std::vector<std::uint32_t>& gen_values);

// Direct sum of catalogued irreducibles chosen by selector: components
// joined with '+', each "W<k>" (k-th block of dimension >= 2), "U<k>" (k-th
// character line, trivial first), "all" (every irreducible), or "sign" (the
// unique nontrivial character line, for groups that have exactly one).
// Blocks are renamed positionally ("x", "y", ..., "t1", "t2", ...).
ModuleSpec assemble_module(const BuiltEntry& e, const std::string& selector);

// The two-parameter groups of 2-power order with a cyclic subgroup of index
// two, realized on the three-dimensional representation
//   a -> diag(xi, xi^k, 1),  b -> [[0,1,0],[1,0,0],[0,0,-1]]
// (xi of order 2^(n-1); k = 2^(n-2)+1 modular, -1 dihedral, 2^(n-2)-1
// semidihedral, +1 split abelian), optionally extended by central and
// inverted odd cyclic factors
//   e -> diag(eps, eps, 1),  r -> diag(rho, 1/rho, 1)
// with eps of odd order s and rho of odd order r, r and s coprime.  The
// witness pair [1,0,1] / [1,0,-1] separates first in degree s*r*2^(n-1)+1.
enum class Index2Kind { kModular, kDihedral, kSemidihedral, kSplitAbelian };
BuiltEntry index2_three_dim(const PrimeField& F, Index2Kind kind, int two_power,
                            int r = 1, int s = 1);

}  // namespace nsep
