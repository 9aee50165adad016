#pragma once
#include <optional>
#include <string>
#include <vector>

#include "nsep/invar.hpp"

namespace nsep {

// A claimed hard-to-separate pair of points of a module: the two points lie
// in distinct orbits, agree on every invariant of degree below the claim, and
// are separated in the claimed degree.
struct WitnessPair {
  ModuleSpec module;
  std::vector<std::uint32_t> v, w;
  int claimed_min_sep_degree = 0;
  // Optional explicit separating invariant of the claimed degree.
  std::optional<Polynomial> hint;
};

// One invariant evaluated at the two points of a pair.
struct EvaluationRow {
  Polynomial f;
  std::uint32_t at_v = 0, at_w = 0;
};

// Outcome of a graded scan for the least degree separating two points.
// `degree` empty means not separated by any invariant of degree <= cap.
struct ScanResult {
  std::optional<int> degree;
  int cap = 0;
  std::optional<EvaluationRow> separator;
  std::vector<EvaluationRow> agreements;  // rows scanned before the separator
};

// Least degree <= cap of a multihomogeneous invariant separating pair.v and
// pair.w, by scanning the graded slices of the invariant ring in increasing
// total degree.  With `skip_vanishing_blocks`, slices positive in a block on
// which both points vanish are skipped (every such invariant evaluates to
// zero at both points).
ScanResult min_separating_degree(const WitnessPair& pair, int cap,
                                 bool skip_vanishing_blocks = true);

// Self-contained evidence for a separation bound; enough to re-verify the
// verdict by evaluation / ideal-membership without rerunning the search.
struct SeparationCertificate {
  enum class Kind { kWitnessLowerBound, kRadicalUpperBound, kPairwiseScan };
  Kind kind = Kind::kPairwiseScan;
  int degree = 0;
  std::vector<EvaluationRow> agreements;   // equal values below the bound
  std::optional<EvaluationRow> separator;  // strict separation at the bound
  std::optional<EvaluationRow> hint;       // validated caller-supplied separator
  std::vector<RadicalTranscript> transcripts;  // radical-membership evidence
};

// Checks a witness pair end to end: the points lie in distinct orbits of the
// module action, the minimal separating degree equals the claim, and the
// optional hint is an invariant of the claimed degree separating the points.
// Throws OrbitCollision when the points share an orbit and ClaimMismatch when
// separation happens in a different degree (or the hint fails).
SeparationCertificate verify_witness(const WitnessPair& pair);

// Exact separating Noether number of the module over the algebraic closure,
// with its re-checkable Groebner evidence.
struct RadicalBetaSep {
  int degree = 0;
  std::vector<int> candidates;   // 0 plus the distinct generator degrees
  // Largest candidate below `degree` (minimality evidence lives there);
  // -1 when `degree` is already the first candidate.
  int failed_candidate = -1;
  GeneratingSet generators;
  SeparationCertificate certificate;  // kind = kRadicalUpperBound
};

// Invariants of degree <= d separate what all invariants separate iff for
// every generator f the difference f(x) - f(y) lies in the radical of the
// ideal generated by the differences of the generators of degree <= d (in
// doubled variables).  Returns the least such d among the candidate degrees.
// Radical membership is insensitive to field extension, so the value is
// beta_sep over the algebraic closure: an upper bound for the prime field,
// matched against witness lower bounds by the callers.
RadicalBetaSep betasep_via_radical(const ModuleSpec& m);

// One direct sum of irreducibles evaluated by betasep_via_radical.
struct SubsetEvaluation {
  std::vector<int> members;  // indices into the irreducible list, increasing
  int value = 0;
};

// Group-level separating Noether number report with both bound directions.
struct BetaSepReport {
  std::size_t group_order = 0;
  int mu = 0;
  int subset_size = 0;  // min(mu+1, number of irreducibles)
  std::vector<SubsetEvaluation> subsets;
  int radical_value = 0;  // max over subsets: beta_sep over the closure
  std::optional<int> witness_lower_bound;
  bool bounds_agree = false;  // witness bound meets the radical value
  std::optional<RadicalBetaSep> best;  // evidence for an attaining subset
  std::vector<std::string> reduction_trail;
  std::string field_note;
};

// beta_sep of the group over the algebraic closure: the maximum of
// betasep_via_radical over all subsets of size min(mu(G)+1, q) of a complete
// list of pairwise non-isomorphic irreducibles (direct sums of distinct
// irreducibles separate at least as much as any module).  The list is
// verified first: each block irreducible, no two isomorphic, squared
// dimensions summing to |G|; otherwise IrreducibleListUnverified.  A witness
// pair, when supplied, contributes the prime-field lower bound.
// subset_size_override = 0 uses mu(G)+1; jobs > 1 evaluates subsets in
// parallel (results are merged deterministically).
BetaSepReport betasep_group(const Group& g,
                            const std::vector<ModuleBlock>& irreducibles,
                            const std::optional<WitnessPair>& witness = std::nullopt,
                            int subset_size_override = 0, int jobs = 1);

// Davenport constant of the abelian group with the given cyclic factor
// orders: the maximal length of a product-one sequence with no proper
// nonempty product-one subsequence, by exhaustive search over canonically
// ordered sequences.  Requires the group order to be at most 256.
int davenport(const std::vector<int>& cyclic_orders);

}  // namespace nsep
