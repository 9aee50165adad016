#pragma once
#include <string>
#include <vector>

#include "nsep/mpoly.hpp"

namespace nsep {

// Generating set of an ideal together with the term order to work under.
struct IdealBasis {
  std::vector<Polynomial> generators;  // nonzero, shared ambient context
  TermOrder order;
};

// Reduced Groebner basis: monic elements, no leading monomial divides
// another, every element fully reduced against the rest, sorted in
// descending leading-monomial order.  Unique per (ideal, order).
struct GroebnerBasis {
  std::vector<Polynomial> elements;
  TermOrder order;
  bool reduced = false;

  Ctx context() const { return elements.empty() ? Ctx() : elements.front().context(); }
};

// Buchberger with normal-strategy pair selection and the product + chain
// pair-elimination criteria; returns the reduced basis.  An empty generator
// list (the zero ideal) yields an empty basis.
GroebnerBasis buchberger(const IdealBasis& ideal);

// Same, but the elements of `base` are known to already be a reduced
// Groebner basis for their own ideal under the same order: pairs internal
// to `base` are skipped.  Result equals buchberger(base ∪ extra).
GroebnerBasis buchberger_extend(const GroebnerBasis& base,
                                std::vector<Polynomial> extra);

// S-polynomial of two nonzero polynomials (both made monic first).
Polynomial spoly(const Polynomial& f, const Polynomial& g, const TermOrder& order);

// Remainder of full division by gb.elements: no term of the result is
// divisible by any leading monomial of the basis.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

bool ideal_member(const Polynomial& f, const GroebnerBasis& gb);
bool ideal_member(const Polynomial& f, const IdealBasis& ideal);

// True iff the basis presents the unit ideal (single constant element).
bool is_unit_ideal(const GroebnerBasis& gb);

// Record of one radical-membership decision, for inclusion in certificates.
struct RadicalTranscript {
  std::vector<std::string> ideal;  // rendered generators
  std::string query;               // rendered f
  bool member = false;
};

// Membership of f in the radical of the ideal over the algebraic closure:
// adjoin a fresh last variable z and test 1 ∈ (ideal ∪ {1 − z·f}).  The
// verdict does not depend on the field of definition.
bool radical_member(const Polynomial& f, const IdealBasis& ideal,
                    RadicalTranscript* transcript = nullptr);
// Fast path reusing a precomputed Groebner basis of the ideal.
bool radical_member(const Polynomial& f, const GroebnerBasis& base,
                    RadicalTranscript* transcript = nullptr);

}  // namespace nsep
