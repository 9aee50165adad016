#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "nsep/septool.hpp"

using namespace nsep;

namespace {

// quaternion group of order 8 over F_17: a -> diag(i, -i), b -> [[0,-1],[1,0]]
Group dic8() {
  PrimeField F(17);
  std::uint32_t i = element_of_order_value(F, 4);
  return MatrixRep::generate(F, {{"a", Matrix(2, {i, 0, 0, F.inv(i)})},
                                 {"b", Matrix(2, {0, 16, 1, 0})}});
}

ModuleSpec dic8_W1() {
  Group g = dic8();
  std::vector<Matrix> images = {g->generators()[0].second, g->generators()[1].second};
  return ModuleSpec(g, {{"x", images, std::nullopt}});
}

Group c2() {
  PrimeField F(5);
  return MatrixRep::generate(F, {{"a", Matrix(1, {4})}});
}

Group trivial_group() {
  PrimeField F(5);
  return MatrixRep::generate(F, {{"e", Matrix(1, {1})}});
}

// picks the character with the given values on the generators
Character character_by_values(const Group& g, const std::vector<std::uint32_t>& on_gens) {
  for (const auto& chi : characters(g)) {
    bool ok = true;
    for (std::size_t k = 0; k < on_gens.size(); ++k)
      if (chi.on(g->generator_element(int(k))) != on_gens[k]) ok = false;
    if (ok) return chi;
  }
  throw BadParameter("no such character in this group");
}

ModuleSpec c2_sign() {
  Group g = c2();
  return ModuleSpec(g, {{"x", {Matrix(1, {4})}, character_by_values(g, {4})}});
}

// a^4 = b^4 = 1, bab^-1 = a^-1 of order 16, anchored by psi2 plus the line
// a -> 1, b -> i
Group c4sc4() {
  PrimeField F(97);
  std::uint32_t i = element_of_order_value(F, 4);
  Matrix a(3, {i, 0, 0, 0, F.neg(i), 0, 0, 0, 1});
  Matrix b(3, {0, F.neg(1), 0, 1, 0, 0, 0, 0, i});
  return MatrixRep::generate(F, {{"a", a}, {"b", b}});
}

// the dihedral-type 2-dim block: invariants are generated by x1 x2, x1^4 + x2^4
ModuleSpec c4sc4_W1() {
  Group g = c4sc4();
  PrimeField F = g->field();
  std::uint32_t i = element_of_order_value(F, 4);
  return ModuleSpec(
      g, {{"x", {Matrix(2, {i, 0, 0, F.neg(i)}), Matrix(2, {0, 1, 1, 0})}, std::nullopt}});
}

// alternating group on four letters through permutation matrices over F_13
Group a4() {
  PrimeField F(13);
  Matrix s(4, {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});  // (12)(34)
  Matrix r(4, {0, 0, 1, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1});  // (123)
  return MatrixRep::generate(F, {{"s", s}, {"r", r}});
}

ModuleSpec a4_perm() {
  Group g = a4();
  std::vector<Matrix> images = {g->generators()[0].second, g->generators()[1].second};
  return ModuleSpec(g, {{"x", images, std::nullopt}});
}

// product of all coordinate differences: the degree-6 alternating invariant
Polynomial vandermonde(const Ctx& ctx) {
  Polynomial prod = Polynomial::constant(ctx, 1);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      prod = prod * (Polynomial::variable(ctx, i) - Polynomial::variable(ctx, j));
  return prod;
}

// order-16 reflection group generated by the three sign-type involutions,
// acting on its defining plane over F_13
Group pauli() {
  PrimeField F(13);
  std::uint32_t i = element_of_order_value(F, 4);
  Matrix X(2, {0, 1, 1, 0});
  Matrix Y(2, {0, F.neg(i), i, 0});
  Matrix Z(2, {1, 0, 0, F.neg(1)});
  return MatrixRep::generate(F, {{"X", X}, {"Y", Y}, {"Z", Z}});
}

// defining plane plus the line where every generator acts by -1
ModuleSpec pauli_Wt() {
  Group g = pauli();
  PrimeField F = g->field();
  std::vector<Matrix> images = {g->generators()[0].second, g->generators()[1].second,
                                g->generators()[2].second};
  std::uint32_t m1 = F.neg(1);
  return ModuleSpec(g, {{"x", images, std::nullopt},
                        {"t", {Matrix(1, {m1}), Matrix(1, {m1}), Matrix(1, {m1})},
                         character_by_values(g, {m1, m1, m1})}});
}

// a^2 = b^2 = c^4 = 1, ab = ba, cac^-1 = b of order 16, anchored by its
// 2-dim block (kernel <c^2>) joined with the lines t1: (1,1,i), t2: (-1,-1,i)
Group g16_3() {
  PrimeField F(97);
  std::uint32_t i = element_of_order_value(F, 4);
  Matrix a(4, {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, F.neg(1)});
  Matrix b(4, {0, F.neg(1), 0, 0, F.neg(1), 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, F.neg(1)});
  Matrix c(4, {1, 0, 0, 0, 0, F.neg(1), 0, 0, 0, 0, i, 0, 0, 0, 0, i});
  return MatrixRep::generate(F, {{"a", a}, {"b", b}, {"c", c}});
}

ModuleSpec g16_3_Wtt() {
  Group g = g16_3();
  PrimeField F = g->field();
  std::uint32_t i = element_of_order_value(F, 4);
  std::vector<Matrix> W = {Matrix(2, {0, 1, 1, 0}),
                           Matrix(2, {0, F.neg(1), F.neg(1), 0}),
                           Matrix(2, {1, 0, 0, F.neg(1)})};
  return ModuleSpec(
      g, {{"x", W, std::nullopt},
          {"t1", {Matrix(1, {1}), Matrix(1, {1}), Matrix(1, {i})},
           character_by_values(g, {1, 1, i})},
          {"t2", {Matrix(1, {F.neg(1)}), Matrix(1, {F.neg(1)}), Matrix(1, {i})},
           character_by_values(g, {F.neg(1), F.neg(1), i})}});
}

// dihedral-of-order-8 times C2 over F_17, anchored faithfully in dimension 3
Group d8xc2() {
  PrimeField F(17);
  std::uint32_t w = element_of_order_value(F, 4);
  Matrix a(3, {w, 0, 0, 0, F.inv(w), 0, 0, 0, 1});
  Matrix b(3, {0, 1, 0, 1, 0, 0, 0, 0, 1});
  Matrix c(3, {1, 0, 0, 0, 1, 0, 0, 0, 16});
  return MatrixRep::generate(F, {{"a", a}, {"b", b}, {"c", c}});
}

// rotation plane of the dihedral part plus the lines t1: (1,-1,-1), t2: (1,1,-1)
ModuleSpec d8xc2_Wtt() {
  Group g = d8xc2();
  PrimeField F = g->field();
  std::uint32_t w = element_of_order_value(F, 4);
  std::vector<Matrix> W = {Matrix(2, {w, 0, 0, F.inv(w)}), Matrix(2, {0, 1, 1, 0}),
                           Matrix::identity(2)};
  return ModuleSpec(
      g, {{"x", W, std::nullopt},
          {"t1", {Matrix(1, {1}), Matrix(1, {16}), Matrix(1, {16})},
           character_by_values(g, {1, 16, 16})},
          {"t2", {Matrix(1, {1}), Matrix(1, {1}), Matrix(1, {16})},
           character_by_values(g, {1, 1, 16})}});
}

// three of the nine characters of C3 x C3 on diagonal lines; small enough
// that every step of the radical criterion can be followed by hand
ModuleSpec c3c3_lines() {
  PrimeField F(7);
  std::uint32_t w = element_of_order_value(F, 3);
  Group g = MatrixRep::generate(
      F, {{"a", Matrix(2, {w, 0, 0, 1})}, {"b", Matrix(2, {1, 0, 0, w})}});
  std::vector<ModuleBlock> blocks;
  int next = 1;
  for (auto want : {std::vector<std::uint32_t>{w, 1}, {1, w}, {w, w}})
    blocks.push_back({"t" + std::to_string(next++),
                      {Matrix(1, {want[0]}), Matrix(1, {want[1]})},
                      character_by_values(g, want)});
  return ModuleSpec(g, std::move(blocks));
}

Polynomial delta_of(const Polynomial& f, const Ctx& ctx2, int n) {
  return f.lifted(ctx2, 0) - f.lifted(ctx2, n);
}

}  // namespace

TEST_CASE("Davenport constants of small abelian groups") {
  CHECK(davenport({}) == 1);
  CHECK(davenport({1}) == 1);
  CHECK(davenport({2}) == 2);
  CHECK(davenport({5}) == 5);
  CHECK(davenport({8}) == 8);     // cyclic: the constant equals the order
  CHECK(davenport({2, 3}) == 6);  // C2 x C3 = C6
  CHECK(davenport({2, 2}) == 3);
  CHECK(davenport({4, 2}) == 5);
  CHECK(davenport({2, 2, 2}) == 4);
  CHECK(davenport({3, 3}) == 5);
  CHECK(davenport({4, 4}) == 7);
  CHECK(davenport({2, 2, 4}) == 6);
  CHECK(davenport({2, 2, 2, 2}) == 5);
  CHECK(davenport({6, 2}) == 7);
  // the order of the factors is immaterial
  CHECK(davenport({2, 4, 2}) == 6);
  CHECK(davenport({2, 6}) == 7);

  CHECK_THROWS_AS(davenport({0}), BadParameter);
  CHECK_THROWS_AS(davenport({4, -1}), BadParameter);
  CHECK_THROWS_AS(davenport({16, 17}), CapExceeded);
}

TEST_CASE("minimal separating degree by graded scan") {
  auto m = dic8_W1();
  PrimeField F = m.group()->field();
  std::uint32_t nu = element_of_order_value(F, 8);

  auto r = min_separating_degree({m, {nu, 1}, {nu, 16}, 0, std::nullopt}, 8);
  REQUIRE(r.degree.has_value());
  CHECK(*r.degree == 6);
  CHECK(r.cap == 8);
  REQUIRE(r.separator.has_value());
  CHECK(r.separator->f.degree() == 6);
  CHECK(r.separator->at_v != r.separator->at_w);
  CHECK(r.agreements.size() == 2);  // both degree-4 invariants agree
  for (const auto& row : r.agreements) CHECK(row.at_v == row.at_w);

  // a cap below the separating degree reports failure but keeps the rows
  auto low = min_separating_degree({m, {nu, 1}, {nu, 16}, 0, std::nullopt}, 5);
  CHECK_FALSE(low.degree.has_value());
  CHECK(low.cap == 5);
  CHECK(low.agreements.size() == 2);

  // the same point twice is never separated
  auto same = min_separating_degree({m, {nu, 1}, {nu, 1}, 0, std::nullopt}, 4);
  CHECK_FALSE(same.degree.has_value());
  CHECK(same.agreements.size() == 2);

  // a full orbit is inseparable: second point replaced by translates of the first
  for (int gi : {1, 3, 5}) {
    auto wv = mat_apply(F, m.element_matrix(gi), std::vector<std::uint32_t>{nu, 1});
    auto orb = min_separating_degree({m, {nu, 1}, wv, 0, std::nullopt}, 6);
    CHECK_FALSE(orb.degree.has_value());
  }

  // translating the second point inside its own orbit never moves the degree
  for (int gi : {0, 2, 5, 7}) {
    auto wv = mat_apply(F, m.element_matrix(gi), std::vector<std::uint32_t>{nu, 16});
    auto moved = min_separating_degree({m, {nu, 1}, wv, 0, std::nullopt}, 8);
    REQUIRE(moved.degree.has_value());
    CHECK(*moved.degree == 6);
  }

  CHECK_THROWS_AS(min_separating_degree({m, {1}, {2, 3}, 0, std::nullopt}, 3),
                  DimensionMismatch);
}

TEST_CASE("swapping two coordinates of a generic point needs degree six") {
  auto m = a4_perm();
  auto r = min_separating_degree({m, {0, 1, 2, 3}, {1, 0, 2, 3}, 0, std::nullopt}, 12);
  REQUIRE(r.degree.has_value());
  CHECK(*r.degree == 6);
  CHECK(*r.degree <= int(m.group()->order()));
  // everything below is symmetric in the four coordinates, hence agrees
  for (const auto& row : r.agreements) CHECK(row.at_v == row.at_w);
  REQUIRE(r.separator.has_value());
  CHECK(r.separator->f.degree() == 6);
}

TEST_CASE("slices vanishing at both points may be skipped") {
  {
    auto m = pauli_Wt();
    WitnessPair pair{m, {1, 1, 0}, {2, 1, 0}, 0, std::nullopt};
    auto with_skip = min_separating_degree(pair, 8, true);
    auto without = min_separating_degree(pair, 8, false);
    REQUIRE(with_skip.degree.has_value());
    REQUIRE(without.degree.has_value());
    CHECK(*with_skip.degree == *without.degree);
    CHECK(*with_skip.degree == 4);
    CHECK(with_skip.separator->f == without.separator->f);
    // the skipped slices only ever contribute 0 = 0 rows
    CHECK(with_skip.agreements.size() <= without.agreements.size());
  }
  {
    auto m = g16_3_Wtt();
    WitnessPair pair{m, {1, 0, 0, 0}, {2, 0, 0, 0}, 0, std::nullopt};
    auto with_skip = min_separating_degree(pair, 6, true);
    auto without = min_separating_degree(pair, 6, false);
    REQUIRE(with_skip.degree.has_value());
    REQUIRE(without.degree.has_value());
    CHECK(*with_skip.degree == 2);  // x1^2 + x2^2 already separates
    CHECK(*with_skip.degree == *without.degree);
    CHECK(with_skip.separator->f == without.separator->f);
  }
}

TEST_CASE("witness pairs certify prime-field lower bounds") {
  auto m = dic8_W1();
  PrimeField F = m.group()->field();
  std::uint32_t nu = element_of_order_value(F, 8);
  Polynomial hint = parse_poly(m.context(), "x1^5*x2 - x1*x2^5");

  auto cert = verify_witness({m, {nu, 1}, {nu, 16}, 6, hint});
  CHECK(cert.kind == SeparationCertificate::Kind::kWitnessLowerBound);
  CHECK(cert.degree == 6);
  REQUIRE(cert.separator.has_value());
  CHECK(cert.separator->at_v != cert.separator->at_w);
  REQUIRE(cert.hint.has_value());
  CHECK(cert.hint->f == hint);
  CHECK(cert.hint->at_v != cert.hint->at_w);
  for (const auto& row : cert.agreements) CHECK(row.at_v == row.at_w);

  // claims off by one in either direction
  CHECK_THROWS_AS(verify_witness({m, {nu, 1}, {nu, 16}, 5, std::nullopt}),
                  ClaimMismatch);
  CHECK_THROWS_AS(verify_witness({m, {nu, 1}, {nu, 16}, 7, std::nullopt}),
                  ClaimMismatch);
  // pairs inside one orbit are rejected outright
  CHECK_THROWS_AS(verify_witness({m, {nu, 1}, {16, nu}, 6, std::nullopt}),
                  OrbitCollision);
  CHECK_THROWS_AS(verify_witness({m, {nu, 1}, {nu, 1}, 6, std::nullopt}),
                  OrbitCollision);

  auto am = a4_perm();
  const Ctx& actx = am.context();
  auto acert = verify_witness({am, {0, 1, 2, 3}, {1, 0, 2, 3}, 6, vandermonde(actx)});
  CHECK(acert.degree == 6);
  REQUIRE(acert.hint.has_value());
  CHECK(acert.hint->at_v != acert.hint->at_w);

  // defective hints: wrong degree, not invariant, not separating
  CHECK_THROWS_AS(verify_witness({am, {0, 1, 2, 3}, {1, 0, 2, 3}, 6,
                                  parse_poly(actx, "x1 + x2 + x3 + x4")}),
                  ClaimMismatch);
  CHECK_THROWS_AS(verify_witness({am, {0, 1, 2, 3}, {1, 0, 2, 3}, 6,
                                  parse_poly(actx, "x1^6")}),
                  ClaimMismatch);
  CHECK_THROWS_AS(verify_witness({am, {0, 1, 2, 3}, {1, 0, 2, 3}, 6,
                                  parse_poly(actx, "x1 + x2 + x3 + x4").pow(6)}),
                  ClaimMismatch);
  // hints must live in the module's own polynomial ring
  CHECK_THROWS_AS(verify_witness({am, {0, 1, 2, 3}, {1, 0, 2, 3}, 6, hint}),
                  ContextMismatch);
}

TEST_CASE("published witnesses for the order-16 constructions") {
  {
    // reflection group on the plane: (x1^4 - x2^4) x1 x2 t separates in degree 7
    auto m = pauli_Wt();
    REQUIRE(m.group()->order() == 16);
    Polynomial hint = parse_poly(m.context(), "x1^5*x2*t - x1*x2^5*t");
    auto cert = verify_witness({m, {1, 2, 1}, {1, 2, 12}, 7, hint});
    CHECK(cert.degree == 7);
    REQUIRE(cert.hint.has_value());
    CHECK(cert.hint->at_v != cert.hint->at_w);
    for (const auto& row : cert.agreements) CHECK(row.at_v == row.at_w);
  }
  {
    // (C2 x C2) : C4 with its plane and two order-4 lines: degree 6 is needed
    auto m = g16_3_Wtt();
    REQUIRE(m.group()->order() == 16);
    Polynomial hint = parse_poly(m.context(), "x1^2*t1^3*t2 - x2^2*t1^3*t2");
    auto cert = verify_witness({m, {1, 0, 1, 1}, {1, 0, 1, 96}, 6, hint});
    CHECK(cert.degree == 6);
    REQUIRE(cert.separator.has_value());
  }
  {
    // dihedral times C2: (x1^4 - x2^4) t1 t2 separates only in degree 4 + 2
    auto m = d8xc2_Wtt();
    REQUIRE(m.group()->order() == 16);
    Polynomial hint = parse_poly(m.context(), "x1^4*t1*t2 - x2^4*t1*t2");
    auto cert = verify_witness({m, {1, 0, 1, 1}, {1, 0, 1, 16}, 6, hint});
    CHECK(cert.degree == 6);
  }
  {
    // dihedral-type block of a^4 = b^4, bab^-1 = a^-1: x1 x2 agrees on the
    // pair, x1^4 + x2^4 separates it
    auto m = c4sc4_W1();
    auto cert = verify_witness(
        {m, {1, 2}, {3, 33}, 4, parse_poly(m.context(), "x1^4 + x2^4")});
    CHECK(cert.degree == 4);
    REQUIRE(cert.hint.has_value());
    CHECK(cert.hint->at_v != cert.hint->at_w);
  }
}

TEST_CASE("radical membership oracles behind the degree criterion") {
  auto m = c4sc4_W1();
  Ctx ctx2 = m.context()->doubled("_2");
  const int n = m.context()->nvars();
  Polynomial d1 = delta_of(parse_poly(m.context(), "x1*x2"), ctx2, n);
  Polynomial d2 = delta_of(parse_poly(m.context(), "x1^4 + x2^4"), ctx2, n);

  // Rabinowitsch by hand: 1 - z * d2 stays a proper ideal alongside d1,
  // so d2 is not in the radical of (d1)
  Ctx ctx3 = ctx2->extended("@z");
  Polynomial z = Polynomial::variable(ctx3, ctx3->nvars() - 1);
  IdealBasis proper;
  proper.order = TermOrder::grevlex();
  proper.generators = {d1.lifted(ctx3),
                       Polynomial::constant(ctx3, 1) - z * d2.lifted(ctx3)};
  CHECK_FALSE(is_unit_ideal(buchberger(proper)));

  // positive control: d1 itself lies in the radical of (d1)
  IdealBasis unit;
  unit.order = TermOrder::grevlex();
  unit.generators = {d1.lifted(ctx3),
                     Polynomial::constant(ctx3, 1) - z * d1.lifted(ctx3)};
  CHECK(is_unit_ideal(buchberger(unit)));

  // the packaged test agrees with the manual runs
  IdealBasis low;
  low.order = TermOrder::grevlex();
  low.generators = {d1};
  CHECK_FALSE(radical_member(d2, low));
  CHECK(radical_member(d1, low));

  // quaternion module: the degree-6 generator resists the degree-4 differences
  auto qm = dic8_W1();
  auto gens = minimal_generators(qm);
  REQUIRE(gens.generators.size() == 3);
  Ctx qctx2 = qm.context()->doubled("_2");
  const int qn = qm.context()->nvars();
  IdealBasis deg4;
  deg4.order = TermOrder::grevlex();
  deg4.generators = {delta_of(gens.generators[0].first, qctx2, qn),
                     delta_of(gens.generators[1].first, qctx2, qn)};
  Polynomial d6 = delta_of(gens.generators[2].first, qctx2, qn);
  CHECK_FALSE(radical_member(d6, deg4));
  // nothing is in the radical of the zero ideal except zero
  IdealBasis empty;
  empty.order = TermOrder::grevlex();
  CHECK_FALSE(radical_member(deg4.generators[0], empty));
}

TEST_CASE("least separating degree via radical membership") {
  // sign module of C2: the zero ideal fails, x^2 passes
  auto r2 = betasep_via_radical(c2_sign());
  CHECK(r2.degree == 2);
  CHECK(r2.candidates == std::vector<int>{0, 2});
  CHECK(r2.failed_candidate == 0);
  CHECK(r2.generators.beta == 2);
  CHECK(r2.certificate.kind == SeparationCertificate::Kind::kRadicalUpperBound);
  CHECK(r2.certificate.degree == 2);
  REQUIRE(r2.certificate.transcripts.size() == 1);
  CHECK_FALSE(r2.certificate.transcripts.back().member);
  CHECK(r2.certificate.transcripts.back().ideal.empty());

  // quaternion module: 0 and 4 fail, 6 is the value
  auto r = betasep_via_radical(dic8_W1());
  CHECK(r.degree == 6);
  CHECK(r.candidates == std::vector<int>{0, 4, 6});
  CHECK(r.failed_candidate == 4);
  CHECK(r.generators.beta == 6);
  REQUIRE(!r.certificate.transcripts.empty());
  const auto& fail = r.certificate.transcripts.back();
  CHECK_FALSE(fail.member);
  // the basis of the two degree-4 differences, completed by the algorithm
  CHECK(fail.ideal.size() >= 2);

  // dihedral-type block: the degree-2 invariant alone is not separating
  auto r4 = betasep_via_radical(c4sc4_W1());
  CHECK(r4.degree == 4);
  CHECK(r4.candidates == std::vector<int>{0, 2, 4});
  CHECK(r4.failed_candidate == 2);

  // trivial action on a line: the coordinate separates everything
  Group e = trivial_group();
  ModuleSpec tm(e, {{"t", {Matrix(1, {1})}, trivial_character(e)}});
  auto rt = betasep_via_radical(tm);
  CHECK(rt.degree == 1);
  CHECK(rt.candidates == std::vector<int>{0, 1});
  CHECK(rt.failed_candidate == 0);

  // zero module: nothing to separate
  auto rz = betasep_via_radical(ModuleSpec(c2(), {}));
  CHECK(rz.degree == 0);
  CHECK(rz.candidates == std::vector<int>{0});
  CHECK(rz.failed_candidate == -1);
  CHECK(rz.certificate.transcripts.empty());
}

TEST_CASE("radical bound is minimal among the candidate degrees") {
  auto m = c3c3_lines();
  REQUIRE(m.blocks().size() == 3);
  REQUIRE(m.group()->order() == 9);
  auto r = betasep_via_radical(m);

  // generators: the three cubes, t1*t2*t3^2 and t1^2*t2^2*t3
  REQUIRE(r.generators.generators.size() == 5);
  std::vector<int> degrees;
  for (const auto& [f, d] : r.generators.generators) degrees.push_back(d);
  CHECK(degrees == std::vector<int>{3, 3, 3, 4, 5});
  CHECK(r.generators.beta == 5);
  CHECK(r.generators.beta == davenport({3, 3}));  // abelian: beta = Davenport
  CHECK(r.candidates == std::vector<int>{0, 3, 4, 5});

  // on the common zeros of the cube differences the degree-4 generator still
  // tells the scaled point apart, so the bound lands strictly between the
  // first and last candidates
  CHECK(r.degree == 4);
  CHECK(r.failed_candidate == 3);

  Ctx ctx2 = m.context()->doubled("_2");
  const int n = m.context()->nvars();

  // everything above the returned degree passes a fresh radical check
  IdealBasis below;
  below.order = TermOrder::grevlex();
  for (const auto& [f, d] : r.generators.generators)
    if (d <= r.degree) below.generators.push_back(delta_of(f, ctx2, n));
  for (const auto& [f, d] : r.generators.generators)
    if (d > r.degree) CHECK(radical_member(delta_of(f, ctx2, n), below));

  // while at the failed candidate some generator still escapes
  IdealBasis failed;
  failed.order = TermOrder::grevlex();
  for (const auto& [f, d] : r.generators.generators)
    if (d <= r.failed_candidate) failed.generators.push_back(delta_of(f, ctx2, n));
  bool some_escape = false;
  for (const auto& [f, d] : r.generators.generators)
    if (d > r.failed_candidate && !some_escape)
      some_escape = !radical_member(delta_of(f, ctx2, n), failed);
  CHECK(some_escape);
}

TEST_CASE("group-level value is the maximum over small direct sums") {
  Group g = dic8();
  PrimeField F = g->field();
  auto chars = characters(g);
  REQUIRE(chars.size() == 4);
  std::vector<ModuleBlock> irr;
  for (std::size_t k = 0; k < chars.size(); ++k)
    irr.push_back({"t" + std::to_string(k + 1),
                   {Matrix(1, {chars[k].on(g->generator_element(0))}),
                    Matrix(1, {chars[k].on(g->generator_element(1))})},
                   chars[k]});
  irr.push_back({"x", {g->generators()[0].second, g->generators()[1].second},
                 std::nullopt});

  std::uint32_t nu = element_of_order_value(F, 8);
  ModuleSpec wm(g, {irr.back()});
  WitnessPair wit{wm, {nu, 1}, {nu, 16}, 6,
                  parse_poly(wm.context(), "x1^5*x2 - x1*x2^5")};

  auto report = betasep_group(g, irr, wit, 0, 1);
  CHECK(report.group_order == 8);
  CHECK(report.mu == 2);
  CHECK(report.subset_size == 3);
  CHECK(report.subsets.size() == 10);  // all 3-subsets of 5 irreducibles
  CHECK(report.radical_value == 6);
  REQUIRE(report.witness_lower_bound.has_value());
  CHECK(*report.witness_lower_bound == 6);
  CHECK(report.bounds_agree);
  REQUIRE(report.best.has_value());
  CHECK(report.best->degree == 6);
  CHECK(report.reduction_trail.size() >= 4);
  CHECK_FALSE(report.field_note.empty());

  for (const auto& s : report.subsets) {
    CHECK(int(s.members.size()) == 3);
    CHECK(std::is_sorted(s.members.begin(), s.members.end()));
    CHECK(s.value >= 0);
    CHECK(s.value <= report.radical_value);
    // only sums involving the 2-dim block reach the group value
    bool has_plane =
        std::find(s.members.begin(), s.members.end(), 4) != s.members.end();
    if (s.value == 6) CHECK(has_plane);
    if (!has_plane) CHECK(s.value <= 3);  // character lines of C2 x C2 type
  }

  // parallel evaluation merges to the same report
  auto par = betasep_group(g, irr, std::nullopt, 0, 4);
  CHECK(par.radical_value == report.radical_value);
  REQUIRE(par.subsets.size() == report.subsets.size());
  for (std::size_t k = 0; k < par.subsets.size(); ++k) {
    CHECK(par.subsets[k].members == report.subsets[k].members);
    CHECK(par.subsets[k].value == report.subsets[k].value);
  }
  CHECK_FALSE(par.witness_lower_bound.has_value());

  // forcing singletons still finds the value on the 2-dim block alone
  auto single = betasep_group(g, irr, std::nullopt, 1, 2);
  CHECK(single.subset_size == 1);
  CHECK(single.subsets.size() == 5);
  CHECK(single.radical_value == 6);
}

TEST_CASE("elementary abelian example with witness agreement") {
  PrimeField F(5);
  Group g = MatrixRep::generate(
      F, {{"a", Matrix(2, {4, 0, 0, 1})}, {"b", Matrix(2, {1, 0, 0, 4})}});
  REQUIRE(g->order() == 4);
  auto chars = characters(g);
  REQUIRE(chars.size() == 4);
  std::vector<ModuleBlock> irr;
  for (std::size_t k = 0; k < chars.size(); ++k)
    irr.push_back({"t" + std::to_string(k + 1),
                   {Matrix(1, {chars[k].on(g->generator_element(0))}),
                    Matrix(1, {chars[k].on(g->generator_element(1))})},
                   chars[k]});

  // witness on the three nontrivial lines: squares agree, the triple product
  // tells the points apart
  std::vector<ModuleBlock> lines;
  int idx = 0;
  for (const auto& b : irr)
    if (!(*b.weight).is_trivial())
      lines.push_back({"u" + std::to_string(++idx), b.gen_images, b.weight});
  REQUIRE(lines.size() == 3);
  ModuleSpec wm(g, lines);
  WitnessPair wit{wm, {1, 1, 1}, {1, 1, 4}, 3,
                  parse_poly(wm.context(), "u1*u2*u3")};

  auto report = betasep_group(g, irr, wit, 0, 2);
  CHECK(report.group_order == 4);
  CHECK(report.mu == 2);
  CHECK(report.subset_size == 3);
  CHECK(report.subsets.size() == 4);
  CHECK(report.radical_value == 3);
  CHECK(report.bounds_agree);
  CHECK(report.radical_value <= davenport({2, 2}));
}

TEST_CASE("incomplete or defective irreducible lists are rejected") {
  Group g = dic8();
  auto chars = characters(g);
  std::vector<ModuleBlock> irr;
  for (std::size_t k = 0; k < chars.size(); ++k)
    irr.push_back({"t" + std::to_string(k + 1),
                   {Matrix(1, {chars[k].on(g->generator_element(0))}),
                    Matrix(1, {chars[k].on(g->generator_element(1))})},
                   chars[k]});
  irr.push_back({"x", {g->generators()[0].second, g->generators()[1].second},
                 std::nullopt});

  CHECK_THROWS_AS(betasep_group(g, {}), IrreducibleListUnverified);

  // dropping a line: squared dimensions no longer sum to the group order
  std::vector<ModuleBlock> missing(irr.begin() + 1, irr.end());
  CHECK_THROWS_AS(betasep_group(g, missing), IrreducibleListUnverified);

  // the same character listed twice
  auto dup = irr;
  dup[1] = ModuleBlock{"t2", dup[0].gen_images, dup[0].weight};
  CHECK_THROWS_AS(betasep_group(g, dup), IrreducibleListUnverified);

  // a reducible block smuggled in place of the plane
  auto red = irr;
  red.back() = ModuleBlock{
      "x", {Matrix::identity(2), Matrix(2, {1, 0, 0, 16})}, std::nullopt};
  CHECK_THROWS_AS(betasep_group(g, red), IrreducibleListUnverified);

  // witness modules must live over the same group object
  WitnessPair foreign{c2_sign(), {1}, {2}, 2, std::nullopt};
  CHECK_THROWS_AS(betasep_group(g, irr, foreign), BadParameter);
}
