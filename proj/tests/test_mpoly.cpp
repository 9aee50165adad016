#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "nsep/mpoly.hpp"

using namespace nsep;

namespace {

// Independent count of 2-variable monomials of total degree d (brute scan).
int count_two_var_monomials(int d) {
  int n = 0;
  for (int a = 0; a <= d; ++a)
    for (int b = 0; b <= d; ++b)
      if (a + b == d) ++n;
  return n;
}

Ctx xy_ctx(std::uint32_t p = 7) { return VariableContext::make(PrimeField(p), {{"x", 2}}); }

Polynomial random_sparse(const Ctx& ctx, std::mt19937& rng, int max_terms = 6,
                         int max_exp = 4) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> expd(0, max_exp);
  std::uniform_int_distribution<std::uint32_t> coeff(0, ctx->field().modulus() - 1);
  std::vector<Term> ts;
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    Monomial m;
    for (int v = 0; v < ctx->nvars(); ++v) {
      int e = expd(rng);
      m.e[v] = std::uint8_t(e);
      m.deg += e;
    }
    ts.push_back({m, coeff(rng)});
  }
  return Polynomial::from_terms(ctx, std::move(ts));
}

std::vector<std::uint32_t> random_point(const Ctx& ctx, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, ctx->field().modulus() - 1);
  std::vector<std::uint32_t> v(ctx->nvars());
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace

TEST_CASE("variable context naming and lookup") {
  auto ctx = VariableContext::make(PrimeField(7), {{"x", 2}, {"t", 1}});
  CHECK(ctx->nvars() == 3);
  CHECK(ctx->nblocks() == 2);
  CHECK(ctx->var_name(0) == "x1");
  CHECK(ctx->var_name(1) == "x2");
  CHECK(ctx->var_name(2) == "t");
  CHECK(ctx->var_index("x2") == 1);
  CHECK(ctx->var_index("t") == 2);
  CHECK(ctx->var_index("y1") == -1);
  CHECK(ctx->block_of_var(1) == 0);
  CHECK(ctx->block_of_var(2) == 1);
  CHECK(ctx->block_offset(1) == 2);

  auto dbl = ctx->doubled("_2");
  CHECK(dbl->nvars() == 6);
  CHECK(dbl->var_name(0) == "x1");          // originals keep their indices
  CHECK(dbl->var_name(3) == "x_21");
  CHECK(dbl->var_name(5) == "t_2");

  auto ext = ctx->extended("@z");
  CHECK(ext->nvars() == 4);
  CHECK(ext->var_name(3) == "@z");

  CHECK_THROWS_AS(VariableContext::make(PrimeField(7), {{"x", 2}, {"x", 2}}),
                  DimensionMismatch);
  CHECK_THROWS_AS(VariableContext::make(PrimeField(7), {{"x", 40}}), DimensionMismatch);
  CHECK_THROWS_AS(VariableContext::make(PrimeField(7), {{"x", 0}}), DimensionMismatch);
}

TEST_CASE("product and sum fixtures") {
  auto ctx = xy_ctx(7);
  auto x1 = Polynomial::variable(ctx, 0);
  auto x2 = Polynomial::variable(ctx, 1);

  CHECK((x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2);
  CHECK((x1 * x1 + x2 * x2) + (x1 * x1 - x2 * x2) == (x1 * x1).scaled(2));
  // x1x2 * (x1^4 - x2^4) = x1^5 x2 - x1 x2^5
  auto lhs = (x1 * x2) * (x1.pow(4) - x2.pow(4));
  auto rhs = x1.pow(5) * x2 - x1 * x2.pow(5);
  CHECK(lhs == rhs);
  CHECK(lhs.term_count() == 2);
  CHECK(lhs.degree() == 6);
}

TEST_CASE("zero and scaling behave canonically") {
  auto ctx = xy_ctx(5);
  auto x1 = Polynomial::variable(ctx, 0);
  auto f = x1.pow(3) + Polynomial::constant(ctx, 2);
  CHECK((f - f).is_zero());
  CHECK((f - f).degree() == -1);
  CHECK(f.scaled(0).is_zero());
  CHECK(f.scaled(1) == f);
  CHECK(f.scaled(5).is_zero());  // scaling by p == scaling by 0
  CHECK(-(-f) == f);
  // (x1 + 1)^3 over F_5
  auto g = (x1 + Polynomial::constant(ctx, 1)).pow(3);
  auto expect = x1.pow(3) + x1.pow(2).scaled(3) + x1.scaled(3) + Polynomial::constant(ctx, 1);
  CHECK(g == expect);
}

TEST_CASE("from_terms normalizes duplicates and rejects bad exponents") {
  auto ctx = xy_ctx(7);
  Monomial m = Monomial::var(0, 2);
  auto f = Polynomial::from_terms(ctx, {{m, 3}, {m, 4}});  // 3 + 4 = 0 mod 7
  CHECK(f.is_zero());
  auto g = Polynomial::from_terms(ctx, {{m, 3}, {Monomial::var(1), 0}});
  CHECK(g.term_count() == 1);

  Monomial bad = Monomial::var(5);  // outside the 2-variable context
  CHECK_THROWS_AS(Polynomial::from_terms(ctx, {{bad, 1}}), DimensionMismatch);
}

TEST_CASE("context mismatch is detected, structural equality is accepted") {
  auto a = xy_ctx(7);
  auto b = VariableContext::make(PrimeField(7), {{"x", 2}});  // same structure
  auto c = VariableContext::make(PrimeField(11), {{"x", 2}});
  auto d = VariableContext::make(PrimeField(7), {{"y", 2}});
  auto fa = Polynomial::variable(a, 0);
  auto fb = Polynomial::variable(b, 1);
  CHECK((fa + fb).term_count() == 2);  // structurally identical contexts mix fine
  CHECK_THROWS_AS(fa + Polynomial::variable(c, 0), ContextMismatch);
  CHECK_THROWS_AS(fa + Polynomial::variable(d, 0), ContextMismatch);
}

TEST_CASE("evaluation fixtures") {
  auto ctx = xy_ctx(7);
  auto x1 = Polynomial::variable(ctx, 0);
  auto x2 = Polynomial::variable(ctx, 1);
  CHECK((x1.pow(4) - x2.pow(4)).evaluate({1, 1}) == 0);

  // (x1^4 - x2^4) t1 t2 at ([1,0],1,1) and ([1,0],1,-1) over F_17
  auto tctx = VariableContext::make(PrimeField(17), {{"x", 2}, {"t1", 1}, {"t2", 1}});
  auto f = parse_poly(tctx, "x1^4*t1*t2 - x2^4*t1*t2");
  CHECK(f.evaluate({1, 0, 1, 1}) == 1);
  CHECK(f.evaluate({1, 0, 1, 16}) == 16);

  // x1 x2 at [nu, 1] with nu of multiplicative order 8 in F_17
  PrimeField f17(17);
  std::uint32_t nu = element_of_order_value(f17, 8);
  CHECK(f17.element_order(nu) == 8);
  auto xc17 = VariableContext::make(f17, {{"x", 2}});
  CHECK(parse_poly(xc17, "x1*x2").evaluate({nu, 1}) == nu);

  CHECK_THROWS_AS(x1.evaluate({1}), DimensionMismatch);
}

TEST_CASE("multidegree fixtures") {
  auto ctx = xy_ctx(7);
  auto x1 = Polynomial::variable(ctx, 0);
  auto x2 = Polynomial::variable(ctx, 1);
  CHECK((x1.pow(2) * x2.pow(2)).multidegree() == std::vector<int>{4});

  auto tctx = VariableContext::make(PrimeField(17), {{"x", 2}, {"t1", 1}, {"t2", 1}});
  auto h = parse_poly(tctx, "x1^2*t1^3*t2 - x2^2*t1^3*t2");
  CHECK(h.is_homogeneous());
  CHECK(h.multidegree() == std::vector<int>{2, 3, 1});

  auto bad = parse_poly(tctx, "x1 + t1");
  CHECK(bad.is_homogeneous());  // total degree 1 everywhere
  CHECK_THROWS_AS(bad.multidegree(), NonHomogeneous);

  CHECK(Polynomial::zero(tctx).multidegree() == std::vector<int>{0, 0, 0});
}

TEST_CASE("monomial enumeration counts and order") {
  auto ctx = xy_ctx(7);
  auto order = TermOrder::grevlex();

  auto d2 = monomials_of_degree(ctx, 2, order);
  REQUIRE(d2.size() == 3);
  CHECK(render(d2[0], ctx) == "x1^2");
  CHECK(render(d2[1], ctx) == "x1*x2");
  CHECK(render(d2[2], ctx) == "x2^2");

  for (int d = 0; d <= 8; ++d)
    CHECK(int(monomials_of_degree(ctx, d, order).size()) == count_two_var_monomials(d));
  CHECK(monomials_of_degree(ctx, 6, order).size() == 7);

  auto ctx4 = VariableContext::make(PrimeField(7), {{"x", 2}, {"y", 2}});
  auto md = monomials_of_multidegree(ctx4, {1, 1}, order);
  CHECK(md.size() == 4);
  for (const auto& m : md) {
    CHECK(m.e[0] + m.e[1] == 1);
    CHECK(m.e[2] + m.e[3] == 1);
  }

  // strictly decreasing in the active order, for both orders
  auto ctx3 = VariableContext::make(PrimeField(7), {{"x", 3}});
  for (auto ord : {TermOrder::lex(), TermOrder::grevlex()}) {
    auto ms = monomials_of_degree(ctx3, 4, ord);
    for (std::size_t i = 1; i < ms.size(); ++i)
      CHECK(ord.compare(ms[i - 1], ms[i]) > 0);
  }
  auto msm = monomials_of_multidegree(ctx4, {2, 1}, order);
  CHECK(msm.size() == 6);
  for (std::size_t i = 1; i < msm.size(); ++i)
    CHECK(order.compare(msm[i - 1], msm[i]) > 0);
}

TEST_CASE("lex and grevlex disagree where expected") {
  auto ctx = VariableContext::make(PrimeField(7), {{"x", 3}});
  auto f = parse_poly(ctx, "x1^2*x2*x3 + x1*x2^3");
  auto lt_lex = f.leading_term(TermOrder::lex()).first;
  auto lt_grev = f.leading_term(TermOrder::grevlex()).first;
  CHECK(render(lt_lex, ctx) == "x1^2*x2*x3");
  CHECK(render(lt_grev, ctx) == "x1*x2^3");

  // graded: lower total degree always loses under grevlex
  auto g = parse_poly(ctx, "x1^5 + x2*x3^5");
  CHECK(render(g.leading_term(TermOrder::grevlex()).first, ctx) == "x2*x3^5");
  CHECK(render(g.leading_term(TermOrder::lex()).first, ctx) == "x1^5");

  CHECK_THROWS_AS(Polynomial::zero(ctx).leading_term(TermOrder::lex()),
                  DimensionMismatch);
}

TEST_CASE("term order respects a priority permutation") {
  auto ctx = VariableContext::make(PrimeField(7), {{"x", 2}});
  TermOrder rev_lex{TermOrder::kLex, {1, 0}};  // x2 ranked above x1
  auto f = parse_poly(ctx, "x1^3 + x2");
  CHECK(render(f.leading_term(rev_lex).first, ctx) == "x2");
  CHECK(render(f.leading_term(TermOrder::lex()).first, ctx) == "x1^3");
}

TEST_CASE("ring axioms and evaluation homomorphism, randomized") {
  auto ctx = VariableContext::make(PrimeField(97), {{"x", 2}, {"y", 1}});
  std::mt19937 rng(12345);
  const PrimeField& F = ctx->field();
  for (int trial = 0; trial < 40; ++trial) {
    auto f = random_sparse(ctx, rng), g = random_sparse(ctx, rng),
         h = random_sparse(ctx, rng);
    CHECK(f + g == g + f);
    CHECK((f + g) + h == f + (g + h));
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    auto v = random_point(ctx, rng);
    CHECK((f * g).evaluate(v) == F.mul(f.evaluate(v), g.evaluate(v)));
    CHECK((f + g).evaluate(v) == F.add(f.evaluate(v), g.evaluate(v)));
  }
}

TEST_CASE("linear substitution matches evaluation at transformed points") {
  auto ctx = xy_ctx(17);
  auto f = parse_poly(ctx, "x1^5*x2 + 16*x1*x2^5");

  // swap of x1 and x2 negates this antisymmetric polynomial
  std::vector<std::uint32_t> swap = {0, 1, 1, 0};
  CHECK(f.substitute_linear(swap) == -f);
  std::vector<std::uint32_t> id = {1, 0, 0, 1};
  CHECK(f.substitute_linear(id) == f);

  std::mt19937 rng(777);
  const PrimeField& F = ctx->field();
  for (int trial = 0; trial < 25; ++trial) {
    auto g = random_sparse(ctx, rng);
    std::vector<std::uint32_t> rows(4);
    for (auto& r : rows) r = rng() % 17;
    auto v = random_point(ctx, rng);
    // (Sg)(v) = g(w) with w_j = sum_i rows[j][i] v_i
    std::vector<std::uint32_t> w(2);
    for (int j = 0; j < 2; ++j)
      w[j] = F.add(F.mul(rows[j * 2 + 0], v[0]), F.mul(rows[j * 2 + 1], v[1]));
    CHECK(g.substitute_linear(rows).evaluate(v) == g.evaluate(w));
  }
  CHECK_THROWS_AS(f.substitute_linear({1, 0, 0}), DimensionMismatch);
}

TEST_CASE("lifting into a doubled context") {
  auto ctx = xy_ctx(17);
  auto f = parse_poly(ctx, "x1^2*x2 + 3");
  auto dbl = ctx->doubled("_2");
  auto front = f.lifted(dbl);
  auto back = f.lifted(dbl, ctx->nvars());
  CHECK(front.evaluate({2, 3, 0, 0}) == f.evaluate({2, 3}));
  CHECK(back.evaluate({0, 0, 2, 3}) == f.evaluate({2, 3}));
  CHECK(render(back) == "x_21^2*x_22 + 3");
  CHECK_THROWS_AS(f.lifted(ctx, 1), DimensionMismatch);
  auto other = VariableContext::make(PrimeField(11), {{"x", 2}});
  CHECK_THROWS_AS(f.lifted(other), ContextMismatch);
}

TEST_CASE("render and parse round-trip") {
  auto ctx = VariableContext::make(PrimeField(17), {{"x", 2}, {"t(1,-1)", 1}});
  auto f = parse_poly(ctx, "x1^5*x2 + 16*x1*x2^5");
  CHECK(render(f) == "x1^5*x2 + 16*x1*x2^5");
  CHECK(parse_poly(ctx, render(f)) == f);

  // implicit '*', signs, odd block names, constants
  CHECK(parse_poly(ctx, "2x1x2") == parse_poly(ctx, "2*x1*x2"));
  CHECK(parse_poly(ctx, "-x1 + x2 - 3") ==
        parse_poly(ctx, "16*x1 + x2 + 14"));
  CHECK(parse_poly(ctx, "x1^2 t(1,-1)^3").multidegree() == std::vector<int>{2, 3});
  CHECK(render(parse_poly(ctx, "t(1,-1)^2")) == "t(1,-1)^2");
  CHECK(parse_poly(ctx, "0").is_zero());
  CHECK(parse_poly(ctx, "17").is_zero());
  CHECK(render(Polynomial::zero(ctx)) == "0");
  CHECK(render(Polynomial::constant(ctx, 5)) == "5");

  std::mt19937 rng(424242);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = random_sparse(ctx, rng);
    CHECK(parse_poly(ctx, render(g)) == g);
  }

  CHECK_THROWS_AS(parse_poly(ctx, "x3"), ParseError);
  CHECK_THROWS_AS(parse_poly(ctx, "x1^"), ParseError);
  CHECK_THROWS_AS(parse_poly(ctx, "x1 $ x2"), ParseError);
  CHECK_THROWS_AS(parse_poly(ctx, ""), ParseError);
}

TEST_CASE("monomial helpers") {
  Monomial a = Monomial::var(0, 2).times(Monomial::var(1));  // x1^2 x2
  Monomial b = Monomial::var(0).times(Monomial::var(1));     // x1 x2
  CHECK(b.divides(a));
  CHECK_FALSE(a.divides(b));
  auto q = b.quotient_of(a);
  CHECK(q == Monomial::var(0));
  CHECK(q.deg == 1);
  auto l = Monomial::var(0, 2).lcm_with(Monomial::var(1, 3));
  CHECK(l.e[0] == 2);
  CHECK(l.e[1] == 3);
  CHECK(l.deg == 5);
  CHECK(Monomial::var(0).coprime_with(Monomial::var(1)));
  CHECK_FALSE(a.coprime_with(b));
  CHECK_THROWS_AS(Monomial::var(0, 200).times(Monomial::var(0, 100)),
                  DimensionMismatch);
}

TEST_CASE("polynomial hash distinguishes canonical forms") {
  auto ctx = xy_ctx(7);
  auto f = parse_poly(ctx, "x1^2 + x2");
  auto g = parse_poly(ctx, "x2 + x1^2");
  auto h = parse_poly(ctx, "x1^2 + 2*x2");
  CHECK(f.fnv_hash() == g.fnv_hash());
  CHECK(f.fnv_hash() != h.fnv_hash());
}
