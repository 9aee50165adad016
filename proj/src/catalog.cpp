#include "nsep/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <utility>

namespace nsep {
namespace {

Matrix m1(std::uint32_t a) { return Matrix(1, {a}); }
Matrix m2(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
  return Matrix(2, {a, b, c, d});
}
Matrix diag2(std::uint32_t a, std::uint32_t b) { return m2(a, 0, 0, b); }
Matrix swap2() { return m2(0, 1, 1, 0); }

void require_roots(const PrimeField& F, const std::vector<std::uint64_t>& orders,
                   const std::string& id) {
  for (auto n : orders)
    if ((F.modulus() - 1) % n != 0)
      throw RootUnavailable(id + " needs an element of multiplicative order " +
                            std::to_string(n) + ", unavailable in F_" +
                            std::to_string(F.modulus()));
}

std::string big_block_name(int k) {
  static const char* names[] = {"x", "y", "z", "w", "u", "v"};
  return k < 6 ? names[k] : "b" + std::to_string(k + 1);
}

Polynomial pv(const Ctx& c, int index, int power = 1) {
  return Polynomial::variable(c, index, power);
}

Group make_group(const PrimeField& F, const std::vector<std::string>& gen_names,
                 const std::vector<Matrix>& defining, std::size_t order,
                 const std::string& id) {
  std::vector<std::pair<std::string, Matrix>> gens;
  for (std::size_t k = 0; k < gen_names.size(); ++k)
    gens.emplace_back(gen_names[k], defining[k]);
  Group g = MatrixRep::generate(F, std::move(gens));
  if (g->order() != order)
    throw Error("catalogue entry " + id + " generated a group of order " +
                std::to_string(g->order()) + ", expected " + std::to_string(order));
  return g;
}

ModuleBlock line_block(std::string name, const Group& g, const Character& chi) {
  std::vector<Matrix> imgs;
  for (std::size_t k = 0; k < g->generators().size(); ++k)
    imgs.push_back(m1(chi.on(g->generator_element(int(k)))));
  return ModuleBlock{std::move(name), std::move(imgs), chi};
}

// Big blocks first (named x, y, ...), then every character as a line
// (engine character order, trivial first); one single-block module each.
void attach_irreducibles(BuiltEntry& e, std::vector<std::vector<Matrix>> big_images) {
  for (std::size_t k = 0; k < big_images.size(); ++k)
    e.irreducibles.push_back(
        ModuleBlock{big_block_name(int(k)), std::move(big_images[k]), std::nullopt});
  int t = 1;
  for (const auto& chi : characters(e.group))
    e.irreducibles.push_back(line_block("t" + std::to_string(t++), e.group, chi));
  for (const auto& b : e.irreducibles)
    e.modules.emplace_back(e.group, std::vector<ModuleBlock>{b});
}

// ------------------------------------------------------------ fixed entries

BuiltEntry build_abelian(const PrimeField& F, const std::string& id,
                         const std::vector<std::uint64_t>& cyclic_orders) {
  static const char* gen_names[] = {"a", "b", "c", "d"};
  int k = int(cyclic_orders.size());
  std::size_t order = 1;
  std::vector<Matrix> defining;
  std::vector<std::string> names;
  for (int j = 0; j < k; ++j) {
    order *= cyclic_orders[j];
    Matrix m = Matrix::identity(k);
    m.at(j, j) = element_of_order_value(F, cyclic_orders[j]);
    defining.push_back(std::move(m));
    names.push_back(gen_names[j]);
  }
  BuiltEntry e;
  e.group = make_group(F, names, defining, order, id);
  attach_irreducibles(e, {});
  for (auto n : cyclic_orders) e.abelian_cyclic_orders.push_back(int(n));
  return e;
}

BuiltEntry build_c2(const PrimeField& F) {
  BuiltEntry e = build_abelian(F, "c2", {2});
  // points 1 and 0 lie in distinct orbits of the sign line and agree on the
  // degree-irrelevant invariants below t^2
  ModuleSpec sign(e.group, {e.irreducibles[1]});
  Polynomial hint = parse_poly(sign.context(), "t2^2");
  e.witnesses.push_back(WitnessPair{sign, {1}, {0}, 2, hint});
  return e;
}

BuiltEntry build_a4(const PrimeField& F) {
  std::uint32_t n1 = F.neg(1);
  // even permutations (12)(34) and (123) on coordinates
  Matrix s4(4, {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
  Matrix t4(4, {0, 0, 1, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1});
  // the same permutations on the sum-zero subspace, basis e_i - e_4
  Matrix s3(3, {0, 1, 0, 1, 0, 0, n1, n1, n1});
  Matrix t3(3, {0, 0, 1, 1, 0, 0, 0, 1, 0});

  BuiltEntry e;
  e.group = make_group(F, {"s", "t"}, {s4, t4}, 12, "(12,3)");
  attach_irreducibles(e, {{s3, t3}});

  ModuleSpec perm(e.group, {ModuleBlock{"x", {s4, t4}, std::nullopt}});
  const Ctx& pc = perm.context();
  Polynomial vandermonde = Polynomial::constant(pc, 1);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) vandermonde = vandermonde * (pv(pc, i) - pv(pc, j));
  e.witnesses.push_back(WitnessPair{perm, {0, 1, 2, 3}, {1, 0, 2, 3}, 6, vandermonde});
  return e;
}

BuiltEntry build_16_3(const PrimeField& F) {
  std::uint32_t i = element_of_order_value(F, 4), n1 = F.neg(1);
  Matrix wa = swap2(), wb = m2(0, n1, n1, 0), wc = diag2(1, n1);
  // the twist by the character (1,1,i) gives the second two-dimensional block
  Matrix wc2 = diag2(i, F.neg(i));

  BuiltEntry e;
  e.group = make_group(F, {"a", "b", "c"},
                       {block_diagonal({wa, wa}), block_diagonal({wb, wb}),
                        block_diagonal({wc, wc2})},
                       16, "(16,3)");
  attach_irreducibles(e, {{wa, wb, wc}, {wa, wb, wc2}});

  ModuleSpec wm(e.group,
                {ModuleBlock{"x", {wa, wb, wc}, std::nullopt},
                 line_block("t1", e.group,
                            character_from_generator_values(e.group, {1, 1, i})),
                 line_block("t2", e.group,
                            character_from_generator_values(e.group, {n1, n1, i}))});
  const Ctx& cx = wm.context();
  Polynomial hint = (pv(cx, 0, 2) - pv(cx, 1, 2)) * pv(cx, 2, 3) * pv(cx, 3);
  e.witnesses.push_back(WitnessPair{wm, {1, 0, 1, 1}, {1, 0, 1, n1}, 6, hint});
  return e;
}

BuiltEntry build_16_4(const PrimeField& F) {
  std::uint32_t i = element_of_order_value(F, 4), n1 = F.neg(1);
  std::uint32_t nu = element_of_order_value(F, 8);
  Matrix a2 = diag2(i, F.neg(i));
  Matrix b1 = swap2(), b2 = m2(0, n1, 1, 0);

  BuiltEntry e;
  e.group = make_group(F, {"a", "b"},
                       {block_diagonal({a2, a2}), block_diagonal({b1, b2})}, 16,
                       "(16,4)");
  attach_irreducibles(e, {{a2, b1}, {a2, b2}});

  // the second plane factors through the quaternion group, where the pair
  // [nu,1] / [nu,-1] first separates in degree 6
  ModuleSpec wm(e.group, {ModuleBlock{"y", {a2, b2}, std::nullopt}});
  const Ctx& cx = wm.context();
  Polynomial hint = pv(cx, 0) * pv(cx, 1) * (pv(cx, 0, 4) - pv(cx, 1, 4));
  e.witnesses.push_back(WitnessPair{wm, {nu, 1}, {nu, n1}, 6, hint});

  e.automorphisms = {{"a->a, b->ab", {{0}, {0, 1}}},
                     {"a->a, b->b^3", {{0}, {1, 1, 1}}},
                     {"a->ab^2, b->b", {{0, 1, 1}, {1}}}};

  e.fixture_module = ModuleSpec(e.group, {ModuleBlock{"x", {a2, b1}, std::nullopt},
                                          ModuleBlock{"y", {a2, b2}, std::nullopt}});
  const Ctx& fc = e.fixture_module->context();
  std::string si = std::to_string(i), sni = std::to_string(F.neg(i));
  e.fixtures = {
      {"r_(-1,1)", {n1, 1}, parse_poly(fc, "x1^2+x2^2")},
      {"r_(-1,-1)", {n1, n1}, parse_poly(fc, "x1^2-x2^2")},
      {"r_(1,-1)", {1, n1}, parse_poly(fc, "x1^4-x2^4")},
      {"s_(1,-1)", {1, n1}, parse_poly(fc, "y1*y2")},
      {"s_(-1,1)", {n1, 1}, parse_poly(fc, "y1^2+y2^2")},
      {"s_(-1,-1)", {n1, n1}, parse_poly(fc, "y1^2-y2^2")},
      {"r1_(1,i)", {1, i}, parse_poly(fc, "x1*y2+" + si + "*x2*y1")},
      {"r2_(1,i)", {1, i}, parse_poly(fc, "x1*y1^3+" + sni + "*x2*y2^3")},
      {"r_(1,-i)", {1, F.neg(i)}, parse_poly(fc, "x1*y2+" + sni + "*x2*y1")},
  };
  return e;
}

BuiltEntry build_16_12(const PrimeField& F) {
  std::uint32_t i = element_of_order_value(F, 4), n1 = F.neg(1);
  std::uint32_t nu = element_of_order_value(F, 8);
  Matrix qa = diag2(i, F.neg(i)), qb = m2(0, n1, 1, 0);
  Matrix c1 = Matrix::identity(2), c2 = diag2(n1, n1);

  BuiltEntry e;
  e.group = make_group(F, {"a", "b", "c"},
                       {block_diagonal({qa, qa}), block_diagonal({qb, qb}),
                        block_diagonal({c1, c2})},
                       16, "(16,12)");
  attach_irreducibles(e, {{qa, qb, c1}, {qa, qb, c2}});

  ModuleSpec wm(e.group, {ModuleBlock{"x", {qa, qb, c1}, std::nullopt}});
  const Ctx& cx = wm.context();
  Polynomial hint = pv(cx, 0) * pv(cx, 1) * (pv(cx, 0, 4) - pv(cx, 1, 4));
  e.witnesses.push_back(WitnessPair{wm, {nu, 1}, {nu, n1}, 6, hint});

  // order-3 outer symmetry cycling the three sign characters of the
  // quaternion factor
  e.automorphisms = {{"a->b, b->ab, c->c", {{1}, {0, 1}, {2}}}};

  e.fixture_module = ModuleSpec(e.group, {ModuleBlock{"x", {qa, qb, c1}, std::nullopt},
                                          ModuleBlock{"y", {qa, qb, c2}, std::nullopt}});
  const Ctx& fc = e.fixture_module->context();
  e.fixtures = {
      {"s_(1,-1,1)", {1, n1, 1}, parse_poly(fc, "x1*x2")},
      {"s_(-1,1,1)", {n1, 1, 1}, parse_poly(fc, "x1^2+x2^2")},
      {"s_(-1,-1,1)", {n1, n1, 1}, parse_poly(fc, "x1^2-x2^2")},
      {"u1_(-1,1,-1)", {n1, 1, n1}, parse_poly(fc, "x1*y1+x2*y2")},
      {"u2_(-1,1,-1)",
       {n1, 1, n1},
       pv(fc, 0) * pv(fc, 1) * parse_poly(fc, "x1*y1-x2*y2")},
      {"u3_(-1,1,-1)", {n1, 1, n1}, parse_poly(fc, "x2^3*y1-x1^3*y2")},
      {"v1_(1,1,-1)", {1, 1, n1}, parse_poly(fc, "x1*y2-x2*y1")},
      {"v2_(1,1,-1)",
       {1, 1, n1},
       pv(fc, 0) * pv(fc, 1) * parse_poly(fc, "x1*y2+x2*y1")},
      {"v3_(1,1,-1)", {1, 1, n1}, parse_poly(fc, "x2^3*y2+x1^3*y1")},
  };
  return e;
}

BuiltEntry build_16_13(const PrimeField& F) {
  std::uint32_t i = element_of_order_value(F, 4), n1 = F.neg(1);
  Matrix px = swap2(), py = m2(0, F.neg(i), i, 0), pz = diag2(1, n1);
  Matrix ny = m2(0, i, F.neg(i), 0);  // twist by the character (1,-1,1)

  BuiltEntry e;
  e.group = make_group(F, {"X", "Y", "Z"},
                       {block_diagonal({px, px}), block_diagonal({py, ny}),
                        block_diagonal({pz, pz})},
                       16, "(16,13)");
  attach_irreducibles(e, {{px, py, pz}, {px, ny, pz}});

  ModuleSpec wm(e.group,
                {ModuleBlock{"x", {px, py, pz}, std::nullopt},
                 line_block("t", e.group,
                            character_from_generator_values(e.group, {n1, n1, n1}))});
  const Ctx& cx = wm.context();
  Polynomial hint = (pv(cx, 0, 4) - pv(cx, 1, 4)) * pv(cx, 0) * pv(cx, 1) * pv(cx, 2);
  e.witnesses.push_back(WitnessPair{wm, {1, 2, 1}, {1, 2, n1}, 7, hint});
  return e;
}

BuiltEntry build_dic(const PrimeField& F, int m) {
  std::uint32_t rho = element_of_order_value(F, 2 * std::uint64_t(m));
  std::uint32_t i = element_of_order_value(F, 4), n1 = F.neg(1);
  auto plane = [&](int j) {
    std::uint32_t rj = F.pow(rho, j);
    Matrix bj = (j % 2 == 1) ? m2(0, i, i, 0) : swap2();
    return std::vector<Matrix>{diag2(rj, F.inv(rj)), bj};
  };

  BuiltEntry e;
  e.group = make_group(F, {"a", "b"}, plane(1), 4 * std::size_t(m),
                       "dic:" + std::to_string(4 * m));
  std::vector<std::vector<Matrix>> bigs;
  for (int j = 1; j < m; ++j) bigs.push_back(plane(j));
  attach_irreducibles(e, std::move(bigs));

  ModuleSpec wm(e.group, {e.irreducibles[0]});
  const Ctx& cx = wm.context();
  Polynomial tail = (m % 2 == 1) ? pv(cx, 0, 2 * m) + pv(cx, 1, 2 * m)
                                 : pv(cx, 0, 2 * m) - pv(cx, 1, 2 * m);
  Polynomial hint = pv(cx, 0) * pv(cx, 1) * tail;
  std::uint32_t first = (m % 2 == 1) ? 1 : element_of_order_value(F, 4 * std::uint64_t(m));
  e.witnesses.push_back(WitnessPair{wm, {first, 1}, {first, n1}, 2 * m + 2, hint});
  return e;
}

BuiltEntry build_d2nxc2(const PrimeField& F, int two_n) {
  int n = two_n / 2;
  std::uint32_t rho = element_of_order_value(F, std::uint64_t(n)), n1 = F.neg(1);
  auto plane = [&](int j, std::uint32_t cv) {
    std::uint32_t rj = F.pow(rho, j);
    return std::vector<Matrix>{diag2(rj, F.inv(rj)), swap2(), diag2(cv, cv)};
  };

  BuiltEntry e;
  std::string id = "d2nxc2:" + std::to_string(two_n);
  e.group = make_group(F, {"a", "b", "c"},
                       {Matrix(3, {rho, 0, 0, 0, F.inv(rho), 0, 0, 0, 1}),
                        Matrix(3, {0, 1, 0, 1, 0, 0, 0, 0, 1}),
                        Matrix(3, {1, 0, 0, 0, 1, 0, 0, 0, n1})},
                       4 * std::size_t(n), id);
  std::vector<std::vector<Matrix>> bigs;
  for (int j = 1; j < n / 2; ++j) {
    bigs.push_back(plane(j, 1));
    bigs.push_back(plane(j, n1));
  }
  attach_irreducibles(e, std::move(bigs));

  ModuleSpec wm(e.group,
                {ModuleBlock{"x", plane(1, 1), std::nullopt},
                 line_block("t1", e.group,
                            character_from_generator_values(e.group, {1, n1, n1})),
                 line_block("t2", e.group,
                            character_from_generator_values(e.group, {1, 1, n1}))});
  const Ctx& cx = wm.context();
  Polynomial hint = (pv(cx, 0, n) - pv(cx, 1, n)) * pv(cx, 2) * pv(cx, 3);
  e.witnesses.push_back(WitnessPair{wm, {1, 0, 1, 1}, {1, 0, 1, n1}, n + 2, hint});
  return e;
}

int index2_k(Index2Kind kind, int half) {  // exponent on the second eigenvalue
  switch (kind) {
    case Index2Kind::kModular: return half / 2 + 1;
    case Index2Kind::kDihedral: return half - 1;
    case Index2Kind::kSemidihedral: return half / 2 - 1;
    case Index2Kind::kSplitAbelian: return 1;
  }
  throw BadParameter("unknown kind");
}

}  // namespace

BuiltEntry index2_three_dim(const PrimeField& F, Index2Kind kind, int two_power,
                            int r, int s) {
  if (two_power < 4 || (two_power & (two_power - 1)) != 0)
    throw BadParameter("order must be a power of two, at least 4");
  if (kind != Index2Kind::kSplitAbelian && two_power < 16)
    throw BadParameter("modular, dihedral and semidihedral entries start at order 16");
  if (r < 1 || s < 1 || r % 2 == 0 || s % 2 == 0)
    throw BadParameter("the cyclic extension orders must be odd");
  if (std::gcd(r, s) != 1)
    throw BadParameter("the cyclic extension orders must be coprime");

  int half = two_power / 2, k = index2_k(kind, half);
  static const char* base_names[] = {"M", "D", "SD", "C"};
  std::string base = kind == Index2Kind::kSplitAbelian
                         ? "C" + std::to_string(half) + "xC2"
                         : std::string(base_names[int(kind)]) + std::to_string(two_power);
  std::string id, name;
  switch (kind) {
    case Index2Kind::kModular: id = "m2n:"; break;
    case Index2Kind::kDihedral: id = "d2n:"; break;
    case Index2Kind::kSemidihedral: id = "sd2n:"; break;
    case Index2Kind::kSplitAbelian: id = "c2nxc2:"; break;
  }
  id += std::to_string(two_power);
  name = base;
  if (r > 1 || s > 1) {
    id += ",r" + std::to_string(r) + ",s" + std::to_string(s);
    name = "C" + std::to_string(s) + " x (C" + std::to_string(r) + " x| " + base + ")";
  }

  require_roots(F, {std::uint64_t(half), std::uint64_t(r), std::uint64_t(s)}, id);
  std::uint32_t xi = element_of_order_value(F, half), n1 = F.neg(1);
  std::uint32_t xk = F.pow(xi, k);

  std::vector<std::string> gen_names = {"a", "b"};
  std::vector<Matrix> defining = {Matrix(3, {xi, 0, 0, 0, xk, 0, 0, 0, 1}),
                                  Matrix(3, {0, 1, 0, 1, 0, 0, 0, 0, n1})};
  std::vector<std::vector<Matrix>> wgen = {{diag2(xi, xk), swap2()}};
  std::vector<std::uint32_t> tchar = {1, n1};
  if (r > 1) {
    std::uint32_t rho = element_of_order_value(F, r);
    gen_names.push_back("r");
    defining.push_back(Matrix(3, {rho, 0, 0, 0, F.inv(rho), 0, 0, 0, 1}));
    wgen[0].push_back(diag2(rho, F.inv(rho)));
    tchar.push_back(1);
  }
  if (s > 1) {
    std::uint32_t eps = element_of_order_value(F, s);
    gen_names.push_back("e");
    defining.push_back(Matrix(3, {eps, 0, 0, 0, eps, 0, 0, 0, 1}));
    wgen[0].push_back(diag2(eps, eps));
    tchar.push_back(1);
  }

  int m = s * r * half;
  BuiltEntry e;
  e.id = id;
  e.name = name;
  e.expected = {m + 1, m + 1, "index-2 cyclic family: |G|/2 + 1"};
  e.group = make_group(F, gen_names, defining, std::size_t(2) * m, id);
  if (kind == Index2Kind::kSplitAbelian && r == 1 && s == 1)
    e.abelian_cyclic_orders = {half, 2};

  if (r == 1 && s == 1) {
    // two-dimensional summands: eigenvalue pairs {xi^j, xi^(j*k)}, one per
    // orbit of j -> j*k on the exponents with xi^j != xi^(j*k)
    std::vector<std::vector<Matrix>> bigs;
    for (int j = 1; j < half; ++j) {
      int jk = (j * k) % half;
      if (jk == j || jk < j) continue;
      bigs.push_back({diag2(F.pow(xi, j), F.pow(xi, jk)), swap2()});
    }
    attach_irreducibles(e, std::move(bigs));
  }

  ModuleSpec wm(e.group,
                {ModuleBlock{"x", wgen[0], std::nullopt},
                 line_block("t", e.group, character_from_generator_values(e.group, tchar))});
  const Ctx& cx = wm.context();
  Polynomial hint = (pv(cx, 0, m) - pv(cx, 1, m)) * pv(cx, 2);
  e.witnesses.push_back(WitnessPair{wm, {1, 0, 1}, {1, 0, n1}, m + 1, hint});
  return e;
}

Character character_from_generator_values(const Group& g,
                                          const std::vector<std::uint32_t>& gen_values) {
  std::vector<Matrix> imgs;
  imgs.reserve(gen_values.size());
  for (auto v : gen_values) imgs.push_back(m1(v));
  Character chi;
  for (const auto& m : element_images(g, imgs)) chi.values.push_back(m.at(0, 0));
  return chi;
}

// ----------------------------------------------------------------- catalogue

namespace {

const char* kAbelianSource = "abelian: Davenport constant and radical sweep";
const char* kWitnessSource = "witness pair and radical sweep";
const char* kDicSource = "dicyclic family: |G|/2 + 2";
const char* kIndex2Source = "index-2 cyclic family: |G|/2 + 1";
const char* kDihedralC2Source = "dihedral x C2 family: n + 2";

CatalogEntry dic_entry(int order4m) {
  int m = order4m / 4;
  return {"dic:" + std::to_string(order4m),
          "Dic" + std::to_string(order4m) + (m == 2 ? " (quaternion Q8)" : ""),
          std::size_t(order4m),
          false,
          2,
          {std::uint64_t(order4m)},
          {2 * m + 2, 2 * m + 2, kDicSource},
          [m](const PrimeField& F) { return build_dic(F, m); }};
}

CatalogEntry d2nxc2_entry(int two_n) {
  int n = two_n / 2;
  return {"d2nxc2:" + std::to_string(two_n),
          "D" + std::to_string(two_n) + " x C2",
          std::size_t(4) * n,
          false,
          2,
          {std::uint64_t(n)},
          {n + 2, n + 2, kDihedralC2Source},
          [two_n](const PrimeField& F) { return build_d2nxc2(F, two_n); }};
}

CatalogEntry index2_entry(std::string id, std::string name, Index2Kind kind,
                          int two_power) {
  int m = two_power / 2;
  return {std::move(id),
          std::move(name),
          std::size_t(two_power),
          kind == Index2Kind::kSplitAbelian,
          kind == Index2Kind::kSplitAbelian ? 1 : 2,
          {std::uint64_t(two_power) / 2},
          {m + 1, m + 1, kIndex2Source},
          [kind, two_power](const PrimeField& F) {
            return index2_three_dim(F, kind, two_power);
          }};
}

CatalogEntry abelian_entry(std::string id, std::string name,
                           std::vector<std::uint64_t> orders, int beta, int beta_sep) {
  std::size_t order = 1;
  std::uint64_t expnt = 1;
  for (auto n : orders) {
    order *= n;
    expnt = std::lcm(expnt, n);
  }
  CatalogEntry e;
  e.id = id;
  e.name = std::move(name);
  e.order = order;
  e.abelian = true;
  e.max_block_dim = 1;
  e.root_orders = {expnt};
  e.expected = {beta, beta_sep, kAbelianSource};
  e.builder = [id, orders](const PrimeField& F) { return build_abelian(F, id, orders); };
  return e;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v;
    v.push_back({"c2",
                 "C2",
                 2,
                 true,
                 1,
                 {2},
                 {2, 2, "cyclic group: both bounds equal |G|"},
                 [](const PrimeField& F) { return build_c2(F); }});
    v.push_back(abelian_entry("(8,5)", "C2 x C2 x C2", {2, 2, 2}, 4, 4));
    v.push_back(dic_entry(8));
    v.push_back(abelian_entry("(9,2)", "C3 x C3", {3, 3}, 5, 4));
    v.push_back(dic_entry(12));
    v.push_back({"(12,3)",
                 "A4",
                 12,
                 false,
                 3,
                 {3},
                 {6, 6, kWitnessSource},
                 [](const PrimeField& F) { return build_a4(F); }});
    v.push_back(abelian_entry("(16,2)", "C4 x C4", {4, 4}, 7, 6));
    v.push_back({"(16,3)",
                 "(C2 x C2) : C4",
                 16,
                 false,
                 2,
                 {4},
                 {6, 6, kWitnessSource},
                 [](const PrimeField& F) { return build_16_3(F); }});
    v.push_back({"(16,4)",
                 "C4 : C4",
                 16,
                 false,
                 2,
                 {8},
                 {7, 6, kWitnessSource},
                 [](const PrimeField& F) { return build_16_4(F); }});
    v.push_back(index2_entry("m16", "M16", Index2Kind::kModular, 16));
    v.push_back(index2_entry("d16", "D16", Index2Kind::kDihedral, 16));
    v.push_back(index2_entry("sd16", "SD16", Index2Kind::kSemidihedral, 16));
    v.push_back(dic_entry(16));
    v.push_back(abelian_entry("(16,10)", "C2 x C2 x C4", {2, 2, 4}, 6, 6));
    v.push_back(d2nxc2_entry(8));
    v.push_back({"(16,12)",
                 "Dic8 x C2",
                 16,
                 false,
                 2,
                 {8},
                 {7, 6, kWitnessSource},
                 [](const PrimeField& F) { return build_16_12(F); }});
    v.push_back({"(16,13)",
                 "Pauli group",
                 16,
                 false,
                 2,
                 {4},
                 {7, 7, kWitnessSource},
                 [](const PrimeField& F) { return build_16_13(F); }});
    v.push_back(abelian_entry("(16,14)", "C2 x C2 x C2 x C2", {2, 2, 2, 2}, 5, 5));
    v.push_back(d2nxc2_entry(12));
    return v;
  }();
  return entries;
}

const std::vector<FamilyInfo>& catalog_families() {
  static const std::vector<FamilyInfo> families = {
      {"dic", "group order 4m, m >= 2 (dic:8, dic:12, dic:16, ...)",
       "dicyclic groups Dic_4m; dic:8 is the quaternion group", "order/2 + 2"},
      {"d2nxc2", "dihedral order 2n, n even (d2nxc2:8 is D8 x C2)",
       "direct products D_2n x C2 of order 4n", "n + 2"},
      {"m2n", "group order 2^n >= 16", "modular 2-groups M_2^n", "order/2 + 1"},
      {"d2n", "group order 2^n >= 16", "dihedral 2-groups D_2^n", "order/2 + 1"},
      {"sd2n", "group order 2^n >= 32 (sd2n:16 = sd16)", "semidihedral 2-groups SD_2^n",
       "order/2 + 1"},
      {"c2nxc2", "group order 2^n >= 4", "split abelian C_2^(n-1) x C2", "order/2 + 1"},
  };
  return families;
}

namespace {

std::string normalize_id(const std::string& id) {
  std::string out;
  for (char c : id)
    if (!std::isspace(static_cast<unsigned char>(c)))
      out.push_back(char(std::tolower(static_cast<unsigned char>(c))));
  static const std::vector<std::pair<const char*, const char*>> aliases = {
      {"(2,1)", "c2"},        {"(8,4)", "dic:8"},    {"q8", "dic:8"},
      {"(12,1)", "dic:12"},   {"(16,9)", "dic:16"},  {"q16", "dic:16"},
      {"(16,6)", "m16"},      {"m2n:16", "m16"},     {"(16,7)", "d16"},
      {"d2n:16", "d16"},      {"(16,8)", "sd16"},    {"sd2n:16", "sd16"},
      {"(16,11)", "d2nxc2:8"}, {"pauli", "(16,13)"}, {"a4", "(12,3)"},
  };
  for (const auto& [from, to] : aliases)
    if (out == from) return to;
  return out;
}

int parse_family_param(const std::string& id, const std::string& prefix) {
  std::string tail = id.substr(prefix.size());
  if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
    throw BadParameter(id + ": expected a positive integer after '" + prefix + "'");
  return std::stoi(tail);
}

}  // namespace

CatalogEntry catalog_lookup(const std::string& id) {
  std::string key = normalize_id(id);
  for (const auto& e : catalog_entries())
    if (e.id == key) return e;
  auto starts = [&](const char* p) { return key.rfind(p, 0) == 0; };
  if (starts("dic:")) {
    int n = parse_family_param(key, "dic:");
    if (n < 8 || n % 4 != 0)
      throw BadParameter("dic: order must be a multiple of 4, at least 8");
    return dic_entry(n);
  }
  if (starts("d2nxc2:")) {
    int two_n = parse_family_param(key, "d2nxc2:");
    if (two_n < 4 || two_n % 4 != 0)
      throw BadParameter(
          "d2nxc2: the dihedral order must be twice an even number (4, 8, 12, ...)");
    return d2nxc2_entry(two_n);
  }
  for (auto [prefix, kind] : std::initializer_list<std::pair<const char*, Index2Kind>>{
           {"m2n:", Index2Kind::kModular},
           {"d2n:", Index2Kind::kDihedral},
           {"sd2n:", Index2Kind::kSemidihedral},
           {"c2nxc2:", Index2Kind::kSplitAbelian}}) {
    if (!starts(prefix)) continue;
    int n = parse_family_param(key, prefix);
    if (n < 4 || (n & (n - 1)) != 0 ||
        (kind != Index2Kind::kSplitAbelian && n < 16))
      throw BadParameter(std::string(prefix) +
                         " order must be a power of two (non-abelian kinds start at 16)");
    std::string base = kind == Index2Kind::kSplitAbelian
                           ? "C" + std::to_string(n / 2) + "xC2"
                           : std::string(kind == Index2Kind::kModular     ? "M"
                                         : kind == Index2Kind::kDihedral ? "D"
                                                                         : "SD") +
                                 std::to_string(n);
    CatalogEntry e = index2_entry(std::string(prefix) + std::to_string(n), base, kind, n);
    return e;
  }
  throw UnknownGroup(id);
}

BuiltEntry build(const std::string& id, const PrimeField& field) {
  CatalogEntry entry = catalog_lookup(id);
  require_roots(field, entry.root_orders, entry.id);
  BuiltEntry e = entry.builder(field);
  e.id = entry.id;
  e.name = entry.name;
  e.expected = entry.expected;
  if (e.group->order() != entry.order)
    throw Error("catalogue entry " + entry.id + " built the wrong group order");
  return e;
}

PrimeField auto_prime(const CatalogEntry& entry) {
  return choose_prime(entry.order, std::uint64_t(entry.max_block_dim - 1) * entry.order);
}

std::vector<ExpectedRow> expected_table() {
  std::vector<ExpectedRow> rows;
  for (const auto& e : catalog_entries())
    rows.push_back({e.id, e.name, e.expected.beta.value_or(0),
                    e.expected.beta_sep.value_or(0), e.expected.source});
  return rows;
}

ModuleSpec assemble_module(const BuiltEntry& e, const std::string& selector) {
  std::vector<const ModuleBlock*> bigs, lines;
  for (const auto& b : e.irreducibles)
    (b.dim() >= 2 ? bigs : lines).push_back(&b);

  std::vector<const ModuleBlock*> chosen;
  std::string token;
  auto take = [&](const std::string& t) {
    if (t == "all") {
      for (const auto& b : e.irreducibles) chosen.push_back(&b);
      return;
    }
    if (t == "sign") {
      if (lines.size() != 2 || !bigs.empty())
        throw BadParameter("'sign' is only defined for the two-element group");
      chosen.push_back(lines[1]);
      return;
    }
    bool big = t.size() > 1 && (t[0] == 'w' || t[0] == 'W');
    bool line = t.size() > 1 && (t[0] == 'u' || t[0] == 'U');
    if (!big && !line) throw BadParameter("unknown module selector component '" + t + "'");
    std::size_t k = 0;
    try {
      k = std::stoul(t.substr(1));
    } catch (...) {
      throw BadParameter("unknown module selector component '" + t + "'");
    }
    const auto& list = big ? bigs : lines;
    if (k < 1 || k > list.size())
      throw BadParameter("selector '" + t + "' is out of range for " + e.id);
    chosen.push_back(list[k - 1]);
  };
  for (char c : selector) {
    if (c == '+') {
      take(token);
      token.clear();
    } else {
      token.push_back(char(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  take(token);

  std::sort(chosen.begin(), chosen.end());
  if (std::adjacent_find(chosen.begin(), chosen.end()) != chosen.end())
    throw BadParameter("module selector repeats a summand");
  // restore catalogue order: big blocks first, then lines
  std::sort(chosen.begin(), chosen.end(), [&](const ModuleBlock* a, const ModuleBlock* b) {
    auto pos = [&](const ModuleBlock* m) {
      return std::find_if(e.irreducibles.begin(), e.irreducibles.end(),
                          [&](const ModuleBlock& x) { return &x == m; }) -
             e.irreducibles.begin();
    };
    return pos(a) < pos(b);
  });

  std::vector<ModuleBlock> blocks;
  int nb = 0, nl = 0;
  for (const ModuleBlock* b : chosen) {
    ModuleBlock copy = *b;
    copy.name = copy.dim() >= 2 ? big_block_name(nb++) : "t" + std::to_string(++nl);
    blocks.push_back(std::move(copy));
  }
  return ModuleSpec(e.group, std::move(blocks));
}

}  // namespace nsep
