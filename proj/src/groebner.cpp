#include "nsep/groebner.hpp"

#include <algorithm>

namespace nsep {
namespace {

// Terms sorted descending in the ACTIVE order (not the canonical one), so
// the leading term is always the front.  All division arithmetic happens in
// this form and converts back to Polynomial at the boundary.
struct OPoly {
  std::vector<Term> t;
  bool zero() const noexcept { return t.empty(); }
};

OPoly to_opoly(const Polynomial& p, const TermOrder& ord) {
  OPoly r{p.terms()};
  std::sort(r.t.begin(), r.t.end(), [&ord](const Term& a, const Term& b) {
    return ord.compare(a.first, b.first) > 0;
  });
  return r;
}

Polynomial to_poly(const Ctx& ctx, OPoly p) {
  std::sort(p.t.begin(), p.t.end(), [](const Term& a, const Term& b) {
    return canonical_compare(a.first, b.first) > 0;
  });
  return poly_from_sorted(ctx, std::move(p.t));
}

void make_monic(OPoly& p, const PrimeField& F) {
  if (p.zero() || p.t[0].second == 1) return;
  std::uint32_t inv = F.inv(p.t[0].second);
  for (auto& t : p.t) t.second = F.mul(t.second, inv);
}

// a[from..] − c · x^m · b, both inputs descending in ord.
OPoly sub_mul(const OPoly& a, std::size_t from, std::uint32_t c, const Monomial& m,
              const OPoly& b, const PrimeField& F, const TermOrder& ord) {
  OPoly r;
  r.t.reserve(a.t.size() - from + b.t.size());
  std::size_t i = from, j = 0;
  while (i < a.t.size() && j < b.t.size()) {
    Monomial bm = b.t[j].first.times(m);
    int cmp = ord.compare(a.t[i].first, bm);
    if (cmp > 0) {
      r.t.push_back(a.t[i++]);
    } else if (cmp < 0) {
      r.t.push_back({bm, F.neg(F.mul(c, b.t[j].second))});
      ++j;
    } else {
      std::uint32_t v = F.sub(a.t[i].second, F.mul(c, b.t[j].second));
      if (v) r.t.push_back({a.t[i].first, v});
      ++i, ++j;
    }
  }
  for (; i < a.t.size(); ++i) r.t.push_back(a.t[i]);
  for (; j < b.t.size(); ++j)
    r.t.push_back({b.t[j].first.times(m), F.neg(F.mul(c, b.t[j].second))});
  return r;
}

constexpr std::size_t kNoSkip = std::size_t(-1);

// Two threshold bits per variable (exponent >= 1, >= 3): a divisor's mask is
// always a subset of the multiple's, so one AND rejects most non-divisors
// before the exact exponent comparison.
std::uint64_t divmask(const Monomial& m) {
  std::uint64_t r = 0;
  for (int v = 0; v < kMaxVars; ++v) {
    if (!m.e[v]) continue;
    r |= std::uint64_t(m.e[v] >= 3 ? 3u : 1u) << (2 * v);
  }
  return r;
}

// Full normal form against monic divisors G (skipping index `skip`);
// `lmask` holds the divmask of each leading monomial.
OPoly reduce_full(OPoly p, const std::vector<OPoly>& G, const std::vector<Monomial>& lm,
                  const std::vector<std::uint64_t>& lmask, const PrimeField& F,
                  const TermOrder& ord, std::size_t skip = kNoSkip) {
  OPoly rem;
  std::size_t head = 0;
  while (head < p.t.size()) {
    const Term lt = p.t[head];
    const std::uint64_t outside = ~divmask(lt.first);
    bool hit = false;
    for (std::size_t k = 0; k < G.size(); ++k) {
      if (k == skip || (lmask[k] & outside) || !lm[k].divides(lt.first)) continue;
      p = sub_mul(p, head, lt.second, lm[k].quotient_of(lt.first), G[k], F, ord);
      head = 0;
      hit = true;
      break;
    }
    if (!hit) {
      rem.t.push_back(lt);
      ++head;
    }
  }
  return rem;
}

// S-polynomial of two monic polynomials.
OPoly spoly_o(const OPoly& f, const OPoly& g, const PrimeField& F, const TermOrder& ord) {
  Monomial l = f.t[0].first.lcm_with(g.t[0].first);
  Monomial mf = f.t[0].first.quotient_of(l);
  Monomial mg = g.t[0].first.quotient_of(l);
  OPoly fs;
  fs.t.reserve(f.t.size());
  for (const auto& t : f.t) fs.t.push_back({t.first.times(mf), t.second});
  return sub_mul(fs, 0, 1, mg, g, F, ord);
}

struct Pair {
  std::size_t i, j;  // i < j
  Monomial l;        // lcm of leading monomials, fixed at creation
};

// Core loop.  `gens` must be nonzero polynomials in one context; the first
// `prefix` of them must already be a Groebner basis under `ord` (their
// mutual pairs are skipped — their S-polynomials reduce to zero anyway).
std::vector<Polynomial> buchberger_core(const Ctx& ctx, const TermOrder& ord,
                                        const std::vector<Polynomial>& gens,
                                        std::size_t prefix) {
  const PrimeField& F = ctx->field();
  std::vector<OPoly> G;
  std::vector<Monomial> lm;
  std::vector<std::uint64_t> lmask;
  G.reserve(gens.size());
  for (const auto& p : gens) {
    OPoly o = to_opoly(p, ord);
    make_monic(o, F);
    lm.push_back(o.t[0].first);
    lmask.push_back(divmask(o.t[0].first));
    G.push_back(std::move(o));
  }
  auto unit_basis = [&]() {
    return std::vector<Polynomial>{Polynomial::constant(ctx, 1)};
  };
  for (const auto& m : lm)
    if (m.deg == 0) return unit_basis();

  // normal strategy: smallest lcm degree first, deterministic tie-breaks
  std::vector<Pair> pending;  // kept as a heap with the minimum on top
  auto pair_after = [](const Pair& a, const Pair& b) {
    if (a.l.deg != b.l.deg) return a.l.deg > b.l.deg;
    int c = canonical_compare(a.l, b.l);
    if (c != 0) return c > 0;
    return a.i != b.i ? a.i > b.i : a.j > b.j;
  };

  // Gebauer-Moller update: install the pairs of element t against everything
  // before it, discarding pairs whose S-polynomials provably reduce to zero
  // (product criterion, lcm refinement) and retiring previously pending
  // pairs whose lcm the new leading monomial strictly refines.
  auto update = [&](std::size_t t) {
    const Monomial& mt = lm[t];
    std::vector<Pair> cand;
    cand.reserve(t);
    for (std::size_t i = 0; i < t; ++i) cand.push_back({i, t, lm[i].lcm_with(mt)});

    auto superseded = [&](const Pair& p) {
      return mt.divides(p.l) && !(cand[p.i].l == p.l) && !(cand[p.j].l == p.l);
    };
    auto mid = std::remove_if(pending.begin(), pending.end(), superseded);
    if (mid != pending.end()) pending.erase(mid, pending.end());

    std::vector<char> drop(t, 0);
    std::vector<std::uint64_t> cmask(t);
    for (std::size_t i = 0; i < t; ++i) cmask[i] = divmask(cand[i].l);
    // drop a pair whose lcm another new pair's lcm properly divides
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < t && !drop[i]; ++j)
        if (j != i && (cmask[j] & ~cmask[i]) == 0 && !(cand[j].l == cand[i].l) &&
            cand[j].l.divides(cand[i].l))
          drop[i] = 1;
    // among pairs sharing one lcm keep a single representative, or none at
    // all when some member of the class has coprime leading monomials
    for (std::size_t i = 0; i < t; ++i) {
      if (drop[i]) continue;
      bool coprime = lm[i].coprime_with(mt);
      for (std::size_t j = i + 1; j < t; ++j)
        if (!drop[j] && cand[j].l == cand[i].l) {
          coprime = coprime || lm[j].coprime_with(mt);
          drop[j] = 1;
        }
      if (coprime) drop[i] = 1;
    }

    for (std::size_t i = 0; i < t; ++i)
      if (!drop[i]) pending.push_back(cand[i]);
    std::make_heap(pending.begin(), pending.end(), pair_after);
  };

  for (std::size_t t = 1; t < G.size(); ++t)
    if (t >= prefix) update(t);

  while (!pending.empty()) {
    std::pop_heap(pending.begin(), pending.end(), pair_after);
    Pair pr = pending.back();
    pending.pop_back();

    OPoly r = reduce_full(spoly_o(G[pr.i], G[pr.j], F, ord), G, lm, lmask, F, ord);
    if (r.zero()) continue;
    if (r.t[0].first.deg == 0) return unit_basis();  // 1 ∈ ideal
    make_monic(r, F);
    lm.push_back(r.t[0].first);
    lmask.push_back(divmask(r.t[0].first));
    G.push_back(std::move(r));
    update(G.size() - 1);
  }

  // minimalize: keep only elements whose leading monomial has no divisor
  // among the other kept leading monomials (process ascending, so any
  // divisor has already been kept)
  std::vector<std::size_t> by_lm(G.size());
  for (std::size_t k = 0; k < G.size(); ++k) by_lm[k] = k;
  std::sort(by_lm.begin(), by_lm.end(), [&](std::size_t a, std::size_t b) {
    int c = ord.compare(lm[a], lm[b]);
    return c != 0 ? c < 0 : a < b;
  });
  std::vector<OPoly> kept;
  std::vector<Monomial> kept_lm;
  for (std::size_t idx : by_lm) {
    bool divisible = false;
    for (const auto& m : kept_lm)
      if (m.divides(lm[idx])) {
        divisible = true;
        break;
      }
    if (!divisible) {
      kept.push_back(G[idx]);
      kept_lm.push_back(lm[idx]);
    }
  }

  // interreduce until stable (leading terms are untouched by construction)
  std::vector<std::uint64_t> kept_mask;
  kept_mask.reserve(kept_lm.size());
  for (const auto& m : kept_lm) kept_mask.push_back(divmask(m));
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < kept.size(); ++k) {
      OPoly r = reduce_full(kept[k], kept, kept_lm, kept_mask, F, ord, k);
      if (r.t != kept[k].t) {
        kept[k] = std::move(r);
        changed = true;
      }
    }
  }

  std::vector<std::size_t> out_order(kept.size());
  for (std::size_t k = 0; k < kept.size(); ++k) out_order[k] = k;
  std::sort(out_order.begin(), out_order.end(), [&](std::size_t a, std::size_t b) {
    return ord.compare(kept_lm[a], kept_lm[b]) > 0;
  });
  std::vector<Polynomial> out;
  out.reserve(kept.size());
  for (std::size_t k : out_order) out.push_back(to_poly(ctx, std::move(kept[k])));
  return out;
}

// shared-context validation + zero dropping
std::vector<Polynomial> clean_generators(const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!out.empty()) check_same_ctx(out.front().context(), g.context());
    out.push_back(g);
  }
  return out;
}

}  // namespace

GroebnerBasis buchberger(const IdealBasis& ideal) {
  auto gens = clean_generators(ideal.generators);
  if (gens.empty()) return {{}, ideal.order, true};
  return {buchberger_core(gens.front().context(), ideal.order, gens, 0), ideal.order,
          true};
}

GroebnerBasis buchberger_extend(const GroebnerBasis& base, std::vector<Polynomial> extra) {
  auto extras = clean_generators(extra);
  if (extras.empty()) return base;
  if (base.elements.empty()) return buchberger({std::move(extras), base.order});
  check_same_ctx(base.elements.front().context(), extras.front().context());
  std::vector<Polynomial> gens = base.elements;
  gens.insert(gens.end(), extras.begin(), extras.end());
  return {buchberger_core(gens.front().context(), base.order, gens,
                          base.elements.size()),
          base.order, true};
}

Polynomial spoly(const Polynomial& f, const Polynomial& g, const TermOrder& order) {
  check_same_ctx(f.context(), g.context());
  if (f.is_zero() || g.is_zero())
    throw DimensionMismatch("S-polynomial of a zero polynomial");
  const PrimeField& F = f.context()->field();
  OPoly of = to_opoly(f, order), og = to_opoly(g, order);
  make_monic(of, F);
  make_monic(og, F);
  return to_poly(f.context(), spoly_o(of, og, F, order));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (gb.elements.empty() || f.is_zero()) return f;
  check_same_ctx(f.context(), gb.elements.front().context());
  const PrimeField& F = f.context()->field();
  std::vector<OPoly> G;
  std::vector<Monomial> lm;
  std::vector<std::uint64_t> lmask;
  G.reserve(gb.elements.size());
  for (const auto& g : gb.elements) {
    OPoly o = to_opoly(g, gb.order);
    make_monic(o, F);
    lm.push_back(o.t[0].first);
    lmask.push_back(divmask(o.t[0].first));
    G.push_back(std::move(o));
  }
  return to_poly(f.context(),
                 reduce_full(to_opoly(f, gb.order), G, lm, lmask, F, gb.order));
}

bool ideal_member(const Polynomial& f, const GroebnerBasis& gb) {
  return normal_form(f, gb).is_zero();
}

bool ideal_member(const Polynomial& f, const IdealBasis& ideal) {
  return ideal_member(f, buchberger(ideal));
}

bool is_unit_ideal(const GroebnerBasis& gb) {
  return gb.elements.size() == 1 && gb.elements.front().degree() == 0;
}

namespace {

bool radical_member_impl(const Polynomial& f, const std::vector<Polynomial>& gens,
                         std::size_t prefix, TermOrder ord, RadicalTranscript* tr) {
  const Ctx& base_ctx = f.context();

  // Sufficient test first: if a small power of f reduces to zero against the
  // generators we already have a membership certificate and can skip the
  // extension-variable run entirely.  A nonzero remainder proves nothing, so
  // we fall through to the full check.
  bool member = false;
  if (!gens.empty() && !f.is_zero()) {
    GroebnerBasis plain{gens, ord, prefix == gens.size()};
    Polynomial power = f;
    for (int k = 1; k <= 4 && !member; ++k) {
      if (k > 1) power = power * f;
      member = normal_form(power, plain).is_zero();
    }
  }

  if (!member) {
    Ctx ext = base_ctx->extended("@z");
    int z = ext->nvars() - 1;
    if (!ord.priority.empty()) ord.priority.push_back(z);  // rank the helper last

    std::vector<Polynomial> lifted;
    lifted.reserve(gens.size() + 1);
    for (const auto& g : gens) lifted.push_back(g.lifted(ext));
    lifted.push_back(Polynomial::constant(ext, 1) -
                     Polynomial::variable(ext, z) * f.lifted(ext));

    member = is_unit_ideal({buchberger_core(ext, ord, lifted, prefix), ord, true});
  }
  if (tr) {
    tr->ideal.clear();
    for (const auto& g : gens) tr->ideal.push_back(render(g));
    tr->query = render(f);
    tr->member = member;
  }
  return member;
}

}  // namespace

bool radical_member(const Polynomial& f, const IdealBasis& ideal,
                    RadicalTranscript* transcript) {
  auto gens = clean_generators(ideal.generators);
  if (!gens.empty()) check_same_ctx(f.context(), gens.front().context());
  return radical_member_impl(f, gens, 0, ideal.order, transcript);
}

bool radical_member(const Polynomial& f, const GroebnerBasis& base,
                    RadicalTranscript* transcript) {
  if (!base.elements.empty())
    check_same_ctx(f.context(), base.elements.front().context());
  return radical_member_impl(f, base.elements, base.elements.size(), base.order,
                             transcript);
}

}  // namespace nsep
