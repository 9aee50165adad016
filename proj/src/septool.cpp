#include "nsep/septool.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace nsep {

namespace {

// Per-block degree splits of d, first block varying slowest and descending.
void enum_splits(int nblocks, int d, std::vector<int>& prefix,
                 std::vector<std::vector<int>>& out) {
  if (nblocks == 1) {
    prefix.push_back(d);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int first = d; first >= 0; --first) {
    prefix.push_back(first);
    enum_splits(nblocks - 1, d - first, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<int>> splits(int nblocks, int d) {
  std::vector<std::vector<int>> out;
  if (nblocks == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  std::vector<int> prefix;
  enum_splits(nblocks, d, prefix, out);
  return out;
}

std::vector<std::uint32_t> reduced_point(const ModuleSpec& m,
                                         const std::vector<std::uint32_t>& v) {
  if (int(v.size()) != m.dimension())
    throw DimensionMismatch("point length differs from the module dimension");
  const PrimeField& F = m.group()->field();
  std::vector<std::uint32_t> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = F.reduce(v[i]);
  return out;
}

}  // namespace

// --------------------------------------------------------------- point scans

ScanResult min_separating_degree(const WitnessPair& pair, int cap,
                                 bool skip_vanishing_blocks) {
  const ModuleSpec& m = pair.module;
  auto v = reduced_point(m, pair.v);
  auto w = reduced_point(m, pair.w);
  ScanResult out;
  out.cap = cap;

  const int nb = int(m.blocks().size());
  std::vector<bool> both_vanish(std::size_t(nb), false);
  int offset = 0;
  for (int b = 0; b < nb; ++b) {
    int d = m.blocks()[std::size_t(b)].dim();
    bool zero = true;
    for (int i = offset; i < offset + d; ++i)
      zero = zero && v[std::size_t(i)] == 0 && w[std::size_t(i)] == 0;
    both_vanish[std::size_t(b)] = zero;
    offset += d;
  }

  Character triv = trivial_character(m.group());
  for (int d = 1; d <= cap; ++d) {
    for (const auto& md : splits(nb, d)) {
      if (skip_vanishing_blocks) {
        bool dead = false;
        for (int b = 0; b < nb && !dead; ++b)
          dead = md[std::size_t(b)] > 0 && both_vanish[std::size_t(b)];
        if (dead) continue;  // every invariant here evaluates to 0 at both
      }
      for (const auto& f : invariant_basis(m, md, triv).basis) {
        std::uint32_t fv = f.evaluate(v), fw = f.evaluate(w);
        if (fv == fw) {
          out.agreements.push_back({f, fv, fw});
          continue;
        }
        out.degree = d;
        out.separator = EvaluationRow{f, fv, fw};
        return out;
      }
    }
  }
  return out;
}

SeparationCertificate verify_witness(const WitnessPair& pair) {
  const ModuleSpec& m = pair.module;
  const PrimeField& F = m.group()->field();
  auto v = reduced_point(m, pair.v);
  auto w = reduced_point(m, pair.w);

  for (int i = 0; i < int(m.group()->order()); ++i)
    if (mat_apply(F, m.element_matrix(i), v) == w)
      throw OrbitCollision("the claimed pair lies in one orbit");

  auto scan = min_separating_degree(pair, pair.claimed_min_sep_degree);
  if (!scan.degree)
    throw ClaimMismatch("no invariant of the claimed degree separates the pair");
  if (*scan.degree != pair.claimed_min_sep_degree)
    throw ClaimMismatch("pair separates already in degree " +
                        std::to_string(*scan.degree));

  SeparationCertificate cert;
  cert.kind = SeparationCertificate::Kind::kWitnessLowerBound;
  cert.degree = pair.claimed_min_sep_degree;
  cert.agreements = std::move(scan.agreements);
  cert.separator = std::move(scan.separator);

  if (pair.hint) {
    const Polynomial& h = *pair.hint;
    check_same_ctx(h.context(), m.context());
    if (h.degree() != pair.claimed_min_sep_degree)
      throw ClaimMismatch("hint degree differs from the claim");
    for (std::size_t k = 0; k < m.group()->generators().size(); ++k)
      if (act(m, m.group()->generator_element(int(k)), h) != h)
        throw ClaimMismatch("hint is not invariant");
    std::uint32_t hv = h.evaluate(v), hw = h.evaluate(w);
    if (hv == hw) throw ClaimMismatch("hint does not separate the pair");
    cert.hint = EvaluationRow{h, hv, hw};
  }
  return cert;
}

// ------------------------------------------------------------ radical method

RadicalBetaSep betasep_via_radical(const ModuleSpec& m) {
  RadicalBetaSep out;
  out.generators = minimal_generators(m);
  out.candidates.push_back(0);
  for (const auto& [f, d] : out.generators.generators)
    if (out.candidates.back() != d) out.candidates.push_back(d);
  out.certificate.kind = SeparationCertificate::Kind::kRadicalUpperBound;

  if (out.generators.generators.empty()) return out;  // nothing to separate

  Ctx ctx2 = m.context()->doubled("_2");
  const int n = m.context()->nvars();
  auto delta = [&](const Polynomial& f) {
    return f.lifted(ctx2, 0) - f.lifted(ctx2, n);
  };
  std::vector<Polynomial> deltas;
  deltas.reserve(out.generators.generators.size());
  for (const auto& [f, d] : out.generators.generators) deltas.push_back(delta(f));

  TermOrder ord = TermOrder::grevlex();
  GroebnerBasis gb{{}, ord, true};
  std::size_t included = 0;  // generators whose delta is already in the ideal
  std::optional<RadicalTranscript> failure;
  for (int cand : out.candidates) {
    std::vector<Polynomial> extra;
    while (included < deltas.size() &&
           out.generators.generators[included].second <= cand)
      extra.push_back(deltas[included++]);
    gb = buchberger_extend(gb, std::move(extra));

    std::vector<RadicalTranscript> passing;
    bool all_pass = true;
    for (std::size_t i = included; i < deltas.size() && all_pass; ++i) {
      RadicalTranscript tr;
      all_pass = radical_member(deltas[i], gb, &tr);
      if (all_pass)
        passing.push_back(std::move(tr));
      else
        failure = std::move(tr);
    }
    if (!all_pass) continue;
    out.degree = cand;
    out.failed_candidate = -1;
    for (std::size_t i = 0; i + 1 < out.candidates.size(); ++i)
      if (out.candidates[i + 1] == cand) out.failed_candidate = out.candidates[i];
    out.certificate.degree = cand;
    out.certificate.transcripts = std::move(passing);
    if (failure) out.certificate.transcripts.push_back(*failure);
    return out;
  }
  throw SearchExhausted("no candidate degree passed the radical criterion");
}

// ------------------------------------------------------------- group closure

BetaSepReport betasep_group(const Group& g,
                            const std::vector<ModuleBlock>& irreducibles,
                            const std::optional<WitnessPair>& witness,
                            int subset_size_override, int jobs) {
  if (irreducibles.empty())
    throw IrreducibleListUnverified("empty irreducible list");
  const PrimeField& F = g->field();

  std::size_t dim_square_sum = 0;
  std::vector<std::vector<Matrix>> images;
  for (const auto& b : irreducibles) {
    dim_square_sum += std::size_t(b.dim()) * std::size_t(b.dim());
    images.push_back(element_images(g, b.gen_images));  // homomorphism check
    if (!is_irreducible(F, b.gen_images))
      throw IrreducibleListUnverified("block '" + b.name +
                                      "' is not irreducible");
  }
  if (dim_square_sum != g->order())
    throw IrreducibleListUnverified(
        "squared dimensions do not sum to the group order");
  for (std::size_t i = 0; i < irreducibles.size(); ++i)
    for (std::size_t j = i + 1; j < irreducibles.size(); ++j)
      if (intertwiner_dim(F, irreducibles[i].gen_images,
                          irreducibles[j].gen_images) != 0)
        throw IrreducibleListUnverified("blocks '" + irreducibles[i].name +
                                        "' and '" + irreducibles[j].name +
                                        "' are isomorphic");
  if (witness && witness->module.group().get() != g.get())
    throw BadParameter("witness module belongs to a different group");

  BetaSepReport report;
  report.group_order = g->order();
  report.mu = mu(g);
  const int q = int(irreducibles.size());
  report.subset_size =
      std::min(subset_size_override > 0 ? subset_size_override : report.mu + 1, q);
  report.field_note =
      "radical values hold over the algebraic closure of F_" +
      std::to_string(F.modulus()) + "; witness bounds hold over F_" +
      std::to_string(F.modulus()) + " itself";
  report.reduction_trail.push_back(
      "complete irreducible list verified: " + std::to_string(q) +
      " pairwise non-isomorphic blocks, squared dimensions sum to " +
      std::to_string(g->order()));
  report.reduction_trail.push_back(
      "mu(G) = " + std::to_string(report.mu) +
      ", so direct sums of min(mu+1, q) = " + std::to_string(report.subset_size) +
      " distinct irreducibles attain the group value");

  // all subsets of the chosen size, lexicographic
  std::vector<std::vector<int>> combos;
  std::vector<int> combo(std::size_t(report.subset_size));
  for (int i = 0; i < report.subset_size; ++i) combo[std::size_t(i)] = i;
  while (true) {
    combos.push_back(combo);
    int i = report.subset_size - 1;
    while (i >= 0 && combo[std::size_t(i)] == q - report.subset_size + i) --i;
    if (i < 0) break;
    ++combo[std::size_t(i)];
    for (int j = i + 1; j < report.subset_size; ++j)
      combo[std::size_t(j)] = combo[std::size_t(j - 1)] + 1;
  }

  std::vector<RadicalBetaSep> results(combos.size());
  auto evaluate = [&](std::size_t c) {
    std::vector<ModuleBlock> picked;
    for (int idx : combos[c]) picked.push_back(irreducibles[std::size_t(idx)]);
    results[c] = betasep_via_radical(ModuleSpec(g, std::move(picked)));
  };
  int workers = std::max(1, std::min<int>(jobs, int(combos.size())));
  if (workers == 1) {
    for (std::size_t c = 0; c < combos.size(); ++c) evaluate(c);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t)
      pool.emplace_back([&] {
        for (std::size_t c = next++; c < combos.size(); c = next++) evaluate(c);
      });
    for (auto& t : pool) t.join();
  }

  std::size_t best = 0;
  for (std::size_t c = 0; c < combos.size(); ++c) {
    report.subsets.push_back({combos[c], results[c].degree});
    if (results[c].degree > results[best].degree) best = c;
  }
  report.radical_value = results[best].degree;
  report.best = std::move(results[best]);
  {
    std::string members;
    for (int idx : combos[best])
      members += (members.empty() ? "" : ", ") + irreducibles[std::size_t(idx)].name;
    report.reduction_trail.push_back(
        "maximum over " + std::to_string(combos.size()) +
        " subsets: " + std::to_string(report.radical_value) + " at {" + members +
        "}");
  }

  if (witness) {
    verify_witness(*witness);  // throws on any defect
    report.witness_lower_bound = witness->claimed_min_sep_degree;
    report.bounds_agree = *report.witness_lower_bound == report.radical_value;
    report.reduction_trail.push_back(
        "witness pair separates at degree " +
        std::to_string(witness->claimed_min_sep_degree) + " over F_" +
        std::to_string(F.modulus()) +
        (report.bounds_agree ? "; bounds agree" : "; bounds differ"));
  }
  return report;
}

// --------------------------------------------------------- Davenport constant

int davenport(const std::vector<int>& cyclic_orders) {
  long long n = 1;
  for (int o : cyclic_orders) {
    if (o < 1) throw BadParameter("cyclic order must be positive");
    n *= o;
    if (n > 256) throw CapExceeded("group order beyond the davenport cap");
  }
  const int N = int(n);
  if (N == 1) return 1;

  // mixed-radix element arithmetic, tabulated
  const std::size_t sz = std::size_t(N);
  std::vector<int> inv(sz, 0);
  std::vector<std::vector<int>> add(sz, std::vector<int>(sz, 0));
  for (int x = 0; x < N; ++x) {
    int xi = x, weight = 1, xinv = 0;
    for (int o : cyclic_orders) {
      xinv += ((o - xi % o) % o) * weight;
      xi /= o;
      weight *= o;
    }
    inv[std::size_t(x)] = xinv;
    for (int y = 0; y < N; ++y) {
      int a = x, b = y, w = 1, s = 0;
      for (int o : cyclic_orders) {
        s += ((a % o + b % o) % o) * w;
        a /= o;
        b /= o;
        w *= o;
      }
      add[std::size_t(x)][std::size_t(y)] = s;
    }
  }

  // longest product-one-free sequence, over non-decreasing sequences of
  // nonidentity elements; `sums` tracks products of nonempty subsequences
  int best = 0;
  std::vector<char> sums(std::size_t(N), 0);
  auto dfs = [&](auto&& self, int start, int len, const std::vector<char>& S) -> void {
    best = std::max(best, len);
    for (int e = start; e < N; ++e) {
      if (S[std::size_t(inv[std::size_t(e)])]) continue;  // would close a product to 1
      std::vector<char> T = S;
      T[std::size_t(e)] = 1;
      for (int s = 1; s < N; ++s)
        if (S[std::size_t(s)]) T[std::size_t(add[std::size_t(s)][std::size_t(e)])] = 1;
      self(self, e, len + 1, T);
    }
  };
  dfs(dfs, 1, 0, sums);
  return best + 1;
}

}  // namespace nsep
