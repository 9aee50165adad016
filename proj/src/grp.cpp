#include "nsep/grp.hpp"

#include <algorithm>
#include <numeric>

namespace nsep {

// ------------------------------------------------------------------ matrices

Matrix Matrix::identity(int n) {
  Matrix m(n, std::vector<std::uint32_t>(std::size_t(n) * n, 0));
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix mat_mul(const PrimeField& F, const Matrix& x, const Matrix& y) {
  if (x.n != y.n) throw DimensionMismatch("matrix product size mismatch");
  int n = x.n;
  Matrix r(n, std::vector<std::uint32_t>(std::size_t(n) * n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      std::uint32_t xik = x.at(i, k);
      if (!xik) continue;
      for (int j = 0; j < n; ++j)
        r.at(i, j) = F.add(r.at(i, j), F.mul(xik, y.at(k, j)));
    }
  return r;
}

Matrix mat_inv(const PrimeField& F, const Matrix& x) {
  int n = x.n;
  Matrix a = x, r = Matrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int row = col; row < n; ++row)
      if (a.at(row, col)) {
        piv = row;
        break;
      }
    if (piv < 0) throw NotInvertible("singular matrix");
    for (int j = 0; j < n; ++j) {
      std::swap(a.a[std::size_t(piv) * n + j], a.a[std::size_t(col) * n + j]);
      std::swap(r.a[std::size_t(piv) * n + j], r.a[std::size_t(col) * n + j]);
    }
    std::uint32_t inv = F.inv(a.at(col, col));
    for (int j = 0; j < n; ++j) {
      a.at(col, j) = F.mul(a.at(col, j), inv);
      r.at(col, j) = F.mul(r.at(col, j), inv);
    }
    for (int row = 0; row < n; ++row) {
      if (row == col || !a.at(row, col)) continue;
      std::uint32_t f = a.at(row, col);
      for (int j = 0; j < n; ++j) {
        a.at(row, j) = F.sub(a.at(row, j), F.mul(f, a.at(col, j)));
        r.at(row, j) = F.sub(r.at(row, j), F.mul(f, r.at(col, j)));
      }
    }
  }
  return r;
}

std::vector<std::uint32_t> mat_apply(const PrimeField& F, const Matrix& x,
                                     const std::vector<std::uint32_t>& v) {
  if (int(v.size()) != x.n) throw DimensionMismatch("matrix-vector size mismatch");
  std::vector<std::uint32_t> w(v.size(), 0);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) w[i] = F.add(w[i], F.mul(x.at(i, j), v[j]));
  return w;
}

Matrix block_diagonal(const std::vector<Matrix>& blocks) {
  int n = 0;
  for (const auto& b : blocks) n += b.n;
  Matrix r(n, std::vector<std::uint32_t>(std::size_t(n) * n, 0));
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.n; ++i)
      for (int j = 0; j < b.n; ++j) r.at(off + i, off + j) = b.at(i, j);
    off += b.n;
  }
  return r;
}

// ------------------------------------------------------------------- closure

Group MatrixRep::generate(const PrimeField& field,
                          std::vector<std::pair<std::string, Matrix>> generators,
                          std::size_t cap) {
  if (generators.empty()) throw BadParameter("at least one generator required");
  int dim = generators.front().second.n;
  for (auto& [name, m] : generators) {
    if (m.n != dim) throw DimensionMismatch("generator dimensions differ");
    for (auto& e : m.a) e %= field.modulus();
    mat_inv(field, m);  // NotInvertible check
  }

  auto rep = std::shared_ptr<MatrixRep>(new MatrixRep());
  rep->field_ = field;
  rep->dim_ = dim;
  rep->generators_ = generators;

  Matrix id = Matrix::identity(dim);
  rep->elements_.push_back({id, {}});
  rep->index_[id.a] = 0;

  std::vector<int> frontier = {0};
  while (!frontier.empty()) {
    // next layer, lexicographically ordered by matrix entries
    std::map<std::vector<std::uint32_t>, std::pair<int, int>> fresh;  // -> (parent, gen)
    for (int idx : frontier)
      for (std::size_t k = 0; k < generators.size(); ++k) {
        Matrix m = mat_mul(field, rep->elements_[idx].matrix, generators[k].second);
        if (!rep->index_.count(m.a)) fresh.try_emplace(std::move(m.a), idx, int(k));
      }
    frontier.clear();
    for (auto& [entries, origin] : fresh) {
      if (rep->elements_.size() >= cap)
        throw ClosureCapExceeded("group closure exceeded cap of " + std::to_string(cap));
      int next = int(rep->elements_.size());
      Word w = rep->elements_[origin.first].word;
      w.push_back(origin.second);
      rep->index_[entries] = next;
      rep->elements_.push_back({Matrix(dim, entries), std::move(w)});
      frontier.push_back(next);
    }
  }

  std::size_t n = rep->elements_.size();
  if (n % field.modulus() == 0)
    throw ModularCharacteristic("field characteristic divides the group order " +
                                std::to_string(n));

  rep->generator_elements_.reserve(generators.size());
  for (const auto& [name, m] : generators)
    rep->generator_elements_.push_back(rep->index_.at(m.a));

  rep->inverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    rep->inverse_[i] = rep->index_.at(mat_inv(field, rep->elements_[i].matrix).a);

  if (n <= 1024) {
    rep->cayley_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        rep->cayley_[i * n + j] = rep->index_.at(
            mat_mul(field, rep->elements_[i].matrix, rep->elements_[j].matrix).a);
  }
  return rep;
}

int MatrixRep::element_index(const Matrix& m) const {
  auto it = index_.find(m.a);
  return it == index_.end() ? -1 : it->second;
}

int MatrixRep::multiply(int i, int j) const {
  if (!cayley_.empty()) return cayley_[std::size_t(i) * order() + j];
  return index_.at(mat_mul(field_, elements_[i].matrix, elements_[j].matrix).a);
}

std::uint64_t MatrixRep::element_order(int i) const {
  std::uint64_t ord = 1;
  int cur = i;
  while (cur != 0) {
    cur = multiply(cur, i);
    ++ord;
  }
  return ord;
}

Group direct_sum_rep(const std::vector<Group>& blocks) {
  if (blocks.empty()) throw BadParameter("empty direct sum");
  std::size_t ngens = blocks.front()->generators().size();
  const PrimeField& F = blocks.front()->field();
  for (const auto& b : blocks) {
    if (b->generators().size() != ngens)
      throw GeneratorCountMismatch("blocks disagree on generator count");
    if (!(b->field() == F)) throw ContextMismatch("blocks over different fields");
  }
  std::vector<std::pair<std::string, Matrix>> gens;
  for (std::size_t k = 0; k < ngens; ++k) {
    std::vector<Matrix> parts;
    for (const auto& b : blocks) parts.push_back(b->generators()[k].second);
    gens.emplace_back(blocks.front()->generators()[k].first, block_diagonal(parts));
  }
  return MatrixRep::generate(F, std::move(gens));
}

// -------------------------------------------------------------------- orbits

std::vector<std::vector<std::uint32_t>> orbit(const Group& g,
                                              const std::vector<std::uint32_t>& v) {
  std::vector<std::vector<std::uint32_t>> out;
  std::map<std::vector<std::uint32_t>, bool> seen;
  for (const auto& el : g->elements()) {
    auto w = mat_apply(g->field(), el.matrix, v);
    if (!seen.emplace(w, true).second) continue;
    out.push_back(std::move(w));
  }
  return out;
}

std::optional<int> same_orbit(const Group& g, const std::vector<std::uint32_t>& v,
                              const std::vector<std::uint32_t>& w) {
  for (std::size_t i = 0; i < g->order(); ++i)
    if (mat_apply(g->field(), g->elements()[i].matrix, v) == w) return int(i);
  return std::nullopt;
}

std::vector<int> stabilizer(const Group& g, const std::vector<std::uint32_t>& v) {
  std::vector<int> out;
  for (std::size_t i = 0; i < g->order(); ++i)
    if (mat_apply(g->field(), g->elements()[i].matrix, v) == v) out.push_back(int(i));
  return out;
}

// ----------------------------------------------------------------- subgroups

namespace {

void require_mask_capacity(const Group& g) {
  if (g->order() > 64)
    throw CapExceeded("subgroup machinery limited to groups of order <= 64");
}

std::uint64_t close_mask(const Group& g, std::uint64_t mask) {
  mask |= 1;  // identity
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < int(g->order()); ++i) {
      if (!((mask >> i) & 1)) continue;
      for (int j = 0; j < int(g->order()); ++j) {
        if (!((mask >> j) & 1)) continue;
        int k = g->multiply(i, j);
        if (!((mask >> k) & 1)) {
          mask |= 1ull << k;
          changed = true;
        }
      }
    }
  }
  return mask;
}

}  // namespace

Subgroup subgroup_closure(const Group& g, const std::vector<int>& elems) {
  require_mask_capacity(g);
  std::uint64_t mask = 1;
  for (int e : elems) mask |= 1ull << e;
  return {close_mask(g, mask)};
}

bool subgroup_is_normal(const Group& g, const Subgroup& h) {
  require_mask_capacity(g);
  for (int x = 0; x < int(g->order()); ++x)
    for (int n = 0; n < int(g->order()); ++n) {
      if (!h.contains(n)) continue;
      if (!h.contains(g->multiply(g->multiply(x, n), g->inverse(x)))) return false;
    }
  return true;
}

Subgroup commutator_subgroup(const Group& g) {
  require_mask_capacity(g);
  std::vector<int> comms;
  for (int a = 0; a < int(g->order()); ++a)
    for (int b = 0; b < int(g->order()); ++b)
      comms.push_back(
          g->multiply(g->multiply(g->inverse(a), g->inverse(b)), g->multiply(a, b)));
  return subgroup_closure(g, comms);
}

std::vector<Subgroup> subgroup_lattice(const Group& g, std::size_t cap) {
  if (g->order() > cap)
    throw CapExceeded("group order " + std::to_string(g->order()) +
                      " exceeds subgroup lattice cap " + std::to_string(cap));
  require_mask_capacity(g);

  std::vector<std::uint64_t> cyclics;
  std::vector<std::uint64_t> all = {1};  // trivial subgroup
  auto add = [&](std::uint64_t m) {
    if (std::find(all.begin(), all.end(), m) == all.end()) {
      all.push_back(m);
      return true;
    }
    return false;
  };
  for (int i = 0; i < int(g->order()); ++i) {
    std::uint64_t c = close_mask(g, 1ull | (1ull << i));
    cyclics.push_back(c);
    add(c);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::uint64_t> snapshot = all;
    for (std::uint64_t h : snapshot)
      for (std::uint64_t c : cyclics) {
        if ((h | c) == h) continue;
        if (add(close_mask(g, h | c))) grew = true;
      }
  }
  std::vector<Subgroup> out;
  out.reserve(all.size());
  for (auto m : all) out.push_back({m});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.order() != b.order() ? a.order() < b.order() : a.mask < b.mask;
  });
  return out;
}

std::vector<Subgroup> normal_subgroups(const Group& g) {
  std::vector<Subgroup> out;
  for (const auto& h : subgroup_lattice(g))
    if (subgroup_is_normal(g, h)) out.push_back(h);
  return out;
}

namespace {

bool is_prime_power(int n) {
  if (n < 2) return false;
  for (int q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      while (n % q == 0) n /= q;
      return n == 1;
    }
  return true;  // n itself prime
}

bool cyclic_prime_power(const Group& g, const Subgroup& h) {
  if (!is_prime_power(h.order())) return false;
  for (int i = 0; i < int(g->order()); ++i)
    if (h.contains(i) && g->element_order(i) == std::uint64_t(h.order())) return true;
  return false;
}

// No member may contain the intersection of the others (empty family of
// "others" intersects to G itself).
bool intersection_independent(const std::vector<std::uint64_t>& masks,
                              std::uint64_t full) {
  for (std::size_t i = 0; i < masks.size(); ++i) {
    std::uint64_t inter = full;
    for (std::size_t j = 0; j < masks.size(); ++j)
      if (j != i) inter &= masks[j];
    if ((masks[i] & inter) == inter) return false;  // member i contains it
  }
  return true;
}

struct MuSearch {
  std::vector<std::uint64_t> lattice;  // proper subgroups only
  std::vector<bool> cpp;               // cyclic of prime-power order
  std::uint64_t full;
  bool prune;
  int best = 0;

  void dfs(std::vector<std::uint64_t>& chosen, bool has_cpp, std::size_t start) {
    best = std::max(best, int(chosen.size()));
    if (prune && has_cpp && chosen.size() >= 2) return;
    for (std::size_t c = start; c < lattice.size(); ++c) {
      chosen.push_back(lattice[c]);
      if (intersection_independent(chosen, full))
        dfs(chosen, has_cpp || cpp[c], c + 1);
      chosen.pop_back();
    }
  }
};

}  // namespace

int mu(const Group& g, bool prime_power_prune) {
  require_mask_capacity(g);
  std::uint64_t full =
      g->order() == 64 ? ~0ull : ((1ull << g->order()) - 1);
  MuSearch s{{}, {}, full, prime_power_prune};
  for (const auto& h : subgroup_lattice(g)) {
    if (h.mask == full) continue;  // G itself can never join an independent set
    s.lattice.push_back(h.mask);
    s.cpp.push_back(cyclic_prime_power(g, h));
  }
  std::vector<std::uint64_t> chosen;
  s.dfs(chosen, false, 0);
  return s.best;
}

// ---------------------------------------------------------------- characters

std::vector<Character> characters(const Group& g) {
  const PrimeField& F = g->field();
  std::size_t n = g->order(), ngens = g->generators().size();

  std::vector<std::vector<std::uint32_t>> roots;  // per generator: all n_k-th roots
  for (std::size_t k = 0; k < ngens; ++k) {
    std::uint64_t ord = g->element_order(g->generator_element(k));
    std::uint32_t zeta = element_of_order_value(F, ord);
    std::vector<std::uint32_t> r;
    std::uint32_t cur = 1;
    for (std::uint64_t e = 0; e < ord; ++e) {
      r.push_back(cur);
      cur = F.mul(cur, zeta);
    }
    roots.push_back(std::move(r));
  }

  std::vector<Character> out;
  std::vector<std::size_t> pick(ngens, 0);
  while (true) {
    std::vector<std::uint32_t> assign(ngens);
    for (std::size_t k = 0; k < ngens; ++k) assign[k] = roots[k][pick[k]];

    std::vector<std::uint32_t> values(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t v = 1;
      for (int w : g->elements()[i].word) v = F.mul(v, assign[std::size_t(w)]);
      values[i] = v;
    }
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t k = 0; k < ngens && ok; ++k)
        ok = values[std::size_t(g->multiply(int(i), g->generator_element(int(k))))] ==
             F.mul(values[i], assign[k]);
    if (ok) out.push_back({std::move(values)});

    std::size_t k = 0;
    while (k < ngens && ++pick[k] == roots[k].size()) pick[k++] = 0;
    if (k == ngens) break;
  }
  std::sort(out.begin(), out.end(),
            [](const Character& a, const Character& b) { return a.values < b.values; });

  if (g->order() <= 64) {
    std::size_t expected = n / std::size_t(commutator_subgroup(g).order());
    if (out.size() != expected)
      throw BadParameter("character search found " + std::to_string(out.size()) +
                         " characters, expected " + std::to_string(expected));
  }
  return out;
}

std::uint64_t character_order(const PrimeField& F, const Character& chi) {
  std::uint64_t ord = 1;
  for (auto v : chi.values) ord = std::lcm(ord, F.element_order(v));
  return ord;
}

Character trivial_character(const Group& g) {
  return {std::vector<std::uint32_t>(g->order(), 1)};
}

Character character_product(const PrimeField& F, const Character& a, const Character& b) {
  if (a.values.size() != b.values.size())
    throw DimensionMismatch("character tables of different sizes");
  Character r = a;
  for (std::size_t i = 0; i < r.values.size(); ++i)
    r.values[i] = F.mul(r.values[i], b.values[i]);
  return r;
}

Character character_inverse(const PrimeField& F, const Character& a) {
  Character r = a;
  for (auto& v : r.values) v = F.inv(v);
  return r;
}

// --------------------------------------------------- homomorphism machinery

namespace {

std::vector<Matrix> images_by_words(const Group& g, const std::vector<Matrix>& gen_images,
                                    bool* consistent) {
  const PrimeField& F = g->field();
  if (gen_images.size() != g->generators().size())
    throw GeneratorCountMismatch("one image per generator required");
  int dim = gen_images.front().n;
  std::vector<Matrix> reduced = gen_images;
  for (auto& m : reduced) {
    if (m.n != dim) throw DimensionMismatch("image dimensions differ");
    for (auto& e : m.a) e %= F.modulus();
  }

  std::vector<Matrix> imgs;
  imgs.reserve(g->order());
  for (const auto& el : g->elements()) {
    Matrix m = Matrix::identity(dim);
    for (int w : el.word) m = mat_mul(F, m, reduced[std::size_t(w)]);
    imgs.push_back(std::move(m));
  }
  *consistent = true;
  for (std::size_t i = 0; i < g->order() && *consistent; ++i)
    for (std::size_t k = 0; k < reduced.size() && *consistent; ++k)
      *consistent =
          mat_mul(F, imgs[i], reduced[k]) ==
          imgs[std::size_t(g->multiply(int(i), g->generator_element(int(k))))];
  return imgs;
}

}  // namespace

std::vector<Matrix> element_images(const Group& g, const std::vector<Matrix>& gen_images) {
  bool ok = false;
  auto imgs = images_by_words(g, gen_images, &ok);
  if (!ok)
    throw NotRepresentation("generator images do not extend to a homomorphism");
  return imgs;
}

bool is_representation(const Group& g, const std::vector<Matrix>& gen_images) {
  bool ok = false;
  images_by_words(g, gen_images, &ok);
  return ok;
}

Group quotient_rep(const Group& g, const Subgroup& n,
                   const std::vector<std::pair<std::string, Matrix>>& gen_images) {
  if (!subgroup_is_normal(g, n)) throw NotNormal("subgroup is not normal");
  std::vector<Matrix> bare;
  for (const auto& [name, m] : gen_images) bare.push_back(m);
  auto imgs = element_images(g, bare);
  Matrix id = Matrix::identity(bare.front().n);
  for (int i = 0; i < int(g->order()); ++i)
    if (n.contains(i) && !(imgs[std::size_t(i)] == id))
      throw NotRepresentation("representation does not annihilate the subgroup");
  return MatrixRep::generate(g->field(), gen_images);
}

// ---------------------------------------------------------------- symmetries

std::vector<std::vector<int>> automorphisms(const Group& g) {
  std::size_t n = g->order(), ngens = g->generators().size();
  std::vector<std::uint64_t> gen_order(ngens);
  std::vector<std::vector<int>> candidates(ngens);
  for (std::size_t k = 0; k < ngens; ++k) {
    gen_order[k] = g->element_order(g->generator_element(int(k)));
    for (int i = 0; i < int(n); ++i)
      if (g->element_order(i) == gen_order[k]) candidates[k].push_back(i);
  }

  std::vector<std::vector<int>> out;
  std::vector<std::size_t> pick(ngens, 0);
  while (true) {
    std::vector<int> image(ngens);
    for (std::size_t k = 0; k < ngens; ++k) image[k] = candidates[k][pick[k]];

    std::vector<int> phi(n);
    for (std::size_t i = 0; i < n; ++i) {
      int v = 0;
      for (int w : g->elements()[i].word) v = g->multiply(v, image[std::size_t(w)]);
      phi[i] = v;
    }
    std::vector<char> hit(n, 0);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (hit[std::size_t(phi[i])]) ok = false;
      hit[std::size_t(phi[i])] = 1;
    }
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t k = 0; k < ngens && ok; ++k)
        ok = phi[std::size_t(g->multiply(int(i), g->generator_element(int(k))))] ==
             g->multiply(phi[i], image[k]);
    if (ok) out.push_back(std::move(phi));

    std::size_t k = 0;
    while (k < ngens && ++pick[k] == candidates[k].size()) pick[k++] = 0;
    if (k == ngens) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::map<std::uint64_t, int> order_profile(const Group& g) {
  std::map<std::uint64_t, int> out;
  for (int i = 0; i < int(g->order()); ++i) ++out[g->element_order(i)];
  return out;
}

}  // namespace nsep
