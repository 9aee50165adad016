#include "nsep/invar.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace nsep {

// ------------------------------------------------------------ linear algebra

std::vector<std::uint32_t> Echelon::residue(std::vector<std::uint32_t> v) const {
  const PrimeField& F = *F_;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    std::uint32_t c = v[pivots_[r]];
    if (c == 0) continue;
    for (std::size_t j = pivots_[r]; j < v.size(); ++j)
      v[j] = F.sub(v[j], F.mul(c, rows_[r][j]));
  }
  return v;
}

bool Echelon::contains(std::vector<std::uint32_t> v) const {
  v = residue(std::move(v));
  return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

bool Echelon::insert(std::vector<std::uint32_t> v) {
  const PrimeField& F = *F_;
  v = residue(std::move(v));
  std::size_t piv = 0;
  while (piv < v.size() && v[piv] == 0) ++piv;
  if (piv == v.size()) return false;
  std::uint32_t inv = F.inv(v[piv]);
  for (std::size_t j = piv; j < v.size(); ++j) v[j] = F.mul(v[j], inv);
  // keep the span reduced: clear the new pivot column from existing rows
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    std::uint32_t c = rows_[r][piv];
    if (c == 0) continue;
    for (std::size_t j = piv; j < v.size(); ++j)
      rows_[r][j] = F.sub(rows_[r][j], F.mul(c, v[j]));
  }
  std::size_t pos = std::size_t(
      std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin());
  rows_.insert(rows_.begin() + long(pos), std::move(v));
  pivots_.insert(pivots_.begin() + long(pos), piv);
  return true;
}

std::vector<std::vector<std::uint32_t>> kernel_basis(
    const PrimeField& F, std::vector<std::vector<std::uint32_t>> rows,
    std::size_t cols) {
  // reduced row echelon form
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    std::uint32_t inv = F.inv(rows[rank][col]);
    for (std::size_t j = col; j < cols; ++j)
      rows[rank][j] = F.mul(rows[rank][j], inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      std::uint32_t c = rows[r][col];
      for (std::size_t j = col; j < cols; ++j)
        rows[r][j] = F.sub(rows[r][j], F.mul(c, rows[rank][j]));
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<std::uint32_t>> kernel;
  for (std::size_t j = 0; j < cols; ++j) {
    if (is_pivot[j]) continue;
    std::vector<std::uint32_t> v(cols, 0);
    v[j] = 1;
    for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = F.neg(rows[r][j]);
    kernel.push_back(std::move(v));
  }
  return kernel;
}

// ---------------------------------------------------------------- ModuleSpec

// Kernel solves for the >=2-dimensional part of a multidegree slice, keyed by
// (per-block degrees with zeros at character lines, weight values).  Character
// lines factor out of every slice as a fixed monomial, so these solves are
// shared by many slices.
struct ModuleSpec::SliceMemo {
  std::map<std::pair<std::vector<int>, std::vector<std::uint32_t>>,
           std::vector<Polynomial>>
      wpart;
};

ModuleSpec::ModuleSpec(Group g, std::vector<ModuleBlock> blocks)
    : group_(std::move(g)), blocks_(std::move(blocks)),
      memo_(std::make_shared<SliceMemo>()) {
  if (!group_) throw BadParameter("module requires a group");
  const PrimeField& F = group_->field();
  std::size_t ngens = group_->generators().size();
  std::vector<std::pair<std::string, int>> ctx_blocks;
  for (auto& b : blocks_) {
    if (b.gen_images.size() != ngens)
      throw GeneratorCountMismatch("one block image per group generator required");
    int d = b.dim();
    if (d <= 0) throw BadParameter("empty module block");
    for (auto& mtx : b.gen_images) {
      if (mtx.n != d) throw DimensionMismatch("block image sizes differ");
      for (auto& e : mtx.a) e = F.reduce(e);
    }
    if (d == 1) {
      if (!b.weight) throw BadParameter("character line needs its weight");
      const Character& chi = *b.weight;
      if (chi.values.size() != group_->order())
        throw BadParameter("weight is not defined on the whole group");
      for (int i = 0; i < int(group_->order()); ++i)
        for (int j = 0; j < int(group_->order()); ++j)
          if (chi.on(group_->multiply(i, j)) != F.mul(chi.on(i), chi.on(j)))
            throw BadParameter("weight is not multiplicative");
      for (std::size_t k = 0; k < ngens; ++k)
        if (b.gen_images[k].a[0] != chi.on(group_->generator_element(int(k))))
          throw BadParameter("line action disagrees with its character");
    } else if (b.weight) {
      throw BadParameter("weight declared on a block of dimension > 1");
    }
    ctx_blocks.emplace_back(b.name, d);
    dim_ += d;
  }
  ctx_ = VariableContext::make(F, ctx_blocks);
  if (blocks_.empty()) {
    element_mats_.assign(group_->order(), Matrix{});
    return;
  }
  std::vector<Matrix> full;
  for (std::size_t k = 0; k < ngens; ++k) {
    std::vector<Matrix> parts;
    for (const auto& b : blocks_) parts.push_back(b.gen_images[k]);
    full.push_back(block_diagonal(parts));
  }
  element_mats_ = element_images(group_, full);  // throws NotRepresentation
}

// -------------------------------------------------------------------- action

Polynomial act(const ModuleSpec& m, int element, const Polynomial& f) {
  check_same_ctx(m.context(), f.context());
  if (m.dimension() == 0) return f;
  const Matrix& inv = m.element_matrix(m.group()->inverse(element));
  return f.substitute_linear(inv.a);
}

Polynomial reynolds(const ModuleSpec& m, const Polynomial& f) {
  const PrimeField& F = m.group()->field();
  std::uint32_t n = F.reduce(std::uint64_t(m.group()->order()));
  if (n == 0) throw ModularCharacteristic("group order vanishes in the field");
  Polynomial sum = Polynomial::zero(m.context());
  for (int i = 0; i < int(m.group()->order()); ++i) sum = sum + act(m, i, f);
  return sum.scaled(F.inv(n));
}

// ------------------------------------------------------------ graded slices

namespace {

Character character_pow(const PrimeField& F, const Character& chi, int k) {
  Character out = chi;
  for (std::size_t i = 0; i < out.values.size(); ++i)
    out.values[i] = F.pow(chi.values[i], std::uint64_t(k));
  return out;
}

}  // namespace

GradedInvariantBasis invariant_basis(const ModuleSpec& m,
                                     const std::vector<int>& multidegree,
                                     const Character& weight) {
  const Group& g = m.group();
  const PrimeField& F = g->field();
  if (int(multidegree.size()) != int(m.blocks().size()))
    throw DimensionMismatch("one degree per module block required");
  if (weight.values.size() != g->order())
    throw BadParameter("weight is not defined on the whole group");
  GradedInvariantBasis out;
  out.multidegree = multidegree;
  out.weight = weight;
  for (int d : multidegree) {
    if (d < 0) throw BadParameter("negative degree");
    out.degree += d;
  }

  // Character lines contribute a fixed monomial t^k of known weight, so only
  // the larger blocks need a kernel solve, against the residual weight.
  Monomial tmon = Monomial::one();
  Character omega = weight;
  std::vector<int> wmd = multidegree;
  for (int b = 0; b < int(m.blocks().size()); ++b) {
    if (m.blocks()[b].dim() != 1 || multidegree[b] == 0) continue;
    wmd[b] = 0;
    tmon = tmon.times(
        Monomial::var(m.context()->block_offset(b), multidegree[b]));
    omega = character_product(
        F, omega,
        character_inverse(
            F, character_pow(F, *m.blocks()[b].weight, multidegree[b])));
  }

  auto key = std::make_pair(std::move(wmd), omega.values);
  auto& memo = m.memo_->wpart;
  auto it = memo.find(key);
  if (it == memo.end()) {
    TermOrder ord = TermOrder::grevlex();
    auto mons = monomials_of_multidegree(m.context(), key.first, ord);
    std::vector<Polynomial> basis;
    if (!mons.empty()) {
      std::unordered_map<Monomial, std::size_t, MonomialHash> index;
      for (std::size_t i = 0; i < mons.size(); ++i) index.emplace(mons[i], i);
      const std::size_t n = mons.size();
      std::vector<std::vector<std::uint32_t>> rows;
      rows.reserve(n * g->generators().size());
      for (std::size_t k = 0; k < g->generators().size(); ++k) {
        int ge = g->generator_element(int(k));
        std::uint32_t lambda = omega.on(g->inverse(ge));
        // matrix of f -> ge·f on the monomial slice, then subtract lambda·id
        std::vector<std::vector<std::uint32_t>> a(n,
                                                  std::vector<std::uint32_t>(n, 0));
        for (std::size_t c = 0; c < n; ++c) {
          Polynomial image =
              act(m, ge, Polynomial::from_terms(m.context(), {{mons[c], 1}}));
          for (const auto& [mon, coef] : image.terms()) a[index.at(mon)][c] = coef;
        }
        for (std::size_t r = 0; r < n; ++r) {
          a[r][r] = F.sub(a[r][r], lambda);
          rows.push_back(std::move(a[r]));
        }
      }
      for (const auto& v : kernel_basis(F, std::move(rows), n)) {
        std::vector<Term> terms;
        for (std::size_t i = 0; i < n; ++i)
          if (v[i] != 0) terms.emplace_back(mons[i], v[i]);
        basis.push_back(Polynomial::from_terms(m.context(), std::move(terms)));
      }
    }
    it = memo.emplace(std::move(key), std::move(basis)).first;
  }
  for (const auto& f : it->second) out.basis.push_back(f.times_term(tmon, 1));
  return out;
}

namespace {

// Per-block degree splits of d, first block varying slowest and descending;
// block b is capped at bound[b] when bounds are given.
void enum_multidegrees(int nblocks, int d, const std::vector<int>* bound,
                       std::vector<int>& prefix,
                       std::vector<std::vector<int>>& out) {
  int b = int(prefix.size());
  int hi = bound ? std::min(d, (*bound)[std::size_t(b)]) : d;
  if (nblocks == 1) {
    if (d > hi) return;
    prefix.push_back(d);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int first = hi; first >= 0; --first) {
    prefix.push_back(first);
    enum_multidegrees(nblocks - 1, d - first, bound, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<int>> multidegree_splits(int nblocks, int d,
                                                 const std::vector<int>* bound =
                                                     nullptr) {
  std::vector<std::vector<int>> out;
  if (nblocks == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  std::vector<int> prefix;
  enum_multidegrees(nblocks, d, bound, prefix, out);
  return out;
}

}  // namespace

GradedInvariantBasis invariant_basis(const ModuleSpec& m, int degree,
                                     const Character& weight) {
  GradedInvariantBasis out;
  out.degree = degree;
  out.weight = weight;
  if (degree < 0) throw BadParameter("negative degree");
  for (const auto& md : multidegree_splits(int(m.blocks().size()), degree)) {
    auto slice = invariant_basis(m, md, weight);
    out.basis.insert(out.basis.end(), slice.basis.begin(), slice.basis.end());
  }
  return out;
}

GradedInvariantBasis invariant_basis(const ModuleSpec& m, int degree) {
  return invariant_basis(m, degree, trivial_character(m.group()));
}

// -------------------------------------------------------------- generators

GeneratingSet minimal_generators(const ModuleSpec& m, int degree_cap) {
  const Group& g = m.group();
  const PrimeField& F = g->field();
  int cap = degree_cap > 0 ? degree_cap : int(g->order());
  GeneratingSet out;
  if (m.dimension() == 0) return out;  // no variables, no positive-degree invariants
  Character triv = trivial_character(g);
  TermOrder ord = TermOrder::grevlex();
  const int nb = int(m.blocks().size());

  // t^ord(chi) is itself an invariant, so a slice whose exponent at some
  // character line reaches the character order is a multiple of it and can
  // hold no new generator (except the slice of that power itself).  Capping
  // line exponents at ord-1 during enumeration keeps many-line modules
  // tractable; the pure powers t^ord are appended as their own slices.
  std::vector<int> line_order(std::size_t(nb), 0);
  std::vector<int> bound(std::size_t(nb), cap);
  for (int b = 0; b < nb; ++b)
    if (m.blocks()[std::size_t(b)].dim() == 1) {
      line_order[std::size_t(b)] =
          int(character_order(F, *m.blocks()[std::size_t(b)].weight));
      bound[std::size_t(b)] = line_order[std::size_t(b)] - 1;
    }

  std::map<std::vector<int>, std::vector<Polynomial>> bases;
  auto basis_of = [&](const std::vector<int>& md) -> const std::vector<Polynomial>& {
    auto it = bases.find(md);
    if (it == bases.end())
      it = bases.emplace(md, invariant_basis(m, md, triv).basis).first;
    return it->second;
  };

  std::vector<std::vector<int>> gen_md;  // multidegree of each generator
  for (int d = 1; d <= cap; ++d) {
    auto slices = multidegree_splits(nb, d, &bound);
    for (int b = 0; b < nb; ++b)
      if (line_order[std::size_t(b)] == d) {
        std::vector<int> pure(std::size_t(nb), 0);
        pure[std::size_t(b)] = d;
        slices.push_back(std::move(pure));
      }
    for (const auto& md : slices) {
      const auto& full = basis_of(md);
      if (full.empty()) continue;

      auto mons = monomials_of_multidegree(m.context(), md, ord);
      std::unordered_map<Monomial, std::size_t, MonomialHash> index;
      for (std::size_t i = 0; i < mons.size(); ++i) index.emplace(mons[i], i);
      auto coords = [&](const Polynomial& f) {
        std::vector<std::uint32_t> v(mons.size(), 0);
        for (const auto& [mon, coef] : f.terms()) v[index.at(mon)] = coef;
        return v;
      };
      // span of products of lower-degree invariants, slice by slice
      Echelon decomposable(F);
      for (std::size_t i = 0; i < out.generators.size(); ++i) {
        std::vector<int> rest(md.size());
        bool fits = true;
        int rest_total = 0;
        for (int b = 0; b < nb; ++b) {
          rest[std::size_t(b)] = md[std::size_t(b)] - gen_md[i][std::size_t(b)];
          if (rest[std::size_t(b)] < 0) fits = false;
          rest_total += rest[std::size_t(b)];
        }
        if (!fits || rest_total == 0) continue;
        for (const auto& h : basis_of(rest))
          decomposable.insert(coords(out.generators[i].first * h));
      }
      for (const auto& b : full)
        if (decomposable.insert(coords(b))) {
          out.generators.emplace_back(b, d);
          gen_md.push_back(md);
          out.beta = d;
        }
    }
  }
  return out;
}

int beta(const ModuleSpec& m, int degree_cap) {
  return minimal_generators(m, degree_cap).beta;
}

bool has_parity_certificate(const ModuleSpec& m) {
  int n = m.dimension();
  if (n == 0) return false;
  const PrimeField& F = m.group()->field();
  Matrix minus = Matrix::identity(n);
  for (int i = 0; i < n; ++i) minus.at(i, i) = F.neg(1);
  for (int i = 0; i < int(m.group()->order()); ++i)
    if (m.element_matrix(i) == minus) return true;
  return false;
}

IdealBasis hilbert_ideal(const ModuleSpec& m, const GeneratingSet& gens) {
  IdealBasis ideal;
  ideal.order = TermOrder::lex();
  for (const auto& [f, d] : gens.generators)
    if (d > 0) ideal.generators.push_back(f);
  (void)m;
  return ideal;
}

// ----------------------------------------------------------- Schur criterion

int intertwiner_dim(const PrimeField& F, const std::vector<Matrix>& a,
                    const std::vector<Matrix>& b) {
  if (a.size() != b.size())
    throw GeneratorCountMismatch("image lists differ in length");
  if (a.empty()) throw BadParameter("empty image list");
  int da = a.front().n, db = b.front().n;
  for (const auto& mtx : a)
    if (mtx.n != da) throw DimensionMismatch("image sizes differ");
  for (const auto& mtx : b)
    if (mtx.n != db) throw DimensionMismatch("image sizes differ");
  // unknown X is db x da, equations X a_k = b_k X entrywise
  std::size_t cols = std::size_t(db) * std::size_t(da);
  std::vector<std::vector<std::uint32_t>> rows;
  rows.reserve(a.size() * cols);
  for (std::size_t k = 0; k < a.size(); ++k)
    for (int r = 0; r < db; ++r)
      for (int c = 0; c < da; ++c) {
        std::vector<std::uint32_t> row(cols, 0);
        for (int j = 0; j < da; ++j) {
          std::size_t x = std::size_t(r) * da + j;
          row[x] = F.add(row[x], a[k].at(j, c));
        }
        for (int j = 0; j < db; ++j) {
          std::size_t x = std::size_t(j) * da + c;
          row[x] = F.sub(row[x], b[k].at(r, j));
        }
        rows.push_back(std::move(row));
      }
  return int(kernel_basis(F, std::move(rows), cols).size());
}

bool is_irreducible(const PrimeField& F, const std::vector<Matrix>& images) {
  return intertwiner_dim(F, images, images) == 1;
}

bool is_irreducible(const Group& g) {
  std::vector<Matrix> images;
  for (const auto& [name, mtx] : g->generators()) images.push_back(mtx);
  return is_irreducible(g->field(), images);
}

}  // namespace nsep
