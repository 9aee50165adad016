#include "nsep/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace nsep {

// ---------------------------------------------------------------- context

VariableContext::VariableContext(const PrimeField& f,
                                 std::vector<std::pair<std::string, int>> b)
    : field_(f), blocks_(std::move(b)) {
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    const auto& [name, size] = blocks_[k];
    if (size <= 0) throw DimensionMismatch("block size must be positive");
    offsets_.push_back(nvars_);
    for (int i = 0; i < size; ++i) {
      names_.push_back(size == 1 ? name : name + std::to_string(i + 1));
      block_of_var_.push_back(int(k));
    }
    nvars_ += size;
  }
  if (nvars_ > kMaxVars)
    throw DimensionMismatch("too many variables (max " + std::to_string(kMaxVars) + ")");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j])
        throw DimensionMismatch("duplicate variable name " + names_[i]);
}

Ctx VariableContext::make(const PrimeField& field,
                          std::vector<std::pair<std::string, int>> blocks) {
  return Ctx(new VariableContext(field, std::move(blocks)));
}

int VariableContext::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return int(i);
  return -1;
}

Ctx VariableContext::doubled(const std::string& suffix) const {
  auto blocks = blocks_;
  for (const auto& [name, size] : blocks_) blocks.emplace_back(name + suffix, size);
  return make(field_, std::move(blocks));
}

Ctx VariableContext::extended(const std::string& block_name) const {
  auto blocks = blocks_;
  blocks.emplace_back(block_name, 1);
  return make(field_, std::move(blocks));
}

// ---------------------------------------------------------------- orders

int canonical_compare(const Monomial& a, const Monomial& b) noexcept {
  if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
  for (int i = kMaxVars - 1; i >= 0; --i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  return 0;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
  if (priority.empty()) {
    if (kind == kGrevlex) return canonical_compare(a, b);
    for (int i = 0; i < kMaxVars; ++i)
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
    return 0;
  }
  if (kind == kLex) {
    for (int v : priority)
      if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? 1 : -1;
    return 0;
  }
  if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
  for (auto it = priority.rbegin(); it != priority.rend(); ++it)
    if (a.e[*it] != b.e[*it]) return a.e[*it] < b.e[*it] ? 1 : -1;
  return 0;
}

// ---------------------------------------------------------------- polynomial

namespace {
void normalize_terms(const PrimeField& f, std::vector<Term>& ts) {
  std::sort(ts.begin(), ts.end(), [](const Term& x, const Term& y) {
    return canonical_compare(x.first, y.first) > 0;
  });
  std::vector<Term> out;
  out.reserve(ts.size());
  for (const auto& t : ts) {
    std::uint32_t c = t.second % f.modulus();
    if (!out.empty() && out.back().first == t.first) {
      out.back().second = f.add(out.back().second, c);
      if (out.back().second == 0) out.pop_back();
    } else if (c != 0) {
      out.push_back({t.first, c});
    }
  }
  ts = std::move(out);
}
}  // namespace

Polynomial poly_from_sorted(Ctx ctx, std::vector<Term> terms) {
  Polynomial p(std::move(ctx));
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::constant(Ctx ctx, std::uint32_t c) {
  c %= ctx->field().modulus();
  if (c == 0) return Polynomial(std::move(ctx));
  return poly_from_sorted(std::move(ctx), {{Monomial::one(), c}});
}

Polynomial Polynomial::variable(Ctx ctx, int index, int power) {
  if (index < 0 || index >= ctx->nvars())
    throw DimensionMismatch("variable index out of range");
  if (power == 0) return constant(std::move(ctx), 1);
  return poly_from_sorted(std::move(ctx), {{Monomial::var(index, power), 1}});
}

Polynomial Polynomial::from_terms(Ctx ctx, std::vector<Term> terms) {
  for (const auto& t : terms) {
    int d = 0;
    for (int i = ctx->nvars(); i < kMaxVars; ++i)
      if (t.first.e[i]) throw DimensionMismatch("exponent outside context");
    for (int i = 0; i < ctx->nvars(); ++i) d += t.first.e[i];
    if (d != t.first.deg) throw DimensionMismatch("monomial degree cache mismatch");
  }
  normalize_terms(ctx->field(), terms);
  return poly_from_sorted(std::move(ctx), std::move(terms));
}

int Polynomial::degree() const noexcept {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, int(t.first.deg));
  return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_ctx(ctx_, o.ctx_);
  const PrimeField& f = ctx_->field();
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = canonical_compare(terms_[i].first, o.terms_[j].first);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      std::uint32_t s = f.add(terms_[i].second, o.terms_[j].second);
      if (s) out.push_back({terms_[i].first, s});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  return poly_from_sorted(ctx_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  const PrimeField& f = ctx_->field();
  std::vector<Term> out = terms_;
  for (auto& t : out) t.second = f.neg(t.second);
  return poly_from_sorted(ctx_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::scaled(std::uint32_t c) const {
  const PrimeField& f = ctx_->field();
  c %= f.modulus();
  if (c == 0) return Polynomial(ctx_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.second = f.mul(t.second, c);
  return poly_from_sorted(ctx_, std::move(out));
}

Polynomial Polynomial::times_term(const Monomial& m, std::uint32_t c) const {
  const PrimeField& f = ctx_->field();
  c %= f.modulus();
  if (c == 0) return Polynomial(ctx_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.first.times(m), f.mul(t.second, c)});
  // multiplying by a fixed monomial preserves the descending canonical order
  return poly_from_sorted(ctx_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_ctx(ctx_, o.ctx_);
  const PrimeField& f = ctx_->field();
  if (is_zero() || o.is_zero()) return Polynomial(ctx_);
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      Monomial m = a.first.times(b.first);
      auto it = acc.try_emplace(m, 0u).first;
      it->second = f.add(it->second, f.mul(a.second, b.second));
    }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& kv : acc)
    if (kv.second) out.push_back({kv.first, kv.second});
  std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) {
    return canonical_compare(x.first, y.first) > 0;
  });
  return poly_from_sorted(ctx_, std::move(out));
}

bool Polynomial::operator==(const Polynomial& o) const {
  check_same_ctx(ctx_, o.ctx_);
  return terms_ == o.terms_;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = constant(ctx_, 1), base = *this;
  while (e) {
    if (e & 1) r = r * base;
    if (e >>= 1) base = base * base;
  }
  return r;
}

const Term& Polynomial::leading_term(const TermOrder& order) const {
  if (terms_.empty()) throw DimensionMismatch("zero polynomial has no leading term");
  const Term* best = &terms_[0];
  for (const auto& t : terms_)
    if (order.compare(t.first, best->first) > 0) best = &t;
  return *best;
}

std::uint32_t Polynomial::evaluate(const std::vector<std::uint32_t>& point) const {
  if (int(point.size()) != ctx_->nvars())
    throw DimensionMismatch("evaluation point has wrong length");
  const PrimeField& f = ctx_->field();
  std::uint32_t total = 0;
  for (const auto& t : terms_) {
    std::uint32_t v = t.second;
    for (int i = 0; i < ctx_->nvars(); ++i)
      if (t.first.e[i]) v = f.mul(v, f.pow(point[i] % f.modulus(), t.first.e[i]));
    total = f.add(total, v);
  }
  return total;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.first.deg != terms_[0].first.deg) return false;
  return true;
}

std::vector<int> Polynomial::multidegree() const {
  std::vector<int> md(ctx_->nblocks(), 0);
  if (terms_.empty()) return md;
  bool first = true;
  for (const auto& t : terms_) {
    std::vector<int> cur(ctx_->nblocks(), 0);
    for (int i = 0; i < ctx_->nvars(); ++i) cur[ctx_->block_of_var(i)] += t.first.e[i];
    if (first) {
      md = cur;
      first = false;
    } else if (cur != md) {
      throw NonHomogeneous("polynomial is not multihomogeneous: " + render(*this));
    }
  }
  return md;
}

Polynomial Polynomial::substitute_linear(const std::vector<std::uint32_t>& rows) const {
  int n = ctx_->nvars();
  if (int(rows.size()) != n * n)
    throw DimensionMismatch("substitution matrix has wrong shape");
  // images of each variable, with cached powers
  std::vector<Polynomial> image(n);
  std::vector<std::vector<Polynomial>> powers(n);
  for (int j = 0; j < n; ++j) {
    std::vector<Term> ts;
    for (int i = 0; i < n; ++i)
      if (rows[j * n + i]) ts.push_back({Monomial::var(i), rows[j * n + i]});
    image[j] = from_terms(ctx_, std::move(ts));
    powers[j] = {constant(ctx_, 1), image[j]};
  }
  auto power_of = [&](int j, int e) -> const Polynomial& {
    while (int(powers[j].size()) <= e) powers[j].push_back(powers[j].back() * image[j]);
    return powers[j][e];
  };
  Polynomial total(ctx_);
  for (const auto& t : terms_) {
    Polynomial prod = constant(ctx_, t.second);
    for (int j = 0; j < n; ++j)
      if (t.first.e[j]) prod = prod * power_of(j, t.first.e[j]);
    total = total + prod;
  }
  return total;
}

Polynomial Polynomial::lifted(Ctx target, int shift) const {
  if (ctx_->nvars() + shift > target->nvars())
    throw DimensionMismatch("lift target too small");
  if (!(target->field() == ctx_->field()))
    throw ContextMismatch("lift across different fields");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    m.deg = t.first.deg;
    for (int i = 0; i < ctx_->nvars(); ++i) m.e[i + shift] = t.first.e[i];
    out.push_back({m, t.second});
  }
  std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) {
    return canonical_compare(x.first, y.first) > 0;
  });
  return poly_from_sorted(std::move(target), std::move(out));
}

std::uint64_t Polynomial::fnv_hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(ctx_->field().modulus());
  for (const auto& t : terms_) {
    for (int i = 0; i < ctx_->nvars(); ++i) mix(t.first.e[i]);
    mix(t.second);
  }
  return h;
}

// ---------------------------------------------------------------- enumeration

namespace {
void enum_rec(int var, int remaining, int last_var, Monomial& cur,
              std::vector<Monomial>& out) {
  if (var == last_var) {
    cur.e[var] = std::uint8_t(remaining);
    cur.deg += remaining;
    out.push_back(cur);
    cur.deg -= remaining;
    cur.e[var] = 0;
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    cur.e[var] = std::uint8_t(k);
    cur.deg += k;
    enum_rec(var + 1, remaining - k, last_var, cur, out);
    cur.deg -= k;
    cur.e[var] = 0;
  }
}
}  // namespace

std::vector<Monomial> monomials_of_multidegree(const Ctx& ctx,
                                               const std::vector<int>& mdeg,
                                               const TermOrder& order) {
  if (int(mdeg.size()) != ctx->nblocks())
    throw DimensionMismatch("multidegree length != block count");
  std::vector<Monomial> acc = {Monomial::one()};
  for (int b = 0; b < ctx->nblocks(); ++b) {
    if (mdeg[b] < 0) throw DimensionMismatch("negative multidegree entry");
    if (mdeg[b] > 255) throw DimensionMismatch("multidegree entry too large");
    std::vector<Monomial> blockmons;
    Monomial cur;
    int off = ctx->block_offset(b), size = ctx->block(b).second;
    enum_rec(off, mdeg[b], off + size - 1, cur, blockmons);
    std::vector<Monomial> next;
    next.reserve(acc.size() * blockmons.size());
    for (const auto& a : acc)
      for (const auto& bm : blockmons) next.push_back(a.times(bm));
    acc = std::move(next);
  }
  std::sort(acc.begin(), acc.end(),
            [&order](const Monomial& x, const Monomial& y) { return order.compare(x, y) > 0; });
  return acc;
}

std::vector<Monomial> monomials_of_degree(const Ctx& ctx, int d, const TermOrder& order) {
  if (d < 0) return {};
  std::vector<Monomial> out;
  Monomial cur;
  if (ctx->nvars() == 0) {
    if (d == 0) out.push_back(cur);
  } else {
    enum_rec(0, d, ctx->nvars() - 1, cur, out);
  }
  std::sort(out.begin(), out.end(),
            [&order](const Monomial& x, const Monomial& y) { return order.compare(x, y) > 0; });
  return out;
}

// ---------------------------------------------------------------- text form

std::string render(const Monomial& m, const Ctx& ctx) {
  std::string s;
  for (int i = 0; i < ctx->nvars(); ++i) {
    if (!m.e[i]) continue;
    if (!s.empty()) s += "*";
    s += ctx->var_name(i);
    if (m.e[i] > 1) s += "^" + std::to_string(int(m.e[i]));
  }
  return s;
}

std::string render(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const Ctx& ctx = f.context();
  std::string s;
  for (const auto& t : f.terms()) {
    if (!s.empty()) s += " + ";
    std::string mono = render(t.first, ctx);
    if (mono.empty()) {
      s += std::to_string(t.second);
    } else if (t.second == 1) {
      s += mono;
    } else {
      s += std::to_string(t.second) + "*" + mono;
    }
  }
  return s;
}

namespace {
struct Parser {
  const Ctx& ctx;
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(std::uint8_t(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::optional<std::uint64_t> number() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(std::uint8_t(text[pos]))) return std::nullopt;
    std::uint64_t v = 0;
    while (pos < text.size() && std::isdigit(std::uint8_t(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > (1ull << 62)) throw ParseError("numeric literal too large");
      ++pos;
    }
    return v;
  }
  // longest variable name matching at current position
  int variable() {
    skip_ws();
    int best = -1;
    std::size_t best_len = 0;
    for (int i = 0; i < ctx->nvars(); ++i) {
      const std::string& name = ctx->var_name(i);
      if (name.size() > best_len && text.compare(pos, name.size(), name) == 0) {
        best = i;
        best_len = name.size();
      }
    }
    if (best >= 0) pos += best_len;
    return best;
  }

  Polynomial run() {
    const PrimeField& f = ctx->field();
    std::vector<Term> terms;
    bool expect_term = true;
    while (true) {
      skip_ws();
      if (pos >= text.size()) break;
      bool negative = false;
      while (true) {
        if (eat('+')) continue;
        if (eat('-')) {
          negative = !negative;
          continue;
        }
        break;
      }
      // one term: [number] {'*'? variable ['^' number]}*
      std::uint32_t coeff = 1;
      bool saw_anything = false;
      if (auto n = number()) {
        coeff = f.reduce(std::int64_t(*n % f.modulus()));
        saw_anything = true;
      }
      Monomial m;
      while (true) {
        std::size_t save = pos;
        eat('*');
        int v = variable();
        if (v < 0) {
          pos = save;
          break;
        }
        saw_anything = true;
        int e = 1;
        if (eat('^')) {
          auto n = number();
          if (!n) throw ParseError("missing exponent after '^'");
          e = int(*n);
        }
        for (int k = 0; k < e; ++k) m = m.times(Monomial::var(v));
      }
      if (!saw_anything)
        throw ParseError("unexpected character at position " + std::to_string(pos) +
                         " in \"" + text + "\"");
      if (negative) coeff = f.neg(coeff);
      terms.push_back({m, coeff});
      expect_term = false;
    }
    if (expect_term && terms.empty()) throw ParseError("empty polynomial text");
    return Polynomial::from_terms(ctx, std::move(terms));
  }
};
}  // namespace

Polynomial parse_poly(const Ctx& ctx, const std::string& text) {
  if (text == "0") return Polynomial::zero(ctx);
  Parser p{ctx, text};
  Polynomial r = p.run();
  p.skip_ws();
  if (p.pos != text.size()) throw ParseError("trailing characters in \"" + text + "\"");
  return r;
}

}  // namespace nsep
