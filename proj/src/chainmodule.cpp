#include "densityforge/chainmodule.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

namespace df {

namespace {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Order-independent 128-bit fingerprint of an element set.
struct SetHash {
  uint64_t lo = 0, hi = 0;
  void mix(uint64_t x) {
    lo += splitmix64(x);
    hi += splitmix64(x ^ 0xa5a5a5a5a5a5a5a5ULL);
  }
};

bool sorted_contains(const std::vector<uint64_t>& v, uint64_t x) {
  return std::binary_search(v.begin(), v.end(), x);
}

std::pair<int, int> split_prime_power(int q) {
  for (int p = 2; p * p <= q; ++p) {
    if (q % p == 0) {
      int e = 0, m = q;
      while (m % p == 0) { m /= p; ++e; }
      if (m != 1) throw PreconditionViolated("q is not a prime power");
      return {p, e};
    }
  }
  return {q, 1};
}

}  // namespace

bool Submodule::contains(uint64_t x) const { return sorted_contains(elements, x); }

ChainModule::ChainModule(std::shared_ptr<const FiniteField> field,
                         Partition lambda, int base_q, bool hermitian)
    : field_(std::move(field)),
      lambda_(std::move(lambda)),
      base_q_(base_q),
      hermitian_(hermitian) {
  dim_ = lambda_.size();
  offset_.resize(size_t(lambda_.length()) + 1);
  offset_[0] = 0;
  for (int i = 0; i < lambda_.length(); ++i)
    offset_[size_t(i) + 1] = offset_[size_t(i)] + lambda_.part(i);
  size_ = 1;
  for (int k = 0; k < dim_; ++k) {
    if (size_ > (uint64_t(1) << 62) / uint64_t(field_->order()))
      throw SizeBound("module cardinality overflows 64 bits");
    size_ *= uint64_t(field_->order());
  }
}

ChainModule ChainModule::plain(int q, const Partition& lambda) {
  auto [p, e] = split_prime_power(q);
  return ChainModule(std::make_shared<FiniteField>(p, e), lambda, q, false);
}

ChainModule ChainModule::hermitian(int q, const Partition& lambda) {
  auto [p, e] = split_prime_power(q);
  return ChainModule(std::make_shared<FiniteField>(p, 2 * e), lambda, q, true);
}

void ChainModule::decode(uint64_t code, int* digits) const {
  const uint64_t Q = field_->order();
  for (int k = 0; k < dim_; ++k) {
    digits[k] = int(code % Q);
    code /= Q;
  }
}

uint64_t ChainModule::encode(const int* digits) const {
  const uint64_t Q = field_->order();
  uint64_t code = 0;
  for (int k = dim_ - 1; k >= 0; --k) code = code * Q + uint64_t(digits[k]);
  return code;
}

uint64_t ChainModule::add(uint64_t a, uint64_t b) const {
  int da[64], db[64];
  decode(a, da);
  decode(b, db);
  for (int k = 0; k < dim_; ++k) da[k] = field_->add(da[k], db[k]);
  return encode(da);
}

uint64_t ChainModule::neg(uint64_t a) const {
  int da[64];
  decode(a, da);
  for (int k = 0; k < dim_; ++k) da[k] = field_->neg(da[k]);
  return encode(da);
}

uint64_t ChainModule::scalar_mul(int c, uint64_t a) const {
  int da[64];
  decode(a, da);
  for (int k = 0; k < dim_; ++k) da[k] = field_->mul(c, da[k]);
  return encode(da);
}

uint64_t ChainModule::pi_mul(uint64_t a) const {
  int da[64], out[64];
  decode(a, da);
  for (int i = 0; i < lambda_.length(); ++i) {
    const int len = lambda_.part(i);
    out[offset_[i]] = 0;
    for (int j = 1; j < len; ++j) out[offset_[i] + j] = da[offset_[i] + j - 1];
  }
  return encode(out);
}

bool ChainModule::pi_preimage(uint64_t a, uint64_t* pre) const {
  int da[64], out[64];
  decode(a, da);
  for (int i = 0; i < lambda_.length(); ++i) {
    const int len = lambda_.part(i);
    if (da[offset_[i]] != 0) return false;
    for (int j = 0; j + 1 < len; ++j) out[offset_[i] + j] = da[offset_[i] + j + 1];
    out[offset_[i] + len - 1] = 0;
  }
  *pre = encode(out);
  return true;
}

std::vector<int> ChainModule::pairing(uint64_t a, uint64_t b) const {
  if (!hermitian_) throw PreconditionViolated("pairing needs a Hermitian module");
  int da[64], db[64];
  decode(a, da);
  decode(b, db);
  const int top = lambda_.part(0);
  std::vector<int> out(size_t(top), 0);
  // <a, b> = sum_i a_i conj(b_i) pi^{lambda_1 - lambda_i} in O/pi^{lambda_1}.
  for (int i = 0; i < lambda_.length(); ++i) {
    const int len = lambda_.part(i);
    const int shift = top - len;
    for (int j = 0; j < len; ++j) {
      for (int k = 0; k < len; ++k) {
        const int deg = shift + j + k;
        if (deg >= top) continue;
        const int prod =
            field_->mul(da[offset_[i] + j], field_->conj(db[offset_[i] + k]));
        out[size_t(deg)] = field_->add(out[size_t(deg)], prod);
      }
    }
  }
  return out;
}

bool ChainModule::pairing_is_zero(uint64_t a, uint64_t b) const {
  const auto v = pairing(a, b);
  return std::all_of(v.begin(), v.end(), [](int c) { return c == 0; });
}

std::vector<uint64_t> ChainModule::span(const std::vector<uint64_t>& gens) const {
  // F-span closure of {pi^j g}; this equals the O-span of the generators.
  std::vector<uint64_t> closure = {0};
  std::set<uint64_t> seen = {0};
  for (uint64_t g : gens) {
    for (uint64_t h = g; h != 0; h = pi_mul(h)) {
      if (seen.count(h)) continue;
      std::vector<uint64_t> grown = closure;
      for (int c = 1; c < field_->order(); ++c) {
        const uint64_t ch = scalar_mul(c, h);
        for (uint64_t s : closure) grown.push_back(add(s, ch));
      }
      for (uint64_t x : grown) seen.insert(x);
      closure = std::move(grown);
    }
  }
  std::sort(closure.begin(), closure.end());
  return closure;
}

int ChainModule::length_of(size_t card) const {
  int len = 0;
  size_t m = 1;
  while (m < card) {
    m *= size_t(field_->order());
    ++len;
  }
  if (m != card) throw PreconditionViolated("cardinality is not a power of |F|");
  return len;
}

std::vector<Submodule> ChainModule::enumerate_submodules(uint64_t bound) const {
  if (size_ > bound) throw SizeBound("module too large to enumerate");
  std::map<std::vector<uint64_t>, std::vector<uint64_t>> found;  // elems -> gens
  found.emplace(std::vector<uint64_t>{0}, std::vector<uint64_t>{});
  std::vector<const std::pair<const std::vector<uint64_t>, std::vector<uint64_t>>*>
      layer;
  layer.push_back(&*found.begin());
  while (!layer.empty()) {
    std::vector<decltype(layer)::value_type> next;
    for (auto* entry : layer) {
      const auto& elems = entry->first;
      std::unordered_set<uint64_t> marked;
      for (uint64_t x = 1; x < size_; ++x) {
        if (marked.count(x) || sorted_contains(elems, x)) continue;
        if (!sorted_contains(elems, pi_mul(x))) continue;
        // J = I + O*x covers I; enumerate J = union_c (I + c*x).
        std::vector<uint64_t> grown = elems;
        grown.reserve(elems.size() * size_t(field_->order()));
        for (int c = 1; c < field_->order(); ++c) {
          const uint64_t cx = scalar_mul(c, x);
          for (uint64_t s : elems) {
            const uint64_t y = add(s, cx);
            grown.push_back(y);
            marked.insert(y);
          }
        }
        std::sort(grown.begin(), grown.end());
        auto gens = entry->second;
        gens.push_back(x);
        auto [it, fresh] = found.emplace(std::move(grown), std::move(gens));
        if (fresh) next.push_back(&*it);
      }
    }
    layer = std::move(next);
  }
  std::vector<Submodule> out;
  out.reserve(found.size());
  for (auto& [elems, gens] : found) out.push_back(Submodule{elems, gens});
  std::stable_sort(out.begin(), out.end(),
                   [](const Submodule& a, const Submodule& b) {
                     return a.elements.size() < b.elements.size();
                   });
  return out;
}

Partition ChainModule::submodule_type(const Submodule& sub) const {
  std::vector<int> dims;
  std::vector<uint64_t> cur = sub.elements;
  while (cur.size() > 1) {
    std::vector<uint64_t> nxt;
    nxt.reserve(cur.size());
    for (uint64_t x : cur) nxt.push_back(pi_mul(x));
    std::sort(nxt.begin(), nxt.end());
    nxt.erase(std::unique(nxt.begin(), nxt.end()), nxt.end());
    dims.push_back(length_of(cur.size()) - length_of(nxt.size()));
    cur = std::move(nxt);
  }
  return conjugate(Partition(dims));
}

Partition ChainModule::quotient_type(const Submodule& inner,
                                     const Submodule& outer) const {
  if (!std::includes(outer.elements.begin(), outer.elements.end(),
                     inner.elements.begin(), inner.elements.end()))
    throw PreconditionViolated("quotient_type: inner not contained in outer");
  // dim pi^j(outer/inner) = len(pi^j outer + inner) - len(inner); take
  // successive differences and conjugate.
  std::vector<int> dims;
  std::vector<uint64_t> cur = outer.elements;
  int prev = length_of(cur.size());
  const int base = int(inner.elements.size());
  while (true) {
    std::vector<uint64_t> pim;
    pim.reserve(cur.size());
    for (uint64_t x : cur) pim.push_back(pi_mul(x));
    // inner + pi*cur: both are submodules, so their sum is the sumset.
    std::vector<uint64_t> summed;
    {
      std::set<uint64_t> s;
      for (uint64_t a : inner.elements)
        for (uint64_t b : pim) s.insert(add(a, b));
      summed.assign(s.begin(), s.end());
    }
    const int len = length_of(summed.size());
    dims.push_back(prev - len);
    if (summed.size() == size_t(base)) break;
    prev = len;
    cur = std::move(summed);
  }
  while (!dims.empty() && dims.back() == 0) dims.pop_back();
  return conjugate(Partition(dims));
}

int ChainModule::t_of_quotient(const Submodule& inner,
                               const Submodule& outer) const {
  return quotient_type(inner, outer).length();
}

Submodule ChainModule::perp(const Submodule& sub) const {
  std::vector<uint64_t> elems;
  for (uint64_t y = 0; y < size_; ++y) {
    bool ok = true;
    for (uint64_t g : sub.generators)
      if (!pairing_is_zero(g, y)) { ok = false; break; }
    if (ok) elems.push_back(y);
  }
  return Submodule{elems, {}};
}

bool ChainModule::is_isotropic(const Submodule& sub) const {
  for (uint64_t g : sub.generators)
    for (uint64_t h : sub.generators)
      if (!pairing_is_zero(g, h)) return false;
  return true;
}

std::vector<uint64_t> ChainModule::socle_elements() const {
  std::vector<int> digits(size_t(dim_), 0);
  std::vector<int> tops;  // digit positions free in the socle
  for (int i = 0; i < lambda_.length(); ++i)
    tops.push_back(offset_[size_t(i)] + lambda_.part(i) - 1);
  std::vector<uint64_t> out;
  const int Q = field_->order();
  uint64_t total = 1;
  for (size_t i = 0; i < tops.size(); ++i) total *= uint64_t(Q);
  for (uint64_t idx = 0; idx < total; ++idx) {
    uint64_t rem = idx;
    for (int pos : tops) {
      digits[size_t(pos)] = int(rem % uint64_t(Q));
      rem /= uint64_t(Q);
    }
    out.push_back(encode(digits.data()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Number of a-dimensional subspaces of F_q^n by echelon pivot patterns:
// pivots at columns c_1 < ... < c_a (0-based) contribute
// q^{sum_i (n - c_i - a + i)} free entries.
BigInt grassmannian_count(int q, int n, int a) {
  BigInt total = 0;
  std::vector<int> cols(static_cast<size_t>(a));
  for (int i = 0; i < a; ++i) cols[size_t(i)] = i;
  while (true) {
    int freedom = 0;
    for (int i = 0; i < a; ++i) freedom += n - cols[size_t(i)] - a + i;
    BigInt term = 1;
    for (int i = 0; i < freedom; ++i) term *= q;
    total += term;
    int i = a - 1;
    while (i >= 0 && cols[size_t(i)] == n - a + i) --i;
    if (i < 0) break;
    ++cols[size_t(i)];
    for (int j = i + 1; j < a; ++j) cols[size_t(j)] = cols[size_t(j - 1)] + 1;
  }
  return total;
}

// Count length-b submodules (b >= 1) by growing covers layer by layer,
// fingerprinting the final layer instead of storing it.
BigInt layered_count(const ChainModule& M, int b) {
  const auto socle = M.socle_elements();
  const int Q = M.field().order();
  std::set<std::vector<uint64_t>> layer;
  layer.insert({0});
  for (int level = 0; level < b; ++level) {
    const bool final = (level == b - 1);
    std::set<std::vector<uint64_t>> next;
    std::set<std::pair<uint64_t, uint64_t>> fingerprints;
    for (const auto& elems : layer) {
      SetHash base;
      for (uint64_t s : elems) base.mix(s);
      std::unordered_set<uint64_t> marked;
      for (uint64_t y : elems) {
        uint64_t x0;
        if (!M.pi_preimage(y, &x0)) continue;
        for (uint64_t z : socle) {
          // Socle digits and shifted digits are disjoint, so the codes add.
          const uint64_t x = x0 + z;
          if (x == 0 || marked.count(x) || sorted_contains(elems, x)) continue;
          SetHash h = base;
          std::vector<uint64_t> grown;
          if (!final) grown = elems;
          for (int c = 1; c < Q; ++c) {
            const uint64_t cx = M.scalar_mul(c, x);
            for (uint64_t s : elems) {
              const uint64_t w = M.add(s, cx);
              marked.insert(w);
              if (final)
                h.mix(w);
              else
                grown.push_back(w);
            }
          }
          if (final) {
            fingerprints.emplace(h.lo, h.hi);
          } else {
            std::sort(grown.begin(), grown.end());
            next.insert(std::move(grown));
          }
        }
      }
    }
    if (final) return BigInt(fingerprints.size());
    layer = std::move(next);
  }
  return 1;  // b == 0
}

// Gaussian binomial [n choose k] evaluated at the integer q.
BigInt gaussian_at(int q, int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt num = 1, den = 1, qpow_num = 1, qpow_den = 1;
  for (int i = 0; i < n; ++i) qpow_num *= q;
  for (int i = 0; i < k; ++i) qpow_den *= q;
  for (int i = 0; i < k; ++i) {
    num *= qpow_num - 1;
    den *= qpow_den - 1;
    qpow_num /= q;
    qpow_den /= q;
  }
  return num / den;
}

// Number of submodules of type mu in the type-lambda module, by the
// classical pivot-structure product over the conjugate partitions:
//   prod_i q^{mu'_{i+1}(lambda'_i - mu'_i)}
//          [lambda'_i - mu'_{i+1} choose mu'_i - mu'_{i+1}]_q.
BigInt type_count_formula(int q, const Partition& lambda,
                          const Partition& mu) {
  const Partition lc = conjugate(lambda);
  const Partition mc = conjugate(mu);
  if (mc.length() > lc.length()) return 0;
  BigInt total = 1;
  for (int i = 0; i < lc.length(); ++i) {
    const int li = lc.part(i);
    const int mi = i < mc.length() ? mc.part(i) : 0;
    const int mi1 = i + 1 < mc.length() ? mc.part(i + 1) : 0;
    if (mi > li) return 0;
    BigInt pivots = 1;
    for (int k = 0; k < mi1 * (li - mi); ++k) pivots *= q;
    total *= pivots * gaussian_at(q, li - mi1, mi - mi1);
    if (total == 0) return 0;
  }
  return total;
}

}  // namespace

BigInt count_submodules_of_length(int q, const Partition& lambda, int a,
                                  uint64_t full_bound) {
  const int d = lambda.size();
  if (a < 0 || a > d) return 0;
  if (a == 0 || a == d) return 1;
  if (lambda.length() == d) return grassmannian_count(q, d, a);
  const ChainModule M = ChainModule::plain(q, lambda);
  if (M.element_count() <= full_bound) {
    BigInt count = 0;
    for (const auto& sub : M.enumerate_submodules(full_bound))
      if (M.length_of(sub.card()) == a) ++count;
    return count;
  }
  // Too large to enumerate.  The submodule lattice is self-dual, so the
  // number of length-a submodules equals the number of length-(d-a) ones;
  // when the cheaper side is shallow, grow covers layer by layer.
  const int b = std::min(a, d - a);
  if (M.element_count() <= (uint64_t(1) << 18) && b <= 2)
    return layered_count(M, b);
  // Otherwise sum the closed pivot-structure counts over the possible
  // submodule types.
  BigInt total = 0;
  for (const auto& mu : enumerate_partitions(a, lambda.length()))
    total += type_count_formula(q, lambda, mu);
  return total;
}

BigInt brute_sub_count(int q, const Partition& lambda, int a, uint64_t bound) {
  return count_submodules_of_length(q, lambda, a, bound);
}

IntPoly1 m_factor_at(const BigInt& q0, int epsilon, int t) {
  IntPoly1 out = IntPoly1::constant(1);
  BigInt pw = 1;
  const BigInt eq = epsilon >= 0 ? q0 : -q0;
  for (int i = 0; i < t; ++i) {
    IntPoly1 factor = IntPoly1::constant(1) - IntPoly1::monomial(1, pw);
    out = out * factor;
    pw *= eq;
  }
  return out;
}

IntPoly1 brute_den_split(int q, const Partition& lambda, uint64_t bound) {
  const ChainModule M = ChainModule::plain(q, lambda);
  const auto subs = M.enumerate_submodules(bound);
  const int d = lambda.size();
  IntPoly1 total;
  for (const auto& outer : subs) {
    const int len_outer = M.length_of(outer.card());
    for (const auto& inner : subs) {
      if (inner.card() > outer.card()) continue;
      if (!std::includes(outer.elements.begin(), outer.elements.end(),
                         inner.elements.begin(), inner.elements.end()))
        continue;
      const int len_inner = M.length_of(inner.card());
      const int t = M.t_of_quotient(inner, outer);
      total = total + IntPoly1::monomial(len_inner + (d - len_outer), 1) *
                          m_factor_at(q, +1, t);
    }
  }
  return total;
}

IntPoly1 brute_den_inert(int q, const Partition& lambda, uint64_t bound) {
  const ChainModule M = ChainModule::hermitian(q, lambda);
  const auto subs = M.enumerate_submodules(bound);
  IntPoly1 total;
  for (const auto& sub : subs) {
    if (!M.is_isotropic(sub)) continue;
    const Submodule orth = M.perp(sub);
    const int len = M.length_of(sub.card());
    const int t = M.t_of_quotient(sub, orth);
    total = total + IntPoly1::monomial(2 * len, 1) * m_factor_at(q, -1, t);
  }
  return total;
}

BigInt brute_hall(int q, const Partition& lambda, const Partition& mu,
                  uint64_t bound) {
  const ChainModule M = ChainModule::plain(q, lambda);
  BigInt count = 0;
  for (const auto& sub : M.enumerate_submodules(bound))
    if (M.submodule_type(sub) == mu) ++count;
  return count;
}

}  // namespace df
