#include "matx/tutte.hpp"

#include <algorithm>
#include <map>
#include <utility>

#ifdef MATX_HAVE_OPENMP
#include <omp.h>
#endif

namespace matx {

namespace {

void check_sum_size(const Matroid& m) {
  if (m.n() > kTutteSumMaxN)
    throw Error(Errc::TooLarge, "corank-nullity enumeration capped at n = " +
                                    std::to_string(kTutteSumMaxN));
}

BivarPoly expand_counts(const CorankNullityCounts& counts) {
  // T = sum_{c,l} N[c][l] (x-1)^c (y-1)^l, expanded with binomials
  BivarPoly t;
  const int cmax = static_cast<int>(counts.size()) - 1;
  for (int c = 0; c <= cmax; ++c) {
    for (int l = 0; l < static_cast<int>(counts[c].size()); ++l) {
      const std::int64_t n_cl = counts[c][l];
      if (n_cl == 0) continue;
      for (int i = 0; i <= c; ++i)
        for (int j = 0; j <= l; ++j) {
          std::int64_t coef = binom64(c, i) * binom64(l, j) * n_cl;
          if ((c - i + l - j) % 2) coef = -coef;
          t.add_to(i, j, BigInt{coef});
        }
    }
  }
  t.trim();
  return t;
}

}  // namespace

CorankNullityCounts corank_nullity_counts_serial(const Matroid& m) {
  check_sum_size(m);
  const auto& t = m.tables();
  const int r = m.rank();
  CorankNullityCounts counts(r + 1, std::vector<std::int64_t>(m.n() - r + 1, 0));
  const std::size_t size = std::size_t{1} << m.n();
  for (std::size_t sub = 0; sub < size; ++sub) {
    const int rk = t.rank[sub];
    ++counts[r - rk][popcount(static_cast<mask_t>(sub)) - rk];
  }
  return counts;
}

namespace {

// index-th n-bit mask with exactly c bits, in increasing numeric order
// (combinatorial number system, colex)
mask_t unrank_combination(std::int64_t index, int n, int c) {
  mask_t out = 0;
  for (int a = n - 1; c > 0; --a) {
    const std::int64_t below = binom64(a, c);
    if (index >= below) {
      out |= mask_t{1} << a;
      index -= below;
      --c;
    }
  }
  return out;
}

// applies fn to every n-bit mask of popcount c; each thread walks its own
// contiguous slice of the colex order, so no index buffers are needed
template <typename F>
void for_each_mask_of_popcount(int n, int c, F&& fn) {
  const std::int64_t total = binom64(n, c);
#ifdef MATX_HAVE_OPENMP
  if (total >= 4096) {
#pragma omp parallel
    {
      const int threads = omp_get_num_threads();
      const int tid = omp_get_thread_num();
      const std::int64_t lo = total * tid / threads;
      const std::int64_t hi = total * (tid + 1) / threads;
      mask_t cur = unrank_combination(lo, n, c);
      for (std::int64_t idx = lo; idx < hi; ++idx) {
        fn(cur);
        cur = next_same_popcount(cur, n);
      }
    }
    return;
  }
#endif
  mask_t cur = c == 0 ? 0 : full_mask(c);
  for (std::int64_t idx = 0; idx < total; ++idx) {
    fn(cur);
    cur = next_same_popcount(cur, n);
  }
}

}  // namespace

CorankNullityCounts corank_nullity_counts_parallel(const Matroid& m) {
  check_sum_size(m);
  const int n = m.n(), r = m.rank();
  const std::size_t size = std::size_t{1} << n;

  std::vector<std::uint8_t> indep(size, 0);
  for (mask_t b : m.bases()) indep[b] = 1;
  for (int c = r - 1; c >= 0; --c) {
    for_each_mask_of_popcount(n, c, [&](mask_t a) {
      mask_t rest = full_mask(n) & ~a;
      while (rest) {
        mask_t bit = rest & (~rest + 1);
        if (indep[a | bit]) {
          indep[a] = 1;
          break;
        }
        rest ^= bit;
      }
    });
  }

  std::vector<std::uint8_t> rank(size, 0);
  for (int c = 1; c <= n; ++c) {
    const std::uint8_t cc = static_cast<std::uint8_t>(c);
    for_each_mask_of_popcount(n, c, [&](mask_t a) {
      if (indep[a]) {
        rank[a] = cc;
        return;
      }
      std::uint8_t best = 0;
      mask_t mm = a;
      while (mm) {
        mask_t bit = mm & (~mm + 1);
        best = std::max(best, rank[a ^ bit]);
        mm ^= bit;
      }
      rank[a] = best;
    });
  }

  CorankNullityCounts counts(r + 1, std::vector<std::int64_t>(n - r + 1, 0));
#ifdef MATX_HAVE_OPENMP
#pragma omp parallel
  {
    CorankNullityCounts local(r + 1, std::vector<std::int64_t>(n - r + 1, 0));
#pragma omp for schedule(static) nowait
    for (std::size_t sub = 0; sub < size; ++sub) {
      const int rk = rank[sub];
      ++local[r - rk][popcount(static_cast<mask_t>(sub)) - rk];
    }
#pragma omp critical
    for (int c = 0; c <= r; ++c)
      for (int l = 0; l <= n - r; ++l) counts[c][l] += local[c][l];
  }
#else
  for (std::size_t sub = 0; sub < size; ++sub) {
    const int rk = rank[sub];
    ++counts[r - rk][popcount(static_cast<mask_t>(sub)) - rk];
  }
#endif
  return counts;
}

BivarPoly tutte_sum_serial(const Matroid& m) { return expand_counts(corank_nullity_counts_serial(m)); }

BivarPoly tutte_sum(const Matroid& m) {
#ifdef MATX_HAVE_OPENMP
  return expand_counts(corank_nullity_counts_parallel(m));
#else
  return tutte_sum_serial(m);
#endif
}

namespace {

// one-element minors that only filter and recompress the basis masks
Matroid delete_noncoloop(const Matroid& m, int e) {
  const mask_t bit = mask_t{1} << e;
  const mask_t low = bit - 1;
  std::vector<mask_t> bases;
  for (mask_t b : m.bases())
    if (!(b & bit)) bases.push_back((b & low) | ((b >> 1) & ~low));
  std::vector<std::string> labels = m.labels();
  labels.erase(labels.begin() + e);
  return Matroid::from_bases_unchecked(std::move(labels), std::move(bases));
}

Matroid contract_nonloop(const Matroid& m, int e) {
  const mask_t bit = mask_t{1} << e;
  const mask_t low = bit - 1;
  std::vector<mask_t> bases;
  for (mask_t b : m.bases())
    if (b & bit) {
      const mask_t without = b ^ bit;
      bases.push_back((without & low) | ((without >> 1) & ~low));
    }
  std::vector<std::string> labels = m.labels();
  labels.erase(labels.begin() + e);
  return Matroid::from_bases_unchecked(std::move(labels), std::move(bases));
}

using MemoKey = std::pair<int, std::vector<mask_t>>;

BivarPoly tutte_dc_rec(const Matroid& m, std::map<MemoKey, BivarPoly>& memo) {
  const mask_t special = m.loops() | m.coloops();
  if (special == m.universe()) {
    BivarPoly base;
    base.add_to(popcount(m.coloops()), popcount(m.loops()), BigInt{1});
    return base;
  }
  MemoKey key{m.n(), m.bases()};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int e = lowest_bit(m.universe() & ~special);
  BivarPoly t = tutte_dc_rec(delete_noncoloop(m, e), memo) +
                tutte_dc_rec(contract_nonloop(m, e), memo);
  memo.emplace(std::move(key), t);
  return t;
}

}  // namespace

BivarPoly tutte_dc(const Matroid& m) {
  std::map<MemoKey, BivarPoly> memo;
  return tutte_dc_rec(m, memo);
}

BivarPoly tutte_polynomial(const Matroid& m) {
  return m.n() <= 14 ? tutte_sum(m) : tutte_dc(m);
}

Vec independent_set_counts(const Matroid& m) {
  const auto& t = m.tables();
  Vec counts(m.rank() + 1, 0);
  const std::size_t size = std::size_t{1} << m.n();
  for (std::size_t sub = 0; sub < size; ++sub)
    if (t.indep[sub]) ++counts[popcount(static_cast<mask_t>(sub))];
  return counts;
}

namespace {

std::int64_t to_i64(const BigInt& v) { return v.to_int64(); }

Vec tutte_h_slice(const BivarPoly& t, int r) {
  // T(x,1) = h_0 x^r + h_1 x^{r-1} + ...
  Vec h(r + 1, 0);
  for (int i = 0; i <= r; ++i) {
    BigInt acc{0};
    for (int j = 0; j <= t.ydeg(); ++j) acc += t.at(r - i, j);
    h[i] = to_i64(acc);
  }
  return h;
}

}  // namespace

CoefficientFamilies coefficient_families(const Matroid& m) {
  const BivarPoly t = tutte_polynomial(m);
  const int r = m.rank();
  const int nr = m.n() - r;
  CoefficientFamilies out;
  out.h = tutte_h_slice(t, r);
  out.beta = to_i64(t.at(1, 0));
  if (!m.loops()) {
    Vec b(r + 1, 0);
    for (int i = 0; i <= r; ++i) b[i] = to_i64(t.at(i, 0));
    Vec w(r + 1, 0);
    for (int i = 0; i <= r; ++i) {
      BigInt acc{0};
      for (int j = 0; j <= r; ++j) acc += BigInt{b[j]} * binom_big(j, r - i);
      w[i] = to_i64(acc);
    }
    out.b = std::move(b);
    out.w = std::move(w);
  }
  if (!m.coloops()) {
    Vec bs(nr + 1, 0);
    for (int i = 0; i <= nr; ++i) bs[i] = to_i64(t.at(0, i));
    out.b_star = std::move(bs);
  }
  return out;
}

IntPoly characteristic_polynomial(const Matroid& m) {
  if (m.loops())
    throw Error(Errc::HasLoops, "characteristic polynomial needs a loopless matroid");
  const auto fam = coefficient_families(m);
  const int r = m.rank();
  IntPoly p;
  // p(x) = sum_i (-1)^i w_i x^{r-i}
  for (int i = 0; i <= r; ++i) {
    BigInt coef{(*fam.w)[i]};
    if (i % 2) coef = -coef;
    p.add_to(r - i, coef);
  }
  return p;
}

std::int64_t beta_invariant(const Matroid& m) {
  return to_i64(tutte_polynomial(m).at(1, 0));
}

IntPoly reliability_polynomial(const Matroid& m) {
  // h_i(M*) from the T(1,y) slice: T(M*;x,1) = T(M;1,x); coloops (bridges)
  // contribute (1-p) factors and need no special casing
  const BivarPoly t = tutte_polynomial(m);
  const int r = m.rank();
  const int nr = m.n() - r;
  Vec hs(nr + 1, 0);
  for (int i = 0; i <= nr; ++i) {
    BigInt acc{0};
    for (int a = 0; a <= t.xdeg(); ++a) acc += t.at(a, nr - i);
    hs[i] = to_i64(acc);
  }
  // R(p) = (1-p)^r sum_i hs[i] p^i
  IntPoly base;
  for (int i = 0; i <= nr; ++i) base.add_to(i, BigInt{hs[i]});
  IntPoly out;
  for (int k = 0; k <= r; ++k) {
    BigInt coef = binom_big(r, k);
    if (k % 2) coef = -coef;
    for (int i = 0; i <= base.degree(); ++i) out.add_to(i + k, coef * base.at(i));
  }
  return out;
}

SeriesNormalizationReport series_normalization_check(const Matroid& m, int i) {
  if (i < 1) throw Error(Errc::BadParams, "series normalization needs i >= 1");
  if (!m.is_connected())
    throw Error(Errc::NotConnected, "series normalization needs a connected matroid");

  // normalize every series class to cardinality exactly i, one element at a
  // time (classes are recomputed after each step since indices shift)
  Matroid cur = m;
  const int max_steps = 8 * kMaxGroundSet * std::max(i, 1);
  int steps = 0;
  while (true) {
    if (++steps > max_steps)
      throw Error(Errc::PreconditionUnreachable, "series normalization did not converge");
    bool dirty = false;
    for (mask_t cls : cur.series_classes()) {
      const int size = popcount(cls);
      if (size > i) {
        cur = contraction(cur, mask_t{1} << lowest_bit(cls));
        dirty = true;
        break;
      }
      if (size < i) {
        if (cur.n() + 1 > kMaxGroundSet)
          throw Error(Errc::PreconditionUnreachable,
                      "series normalization exceeds the ground set cap");
        cur = series_expand(cur, lowest_bit(cls));
        dirty = true;
        break;
      }
    }
    if (!dirty) break;
  }

  // the identity needs beta(M~) = beta(M~*), which holds only when M~ has at
  // least two elements; a circuit (single series class) reduces to eq1
  if (cur.series_classes().size() < 2)
    throw Error(Errc::PreconditionUnreachable,
                "series normalization identity needs at least two series classes");

  // contract every series class down to a single representative
  mask_t drop = 0;
  for (mask_t cls : cur.series_classes()) drop |= cls & ~(mask_t{1} << lowest_bit(cls));
  Matroid tilde = drop ? contraction(cur, drop) : cur;

  SeriesNormalizationReport rep;
  const BivarPoly tc = tutte_sum(cur);
  const BivarPoly tt = tutte_sum(tilde);
  rep.lhs = tc.at(i, 0);
  const int nr = cur.n() - cur.rank();
  BigInt rhs{0};
  for (int j = 1; j <= i; ++j) rhs += binom_big(nr + i - j - 1, i - j) * tt.at(0, j);
  rep.rhs = rhs;
  rep.equal = rep.lhs == rep.rhs;
  rep.normalized = std::move(cur);
  rep.contracted = std::move(tilde);
  return rep;
}

}  // namespace matx
