#include "matx/homology.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>

#include "matx/bigint.hpp"

#ifdef MATX_HAVE_OPENMP
#include <omp.h>
#endif

namespace matx {

namespace {

struct Int64Overflow {};

// one Bareiss step on checked 64-bit entries; the updated entry is a minor of
// the original matrix, so it can exceed 64 bits even for 0/+-1 inputs
std::int64_t bareiss_update64(std::int64_t a, std::int64_t pivot, std::int64_t b, std::int64_t c,
                              std::int64_t prev) {
  __int128 num = static_cast<__int128>(a) * pivot - static_cast<__int128>(b) * c;
  __int128 q = num / prev;  // exact by Bareiss
  if (q > std::numeric_limits<std::int64_t>::max() || q < std::numeric_limits<std::int64_t>::min())
    throw Int64Overflow{};
  return static_cast<std::int64_t>(q);
}

template <typename T>
int bareiss_rank(std::vector<std::vector<T>> a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  T prev = T{1};
  int rank = 0;
  while (rank < std::min(rows, cols)) {
    int pi = -1, pj = -1;
    for (int i = rank; i < rows && pi < 0; ++i)
      for (int j = rank; j < cols; ++j)
        if (!(a[i][j] == T{0})) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    std::swap(a[rank], a[pi]);
    for (int i = 0; i < rows; ++i) std::swap(a[i][rank], a[i][pj]);
    const T pivot = a[rank][rank];
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = rank + 1; j < cols; ++j) {
        if constexpr (std::is_same_v<T, std::int64_t>) {
          a[i][j] = bareiss_update64(a[i][j], pivot, a[i][rank], a[rank][j], prev);
        } else {
          a[i][j] = BigInt::div_exact(a[i][j] * pivot - a[i][rank] * a[rank][j], prev);
        }
      }
      a[i][rank] = T{0};
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

}  // namespace

int matrix_rank_exact(const std::vector<std::vector<std::int64_t>>& m) {
  try {
    return bareiss_rank<std::int64_t>(m);
  } catch (const Int64Overflow&) {
    std::vector<std::vector<BigInt>> big(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) big[i].assign(m[i].begin(), m[i].end());
    return bareiss_rank<BigInt>(std::move(big));
  }
}

namespace {

// rank of the boundary map from cardinality-c faces to cardinality-(c-1)
// faces; both lists sorted ascending
int boundary_rank(const std::vector<mask_t>& lower, const std::vector<mask_t>& upper) {
  if (lower.empty() || upper.empty()) return 0;
  std::vector<std::vector<std::int64_t>> m(lower.size(),
                                           std::vector<std::int64_t>(upper.size(), 0));
  for (std::size_t col = 0; col < upper.size(); ++col) {
    const mask_t f = upper[col];
    int sign = 1;
    mask_t mm = f;
    while (mm) {
      mask_t bit = mm & (~mm + 1);
      mm ^= bit;
      const mask_t sub = f ^ bit;
      auto it = std::lower_bound(lower.begin(), lower.end(), sub);
      m[it - lower.begin()][col] = sign;
      sign = -sign;
    }
  }
  return matrix_rank_exact(m);
}

std::vector<std::vector<mask_t>> faces_by_cardinality(const SimplicialComplex& dx) {
  std::vector<std::vector<mask_t>> out(dx.r() + 1);
  for (mask_t f : dx.faces()) out[popcount(f)].push_back(f);
  return out;
}

// number of connected components of the 1-skeleton (vertices assumed present)
int skeleton_components(const SimplicialComplex& dx) {
  std::vector<int> parent(kMaxGroundSet);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (mask_t f : dx.faces()) {
    if (popcount(f) != 2) continue;
    int a = lowest_bit(f);
    int b = lowest_bit(f & (f - 1));
    parent[find(a)] = find(b);
  }
  int comps = 0;
  mask_t vs = dx.vertex_set();
  while (vs) {
    mask_t bit = vs & (~vs + 1);
    vs ^= bit;
    if (find(lowest_bit(bit)) == lowest_bit(bit)) ++comps;
  }
  return comps;
}

}  // namespace

BettiVector reduced_homology(const SimplicialComplex& dx) {
  const auto layers = faces_by_cardinality(dx);
  const int top = dx.r();
  std::vector<int> ranks(top + 2, 0);  // ranks[c] = rank of boundary C_c -> C_{c-1}
  for (int c = 1; c <= top; ++c) ranks[c] = boundary_rank(layers[c - 1], layers[c]);
  BettiVector out;
  out.betti.assign(top + 1, 0);
  for (int c = 0; c <= top; ++c)
    out.betti[c] = static_cast<std::int64_t>(layers[c].size()) - ranks[c] - ranks[c + 1];
  return out;
}

namespace {

// reduced homology of `lk` vanishes strictly below its dimension
bool link_acyclic_below_top(const SimplicialComplex& lk) {
  const int d = lk.dim();
  if (d <= 0) return true;  // nothing below dimension 0 but H~_{-1}, and lk has a vertex
  if (skeleton_components(lk) != 1) return false;
  if (d == 1) return true;
  BettiVector b = reduced_homology(lk);
  for (int i = 0; i < d; ++i)
    if (b.at_dim(i) != 0) return false;
  return true;
}

}  // namespace

bool is_cohen_macaulay(const SimplicialComplex& dx) {
  if (!dx.pure()) return false;
  const int r = dx.r();
  if (r == 0) return true;  // the empty complex
  // only faces of cardinality <= r-2 have anything below their link dimension
  std::vector<mask_t> to_check;
  for (mask_t f : dx.faces())
    if (popcount(f) <= r - 2) to_check.push_back(f);
  std::atomic<bool> ok{true};
#ifdef MATX_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) if (to_check.size() > 8)
#endif
  for (std::size_t idx = 0; idx < to_check.size(); ++idx) {
    if (!ok.load(std::memory_order_relaxed)) continue;
    if (!link_acyclic_below_top(dx.link(to_check[idx]))) ok.store(false, std::memory_order_relaxed);
  }
  return ok.load();
}

namespace {

bool kcm_layers(const SimplicialComplex& dx, int k, bool parallel) {
  if (k < 1) throw Error(Errc::BadParams, "k-CM needs k >= 1");
  const int d = dx.dim();
  for (int size = 0; size < k; ++size) {
    const auto subsets = k_subsets_of(dx.vertex_set(), size);
    if (subsets.empty()) continue;  // fewer vertices than the layer size: vacuous
    std::atomic<bool> ok{true};
#ifdef MATX_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel && subsets.size() > 2)
#endif
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      if (!ok.load(std::memory_order_relaxed)) continue;
      SimplicialComplex del = dx.remove_vertices(subsets[i]);
      if (del.dim() != d || !is_cohen_macaulay(del)) ok.store(false, std::memory_order_relaxed);
    }
    if (!ok.load()) return false;
  }
  return true;
}

}  // namespace

bool is_k_cm(const SimplicialComplex& dx, int k) { return kcm_layers(dx, k, true); }

bool is_k_cm_serial(const SimplicialComplex& dx, int k) { return kcm_layers(dx, k, false); }

int kcm_level(const SimplicialComplex& dx, int cap) {
  int level = 0;
  for (int k = 1; k <= cap; ++k) {
    // previous layers already passed, so only the new |A| = k-1 layer matters
    const auto subsets = k_subsets_of(dx.vertex_set(), k - 1);
    if (subsets.empty()) {
      level = k;
      continue;
    }
    std::atomic<bool> ok{true};
#ifdef MATX_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) if (subsets.size() > 2)
#endif
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      if (!ok.load(std::memory_order_relaxed)) continue;
      SimplicialComplex del = dx.remove_vertices(subsets[i]);
      if (del.dim() != dx.dim() || !is_cohen_macaulay(del))
        ok.store(false, std::memory_order_relaxed);
    }
    if (!ok.load()) break;
    level = k;
  }
  return level;
}

}  // namespace matx
