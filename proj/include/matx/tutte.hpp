// Tutte polynomial by two independent algorithms, the coefficient families
// read off its boundary slices, and the characteristic / reliability
// polynomials.
//
// tutte_sum is the corank-nullity enumeration over all 2^n subsets; the hot
// kernel (rank table + counting sweep) has an OpenMP implementation with the
// serial path kept as the testing reference.  tutte_dc is the memoized
// deletion-contraction recursion; the two must agree coefficientwise.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matx/combinatorics.hpp"
#include "matx/matroid.hpp"
#include "matx/poly.hpp"

namespace matx {

inline constexpr int kTutteSumMaxN = 20;

// counts[c][l] = number of subsets with corank c and nullity l
using CorankNullityCounts = std::vector<std::vector<std::int64_t>>;
CorankNullityCounts corank_nullity_counts_serial(const Matroid& m);
CorankNullityCounts corank_nullity_counts_parallel(const Matroid& m);

BivarPoly tutte_sum(const Matroid& m);         // parallel kernel when available
BivarPoly tutte_sum_serial(const Matroid& m);  // reference path
BivarPoly tutte_dc(const Matroid& m);
// tutte_sum below the enumeration cap, tutte_dc above it
BivarPoly tutte_polynomial(const Matroid& m);

// number of independent subsets by cardinality (the f-vector of the
// independence complex, computed without building the complex)
Vec independent_set_counts(const Matroid& m);

struct CoefficientFamilies {
  Vec h;                        // T(x,1) slice, h_i at x^{r-i}
  std::optional<Vec> b;         // T(x,0) slice; needs a loopless matroid
  std::optional<Vec> b_star;    // T(0,y) slice; needs a coloop-free matroid
  std::optional<Vec> w;         // unsigned characteristic coefficients
  std::int64_t beta = 0;        // b_1
};
CoefficientFamilies coefficient_families(const Matroid& m);

IntPoly characteristic_polynomial(const Matroid& m);  // (-1)^r T(M; 1-x, 0)
std::int64_t beta_invariant(const Matroid& m);

// R(p) = (1-p)^r * sum_i h_i(M*) p^i; needs a coloop-free matroid
IntPoly reliability_polynomial(const Matroid& m);

// checks b_i(M') = sum_{j=1..i} C(n-r+i-j-1, i-j) b*_j(M~) where M' is M with
// every series class normalized to cardinality i and M~ is M' with every
// series class contracted to a point
struct SeriesNormalizationReport {
  Matroid normalized;
  Matroid contracted;
  BigInt lhs, rhs;
  bool equal = false;
};
SeriesNormalizationReport series_normalization_check(const Matroid& m, int i);

}  // namespace matx
