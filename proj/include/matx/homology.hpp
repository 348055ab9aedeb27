// Reduced rational homology via exact integer ranks of boundary matrices
// (Bareiss fraction-free elimination), and the Cohen-Macaulay / k-CM tests
// built on it.  Ranks run on checked 64-bit arithmetic and redo the
// elimination with big integers if a minor overflows.

#pragma once

#include <cstdint>
#include <vector>

#include "matx/complex.hpp"

namespace matx {

// reduced Betti numbers over Q; index i holds dim H~_{i-1}, so b.betti[0] is
// the (-1)-dimensional one (nonzero only for the empty complex)
struct BettiVector {
  std::vector<std::int64_t> betti;
  std::int64_t at_dim(int d) const {
    const int idx = d + 1;
    if (idx < 0 || idx >= static_cast<int>(betti.size())) return 0;
    return betti[idx];
  }
  bool all_zero() const {
    for (auto b : betti)
      if (b) return false;
    return true;
  }
};

BettiVector reduced_homology(const SimplicialComplex& dx);

// exact rank of an integer matrix (rows of equal length)
int matrix_rank_exact(const std::vector<std::vector<std::int64_t>>& m);

// vanishing reduced homology of every face link below its dimension;
// non-pure complexes are never Cohen-Macaulay
bool is_cohen_macaulay(const SimplicialComplex& dx);

// dx - A is Cohen-Macaulay of the same dimension for every |A| < k
bool is_k_cm(const SimplicialComplex& dx, int k);
bool is_k_cm_serial(const SimplicialComplex& dx, int k);  // reference path

// largest k <= cap with dx k-CM (0 if not even CM)
int kcm_level(const SimplicialComplex& dx, int cap);

}  // namespace matx
