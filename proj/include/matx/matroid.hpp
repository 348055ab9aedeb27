// Finite matroids on ground sets of at most 24 labeled elements, stored by
// their explicit basis family as sorted bitmasks.  With n this small every
// derived object (rank function, circuits, minors, duals, connections) is
// computed by direct enumeration, which keeps each construction independently
// checkable against the axioms.

#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "matx/combinatorics.hpp"
#include "matx/error.hpp"

namespace matx {

// A subset of a labeled ground set, bitmask plus universe size.
struct ElementSet {
  mask_t bits = 0;
  int universe = 0;

  ElementSet() = default;
  ElementSet(mask_t b, int u) : bits(b), universe(u) {
    if (u < 0 || u > kMaxGroundSet) throw Error(Errc::TooLarge, "universe size out of range");
    if (b & ~full_mask(u)) throw Error(Errc::BadInput, "set bit beyond universe");
  }
  int size() const { return popcount(bits); }
  bool contains(int e) const { return (bits >> e) & 1u; }
  friend bool operator==(const ElementSet&, const ElementSet&) = default;
};

// Per-matroid lookup tables over all 2^n subsets, built lazily.
struct MatroidTables {
  std::vector<std::uint8_t> rank;   // rank of every subset
  std::vector<std::uint8_t> indep;  // 1 iff independent
};

class Matroid {
 public:
  Matroid() = default;

  // Validating constructor: checks the basis exchange axiom exhaustively and
  // reports a witness triple on failure.
  static Matroid from_bases(std::vector<std::string> labels, std::vector<mask_t> bases);

  // Trusted constructor for internal use; canonicalizes but skips the
  // exchange check (every caller produces a matroid by construction).
  static Matroid from_bases_unchecked(std::vector<std::string> labels, std::vector<mask_t> bases);

  static Matroid uniform(int r, int n);

  // edges as (u, v, edge label); bases are the maximum spanning forests
  static Matroid cycle_matroid(
      const std::vector<std::tuple<std::string, std::string, std::string>>& edges);

  int n() const { return n_; }
  int rank() const { return rank_; }
  mask_t universe() const { return full_mask(n_); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<mask_t>& bases() const { return bases_; }

  bool is_basis(mask_t a) const;
  bool is_independent(mask_t a) const;
  int rank_of(mask_t a) const;

  mask_t loops() const { return loops_; }
  mask_t coloops() const { return coloops_; }

  const std::vector<mask_t>& circuits() const;
  std::vector<mask_t> cocircuits() const;
  std::vector<mask_t> hyperplanes() const;
  std::optional<int> min_cocircuit_size() const;  // nullopt when no cocircuits

  std::vector<mask_t> components() const;
  bool is_connected() const;

  // partition of the non-loop (resp. non-coloop) elements
  std::vector<mask_t> parallel_classes() const;
  std::vector<mask_t> series_classes() const;

  int label_index(const std::string& name) const;  // -1 if absent

  // canonical labeled equality
  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.n_ == b.n_ && a.bases_ == b.bases_ && a.labels_ == b.labels_;
  }

  // label-free canonical key, used for memoization and corpus dedup
  std::string canonical_key() const;

  const MatroidTables& tables() const;

 private:
  std::vector<std::string> labels_;
  std::vector<mask_t> bases_;  // sorted, deduplicated
  int n_ = 0;
  int rank_ = 0;
  mask_t loops_ = 0;
  mask_t coloops_ = 0;

  struct Cache {
    std::once_flag tables_once;
    MatroidTables tables;
    std::once_flag circuits_once;
    std::vector<mask_t> circuits;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();

  void init(std::vector<std::string> labels, std::vector<mask_t> bases);
};

struct PointedMatroid {
  Matroid matroid;
  int basepoint = 0;  // element index; must be neither a loop nor a coloop

  PointedMatroid() = default;
  PointedMatroid(Matroid m, int p);
};

Matroid dual(const Matroid& m);
Matroid deletion(const Matroid& m, mask_t a);
Matroid contraction(const Matroid& m, mask_t a);
Matroid direct_sum(const Matroid& a, const Matroid& b);
Matroid simplification(const Matroid& m);

PointedMatroid parallel_connection(const PointedMatroid& a, const PointedMatroid& b);
PointedMatroid series_connection(const PointedMatroid& a, const PointedMatroid& b);

// adds one element parallel to e (label derived from e's label)
Matroid parallel_add(const Matroid& m, int e);
// replaces e by a series pair; repeated application grows a series class
Matroid series_expand(const Matroid& m, int e);
Matroid free_extension(const Matroid& m);
Matroid free_coextension(const Matroid& m);

// series classes S of a connected matroid with m - S still connected
std::vector<mask_t> regular_series_classes(const Matroid& m);

bool isomorphic(const Matroid& a, const Matroid& b);

// exhaustive exchange-axiom check; on failure returns (B1, B2, x) such that
// no y in B2-B1 makes (B1-x)+y a basis
struct ExchangeWitness {
  mask_t b1 = 0, b2 = 0;
  int x = 0;
};
std::optional<ExchangeWitness> exchange_axiom_witness(const std::vector<mask_t>& bases);

}  // namespace matx
