// Simplicial complexes with an explicit face family (bitmasks over a labeled
// vertex universe), plus the f/h transforms and the short simplicial h-vector
// identities.  Faces are stored in full so links, vertex deletions and
// homology are plain set operations; a configurable cap keeps that honest.

#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "matx/combinatorics.hpp"
#include "matx/error.hpp"
#include "matx/matroid.hpp"

namespace matx {

inline constexpr std::size_t kDefaultFaceCap = std::size_t{1} << 16;

// the two binomial transforms of face enumeration; mutually inverse
Vec h_from_f(const Vec& f);
Vec f_from_h(const Vec& h);

class SimplicialComplex {
 public:
  // downward closure of the given facets; the empty face is always present
  static SimplicialComplex from_facets(std::vector<std::string> vertex_labels,
                                       const std::vector<mask_t>& facets,
                                       std::size_t face_cap = kDefaultFaceCap);

  // explicit face family; validates downward closure
  static SimplicialComplex from_faces(std::vector<std::string> vertex_labels,
                                      std::vector<mask_t> faces,
                                      std::size_t face_cap = kDefaultFaceCap);

  const std::vector<std::string>& vertex_labels() const { return labels_; }
  const std::vector<mask_t>& faces() const { return faces_; }  // sorted ascending
  std::vector<mask_t> facets() const;

  int dim() const { return dim_; }          // -1 for the empty complex
  int r() const { return dim_ + 1; }        // faces of maximal cardinality
  bool pure() const { return pure_; }
  bool contains(mask_t f) const { return face_set_.count(f) != 0; }

  mask_t vertex_set() const { return vertices_; }  // vertices actually present
  int num_vertices() const { return popcount(vertices_); }

  SimplicialComplex link(mask_t f) const;
  SimplicialComplex remove_vertices(mask_t a) const;

  Vec f_vector() const;                     // indexed by cardinality, 0..r
  Vec h_vector() const { return h_from_f(f_vector()); }

 private:
  std::vector<std::string> labels_;
  std::vector<mask_t> faces_;
  std::unordered_set<mask_t> face_set_;
  mask_t vertices_ = 0;
  int dim_ = -1;
  bool pure_ = true;

  void finish(std::size_t face_cap);
};

SimplicialComplex independence_complex(const Matroid& m);

// faces are the subsets containing no broken circuit; `order[k]` is the
// element at position k of the ordering (defaults to label order)
SimplicialComplex broken_circuit_complex(const Matroid& m, const std::vector<int>& order = {},
                                         std::size_t face_cap = kDefaultFaceCap);

// the short simplicial h-vector computed three ways: from the vertex links,
// from the face counts, and from the h-vector of the complex itself; the
// three agree on every pure complex
struct ShortHReport {
  Vec by_links;   // sum over vertices of h_i(lk v), i = 0..r-1
  Vec by_f;       // alternating binomial sum over f
  Vec by_h;       // (i+1) h_{i+1} + (r-i) h_i
  bool consistent() const { return by_links == by_f && by_f == by_h; }
};
ShortHReport short_h(const SimplicialComplex& dx);

// per-index check of  sum_v h_i(dx - v) = (n-i) h_i - (r-i+1) h_{i-1};
// requires dim(dx - v) = dim(dx) for every vertex
struct DeletionSumReport {
  Vec lhs, rhs;  // indexed 0..r
  bool holds() const { return lhs == rhs; }
};
DeletionSumReport deletion_sum_check(const SimplicialComplex& dx);

}  // namespace matx
