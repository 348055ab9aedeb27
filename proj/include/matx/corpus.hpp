// Deterministic corpus of test matroids: named showcase instances,
// parametric families, a small-graph catalog, seeded random multigraphs, and
// closure under the standard constructions.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matx/matroid.hpp"

namespace matx {

struct Tags {
  int n = 0;
  int rank = 0;
  int components = 0;
  bool connected = false;
  bool loopless = false;
  bool coloop_free = false;
  std::optional<int> min_cocircuit;  // nullopt: no cocircuits at all
  int kcm_level = 0;                 // of the independence complex (hyperplane criterion)
  friend bool operator==(const Tags&, const Tags&) = default;
};

Tags compute_tags(const Matroid& m);

struct Instance {
  std::string id;
  Matroid matroid;
  std::string provenance;
  Tags tags;
};

struct CorpusSpec {
  std::uint64_t seed = 42;
  int max_n = 9;
  int closure_depth = 1;
  std::vector<std::string> families;  // empty: all of named|uniform|graph|random
};

// the named instances exercised throughout the suites
std::vector<Instance> named_instances();

// deterministic: the same spec yields byte-identical ids and matroids
std::vector<Instance> generate(const CorpusSpec& spec);

// --- named constructions ---

Matroid theta_graph();  // three internally disjoint paths of length 2

// bases of all triples of e1..e6 except {e1,e2,e3} and {e4,e5,e6}
Matroid bc_twin_a();
// bases of all triples except {e1,e2,e3} and {e1,e5,e6}
Matroid bc_twin_b();

// rank-2 loopless matroid with the given parallel class sizes
Matroid rank2_partition_matroid(const std::vector<int>& class_sizes);

// parallel connection of a (beta+2)-point line and r-2 three-point lines at a
// common basepoint; satisfies eq1 with equality at every index
Matroid eq1_equality_chain(int beta, int r);

// U_{1,hr+1} + U_{1,2}^{r-1}; satisfies ind-by-r with equality
Matroid indr_equality_matroid(int hr, int r);

// dual of an eq1-equality chain of rank x, with every series class expanded
// to cardinality `size`; satisfies eq2 with equality at index `size` and has
// n - r = x, b_1 = beta
Matroid eq2_equality_matroid(int beta, int x, int size);

// every series class grown to cardinality exactly `size`
Matroid expand_all_series_classes(const Matroid& m, int size);

}  // namespace matx
