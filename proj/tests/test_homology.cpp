#include <doctest.h>


#include <array>
#include "matx/corpus.hpp"
#include "matx/homology.hpp"

using matx::independence_complex;
using matx::Matroid;
using matx::SimplicialComplex;

TEST_CASE("reduced homology of small complexes") {
  // boundary of a triangle: a circle
  const auto circle = independence_complex(Matroid::uniform(2, 3));
  const auto b1 = matx::reduced_homology(circle);
  CHECK(b1.at_dim(-1) == 0);
  CHECK(b1.at_dim(0) == 0);
  CHECK(b1.at_dim(1) == 1);

  // solid triangle: contractible
  const auto solid = SimplicialComplex::from_facets({"a", "b", "c"}, {0b111});
  CHECK(matx::reduced_homology(solid).all_zero());

  // three points
  const auto pts = independence_complex(Matroid::uniform(1, 3));
  CHECK(matx::reduced_homology(pts).at_dim(0) == 2);

  // boundary of the tetrahedron: a 2-sphere
  const auto sphere = independence_complex(Matroid::uniform(3, 4));
  const auto bs = matx::reduced_homology(sphere);
  CHECK(bs.at_dim(0) == 0);
  CHECK(bs.at_dim(1) == 0);
  CHECK(bs.at_dim(2) == 1);

  // the empty complex has reduced homology only in dimension -1
  const auto empty = SimplicialComplex::from_facets({"a"}, {});
  CHECK(matx::reduced_homology(empty).at_dim(-1) == 1);
}

TEST_CASE("exact matrix rank") {
  CHECK(matx::matrix_rank_exact({{1, 0}, {0, 1}}) == 2);
  CHECK(matx::matrix_rank_exact({{0, 0}, {0, 0}}) == 0);
  CHECK(matx::matrix_rank_exact({{1, 2, 3}, {2, 4, 6}, {1, 1, 1}}) == 2);
  // Vandermonde with large nodes forces the big-integer fallback (the
  // Bareiss pivots are products of node differences times huge powers)
  std::vector<std::vector<std::int64_t>> vand(6, std::vector<std::int64_t>(6));
  for (int i = 0; i < 6; ++i) {
    std::int64_t p = 1;
    for (int j = 0; j < 6; ++j) {
      vand[i][j] = p;
      p *= 1000 + i;
    }
  }
  CHECK(matx::matrix_rank_exact(vand) == 6);
  vand[5] = vand[0];  // duplicated row drops the rank by one
  CHECK(matx::matrix_rank_exact(vand) == 5);
}

TEST_CASE("closed surfaces via rational homology") {
  // 7-vertex torus: orbits of {0,1,3} and {0,2,3} under i -> i+1 (mod 7)
  std::vector<matx::mask_t> torus_facets;
  for (int i = 0; i < 7; ++i) {
    auto tri = [i](int a, int b, int c) {
      return (matx::mask_t{1} << ((i + a) % 7)) | (matx::mask_t{1} << ((i + b) % 7)) |
             (matx::mask_t{1} << ((i + c) % 7));
    };
    torus_facets.push_back(tri(0, 1, 3));
    torus_facets.push_back(tri(0, 2, 3));
  }
  const auto torus = SimplicialComplex::from_facets(
      {"v0", "v1", "v2", "v3", "v4", "v5", "v6"}, torus_facets);
  // sanity of the face list itself: closed surface on the K7 skeleton
  auto f = torus.f_vector();
  REQUIRE(f == matx::Vec{1, 7, 21, 14});
  const auto tb = matx::reduced_homology(torus);
  CHECK(tb.at_dim(0) == 0);
  CHECK(tb.at_dim(1) == 2);
  CHECK(tb.at_dim(2) == 1);
  CHECK(!matx::is_cohen_macaulay(torus));  // H~_1 lives below the top dimension

  // 6-vertex projective plane (icosahedron quotient): Q-acyclic
  const std::vector<std::array<int, 3>> rp2_tris = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5},
                                                    {0, 1, 5}, {1, 2, 4}, {2, 3, 5}, {3, 4, 1},
                                                    {4, 5, 2}, {5, 1, 3}};
  std::vector<matx::mask_t> rp2_facets;
  for (auto [a, b, c] : rp2_tris)
    rp2_facets.push_back((matx::mask_t{1} << a) | (matx::mask_t{1} << b) | (matx::mask_t{1} << c));
  const auto rp2 = SimplicialComplex::from_facets({"v0", "v1", "v2", "v3", "v4", "v5"}, rp2_facets);
  REQUIRE(rp2.f_vector() == matx::Vec{1, 6, 15, 10});
  CHECK(matx::reduced_homology(rp2).all_zero());
  // a Q-acyclic closed surface has Cohen-Macaulay links over Q
  CHECK(matx::is_cohen_macaulay(rp2));
}

TEST_CASE("Euler-Poincare identity ties Betti numbers to face counts") {
  // sum_c (-1)^c f_c = sum_d (-1)^{d+1} betti_d over the reduced complex
  std::vector<SimplicialComplex> samples;
  for (const auto& m : {Matroid::uniform(2, 5), Matroid::uniform(3, 6), matx::theta_graph(),
                        matx::bc_twin_b(), matx::rank2_partition_matroid({3, 2, 2})})
    samples.push_back(independence_complex(m));
  samples.push_back(matx::broken_circuit_complex(matx::theta_graph()).remove_vertices(1));
  for (const auto& dx : samples) {
    const auto f = dx.f_vector();
    std::int64_t euler = 0;
    for (std::size_t c = 0; c < f.size(); ++c) euler += (c % 2 == 0 ? f[c] : -f[c]);
    const auto betti = matx::reduced_homology(dx);
    std::int64_t alt = 0;
    for (int d = -1; d <= dx.dim(); ++d)
      alt += ((d + 1) % 2 == 0 ? betti.at_dim(d) : -betti.at_dim(d));
    CHECK(euler == alt);
  }
}

TEST_CASE("Cohen-Macaulay checks") {
  CHECK(matx::is_cohen_macaulay(independence_complex(Matroid::uniform(2, 4))));
  CHECK(matx::is_cohen_macaulay(matx::broken_circuit_complex(matx::theta_graph())));
  CHECK(matx::is_cohen_macaulay(independence_complex(matx::bc_twin_a())));

  // non-pure complexes are not Cohen-Macaulay
  const auto bad = SimplicialComplex::from_facets({"a", "b", "c", "d", "e"},
                                                  {0b00011, 0b11100});
  CHECK(!matx::is_cohen_macaulay(bad));

  // two disjoint edges: pure but disconnected, so H~_0 != 0
  const auto disc = SimplicialComplex::from_facets({"a", "b", "c", "d"}, {0b0011, 0b1100});
  CHECK(!matx::is_cohen_macaulay(disc));
}

TEST_CASE("k-CM matches the cocircuit criterion") {
  for (const auto& m : {Matroid::uniform(2, 4), Matroid::uniform(2, 5), Matroid::uniform(3, 5),
                        matx::theta_graph(), matx::rank2_partition_matroid({2, 2, 1})}) {
    const auto dx = independence_complex(m);
    const int crit = m.min_cocircuit_size().value();
    for (int k = 1; k <= 4; ++k) {
      CHECK(matx::is_k_cm(dx, k) == (crit >= k));
      CHECK(matx::is_k_cm_serial(dx, k) == (crit >= k));
    }
    CHECK(matx::kcm_level(dx, 4) == std::min(crit, 4));
  }
}

TEST_CASE("broken circuit complexes are cones, hence only 1-CM") {
  const auto bc = matx::broken_circuit_complex(matx::theta_graph());
  CHECK(matx::is_k_cm(bc, 1));
  CHECK(!matx::is_k_cm(bc, 2));

  // removing the cone point can leave a complex that is still only 1-CM
  const auto base = bc.remove_vertices(1);
  CHECK(matx::is_cohen_macaulay(base));
  CHECK(!matx::is_k_cm(base, 2));
}
