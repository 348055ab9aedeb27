#include <doctest.h>

#include <algorithm>
#include <set>

#include "matx/complex.hpp"
#include "matx/corpus.hpp"

using matx::broken_circuit_complex;
using matx::f_from_h;
using matx::h_from_f;
using matx::independence_complex;
using matx::mask_t;
using matx::Matroid;
using matx::SimplicialComplex;
using matx::Vec;

namespace {

std::set<mask_t> face_set(const SimplicialComplex& dx) {
  return {dx.faces().begin(), dx.faces().end()};
}

struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
};

}  // namespace

TEST_CASE("independence complex basics") {
  const auto dx = independence_complex(Matroid::uniform(2, 3));
  CHECK(dx.dim() == 1);
  CHECK(dx.pure());
  CHECK(dx.faces().size() == 7);  // boundary of a triangle
  CHECK(dx.f_vector() == Vec{1, 3, 3});

  // loops are not vertices
  const auto loopy = independence_complex(Matroid::uniform(0, 3));
  CHECK(loopy.num_vertices() == 0);
  CHECK(loopy.dim() == -1);
  CHECK(loopy.f_vector() == Vec{1});
}

TEST_CASE("link and deletion match minors") {
  const auto m = matx::theta_graph();
  const int e = m.n() - 1;  // highest index keeps bit positions aligned
  const mask_t bit = mask_t{1} << e;
  const auto dx = independence_complex(m);

  CHECK(face_set(dx.link(bit)) == face_set(independence_complex(contraction(m, bit))));
  CHECK(face_set(dx.remove_vertices(bit)) == face_set(independence_complex(deletion(m, bit))));
}

TEST_CASE("f/h transforms") {
  CHECK(h_from_f(Vec{1, 4, 6}) == Vec{1, 2, 3});
  CHECK(f_from_h(Vec{1, 2, 3}) == Vec{1, 4, 6});

  const auto cube = direct_sum(direct_sum(Matroid::uniform(1, 3), Matroid::uniform(1, 3)),
                               Matroid::uniform(1, 3));
  CHECK(independence_complex(cube).h_vector() == Vec{1, 6, 12, 8});

  // mutual inverses on arbitrary integer vectors
  SplitMix64 rng{99};
  for (int trial = 0; trial < 200; ++trial) {
    Vec v(1 + rng.next() % 8);
    for (auto& x : v) x = static_cast<std::int64_t>(rng.next() % 2001) - 1000;
    CHECK(h_from_f(f_from_h(v)) == v);
    CHECK(f_from_h(h_from_f(v)) == v);
  }
}

TEST_CASE("broken circuit complexes") {
  const auto theta = matx::theta_graph();
  const auto bc = broken_circuit_complex(theta);
  CHECK(bc.dim() == theta.rank() - 1);
  CHECK(bc.pure());
  CHECK(bc.h_vector() == Vec{1, 2, 3, 1, 0});

  // cone on the order-least element
  mask_t least = 1;
  for (mask_t f : bc.facets()) CHECK((f & least) == least);

  // cone h-vector equals the h-vector of its base
  const auto base = bc.remove_vertices(least);
  const Vec hb = base.h_vector();
  const Vec hc = bc.h_vector();
  REQUIRE(hb.size() + 1 == hc.size());
  for (std::size_t i = 0; i < hb.size(); ++i) CHECK(hb[i] == hc[i]);
  CHECK(hc.back() == 0);

  // M1 and M2 have identical broken circuit complexes but are not isomorphic
  CHECK(face_set(broken_circuit_complex(matx::bc_twin_a())) ==
        face_set(broken_circuit_complex(matx::bc_twin_b())));

  CHECK_THROWS_AS(broken_circuit_complex(Matroid::uniform(0, 2)), matx::Error);
}

TEST_CASE("broken circuit f-vector is ordering independent") {
  const auto u24 = Matroid::uniform(2, 4);
  std::vector<int> order{0, 1, 2, 3};
  const Vec reference = broken_circuit_complex(u24, order).f_vector();
  int count = 0;
  do {
    CHECK(broken_circuit_complex(u24, order).f_vector() == reference);
    ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  CHECK(count == 24);

  // different orderings can produce different complexes, same counts
  const auto m = matx::bc_twin_a();
  std::vector<int> rev{5, 4, 3, 2, 1, 0};
  CHECK(broken_circuit_complex(m).f_vector() == broken_circuit_complex(m, rev).f_vector());
}

TEST_CASE("deletion-contraction of h-vectors at the complex level") {
  for (const auto& m : {matx::theta_graph(), Matroid::uniform(3, 6), matx::bc_twin_a()}) {
    const mask_t avail = m.universe() & ~(m.loops() | m.coloops());
    REQUIRE(avail != 0);
    const int e = matx::lowest_bit(avail);
    const mask_t bit = mask_t{1} << e;
    const Vec h = independence_complex(m).h_vector();
    const Vec hdel = independence_complex(deletion(m, bit)).h_vector();
    const Vec hcon = independence_complex(contraction(m, bit)).h_vector();
    for (std::size_t i = 0; i < h.size(); ++i) {
      const std::int64_t del = i < hdel.size() ? hdel[i] : 0;
      const std::int64_t con = i >= 1 && i - 1 < hcon.size() ? hcon[i - 1] : 0;
      CHECK(h[i] == del + con);
    }
  }
}

TEST_CASE("short simplicial h-vector three ways") {
  // boundary of the triangle: links are two points, h(lk) = (1,1)
  const auto dx = independence_complex(Matroid::uniform(2, 3));
  const auto rep = matx::short_h(dx);
  CHECK(rep.by_links == Vec{3, 3});
  CHECK(rep.consistent());

  // three isolated points
  const auto pts = independence_complex(Matroid::uniform(1, 3));
  const auto rep2 = matx::short_h(pts);
  CHECK(rep2.by_links == Vec{3});
  CHECK(rep2.consistent());

  // vertex-transitive: n divides i h_i + (r-i+1) h_{i-1}
  for (const auto& m : {Matroid::uniform(2, 4), Matroid::uniform(3, 5), Matroid::uniform(2, 6)}) {
    const auto c = independence_complex(m);
    const Vec h = c.h_vector();
    const int r = c.r();
    for (int i = 1; i <= r; ++i) {
      const std::int64_t value = i * h[i] + (r - i + 1) * h[i - 1];
      CHECK(value % m.n() == 0);
    }
    CHECK(matx::short_h(c).consistent());
  }
}

TEST_CASE("vertex deletion sum identity") {
  const auto dx = independence_complex(Matroid::uniform(2, 4));
  const auto rep = matx::deletion_sum_check(dx);
  CHECK(rep.holds());
  CHECK(rep.lhs[0] == 4);  // i=0 row sums n copies of h_0
  CHECK(rep.lhs[1] == 4);  // four copies of h_1(U_{2,3}) = 1

  // an edge next to a triangle loses dimension when a triangle vertex goes
  const auto bad = SimplicialComplex::from_facets({"a", "b", "c", "d", "e"},
                                                  {0b00011, 0b11100});
  CHECK_THROWS_AS(matx::deletion_sum_check(bad), matx::Error);

  // cones fail the precondition at the cone point (removing it drops dim)
  const auto bc = broken_circuit_complex(matx::theta_graph());
  CHECK_THROWS_AS(matx::deletion_sum_check(bc), matx::Error);

  // the identity holds on every independence complex without coloops
  for (const auto& m : {matx::theta_graph(), Matroid::uniform(3, 5)})
    CHECK(matx::deletion_sum_check(independence_complex(m)).holds());
}

TEST_CASE("degenerate complexes behave") {
  // the rank-0 independence complex is just the empty face
  const auto dx = independence_complex(Matroid::uniform(0, 2));
  CHECK(dx.dim() == -1);
  CHECK(dx.num_vertices() == 0);
  const auto sh = matx::short_h(dx);
  CHECK(sh.by_links.empty());
  CHECK(sh.consistent());
  CHECK(matx::deletion_sum_check(dx).holds());

  // the independence complex of a moderately large uniform matroid blows the
  // default face cap
  CHECK_THROWS_AS(independence_complex(Matroid::uniform(10, 20)), matx::Error);
}

TEST_CASE("explicit face families validate closure") {
  CHECK_THROWS_AS(SimplicialComplex::from_faces({"a", "b"}, {0b11}), matx::Error);
  CHECK_THROWS_AS(SimplicialComplex::from_faces({"a"}, {}), matx::Error);
  const auto dx = SimplicialComplex::from_faces({"a", "b"}, {0, 0b01, 0b10, 0b11});
  CHECK(dx.dim() == 1);
  CHECK(dx.pure());
  // face cap enforced
  CHECK_THROWS_AS(SimplicialComplex::from_facets({"a", "b", "c"}, {0b111}, 4), matx::Error);
}
