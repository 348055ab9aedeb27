#include <doctest.h>

#include <algorithm>
#include <functional>

#include "matx/bounds.hpp"
#include "matx/corpus.hpp"
#include "matx/tutte.hpp"

using matx::BigInt;
using matx::CheckResult;
using matx::Matroid;
using matx::Vec;
using matx::Verdict;

namespace {

bool no_violation(const std::vector<CheckResult>& rs) {
  return std::none_of(rs.begin(), rs.end(),
                      [](const CheckResult& r) { return r.verdict == Verdict::Violation; });
}

bool all_equality(const std::vector<CheckResult>& rs) {
  bool some = false;
  for (const auto& r : rs) {
    if (r.verdict == Verdict::Skipped) continue;
    if (r.verdict != Verdict::Equality) return false;
    some = true;
  }
  return some;
}

// exhaustive search for the Macaulay decomposition of h at level i: strictly
// decreasing a_i > a_{i-1} > ... > a_j >= j >= 1
bool decompose(std::int64_t h, int level, std::int64_t top, std::vector<std::pair<std::int64_t, int>>& parts) {
  if (h == 0) return true;
  if (level < 1) return false;
  for (std::int64_t a = std::min<std::int64_t>(top, h + level); a >= level; --a) {
    const std::int64_t c = matx::binom64(a, level);
    if (c > h || c == 0) continue;
    parts.emplace_back(a, level);
    if (decompose(h - c, level - 1, a - 1, parts)) return true;
    parts.pop_back();
  }
  return false;
}

std::int64_t macaulay_oracle(std::int64_t h, int i) {
  if (h == 0) return 0;
  std::vector<std::pair<std::int64_t, int>> parts;
  REQUIRE(decompose(h, i, h + i, parts));
  std::int64_t out = 0;
  for (auto [a, j] : parts) out += matx::binom64(a + 1, j + 1);
  return out;
}

}  // namespace

TEST_CASE("macaulay operator") {
  CHECK(matx::macaulay_power(2, 1) == 3);
  CHECK(matx::macaulay_power(3, 2) == 4);
  CHECK(matx::macaulay_power(0, 5) == 0);
  for (int i = 1; i <= 4; ++i)
    for (std::int64_t h = 0; h <= 120; ++h)
      CHECK(matx::macaulay_power(h, i) == macaulay_oracle(h, i));
  // monotone in h for fixed i
  for (int i = 1; i <= 8; ++i) {
    std::int64_t prev = 0;
    for (std::int64_t h = 0; h <= 10000; ++h) {
      const std::int64_t cur = matx::macaulay_power(h, i);
      CHECK(cur >= prev);
      prev = cur;
    }
  }
}

TEST_CASE("CM h-vector recognition") {
  CHECK(matx::is_cm_hvector({1, 2, 3}));
  CHECK(!matx::is_cm_hvector({1, 1, 5}));
  CHECK(!matx::is_cm_hvector({2, 1}));
  CHECK(!matx::is_cm_hvector({1, -1}));
  CHECK(matx::is_cm_hvector({1}));
  // every corpus independence and broken-circuit complex is Cohen-Macaulay
  for (const auto& m : {Matroid::uniform(2, 4), matx::theta_graph(), matx::bc_twin_a(),
                        matx::rank2_partition_matroid({2, 2, 1})}) {
    CHECK(matx::is_cm_hvector(matx::matroid_h_vector(m)));
    const auto fam = matx::coefficient_families(m);
    Vec bc_h(fam.b->rbegin(), fam.b->rend());  // h of the BC complex
    CHECK(matx::is_cm_hvector(bc_h));
  }
}

TEST_CASE("phi") {
  for (std::int64_t x = 1; x <= 9; ++x) CHECK(matx::phi(1, x) == 1);
  CHECK(matx::phi(2, 4) == 6);  // C(2,1) + C(4,1)
  CHECK(matx::phi(0, 3) == 0);
  // increasing in i
  for (std::int64_t x = 2; x <= 8; ++x)
    for (int i = 0; i <= 5; ++i) CHECK(matx::phi(i + 1, x) >= matx::phi(i, x));
}

TEST_CASE("k-CM floor (absolute lower bound)") {
  // tight on its witness
  CHECK(all_equality(matx::check_kcm_floor(Matroid::uniform(2, 4), 3)));
  // rank-2 five-point matroid with classes (2,2,1): h = (1,3,4) > (1,2,3)
  const auto m = matx::rank2_partition_matroid({2, 2, 1});
  CHECK(matx::matroid_h_vector(m) == Vec{1, 3, 4});
  const auto rs = matx::check_kcm_floor(m, 3);
  CHECK(no_violation(rs));
  for (const auto& r : rs)
    if (r.i >= 1) CHECK(r.verdict == Verdict::Holds);
  // hypothesis not met: skipped
  CHECK(matx::check_kcm_floor(Matroid::uniform(2, 4), 4)[0].verdict == Verdict::Skipped);
}

TEST_CASE("relative k-CM bound rejects (1,2,3,1) on five points") {
  // (1,2,3,1) with n=5 cannot be the h-vector of a 2-dim 2-CM complex
  const auto rs = matx::check_relative_kcm_h({1, 2, 3, 1}, 5, 2);
  bool violated = false;
  for (const auto& r : rs)
    if (r.verdict == Verdict::Violation) {
      violated = true;
      CHECK(r.i == 3);  // (5-3)*1 < (3-3+1)*3
    }
  CHECK(violated);

  // U_{2,4} at k=3, i=1: equality
  const auto ok = matx::check_relative_kcm(Matroid::uniform(2, 4), 3);
  CHECK(no_violation(ok));
  for (const auto& r : ok)
    if (r.i == 1) CHECK(r.verdict == Verdict::Equality);
}

TEST_CASE("brylawski floor") {
  const auto rs = matx::check_brylawski_floor(matx::theta_graph());
  CHECK(no_violation(rs));
  for (const auto& r : rs)
    if (r.i == 2) {
      CHECK(r.lhs == BigInt{3});
      CHECK(r.rhs == BigInt{2});
    }
  CHECK(matx::check_brylawski_floor(Matroid::uniform(2, 3))[0].verdict == Verdict::Skipped);
  // parallel elements are outside the theorem (counterexample: doubled-edge
  // theta has b_2 = 2 < n - r = 3)
  const auto doubled = Matroid::cycle_matroid({{"u", "w", "e1"}, {"u", "w", "e2"},
                                               {"u", "m1", "e3"}, {"m1", "w", "e4"},
                                               {"u", "m2", "e5"}, {"m2", "w", "e6"}});
  CHECK(matx::check_brylawski_floor(doubled)[0].verdict == Verdict::Skipped);
  CHECK((*matx::coefficient_families(doubled).b)[2] == 2);
  CHECK(matx::check_brylawski_floor(
            direct_sum(Matroid::uniform(1, 2), Matroid::uniform(2, 3)))[0]
            .verdict == Verdict::Skipped);
}

TEST_CASE("eq1 with equality cascade") {
  // U_{2,3} at i=2: equality
  const auto u23 = matx::check_eq1(Matroid::uniform(2, 3));
  CHECK(no_violation(u23));
  for (const auto& r : u23)
    if (r.i == 2) CHECK(r.verdict == Verdict::Equality);

  // theta at i=3: strict
  const auto theta = matx::check_eq1(matx::theta_graph());
  CHECK(no_violation(theta));
  for (const auto& r : theta) {
    if (r.i == 3) {
      CHECK(r.verdict == Verdict::Holds);
      CHECK(r.lhs == BigInt{2});
      CHECK(r.rhs == BigInt{3});
    }
  }

  // the equality family: a (beta+2)-point line with three-point lines
  for (int beta = 1; beta <= 3; ++beta)
    for (int r = 2; r <= 4; ++r) {
      const auto chain = matx::eq1_equality_chain(beta, r);
      CHECK(chain.rank() == r);
      CHECK(matx::beta_invariant(chain) == beta);
      CHECK(all_equality(matx::check_eq1(chain)));
    }

  CHECK(matx::check_eq1(direct_sum(Matroid::uniform(1, 2), Matroid::uniform(1, 2)))[0].verdict ==
        Verdict::Skipped);
}

TEST_CASE("eqdisc for disconnected matroids") {
  const auto m = direct_sum(matx::theta_graph(), Matroid::uniform(2, 3));
  const auto rs = matx::check_eqdisc(m);
  CHECK(no_violation(rs));
  CHECK(rs[0].verdict != Verdict::Skipped);
  CHECK(matx::check_eqdisc(Matroid::uniform(2, 3))[0].verdict == Verdict::Skipped);
}

TEST_CASE("whitney number bound") {
  for (const auto& m : {matx::theta_graph(), Matroid::uniform(2, 4), matx::bc_twin_a()}) {
    const auto rs = matx::check_w_bound(m);
    CHECK(no_violation(rs));
    for (const auto& r : rs)
      if (r.i == 0) CHECK(r.lhs == BigInt{1});
  }
}

TEST_CASE("eq2 and its equality family") {
  CHECK(no_violation(matx::check_eq2(matx::theta_graph())));
  CHECK(no_violation(matx::check_eq2(Matroid::uniform(2, 5))));

  // the equality family: expand every series class of the DUAL of an
  // eq1-equality matroid to cardinality i (the proof bounds b*_j(M~) via eq1
  // on M~*, so tightness is needed on the dual side)
  for (int i = 1; i <= 3; ++i)
    for (int beta = 1; beta <= 3; ++beta) {
      const auto m = matx::eq2_equality_matroid(beta, 2, i);
      const auto rs = matx::check_eq2(m);
      CHECK(no_violation(rs));
      for (const auto& r : rs)
        if (r.i == i) CHECK(r.verdict == Verdict::Equality);
    }

  // no matroid satisfies eq2 equality at every i: strict at the top index
  const auto expanded = matx::eq2_equality_matroid(1, 3, 2);
  const auto rs = matx::check_eq2(expanded);
  bool strict_at_top = false;
  for (const auto& r : rs)
    if (r.i == expanded.rank()) strict_at_top = r.verdict == Verdict::Holds;
  CHECK(strict_at_top);
}

TEST_CASE("three regular series classes") {
  CHECK(matx::check_three_regular_series(matx::theta_graph()).verdict == Verdict::Equality);
  CHECK(matx::check_three_regular_series(Matroid::uniform(3, 4)).verdict == Verdict::Skipped);
  // every connected corpus matroid with >= 2 series classes has >= 3 regular
  for (const auto& m : {Matroid::uniform(2, 4), matx::bc_twin_a(), matx::eq1_equality_chain(2, 3)}) {
    const auto r = matx::check_three_regular_series(m);
    CHECK(r.verdict != Verdict::Violation);
  }
}

TEST_CASE("h-vector inequality sweeps on named instances") {
  const std::vector<Matroid> ms = {
      Matroid::uniform(2, 3),  Matroid::uniform(2, 4), Matroid::uniform(3, 6),
      matx::theta_graph(),     matx::bc_twin_a(),       matx::rank2_partition_matroid({2, 2, 1}),
      matx::indr_equality_matroid(2, 3),
      direct_sum(Matroid::uniform(1, 2), Matroid::uniform(1, 2)),
  };
  for (const auto& m : ms) {
    CHECK(no_violation(matx::check_g_theorem(m)));
    CHECK(no_violation(matx::check_chari(m)));
    CHECK(no_violation(matx::check_brown_colbourn(m)));
    CHECK(no_violation(matx::check_wagner(m)));
    CHECK(no_violation(matx::check_stanley_product(m)));
    CHECK(no_violation(matx::check_max_h(m)));
    CHECK(no_violation(matx::check_ind_by_r(m)));
    CHECK(no_violation(matx::check_Ij_bound(m)));
  }

  // U_{2,3}: Chari chain h_0 <= h_1 <= h_1
  const auto chari = matx::check_chari(Matroid::uniform(2, 3));
  CHECK(no_violation(chari));

  // Wagner boundary case on U_{1,2}: I = (1,2), k=0 gives -2 + 2 = 0
  const auto wag = matx::check_wagner(Matroid::uniform(1, 2));
  for (const auto& r : wag)
    if (r.k == 0) CHECK(r.verdict == Verdict::Equality);

  // coloops skip the section
  CHECK(matx::check_chari(Matroid::uniform(3, 3))[0].verdict == Verdict::Skipped);
}

TEST_CASE("max-h equality is the all-big-series-classes condition") {
  // U_{2,3}: single series class of size 3 > r-i+j = 1 at (i,j) = (2,1)
  const auto rs = matx::check_max_h(Matroid::uniform(2, 3));
  CHECK(no_violation(rs));
  for (const auto& r : rs)
    if (r.i == 2 && r.j == 1) CHECK(r.verdict == Verdict::Equality);
}

TEST_CASE("ind-by-r equality family") {
  // U_{1,2} + U_{1,2}: h = (1,2,1), equality at i=1
  const auto m = matx::indr_equality_matroid(1, 2);
  CHECK(matx::matroid_h_vector(m) == Vec{1, 2, 1});
  const auto rs = matx::check_ind_by_r(m);
  CHECK(no_violation(rs));
  for (const auto& r : rs)
    if (r.i == 1 && r.check == "indr") CHECK(r.verdict == Verdict::Equality);

  for (int hr = 1; hr <= 3; ++hr)
    for (int rr = 2; rr <= 4; ++rr) {
      const auto fam = matx::indr_equality_matroid(hr, rr);
      const Vec h = matx::matroid_h_vector(fam);
      CHECK(h[rr] == hr);
      CHECK(all_equality(matx::check_ind_by_r(fam)));
    }
}

TEST_CASE("M(r,n,k) and the long-term floor") {
  CHECK(matx::hvec_Mrnk(3, 9, 3) == Vec{1, 6, 11, 12});
  CHECK(matx::matroid_h_vector(matx::build_Mrnk(3, 9, 3)) == Vec{1, 6, 11, 12});
  // closed form matches the built matroid across valid parameters,
  // including M(4,12,3)
  for (int r = 2; r <= 4; ++r)
    for (int k = 2; k <= 4; ++k)
      for (int n = r + k - 1; n <= 12; ++n)
        CHECK(matx::hvec_Mrnk(r, n, k) == matx::matroid_h_vector(matx::build_Mrnk(r, n, k)));

  // U_{1,3}^3 is the classic small-n counterexample: h_3 = 8 < 12
  const auto u13cube = direct_sum(direct_sum(Matroid::uniform(1, 3), Matroid::uniform(1, 3)),
                                  Matroid::uniform(1, 3));
  const auto rs = matx::check_long_term(u13cube, 3);
  bool below = false;
  for (const auto& r : rs) {
    CHECK(r.verdict != Verdict::Violation);
    if (r.i == 3) {
      CHECK(r.verdict == Verdict::BelowThreshold);
      CHECK(r.lhs == BigInt{8});
      CHECK(r.rhs == BigInt{12});
      below = true;
    }
  }
  CHECK(below);

  // for large n the floor holds: M(r,n,k) itself is tight
  CHECK(no_violation(matx::check_long_term(matx::build_Mrnk(3, 10, 3), 3)));
  CHECK(matx::check_long_term(matx::theta_graph(), 3)[0].verdict == Verdict::Skipped);
}

TEST_CASE("rank-2 minimizer matches exhaustive partition search") {
  const auto spec_case = matx::rank2_minimizer(5, 3);
  CHECK(spec_case.partition == std::vector<int>{2, 2, 1});
  CHECK(spec_case.bases == 8);
  CHECK(matx::rank2_minimizer(6, 3).partition == std::vector<int>{3, 3});

  for (int n = 2; n <= 10; ++n) {
    for (int k = 1; k <= n - 1; ++k) {
      const auto best = matx::rank2_minimizer(n, k);
      // oracle: enumerate all partitions of n with parts <= n-k (and >= 2
      // parts), minimizing the basis count
      std::int64_t best_bases = -1;
      std::vector<int> stack;
      auto count = [&](const std::vector<int>& parts) {
        std::int64_t c = matx::binom64(n, 2);
        for (int p : parts) c -= matx::binom64(p, 2);
        return c;
      };
      std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
          if (stack.size() >= 2) {
            const std::int64_t c = count(stack);
            if (best_bases < 0 || c < best_bases) best_bases = c;
          }
          return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
          stack.push_back(p);
          rec(remaining - p, p);
          stack.pop_back();
        }
      };
      rec(n, n - k);
      REQUIRE(best_bases >= 0);
      CHECK(best.bases == best_bases);
      // the claimed partition realizes the minimum and respects the cap
      for (int p : best.partition) CHECK(p <= n - k);
      std::int64_t csum = 0;
      for (int p : best.partition) csum += p;
      CHECK(csum == n);
      CHECK(count(best.partition) == best.bases);
    }
  }
}

TEST_CASE("run_suite aggregates and rejects unknown suites") {
  const auto rs = matx::run_suite(matx::theta_graph(), "all");
  CHECK(rs.size() > 40);
  CHECK(no_violation(rs));
  CHECK_THROWS_AS(matx::run_suite(matx::theta_graph(), "nonsense"), matx::Error);
}
