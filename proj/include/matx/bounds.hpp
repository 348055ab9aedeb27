// One checker per h-vector / b-vector inequality and equality family, each
// returning exact left/right values and an equality diagnosis, plus the
// Macaulay operator and the phi estimates the bounds are stated with.
//
// Checkers never throw on an unmet hypothesis: they return a single Skipped
// result naming the failed hypothesis, so corpus sweeps can tell vacuous
// truth from verification.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matx/bigint.hpp"
#include "matx/combinatorics.hpp"
#include "matx/matroid.hpp"

namespace matx {

enum class Verdict { Holds, Equality, Violation, Skipped, BelowThreshold };

const char* verdict_name(Verdict v);

struct CheckResult {
  std::string check;
  int i = -1, j = -1, k = -1;  // indices when applicable, -1 otherwise
  std::string relation;        // "<=", ">=", "=="
  BigInt lhs{0}, rhs{0};
  Verdict verdict = Verdict::Skipped;
  std::string note;

  BigInt slack() const { return (rhs - lhs).abs(); }
};

// h -> h^<i> (greedy binomial decomposition, then shift); 0^<i> = 0
std::int64_t macaulay_power(std::int64_t h, int i);

// h_0 = 1, entries nonnegative, h_{i+1} <= h_i^<i>
bool is_cm_hvector(const Vec& h);

std::int64_t phi(int i, std::int64_t x);  // phi_0 = 1 by convention

// h-vector of the independence complex (loops stripped), via the table-based
// f-counts; the complex module provides the independent second route
Vec matroid_h_vector(const Matroid& m);

// --- k-CM lower bounds ---
std::vector<CheckResult> check_kcm_floor(const Matroid& m, int k);
std::vector<CheckResult> check_relative_kcm(const Matroid& m, int k);
// raw h-vector routes (hypotheses assumed, arithmetic only); these also back
// the exploratory runs on non-matroid complexes
std::vector<CheckResult> check_kcm_floor_h(const Vec& h, int k);
std::vector<CheckResult> check_relative_kcm_h(const Vec& h, std::int64_t n, int k);

// --- broken-circuit (b, w) bounds ---
std::vector<CheckResult> check_brylawski_floor(const Matroid& m);
std::vector<CheckResult> check_eq1(const Matroid& m);
std::vector<CheckResult> check_eqdisc(const Matroid& m);
std::vector<CheckResult> check_w_bound(const Matroid& m);
std::vector<CheckResult> check_eq2(const Matroid& m);
CheckResult check_three_regular_series(const Matroid& m);

// --- independence-complex (h) bounds ---
std::vector<CheckResult> check_g_theorem(const Matroid& m);
std::vector<CheckResult> check_chari(const Matroid& m);
std::vector<CheckResult> check_brown_colbourn(const Matroid& m);
std::vector<CheckResult> check_wagner(const Matroid& m);
std::vector<CheckResult> check_stanley_product(const Matroid& m);
// raw h-vector routes for the same bounds
std::vector<CheckResult> check_g_theorem_h(const Vec& h);
std::vector<CheckResult> check_chari_h(const Vec& h);
std::vector<CheckResult> check_brown_colbourn_h(const Vec& h);
std::vector<CheckResult> check_stanley_product_h(const Vec& h);
std::vector<CheckResult> check_max_h(const Matroid& m);
std::vector<CheckResult> check_ind_by_r(const Matroid& m);
std::vector<CheckResult> check_Ij_bound(const Matroid& m);

// M(r,n,k) = U_{1,n-r-k+2} + U_{r-1,r+k-2} and its closed-form h-vector
Matroid build_Mrnk(int r, int n, int k);
Vec hvec_Mrnk(int r, int n, int k);

// h_i(M) >= h_i(M(r,n,k)); the bound only kicks in for large n and the
// threshold is not constructive, so small-n failures are BelowThreshold,
// never Violation
std::vector<CheckResult> check_long_term(const Matroid& m, int k);
// (r-i+1) h_{i-1} + n h_i(M(r,n-1,k-1)) <= (n-i) h_i, gated the same way
std::vector<CheckResult> check_final_corollary(const Matroid& m, int k);

struct Rank2Minimizer {
  std::vector<int> partition;  // parallel class sizes, largest first
  std::int64_t bases = 0;
};
Rank2Minimizer rank2_minimizer(int n, int k);

// named suites: all, eq1, eq2, kcm, g, chari, bc, wagner, stanley, maxh,
// indr, longterm, bryl, wbound, eqdisc, 3series, ij, seriesnorm
struct SuiteOptions {
  std::vector<int> kcm_ks{2, 3, 4};
  std::vector<int> longterm_ks{3, 4};
  std::vector<int> seriesnorm_is{1, 2};
};
std::vector<CheckResult> run_suite(const Matroid& m, const std::string& suite,
                                   const SuiteOptions& opts = {});
const std::vector<std::string>& suite_names();

}  // namespace matx
