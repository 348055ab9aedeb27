#include "matx/bounds.hpp"

#include <algorithm>

#include "matx/complex.hpp"
#include "matx/tutte.hpp"

namespace matx {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Equality: return "equality";
    case Verdict::Violation: return "VIOLATION";
    case Verdict::Skipped: return "skipped";
    case Verdict::BelowThreshold: return "EXPECTED-BELOW-THRESHOLD";
  }
  return "unknown";
}

std::int64_t macaulay_power(std::int64_t h, int i) {
  if (h < 0 || i < 1) throw Error(Errc::BadParams, "macaulay_power needs h >= 0, i >= 1");
  if (h == 0) return 0;
  std::int64_t rem = h, out = 0;
  int ii = i;
  while (rem > 0) {
    if (ii < 1) throw std::logic_error("macaulay decomposition failed");
    std::int64_t a = ii;
    while (binom64(a + 1, ii) <= rem) ++a;
    out += binom64(a + 1, ii + 1);
    rem -= binom64(a, ii);
    --ii;
  }
  return out;
}

bool is_cm_hvector(const Vec& h) {
  if (h.empty() || h[0] != 1) return false;
  for (auto v : h)
    if (v < 0) return false;
  for (int i = 1; i + 1 < static_cast<int>(h.size()); ++i)
    if (h[i + 1] > macaulay_power(h[i], i)) return false;
  return true;
}

std::int64_t phi(int i, std::int64_t x) {
  if (i < 0) throw Error(Errc::BadParams, "phi needs i >= 0");
  // phi_0 = 0: in the eq2 expansion the phi_{i-1} block at i=1 is the empty
  // sum (its binomials carry C(x-2, -1) = 0), so the i=1 bound is b_1 <= b_1
  if (i == 0) return 0;
  std::int64_t sum = 0;
  for (int t = 0; t <= i - 1; ++t) sum += binom64(x - 2, i - 1 - t) * binom64(x + t - 1, t);
  return sum;
}

namespace {

// the h-based checks live on the independence complex, whose vertices are
// the non-loop elements; stripping loops first keeps n and the series
// classes consistent with the complex
Matroid strip_loops(const Matroid& m) {
  if (!m.loops()) return m;
  if (m.loops() == m.universe()) return Matroid::from_bases_unchecked({}, {0});
  return deletion(m, m.loops());
}

std::int64_t at(const Vec& v, int i) {
  return i >= 0 && i < static_cast<int>(v.size()) ? v[i] : 0;
}

CheckResult skipped(std::string check, std::string why) {
  CheckResult r;
  r.check = std::move(check);
  r.verdict = Verdict::Skipped;
  r.note = std::move(why);
  return r;
}

CheckResult le_result(std::string check, int i, BigInt lhs, BigInt rhs) {
  CheckResult r;
  r.check = std::move(check);
  r.i = i;
  r.relation = "<=";
  r.verdict = lhs < rhs ? Verdict::Holds : (lhs == rhs ? Verdict::Equality : Verdict::Violation);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

CheckResult ge_result(std::string check, int i, BigInt lhs, BigInt rhs) {
  CheckResult r;
  r.check = std::move(check);
  r.i = i;
  r.relation = ">=";
  r.verdict = lhs > rhs ? Verdict::Holds : (lhs == rhs ? Verdict::Equality : Verdict::Violation);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

// equality indices must form a prefix of the index range (equality at i
// forces equality at every smaller index); the boundary index where the
// binomial in front of the leading term vanishes is always an equality and
// carries no information, so callers pass the largest meaningful index
void assert_cascade(std::vector<CheckResult>& out, const std::string& check, int max_i) {
  int last_equality = -1, first_strict = -1;
  for (const auto& r : out) {
    if (r.i > max_i) continue;
    if (r.verdict == Verdict::Equality) last_equality = std::max(last_equality, r.i);
    if (r.verdict == Verdict::Holds && (first_strict == -1 || r.i < first_strict)) first_strict = r.i;
  }
  if (last_equality >= 0 && first_strict >= 0 && first_strict < last_equality) {
    CheckResult r;
    r.check = check + ".cascade";
    r.i = last_equality;
    r.relation = "==";
    r.verdict = Verdict::Violation;
    r.note = "equality at i=" + std::to_string(last_equality) +
             " but strict inequality at i=" + std::to_string(first_strict);
    out.push_back(std::move(r));
  }
}

}  // namespace

Vec matroid_h_vector(const Matroid& m) { return h_from_f(independent_set_counts(m)); }

// ------------------------------------------------------- k-CM lower bounds

std::vector<CheckResult> check_kcm_floor_h(const Vec& h, int k) {
  if (k < 1) throw Error(Errc::BadParams, "k-CM floor needs k >= 1");
  const int r = static_cast<int>(h.size()) - 1;
  const Vec floor = r >= 0 ? matroid_h_vector(Matroid::uniform(r, r + k - 1)) : Vec{};
  std::vector<CheckResult> out;
  for (int i = 0; i <= r; ++i) {
    auto res = ge_result("kcm_floor", i, BigInt{at(h, i)}, BigInt{at(floor, i)});
    res.k = k;
    out.push_back(std::move(res));
  }
  return out;
}

std::vector<CheckResult> check_kcm_floor(const Matroid& m, int k) {
  if (k < 1) throw Error(Errc::BadParams, "k-CM floor needs k >= 1");
  auto mc = m.min_cocircuit_size();
  if (mc && *mc < k) return {skipped("kcm_floor", "independence complex is not " + std::to_string(k) + "-CM")};
  const Matroid ms = strip_loops(m);
  if (ms.n() < ms.rank() + k - 1) return {skipped("kcm_floor", "fewer than r+k-1 vertices")};
  return check_kcm_floor_h(matroid_h_vector(ms), k);
}

std::vector<CheckResult> check_relative_kcm_h(const Vec& h, std::int64_t n, int k) {
  const int r = static_cast<int>(h.size()) - 1;
  std::vector<CheckResult> out;
  for (int i = 0; i <= r; ++i) {
    BigInt lhs = BigInt{n - i} * BigInt{at(h, i)};
    BigInt rhs = BigInt{r - i + 1} * BigInt{at(h, i - 1)} + BigInt{n} * binom_big(i + k - 3, i);
    auto res = ge_result("relative_kcm", i, std::move(lhs), std::move(rhs));
    res.k = k;
    out.push_back(std::move(res));
  }
  return out;
}

std::vector<CheckResult> check_relative_kcm(const Matroid& m, int k) {
  if (k < 1) throw Error(Errc::BadParams, "relative k-CM needs k >= 1");
  auto mc = m.min_cocircuit_size();
  if (mc && *mc < k)
    return {skipped("relative_kcm", "independence complex is not " + std::to_string(k) + "-CM")};
  if (m.coloops())
    return {skipped("relative_kcm", "coloops break the vertex-deletion dimension precondition")};
  const Matroid ms = strip_loops(m);
  return check_relative_kcm_h(matroid_h_vector(ms), ms.n(), k);
}

// ------------------------------------------- broken-circuit (b, w) bounds

std::vector<CheckResult> check_brylawski_floor(const Matroid& m) {
  if (m.loops()) return {skipped("bryl", "matroid has loops")};
  if (!m.is_connected()) return {skipped("bryl", "matroid is not connected")};
  // the floor is a theorem about geometries: parallel elements break it
  // (doubled-edge theta graphs give b_2 < n-r)
  for (mask_t cls : m.parallel_classes())
    if (popcount(cls) > 1) return {skipped("bryl", "matroid is not simple")};
  const auto fam = coefficient_families(m);
  const int r = m.rank();
  std::vector<CheckResult> out;
  for (int i = 2; i <= r - 1; ++i)
    out.push_back(ge_result("bryl", i, BigInt{at(*fam.b, i)}, BigInt{m.n() - r}));
  if (out.empty()) return {skipped("bryl", "index range 2..r-1 is empty")};
  return out;
}

std::vector<CheckResult> check_eq1(const Matroid& m) {
  if (!m.is_connected()) return {skipped("eq1", "matroid is not connected")};
  if (m.loops()) return {skipped("eq1", "matroid has loops")};
  const auto fam = coefficient_families(m);
  const int r = m.rank();
  const BigInt b1{fam.beta};
  std::vector<CheckResult> out;
  for (int i = 1; i <= r; ++i) {
    BigInt rhs = binom_big(r - 2, i - 1) * b1 + binom_big(r - 2, i - 2);
    out.push_back(le_result("eq1", i, BigInt{at(*fam.b, i)}, std::move(rhs)));
  }
  assert_cascade(out, "eq1", r - 1);
  return out;
}

std::vector<CheckResult> check_eqdisc(const Matroid& m) {
  if (m.loops()) return {skipped("eqdisc", "matroid has loops")};
  const int k = static_cast<int>(m.components().size());
  const int r = m.rank();
  if (r - k < 2) return {skipped("eqdisc", "needs r - k >= 2")};
  const auto fam = coefficient_families(m);
  std::vector<CheckResult> out;
  for (int i = 2; i <= r - k; ++i) {
    BigInt lhs{at(*fam.b, i + k - 1)};
    BigInt rhs = binom_big(r - k - 1, i - 1) * BigInt{at(*fam.b, k)} + binom_big(r - k - 1, i - 2);
    auto res = le_result("eqdisc", i, std::move(lhs), std::move(rhs));
    res.k = k;
    out.push_back(std::move(res));
  }
  return out;
}

std::vector<CheckResult> check_w_bound(const Matroid& m) {
  if (m.loops()) return {skipped("wbound", "matroid has loops")};
  if (!m.is_connected()) return {skipped("wbound", "matroid is not connected")};
  const int r = m.rank();
  if (r < 2) return {skipped("wbound", "needs r >= 2")};
  const auto fam = coefficient_families(m);
  const BigInt beta{fam.beta};
  std::vector<CheckResult> out;
  for (int i = 0; i <= r; ++i) {
    BigInt rhs{0};
    for (int j = 0; j <= i; ++j)
      rhs += binom_big(r - j, r - i) *
             (binom_big(r - 2, r - j - 1) * beta + binom_big(r - 2, r - j - 2));
    out.push_back(le_result("wbound", i, BigInt{at(*fam.w, i)}, std::move(rhs)));
  }
  return out;
}

std::vector<CheckResult> check_eq2(const Matroid& m) {
  if (!m.is_connected()) return {skipped("eq2", "matroid is not connected")};
  if (m.loops()) return {skipped("eq2", "matroid has loops")};
  const auto fam = coefficient_families(m);
  const int r = m.rank();
  const std::int64_t x = m.n() - r;
  std::vector<CheckResult> out;
  for (int i = 1; i <= r; ++i) {
    BigInt rhs = BigInt{phi(i, x)} * BigInt{fam.beta} + BigInt{phi(i - 1, x)};
    out.push_back(le_result("eq2", i, BigInt{at(*fam.b, i)}, std::move(rhs)));
  }
  return out;
}

CheckResult check_three_regular_series(const Matroid& m) {
  if (!m.is_connected()) return skipped("3series", "matroid is not connected");
  if (m.series_classes().size() < 2) return skipped("3series", "fewer than two series classes");
  const auto regular = regular_series_classes(m);
  CheckResult r;
  r.check = "3series";
  r.relation = ">=";
  r.lhs = BigInt{static_cast<std::int64_t>(regular.size())};
  r.rhs = BigInt{3};
  r.verdict = r.lhs > r.rhs ? Verdict::Holds
                            : (r.lhs == r.rhs ? Verdict::Equality : Verdict::Violation);
  return r;
}

// --------------------------------------- independence-complex (h) bounds

std::vector<CheckResult> check_g_theorem_h(const Vec& h) {
  const int r = static_cast<int>(h.size()) - 1;
  std::vector<CheckResult> out;
  for (int i = 1; 2 * i <= r + 1; ++i) {
    const std::int64_t gi = at(h, i) - at(h, i - 1);
    const std::int64_t gnext = at(h, i + 1) - at(h, i);
    if (gi < 0) {
      CheckResult bad;
      bad.check = "g";
      bad.i = i;
      bad.verdict = Verdict::Violation;
      bad.note = "g_i negative in the g-theorem range";
      out.push_back(std::move(bad));
      continue;
    }
    out.push_back(le_result("g", i, BigInt{gnext}, BigInt{macaulay_power(gi, i)}));
  }
  if (out.empty()) return {skipped("g", "index range is empty")};
  return out;
}

std::vector<CheckResult> check_g_theorem(const Matroid& m) {
  if (m.coloops()) return {skipped("g", "matroid has coloops")};
  return check_g_theorem_h(matroid_h_vector(strip_loops(m)));
}

std::vector<CheckResult> check_chari_h(const Vec& h) {
  const int r = static_cast<int>(h.size()) - 1;
  std::vector<CheckResult> out;
  for (int i = 0; 2 * i <= r; ++i) {
    out.push_back(le_result("chari.monotone", i, BigInt{at(h, i - 1)}, BigInt{at(h, i)}));
    out.push_back(le_result("chari.symmetric", i, BigInt{at(h, i)}, BigInt{at(h, r - i)}));
  }
  return out;
}

std::vector<CheckResult> check_chari(const Matroid& m) {
  if (m.coloops()) return {skipped("chari", "matroid has coloops")};
  return check_chari_h(matroid_h_vector(strip_loops(m)));
}

std::vector<CheckResult> check_brown_colbourn_h(const Vec& h) {
  const int r = static_cast<int>(h.size()) - 1;
  std::vector<CheckResult> out;
  for (int i = 0; i <= r; ++i) {
    BigInt rhs{0};
    for (int j = 1; j <= i; ++j) {
      const BigInt term{at(h, i - j)};
      rhs += (j % 2 == 1) ? term : -term;
    }
    out.push_back(ge_result("bc", i, BigInt{at(h, i)}, std::move(rhs)));
  }
  return out;
}

std::vector<CheckResult> check_brown_colbourn(const Matroid& m) {
  if (m.coloops()) return {skipped("bc", "matroid has coloops")};
  return check_brown_colbourn_h(matroid_h_vector(strip_loops(m)));
}

std::vector<CheckResult> check_wagner(const Matroid& m) {
  if (m.coloops()) return {skipped("wagner", "matroid has coloops")};
  const Matroid ms = strip_loops(m);
  const Vec counts = independent_set_counts(ms);
  const int r = ms.rank();
  std::vector<CheckResult> out;
  for (int k = 0; k <= r; ++k) {
    BigInt sum{0};
    for (int j = k; j <= r; ++j) {
      BigInt term = binom_big(j, k) * BigInt{at(counts, j)};
      for (int t = 0; t < r - j; ++t) term *= BigInt{-2};
      sum += term;
    }
    auto res = ge_result("wagner", k, std::move(sum), BigInt{0});
    res.k = k;
    out.push_back(std::move(res));
  }
  return out;
}

std::vector<CheckResult> check_stanley_product_h(const Vec& h) {
  const int r = static_cast<int>(h.size()) - 1;
  std::vector<CheckResult> out;
  for (int i = 0; i <= r; ++i)
    for (int j = i; j <= r; ++j) {
      auto res = le_result("stanley", i, BigInt{at(h, j - i)}, BigInt{at(h, i)} * BigInt{at(h, j)});
      res.j = j;
      out.push_back(std::move(res));
    }
  return out;
}

std::vector<CheckResult> check_stanley_product(const Matroid& m) {
  if (m.coloops()) return {skipped("stanley", "matroid has coloops")};
  return check_stanley_product_h(matroid_h_vector(strip_loops(m)));
}

std::vector<CheckResult> check_max_h(const Matroid& m) {
  if (m.coloops()) return {skipped("maxh", "matroid has coloops")};
  const Matroid ms = strip_loops(m);
  const Vec h = matroid_h_vector(ms);
  const int r = ms.rank();
  const std::int64_t n = ms.n();
  int min_series = kMaxGroundSet + 1;
  for (mask_t cls : ms.series_classes()) min_series = std::min(min_series, popcount(cls));
  std::vector<CheckResult> out;
  for (int i = 1; i <= r; ++i) {
    for (int j = 1; j < i; ++j) {
      // cleared denominators: C(n-i-1, r-i) h_{i-j} <= C(n-i+j-1, r-i+j) h_i
      BigInt lhs = binom_big(n - i - 1, r - i) * BigInt{at(h, i - j)};
      BigInt rhs = binom_big(n - i + j - 1, r - i + j) * BigInt{at(h, i)};
      auto res = le_result("maxh", i, std::move(lhs), std::move(rhs));
      res.j = j;
      const bool all_series_big = min_series > r - i + j;
      if (res.verdict == Verdict::Equality && !all_series_big) {
        res.verdict = Verdict::Violation;
        res.note = "equality but a series class has cardinality <= r-i+j";
      } else if (res.verdict == Verdict::Holds && all_series_big) {
        res.verdict = Verdict::Violation;
        res.note = "strict inequality but every series class has cardinality > r-i+j";
      }
      out.push_back(std::move(res));
    }
  }
  if (out.empty()) return {skipped("maxh", "index range is empty")};
  return out;
}

std::vector<CheckResult> check_ind_by_r(const Matroid& m) {
  if (m.coloops()) return {skipped("indr", "matroid has coloops")};
  const Matroid ms = strip_loops(m);
  const Vec h = matroid_h_vector(ms);
  const int r = ms.rank();
  std::vector<CheckResult> out;
  for (int i = 0; i <= r; ++i) {
    BigInt rhs = binom_big(r - 1, i) * BigInt{at(h, r)} + binom_big(r - 1, i - 1);
    out.push_back(le_result("indr", i, BigInt{at(h, r - i)}, std::move(rhs)));
  }
  assert_cascade(out, "indr", r - 1);
  return out;
}

std::vector<CheckResult> check_Ij_bound(const Matroid& m) {
  if (m.coloops()) return {skipped("ij", "matroid has coloops")};
  const Matroid ms = strip_loops(m);
  const Vec counts = independent_set_counts(ms);
  const Vec h = matroid_h_vector(ms);
  const int r = ms.rank();
  std::vector<CheckResult> out;
  for (int j = 0; j <= r; ++j) {
    BigInt rhs{0};
    for (int i = 0; i <= j; ++i)
      rhs += binom_big(r - i, r - j) *
             (binom_big(r - 1, i) * BigInt{at(h, r)} + binom_big(r - 1, i - 1));
    auto res = le_result("ij", j, BigInt{at(counts, j)}, std::move(rhs));
    res.j = j;
    out.push_back(std::move(res));
  }
  return out;
}

Matroid build_Mrnk(int r, int n, int k) {
  if (r < 2 || k < 2 || n - r - k + 2 < 1)
    throw Error(Errc::BadParams, "M(r,n,k) needs r >= 2, k >= 2, n >= r+k-1");
  return direct_sum(Matroid::uniform(1, n - r - k + 2), Matroid::uniform(r - 1, r + k - 2));
}

Vec hvec_Mrnk(int r, int n, int k) {
  if (r < 2 || k < 2 || n - r - k + 2 < 1)
    throw Error(Errc::BadParams, "M(r,n,k) needs r >= 2, k >= 2, n >= r+k-1");
  // h_i = C(k+i-2, i) + (n-r-k+1) C(k+i-3, i-1), where each term carries the
  // h-vector convention of its uniform summand: zero beyond rank r-1
  Vec h(r + 1, 0);
  for (int i = 0; i <= r; ++i) {
    const std::int64_t t1 = i <= r - 1 ? binom64(k + i - 2, i) : 0;
    const std::int64_t t2 = i - 1 <= r - 1 ? (n - r - k + 1) * binom64(k + i - 3, i - 1) : 0;
    h[i] = t1 + t2;
  }
  return h;
}

std::vector<CheckResult> check_long_term(const Matroid& m, int k) {
  if (k < 3) throw Error(Errc::BadParams, "the long-term bound needs k >= 3");
  if (m.loops()) return {skipped("longterm", "matroid has loops")};
  if (m.rank() < 2) return {skipped("longterm", "needs rank >= 2")};
  auto mc = m.min_cocircuit_size();
  if (mc && *mc < k)
    return {skipped("longterm", "smallest cocircuit below k=" + std::to_string(k))};
  const int r = m.rank(), n = m.n();
  const Vec h = matroid_h_vector(m);
  const Vec floor = hvec_Mrnk(r, n, k);
  std::vector<CheckResult> out;
  for (int i = 0; i <= r; ++i) {
    auto res = ge_result("longterm", i, BigInt{at(h, i)}, BigInt{at(floor, i)});
    res.k = k;
    if (res.verdict == Verdict::Violation) {
      res.verdict = Verdict::BelowThreshold;
      res.note = "below the M(r,n,k) floor at n=" + std::to_string(n) +
                 " (allowed: N(k,r) is nonconstructive)";
    }
    out.push_back(std::move(res));
  }
  return out;
}

std::vector<CheckResult> check_final_corollary(const Matroid& m, int k) {
  if (k < 3) throw Error(Errc::BadParams, "the final corollary needs k >= 3");
  if (m.loops()) return {skipped("finalcor", "matroid has loops")};
  if (m.rank() < 2) return {skipped("finalcor", "needs rank >= 2")};
  auto mc = m.min_cocircuit_size();
  if (mc && *mc < k)
    return {skipped("finalcor", "smallest cocircuit below k=" + std::to_string(k))};
  const int r = m.rank(), n = m.n();
  if (n - 1 - r - (k - 1) + 2 < 1) return {skipped("finalcor", "M(r,n-1,k-1) is not defined")};
  const Vec h = matroid_h_vector(m);
  const Vec floor = hvec_Mrnk(r, n - 1, k - 1);
  std::vector<CheckResult> out;
  for (int i = 0; i <= r; ++i) {
    BigInt lhs = BigInt{r - i + 1} * BigInt{at(h, i - 1)} + BigInt{n} * BigInt{at(floor, i)};
    BigInt rhs = BigInt{n - i} * BigInt{at(h, i)};
    auto res = le_result("finalcor", i, std::move(lhs), std::move(rhs));
    res.k = k;
    if (res.verdict == Verdict::Violation) {
      res.verdict = Verdict::BelowThreshold;
      res.note = "below threshold at n=" + std::to_string(n) +
                 " (allowed: N(k,r) is nonconstructive)";
    }
    out.push_back(std::move(res));
  }
  return out;
}

Rank2Minimizer rank2_minimizer(int n, int k) {
  if (n < 2 || k < 1 || k > n - 1) throw Error(Errc::BadParams, "rank2_minimizer needs n >= 2, 1 <= k <= n-1");
  const int part = n - k;
  const int m = (n + part - 1) / part;  // ceil(n / (n-k))
  Rank2Minimizer out;
  std::int64_t used = 0;
  for (int i = 0; i < m - 1; ++i) {
    out.partition.push_back(part);
    used += part;
  }
  out.partition.push_back(n - static_cast<int>(used));
  out.bases = binom64(n, 2);
  for (int p : out.partition) out.bases -= binom64(p, 2);
  return out;
}

// ------------------------------------------------------------------- suites

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "all",  "eq1",     "eq2",     "kcm",  "g",       "chari",   "bc",
      "wagner", "stanley", "maxh",  "indr", "longterm", "bryl",   "wbound",
      "eqdisc", "3series", "ij",    "seriesnorm"};
  return names;
}

std::vector<CheckResult> run_suite(const Matroid& m, const std::string& suite,
                                   const SuiteOptions& opts) {
  auto append = [](std::vector<CheckResult>& dst, std::vector<CheckResult> src) {
    for (auto& r : src) dst.push_back(std::move(r));
  };
  std::vector<CheckResult> out;
  const bool all = suite == "all";
  if (all || suite == "eq1") {
    append(out, check_eq1(m));
  }
  if (all || suite == "eqdisc") append(out, check_eqdisc(m));
  if (all || suite == "bryl") append(out, check_brylawski_floor(m));
  if (all || suite == "wbound") append(out, check_w_bound(m));
  if (all || suite == "eq2") append(out, check_eq2(m));
  if (all || suite == "3series") out.push_back(check_three_regular_series(m));
  if (all || suite == "kcm") {
    for (int k : opts.kcm_ks) {
      append(out, check_kcm_floor(m, k));
      append(out, check_relative_kcm(m, k));
    }
  }
  if (all || suite == "g") append(out, check_g_theorem(m));
  if (all || suite == "chari") append(out, check_chari(m));
  if (all || suite == "bc") append(out, check_brown_colbourn(m));
  if (all || suite == "wagner") append(out, check_wagner(m));
  if (all || suite == "stanley") append(out, check_stanley_product(m));
  if (all || suite == "maxh") append(out, check_max_h(m));
  if (all || suite == "indr") append(out, check_ind_by_r(m));
  if (all || suite == "ij") append(out, check_Ij_bound(m));
  if (all || suite == "longterm") {
    for (int k : opts.longterm_ks) {
      append(out, check_long_term(m, k));
      append(out, check_final_corollary(m, k));
    }
  }
  if (suite == "seriesnorm") {
    for (int i : opts.seriesnorm_is) {
      CheckResult r;
      r.check = "seriesnorm";
      r.i = i;
      r.relation = "==";
      if (!m.is_connected() || m.series_classes().size() < 2) {
        r.verdict = Verdict::Skipped;
        r.note = "identity needs a connected matroid with >= 2 series classes";
      } else {
        try {
          const auto rep = series_normalization_check(m, i);
          r.lhs = rep.lhs;
          r.rhs = rep.rhs;
          r.verdict = rep.equal ? Verdict::Equality : Verdict::Violation;
        } catch (const Error& e) {
          r.verdict = Verdict::Skipped;
          r.note = e.what();
        }
      }
      out.push_back(std::move(r));
    }
  }
  if (out.empty()) throw Error(Errc::BadInput, "unknown suite: " + suite);
  return out;
}

}  // namespace matx
