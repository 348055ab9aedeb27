#include "matx/matroid.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>
#include <unordered_set>

namespace matx {

namespace {

// builds tables for rank_of / is_independent fallbacks only up to this size;
// circuit enumeration builds them unconditionally
constexpr int kAutoTableN = 20;

std::string set_to_string(mask_t m, const std::vector<std::string>& labels) {
  std::string out = "{";
  bool first = true;
  for (int e = 0; e < static_cast<int>(labels.size()); ++e) {
    if (!((m >> e) & 1u)) continue;
    if (!first) out += ",";
    out += labels[e];
    first = false;
  }
  return out + "}";
}

// appends primes until `name` is not already taken
std::string unique_label(std::string name, const std::vector<std::string>& taken) {
  while (std::find(taken.begin(), taken.end(), name) != taken.end()) name += "'";
  return name;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

std::vector<mask_t> blocks_of(UnionFind& uf, mask_t members, int n) {
  std::map<int, mask_t> by_root;
  for (int e = 0; e < n; ++e)
    if ((members >> e) & 1u) by_root[uf.find(e)] |= mask_t{1} << e;
  std::vector<mask_t> out;
  for (auto& [root, blk] : by_root) out.push_back(blk);
  std::sort(out.begin(), out.end(),
            [](mask_t a, mask_t b) { return lowest_bit(a) < lowest_bit(b); });
  return out;
}

}  // namespace

void Matroid::init(std::vector<std::string> labels, std::vector<mask_t> bases) {
  if (static_cast<int>(labels.size()) > kMaxGroundSet)
    throw Error(Errc::TooLarge, "ground set exceeds " + std::to_string(kMaxGroundSet) + " elements");
  {
    auto sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(Errc::BadInput, "duplicate element labels");
  }
  if (bases.empty()) throw Error(Errc::EmptyBases, "matroid needs at least one basis");
  n_ = static_cast<int>(labels.size());
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  rank_ = popcount(bases[0]);
  mask_t seen_or = 0, seen_and = full_mask(n_);
  for (mask_t b : bases) {
    if (b & ~full_mask(n_)) throw Error(Errc::BadInput, "basis uses an element outside the ground set");
    if (popcount(b) != rank_) throw Error(Errc::NotAMatroid, "bases of unequal cardinality");
    seen_or |= b;
    seen_and &= b;
  }
  labels_ = std::move(labels);
  bases_ = std::move(bases);
  loops_ = full_mask(n_) & ~seen_or;
  coloops_ = seen_and;
  cache_ = std::make_shared<Cache>();
}

Matroid Matroid::from_bases(std::vector<std::string> labels, std::vector<mask_t> bases) {
  Matroid m;
  m.init(std::move(labels), std::move(bases));
  if (auto w = exchange_axiom_witness(m.bases_)) {
    throw Error(Errc::NotAMatroid,
                "basis exchange fails: B1=" + set_to_string(w->b1, m.labels_) +
                    " B2=" + set_to_string(w->b2, m.labels_) + " x=" + m.labels_[w->x] +
                    " has no exchange partner");
  }
  return m;
}

Matroid Matroid::from_bases_unchecked(std::vector<std::string> labels, std::vector<mask_t> bases) {
  Matroid m;
  m.init(std::move(labels), std::move(bases));
  return m;
}

Matroid Matroid::uniform(int r, int n) {
  if (n < 0 || n > kMaxGroundSet) throw Error(Errc::TooLarge, "uniform matroid size out of range");
  if (r < 0 || r > n) throw Error(Errc::BadRank, "uniform matroid needs 0 <= r <= n");
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = "e" + std::to_string(i + 1);
  return from_bases_unchecked(std::move(labels), k_subsets_of(full_mask(n), r));
}

Matroid Matroid::cycle_matroid(
    const std::vector<std::tuple<std::string, std::string, std::string>>& edges) {
  if (static_cast<int>(edges.size()) > kMaxGroundSet)
    throw Error(Errc::TooLarge, "graph exceeds " + std::to_string(kMaxGroundSet) + " edges");
  std::map<std::string, int> vertex_id;
  std::vector<std::pair<int, int>> ends;
  std::vector<std::string> labels;
  for (const auto& [u, v, name] : edges) {
    for (const auto& vtx : {u, v})
      if (!vertex_id.count(vtx)) vertex_id.emplace(vtx, static_cast<int>(vertex_id.size()));
    ends.emplace_back(vertex_id[u], vertex_id[v]);
    labels.push_back(name);
  }
  const int nv = static_cast<int>(vertex_id.size());
  const int ne = static_cast<int>(edges.size());
  UnionFind whole(nv);
  int comps = nv;
  for (auto [u, v] : ends)
    if (whole.unite(u, v)) --comps;
  const int rank = nv - comps;
  std::vector<mask_t> bases;
  for (mask_t sub : k_subsets_of(full_mask(ne), rank)) {
    UnionFind uf(nv);
    bool acyclic = true;
    for (int e = 0; e < ne && acyclic; ++e)
      if ((sub >> e) & 1u) acyclic = uf.unite(ends[e].first, ends[e].second);
    if (acyclic) bases.push_back(sub);
  }
  return from_bases_unchecked(std::move(labels), std::move(bases));
}

const MatroidTables& Matroid::tables() const {
  std::call_once(cache_->tables_once, [this] {
    MatroidTables t;
    const std::size_t size = std::size_t{1} << n_;
    t.indep.assign(size, 0);
    for (mask_t b : bases_) t.indep[b] = 1;
    // a set is independent iff some one-element extension is, seeded by the
    // bases; supersets are numerically larger, so one descending pass works
    for (std::size_t m = size; m-- > 0;) {
      if (t.indep[m]) continue;
      if (popcount(static_cast<mask_t>(m)) >= rank_) continue;
      mask_t rest = full_mask(n_) & ~static_cast<mask_t>(m);
      while (rest) {
        mask_t bit = rest & (~rest + 1);
        if (t.indep[m | bit]) {
          t.indep[m] = 1;
          break;
        }
        rest ^= bit;
      }
    }
    t.rank.assign(size, 0);
    for (std::size_t m = 1; m < size; ++m) {
      if (t.indep[m]) {
        t.rank[m] = static_cast<std::uint8_t>(popcount(static_cast<mask_t>(m)));
        continue;
      }
      std::uint8_t best = 0;
      mask_t mm = static_cast<mask_t>(m);
      while (mm) {
        mask_t bit = mm & (~mm + 1);
        best = std::max(best, t.rank[m ^ bit]);
        mm ^= bit;
      }
      t.rank[m] = best;
    }
    cache_->tables = std::move(t);
  });
  return cache_->tables;
}

bool Matroid::is_basis(mask_t a) const {
  return std::binary_search(bases_.begin(), bases_.end(), a);
}

bool Matroid::is_independent(mask_t a) const {
  if (popcount(a) > rank_) return false;
  if (n_ <= kAutoTableN) return tables().indep[a] != 0;
  for (mask_t b : bases_)
    if (subset_of(a, b)) return true;
  return false;
}

int Matroid::rank_of(mask_t a) const {
  if (a & ~full_mask(n_)) throw Error(Errc::BadInput, "rank_of: set outside ground set");
  if (n_ <= kAutoTableN) return tables().rank[a];
  int best = 0;
  for (mask_t b : bases_) best = std::max(best, popcount(a & b));
  return best;
}

const std::vector<mask_t>& Matroid::circuits() const {
  std::call_once(cache_->circuits_once, [this] {
    const auto& t = tables();
    std::vector<mask_t> out;
    const std::size_t size = std::size_t{1} << n_;
    for (std::size_t m = 1; m < size; ++m) {
      if (t.indep[m]) continue;
      bool minimal = true;
      mask_t mm = static_cast<mask_t>(m);
      while (mm && minimal) {
        mask_t bit = mm & (~mm + 1);
        minimal = t.indep[m ^ bit] != 0;
        mm ^= bit;
      }
      if (minimal) out.push_back(static_cast<mask_t>(m));
    }
    cache_->circuits = std::move(out);
  });
  return cache_->circuits;
}

std::vector<mask_t> Matroid::cocircuits() const { return dual(*this).circuits(); }

std::vector<mask_t> Matroid::hyperplanes() const {
  std::vector<mask_t> out;
  for (mask_t c : cocircuits()) out.push_back(full_mask(n_) & ~c);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> Matroid::min_cocircuit_size() const {
  auto cc = cocircuits();
  if (cc.empty()) return std::nullopt;
  int best = n_ + 1;
  for (mask_t c : cc) best = std::min(best, popcount(c));
  return best;
}

std::vector<mask_t> Matroid::components() const {
  UnionFind uf(std::max(n_, 1));
  for (mask_t c : circuits()) {
    int first = lowest_bit(c);
    mask_t mm = c & (c - 1);
    while (mm) {
      mask_t bit = mm & (~mm + 1);
      uf.unite(first, lowest_bit(bit));
      mm ^= bit;
    }
  }
  return blocks_of(uf, full_mask(n_), n_);
}

bool Matroid::is_connected() const { return n_ >= 1 && components().size() == 1; }

std::vector<mask_t> Matroid::parallel_classes() const {
  if (loops_) throw Error(Errc::HasLoops, "parallel classes need a loopless matroid");
  UnionFind uf(std::max(n_, 1));
  for (int e = 0; e < n_; ++e)
    for (int f = e + 1; f < n_; ++f)
      if (rank_of((mask_t{1} << e) | (mask_t{1} << f)) == 1) uf.unite(e, f);
  return blocks_of(uf, full_mask(n_), n_);
}

std::vector<mask_t> Matroid::series_classes() const {
  Matroid d = dual(*this);
  mask_t members = full_mask(n_) & ~coloops_;  // coloops are loops of the dual
  UnionFind uf(std::max(n_, 1));
  for (int e = 0; e < n_; ++e) {
    if (!((members >> e) & 1u)) continue;
    for (int f = e + 1; f < n_; ++f) {
      if (!((members >> f) & 1u)) continue;
      if (d.rank_of((mask_t{1} << e) | (mask_t{1} << f)) == 1) uf.unite(e, f);
    }
  }
  return blocks_of(uf, members, n_);
}

int Matroid::label_index(const std::string& name) const {
  auto it = std::find(labels_.begin(), labels_.end(), name);
  return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

std::string Matroid::canonical_key() const {
  std::ostringstream os;
  os << n_ << ':' << std::hex;
  for (mask_t b : bases_) os << b << ',';
  return os.str();
}

std::optional<ExchangeWitness> Matroid_exchange_impl(const std::vector<mask_t>& bases) {
  for (mask_t b1 : bases) {
    for (mask_t b2 : bases) {
      if (b1 == b2) continue;
      mask_t only1 = b1 & ~b2;
      mask_t cand = b2 & ~b1;
      mask_t xs = only1;
      while (xs) {
        mask_t xbit = xs & (~xs + 1);
        xs ^= xbit;
        bool found = false;
        mask_t ys = cand;
        while (ys && !found) {
          mask_t ybit = ys & (~ys + 1);
          ys ^= ybit;
          found = std::binary_search(bases.begin(), bases.end(), (b1 ^ xbit) | ybit);
        }
        if (!found) return ExchangeWitness{b1, b2, lowest_bit(xbit)};
      }
    }
  }
  return std::nullopt;
}

std::optional<ExchangeWitness> exchange_axiom_witness(const std::vector<mask_t>& bases) {
  return Matroid_exchange_impl(bases);
}

PointedMatroid::PointedMatroid(Matroid m, int p) : matroid(std::move(m)), basepoint(p) {
  if (p < 0 || p >= matroid.n()) throw Error(Errc::BadBasepoint, "basepoint outside ground set");
  mask_t bit = mask_t{1} << p;
  if (matroid.loops() & bit) throw Error(Errc::BadBasepoint, "basepoint is a loop");
  if (matroid.coloops() & bit) throw Error(Errc::BadBasepoint, "basepoint is a coloop");
}

Matroid dual(const Matroid& m) {
  std::vector<mask_t> bases;
  bases.reserve(m.bases().size());
  for (mask_t b : m.bases()) bases.push_back(m.universe() & ~b);
  return Matroid::from_bases_unchecked(m.labels(), std::move(bases));
}

namespace {

// keeps the elements of `keep`, compressing bit positions and labels
Matroid restrict_to(const Matroid& m, mask_t keep, const std::vector<mask_t>& new_bases_old_bits) {
  std::array<int, kMaxGroundSet> remap{};
  std::vector<std::string> labels;
  int next = 0;
  for (int e = 0; e < m.n(); ++e) {
    if ((keep >> e) & 1u) {
      remap[e] = next++;
      labels.push_back(m.labels()[e]);
    }
  }
  std::vector<mask_t> bases;
  bases.reserve(new_bases_old_bits.size());
  for (mask_t b : new_bases_old_bits) {
    mask_t nb = 0;
    mask_t mm = b;
    while (mm) {
      mask_t bit = mm & (~mm + 1);
      nb |= mask_t{1} << remap[lowest_bit(bit)];
      mm ^= bit;
    }
    bases.push_back(nb);
  }
  return Matroid::from_bases_unchecked(std::move(labels), std::move(bases));
}

}  // namespace

Matroid deletion(const Matroid& m, mask_t a) {
  if (a & ~m.universe()) throw Error(Errc::BadInput, "deletion: set outside ground set");
  if (a == m.universe()) throw Error(Errc::DeleteEverything, "cannot delete the whole ground set");
  const mask_t rest = m.universe() & ~a;
  const int r = m.rank_of(rest);
  std::vector<mask_t> bases;
  if (r == m.rank()) {
    for (mask_t b : m.bases())
      if ((b & a) == 0) bases.push_back(b);
  } else {
    for (mask_t cand : k_subsets_of(rest, r))
      if (m.is_independent(cand)) bases.push_back(cand);
  }
  return restrict_to(m, rest, bases);
}

Matroid contraction(const Matroid& m, mask_t a) {
  if (a & ~m.universe()) throw Error(Errc::BadInput, "contraction: set outside ground set");
  if (a == m.universe()) throw Error(Errc::DeleteEverything, "cannot contract the whole ground set");
  // greedy maximal independent subset of a
  mask_t ia = 0;
  int cur = 0;
  mask_t mm = a;
  while (mm) {
    mask_t bit = mm & (~mm + 1);
    mm ^= bit;
    if (m.rank_of(ia | bit) > cur) {
      ia |= bit;
      ++cur;
    }
  }
  std::vector<mask_t> bases;
  for (mask_t b : m.bases())
    if ((b & a) == ia) bases.push_back(b & ~a);
  return restrict_to(m, m.universe() & ~a, bases);
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  if (a.n() + b.n() > kMaxGroundSet)
    throw Error(Errc::TooLarge, "direct sum exceeds the ground set cap");
  std::vector<std::string> labels = a.labels();
  for (const auto& name : b.labels()) labels.push_back(unique_label(name, labels));
  std::vector<mask_t> bases;
  bases.reserve(a.bases().size() * b.bases().size());
  for (mask_t bb : b.bases())
    for (mask_t ab : a.bases()) bases.push_back(ab | (bb << a.n()));
  return Matroid::from_bases_unchecked(std::move(labels), std::move(bases));
}

Matroid simplification(const Matroid& m) {
  if (m.loops() == m.universe() && m.n() > 0)
    return Matroid::from_bases_unchecked({}, {0});
  Matroid base = m.loops() ? deletion(m, m.loops()) : m;
  mask_t drop = 0;
  for (mask_t cls : base.parallel_classes()) drop |= cls & ~(mask_t{1} << lowest_bit(cls));
  return drop ? deletion(base, drop) : base;
}

PointedMatroid parallel_connection(const PointedMatroid& a, const PointedMatroid& b) {
  const Matroid& ma = a.matroid;
  const Matroid& mb = b.matroid;
  const int n = ma.n() + mb.n() - 1;
  if (n > kMaxGroundSet) throw Error(Errc::TooLarge, "connection exceeds the ground set cap");

  // identified basepoint becomes element 0, then a's elements, then b's
  std::vector<std::string> labels{"p"};
  std::array<int, kMaxGroundSet> amap{}, bmap{};
  int next = 1;
  for (int e = 0; e < ma.n(); ++e) {
    if (e == a.basepoint) {
      amap[e] = 0;
      continue;
    }
    amap[e] = next++;
    labels.push_back(unique_label(ma.labels()[e] + ".a", labels));
  }
  for (int e = 0; e < mb.n(); ++e) {
    if (e == b.basepoint) {
      bmap[e] = 0;
      continue;
    }
    bmap[e] = next++;
    labels.push_back(unique_label(mb.labels()[e] + ".b", labels));
  }
  auto remap = [](mask_t c, const std::array<int, kMaxGroundSet>& map, int nn) {
    mask_t out = 0;
    for (int e = 0; e < nn; ++e)
      if ((c >> e) & 1u) out |= mask_t{1} << map[e];
    return out;
  };

  // circuits of the connection: circuits of A, circuits of B, and the joins
  // (Ca - p) + (Cb - p) over circuits through the basepoints
  std::vector<mask_t> circuits;
  std::vector<mask_t> thru_a, thru_b;
  for (mask_t c : ma.circuits()) {
    circuits.push_back(remap(c, amap, ma.n()));
    if ((c >> a.basepoint) & 1u) thru_a.push_back(remap(c, amap, ma.n()) & ~mask_t{1});
  }
  for (mask_t c : mb.circuits()) {
    circuits.push_back(remap(c, bmap, mb.n()));
    if ((c >> b.basepoint) & 1u) thru_b.push_back(remap(c, bmap, mb.n()) & ~mask_t{1});
  }
  for (mask_t ca : thru_a)
    for (mask_t cb : thru_b) circuits.push_back(ca | cb);
  std::sort(circuits.begin(), circuits.end());
  circuits.erase(std::unique(circuits.begin(), circuits.end()), circuits.end());

  const int r = ma.rank() + mb.rank() - 1;
  if (binom64(n, r) > 40'000'000) throw Error(Errc::TooLarge, "connection basis enumeration too large");
  std::vector<mask_t> bases;
  for (mask_t cand : k_subsets_of(full_mask(n), r)) {
    bool free_of_circuits = true;
    for (mask_t c : circuits) {
      if (subset_of(c, cand)) {
        free_of_circuits = false;
        break;
      }
    }
    if (free_of_circuits) bases.push_back(cand);
  }
  return PointedMatroid(Matroid::from_bases_unchecked(std::move(labels), std::move(bases)), 0);
}

PointedMatroid series_connection(const PointedMatroid& a, const PointedMatroid& b) {
  PointedMatroid pc = parallel_connection(PointedMatroid(dual(a.matroid), a.basepoint),
                                          PointedMatroid(dual(b.matroid), b.basepoint));
  return PointedMatroid(dual(pc.matroid), pc.basepoint);
}

Matroid parallel_add(const Matroid& m, int e) {
  if (e < 0 || e >= m.n()) throw Error(Errc::BadInput, "parallel_add: no such element");
  if ((m.loops() >> e) & 1u) throw Error(Errc::BadInput, "parallel_add: element is a loop");
  if (m.n() + 1 > kMaxGroundSet) throw Error(Errc::TooLarge, "parallel_add exceeds the ground set cap");
  std::vector<std::string> labels = m.labels();
  labels.push_back(unique_label(m.labels()[e] + "+", labels));
  const mask_t ebit = mask_t{1} << e;
  const mask_t newbit = mask_t{1} << m.n();
  std::vector<mask_t> bases = m.bases();
  for (mask_t b : m.bases())
    if (b & ebit) bases.push_back((b ^ ebit) | newbit);
  return Matroid::from_bases_unchecked(std::move(labels), std::move(bases));
}

Matroid series_expand(const Matroid& m, int e) {
  if (e < 0 || e >= m.n()) throw Error(Errc::BadInput, "series_expand: no such element");
  if ((m.coloops() >> e) & 1u) throw Error(Errc::BadInput, "series_expand: element is a coloop");
  return dual(parallel_add(dual(m), e));
}

Matroid free_extension(const Matroid& m) {
  if (m.n() + 1 > kMaxGroundSet) throw Error(Errc::TooLarge, "free extension exceeds the ground set cap");
  std::vector<std::string> labels = m.labels();
  labels.push_back(unique_label("*", labels));
  const mask_t newbit = mask_t{1} << m.n();
  std::vector<mask_t> bases = m.bases();
  if (m.rank() >= 1) {
    std::unordered_set<mask_t> dropped;
    for (mask_t b : m.bases()) {
      mask_t mm = b;
      while (mm) {
        mask_t bit = mm & (~mm + 1);
        dropped.insert(b ^ bit);
        mm ^= bit;
      }
    }
    for (mask_t ind : dropped) bases.push_back(ind | newbit);
  }
  return Matroid::from_bases_unchecked(std::move(labels), std::move(bases));
}

Matroid free_coextension(const Matroid& m) { return dual(free_extension(dual(m))); }

std::vector<mask_t> regular_series_classes(const Matroid& m) {
  if (!m.is_connected()) throw Error(Errc::NotConnected, "regular series classes need a connected matroid");
  std::vector<mask_t> out;
  for (mask_t cls : m.series_classes()) {
    if (cls == m.universe()) continue;  // deleting everything: empty matroid is not connected
    if (deletion(m, cls).is_connected()) out.push_back(cls);
  }
  return out;
}

namespace {

std::vector<int> degree_profile(const Matroid& m) {
  std::vector<int> deg(m.n(), 0);
  for (mask_t b : m.bases())
    for (int e = 0; e < m.n(); ++e)
      if ((b >> e) & 1u) ++deg[e];
  return deg;
}

bool iso_backtrack(const Matroid& a, const Matroid& b, const std::vector<int>& dega,
                   const std::vector<int>& degb, std::vector<int>& img, std::vector<bool>& used,
                   int k) {
  const int n = a.n();
  if (k == n) {
    for (mask_t ba : a.bases()) {
      mask_t mapped = 0;
      for (int e = 0; e < n; ++e)
        if ((ba >> e) & 1u) mapped |= mask_t{1} << img[e];
      if (!b.is_basis(mapped)) return false;
    }
    return true;
  }
  for (int c = 0; c < n; ++c) {
    if (used[c] || dega[k] != degb[c]) continue;
    bool ok = true;
    for (int j = 0; j < k && ok; ++j) {
      mask_t pa = (mask_t{1} << k) | (mask_t{1} << j);
      mask_t pb = (mask_t{1} << c) | (mask_t{1} << img[j]);
      ok = a.rank_of(pa) == b.rank_of(pb);
    }
    if (!ok) continue;
    img[k] = c;
    used[c] = true;
    if (iso_backtrack(a, b, dega, degb, img, used, k + 1)) return true;
    used[c] = false;
  }
  return false;
}

}  // namespace

bool isomorphic(const Matroid& a, const Matroid& b) {
  if (a.n() != b.n() || a.rank() != b.rank() || a.bases().size() != b.bases().size()) return false;
  auto dega = degree_profile(a), degb = degree_profile(b);
  auto sa = dega, sb = degb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  std::vector<int> img(a.n(), -1);
  std::vector<bool> used(a.n(), false);
  return iso_backtrack(a, b, dega, degb, img, used, 0);
}

}  // namespace matx
