#include "matx/corpus.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace matx {

namespace {

struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // uniform in [0, bound)
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

using Edge = std::tuple<std::string, std::string, std::string>;

std::vector<Edge> cycle_edges(int len) {
  std::vector<Edge> out;
  for (int i = 0; i < len; ++i)
    out.emplace_back("v" + std::to_string(i), "v" + std::to_string((i + 1) % len),
                     "e" + std::to_string(i + 1));
  return out;
}

std::vector<Edge> complete_edges(int nv) {
  std::vector<Edge> out;
  int id = 1;
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j)
      out.emplace_back("v" + std::to_string(i), "v" + std::to_string(j),
                       "e" + std::to_string(id++));
  return out;
}

std::vector<Edge> theta_edges(const std::vector<int>& path_lengths) {
  std::vector<Edge> out;
  int id = 1;
  for (std::size_t p = 0; p < path_lengths.size(); ++p) {
    std::string prev = "u";
    for (int s = 0; s < path_lengths[p]; ++s) {
      std::string next = s + 1 == path_lengths[p] ? "w" : "m" + std::to_string(p) + "_" + std::to_string(s);
      out.emplace_back(prev, next, "e" + std::to_string(id++));
      prev = next;
    }
  }
  return out;
}

std::vector<Edge> wheel_edges(int spokes) {
  std::vector<Edge> out;
  int id = 1;
  for (int i = 0; i < spokes; ++i) {
    out.emplace_back("c", "v" + std::to_string(i), "e" + std::to_string(id++));
    out.emplace_back("v" + std::to_string(i), "v" + std::to_string((i + 1) % spokes),
                     "e" + std::to_string(id++));
  }
  return out;
}

std::vector<Edge> dipole_edges(int multiplicity) {
  std::vector<Edge> out;
  for (int i = 0; i < multiplicity; ++i) out.emplace_back("u", "w", "e" + std::to_string(i + 1));
  return out;
}

}  // namespace

Tags compute_tags(const Matroid& m) {
  Tags t;
  t.n = m.n();
  t.rank = m.rank();
  t.components = static_cast<int>(m.components().size());
  t.connected = m.is_connected();
  t.loopless = m.loops() == 0;
  t.coloop_free = m.coloops() == 0;
  t.min_cocircuit = m.min_cocircuit_size();
  // for independence complexes of matroids, k-CM level = smallest cocircuit
  t.kcm_level = t.min_cocircuit ? *t.min_cocircuit : t.n + 1;
  return t;
}

Matroid theta_graph() { return Matroid::cycle_matroid(theta_edges({2, 2, 2})); }

Matroid bc_twin_a() {
  std::vector<std::string> labels{"e1", "e2", "e3", "e4", "e5", "e6"};
  std::vector<mask_t> bases;
  for (mask_t b : k_subsets_of(full_mask(6), 3))
    if (b != 0b000111u && b != 0b111000u) bases.push_back(b);
  return Matroid::from_bases(labels, bases);
}

Matroid bc_twin_b() {
  std::vector<std::string> labels{"e1", "e2", "e3", "e4", "e5", "e6"};
  std::vector<mask_t> bases;
  for (mask_t b : k_subsets_of(full_mask(6), 3))
    if (b != 0b000111u && b != 0b110001u) bases.push_back(b);
  return Matroid::from_bases(labels, bases);
}

Matroid rank2_partition_matroid(const std::vector<int>& class_sizes) {
  if (class_sizes.size() < 2) throw Error(Errc::BadParams, "rank 2 needs at least two parallel classes");
  int n = 0;
  for (int s : class_sizes) {
    if (s < 1) throw Error(Errc::BadParams, "parallel class sizes must be positive");
    n += s;
  }
  if (n > kMaxGroundSet) throw Error(Errc::TooLarge, "partition matroid exceeds the ground set cap");
  std::vector<int> cls(n);
  std::vector<std::string> labels(n);
  int e = 0;
  for (std::size_t c = 0; c < class_sizes.size(); ++c)
    for (int s = 0; s < class_sizes[c]; ++s, ++e) {
      cls[e] = static_cast<int>(c);
      labels[e] = "p" + std::to_string(c + 1) + "_" + std::to_string(s + 1);
    }
  std::vector<mask_t> bases;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (cls[a] != cls[b]) bases.push_back((mask_t{1} << a) | (mask_t{1} << b));
  return Matroid::from_bases_unchecked(std::move(labels), std::move(bases));
}

Matroid eq1_equality_chain(int beta, int r) {
  if (beta < 1 || r < 2) throw Error(Errc::BadParams, "eq1 chain needs beta >= 1, r >= 2");
  PointedMatroid cur(Matroid::uniform(2, beta + 2), 0);
  for (int step = 0; step < r - 2; ++step)
    cur = parallel_connection(cur, PointedMatroid(Matroid::uniform(2, 3), 0));
  return cur.matroid;
}

Matroid indr_equality_matroid(int hr, int r) {
  if (hr < 1 || r < 1) throw Error(Errc::BadParams, "needs hr >= 1, r >= 1");
  Matroid m = Matroid::uniform(1, hr + 1);
  for (int i = 0; i < r - 1; ++i) m = direct_sum(m, Matroid::uniform(1, 2));
  return m;
}

Matroid eq2_equality_matroid(int beta, int x, int size) {
  return expand_all_series_classes(dual(eq1_equality_chain(beta, x)), size);
}

Matroid expand_all_series_classes(const Matroid& m, int size) {
  if (size < 1) throw Error(Errc::BadParams, "series class size must be >= 1");
  Matroid cur = m;
  while (true) {
    bool dirty = false;
    for (mask_t cls : cur.series_classes()) {
      if (popcount(cls) < size) {
        cur = series_expand(cur, lowest_bit(cls));
        dirty = true;
        break;
      }
    }
    if (!dirty) break;
  }
  return cur;
}

std::vector<Instance> named_instances() {
  std::vector<Instance> out;
  auto add = [&out](std::string id, Matroid m, std::string prov) {
    Instance inst;
    inst.id = std::move(id);
    inst.tags = compute_tags(m);
    inst.matroid = std::move(m);
    inst.provenance = std::move(prov);
    out.push_back(std::move(inst));
  };
  add("bc_twin_a", bc_twin_a(), "all triples of a 6-set except {e1,e2,e3},{e4,e5,e6}");
  add("bc_twin_b", bc_twin_b(), "all triples of a 6-set except {e1,e2,e3},{e1,e5,e6}");
  add("theta", theta_graph(), "cycle matroid of the theta graph with three length-2 paths");
  add("u13_cube", direct_sum(direct_sum(Matroid::uniform(1, 3), Matroid::uniform(1, 3)),
                               Matroid::uniform(1, 3)),
      "U_{1,3} + U_{1,3} + U_{1,3}");
  add("m393", direct_sum(Matroid::uniform(1, 5), Matroid::uniform(2, 4)), "M(3,9,3)");
  add("rank2_221", rank2_partition_matroid({2, 2, 1}), "rank 2 with parallel classes (2,2,1)");
  for (int beta = 1; beta <= 3; ++beta)
    for (int r = 2; r <= 4; ++r)
      add("eq1chain_b" + std::to_string(beta) + "_r" + std::to_string(r),
          eq1_equality_chain(beta, r), "eq1 equality family");
  for (int hr = 1; hr <= 3; ++hr)
    for (int r = 2; r <= 4; ++r)
      add("indr_h" + std::to_string(hr) + "_r" + std::to_string(r),
          indr_equality_matroid(hr, r), "ind-by-r equality family");
  return out;
}

namespace {

bool family_enabled(const CorpusSpec& spec, const std::string& f) {
  return spec.families.empty() ||
         std::find(spec.families.begin(), spec.families.end(), f) != spec.families.end();
}

struct Builder {
  std::vector<Instance> out;
  std::set<std::string> seen;  // label-free canonical keys

  bool add(const std::string& id, Matroid m, const std::string& prov) {
    if (!seen.insert(m.canonical_key()).second) return false;
    Instance inst;
    inst.id = id;
    inst.tags = compute_tags(m);
    inst.matroid = std::move(m);
    inst.provenance = prov;
    out.push_back(std::move(inst));
    return true;
  }
};

}  // namespace

std::vector<Instance> generate(const CorpusSpec& spec) {
  if (spec.max_n < 1 || spec.max_n > 12)
    throw Error(Errc::BadParams, "corpus max_n must be between 1 and 12");
  Builder b;

  if (family_enabled(spec, "named"))
    for (auto& inst : named_instances()) b.add(inst.id, inst.matroid, inst.provenance);

  if (family_enabled(spec, "uniform"))
    for (int n = 1; n <= spec.max_n; ++n)
      for (int r = 0; r <= n; ++r)
        b.add("u_r" + std::to_string(r) + "_n" + std::to_string(n), Matroid::uniform(r, n),
              "uniform");

  if (family_enabled(spec, "graph")) {
    auto addg = [&b](const std::string& id, const std::vector<Edge>& e, const std::string& prov) {
      b.add(id, Matroid::cycle_matroid(e), prov);
    };
    for (int len = 3; len <= 6; ++len)
      addg("g_c" + std::to_string(len), cycle_edges(len), "cycle graph");
    addg("g_k4", complete_edges(4), "complete graph K4");
    addg("g_k5", complete_edges(5), "complete graph K5");
    addg("g_theta222", theta_edges({2, 2, 2}), "theta graph (2,2,2)");
    addg("g_theta122", theta_edges({1, 2, 2}), "theta graph (1,2,2)");
    addg("g_theta123", theta_edges({1, 2, 3}), "theta graph (1,2,3)");
    addg("g_theta1122", theta_edges({1, 1, 2, 2}), "theta graph (1,1,2,2)");
    addg("g_w4", wheel_edges(4), "wheel with 4 spokes");
    addg("g_w5", wheel_edges(5), "wheel with 5 spokes");
    for (int mult = 2; mult <= 4; ++mult)
      addg("g_dipole" + std::to_string(mult), dipole_edges(mult), "dipole multigraph");
    // a path (all coloops) and a star (all coloops) for tag coverage
    addg("g_path3",
         {{"a", "b", "e1"}, {"b", "c", "e2"}, {"c", "d", "e3"}}, "path graph");
    addg("g_star3", {{"c", "a", "e1"}, {"c", "b", "e2"}, {"c", "d", "e3"}}, "star graph");
    // triangle with a pendant edge: mixes a coloop into a circuit
    addg("g_tripend",
         {{"a", "b", "e1"}, {"b", "c", "e2"}, {"c", "a", "e3"}, {"c", "d", "e4"}},
         "triangle plus pendant edge");
    // triangle with a doubled edge and a loop-free multi structure
    addg("g_tridouble",
         {{"a", "b", "e1"}, {"a", "b", "e2"}, {"b", "c", "e3"}, {"c", "a", "e4"}},
         "triangle with a doubled edge");
    // one graph with a self-loop to get loop coverage
    addg("g_triloop",
         {{"a", "b", "e1"}, {"b", "c", "e2"}, {"c", "a", "e3"}, {"a", "a", "e4"}},
         "triangle with a self-loop");
  }

  if (family_enabled(spec, "random")) {
    SplitMix64 rng(spec.seed);
    int made = 0;
    int attempts = 0;
    while (made < 20 && attempts < 4000) {
      ++attempts;
      const int nv = 3 + static_cast<int>(rng.below(5));               // 3..7 vertices
      const int extra = static_cast<int>(rng.below(5));                // edges beyond a tree
      const int ne = std::min(nv - 1 + extra, std::min(12, spec.max_n));
      if (ne < nv - 1) continue;
      std::vector<Edge> edges;
      // random spanning tree first so the graph is connected
      for (int v = 1; v < nv; ++v) {
        const int u = static_cast<int>(rng.below(v));
        edges.emplace_back("v" + std::to_string(u), "v" + std::to_string(v),
                           "e" + std::to_string(edges.size() + 1));
      }
      while (static_cast<int>(edges.size()) < ne) {
        const int u = static_cast<int>(rng.below(nv));
        const int v = static_cast<int>(rng.below(nv));
        if (u == v) continue;  // no self-loops in the random family
        edges.emplace_back("v" + std::to_string(u), "v" + std::to_string(v),
                           "e" + std::to_string(edges.size() + 1));
      }
      std::ostringstream id;
      id << "rg_" << std::setw(4) << std::setfill('0') << made;
      if (b.add(id.str(), Matroid::cycle_matroid(edges), "random connected multigraph")) ++made;
    }
  }

  // closure under the standard constructions
  for (int depth = 0; depth < spec.closure_depth; ++depth) {
    const std::vector<Instance> snapshot = b.out;
    for (const auto& inst : snapshot) {
      const Matroid& m = inst.matroid;
      if (m.n() > spec.max_n) continue;
      b.add(inst.id + "~dual", dual(m), "dual of " + inst.id);
      if (m.n() >= 2) {
        for (int e : {0, m.n() / 2, m.n() - 1}) {
          b.add(inst.id + "~del" + std::to_string(e), deletion(m, mask_t{1} << e),
                "single-element deletion of " + inst.id);
          b.add(inst.id + "~con" + std::to_string(e), contraction(m, mask_t{1} << e),
                "single-element contraction of " + inst.id);
        }
      }
      if (m.n() + 1 <= spec.max_n)
        b.add(inst.id + "~fc", free_coextension(m), "free coextension of " + inst.id);
      const mask_t avail = m.universe() & ~(m.loops() | m.coloops());
      if (avail && m.n() + 1 <= spec.max_n) {
        const int e = lowest_bit(avail);
        b.add(inst.id + "~sx" + std::to_string(e), series_expand(m, e),
              "series expansion of " + inst.id);
        b.add(inst.id + "~px" + std::to_string(e), parallel_add(m, e),
              "parallel extension of " + inst.id);
      }
    }
    // sums and connections of small pairs from the snapshot
    std::vector<const Instance*> small;
    for (const auto& inst : snapshot)
      if (inst.matroid.n() <= spec.max_n / 2 && inst.matroid.n() >= 1) small.push_back(&inst);
    for (std::size_t i = 0; i < small.size(); ++i) {
      for (std::size_t j = i; j < small.size(); ++j) {
        const Matroid& ma = small[i]->matroid;
        const Matroid& mb = small[j]->matroid;
        if (ma.n() + mb.n() > spec.max_n) continue;
        b.add(small[i]->id + "+" + small[j]->id, direct_sum(ma, mb), "direct sum");
        const mask_t pa = ma.universe() & ~(ma.loops() | ma.coloops());
        const mask_t pb = mb.universe() & ~(mb.loops() | mb.coloops());
        if (pa && pb && ma.n() + mb.n() - 1 <= spec.max_n) {
          PointedMatroid a(ma, lowest_bit(pa));
          PointedMatroid c(mb, lowest_bit(pb));
          b.add(small[i]->id + "|p|" + small[j]->id, parallel_connection(a, c).matroid,
                "parallel connection");
          b.add(small[i]->id + "|s|" + small[j]->id, series_connection(a, c).matroid,
                "series connection");
        }
      }
    }
  }

  std::sort(b.out.begin(), b.out.end(),
            [](const Instance& a, const Instance& c) { return a.id < c.id; });
  return b.out;
}

}  // namespace matx
