#include "matx/complex.hpp"

#include <algorithm>
#include <deque>

namespace matx {

void SimplicialComplex::finish(std::size_t face_cap) {
  if (faces_.empty()) throw Error(Errc::EmptyComplex, "the void complex is not accepted");
  if (faces_.size() > face_cap) throw Error(Errc::TooManyFaces, "face family exceeds the cap");
  std::sort(faces_.begin(), faces_.end());
  faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
  face_set_ = std::unordered_set<mask_t>(faces_.begin(), faces_.end());
  vertices_ = 0;
  dim_ = -1;
  for (mask_t f : faces_) {
    vertices_ |= f;
    dim_ = std::max(dim_, popcount(f) - 1);
  }
  pure_ = true;
  for (mask_t f : faces_) {
    if (popcount(f) - 1 == dim_) continue;
    bool maximal = true;
    mask_t rest = vertices_ & ~f;
    while (rest && maximal) {
      mask_t bit = rest & (~rest + 1);
      maximal = !face_set_.count(f | bit);
      rest ^= bit;
    }
    if (maximal) {
      pure_ = false;
      break;
    }
  }
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> vertex_labels,
                                                 const std::vector<mask_t>& facets,
                                                 std::size_t face_cap) {
  SimplicialComplex dx;
  dx.labels_ = std::move(vertex_labels);
  const mask_t universe = full_mask(static_cast<int>(dx.labels_.size()));
  std::unordered_set<mask_t> seen{0u};
  std::deque<mask_t> queue;
  for (mask_t f : facets) {
    if (f & ~universe) throw Error(Errc::BadInput, "facet outside the vertex universe");
    if (seen.insert(f).second) queue.push_back(f);
  }
  while (!queue.empty()) {
    mask_t f = queue.front();
    queue.pop_front();
    if (seen.size() > face_cap) throw Error(Errc::TooManyFaces, "face family exceeds the cap");
    mask_t mm = f;
    while (mm) {
      mask_t bit = mm & (~mm + 1);
      mm ^= bit;
      mask_t sub = f ^ bit;
      if (seen.insert(sub).second) queue.push_back(sub);
    }
  }
  dx.faces_.assign(seen.begin(), seen.end());
  dx.finish(face_cap);
  return dx;
}

SimplicialComplex SimplicialComplex::from_faces(std::vector<std::string> vertex_labels,
                                                std::vector<mask_t> faces, std::size_t face_cap) {
  SimplicialComplex dx;
  dx.labels_ = std::move(vertex_labels);
  dx.faces_ = std::move(faces);
  dx.finish(face_cap);
  const mask_t universe = full_mask(static_cast<int>(dx.labels_.size()));
  for (mask_t f : dx.faces_) {
    if (f & ~universe) throw Error(Errc::BadInput, "face outside the vertex universe");
    mask_t mm = f;
    while (mm) {
      mask_t bit = mm & (~mm + 1);
      mm ^= bit;
      if (!dx.face_set_.count(f ^ bit))
        throw Error(Errc::BadInput, "face family is not downward closed");
    }
  }
  if (!dx.face_set_.count(0)) throw Error(Errc::BadInput, "face family must contain the empty face");
  return dx;
}

std::vector<mask_t> SimplicialComplex::facets() const {
  std::vector<mask_t> out;
  for (mask_t f : faces_) {
    bool maximal = true;
    mask_t rest = vertices_ & ~f;
    while (rest && maximal) {
      mask_t bit = rest & (~rest + 1);
      maximal = !face_set_.count(f | bit);
      rest ^= bit;
    }
    if (maximal) out.push_back(f);
  }
  return out;
}

SimplicialComplex SimplicialComplex::link(mask_t f) const {
  if (!contains(f)) throw Error(Errc::BadInput, "link of a non-face");
  SimplicialComplex out;
  out.labels_ = labels_;
  for (mask_t g : faces_)
    if ((g & f) == 0 && face_set_.count(g | f)) out.faces_.push_back(g);
  out.finish(faces_.size());
  return out;
}

SimplicialComplex SimplicialComplex::remove_vertices(mask_t a) const {
  SimplicialComplex out;
  out.labels_ = labels_;
  for (mask_t g : faces_)
    if ((g & a) == 0) out.faces_.push_back(g);
  out.finish(faces_.size());
  return out;
}

Vec SimplicialComplex::f_vector() const {
  Vec f(static_cast<std::size_t>(r()) + 1, 0);
  for (mask_t face : faces_) ++f[popcount(face)];
  return f;
}

Vec h_from_f(const Vec& f) {
  const int r = static_cast<int>(f.size()) - 1;
  Vec h(f.size(), 0);
  for (int i = 0; i <= r; ++i)
    for (int j = 0; j <= i; ++j) {
      const std::int64_t term = binom64(r - j, r - i) * f[j];
      h[i] += ((i - j) % 2 == 0) ? term : -term;
    }
  return h;
}

Vec f_from_h(const Vec& h) {
  const int r = static_cast<int>(h.size()) - 1;
  Vec f(h.size(), 0);
  for (int j = 0; j <= r; ++j)
    for (int i = 0; i <= j; ++i) f[j] += binom64(r - i, r - j) * h[i];
  return f;
}

SimplicialComplex independence_complex(const Matroid& m) {
  const auto& t = m.tables();
  std::vector<mask_t> faces;
  const std::size_t size = std::size_t{1} << m.n();
  for (std::size_t mm = 0; mm < size; ++mm)
    if (t.indep[mm]) faces.push_back(static_cast<mask_t>(mm));
  return SimplicialComplex::from_faces(m.labels(), std::move(faces));
}

SimplicialComplex broken_circuit_complex(const Matroid& m, const std::vector<int>& order,
                                         std::size_t face_cap) {
  if (m.loops()) throw Error(Errc::HasLoops, "broken circuit complex needs a loopless matroid");
  const int n = m.n();
  std::vector<int> pos(n);
  if (order.empty()) {
    for (int i = 0; i < n; ++i) pos[i] = i;
  } else {
    if (static_cast<int>(order.size()) != n) throw Error(Errc::BadInput, "ordering must list every element");
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
      if (order[i] < 0 || order[i] >= n || seen[order[i]])
        throw Error(Errc::BadInput, "ordering is not a permutation");
      seen[order[i]] = true;
      pos[order[i]] = i;
    }
  }

  // broken circuit = circuit minus its order-least element, bucketed by the
  // numerically largest remaining element for the search below
  std::vector<std::vector<mask_t>> bc_by_top(n);
  for (mask_t c : m.circuits()) {
    int least = -1;
    mask_t mm = c;
    while (mm) {
      mask_t bit = mm & (~mm + 1);
      int e = lowest_bit(bit);
      if (least == -1 || pos[e] < pos[least]) least = e;
      mm ^= bit;
    }
    mask_t bc = c ^ (mask_t{1} << least);
    int top = 31 - std::countl_zero(bc);
    bc_by_top[top].push_back(bc & ~(mask_t{1} << top));
  }

  // grow faces lexicographically: extending a face by a new largest element e
  // can only complete broken circuits whose largest element is e
  std::vector<mask_t> faces;
  struct Item {
    mask_t face;
    int next;
  };
  std::vector<Item> stack{{0u, 0}};
  while (!stack.empty()) {
    auto [face, next] = stack.back();
    stack.pop_back();
    faces.push_back(face);
    if (faces.size() > face_cap) throw Error(Errc::TooManyFaces, "face family exceeds the cap");
    for (int e = next; e < n; ++e) {
      bool ok = true;
      for (mask_t rest : bc_by_top[e]) {
        if (subset_of(rest, face)) {
          ok = false;
          break;
        }
      }
      if (ok) stack.push_back({face | (mask_t{1} << e), e + 1});
    }
  }
  return SimplicialComplex::from_faces(m.labels(), std::move(faces), face_cap);
}

ShortHReport short_h(const SimplicialComplex& dx) {
  if (!dx.pure()) throw Error(Errc::NotPure, "short simplicial h-vector needs a pure complex");
  const int r = dx.r();
  ShortHReport rep;
  rep.by_links.assign(r, 0);
  rep.by_f.assign(r, 0);
  rep.by_h.assign(r, 0);

  mask_t vs = dx.vertex_set();
  while (vs) {
    mask_t bit = vs & (~vs + 1);
    vs ^= bit;
    Vec lh = dx.link(bit).h_vector();  // link of a vertex is pure of dim r-2
    for (int i = 0; i < r; ++i) rep.by_links[i] += i < static_cast<int>(lh.size()) ? lh[i] : 0;
  }

  const Vec f = dx.f_vector();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j <= i; ++j) {
      const std::int64_t term = (j + 1) * binom64(r - j - 1, r - i - 1) * f[j + 1];
      rep.by_f[i] += ((i - j) % 2 == 0) ? term : -term;
    }

  const Vec h = dx.h_vector();
  for (int i = 0; i < r; ++i)
    rep.by_h[i] = (i + 1) * h[i + 1] + static_cast<std::int64_t>(r - i) * h[i];
  return rep;
}

DeletionSumReport deletion_sum_check(const SimplicialComplex& dx) {
  const int r = dx.r();
  const std::int64_t n = dx.num_vertices();
  DeletionSumReport rep;
  rep.lhs.assign(r + 1, 0);
  rep.rhs.assign(r + 1, 0);

  mask_t vs = dx.vertex_set();
  while (vs) {
    mask_t bit = vs & (~vs + 1);
    vs ^= bit;
    SimplicialComplex del = dx.remove_vertices(bit);
    if (del.dim() != dx.dim())
      throw Error(Errc::DimensionDrops, "dimension drops when removing vertex index " +
                                            std::to_string(lowest_bit(bit)));
    Vec h = del.h_vector();
    for (int i = 0; i <= r; ++i) rep.lhs[i] += i < static_cast<int>(h.size()) ? h[i] : 0;
  }

  const Vec h = dx.h_vector();
  for (int i = 0; i <= r; ++i) {
    const std::int64_t prev = i > 0 ? h[i - 1] : 0;
    rep.rhs[i] = (n - i) * h[i] - static_cast<std::int64_t>(r - i + 1) * prev;
  }
  return rep;
}

}  // namespace matx
