#include "matx/matroid_json.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace matx {

namespace {

std::vector<std::string> labels_from_json(const Json& j) {
  if (!j.is_array()) throw Error(Errc::BadInput, "labels must be an array of strings");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) throw Error(Errc::BadInput, "labels must be strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

mask_t set_from_json(const Json& j, const std::vector<std::string>& labels) {
  if (!j.is_array()) throw Error(Errc::BadInput, "element sets must be arrays of labels");
  mask_t m = 0;
  for (const auto& v : j) {
    const std::string name = v.get<std::string>();
    auto it = std::find(labels.begin(), labels.end(), name);
    if (it == labels.end()) throw Error(Errc::BadInput, "unknown element label: " + name);
    m |= mask_t{1} << (it - labels.begin());
  }
  return m;
}

int required_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw Error(Errc::BadInput, std::string("missing integer field: ") + key);
  return j[key].get<int>();
}

Matroid single_arg(const Json& j) {
  if (!j.contains("args") || !j["args"].is_array() || j["args"].size() != 1)
    throw Error(Errc::BadInput, "construction needs exactly one matroid in \"args\"");
  return matroid_from_json(j["args"][0]);
}

}  // namespace

std::vector<GraphEdge> graph_edges_from_json(const Json& j) {
  const Json& edges = j.contains("edges") ? j["edges"] : j;
  if (!edges.is_array()) throw Error(Errc::BadInput, "graph needs an \"edges\" array");
  std::vector<GraphEdge> out;
  std::size_t auto_id = 0;
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() < 2)
      throw Error(Errc::BadInput, "each edge is [endpoint, endpoint, label?]");
    std::string label = e.size() >= 3 ? e[2].get<std::string>()
                                      : "e" + std::to_string(++auto_id);
    out.emplace_back(e[0].get<std::string>(), e[1].get<std::string>(), std::move(label));
  }
  return out;
}

bool graph_connected(const std::vector<GraphEdge>& edges) {
  std::map<std::string, int> id;
  for (const auto& [u, v, name] : edges)
    for (const auto& x : {u, v})
      if (!id.count(x)) id.emplace(x, static_cast<int>(id.size()));
  if (id.empty()) return true;  // the empty graph is trivially connected
  std::vector<int> parent(id.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [u, v, name] : edges) parent[find(id[u])] = find(id[v]);
  int roots = 0;
  for (std::size_t i = 0; i < parent.size(); ++i)
    if (find(static_cast<int>(i)) == static_cast<int>(i)) ++roots;
  return roots == 1;
}

Matroid matroid_from_json(const Json& j) {
  if (!j.is_object()) throw Error(Errc::BadInput, "matroid input must be a JSON object");
  if (j.contains("bases")) {
    auto labels = labels_from_json(j.contains("labels") ? j["labels"] : Json::array());
    std::vector<mask_t> bases;
    for (const auto& b : j["bases"]) bases.push_back(set_from_json(b, labels));
    return Matroid::from_bases(std::move(labels), std::move(bases));
  }
  if (!j.contains("construct"))
    throw Error(Errc::BadInput, "matroid input needs \"bases\" or \"construct\"");
  const std::string kind = j["construct"].get<std::string>();
  if (kind == "uniform") return Matroid::uniform(required_int(j, "r"), required_int(j, "n"));
  if (kind == "graph") return Matroid::cycle_matroid(graph_edges_from_json(j));
  if (kind == "dual") return dual(single_arg(j));
  if (kind == "free_coextension") return free_coextension(single_arg(j));
  if (kind == "simplification") return simplification(single_arg(j));
  if (kind == "delete" || kind == "contract") {
    Matroid m = single_arg(j);
    if (!j.contains("elements")) throw Error(Errc::BadInput, kind + " needs an \"elements\" array");
    const mask_t a = set_from_json(j["elements"], m.labels());
    return kind == "delete" ? deletion(m, a) : contraction(m, a);
  }
  if (kind == "direct_sum") {
    if (!j.contains("args") || !j["args"].is_array() || j["args"].size() < 2)
      throw Error(Errc::BadInput, "direct_sum needs at least two matroids in \"args\"");
    Matroid acc = matroid_from_json(j["args"][0]);
    for (std::size_t i = 1; i < j["args"].size(); ++i)
      acc = direct_sum(acc, matroid_from_json(j["args"][i]));
    return acc;
  }
  if (kind == "parallel_connection" || kind == "series_connection") {
    if (!j.contains("args") || j["args"].size() != 2)
      throw Error(Errc::BadInput, kind + " needs exactly two matroids in \"args\"");
    if (!j.contains("basepoints") || j["basepoints"].size() != 2)
      throw Error(Errc::BadInput, kind + " needs two \"basepoints\" labels");
    Matroid ma = matroid_from_json(j["args"][0]);
    Matroid mb = matroid_from_json(j["args"][1]);
    const int pa = ma.label_index(j["basepoints"][0].get<std::string>());
    const int pb = mb.label_index(j["basepoints"][1].get<std::string>());
    if (pa < 0 || pb < 0) throw Error(Errc::BadInput, "basepoint label not found");
    PointedMatroid a(std::move(ma), pa), b(std::move(mb), pb);
    return kind == "parallel_connection" ? parallel_connection(a, b).matroid
                                         : series_connection(a, b).matroid;
  }
  throw Error(Errc::BadInput, "unknown construction: " + kind);
}

Json set_to_json(mask_t m, const std::vector<std::string>& labels) {
  Json out = Json::array();
  for (std::size_t e = 0; e < labels.size(); ++e)
    if ((m >> e) & 1u) out.push_back(labels[e]);
  return out;
}

Json matroid_to_json(const Matroid& m) {
  Json out;
  out["labels"] = m.labels();
  Json bases = Json::array();
  for (mask_t b : m.bases()) bases.push_back(set_to_json(b, m.labels()));
  out["bases"] = std::move(bases);
  return out;
}

Json vec_to_json(const Vec& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

Json bigint_to_json(const BigInt& v) {
  if (v.fits_int64()) return v.to_int64();
  return v.to_string();
}

Json complex_to_json(const SimplicialComplex& dx) {
  Json out;
  Json verts = Json::array();
  mask_t vs = dx.vertex_set();
  while (vs) {
    mask_t bit = vs & (~vs + 1);
    vs ^= bit;
    verts.push_back(dx.vertex_labels()[lowest_bit(bit)]);
  }
  out["vertices"] = std::move(verts);
  Json facets = Json::array();
  for (mask_t f : dx.facets()) facets.push_back(set_to_json(f, dx.vertex_labels()));
  out["facets"] = std::move(facets);
  out["f"] = vec_to_json(dx.f_vector());
  out["h"] = vec_to_json(dx.h_vector());
  out["dim"] = dx.dim();
  out["pure"] = dx.pure();
  return out;
}

Json check_to_json(const CheckResult& r) {
  Json out;
  out["check"] = r.check;
  if (r.i >= 0) out["i"] = r.i;
  if (r.j >= 0) out["j"] = r.j;
  if (r.k >= 0) out["k"] = r.k;
  if (!r.relation.empty()) {
    out["relation"] = r.relation;
    out["lhs"] = bigint_to_json(r.lhs);
    out["rhs"] = bigint_to_json(r.rhs);
    out["slack"] = bigint_to_json(r.slack());
  }
  out["verdict"] = verdict_name(r.verdict);
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

Json checks_to_json(const std::vector<CheckResult>& rs) {
  Json out = Json::array();
  for (const auto& r : rs) out.push_back(check_to_json(r));
  return out;
}

Json poly_to_json(const IntPoly& p) {
  Json out = Json::array();
  for (int k = 0; k <= p.degree(); ++k) out.push_back(bigint_to_json(p.at(k)));
  return out;
}

Json bivar_to_json(const BivarPoly& p) {
  Json out = Json::array();
  for (int i = 0; i <= p.xdeg(); ++i)
    for (int j = 0; j <= p.ydeg(); ++j)
      if (!p.at(i, j).is_zero()) out.push_back(Json::array({i, j, bigint_to_json(p.at(i, j))}));
  return out;
}

}  // namespace matx
