// JSON schemas for matroids, complexes, vectors and check reports.  The
// matroid input schema accepts either an explicit basis list or a nested
// construction tree; the exact shape is documented in the README.

#pragma once

#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "matx/bounds.hpp"
#include "matx/complex.hpp"
#include "matx/matroid.hpp"
#include "matx/poly.hpp"

namespace matx {

using Json = nlohmann::json;

Matroid matroid_from_json(const Json& j);
Json matroid_to_json(const Matroid& m);

// graph edge lists appear both as matroid constructions and as reliability
// inputs, where connectivity of the graph itself matters
using GraphEdge = std::tuple<std::string, std::string, std::string>;
std::vector<GraphEdge> graph_edges_from_json(const Json& j);
bool graph_connected(const std::vector<GraphEdge>& edges);

Json set_to_json(mask_t m, const std::vector<std::string>& labels);
Json vec_to_json(const Vec& v);
Json bigint_to_json(const BigInt& v);  // number when it fits int64, else decimal string
Json complex_to_json(const SimplicialComplex& dx);
Json check_to_json(const CheckResult& r);
Json checks_to_json(const std::vector<CheckResult>& rs);
Json poly_to_json(const IntPoly& p);
Json bivar_to_json(const BivarPoly& p);  // [[i, j, c], ...] for nonzero entries

}  // namespace matx
