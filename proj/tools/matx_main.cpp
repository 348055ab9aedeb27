// matx: exact matroid / simplicial-complex invariants and verification sweeps.
//
// Exit codes: 0 clean (including skipped checks), 2 verification violation,
// 3 input or validation error.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "matx/bounds.hpp"
#include "matx/complex.hpp"
#include "matx/corpus.hpp"
#include "matx/homology.hpp"
#include "matx/matroid_json.hpp"
#include "matx/tutte.hpp"

#ifdef MATX_HAVE_OPENMP
#include <omp.h>
#endif

namespace fs = std::filesystem;
using matx::Json;

namespace {

constexpr int kExitViolation = 2;
constexpr int kExitInputError = 3;
constexpr const char* kVersion = "0.1.0";

// FNV-1a over the raw input bytes, hex; reports carry it so a result can be
// tied back to the exact input file
std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return "";
  std::uint64_t h = 1469598103934665603ull;
  char ch;
  while (in.get(ch)) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw matx::Error(matx::Errc::BadInput, "cannot open " + path);
  Json j;
  in >> j;
  return j;
}

void stamp(Json& report, const std::string& input_path) {
  report["tool"] = "matx";
  report["version"] = kVersion;
  if (!input_path.empty()) report["input_digest"] = file_digest(input_path);
}

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw matx::Error(matx::Errc::BadInput, "cannot write " + out_path);
  out << j.dump(2) << "\n";
}

// vector tables as CSV rows: name,v0,v1,...
void emit_csv(const std::vector<std::pair<std::string, Json>>& rows, const std::string& out_path) {
  std::ostringstream os;
  for (const auto& [name, v] : rows) {
    if (v.is_null()) continue;
    os << name;
    for (const auto& x : v) os << "," << x.dump();
    os << "\n";
  }
  if (out_path.empty()) {
    std::cout << os.str();
    return;
  }
  std::ofstream out(out_path);
  out << os.str();
}

std::vector<int> parse_order(const matx::Matroid& m, const std::string& csv) {
  if (csv.empty()) return {};
  std::vector<int> order;
  std::stringstream ss(csv);
  std::string name;
  while (std::getline(ss, name, ',')) {
    const int e = m.label_index(name);
    if (e < 0) throw matx::Error(matx::Errc::BadInput, "ordering names unknown element: " + name);
    order.push_back(e);
  }
  return order;
}

Json invariants_report(const matx::Matroid& m, const std::string& order_csv, int kcm_cap,
                       bool with_homology) {
  Json out;
  out["n"] = m.n();
  out["rank"] = m.rank();
  out["labels"] = m.labels();
  out["loops"] = matx::set_to_json(m.loops(), m.labels());
  out["coloops"] = matx::set_to_json(m.coloops(), m.labels());
  Json comps = Json::array();
  for (matx::mask_t c : m.components()) comps.push_back(matx::set_to_json(c, m.labels()));
  out["components"] = std::move(comps);
  out["connected"] = m.is_connected();
  auto mc = m.min_cocircuit_size();
  out["min_cocircuit"] = mc ? Json(*mc) : Json(nullptr);
  out["kcm_level_by_cocircuit"] = mc ? Json(*mc) : Json(nullptr);

  const matx::SimplicialComplex ind = matx::independence_complex(m);
  out["independence_complex"] = matx::complex_to_json(ind);
  const auto sh = matx::short_h(ind);
  out["short_h"] = matx::vec_to_json(sh.by_links);
  out["short_h_consistent"] = sh.consistent();

  if (!m.loops()) {
    const auto bc = matx::broken_circuit_complex(m, parse_order(m, order_csv));
    out["broken_circuit_complex"] = matx::complex_to_json(bc);
  } else {
    out["broken_circuit_complex"] = nullptr;
  }

  if (with_homology) {
    const auto betti = matx::reduced_homology(ind);
    Json b = Json::array();
    for (auto v : betti.betti) b.push_back(v);
    out["independence_betti_from_dim_minus_1"] = std::move(b);
    out["cm_by_homology"] = matx::is_cohen_macaulay(ind);
    out["kcm_level_by_homology"] = matx::kcm_level(ind, kcm_cap);
  }
  return out;
}

Json tutte_report(const matx::Matroid& m, bool force_charpoly) {
  Json out;
  const matx::BivarPoly t = matx::tutte_polynomial(m);
  out["T"] = matx::bivar_to_json(t);
  const auto fam = matx::coefficient_families(m);
  out["h"] = matx::vec_to_json(fam.h);
  out["b"] = fam.b ? matx::vec_to_json(*fam.b) : Json(nullptr);
  out["b_star"] = fam.b_star ? matx::vec_to_json(*fam.b_star) : Json(nullptr);
  out["w"] = fam.w ? matx::vec_to_json(*fam.w) : Json(nullptr);
  out["beta"] = fam.beta;
  if (force_charpoly || !m.loops())
    out["charpoly"] = matx::poly_to_json(matx::characteristic_polynomial(m));
  else
    out["charpoly"] = nullptr;
  out["bases"] = static_cast<std::int64_t>(m.bases().size());
  return out;
}

struct VerifyStats {
  int violations = 0;
  int below_threshold = 0;
  int skipped = 0;
  int checked = 0;
};

void tally(const std::vector<matx::CheckResult>& rs, VerifyStats& stats) {
  for (const auto& r : rs) {
    switch (r.verdict) {
      case matx::Verdict::Violation: ++stats.violations; break;
      case matx::Verdict::BelowThreshold: ++stats.below_threshold; break;
      case matx::Verdict::Skipped: ++stats.skipped; break;
      default: ++stats.checked; break;
    }
  }
}

// arithmetic-only checks on a bare h-vector; hypotheses are assumed, which
// is what the exploratory runs on non-matroid complexes need
std::vector<matx::CheckResult> raw_suite(const matx::Vec& h, std::int64_t n, int k,
                                         const std::string& suite) {
  std::vector<matx::CheckResult> rs;
  auto append = [&rs](std::vector<matx::CheckResult> more) {
    for (auto& r : more) rs.push_back(std::move(r));
  };
  const bool all = suite == "all";
  if (all || suite == "kcm") {
    append(matx::check_relative_kcm_h(h, n, k));
    append(matx::check_kcm_floor_h(h, k));
  }
  if (all || suite == "chari") append(matx::check_chari_h(h));
  if (all || suite == "g") append(matx::check_g_theorem_h(h));
  if (all || suite == "bc") append(matx::check_brown_colbourn_h(h));
  if (all || suite == "stanley") append(matx::check_stanley_product_h(h));
  if (rs.empty())
    throw matx::Error(matx::Errc::BadInput,
                      "suite " + suite + " is not available for raw h-vector inputs");
  return rs;
}

Json verify_one(const Json& input, const std::string& suite, int raw_k, VerifyStats& stats) {
  if (input.contains("hvector")) {
    matx::Vec h;
    for (const auto& v : input["hvector"]) h.push_back(v.get<std::int64_t>());
    const std::int64_t n = input.contains("n") ? input["n"].get<std::int64_t>() : 0;
    if (n <= 0) throw matx::Error(matx::Errc::BadInput, "raw h-vector input needs \"n\"");
    const int k = input.contains("k") ? input["k"].get<int>() : (raw_k > 0 ? raw_k : 2);
    auto rs = raw_suite(h, n, k, suite);
    tally(rs, stats);
    Json out;
    out["input"] = "hvector";
    out["results"] = matx::checks_to_json(rs);
    return out;
  }
  if (input.contains("facets")) {
    // raw complex route: h and n come from the complex itself; the k-CM
    // hypothesis is probed by homology and reported, never assumed silently
    auto labels = input.contains("vertices")
                      ? input["vertices"].get<std::vector<std::string>>()
                      : std::vector<std::string>{};
    if (labels.empty()) throw matx::Error(matx::Errc::BadInput, "raw complex needs \"vertices\"");
    std::vector<matx::mask_t> facets;
    for (const auto& f : input["facets"]) {
      matx::mask_t mask = 0;
      for (const auto& v : f) {
        const auto it = std::find(labels.begin(), labels.end(), v.get<std::string>());
        if (it == labels.end()) throw matx::Error(matx::Errc::BadInput, "facet names unknown vertex");
        mask |= matx::mask_t{1} << (it - labels.begin());
      }
      facets.push_back(mask);
    }
    const auto dx = matx::SimplicialComplex::from_facets(labels, facets);
    const int k = input.contains("k") ? input["k"].get<int>() : (raw_k > 0 ? raw_k : 2);
    auto rs = raw_suite(dx.h_vector(), dx.num_vertices(), k, suite);
    tally(rs, stats);
    Json out;
    out["input"] = "complex";
    out["n"] = dx.num_vertices();
    out["dim"] = dx.dim();
    out["h"] = matx::vec_to_json(dx.h_vector());
    if (dx.faces().size() <= 4096)
      out["kcm_hypothesis_by_homology"] = matx::is_k_cm(dx, k);
    out["results"] = matx::checks_to_json(rs);
    return out;
  }
  const matx::Matroid m = matx::matroid_from_json(input);
  matx::SuiteOptions opts;
  if (raw_k > 0) {  // caller pinned a specific k
    opts.kcm_ks = {raw_k};
    if (raw_k >= 3) opts.longterm_ks = {raw_k};
  }
  auto rs = matx::run_suite(m, suite, opts);
  tally(rs, stats);
  Json out;
  out["n"] = m.n();
  out["rank"] = m.rank();
  out["results"] = matx::checks_to_json(rs);
  return out;
}

int cmd_verify(const std::string& path, const std::string& suite, int raw_k, bool fail_on_violation,
               const std::string& out_path) {
  VerifyStats stats;
  if (!fs::is_directory(path)) {
    // single input: a plain JSON array of check results
    Json one = verify_one(read_json_file(path), suite, raw_k, stats);
    emit(one["results"], out_path);
    std::cerr << "checked " << stats.checked << ", skipped " << stats.skipped
              << ", below-threshold " << stats.below_threshold << ", violations "
              << stats.violations << "\n";
    return stats.violations > 0 && fail_on_violation ? kExitViolation : 0;
  }
  Json report = Json::array();
  {
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(path)) {
      if (entry.path().extension() == ".json" && entry.path().filename() != "manifest.json")
        files.push_back(entry.path().string());
    }
    std::sort(files.begin(), files.end());
    std::vector<Json> partial(files.size());
    std::vector<VerifyStats> pstats(files.size());
    std::vector<std::string> errors(files.size());
#ifdef MATX_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t i = 0; i < files.size(); ++i) {
      try {
        partial[i] = verify_one(read_json_file(files[i]), suite, raw_k, pstats[i]);
        partial[i]["file"] = files[i];
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
    for (std::size_t i = 0; i < files.size(); ++i) {
      if (!errors[i].empty())
        throw matx::Error(matx::Errc::BadInput, files[i] + ": " + errors[i]);
      stats.violations += pstats[i].violations;
      stats.below_threshold += pstats[i].below_threshold;
      stats.skipped += pstats[i].skipped;
      stats.checked += pstats[i].checked;
      report.push_back(std::move(partial[i]));
    }
  }
  Json out;
  out["suite"] = suite;
  out["checked"] = stats.checked;
  out["skipped"] = stats.skipped;
  out["below_threshold"] = stats.below_threshold;
  out["violations"] = stats.violations;
  out["instances"] = std::move(report);
  stamp(out, "");
  emit(out, out_path);
  if (stats.violations > 0 && fail_on_violation) return kExitViolation;
  return 0;
}

int cmd_corpus_generate(std::uint64_t seed, int max_n, int depth, const std::string& out_dir) {
  matx::CorpusSpec spec;
  spec.seed = seed;
  spec.max_n = max_n;
  spec.closure_depth = depth;
  const auto instances = matx::generate(spec);
  fs::create_directories(out_dir);
  Json manifest;
  manifest["tool"] = "matx";
  manifest["version"] = kVersion;
  manifest["seed"] = seed;
  manifest["max_n"] = max_n;
  manifest["closure_depth"] = depth;
  manifest["prng"] = "splitmix64";
  manifest["count"] = instances.size();
  Json list = Json::array();
  std::set<std::string> used_names;
  for (const auto& inst : instances) {
    std::string fname = inst.id;
    for (auto& ch : fname)
      if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_' && ch != '-') ch = '_';
    while (!used_names.insert(fname).second) fname += "_";
    fname += ".json";
    Json entry;
    entry["id"] = inst.id;
    entry["file"] = fname;
    entry["provenance"] = inst.provenance;
    entry["tags"] = {{"n", inst.tags.n},
                     {"rank", inst.tags.rank},
                     {"components", inst.tags.components},
                     {"connected", inst.tags.connected},
                     {"loopless", inst.tags.loopless},
                     {"coloop_free", inst.tags.coloop_free},
                     {"min_cocircuit", inst.tags.min_cocircuit ? Json(*inst.tags.min_cocircuit)
                                                               : Json(nullptr)},
                     {"kcm_level", inst.tags.kcm_level}};
    list.push_back(std::move(entry));
    std::ofstream out(fs::path(out_dir) / fname);
    out << matx::matroid_to_json(inst.matroid).dump(2) << "\n";
  }
  manifest["instances"] = std::move(list);
  std::ofstream mout(fs::path(out_dir) / "manifest.json");
  mout << manifest.dump(2) << "\n";
  std::cout << "wrote " << instances.size() << " instances to " << out_dir << "\n";
  return 0;
}

int cmd_reliability(const Json& input, const std::string& input_path, const std::string& out_path) {
  matx::Matroid m;
  if (input.contains("edges") ||
      (input.contains("construct") && input["construct"] == "graph")) {
    const auto edges = matx::graph_edges_from_json(input);
    if (!matx::graph_connected(edges))
      throw matx::Error(matx::Errc::NotConnected, "reliability needs a connected graph");
    m = matx::Matroid::cycle_matroid(edges);
  } else {
    m = matx::matroid_from_json(input);
  }
  const matx::IntPoly rel = matx::reliability_polynomial(m);
  Json out;
  out["R"] = matx::poly_to_json(rel);
  out["rank"] = m.rank();
  out["n"] = m.n();
  stamp(out, input_path);
  emit(out, out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact matroid and simplicial-complex invariants"};
  app.require_subcommand(1);

  std::string path, out_path, order_csv, suite = "all";
  int kcm_cap = 4, raw_k = 0;  // 0: raw inputs default to k=2, matroid suites sweep
  bool with_homology = false, force_charpoly = false, fail_on_violation = true, as_csv = false;
  std::uint64_t seed = 42;
  int max_n = 9, depth = 1;
  std::string corpus_dir = "corpus_out";

  auto* inv = app.add_subcommand("invariants", "f/h-vectors, short h, k-CM level, components");
  inv->add_option("path", path, "matroid JSON file")->required();
  inv->add_option("--order", order_csv, "broken-circuit ordering as comma-separated labels");
  inv->add_option("--kcm-cap", kcm_cap, "largest k probed by homology");
  inv->add_flag("--homology", with_homology, "also compute Betti numbers and CM by homology");
  inv->add_flag("--csv", as_csv, "emit the vector tables as CSV instead of JSON");
  inv->add_option("-o,--output", out_path, "write the report here instead of stdout");

  auto* tut = app.add_subcommand("tutte", "Tutte polynomial and coefficient families");
  tut->add_option("path", path, "matroid JSON file")->required();
  tut->add_flag("--charpoly", force_charpoly, "require the characteristic polynomial");
  tut->add_flag("--csv", as_csv, "emit the coefficient families as CSV instead of JSON");
  tut->add_option("-o,--output", out_path, "write the report here instead of stdout");

  auto* ver = app.add_subcommand("verify", "run inequality checkers");
  ver->add_option("path", path, "matroid JSON file, raw h-vector file, or corpus directory")
      ->required();
  ver->add_option("--suite", suite, "all|eq1|eq2|kcm|g|chari|bc|wagner|stanley|maxh|indr|longterm|"
                                    "bryl|wbound|eqdisc|3series|ij|seriesnorm");
  ver->add_option("--k", raw_k,
                  "k for the k-CM family checks (raw inputs default to 2; matroid "
                  "inputs sweep {2,3,4} unless set)");
  ver->add_flag("--fail-on-violation,!--no-fail-on-violation", fail_on_violation,
                "exit 2 when a checker reports VIOLATION (default on)");
  ver->add_option("-o,--output", out_path, "write the report here instead of stdout");

  auto* rel = app.add_subcommand("reliability", "all-terminal reliability polynomial");
  rel->add_option("path", path, "graph or matroid JSON file")->required();
  rel->add_option("-o,--output", out_path, "write the report here instead of stdout");

  auto* corpus = app.add_subcommand("corpus", "corpus tools");
  auto* gen = corpus->add_subcommand("generate", "write a deterministic corpus");
  gen->add_option("--seed", seed, "PRNG seed");
  gen->add_option("--max-n", max_n, "largest ground set size");
  gen->add_option("--depth", depth, "closure depth");
  gen->add_option("-o,--output", corpus_dir, "output directory")->required();

  CLI11_PARSE(app, argc, argv);

  const auto started = std::chrono::steady_clock::now();
  auto elapsed_ms = [&started] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
        .count();
  };

  try {
    int rc = 0;
    if (inv->parsed()) {
      Json rep = invariants_report(matx::matroid_from_json(read_json_file(path)), order_csv,
                                   kcm_cap, with_homology);
      stamp(rep, path);
      if (as_csv) {
        std::vector<std::pair<std::string, Json>> rows{
            {"f_independence", rep["independence_complex"]["f"]},
            {"h_independence", rep["independence_complex"]["h"]},
            {"short_h", rep["short_h"]},
        };
        if (!rep["broken_circuit_complex"].is_null()) {
          rows.emplace_back("f_broken_circuit", rep["broken_circuit_complex"]["f"]);
          rows.emplace_back("h_broken_circuit", rep["broken_circuit_complex"]["h"]);
        }
        emit_csv(rows, out_path);
      } else {
        emit(rep, out_path);
      }
    } else if (tut->parsed()) {
      Json rep = tutte_report(matx::matroid_from_json(read_json_file(path)), force_charpoly);
      stamp(rep, path);
      if (as_csv) {
        emit_csv({{"h", rep["h"]},
                  {"b", rep["b"]},
                  {"b_star", rep["b_star"]},
                  {"w", rep["w"]},
                  {"charpoly", rep["charpoly"]}},
                 out_path);
      } else {
        emit(rep, out_path);
      }
    } else if (ver->parsed()) {
      rc = cmd_verify(path, suite, raw_k, fail_on_violation, out_path);
    } else if (rel->parsed()) {
      Json input = read_json_file(path);
      rc = cmd_reliability(input, path, out_path);
    } else if (corpus->parsed() && gen->parsed()) {
      rc = cmd_corpus_generate(seed, max_n, depth, corpus_dir);
    } else {
      std::cerr << "no subcommand\n";
      return kExitInputError;
    }
    std::cerr << "elapsed: " << elapsed_ms() << " ms\n";
    return rc;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
