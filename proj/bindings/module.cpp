#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "wschub/gkm.hpp"
#include "wschub/json_io.hpp"
#include "wschub/selftest.hpp"

namespace py = pybind11;
using namespace wschub;

namespace {

ContextPtr make_context(int n, const std::vector<int>& dims, std::vector<long long> weights,
                        long long u) {
    FlagConfig cfg(n, dims);
    if (weights.empty()) weights.assign(n, 0);
    return GKMContext::create(cfg, WeightData(std::move(weights), u, cfg));
}

Flavor flavor_of(const std::string& s) {
    auto f = flavor_from_string(s);
    if (!f) throw std::invalid_argument("unknown flavor: " + s);
    return *f;
}

}  // namespace

PYBIND11_MODULE(wschub, m) {
    m.doc() = "Exact Schubert calculus on weighted partial flag orbifolds of type A";

    m.def("length", [](const std::string& sigma) { return Permutation::parse(sigma).length(); },
          py::arg("sigma"));

    m.def("inversions",
          [](const std::string& sigma) { return Permutation::parse(sigma).inversions(); },
          py::arg("sigma"));

    m.def("bruhat_leq",
          [](const std::string& a, const std::string& b) {
              return bruhat_leq(Permutation::parse(a), Permutation::parse(b));
          },
          py::arg("sigma"), py::arg("tau"));

    m.def("cosets",
          [](int n, const std::vector<int>& dims) {
              CosetSystem system(FlagConfig(n, dims));
              std::vector<std::string> out;
              for (const Permutation& p : system.reps()) out.push_back(p.to_string(n));
              return out;
          },
          py::arg("n"), py::arg("dims"));

    m.def("betti",
          [](int n, const std::vector<int>& dims) {
              CosetSystem system(FlagConfig(n, dims));
              return py::make_tuple(system.dimension(), system.poincare());
          },
          py::arg("n"), py::arg("dims"));

    m.def("tableaux",
          [](int n, const std::vector<int>& dims, std::vector<long long> weights, long long u) {
              FlagConfig cfg(n, dims);
              if (weights.empty()) weights.assign(n, 0);
              WeightData wd(std::move(weights), u, cfg);
              py::list out;
              for (const Tableau& t : enumerate_tableaux(StaircaseShape::of(cfg), n)) {
                  py::dict row;
                  row["tableau"] = t.to_string();
                  row["weight"] = t.weight_string(n, false);
                  row["sl_weight"] = t.weight_string(n, true);
                  row["total_weight"] = t.total_weight(wd);
                  out.append(row);
              }
              return out;
          },
          py::arg("n"), py::arg("dims"), py::arg("weights") = std::vector<long long>{},
          py::arg("u") = 1);

    m.def("tableau_of_perm",
          [](const std::string& sigma, int n, const std::vector<int>& dims) {
              CosetSystem system(FlagConfig(n, dims));
              return tableau_of_perm(Permutation::parse(sigma), system).to_string();
          },
          py::arg("sigma"), py::arg("n"), py::arg("dims"));

    m.def("min_admissible_u",
          [](const std::vector<long long>& weights, int n, const std::vector<int>& dims) {
              return min_admissible_u(weights, FlagConfig(n, dims));
          },
          py::arg("weights"), py::arg("n"), py::arg("dims"));

    m.def("schubert_poly",
          [](const std::string& sigma, int mm) {
              Permutation p = Permutation::parse(sigma);
              if (mm == 0) mm = std::max(2, p.size());
              SchubertEngine eng(make_universe(std::max(2, mm)));
              return eng.schubert(p, mm).to_string();
          },
          py::arg("sigma"), py::arg("m") = 0);

    m.def("double_schubert",
          [](const std::string& sigma, int mm, const std::string& route) {
              Permutation p = Permutation::parse(sigma);
              if (mm == 0) mm = std::max(2, p.size());
              SchubertEngine eng(make_universe(std::max(2, mm)));
              auto r = route == "sum" ? SchubertEngine::DoubleRoute::SumFormula
                                      : SchubertEngine::DoubleRoute::DividedDifference;
              return eng.double_schubert(p, mm, r).to_string();
          },
          py::arg("sigma"), py::arg("m") = 0, py::arg("route") = "dd");

    m.def("weighted_schubert",
          [](const std::string& sigma, int n, const std::vector<int>& dims,
             std::vector<long long> weights, long long u, bool with_bw) {
              FlagConfig cfg(n, dims);
              if (weights.empty()) weights.assign(n, 0);
              UniversePtr uni = make_universe(n);
              SchubertEngine eng(uni);
              WeightedSubstitution ws(cfg, WeightData(std::move(weights), u, cfg), uni);
              Permutation p = Permutation::parse(sigma);
              Polynomial poly = with_bw ? weighted_double_schubert(eng, p, n, ws)
                                        : weighted_schubert(eng, p, n, ws);
              return poly.to_string();
          },
          py::arg("sigma"), py::arg("n"), py::arg("dims"),
          py::arg("weights") = std::vector<long long>{}, py::arg("u") = 1,
          py::arg("with_bw") = false);

    m.def("restriction_table",
          [](int n, const std::vector<int>& dims, const std::vector<long long>& weights,
             long long u, const std::string& flavor, const std::string& sigma) {
              ContextPtr ctx = make_context(n, dims, weights, u);
              Flavor f = flavor_of(flavor);
              std::vector<int> idxs;
              if (sigma.empty())
                  for (int i = 0; i < ctx->cosets().size(); ++i) idxs.push_back(i);
              else {
                  int idx = ctx->cosets().index_of(Permutation::parse(sigma));
                  if (idx < 0) throw std::invalid_argument("sigma is not a representative");
                  idxs.push_back(idx);
              }
              py::dict classes;
              for (int idx : idxs) {
                  py::dict table;
                  const auto& restr = ctx->basis_table(f, idx);
                  for (int t = 0; t < ctx->cosets().size(); ++t)
                      table[py::str(ctx->cosets().rep(t).to_string(n))] = restr[t].to_string();
                  classes[py::str(ctx->cosets().rep(idx).to_string(n))] = table;
              }
              return classes;
          },
          py::arg("n"), py::arg("dims"), py::arg("weights") = std::vector<long long>{},
          py::arg("u") = 1, py::arg("flavor") = "straight", py::arg("sigma") = "");

    m.def("verify_gkm",
          [](int n, const std::vector<int>& dims, const std::vector<long long>& weights,
             long long u, const std::string& flavor) {
              ContextPtr ctx = make_context(n, dims, weights, u);
              Flavor f = flavor_of(flavor);
              int edges = 0;
              for (int idx = 0; idx < ctx->cosets().size(); ++idx) {
                  VerifyReport rep = verify_gkm(ctx->basis_class(f, idx));
                  if (!rep.ok) return py::make_tuple(false, rep.failures.front().detail);
                  edges += rep.edges_checked;
              }
              return py::make_tuple(true, std::to_string(edges) + " edge checks");
          },
          py::arg("n"), py::arg("dims"), py::arg("weights") = std::vector<long long>{},
          py::arg("u") = 1, py::arg("flavor") = "weighted");

    m.def("chevalley_check",
          [](int n, const std::vector<int>& dims, const std::vector<long long>& weights,
             long long u, const std::string& sigma, int d, const std::string& flavor) {
              ContextPtr ctx = make_context(n, dims, weights, u);
              ChevalleyResult res =
                  chevalley_check(ctx, d, Permutation::parse(sigma), flavor_of(flavor),
                                  calibrated_chevalley_convention());
              py::dict out;
              out["ok"] = res.entrywise_ok && res.oracle_ok;
              out["entrywise_ok"] = res.entrywise_ok;
              out["oracle_ok"] = res.oracle_ok;
              py::list covers;
              for (int idx : res.cover_idxs) covers.append(ctx->cosets().rep(idx).to_string(n));
              out["covers"] = covers;
              out["detail"] = res.detail;
              return out;
          },
          py::arg("n"), py::arg("dims"), py::arg("weights") = std::vector<long long>{},
          py::arg("u") = 1, py::arg("sigma") = "id", py::arg("d") = 1,
          py::arg("flavor") = "weighted");

    m.def("monk_check",
          [](int n, const std::vector<int>& dims, const std::vector<long long>& weights,
             long long u, const std::string& sigma, int d) {
              FlagConfig cfg(n, dims);
              std::vector<long long> w = weights;
              if (w.empty()) w.assign(n, 0);
              WeightData wd(w, u, cfg);
              SchubertEngine eng(make_universe(n));
              MonkIdentity res = monk_identity_check(eng, cfg, wd, Permutation::parse(sigma), d);
              return py::make_tuple(res.ok, res.residual.to_string());
          },
          py::arg("n"), py::arg("dims"), py::arg("weights") = std::vector<long long>{},
          py::arg("u") = 1, py::arg("sigma") = "id", py::arg("d") = 1);

    m.def("selftest",
          [](unsigned long long seed) {
              py::list out;
              for (const CriterionResult& r : run_acceptance(seed)) {
                  py::dict row;
                  row["id"] = r.id;
                  row["name"] = r.name;
                  row["pass"] = r.pass;
                  row["detail"] = r.detail;
                  row["ms"] = r.ms;
                  out.append(row);
              }
              return out;
          },
          py::arg("seed") = 20240915ULL);
}
