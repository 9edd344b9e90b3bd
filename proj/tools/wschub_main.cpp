#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "wschub/gkm.hpp"
#include "wschub/json_io.hpp"
#include "wschub/selftest.hpp"

using namespace wschub;
using nlohmann::json;

namespace {

struct CommonOpts {
    int n = 0;
    std::vector<int> dims;
    std::vector<long long> weights;
    long long u = 1;
    std::string format = "text";
    std::string output;

    FlagConfig config() const { return FlagConfig(n, dims); }
    WeightData weight_data(const FlagConfig& cfg) const {
        std::vector<long long> w = weights;
        if (w.empty()) w.assign(cfg.n, 0);
        return WeightData(w, u, cfg);
    }
};

void add_config_flags(CLI::App* cmd, CommonOpts& o, bool with_weights = true) {
    cmd->add_option("--n", o.n, "ambient dimension")->required();
    cmd->add_option("--dims", o.dims, "flag dimensions d1<...<dr")->required()->delimiter(',');
    if (with_weights) {
        cmd->add_option("--weights", o.weights, "torus weights w1..wn (default all zero)")
            ->delimiter(',');
        cmd->add_option("--u", o.u, "character shift u (default 1)");
    }
    cmd->add_option("--format", o.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--output", o.output, "write the report to this file");
}

void emit(const CommonOpts& o, const std::string& body) {
    if (o.output.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(o.output);
    if (!out) throw std::invalid_argument("cannot open output file " + o.output);
    out << body;
}

std::string join_ll(const std::vector<long long>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    return os.str();
}

Flavor parse_flavor(const std::string& s) {
    auto f = flavor_from_string(s);
    if (!f) throw std::invalid_argument("unknown flavor: " + s);
    return *f;
}

MonkConvention parse_convention(const std::string& s) {
    if (s == "auto") return calibrated_chevalley_convention();
    if (s == "position-swap") return MonkConvention::PositionSwap;
    if (s == "value-swap") return MonkConvention::ValueSwap;
    throw std::invalid_argument("unknown convention: " + s);
}

int run_cosets(const CommonOpts& o) {
    CosetSystem system(o.config());
    std::ostringstream os;
    if (o.format == "json") {
        json reps = json::array();
        for (const Permutation& p : system.reps())
            reps.push_back({{"word", p.to_string(o.n)}, {"length", p.length()}});
        json covers = json::array();
        for (int a = 0; a < system.size(); ++a)
            for (int b = 0; b < system.size(); ++b)
                if (system.rep(b).length() == system.rep(a).length() + 1 &&
                    bruhat_leq(system.rep(a), system.rep(b)))
                    covers.push_back({system.rep(a).to_string(o.n), system.rep(b).to_string(o.n)});
        os << json{{"config", {{"n", o.n}, {"dims", o.dims}}},
                   {"dim", system.dimension()},
                   {"reps", reps},
                   {"covers", covers}}
                  .dump(2)
           << "\n";
    } else {
        os << o.config().to_string() << " |W^P|=" << system.size()
           << " dim=" << system.dimension() << "\n";
        for (const Permutation& p : system.reps())
            os << p.to_string(o.n) << " l=" << p.length() << "\n";
        for (int a = 0; a < system.size(); ++a)
            for (int b = 0; b < system.size(); ++b)
                if (system.rep(b).length() == system.rep(a).length() + 1 &&
                    bruhat_leq(system.rep(a), system.rep(b)))
                    os << "cover: " << system.rep(a).to_string(o.n) << " -> "
                       << system.rep(b).to_string(o.n) << "\n";
    }
    emit(o, os.str());
    return 0;
}

int run_betti(const CommonOpts& o) {
    CosetSystem system(o.config());
    std::vector<long long> counts = system.poincare();
    std::ostringstream os;
    if (o.format == "json")
        os << json{{"dim", system.dimension()}, {"betti", counts}, {"size", system.size()}}.dump(2)
           << "\n";
    else
        os << "dim=" << system.dimension() << "\n"
           << "betti=" << join_ll(counts) << "\n";
    emit(o, os.str());
    return 0;
}

int run_tableaux(const CommonOpts& o) {
    FlagConfig cfg = o.config();
    WeightData wd = o.weight_data(cfg);
    StaircaseShape shape = StaircaseShape::of(cfg);
    auto tabs = enumerate_tableaux(shape, cfg.n);
    std::vector<long long> ambient;
    for (const Tableau& t : tabs) ambient.push_back(t.total_weight(wd));
    std::ostringstream os;
    if (o.format == "json") {
        json rows = json::array();
        for (const Tableau& t : tabs)
            rows.push_back({{"tableau", t.to_string()},
                            {"weight", t.weight_string(cfg.n, false)},
                            {"sl_weight", t.weight_string(cfg.n, true)},
                            {"total_weight", t.total_weight(wd)}});
        os << json{{"count", tabs.size()}, {"ambient", ambient}, {"tableaux", rows}}.dump(2)
           << "\n";
    } else {
        os << "count=" << tabs.size() << "\n";
        os << "ambient=P(" << join_ll(ambient) << ")\n";
        for (const Tableau& t : tabs)
            os << t.to_string() << " weight=" << t.weight_string(cfg.n, false)
               << " sl=" << t.weight_string(cfg.n, true) << " wY=" << t.total_weight(wd) << "\n";
    }
    emit(o, os.str());
    return 0;
}

int run_restrict(const CommonOpts& o, const std::string& flavor_s, const std::string& sigma_s,
                 bool all) {
    FlagConfig cfg = o.config();
    ContextPtr ctx = GKMContext::create(cfg, o.weight_data(cfg));
    Flavor flavor = parse_flavor(flavor_s);
    std::vector<int> idxs;
    if (all) {
        idxs.resize(ctx->cosets().size());
        std::iota(idxs.begin(), idxs.end(), 0);
    } else {
        if (sigma_s.empty()) throw std::invalid_argument("need --sigma or --all");
        int idx = ctx->cosets().index_of(Permutation::parse(sigma_s));
        if (idx < 0)
            throw std::invalid_argument("sigma is not a minimal coset representative");
        idxs.push_back(idx);
    }
    json j = restriction_tables_json(ctx, flavor, idxs);
    std::ostringstream os;
    if (o.format == "text") {
        for (int idx : idxs) {
            os << "class " << ctx->cosets().rep(idx).to_string(cfg.n) << ":\n";
            const auto& table = ctx->basis_table(flavor, idx);
            for (int t = 0; t < ctx->cosets().size(); ++t)
                os << "  " << ctx->cosets().rep(t).to_string(cfg.n) << ": "
                   << table[t].to_string() << "\n";
        }
    } else {
        os << j.dump(2) << "\n";
    }
    emit(o, os.str());
    return 0;
}

int run_verify(const CommonOpts& o, const std::string& input, const std::string& flavor_s,
               const std::string& sigma_s, bool all) {
    std::vector<std::pair<std::string, GKMClass>> classes;
    if (!input.empty()) {
        json j;
        if (input == "-") {
            std::cin >> j;
        } else {
            std::ifstream in(input);
            if (!in) throw std::invalid_argument("cannot open " + input);
            in >> j;
        }
        LoadedTables loaded = load_restriction_tables(j);
        for (auto& [idx, cls] : loaded.classes)
            classes.emplace_back(loaded.ctx->cosets().rep(idx).to_string(loaded.ctx->config().n),
                                 std::move(cls));
    } else {
        FlagConfig cfg = o.config();
        ContextPtr ctx = GKMContext::create(cfg, o.weight_data(cfg));
        Flavor flavor = parse_flavor(flavor_s);
        std::vector<int> idxs;
        if (all || sigma_s.empty()) {
            idxs.resize(ctx->cosets().size());
            std::iota(idxs.begin(), idxs.end(), 0);
        } else {
            int idx = ctx->cosets().index_of(Permutation::parse(sigma_s));
            if (idx < 0)
                throw std::invalid_argument("sigma is not a minimal coset representative");
            idxs.push_back(idx);
        }
        for (int idx : idxs)
            classes.emplace_back(ctx->cosets().rep(idx).to_string(cfg.n),
                                 ctx->basis_class(flavor, idx));
    }
    std::ostringstream os;
    int status = 0;
    for (const auto& [name, cls] : classes) {
        VerifyReport rep = verify_gkm(cls);
        if (rep.ok) {
            os << "ok " << name << " (" << rep.edges_checked << " edges)\n";
        } else {
            status = 1;
            const auto& f = rep.failures.front();
            os << "FAIL " << name << " edge (" << cls.context()->cosets().rep(f.edge.a).to_string()
               << ", " << cls.context()->cosets().rep(f.edge.b).to_string() << ", i=" << f.edge.i
               << ", j=" << f.edge.j << "): " << f.detail << "\n";
        }
    }
    emit(o, os.str());
    return status;
}

int run_chevalley(const CommonOpts& o, const std::string& flavor_s, const std::string& sigma_s,
                  int d, bool all, const std::string& conv_s) {
    FlagConfig cfg = o.config();
    ContextPtr ctx = GKMContext::create(cfg, o.weight_data(cfg));
    Flavor flavor = parse_flavor(flavor_s);
    MonkConvention conv = parse_convention(conv_s);
    std::vector<std::pair<Permutation, int>> jobs;
    if (all) {
        for (const Permutation& sigma : ctx->cosets().reps())
            for (int dd : cfg.dims) jobs.emplace_back(sigma, dd);
    } else {
        if (sigma_s.empty() || d == 0) throw std::invalid_argument("need --sigma and --d, or --all");
        jobs.emplace_back(Permutation::parse(sigma_s), d);
    }
    std::ostringstream os;
    int failures = 0;
    for (const auto& [sigma, dd] : jobs) {
        ChevalleyResult res = chevalley_check(ctx, dd, sigma, flavor, conv);
        bool ok = res.entrywise_ok && res.oracle_ok;
        if (!ok) {
            ++failures;
            os << "FAIL sigma=" << sigma.to_string(cfg.n) << " d=" << dd << ": " << res.detail
               << "\n";
        } else if (!all) {
            os << "PASS sigma=" << sigma.to_string(cfg.n) << " d=" << dd << " covers=";
            for (size_t k = 0; k < res.cover_idxs.size(); ++k) {
                if (k) os << "+";
                os << ctx->cosets().rep(res.cover_idxs[k]).to_string(cfg.n);
            }
            os << "\n";
        }
    }
    if (all) {
        if (failures == 0)
            os << "PASS (all " << jobs.size() << " products)\n";
        else
            os << "FAIL (" << failures << " of " << jobs.size() << " products)\n";
    }
    emit(o, os.str());
    return failures == 0 ? 0 : 1;
}

int run_monk(const CommonOpts& o, const std::string& sigma_s, int d, bool all,
             const std::string& conv_s) {
    FlagConfig cfg = o.config();
    WeightData wd = o.weight_data(cfg);
    MonkConvention conv = conv_s == "auto" ? MonkConvention::PositionSwap : parse_convention(conv_s);
    SchubertEngine eng(make_universe(cfg.n));
    std::vector<std::pair<Permutation, int>> jobs;
    if (all) {
        CosetSystem full(FlagConfig::full_flag(cfg.n));
        for (const Permutation& sigma : full.reps())
            for (int dd : cfg.dims) jobs.emplace_back(sigma, dd);
    } else {
        if (sigma_s.empty() || d == 0) throw std::invalid_argument("need --sigma and --d, or --all");
        jobs.emplace_back(Permutation::parse(sigma_s), d);
    }
    std::ostringstream os;
    int failures = 0;
    for (const auto& [sigma, dd] : jobs) {
        MonkIdentity res = monk_identity_check(eng, cfg, wd, sigma, dd, conv);
        if (!res.ok) {
            ++failures;
            os << "FAIL sigma=" << sigma.to_string(cfg.n) << " d=" << dd
               << " residual=" << res.residual.to_string() << "\n";
        } else if (!all) {
            os << "PASS sigma=" << sigma.to_string(cfg.n) << " d=" << dd << " covers=";
            for (size_t k = 0; k < res.covers.size(); ++k) {
                if (k) os << "+";
                os << res.covers[k].to_string();
            }
            os << "\n";
        }
    }
    if (all) {
        if (failures == 0)
            os << "PASS (all " << jobs.size() << " identities)\n";
        else
            os << "FAIL (" << failures << " of " << jobs.size() << " identities)\n";
    }
    emit(o, os.str());
    return failures == 0 ? 0 : 1;
}

int run_schubert_poly(const CommonOpts& o, const std::string& sigma_s, const std::string& kind,
                      int m) {
    Permutation sigma = Permutation::parse(sigma_s);
    bool weighted = kind == "weighted" || kind == "weighted-double";
    int n = weighted ? o.n : std::max({2, m, sigma.size()});
    if (m == 0) m = weighted ? o.n : std::max(2, sigma.size());
    UniversePtr uni = make_universe(n);
    SchubertEngine eng(uni);
    Polynomial p(uni);
    if (kind == "single") {
        p = eng.schubert(sigma, m);
    } else if (kind == "double") {
        p = eng.double_schubert(sigma, m, SchubertEngine::DoubleRoute::DividedDifference);
    } else if (kind == "double-sum") {
        p = eng.double_schubert(sigma, m, SchubertEngine::DoubleRoute::SumFormula);
    } else if (weighted) {
        FlagConfig cfg = o.config();
        WeightedSubstitution ws(cfg, o.weight_data(cfg), uni);
        p = kind == "weighted" ? weighted_schubert(eng, sigma, m, ws)
                               : weighted_double_schubert(eng, sigma, m, ws);
    } else {
        throw std::invalid_argument("unknown kind: " + kind);
    }
    std::ostringstream os;
    if (o.format == "json")
        os << poly_to_json(p).dump(2) << "\n";
    else
        os << p.to_string() << "\n";
    emit(o, os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Schubert calculus on weighted partial flag orbifolds of type A"};
    app.require_subcommand(1);

    CommonOpts cosets_o, betti_o, tabs_o, restr_o, verify_o, chev_o, monk_o, spoly_o, self_o;
    std::string restr_flavor = "straight", restr_sigma;
    bool restr_all = false;
    std::string verify_input, verify_flavor = "straight", verify_sigma;
    bool verify_all = false;
    std::string chev_flavor = "weighted", chev_sigma, chev_conv = "auto";
    int chev_d = 0;
    bool chev_all = false;
    std::string monk_sigma, monk_conv = "position-swap";
    int monk_d = 0;
    bool monk_all = false;
    std::string spoly_sigma, spoly_kind = "single";
    int spoly_m = 0;
    unsigned long long seed = 20240915ULL;

    auto* cosets = app.add_subcommand("cosets", "minimal coset representatives and Bruhat covers");
    add_config_flags(cosets, cosets_o, false);

    auto* betti = app.add_subcommand("betti", "cohomology ranks and dimension");
    add_config_flags(betti, betti_o, false);

    auto* tableaux = app.add_subcommand("tableaux", "staircase tableaux, weights, ambient space");
    add_config_flags(tableaux, tabs_o);

    auto* restrict_cmd = app.add_subcommand("restrict", "restriction table of Schubert classes");
    add_config_flags(restrict_cmd, restr_o);
    restr_o.format = "json";
    restrict_cmd->add_option("--flavor", restr_flavor, "straight, cone, or weighted");
    restrict_cmd->add_option("--sigma", restr_sigma, "class index (one-line or s-word)");
    restrict_cmd->add_flag("--all", restr_all, "emit every class");

    auto* verify = app.add_subcommand("verify-gkm", "check the edge conditions of a table");
    verify->add_option("--input", verify_input, "restriction-table JSON file ('-' for stdin)");
    verify->add_option("--n", verify_o.n, "ambient dimension");
    verify->add_option("--dims", verify_o.dims, "flag dimensions")->delimiter(',');
    verify->add_option("--weights", verify_o.weights, "torus weights")->delimiter(',');
    verify->add_option("--u", verify_o.u, "character shift");
    verify->add_option("--flavor", verify_flavor, "straight, cone, or weighted");
    verify->add_option("--sigma", verify_sigma, "single class to verify");
    verify->add_flag("--all", verify_all, "verify every class");
    verify->add_option("--output", verify_o.output, "write the report to this file");

    auto* chevalley = app.add_subcommand("chevalley", "product formula verification");
    add_config_flags(chevalley, chev_o);
    chevalley->add_option("--flavor", chev_flavor, "straight or weighted");
    chevalley->add_option("--sigma", chev_sigma, "class index");
    chevalley->add_option("--d", chev_d, "flag dimension of the simple class");
    chevalley->add_flag("--all", chev_all, "sweep every (sigma, d)");
    chevalley->add_option("--convention", chev_conv, "position-swap, value-swap, or auto");

    auto* monk = app.add_subcommand("monk", "polynomial product identity sweep");
    add_config_flags(monk, monk_o);
    monk->add_option("--sigma", monk_sigma, "permutation");
    monk->add_option("--d", monk_d, "simple reflection index");
    monk->add_flag("--all", monk_all, "sweep every (sigma, d)");
    monk->add_option("--convention", monk_conv, "position-swap or value-swap");

    auto* spoly = app.add_subcommand("schubert-poly", "single, double, and weighted polynomials");
    spoly->add_option("--sigma", spoly_sigma, "permutation (one-line or s-word)")->required();
    spoly->add_option("--kind", spoly_kind, "single|double|double-sum|weighted|weighted-double");
    spoly->add_option("--m", spoly_m, "ambient symmetric group size");
    spoly->add_option("--n", spoly_o.n, "ambient dimension (weighted kinds)");
    spoly->add_option("--dims", spoly_o.dims, "flag dimensions (weighted kinds)")->delimiter(',');
    spoly->add_option("--weights", spoly_o.weights, "torus weights")->delimiter(',');
    spoly->add_option("--u", spoly_o.u, "character shift");
    spoly->add_option("--format", spoly_o.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    spoly->add_option("--output", spoly_o.output, "write the result to this file");

    auto* selftest = app.add_subcommand("selftest", "run the full acceptance suite");
    selftest->add_option("--seed", seed, "seed for the randomized round-trip checks");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cosets->parsed()) return run_cosets(cosets_o);
        if (betti->parsed()) return run_betti(betti_o);
        if (tableaux->parsed()) return run_tableaux(tabs_o);
        if (restrict_cmd->parsed())
            return run_restrict(restr_o, restr_flavor, restr_sigma, restr_all);
        if (verify->parsed())
            return run_verify(verify_o, verify_input, verify_flavor, verify_sigma, verify_all);
        if (chevalley->parsed())
            return run_chevalley(chev_o, chev_flavor, chev_sigma, chev_d, chev_all, chev_conv);
        if (monk->parsed()) return run_monk(monk_o, monk_sigma, monk_d, monk_all, monk_conv);
        if (spoly->parsed()) return run_schubert_poly(spoly_o, spoly_sigma, spoly_kind, spoly_m);
        if (selftest->parsed()) return print_acceptance(std::cout, seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
