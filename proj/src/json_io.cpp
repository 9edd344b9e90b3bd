#include "wschub/json_io.hpp"

#include <stdexcept>

namespace wschub {

using nlohmann::json;

json poly_to_json(const Polynomial& f) {
    json terms = json::array();
    for (const auto& [m, c] : f.terms()) {
        json exps = json::object();
        for (const auto& [v, e] : m.factors) exps[f.universe()->name(v)] = e;
        terms.push_back({{"coeff", rational_to_string(c)}, {"exps", exps}});
    }
    return terms;
}

Polynomial poly_from_json(const UniversePtr& uni, const json& j) {
    Polynomial f(uni);
    for (const auto& term : j) {
        Rational c = rational_from_string(term.at("coeff").get<std::string>());
        Monomial m;
        for (const auto& [name, e] : term.at("exps").items()) {
            auto var = uni->find(name);
            if (!var) throw std::invalid_argument("unknown variable in JSON polynomial: " + name);
            Monomial one;
            one.factors.emplace_back(*var, e.get<int>());
            m = monomial_mul(m, one);
        }
        f.add_term(m, c);
    }
    return f;
}

json restriction_tables_json(const ContextPtr& ctx, Flavor flavor,
                             const std::vector<int>& sigma_idxs) {
    const CosetSystem& cosets = ctx->cosets();
    json classes = json::object();
    for (int idx : sigma_idxs) {
        json table = json::object();
        const auto& restr = ctx->basis_table(flavor, idx);
        for (int t = 0; t < cosets.size(); ++t)
            table[cosets.rep(t).to_string(ctx->config().n)] = restr[t].to_string();
        classes[cosets.rep(idx).to_string(ctx->config().n)] = std::move(table);
    }
    return json{{"flavor", to_string(flavor)},
                {"config", {{"n", ctx->config().n}, {"dims", ctx->config().dims}}},
                {"weights", ctx->weight_data().weights},
                {"u", ctx->weight_data().u},
                {"classes", classes}};
}

LoadedTables load_restriction_tables(const json& j) {
    auto flavor = flavor_from_string(j.at("flavor").get<std::string>());
    if (!flavor) throw std::invalid_argument("unknown flavor in table file");
    FlagConfig cfg(j.at("config").at("n").get<int>(),
                   j.at("config").at("dims").get<std::vector<int>>());
    WeightData wd(j.at("weights").get<std::vector<long long>>(), j.at("u").get<long long>(), cfg);
    auto ctx = GKMContext::create(cfg, wd);

    LoadedTables out;
    out.ctx = ctx;
    out.flavor = *flavor;
    for (const auto& [sigma_word, table] : j.at("classes").items()) {
        int idx = ctx->cosets().index_of(Permutation::parse(sigma_word));
        if (idx < 0)
            throw std::invalid_argument("class key is not a representative: " + sigma_word);
        std::vector<Polynomial> restr(ctx->cosets().size(), Polynomial(ctx->universe()));
        std::vector<bool> seen(ctx->cosets().size(), false);
        for (const auto& [tau_word, text] : table.items()) {
            int t = ctx->cosets().index_of(Permutation::parse(tau_word));
            if (t < 0)
                throw std::invalid_argument("table key is not a representative: " + tau_word);
            restr[t] = Polynomial::parse(ctx->universe(), text.get<std::string>());
            seen[t] = true;
        }
        for (bool s : seen)
            if (!s) throw std::invalid_argument("missing restriction entries for " + sigma_word);
        out.classes.emplace_back(idx, GKMClass(ctx, *flavor, std::move(restr)));
    }
    return out;
}

}  // namespace wschub
