#include "mpbn/randgen.hpp"

#include "mpbn/error.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace mpbn {

std::vector<std::size_t> InfluenceGraph::in_degrees() const {
    std::vector<std::size_t> deg(n, 0);
    for (const auto& e : edges) ++deg[e.target];
    return deg;
}

InfluenceGraph generate_scale_free(std::size_t n, std::uint64_t seed, const ScaleFreeParams& params) {
    if (n < 2) throw Error("scale-free generation needs at least 2 nodes");
    if (params.attachment == 0) throw Error("attachment must be positive");
    if (!(params.sign_bias >= 0.0 && params.sign_bias <= 1.0)) throw Error("sign bias must lie in [0, 1]");

    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    std::bernoulli_distribution sign(params.sign_bias);
    InfluenceGraph g;
    g.n = n;

    // `urn` holds node k (degree + 1) times, so a uniform draw from it is
    // preferential in total degree.
    std::vector<std::uint32_t> urn{0};
    std::vector<std::uint32_t> picked;
    for (std::uint32_t k = 1; k < n; ++k) {
        const std::size_t want = std::min<std::size_t>(params.attachment, k);
        picked.clear();
        while (picked.size() < want) {
            std::uniform_int_distribution<std::size_t> draw(0, urn.size() - 1);
            const std::uint32_t j = urn[draw(rng)];
            if (std::find(picked.begin(), picked.end(), j) == picked.end()) picked.push_back(j);
        }
        for (auto j : picked) {
            const bool inward = coin(rng);
            g.edges.push_back({inward ? j : k, inward ? k : j, sign(rng)});
            urn.push_back(j);
            urn.push_back(k);
        }
        urn.push_back(k);
    }
    return g;
}

BooleanNetwork inhibitor_dominant(const InfluenceGraph& graph) {
    std::vector<std::vector<Expr>> activators(graph.n), inhibitors(graph.n);
    std::vector<bool> regulated(graph.n, false);
    for (const auto& e : graph.edges) {
        if (e.source >= graph.n || e.target >= graph.n) throw Error("edge endpoint out of range");
        (e.positive ? activators : inhibitors)[e.target].push_back(Expr::variable(e.source));
        regulated[e.target] = true;
    }
    std::vector<std::string> names;
    std::vector<Expr> locals;
    for (std::size_t i = 0; i < graph.n; ++i) {
        names.push_back("n" + std::to_string(i + 1));
        if (!regulated[i]) {
            locals.push_back(Expr::variable(static_cast<std::uint32_t>(i)));
            continue;
        }
        locals.push_back(Expr::conjunction({Expr::disjunction(std::move(activators[i])),
                                            Expr::negation(Expr::disjunction(std::move(inhibitors[i])))}));
    }
    return BooleanNetwork(std::move(names), std::move(locals));
}

}  // namespace mpbn
