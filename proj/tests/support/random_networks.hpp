// Random small Boolean networks for property tests. Expressions mix
// monotone and non-monotone shapes so both exists_value routes get used.
#ifndef MPBN_TESTS_RANDOM_NETWORKS_HPP
#define MPBN_TESTS_RANDOM_NETWORKS_HPP

#include "mpbn/network.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace mpbn::testing {

inline Expr random_expr(std::mt19937_64& rng, const std::vector<std::uint32_t>& inputs, int depth) {
    std::uniform_int_distribution<int> pick(0, 9);
    std::uniform_int_distribution<std::size_t> which(0, inputs.size() - 1);
    const int r = pick(rng);
    if (depth == 0 || r < 3) {
        Expr v = Expr::variable(inputs[which(rng)]);
        return (rng() & 1U) ? Expr::negation(v) : v;
    }
    if (r == 3) return Expr::negation(random_expr(rng, inputs, depth - 1));
    std::vector<Expr> ops;
    const int arity = 2 + static_cast<int>(rng() % 2);
    for (int k = 0; k < arity; ++k) ops.push_back(random_expr(rng, inputs, depth - 1));
    return r < 7 ? Expr::conjunction(std::move(ops)) : Expr::disjunction(std::move(ops));
}

/// n components, each reading 1..max_inputs random components; about one
/// local function in twenty is a constant.
inline BooleanNetwork random_network(std::size_t n, std::mt19937_64& rng, std::size_t max_inputs = 3) {
    std::vector<std::string> names;
    std::vector<Expr> locals;
    std::vector<std::uint32_t> all(n);
    std::iota(all.begin(), all.end(), 0U);
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back("v" + std::to_string(i + 1));
        if (rng() % 20 == 0) {
            locals.push_back(Expr::constant(rng() & 1U));
            continue;
        }
        std::shuffle(all.begin(), all.end(), rng);
        const std::size_t k = 1 + rng() % std::min(n, max_inputs);
        std::vector<std::uint32_t> inputs(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k));
        locals.push_back(random_expr(rng, inputs, 2));
    }
    return BooleanNetwork(std::move(names), std::move(locals));
}

inline Configuration random_configuration(std::size_t n, std::mt19937_64& rng) {
    Configuration x(n);
    for (std::size_t i = 0; i < n; ++i) x.set(i, rng() & 1U);
    return x;
}

}  // namespace mpbn::testing

#endif  // MPBN_TESTS_RANDOM_NETWORKS_HPP
