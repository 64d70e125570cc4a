#include "mpbn/update.hpp"

#include "mpbn/error.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <string>
#include <unordered_set>

namespace mpbn {

std::string_view to_string(UpdateMode mode) {
    switch (mode) {
    case UpdateMode::Synchronous: return "sync";
    case UpdateMode::FullyAsynchronous: return "fullasync";
    case UpdateMode::Asynchronous: return "async";
    }
    return "?";
}

std::optional<UpdateMode> parse_update_mode(std::string_view text) {
    if (text == "sync" || text == "synchronous") return UpdateMode::Synchronous;
    if (text == "fullasync" || text == "fully-asynchronous") return UpdateMode::FullyAsynchronous;
    if (text == "async" || text == "asynchronous") return UpdateMode::Asynchronous;
    return std::nullopt;
}

std::vector<Configuration> successors(const BooleanNetwork& net, UpdateMode mode, const Configuration& x) {
    if (x.size() != net.size()) throw Error("configuration dimension does not match the network");
    const Configuration fx = apply(net, x);
    std::vector<std::size_t> disagree;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (fx[i] != x[i]) disagree.push_back(i);
    }
    std::vector<Configuration> out;
    if (disagree.empty()) return out;
    switch (mode) {
    case UpdateMode::Synchronous:
        out.push_back(fx);
        break;
    case UpdateMode::FullyAsynchronous:
        for (auto i : disagree) {
            Configuration y = x;
            y.flip(i);
            out.push_back(std::move(y));
        }
        break;
    case UpdateMode::Asynchronous: {
        if (disagree.size() > kMaxAsyncDisagreement) {
            throw CapExceeded("asynchronous successors: " + std::to_string(disagree.size()) +
                              " disagreeing components exceed the limit of " +
                              std::to_string(kMaxAsyncDisagreement));
        }
        const std::uint64_t subsets = std::uint64_t{1} << disagree.size();
        out.reserve(subsets - 1);
        for (std::uint64_t mask = 1; mask < subsets; ++mask) {
            Configuration y = x;
            for (std::size_t k = 0; k < disagree.size(); ++k) {
                if (mask >> k & 1U) y.flip(disagree[k]);
            }
            out.push_back(std::move(y));
        }
        break;
    }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Configuration> reach_set(const BooleanNetwork& net, UpdateMode mode, const Configuration& x,
                                     std::size_t state_cap) {
    if (x.size() != net.size()) throw Error("configuration dimension does not match the network");
    std::unordered_set<Configuration, ConfigurationHash> seen{x};
    std::deque<Configuration> frontier{x};
    while (!frontier.empty()) {
        const Configuration cur = std::move(frontier.front());
        frontier.pop_front();
        for (auto& y : successors(net, mode, cur)) {
            if (!seen.insert(y).second) continue;
            if (seen.size() > state_cap) {
                throw CapExceeded("reachable set exceeds the state cap of " + std::to_string(state_cap));
            }
            frontier.push_back(std::move(y));
        }
    }
    std::vector<Configuration> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::uint64_t state_count(const BooleanNetwork& net, std::size_t state_cap) {
    if (net.size() >= 63 || (std::uint64_t{1} << net.size()) > state_cap) {
        throw CapExceeded("2^" + std::to_string(net.size()) + " states exceed the state cap of " +
                          std::to_string(state_cap));
    }
    return std::uint64_t{1} << net.size();
}

}  // namespace

std::vector<std::vector<Configuration>> terminal_attractors(const BooleanNetwork& net, UpdateMode mode,
                                                            std::size_t state_cap) {
    const std::uint64_t total = state_count(net, state_cap);
    const std::size_t n = net.size();
    std::vector<std::vector<std::uint32_t>> adj(total);
    for (std::uint64_t s = 0; s < total; ++s) {
        for (const auto& y : successors(net, mode, Configuration::from_index(s, n))) {
            adj[s].push_back(static_cast<std::uint32_t>(y.to_index()));
        }
    }

    // Iterative Tarjan.
    constexpr std::uint32_t kUnvisited = UINT32_MAX;
    std::vector<std::uint32_t> index(total, kUnvisited), low(total), comp(total, kUnvisited);
    std::vector<bool> on_stack(total, false);
    std::vector<std::uint32_t> stack;
    std::vector<std::pair<std::uint32_t, std::size_t>> calls;
    std::uint32_t counter = 0, components = 0;
    for (std::uint64_t root = 0; root < total; ++root) {
        if (index[root] != kUnvisited) continue;
        calls.emplace_back(static_cast<std::uint32_t>(root), 0);
        while (!calls.empty()) {
            auto& [v, edge] = calls.back();
            if (edge == 0 && index[v] == kUnvisited) {
                index[v] = low[v] = counter++;
                stack.push_back(v);
                on_stack[v] = true;
            }
            if (edge < adj[v].size()) {
                const std::uint32_t w = adj[v][edge++];
                if (index[w] == kUnvisited) {
                    calls.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                std::uint32_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = components;
                } while (w != v);
                ++components;
            }
            const std::uint32_t done = v;
            calls.pop_back();
            if (!calls.empty()) {
                const std::uint32_t parent = calls.back().first;
                low[parent] = std::min(low[parent], low[done]);
            }
        }
    }

    std::vector<bool> terminal(components, true);
    for (std::uint64_t s = 0; s < total; ++s) {
        for (auto t : adj[s]) {
            if (comp[t] != comp[s]) terminal[comp[s]] = false;
        }
    }
    std::vector<std::vector<Configuration>> by_comp(components);
    for (std::uint64_t s = 0; s < total; ++s) {
        if (terminal[comp[s]]) by_comp[comp[s]].push_back(Configuration::from_index(s, n));
    }
    std::vector<std::vector<Configuration>> out;
    for (auto& c : by_comp) {
        if (c.empty()) continue;
        std::sort(c.begin(), c.end());
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Configuration> fixed_points_bruteforce(const BooleanNetwork& net, std::size_t state_cap) {
    const std::uint64_t total = state_count(net, state_cap);
    std::vector<Configuration> out;
    for (std::uint64_t s = 0; s < total; ++s) {
        Configuration x = Configuration::from_index(s, net.size());
        if (apply(net, x) == x) out.push_back(std::move(x));
    }
    std::sort(out.begin(), out.end());
    return out;
}

BooleanNetwork sync_to_async_encode(const BooleanNetwork& net) {
    const std::size_t n = net.size();
    std::unordered_set<std::string> used(net.names().begin(), net.names().end());
    auto fresh = [&](const std::string& base) {
        std::string name = base;
        for (std::size_t k = 1; used.count(name); ++k) name = base + "_" + std::to_string(k);
        used.insert(name);
        return name;
    };

    std::vector<std::string> names(net.names().begin(), net.names().end());
    for (std::size_t i = 0; i < n; ++i) names.push_back(fresh("c_" + net.name(i)));
    for (std::size_t i = 0; i < n; ++i) names.push_back(fresh("cbar_" + net.name(i)));
    names.push_back(fresh("w"));
    names.push_back(fresh("z"));

    const auto var = [](std::size_t k) { return Expr::variable(static_cast<std::uint32_t>(k)); };
    const auto neg = [](Expr e) { return Expr::negation(std::move(e)); };
    const auto all = [](std::vector<Expr> v) { return Expr::conjunction(std::move(v)); };
    const auto any = [](std::vector<Expr> v) { return Expr::disjunction(std::move(v)); };
    const Expr w = var(3 * n);
    const Expr z = var(3 * n + 1);
    auto x = [&](std::size_t i) { return var(i); };
    auto c = [&](std::size_t i) { return var(n + i); };
    auto cbar = [&](std::size_t i) { return var(2 * n + i); };

    std::vector<Expr> locals;
    locals.reserve(3 * n + 2);
    for (std::size_t i = 0; i < n; ++i) {
        locals.push_back(any({all({any({neg(w), z}), x(i)}), all({w, neg(z), c(i)})}));
    }
    for (std::size_t i = 0; i < n; ++i) {
        locals.push_back(all({neg(z), any({all({neg(w), net.local(i)}), all({w, c(i)})})}));
    }
    for (std::size_t i = 0; i < n; ++i) {
        locals.push_back(all({neg(z), any({all({neg(w), neg(net.local(i))}), all({w, cbar(i)})})}));
    }
    std::vector<Expr> written, copied, pending;
    for (std::size_t i = 0; i < n; ++i) {
        written.push_back(any({c(i), cbar(i)}));
        const Expr c_iff_x = any({all({c(i), x(i)}), all({neg(c(i)), neg(x(i))})});
        const Expr cbar_iff_not_x = any({all({cbar(i), neg(x(i))}), all({neg(cbar(i)), x(i)})});
        copied.push_back(all({c_iff_x, cbar_iff_not_x}));
        pending.push_back(any({c(i), cbar(i)}));
    }
    locals.push_back(all({neg(z), any({w, all(std::move(written))})}));
    locals.push_back(any({all({w, all(std::move(copied))}), all({z, any({w, any(std::move(pending))})})}));
    return BooleanNetwork(std::move(names), std::move(locals));
}

}  // namespace mpbn
