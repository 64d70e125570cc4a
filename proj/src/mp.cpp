#include "mpbn/mp.hpp"

#include "mpbn/error.hpp"
#include "subspace_search.hpp"

#include <algorithm>

namespace mpbn {

// ── MPConfiguration ─────────────────────────────────────────────────────────

MPConfiguration::MPConfiguration(const Configuration& x) : states_(x.size()) {
    for (std::size_t i = 0; i < x.size(); ++i) states_[i] = x[i] ? MPState::One : MPState::Zero;
}

MPConfiguration MPConfiguration::from_string(std::string_view text) {
    std::vector<MPState> states;
    states.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case '0': states.push_back(MPState::Zero); break;
        case '1': states.push_back(MPState::One); break;
        case '/': states.push_back(MPState::Increasing); break;
        case '\\': states.push_back(MPState::Decreasing); break;
        default:
            throw Error("invalid most-permissive state '" + std::string(1, c) + "' in \"" + std::string(text) + "\"");
        }
    }
    return MPConfiguration(std::move(states));
}

bool MPConfiguration::is_binary() const noexcept {
    return std::none_of(states_.begin(), states_.end(), is_dynamic);
}

std::optional<Configuration> MPConfiguration::binary() const {
    if (!is_binary()) return std::nullopt;
    Configuration x(states_.size());
    for (std::size_t i = 0; i < states_.size(); ++i) x.set(i, states_[i] == MPState::One);
    return x;
}

Hypercube MPConfiguration::gamma() const {
    Hypercube h(states_.size());
    for (std::size_t i = 0; i < states_.size(); ++i) {
        switch (states_[i]) {
        case MPState::Zero: h.set(i, Cell::Zero); break;
        case MPState::One: h.set(i, Cell::One); break;
        default: h.set(i, Cell::Free); break;
        }
    }
    return h;
}

std::string MPConfiguration::to_string() const {
    std::string s;
    s.reserve(states_.size());
    for (auto st : states_) {
        switch (st) {
        case MPState::Zero: s += '0'; break;
        case MPState::One: s += '1'; break;
        case MPState::Increasing: s += '/'; break;
        case MPState::Decreasing: s += '\\'; break;
        }
    }
    return s;
}

// ── Transitions ─────────────────────────────────────────────────────────────

std::vector<MPConfiguration> mp_successors(const BooleanNetwork& net, const MPConfiguration& x) {
    if (x.size() != net.size()) throw Error("dimension mismatch in mp_successors");
    const Hypercube g = x.gamma();
    std::vector<MPConfiguration> out;
    auto emit = [&](std::size_t i, MPState s) {
        MPConfiguration y = x;
        y.set(i, s);
        out.push_back(std::move(y));
    };
    for (std::size_t i = 0; i < x.size(); ++i) {
        const MPState s = x[i];
        if (s == MPState::Increasing) emit(i, MPState::One);
        if (s != MPState::One && s != MPState::Increasing && exists_value(net, i, g, true)) {
            emit(i, MPState::Increasing);
        }
        if (s != MPState::Zero && s != MPState::Decreasing && exists_value(net, i, g, false)) {
            emit(i, MPState::Decreasing);
        }
        if (s == MPState::Decreasing) emit(i, MPState::Zero);
    }
    return out;
}

// ── Reachability ────────────────────────────────────────────────────────────

namespace {

MPConfiguration saturated_states(const Configuration& x, const Hypercube& h) {
    std::vector<MPState> states(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (h.is_free(i)) {
            states[i] = x[i] ? MPState::Decreasing : MPState::Increasing;
        } else {
            states[i] = x[i] ? MPState::One : MPState::Zero;
        }
    }
    return MPConfiguration(std::move(states));
}

void check_dimensions(const BooleanNetwork& net, const Configuration& x, const Configuration& y) {
    if (x.size() != net.size() || y.size() != net.size()) {
        throw Error("configuration dimension does not match the network (" + std::to_string(net.size()) + ")");
    }
}

}  // namespace

std::size_t ReachTrace::total_openings() const noexcept {
    std::size_t total = 0;
    for (const auto& r : rounds) total += r.openings;
    return total;
}

ReachTrace mp_reach_trace(const BooleanNetwork& net, const Configuration& x, const Configuration& y) {
    check_dimensions(net, x, y);
    const std::size_t n = net.size();
    ReachTrace trace;
    ComponentSet frozen(n);
    while (true) {
        ReachProcedureState round;
        round.iteration = trace.rounds.size() + 1;
        round.frozen = frozen;
        const Hypercube h = percolate(net, x, frozen.complement(), &round.opening_order);
        round.openings = round.opening_order.size();
        round.saturated = saturated_states(x, h);
        round.blocked = ComponentSet(n);
        if (!h.contains(y)) {
            trace.rounds.push_back(std::move(round));
            trace.reachable = false;
            return trace;
        }
        bool doomed = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (h.is_free(i) && !exists_value(net, i, h, y[i])) {
                round.blocked.insert(i);
                doomed = doomed || x[i] != y[i];
            }
        }
        // A blocked component stays at x_i from now on, so the next round
        // would reject y outright; x = y needs no trajectory at all. Deciding
        // here keeps the number of rounds within n.
        const bool done = round.blocked.empty() || x == y;
        for (auto i : round.blocked.members()) frozen.insert(i);
        trace.rounds.push_back(std::move(round));
        if (done || doomed) {
            trace.reachable = !doomed;
            return trace;
        }
    }
}

bool mp_reach_decide(const BooleanNetwork& net, const Configuration& x, const Configuration& y) {
    return mp_reach_trace(net, x, y).reachable;
}

MPConfiguration mp_reach_saturation(const BooleanNetwork& net, const Configuration& x) {
    if (x.size() != net.size()) throw Error("configuration dimension does not match the network");
    return saturated_states(x, percolate(net, x, ComponentSet::all(net.size())));
}

std::vector<MPConfiguration> mp_witness_path(const BooleanNetwork& net, const Configuration& x,
                                             const Configuration& y) {
    check_dimensions(net, x, y);
    std::vector<MPConfiguration> path{MPConfiguration(x)};
    if (x == y) return path;
    const ReachTrace trace = mp_reach_trace(net, x, y);
    if (!trace.reachable) {
        throw PreconditionError(y.to_string() + " is not reachable from " + x.to_string());
    }
    const auto& last = trace.rounds.back();
    auto step = [&](std::size_t i, MPState s) {
        MPConfiguration next = path.back();
        next.set(i, s);
        const auto succ = mp_successors(net, path.back());
        if (std::find(succ.begin(), succ.end(), next) == succ.end()) {
            throw Error("internal: invalid witness step " + path.back().to_string() + " -> " + next.to_string());
        }
        path.push_back(std::move(next));
    };
    // Stage 1: open the saturated components in the order they were freed.
    for (auto i : last.opening_order) step(i, x[i] ? MPState::Decreasing : MPState::Increasing);
    // Stage 2: components that must come back to their initial value turn around.
    for (auto i : last.opening_order) {
        if (x[i] == y[i]) step(i, y[i] ? MPState::Increasing : MPState::Decreasing);
    }
    // Stage 3: close every dynamic component.
    std::vector<std::size_t> opened = last.opening_order;
    std::sort(opened.begin(), opened.end());
    for (auto i : opened) step(i, y[i] ? MPState::One : MPState::Zero);
    return path;
}

std::vector<Configuration> mp_fixed_points(const BooleanNetwork& net, std::size_t limit) {
    std::vector<Configuration> out;
    if (limit == 0) return out;
    detail::SubspaceSearch search(net, Hypercube(net.size()), /*allow_skip=*/false);
    search.run([&](const Hypercube& leaf) {
        out.push_back(leaf.lowest());
        return out.size() >= limit ? detail::Visit::Stop : detail::Visit::Continue;
    });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace mpbn
