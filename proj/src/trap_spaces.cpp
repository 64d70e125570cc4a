#include "mpbn/trap_spaces.hpp"

#include "mpbn/error.hpp"
#include "subspace_search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <unordered_set>

namespace mpbn {

namespace {

struct HypercubeHash {
    std::size_t operator()(const Hypercube& h) const noexcept {
        std::size_t v = 1469598103934665603ULL;
        for (auto c : h.cells()) v = (v ^ static_cast<std::size_t>(c)) * 1099511628211ULL;
        return v;
    }
};

struct Smaller {
    std::optional<Hypercube> found;
    bool complete = true;
};

Smaller smaller_closed(const BooleanNetwork& net, const Hypercube& h, const detail::Deadline& deadline) {
    Smaller out;
    detail::SubspaceSearch search(net, h, /*allow_skip=*/true, deadline);
    out.complete = search.run([&](const Hypercube& leaf) {
        if (leaf == h) return detail::Visit::Continue;
        out.found = leaf;
        return detail::Visit::Stop;
    });
    return out;
}

struct Descent {
    Hypercube minimal;
    bool complete = true;
};

Descent descend(const BooleanNetwork& net, Hypercube h, const detail::Deadline& deadline) {
    while (true) {
        auto s = smaller_closed(net, h, deadline);
        if (!s.complete) return {std::move(h), false};
        if (!s.found) return {std::move(h), true};
        h = std::move(*s.found);
    }
}

// Minimal trap spaces collected by one or more workers, deduplicated, up to
// the enumeration limit.
struct Collector {
    explicit Collector(std::size_t limit) : limit(limit) {}

    /// False once the limit is reached.
    bool add(Hypercube h) {
        std::lock_guard lock(mutex);
        if (found.size() >= limit) return false;
        if (seen.insert(h).second) found.push_back(std::move(h));
        if (found.size() >= limit) full.store(true, std::memory_order_relaxed);
        return found.size() < limit;
    }

    std::size_t limit;
    std::mutex mutex;
    std::unordered_set<Hypercube, HypercubeHash> seen;
    std::vector<Hypercube> found;
    std::atomic<bool> full{false};
    std::atomic<bool> complete{true};
};

void enumerate_worker(const BooleanNetwork& net, const Hypercube& root,
                      std::optional<std::pair<std::size_t, detail::SubspaceSearch::Choice>> preset,
                      const EnumerationOptions& options, Collector& out) {
    if (options.limit == 0) return;
    std::unordered_set<Hypercube, HypercubeHash> blocked;
    detail::SubspaceSearch search(net, root, /*allow_skip=*/true, options.deadline);
    search.cancel_when(&out.full);
    if (preset) search.preset(preset->first, preset->second);
    const bool finished = search.run([&](const Hypercube& leaf) {
        Descent d = descend(net, leaf, options.deadline);
        if (!d.complete) {
            out.complete = false;
            return detail::Visit::Stop;
        }
        if (!blocked.insert(d.minimal).second) return detail::Visit::Continue;
        search.block(d.minimal);
        return out.add(std::move(d.minimal)) ? detail::Visit::Continue : detail::Visit::Stop;
    });
    if (!finished) out.complete = false;
}

std::vector<TrapSpace> to_sorted_trap_spaces(std::vector<Hypercube> cubes, std::size_t limit) {
    std::vector<std::pair<std::string, Hypercube>> keyed;
    keyed.reserve(cubes.size());
    for (auto& h : cubes) keyed.emplace_back(h.to_string(), std::move(h));
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    keyed.erase(std::unique(keyed.begin(), keyed.end(),
                            [](const auto& a, const auto& b) { return a.first == b.first; }),
                keyed.end());
    if (keyed.size() > limit) keyed.resize(limit);
    std::vector<TrapSpace> out;
    out.reserve(keyed.size());
    for (auto& [key, h] : keyed) out.push_back({std::move(h), true});
    return out;
}

}  // namespace

bool is_closed(const BooleanNetwork& net, const Hypercube& h) {
    return is_k_closed(net, h, ComponentSet::all(net.size()));
}

std::optional<Hypercube> find_smaller_closed(const BooleanNetwork& net, const Hypercube& h) {
    if (h.size() != net.size()) throw Error("hypercube dimension does not match the network");
    if (!is_closed(net, h)) throw PreconditionError(h.to_string() + " is not closed");
    return smaller_closed(net, h, std::nullopt).found;
}

bool is_minimal_trap_space(const BooleanNetwork& net, const Hypercube& h) {
    if (h.size() != net.size()) throw Error("hypercube dimension does not match the network");
    return is_closed(net, h) && !smaller_closed(net, h, std::nullopt).found;
}

EnumerationResult enumerate_minimal_trap_spaces(const BooleanNetwork& net, const Hypercube& root,
                                                const EnumerationOptions& options) {
    if (root.size() != net.size()) throw Error("hypercube dimension does not match the network");
    if (!is_closed(net, root)) throw PreconditionError(root.to_string() + " is not closed");
    EnumerationResult result;
    Collector collected(options.limit);
    std::optional<std::size_t> branch;
    if (options.threads > 1) {
        detail::SubspaceSearch probe(net, root, true, options.deadline);
        branch = probe.root_branch();
    }
    if (!branch) {
        enumerate_worker(net, root, std::nullopt, options, collected);
    } else {
        // Split on the first decision; workers share the result set and all
        // stop once the limit is reached.
        using Choice = detail::SubspaceSearch::Choice;
        const Choice choices[] = {Choice::Zero, Choice::One, Choice::Skip};
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (std::size_t k; (k = next.fetch_add(1)) < 3;) {
                enumerate_worker(net, root, std::make_pair(*branch, choices[k]), options, collected);
            }
        };
        std::vector<std::thread> pool;
        const std::size_t workers = std::min<std::size_t>(options.threads, 3);
        for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    result.complete = collected.complete;
    result.trap_spaces = to_sorted_trap_spaces(std::move(collected.found), options.limit);
    return result;
}

std::vector<TrapSpace> attractors(const BooleanNetwork& net, std::size_t limit) {
    EnumerationOptions options;
    options.limit = limit;
    return enumerate_minimal_trap_spaces(net, Hypercube(net.size()), options).trap_spaces;
}

bool attractor_membership(const BooleanNetwork& net, const Configuration& x) {
    if (x.size() != net.size()) throw Error("configuration dimension does not match the network");
    return is_minimal_trap_space(net, percolate(net, x, ComponentSet::all(net.size())));
}

EnumerationResult reachable_attractors(const BooleanNetwork& net, const Configuration& x,
                                       const EnumerationOptions& options) {
    if (x.size() != net.size()) throw Error("configuration dimension does not match the network");
    return enumerate_minimal_trap_spaces(net, percolate(net, x, ComponentSet::all(net.size())), options);
}

std::vector<TrapSpace> reachable_attractors(const BooleanNetwork& net, const Configuration& x,
                                            std::size_t limit) {
    EnumerationOptions options;
    options.limit = limit;
    return reachable_attractors(net, x, options).trap_spaces;
}

}  // namespace mpbn
