#ifndef MPBN_TRAP_SPACES_HPP
#define MPBN_TRAP_SPACES_HPP

#include "mpbn/hypercube.hpp"
#include "mpbn/network.hpp"

#include <chrono>
#include <cstddef>
#include <optional>
#include <vector>

namespace mpbn {

/// A hypercube closed by f. `minimal` is only set once verified.
struct TrapSpace {
    Hypercube hypercube;
    bool minimal = false;

    friend bool operator==(const TrapSpace&, const TrapSpace&) = default;
};

/// h is closed by f (a trap space).
bool is_closed(const BooleanNetwork& net, const Hypercube& h);

/// A closed hypercube strictly smaller than the closed hypercube h, or
/// nothing when h is a minimal trap space. Branches on free components in
/// ascending order with values 0, 1, then "stay free"; the first closed
/// candidate found is returned. Throws `PreconditionError` if h is not closed.
std::optional<Hypercube> find_smaller_closed(const BooleanNetwork& net, const Hypercube& h);

bool is_minimal_trap_space(const BooleanNetwork& net, const Hypercube& h);

struct EnumerationOptions {
    std::size_t limit = 1000;
    /// Worker fan-out over the first branching decision (1 = sequential).
    std::size_t threads = 1;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct EnumerationResult {
    /// Minimal trap spaces sorted by their text form.
    std::vector<TrapSpace> trap_spaces;
    /// False when the deadline expired first; the list is then partial.
    bool complete = true;
};

/// Minimal trap spaces (= attractors under the most permissive semantics)
/// contained in the closed hypercube `root`.
EnumerationResult enumerate_minimal_trap_spaces(const BooleanNetwork& net, const Hypercube& root,
                                                const EnumerationOptions& options = {});

/// Up to `limit` minimal trap spaces of f, sorted by text form.
std::vector<TrapSpace> attractors(const BooleanNetwork& net, std::size_t limit = 1000);

/// x lies in an attractor iff its smallest enclosing trap space is minimal.
bool attractor_membership(const BooleanNetwork& net, const Configuration& x);

/// Minimal trap spaces inside the saturation hypercube of x, i.e. the
/// attractors reachable from x.
std::vector<TrapSpace> reachable_attractors(const BooleanNetwork& net, const Configuration& x,
                                            std::size_t limit = 1000);
EnumerationResult reachable_attractors(const BooleanNetwork& net, const Configuration& x,
                                       const EnumerationOptions& options);

}  // namespace mpbn

#endif  // MPBN_TRAP_SPACES_HPP
