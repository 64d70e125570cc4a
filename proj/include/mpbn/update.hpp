#ifndef MPBN_UPDATE_HPP
#define MPBN_UPDATE_HPP

#include "mpbn/network.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace mpbn {

// Classical (non most-permissive) update modes, used as brute-force oracles.

enum class UpdateMode { Synchronous, FullyAsynchronous, Asynchronous };

std::string_view to_string(UpdateMode mode);
/// Accepts "sync", "fullasync", "async" and the long names.
std::optional<UpdateMode> parse_update_mode(std::string_view text);

/// Largest disagreement set the asynchronous mode expands (2^20 subsets).
inline constexpr std::size_t kMaxAsyncDisagreement = 20;
inline constexpr std::size_t kDefaultStateCap = std::size_t{1} << 20;

/// Irreflexive successors of x, sorted. Asynchronous mode throws
/// `CapExceeded` when more than `kMaxAsyncDisagreement` components disagree.
std::vector<Configuration> successors(const BooleanNetwork& net, UpdateMode mode, const Configuration& x);

/// Configurations reachable from x (x included), sorted. Throws
/// `CapExceeded` once more than `state_cap` states are discovered.
std::vector<Configuration> reach_set(const BooleanNetwork& net, UpdateMode mode, const Configuration& x,
                                     std::size_t state_cap = kDefaultStateCap);

/// Terminal strongly connected components of the whole transition graph,
/// each sorted, the list sorted by first element. Requires 2^n <= state_cap.
std::vector<std::vector<Configuration>> terminal_attractors(const BooleanNetwork& net, UpdateMode mode,
                                                            std::size_t state_cap = kDefaultStateCap);

/// Configurations with f(x) = x, by exhaustive scan (2^n <= state_cap).
std::vector<Configuration> fixed_points_bruteforce(const BooleanNetwork& net,
                                                   std::size_t state_cap = kDefaultStateCap);

/// The 3n+2 component network f' whose (fully) asynchronous dynamics
/// simulate the synchronous dynamics of f:
///   y in Reach_sync(x)  iff  y.0^(2n+2) in Reach_async'(x.0^(2n+2)).
/// Components: the originals, then c_1..c_n, cbar_1..cbar_n, w, z.
BooleanNetwork sync_to_async_encode(const BooleanNetwork& net);

}  // namespace mpbn

#endif  // MPBN_UPDATE_HPP
