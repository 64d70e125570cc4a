#ifndef MPBN_MP_HPP
#define MPBN_MP_HPP

#include "mpbn/hypercube.hpp"
#include "mpbn/network.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mpbn {

/// Component state under the most permissive semantics. `Increasing` and
/// `Decreasing` are the dynamic states; readers may observe either value.
enum class MPState : std::uint8_t { Zero, Increasing, Decreasing, One };

inline bool is_dynamic(MPState s) noexcept { return s == MPState::Increasing || s == MPState::Decreasing; }

// ── MPConfiguration ─────────────────────────────────────────────────────────
// Text form: '0', '1', '/' (increasing), '\' (decreasing).

class MPConfiguration {
public:
    MPConfiguration() = default;
    explicit MPConfiguration(std::vector<MPState> states) : states_(std::move(states)) {}
    explicit MPConfiguration(const Configuration& x);

    static MPConfiguration from_string(std::string_view text);

    std::size_t size() const noexcept { return states_.size(); }
    MPState operator[](std::size_t i) const noexcept { return states_[i]; }
    void set(std::size_t i, MPState s) noexcept { states_[i] = s; }

    bool is_binary() const noexcept;
    /// The binary configuration, when no component is dynamic.
    std::optional<Configuration> binary() const;
    /// γ(x): dynamic components free, the others fixed.
    Hypercube gamma() const;
    std::string to_string() const;

    friend bool operator==(const MPConfiguration&, const MPConfiguration&) = default;
    friend auto operator<=>(const MPConfiguration&, const MPConfiguration&) = default;

private:
    std::vector<MPState> states_;
};

/// All y with x -> y in one most-permissive transition, ordered by component.
std::vector<MPConfiguration> mp_successors(const BooleanNetwork& net, const MPConfiguration& x);

// ── Reachability ────────────────────────────────────────────────────────────

/// One round of the frozen-set reachability procedure.
struct ReachProcedureState {
    ComponentSet frozen;          // L
    MPConfiguration saturated;    // ẑ^L
    ComponentSet blocked;         // Ī^L
    std::size_t iteration = 0;    // 1-based
    std::size_t openings = 0;     // Boolean -> dynamic transitions computed this round
    std::vector<std::size_t> opening_order;
};

struct ReachTrace {
    bool reachable = false;
    std::vector<ReachProcedureState> rounds;

    std::size_t total_openings() const noexcept;
};

/// Decides x ->* y (reflexive) under the most permissive semantics in at
/// most n saturation rounds.
bool mp_reach_decide(const BooleanNetwork& net, const Configuration& x, const Configuration& y);
ReachTrace mp_reach_trace(const BooleanNetwork& net, const Configuration& x, const Configuration& y);

/// The saturation of Boolean -> dynamic moves from x; γ of the result
/// over-approximates every configuration reachable from x.
MPConfiguration mp_reach_saturation(const BooleanNetwork& net, const Configuration& x);

/// A path x = w^0 -> ... -> w^k = y of at most 3n transitions in three
/// stages: open, flip directions, close. The returned sequence includes both
/// endpoints; for x = y it is just {x}. Every step is checked against
/// `mp_successors`. Throws `PreconditionError` if y is not reachable.
std::vector<MPConfiguration> mp_witness_path(const BooleanNetwork& net, const Configuration& x,
                                             const Configuration& y);

/// Configurations with f(x) = x, at most `limit` of them, in lexicographic order.
std::vector<Configuration> mp_fixed_points(const BooleanNetwork& net, std::size_t limit = 1000);

}  // namespace mpbn

#endif  // MPBN_MP_HPP
