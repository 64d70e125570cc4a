#ifndef MPBN_REFINEMENT_HPP
#define MPBN_REFINEMENT_HPP

#include "mpbn/hypercube.hpp"
#include "mpbn/mp.hpp"
#include "mpbn/network.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace mpbn {

// ── MVConfiguration ─────────────────────────────────────────────────────────
// A vector over M = {0..m}. Text form is comma separated ("0,2,1").

class MVConfiguration {
public:
    MVConfiguration() = default;
    explicit MVConfiguration(std::vector<int> values) : values_(std::move(values)) {}
    /// m·x.
    MVConfiguration(const Configuration& x, int m);

    static MVConfiguration from_string(std::string_view csv);

    std::size_t size() const noexcept { return values_.size(); }
    int operator[](std::size_t i) const noexcept { return values_[i]; }
    void set(std::size_t i, int v) noexcept { values_[i] = v; }
    const std::vector<int>& values() const noexcept { return values_; }

    std::string to_string() const;

    friend bool operator==(const MVConfiguration&, const MVConfiguration&) = default;
    friend auto operator<=>(const MVConfiguration&, const MVConfiguration&) = default;

private:
    std::vector<int> values_;
};

/// Per-component unit changes, each in {-1, 0, 1}.
using Delta = std::vector<int>;

// ── MultivaluedNetwork ──────────────────────────────────────────────────────
// F: M^n -> {-1,0,1}^n stored as a uniform base rule plus point overrides.
//
//   zero        F(x) = 0^n
//   block-sign  F_j(x) = +1 if f_j(floor(x / b)) else -1, with b = (m+1)/2;
//               values {0..b-1} read as 0 and {b..m} as 1.

enum class BaseRule { Zero, BlockSign };

class MultivaluedNetwork {
public:
    static MultivaluedNetwork zero(std::size_t n, int m);
    /// Requires an odd m >= 1.
    static MultivaluedNetwork block_sign(const BooleanNetwork& net, int m);
    /// f as a network over M = B: F_i(x) = +1 if f_i(x) else -1.
    static MultivaluedNetwork self_refinement(const BooleanNetwork& net) { return block_sign(net, 1); }

    std::size_t size() const noexcept { return n_; }
    int max_value() const noexcept { return m_; }
    BaseRule base() const noexcept { return base_; }

    Delta delta(const MVConfiguration& x) const;
    int delta(const MVConfiguration& x, std::size_t i) const;
    Delta base_delta(const MVConfiguration& x) const;

    const std::map<MVConfiguration, Delta>& overrides() const noexcept { return overrides_; }

    /// Replaces F(x). Throws `Error` when F(x) was already overridden with a
    /// different vector (a construction collision).
    void set_override(const MVConfiguration& x, const Delta& d);
    /// Replaces F_i(x) only. Throws `Error` when F_i(x) was already pinned
    /// to a different value by an earlier call.
    void set_component(const MVConfiguration& x, std::size_t i, int d);

    /// Checks that x is a valid configuration of this network.
    void check_configuration(const MVConfiguration& x) const;

private:
    MultivaluedNetwork(std::size_t n, int m, BaseRule base, std::optional<BooleanNetwork> net);

    std::size_t n_ = 0;
    int m_ = 1;
    BaseRule base_ = BaseRule::Zero;
    std::optional<BooleanNetwork> net_;
    std::map<MVConfiguration, Delta> overrides_;
    std::map<MVConfiguration, std::vector<bool>> pinned_;
};

/// Asynchronous successors: every y != x obtained by applying a non-empty
/// subset of the applicable unit changes (x_i + F_i(x) within [0, m]).
/// Sorted. Throws `CapExceeded` beyond 20 applicable components.
std::vector<MVConfiguration> mv_successors(const MultivaluedNetwork& F, const MVConfiguration& x);

/// Whether `to` is reachable from `from` (BFS, at most `state_cap` states).
bool mv_reachable(const MultivaluedNetwork& F, const MVConfiguration& from, const MVConfiguration& to,
                  std::size_t state_cap = std::size_t{1} << 20);

/// β(x): cell 0 where x_i = 0, 1 where x_i = m, free elsewhere.
Hypercube beta(const MVConfiguration& x, int m);

struct RefinementViolation {
    MVConfiguration state;
    std::size_t component;
    int delta;
};

/// First state/component where a non-zero F_i(x) has no justifying
/// binarization, or nothing when F refines f. States with F(x) = 0 need no
/// check, so a zero-base network only visits its overrides; otherwise all
/// of M^n is scanned and (m+1)^n must not exceed `state_cap`.
std::optional<RefinementViolation> find_refinement_violation(const MultivaluedNetwork& F,
                                                             const BooleanNetwork& net,
                                                             std::size_t state_cap = std::size_t{1} << 20);
bool check_refinement(const MultivaluedNetwork& F, const BooleanNetwork& net,
                      std::size_t state_cap = std::size_t{1} << 20);

/// α(x), the most-permissive interpretations of x: extreme values map to
/// 0 / 1, the others to either dynamic state.
class AlphaSet {
public:
    AlphaSet(const MVConfiguration& x, int m) : pattern_(beta(x, m)) {}

    /// Fixed cells, and free cells for the dynamic components.
    const Hypercube& pattern() const noexcept { return pattern_; }
    std::size_t dynamic_count() const noexcept { return pattern_.free_count(); }
    std::uint64_t count() const;
    bool contains(const MPConfiguration& x) const;
    /// Throws `CapExceeded` beyond 20 dynamic components.
    std::vector<MPConfiguration> members() const;

private:
    Hypercube pattern_;
};

AlphaSet alpha_interpretations(const MVConfiguration& x, int m);

// ── Witness constructions ───────────────────────────────────────────────────

/// A 3-valued (m = 2) refinement of f in which 2y is reachable from 2x.
/// Throws `PreconditionError` unless y is reachable from x.
MultivaluedNetwork build_reach_witness(const BooleanNetwork& net, const Configuration& x, const Configuration& y);

struct TraceRefinementCertificate {
    std::vector<MPConfiguration> mp_trace;
    std::vector<MVConfiguration> mv_trace;
    std::vector<std::size_t> kappa;  // mp index -> mv index
};

struct TraceWitness {
    MultivaluedNetwork network;
    TraceRefinementCertificate certificate;
};

/// A 4-valued (m = 3) refinement of f with a multivalued trajectory matching
/// the most-permissive trace. Throws `PreconditionError` unless the trace
/// starts binary and each step is a most-permissive transition.
TraceWitness build_trace_witness(const BooleanNetwork& net, const std::vector<MPConfiguration>& mp_trace);

struct TraceVerdict {
    bool ok = true;
    /// 1-4: the trace-refinement requirement that failed; 5: an invalid
    /// multivalued step; 6: an invalid most-permissive step; 0: malformed.
    int condition = 0;
    std::string diagnosis;
};

/// Checks the four trace-refinement requirements, with the initial states
/// related by y = m·x, and that both traces are valid trajectories.
TraceVerdict verify_trace_refinement(const BooleanNetwork& net, const MultivaluedNetwork& F,
                                     const TraceRefinementCertificate& cert);

// ── JSON ────────────────────────────────────────────────────────────────────
// {"m": 3, "base": "block-sign" | "zero", "overrides": {"0,2,1": [1,0,-1]}}

nlohmann::json to_json(const MultivaluedNetwork& F);
/// A block-sign base reads its Boolean rule from `net`.
MultivaluedNetwork multivalued_from_json(const nlohmann::json& j, const BooleanNetwork& net);

nlohmann::json to_json(const TraceRefinementCertificate& cert);
TraceRefinementCertificate certificate_from_json(const nlohmann::json& j);

}  // namespace mpbn

#endif  // MPBN_REFINEMENT_HPP
