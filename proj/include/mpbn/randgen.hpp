#ifndef MPBN_RANDGEN_HPP
#define MPBN_RANDGEN_HPP

#include "mpbn/network.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace mpbn {

struct SignedEdge {
    std::uint32_t source;
    std::uint32_t target;
    bool positive;

    friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

/// Signed regulation graph; no (source, target) pair appears twice.
struct InfluenceGraph {
    std::size_t n = 0;
    std::vector<SignedEdge> edges;

    std::vector<std::size_t> in_degrees() const;
};

struct ScaleFreeParams {
    std::size_t attachment = 2;
    /// Probability that an edge is an activation.
    double sign_bias = 0.5;
};

/// Preferential attachment: node k links to `attachment` distinct earlier
/// nodes drawn with probability proportional to total degree + 1; each link
/// is oriented either way with equal probability. Deterministic in `seed`.
/// Requires n >= 2.
InfluenceGraph generate_scale_free(std::size_t n, std::uint64_t seed, const ScaleFreeParams& params = {});

/// f_i = (OR of activators) AND NOT (OR of inhibitors); a node without
/// regulators keeps its value (f_i = x_i). Names are n1..nN.
BooleanNetwork inhibitor_dominant(const InfluenceGraph& graph);

}  // namespace mpbn

#endif  // MPBN_RANDGEN_HPP
