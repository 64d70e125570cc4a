#include "fixtures.hpp"
#include "oracles.hpp"
#include "random_networks.hpp"

#include "mpbn/error.hpp"
#include "mpbn/refinement.hpp"
#include "mpbn/update.hpp"

#include <gtest/gtest.h>

using namespace mpbn;
using namespace mpbn::testing;

namespace {

MVConfiguration mv(std::vector<int> v) { return MVConfiguration(std::move(v)); }

using Strings = std::vector<std::string>;

Strings texts(const std::vector<MVConfiguration>& xs) {
    Strings out;
    for (const auto& x : xs) out.push_back(x.to_string());
    return out;
}

/// A random most-permissive trace of at most `length` steps from x.
std::vector<MPConfiguration> random_trace(const BooleanNetwork& net, const Configuration& x, std::size_t length,
                                          std::mt19937_64& rng) {
    std::vector<MPConfiguration> trace{MPConfiguration(x)};
    while (trace.size() <= length) {
        const auto succ = mp_successors(net, trace.back());
        if (succ.empty()) break;
        trace.push_back(succ[rng() % succ.size()]);
    }
    return trace;
}

}  // namespace

TEST(MVConfiguration, Text) {
    const auto x = MVConfiguration::from_string("0,2,11");
    EXPECT_EQ(x.values(), (std::vector<int>{0, 2, 11}));
    EXPECT_EQ(x.to_string(), "0,2,11");
    EXPECT_EQ(MVConfiguration(cfg("101"), 3).to_string(), "3,0,3");
    EXPECT_THROW(MVConfiguration::from_string("0,,1"), Error);
    EXPECT_THROW(MVConfiguration::from_string("0,a"), Error);
}

TEST(MVSuccessors, ZeroNetworkIsInert) {
    const auto F = MultivaluedNetwork::zero(3, 2);
    EXPECT_TRUE(mv_successors(F, mv({1, 0, 2})).empty());
}

TEST(MVSuccessors, SubsetExpansion) {
    auto F = MultivaluedNetwork::zero(2, 2);
    F.set_override(mv({1, 0}), {1, 1});
    EXPECT_EQ(texts(mv_successors(F, mv({1, 0}))), (Strings{"1,1", "2,0", "2,1"}));
}

TEST(MVSuccessors, ChangesLeavingTheDomainAreDropped) {
    auto F = MultivaluedNetwork::zero(2, 2);
    F.set_override(mv({2, 0}), {1, -1});
    EXPECT_TRUE(mv_successors(F, mv({2, 0})).empty());
    EXPECT_THROW(mv_successors(F, mv({3, 0})), Error);
}

TEST(MVSuccessors, SelfRefinementIsAsynchronous) {
    const auto net = bn_b();
    const auto F = MultivaluedNetwork::self_refinement(net);
    for (std::uint64_t s = 0; s < 8; ++s) {
        const auto x = Configuration::from_index(s, 3);
        Strings want;
        for (const auto& y : successors(net, UpdateMode::Asynchronous, x)) want.push_back(MVConfiguration(y, 1).to_string());
        std::sort(want.begin(), want.end());
        auto got = texts(mv_successors(F, MVConfiguration(x, 1)));
        std::sort(got.begin(), got.end());
        EXPECT_EQ(got, want) << x.to_string();
    }
}

TEST(Beta, Examples) {
    EXPECT_EQ(beta(mv({0, 1, 2}), 2).to_string(), "0*1");
    EXPECT_EQ(beta(mv({0, 0, 0}), 2).to_string(), "000");
    EXPECT_EQ(beta(mv({1, 2, 3}), 3).to_string(), "**1");
}

TEST(CheckRefinement, SelfRefinement) {
    EXPECT_TRUE(check_refinement(MultivaluedNetwork::self_refinement(bn_b()), bn_b()));
    EXPECT_TRUE(check_refinement(MultivaluedNetwork::block_sign(bn_a(), 3), bn_a()));
}

TEST(CheckRefinement, UnjustifiedIncrease) {
    // β(0,2,2) = 011 and f1(011) = 0, so raising component 1 is unjustified.
    const auto net = bn_b();
    auto F = MultivaluedNetwork::zero(3, 2);
    F.set_override(mv({0, 2, 2}), {1, 0, 0});
    EXPECT_FALSE(check_refinement(F, net));
    const auto v = find_refinement_violation(F, net);
    ASSERT_TRUE(v);
    EXPECT_EQ(v->state, mv({0, 2, 2}));
    EXPECT_EQ(v->component, 0u);
    EXPECT_EQ(v->delta, 1);
}

TEST(CheckRefinement, MiddleValuesWidenTheJustification) {
    // β(0,1,2) = 0*1 contains 001 with f1 = 1.
    auto F = MultivaluedNetwork::zero(3, 2);
    F.set_override(mv({0, 1, 2}), {1, 0, 0});
    EXPECT_TRUE(check_refinement(F, bn_b()));
}

TEST(CheckRefinement, CapIsEnforced) {
    EXPECT_THROW(check_refinement(MultivaluedNetwork::block_sign(bn_b(), 3), bn_b(), 10), CapExceeded);
}

TEST(Overrides, CollisionsAreRejected) {
    auto F = MultivaluedNetwork::zero(2, 2);
    F.set_override(mv({1, 1}), {1, 0});
    F.set_override(mv({1, 1}), {1, 0});
    EXPECT_THROW(F.set_override(mv({1, 1}), {-1, 0}), Error);
    F.set_component(mv({0, 0}), 1, 1);
    F.set_component(mv({0, 0}), 0, -1);
    EXPECT_EQ(F.delta(mv({0, 0})), (Delta{-1, 1}));
    EXPECT_THROW(F.set_component(mv({0, 0}), 1, -1), Error);
    EXPECT_THROW(F.set_override(mv({0, 0}), {2, 0}), Error);
    EXPECT_THROW(MultivaluedNetwork::block_sign(bn_b(), 2), Error);
}

TEST(Alpha, Examples) {
    const auto a = alpha_interpretations(mv({0, 2, 1}), 2);
    EXPECT_EQ(a.count(), 2u);
    EXPECT_TRUE(a.contains(mpc("01/")));
    EXPECT_TRUE(a.contains(mpc("01\\")));
    EXPECT_FALSE(a.contains(mpc("011")));
    const auto b = alpha_interpretations(mv({0, 2, 0}), 2);
    ASSERT_EQ(b.members().size(), 1u);
    EXPECT_EQ(b.members().front(), mpc("010"));
    EXPECT_EQ(alpha_interpretations(mv({1, 1, 1}), 3).members().size(), 8u);
}

TEST(ReachWitness, WorkedExample) {
    const auto net = bn_b();
    const auto F = build_reach_witness(net, cfg("000"), cfg("111"));
    EXPECT_EQ(F.max_value(), 2);
    EXPECT_TRUE(check_refinement(F, net));
    EXPECT_TRUE(mv_reachable(F, mv({0, 0, 0}), mv({2, 2, 2})));
}

TEST(ReachWitness, SingleOpening) {
    const auto net = bn_b();
    const auto F = build_reach_witness(net, cfg("010"), cfg("011"));
    EXPECT_EQ(F.overrides().size(), 2u);
    EXPECT_EQ(F.delta(mv({0, 2, 0})), (Delta{0, 0, 1}));
    EXPECT_EQ(F.delta(mv({0, 2, 1})), (Delta{0, 0, 1}));
    EXPECT_TRUE(check_refinement(F, net));
    EXPECT_TRUE(mv_reachable(F, mv({0, 2, 0}), mv({0, 2, 2})));
}

TEST(ReachWitness, TrivialAndUnreachable) {
    EXPECT_TRUE(build_reach_witness(bn_b(), cfg("101"), cfg("101")).overrides().empty());
    EXPECT_THROW(build_reach_witness(bn_b(), cfg("010"), cfg("000")), PreconditionError);
}

TEST(TraceWitness, OpeningAndClosing) {
    const auto net = bn_b();
    const auto w = build_trace_witness(net, {mpc("010"), mpc("01/"), mpc("011")});
    const auto& c = w.certificate;
    EXPECT_EQ(texts(c.mv_trace), (Strings{"0,3,0", "0,3,1", "0,3,2"}));
    EXPECT_EQ(c.kappa, (std::vector<std::size_t>{0, 2, 2}));
    EXPECT_TRUE(verify_trace_refinement(net, w.network, c).ok);
    EXPECT_TRUE(check_refinement(w.network, net));
}

TEST(TraceWitness, SingleConfiguration) {
    const auto w = build_trace_witness(bn_b(), {mpc("101")});
    EXPECT_EQ(texts(w.certificate.mv_trace), (Strings{"3,0,3"}));
    EXPECT_EQ(w.certificate.kappa, (std::vector<std::size_t>{0}));
    EXPECT_TRUE(verify_trace_refinement(bn_b(), w.network, w.certificate).ok);
}

TEST(TraceWitness, RejectsInvalidTraces) {
    EXPECT_THROW(build_trace_witness(bn_b(), {}), PreconditionError);
    EXPECT_THROW(build_trace_witness(bn_b(), {mpc("0/0")}), PreconditionError);
    EXPECT_THROW(build_trace_witness(bn_b(), {mpc("010"), mpc("/10")}), PreconditionError);
}

TEST(Verifier, KappaMustStartAtZero) {
    const auto net = bn_b();
    auto w = build_trace_witness(net, {mpc("010"), mpc("01/"), mpc("011")});
    w.certificate.kappa[0] = 1;
    const auto v = verify_trace_refinement(net, w.network, w.certificate);
    EXPECT_FALSE(v.ok);
    EXPECT_EQ(v.condition, 2);
}

TEST(Verifier, KappaMustNotDecrease) {
    const auto net = bn_b();
    auto w = build_trace_witness(net, {mpc("010"), mpc("01/"), mpc("011")});
    w.certificate.kappa = {0, 2, 1};
    EXPECT_EQ(verify_trace_refinement(net, w.network, w.certificate).condition, 1);
}

TEST(Verifier, OpeningNeedsMatchingDerivative) {
    const auto net = bn_b();
    auto w = build_trace_witness(net, {mpc("010"), mpc("01/"), mpc("011")});
    auto F = w.network;
    F.set_override(mv({0, 3, 0}), {0, 0, 0});
    const auto v = verify_trace_refinement(net, F, w.certificate);
    EXPECT_FALSE(v.ok);
    EXPECT_EQ(v.condition, 4);
    EXPECT_FALSE(v.diagnosis.empty());
}

TEST(Verifier, InitialStateMustBeScaled) {
    const auto net = bn_b();
    auto w = build_trace_witness(net, {mpc("010")});
    w.certificate.mv_trace = {mv({0, 2, 0})};
    EXPECT_EQ(verify_trace_refinement(net, w.network, w.certificate).condition, 3);
}

TEST(Verifier, MultivaluedStepsMustBeTransitions) {
    const auto net = bn_b();
    auto w = build_trace_witness(net, {mpc("010"), mpc("01/"), mpc("011")});
    w.certificate.mv_trace = {mv({0, 3, 0}), mv({0, 3, 2}), mv({0, 3, 2})};
    EXPECT_EQ(verify_trace_refinement(net, w.network, w.certificate).condition, 5);
}

TEST(Json, NetworkRoundTrip) {
    const auto net = bn_b();
    const auto F = build_reach_witness(net, cfg("000"), cfg("111"));
    const auto j = to_json(F);
    EXPECT_EQ(j["m"], 2);
    EXPECT_EQ(j["base"], "zero");
    const auto back = multivalued_from_json(j, net);
    EXPECT_EQ(back.overrides(), F.overrides());
    const auto G = multivalued_from_json(nlohmann::json::parse(R"({"m": 3, "base": "block-sign", "overrides": {}})"), net);
    EXPECT_EQ(G.base(), BaseRule::BlockSign);
    EXPECT_THROW(multivalued_from_json(nlohmann::json::parse(R"({"base": "zero"})"), net), Error);
    EXPECT_THROW(multivalued_from_json(nlohmann::json::parse(R"({"m": 2, "base": "odd"})"), net), Error);
}

TEST(Json, CertificateRoundTrip) {
    const auto w = build_trace_witness(bn_b(), {mpc("010"), mpc("01/"), mpc("011")});
    const auto back = certificate_from_json(to_json(w.certificate));
    EXPECT_EQ(back.mp_trace, w.certificate.mp_trace);
    EXPECT_EQ(back.mv_trace, w.certificate.mv_trace);
    EXPECT_EQ(back.kappa, w.certificate.kappa);
}

// ── Properties ──────────────────────────────────────────────────────────────

TEST(Properties, ReachWitnessRoundTrip) {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + rng() % 4;
        const auto net = random_network(n, rng);
        for (std::uint64_t s = 0; s < (1ULL << n); ++s) {
            const auto x = Configuration::from_index(s, n);
            for (std::uint64_t t = 0; t < (1ULL << n); ++t) {
                const auto y = Configuration::from_index(t, n);
                if (!mp_reach_decide(net, x, y)) continue;
                const auto F = build_reach_witness(net, x, y);
                ASSERT_TRUE(check_refinement(F, net));
                ASSERT_TRUE(mv_reachable(F, MVConfiguration(x, 2), MVConfiguration(y, 2)));
            }
        }
    }
}

TEST(Properties, TraceWitnessRoundTrip) {
    std::mt19937_64 rng(62);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 4;
        const auto net = random_network(n, rng);
        const auto trace = random_trace(net, random_configuration(n, rng), 2 * n, rng);
        const auto w = build_trace_witness(net, trace);
        const auto v = verify_trace_refinement(net, w.network, w.certificate);
        ASSERT_TRUE(v.ok) << v.condition << ": " << v.diagnosis;
        ASSERT_TRUE(check_refinement(w.network, net));
    }
}

TEST(Properties, SelfRefinementGraphIsAsynchronousGraph) {
    std::mt19937_64 rng(63);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        const auto net = random_network(n, rng);
        const auto F = MultivaluedNetwork::self_refinement(net);
        ASSERT_TRUE(check_refinement(F, net));
        for (std::uint64_t s = 0; s < (1ULL << n); ++s) {
            const auto x = Configuration::from_index(s, n);
            std::vector<MVConfiguration> want;
            for (const auto& y : successors(net, UpdateMode::Asynchronous, x)) want.emplace_back(y, 1);
            std::sort(want.begin(), want.end());
            ASSERT_EQ(mv_successors(F, MVConfiguration(x, 1)), want);
        }
    }
}
