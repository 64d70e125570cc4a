#include "mpbn/bnet.hpp"
#include "mpbn/error.hpp"
#include "mpbn/randgen.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace mpbn;

TEST(ScaleFree, TwoNodesGiveOneEdge) {
    const auto g = generate_scale_free(2, 1);
    EXPECT_EQ(g.n, 2u);
    ASSERT_EQ(g.edges.size(), 1u);
    EXPECT_NE(g.edges[0].source, g.edges[0].target);
    EXPECT_THROW(generate_scale_free(1, 1), Error);
}

TEST(ScaleFree, DeterministicInSeed) {
    const auto a = generate_scale_free(300, 7);
    const auto b = generate_scale_free(300, 7);
    const auto c = generate_scale_free(300, 8);
    EXPECT_EQ(a.edges, b.edges);
    EXPECT_NE(a.edges, c.edges);
}

TEST(ScaleFree, EdgeCountAndNoDuplicates) {
    ScaleFreeParams p;
    p.attachment = 3;
    const auto g = generate_scale_free(200, 5, p);
    // Node k links to min(k, 3) earlier nodes.
    EXPECT_EQ(g.edges.size(), 1u + 2u + 3u * 197u);
    std::set<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (const auto& e : g.edges) {
        EXPECT_NE(e.source, e.target);
        EXPECT_LT(e.source, 200u);
        EXPECT_LT(e.target, 200u);
        EXPECT_TRUE(pairs.emplace(std::min(e.source, e.target), std::max(e.source, e.target)).second);
    }
}

TEST(ScaleFree, SignBiasExtremes) {
    ScaleFreeParams all_pos, all_neg;
    all_pos.sign_bias = 1.0;
    all_neg.sign_bias = 0.0;
    for (const auto& e : generate_scale_free(100, 2, all_pos).edges) EXPECT_TRUE(e.positive);
    for (const auto& e : generate_scale_free(100, 2, all_neg).edges) EXPECT_FALSE(e.positive);
}

namespace {

double mean_max_in_degree(std::size_t n) {
    double total = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto deg = generate_scale_free(n, seed).in_degrees();
        total += static_cast<double>(*std::max_element(deg.begin(), deg.end()));
    }
    return total / 10;
}

}  // namespace

TEST(ScaleFree, InDegreeIsHeavyTailed) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto deg = generate_scale_free(1000, seed).in_degrees();
        const auto max = *std::max_element(deg.begin(), deg.end());
        std::nth_element(deg.begin(), deg.begin() + 500, deg.end());
        EXPECT_GE(max, 5 * std::max<std::size_t>(deg[500], 1)) << "seed " << seed;
    }
    // Hubs grow like a power of n (about sqrt(n) here); uniform attachment
    // would only gain a logarithmic factor over a 16-fold size increase.
    EXPECT_GE(mean_max_in_degree(8000), 2.5 * mean_max_in_degree(500));
}

TEST(InhibitorDominant, Rules) {
    InfluenceGraph g;
    g.n = 4;
    g.edges = {{0, 2, true}, {1, 2, false}, {3, 2, true}, {2, 1, false}};
    const auto net = inhibitor_dominant(g);
    EXPECT_EQ(net.name(0), "n1");
    EXPECT_EQ(net.name(3), "n4");
    // n1 and n4 have no regulators and keep their value.
    EXPECT_TRUE(evaluate(net, 0, Configuration::from_string("1000")));
    EXPECT_FALSE(evaluate(net, 0, Configuration::from_string("0111")));
    // n3 = (n1 | n4) & !n2
    EXPECT_TRUE(evaluate(net, 2, Configuration::from_string("1000")));
    EXPECT_TRUE(evaluate(net, 2, Configuration::from_string("0001")));
    EXPECT_FALSE(evaluate(net, 2, Configuration::from_string("1100")));
    EXPECT_FALSE(evaluate(net, 2, Configuration::from_string("0000")));
    // n2 has only an inhibitor: constant 0.
    EXPECT_FALSE(evaluate(net, 1, Configuration::from_string("0000")));
    EXPECT_FALSE(evaluate(net, 1, Configuration::from_string("1111")));
}

TEST(InhibitorDominant, LocallyMonotoneAndParsable) {
    const auto net = inhibitor_dominant(generate_scale_free(150, 11));
    ASSERT_EQ(net.size(), 150u);
    for (std::size_t i = 0; i < net.size(); ++i) EXPECT_TRUE(net.compiled(i).monotone) << net.name(i);
    const auto back = parse_bnet(render_bnet(net));
    EXPECT_EQ(back.size(), net.size());
    for (std::uint64_t s = 0; s < 20; ++s) {
        Configuration x(net.size());
        for (std::size_t i = 0; i < net.size(); ++i) x.set(i, ((s * 2654435761ULL) >> (i % 31)) & 1U);
        EXPECT_EQ(apply(net, x), apply(back, x));
    }
}
