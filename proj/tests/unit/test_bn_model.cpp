#include "fixtures.hpp"
#include "random_networks.hpp"

#include "mpbn/bnet.hpp"
#include "mpbn/error.hpp"

#include <gtest/gtest.h>

using namespace mpbn;
using namespace mpbn::testing;

TEST(Parse, WorkedExampleNetwork) {
    const auto net = bn_b();
    ASSERT_EQ(net.size(), 3u);
    EXPECT_EQ(net.name(0), "a");
    EXPECT_EQ(net.name(2), "c");
    for (std::uint64_t s = 0; s < 8; ++s) {
        const auto x = Configuration::from_index(s, 3);
        EXPECT_EQ(evaluate(net, 0, x), !x[1]);
        EXPECT_EQ(evaluate(net, 1, x), !x[0]);
        EXPECT_EQ(evaluate(net, 2, x), !x[0] && x[1]);
    }
}

TEST(Parse, IdentityComponent) {
    const auto net = parse_bnet("a, a");
    ASSERT_EQ(net.size(), 1u);
    EXPECT_FALSE(evaluate(net, 0, cfg("0")));
    EXPECT_TRUE(evaluate(net, 0, cfg("1")));
}

TEST(Parse, UndefinedNameReportsLine) {
    try {
        parse_bnet("a, b");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 1u);
        EXPECT_NE(std::string(e.what()).find("b"), std::string::npos);
    }
}

TEST(Parse, DuplicateDefinition) {
    try {
        parse_bnet("a, 1\n# comment\n\na, 0\n");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 4u);
    }
}

TEST(Parse, SyntaxErrors) {
    EXPECT_THROW(parse_bnet("a, (a"), ParseError);
    EXPECT_THROW(parse_bnet("a, a &"), ParseError);
    EXPECT_THROW(parse_bnet("a a"), ParseError);
    EXPECT_THROW(parse_bnet("1a, 1"), ParseError);
    EXPECT_THROW(parse_bnet(""), Error);
}

TEST(Parse, CommentsHeaderAndConstants) {
    const auto net = parse_bnet("targets, factors\n# inputs\nu, 1   # fixed\nv, 0\nw, u & !v | (w)\n");
    ASSERT_EQ(net.size(), 3u);
    EXPECT_TRUE(evaluate(net, 0, cfg("000")));
    EXPECT_FALSE(evaluate(net, 1, cfg("111")));
    EXPECT_TRUE(evaluate(net, 2, cfg("100")));
    EXPECT_FALSE(evaluate(net, 2, cfg("110")));
}

TEST(Parse, ForwardReferencesAreAllowed) {
    const auto net = parse_bnet("a, b\nb, a\n");
    EXPECT_EQ(apply(net, cfg("10")), cfg("01"));
}

TEST(Evaluate, WorkedExample) {
    const auto net = bn_b();
    EXPECT_TRUE(evaluate(net, 2, cfg("010")));
    EXPECT_FALSE(evaluate(net, 2, cfg("110")));
    EXPECT_TRUE(evaluate(parse_bnet("a, 1\nb, a"), 0, cfg("01")));
}

TEST(Apply, Examples) {
    EXPECT_EQ(apply(bn_b(), cfg("000")), cfg("110"));
    EXPECT_EQ(apply(bn_b(), cfg("011")), cfg("011"));
    EXPECT_EQ(apply(bn_a(), cfg("000")), cfg("000"));
}

TEST(Network, RejectsInvalidConstruction) {
    EXPECT_THROW(BooleanNetwork({}, {}), Error);
    EXPECT_THROW(BooleanNetwork({"a", "a"}, {Expr::constant(true), Expr::constant(true)}), Error);
    EXPECT_THROW(BooleanNetwork({"a"}, {Expr::variable(1)}), Error);
    EXPECT_THROW(BooleanNetwork({"a", "b"}, {Expr::constant(true)}), Error);
}

TEST(Network, SupportAndReaders) {
    const auto net = bn_b();
    EXPECT_EQ(std::vector<std::uint32_t>(net.support(2).begin(), net.support(2).end()),
              (std::vector<std::uint32_t>{0, 1}));
    const auto readers = net.readers(0);
    EXPECT_EQ(std::vector<std::uint32_t>(readers.begin(), readers.end()), (std::vector<std::uint32_t>{1, 2}));
    EXPECT_EQ(net.index_of("b"), 1u);
    EXPECT_FALSE(net.index_of("zz"));
}

TEST(Configuration, TextAndIndex) {
    const auto x = cfg("1101");
    EXPECT_EQ(x.to_string(), "1101");
    EXPECT_EQ(x.to_index(), 13u);
    EXPECT_EQ(Configuration::from_index(13, 4), x);
    EXPECT_EQ(x.concat(cfg("00")).to_string(), "110100");
    EXPECT_EQ(x.prefix(2).to_string(), "11");
    EXPECT_THROW(Configuration::from_string("01x"), Error);
}

TEST(Expression, FoldingAndRendering) {
    const auto x = Expr::variable(0);
    EXPECT_EQ(Expr::negation(Expr::negation(x)), x);
    EXPECT_EQ(Expr::conjunction({x, Expr::constant(false)}), Expr::constant(false));
    EXPECT_EQ(Expr::disjunction({x, Expr::constant(true)}), Expr::constant(true));
    EXPECT_EQ(Expr::conjunction({}), Expr::constant(true));
    EXPECT_EQ(Expr::disjunction({}), Expr::constant(false));
    EXPECT_EQ(Expr::conjunction({x}), x);
    const std::vector<std::string> names{"p", "q", "r"};
    const auto e = Expr::conjunction({Expr::disjunction({x, Expr::variable(1)}), Expr::negation(Expr::variable(2))});
    EXPECT_EQ(e.to_string(names), "(p | q) & !r");
    EXPECT_EQ(e.variables(), (std::vector<std::uint32_t>{0, 1, 2}));
}

TEST(Polarity, ExampleOneIsLocallyMonotonic) {
    const auto profile = polarity_analysis(bn_a());
    EXPECT_TRUE(profile.locally_monotonic());
    using O = Order;
    EXPECT_EQ(profile.ordering(0), (std::vector<O>{O::GreaterEq, O::GreaterEq, O::LessEq}));
    EXPECT_EQ(profile.ordering(1), (std::vector<O>{O::LessEq, O::LessEq, O::LessEq}));
    EXPECT_EQ(profile.ordering(2), (std::vector<O>{O::LessEq, O::LessEq, O::LessEq}));
    EXPECT_EQ(profile.polarity(0, 0), Polarity::Negative);
    EXPECT_EQ(profile.polarity(0, 2), Polarity::Positive);
    EXPECT_EQ(profile.polarity(1, 1), Polarity::Unused);
}

TEST(Polarity, EquivalenceIsDual) {
    const auto net = parse_bnet("a, (a & b) | (!a & !b)\nb, b");
    const auto profile = polarity_analysis(net);
    EXPECT_FALSE(profile.locally_monotonic(0));
    EXPECT_FALSE(profile.locally_monotonic());
    EXPECT_EQ(profile.polarity(0, 0), Polarity::Dual);
    EXPECT_EQ(profile.polarity(0, 1), Polarity::Dual);
    EXPECT_FALSE(profile.ordering(0));
}

TEST(Polarity, ConstantHasOnlyUnusedInputs) {
    const auto profile = polarity_analysis(parse_bnet("a, 1\nb, a"));
    EXPECT_EQ(profile.polarity(0, 0), Polarity::Unused);
    EXPECT_EQ(profile.polarity(0, 1), Polarity::Unused);
    EXPECT_TRUE(profile.locally_monotonic(0));
}

TEST(Polarity, NegationParityThroughNesting) {
    const auto profile = polarity_analysis(parse_bnet("a, !(b | !c)\nb, b\nc, c"));
    EXPECT_EQ(profile.polarity(0, 1), Polarity::Negative);
    EXPECT_EQ(profile.polarity(0, 2), Polarity::Positive);
}

// ── Properties ──────────────────────────────────────────────────────────────

TEST(Properties, RenderParseRoundTrip) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng() % 10;
        const auto net = random_network(n, rng, 4);
        const auto back = parse_bnet(render_bnet(net));
        ASSERT_EQ(back.size(), n);
        for (std::uint64_t s = 0; s < (1ULL << n); ++s) {
            const auto x = Configuration::from_index(s, n);
            ASSERT_EQ(apply(net, x), apply(back, x)) << render_bnet(net);
        }
    }
}

TEST(Properties, MonotoneOrderingIsSound) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + rng() % 6;
        const auto net = random_network(n, rng, 4);
        const auto profile = polarity_analysis(net);
        for (std::size_t i = 0; i < n; ++i) {
            const auto order = profile.ordering(i);
            if (!order) continue;
            for (int k = 0; k < 1000 / static_cast<int>(n); ++k) {
                auto x = random_configuration(n, rng);
                auto y = x;
                // Raise some inputs along the ordering of component i.
                for (std::size_t j = 0; j < n; ++j) {
                    if (rng() & 1U) y.set(j, (*order)[j] == Order::LessEq);
                    if ((*order)[j] == Order::LessEq ? x[j] > y[j] : x[j] < y[j]) y.set(j, x[j]);
                }
                ASSERT_LE(evaluate(net, i, x), evaluate(net, i, y));
            }
        }
    }
}

TEST(Properties, ApplyMatchesEvaluate) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng() % 8;
        const auto net = random_network(n, rng);
        const auto x = random_configuration(n, rng);
        const auto fx = apply(net, x);
        for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(fx[i], evaluate(net, i, x));
    }
}

TEST(Json, Export) {
    const auto j = network_to_json(bn_b());
    EXPECT_EQ(j["nodes"], nlohmann::json({"a", "b", "c"}));
    EXPECT_EQ(j["functions"]["c"], "!a & b");
}
