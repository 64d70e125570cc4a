// Small reference networks shared by the tests.
#ifndef MPBN_TESTS_FIXTURES_HPP
#define MPBN_TESTS_FIXTURES_HPP

#include "mpbn/bnet.hpp"
#include "mpbn/hypercube.hpp"
#include "mpbn/mp.hpp"

namespace mpbn::testing {

// f1 = !x2, f2 = !x1, f3 = !x1 & x2
inline BooleanNetwork bn_b() { return parse_bnet("a, !b\nb, !a\nc, !a & b\n"); }

// f1 = x3 & (!x1 | !x2), f2 = x3 & x1, f3 = x1 | x2 | x3
inline BooleanNetwork bn_a() { return parse_bnet("x1, x3 & (!x1 | !x2)\nx2, x3 & x1\nx3, x1 | x2 | x3\n"); }

inline Configuration cfg(std::string_view s) { return Configuration::from_string(s); }
inline Hypercube cube(std::string_view s) { return Hypercube::from_string(s); }
inline MPConfiguration mpc(std::string_view s) { return MPConfiguration::from_string(s); }

}  // namespace mpbn::testing

#endif  // MPBN_TESTS_FIXTURES_HPP
