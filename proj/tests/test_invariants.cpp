#include <doctest.h>

#include <map>
#include <random>

#include "cheb3/errors.hpp"
#include "cheb3/invariants.hpp"

using namespace cheb3;

TEST_CASE("parser accepts the reference syntax and rejects garbage") {
    const TriPoly p = parse_tri("z^2 - 2r + 4zzb - 1");
    CHECK(p.coeff({2, 0, 0}) == 1);
    CHECK(p.coeff({0, 1, 0}) == -2);
    CHECK(p.coeff({1, 0, 1}) == 4);
    CHECK(p.coeff({0, 0, 0}) == -1);
    CHECK(parse_tri(to_plain_string(p)) == p);

    CHECK(parse_tri("-zb^3") == TriPoly::monomial({0, 0, 3}, -1));
    CHECK(parse_tri("83zb^2r") == TriPoly::monomial({0, 1, 2}, 83));
    CHECK(parse_tri("2*z*r") == TriPoly::monomial({1, 1, 0}, 2));
    CHECK(parse_tri("0").is_zero());

    CHECK_THROWS_AS(parse_tri(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_tri("z^"), std::invalid_argument);
    CHECK_THROWS_AS(parse_tri("2x + 1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_tri("z +"), std::invalid_argument);
}

TEST_CASE("printers: plain form round trips, latex uses bar notation") {
    CHECK(to_plain_string(TriPoly{}) == "0");
    CHECK(to_plain_string(parse_tri("zzb - 4")) == "-4 + zzb");
    CHECK(to_latex(parse_tri("zr - 3zb")) == "-3 \\bar{z} + z r");
    CHECK(to_latex(parse_tri("zb^2")) == "\\bar{z}^{2}");
}

TEST_CASE("ring operations and the bar involution") {
    CHECK(parse_tri("z + r") * parse_tri("z - r") == parse_tri("z^2 - r^2"));
    const TriPoly p = parse_tri("z^2zb - r + 4");
    CHECK(p.bar() == parse_tri("zb^2z - r + 4"));
    CHECK(p.bar().bar() == p);
    CHECK(parse_tri("r^2").bar() == parse_tri("r^2"));

    TriPoly q;
    CHECK_THROWS_AS(q.add_term({-1, 0, 0}, 1), std::invalid_argument);
}

TEST_CASE("tri_to_laurent: variables map to orbit sums, products to products") {
    const RootData rd = RootData::build(3);
    InvariantReducer red(rd);
    CHECK(red.tri_to_laurent(parse_tri("z")) == orbit_sum(rd, WeightCoord{{1, 0, 0}}));
    CHECK(red.tri_to_laurent(parse_tri("r")) == orbit_sum(rd, WeightCoord{{0, 1, 0}}));
    CHECK(red.tri_to_laurent(parse_tri("zb")) == orbit_sum(rd, WeightCoord{{0, 0, 1}}));

    const TriPoly p = parse_tri("zr - 2zb^2");
    const TriPoly q = parse_tri("z^2 + rzb");
    CHECK(red.tri_to_laurent(p * q) == red.tri_to_laurent(p) * red.tri_to_laurent(q));
}

TEST_CASE("z times zbar: twelve-point orbit plus four at the origin") {
    const RootData rd = RootData::build(3);
    InvariantReducer red(rd);
    const LaurentPoly zzb = red.tri_to_laurent(parse_tri("zzb"));
    CHECK(zzb.term_count() == 13);
    CHECK(zzb.coefficient_sum() == 16);
    CHECK(zzb.coeff(WeightCoord{{0, 0, 0}}) == 4);
    CHECK(zzb.coeff(WeightCoord{{1, 0, 1}}) == 1);
}

TEST_CASE("laurent_to_tri inverts tri_to_laurent on random polynomials") {
    const RootData rd = RootData::build(3);
    InvariantReducer red(rd);
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> exp_dist(0, 4);
    std::uniform_int_distribution<int> coeff_dist(-9, 9);
    for (int sample = 0; sample < 12; ++sample) {
        TriPoly p;
        for (int t = 0; t < 6; ++t) {
            const int a = exp_dist(rng), b = exp_dist(rng), c = exp_dist(rng);
            if (a + b + c > 4) continue;
            const int v = coeff_dist(rng);
            if (v != 0) p.add_term({a, b, c}, v);
        }
        CHECK(red.laurent_to_tri(red.tri_to_laurent(p)) == p);
    }
}

TEST_CASE("reduction is triangular in the height key") {
    const RootData rd = RootData::build(3);
    InvariantReducer red(rd);
    for (const WeightCoord n : {WeightCoord{{2, 1, 2}}, WeightCoord{{0, 3, 1}}}) {
        std::vector<WeightCoord> trace;
        red.laurent_to_tri(orbit_sum(rd, n), &trace);
        REQUIRE(!trace.empty());
        CHECK(trace.front() == n);
        for (std::size_t i = 1; i < trace.size(); ++i) {
            CHECK(rd.is_dominant(trace[i]));
            CHECK(RootData::height_key(trace[i]) < RootData::height_key(n));
        }
    }
}

TEST_CASE("first-kind reductions at small indices") {
    const RootData rd = RootData::build(3);
    InvariantReducer red(rd);
    CHECK(red.chebyshev_first(WeightCoord{{0, 0, 0}}) == parse_tri("1"));
    CHECK(red.chebyshev_first(WeightCoord{{1, 0, 0}}) == parse_tri("z"));
    CHECK(red.chebyshev_first(WeightCoord{{0, 1, 0}}) == parse_tri("r"));
    CHECK(red.chebyshev_first(WeightCoord{{0, 0, 1}}) == parse_tri("zb"));
    CHECK(red.chebyshev_first(WeightCoord{{1, 1, 0}}) == parse_tri("zr - 3zb"));
    CHECK(red.chebyshev_first(WeightCoord{{1, 0, 1}}) == parse_tri("zzb - 4"));
    // z^2 = T200 + 2r and r^2 = T020 + 2(zzb - 4) + 6, by counting orbit points
    CHECK(red.chebyshev_first(WeightCoord{{2, 0, 0}}) == parse_tri("z^2 - 2r"));
    CHECK(red.chebyshev_first(WeightCoord{{0, 2, 0}}) == parse_tri("r^2 - 2zzb + 2"));
    CHECK_THROWS_AS(red.chebyshev_first(WeightCoord{{-1, 0, 0}}), NonDominantIndex);
}

TEST_CASE("bar symmetry of the reduction route") {
    const RootData rd = RootData::build(3);
    InvariantReducer red(rd);
    for (const WeightCoord n :
         {WeightCoord{{2, 1, 0}}, WeightCoord{{1, 2, 3}}, WeightCoord{{0, 1, 2}}}) {
        const WeightCoord m{{n[2], n[1], n[0]}};
        CHECK(red.chebyshev_first(m) == red.chebyshev_first(n).bar());
    }
}

TEST_CASE("non-invariant input is rejected") {
    const RootData rd = RootData::build(3);
    InvariantReducer red(rd);
    CHECK_THROWS_AS(red.laurent_to_tri(LaurentPoly::monomial(WeightCoord{{1, 0, 0}})),
                    NonInvariantInput);
    LaurentPoly p = orbit_sum(rd, WeightCoord{{1, 1, 0}});
    p.add_term(WeightCoord{{1, 1, 0}}, 1);
    CHECK_THROWS_AS(red.laurent_to_tri(p), NonInvariantInput);
}

TEST_CASE("orbit product decomposition: exact dominant multiplicities") {
    const RootData rd = RootData::build(3);
    InvariantReducer red(rd);
    using Decomp = std::map<WeightCoord, Int>;

    CHECK(red.product_decomposition(1, WeightCoord{{0, 0, 0}}) ==
          Decomp{{WeightCoord{{1, 0, 0}}, 1}});
    CHECK(red.product_decomposition(1, WeightCoord{{1, 0, 0}}) ==
          Decomp{{WeightCoord{{2, 0, 0}}, 1}, {WeightCoord{{0, 1, 0}}, 2}});
    CHECK(red.product_decomposition(3, WeightCoord{{1, 0, 0}}) ==
          Decomp{{WeightCoord{{1, 0, 1}}, 1}, {WeightCoord{{0, 0, 0}}, 4}});
    CHECK(red.product_decomposition(1, WeightCoord{{1, 1, 1}}) ==
          Decomp{{WeightCoord{{2, 1, 1}}, 1},
                 {WeightCoord{{0, 2, 1}}, 2},
                 {WeightCoord{{1, 0, 2}}, 2},
                 {WeightCoord{{1, 1, 0}}, 2}});

    // the decomposition reassembles the Laurent product exactly
    for (int i = 1; i <= 3; ++i) {
        const WeightCoord n{{1, 2, 0}};
        const WeightCoord e{{i == 1, i == 2, i == 3}};
        LaurentPoly back;
        for (const auto& [m, mult] : red.product_decomposition(i, n))
            back += mult * orbit_sum(rd, m);
        CHECK(back == orbit_sum(rd, e) * orbit_sum(rd, n));
    }

    CHECK_THROWS_AS(red.product_decomposition(0, WeightCoord{{0, 0, 0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(red.product_decomposition(4, WeightCoord{{0, 0, 0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(red.product_decomposition(1, WeightCoord{{0, -1, 0}}), NonDominantIndex);
}
