#include <doctest.h>

#include <complex>

#include "cheb3/laurent.hpp"

using namespace cheb3;

TEST_CASE("orbit sums of the fundamental weights") {
    const RootData rd = RootData::build(3);
    const LaurentPoly z = orbit_sum(rd, WeightCoord{{1, 0, 0}});
    CHECK(z.term_count() == 4);
    CHECK(z.coefficient_sum() == 4);
    CHECK(z.coeff(WeightCoord{{1, 0, 0}}) == 1);
    CHECK(z.coeff(WeightCoord{{-1, 1, 0}}) == 1);
    CHECK(z.coeff(WeightCoord{{0, -1, 1}}) == 1);
    CHECK(z.coeff(WeightCoord{{0, 0, -1}}) == 1);

    const LaurentPoly r = orbit_sum(rd, WeightCoord{{0, 1, 0}});
    CHECK(r.term_count() == 6);
    CHECK(r.coeff(WeightCoord{{1, -1, 1}}) == 1);
    CHECK(orbit_trace(rd, WeightCoord{{0, 1, 0}}) == Int(4) * r);
    CHECK(orbit_trace(rd, WeightCoord{{0, 0, 0}}) == LaurentPoly::constant(24));
}

TEST_CASE("alternating trace: signs follow parity, stabilized indices collapse") {
    const RootData rd = RootData::build(3);
    const WeightCoord rho = rd.weyl_vector_weight();
    const LaurentPoly a = alt_trace(rd, rho);
    CHECK(a.term_count() == 24);
    CHECK(a.coefficient_sum() == 0);
    for (const auto& w : rd.group()) CHECK(a.coeff(rd.act_weight(w, rho)) == w.parity);

    CHECK(alt_trace(rd, WeightCoord{{0, 0, 0}}).is_zero());
    CHECK(alt_trace(rd, WeightCoord{{1, 0, 1}}).is_zero());
    CHECK(alt_trace(rd, WeightCoord{{2, 1, 0}}).is_zero());
}

TEST_CASE("ring arithmetic with structural zero pruning") {
    const LaurentPoly a = LaurentPoly::monomial(WeightCoord{{1, 0, 0}});
    const LaurentPoly b = LaurentPoly::monomial(WeightCoord{{0, 0, 1}}, -1);
    const LaurentPoly square = (a + b) * (a + b);
    LaurentPoly expected = LaurentPoly::monomial(WeightCoord{{2, 0, 0}});
    expected += LaurentPoly::monomial(WeightCoord{{1, 0, 1}}, -2);
    expected += LaurentPoly::monomial(WeightCoord{{0, 0, 2}});
    CHECK(square == expected);

    LaurentPoly s = a + b;
    s -= a;
    s -= b;
    CHECK(s.is_zero());

    LaurentPoly c;
    c.add_term(WeightCoord{{1, 2, 3}}, 5);
    c.add_term(WeightCoord{{1, 2, 3}}, -5);
    CHECK(c.term_count() == 0);
}

TEST_CASE("numeric evaluation: phases pair with weight coordinates") {
    const auto v =
        eval_numeric(LaurentPoly::monomial(WeightCoord{{1, 0, 0}}), EvalPoint{{0.25, 0, 0}});
    CHECK(std::abs(v - std::complex<double>(0.0, 1.0)) < 1e-12);

    const RootData rd = RootData::build(3);
    const auto at_zero = eval_numeric(orbit_sum(rd, WeightCoord{{1, 0, 0}}), EvalPoint{});
    CHECK(std::abs(at_zero - std::complex<double>(4.0, 0.0)) < 1e-12);
}

TEST_CASE("numeric evaluation is a ring homomorphism") {
    const RootData rd = RootData::build(3);
    const EvalPoint at{{0.137, 0.411, 0.823}};
    const LaurentPoly p = orbit_sum(rd, WeightCoord{{1, 1, 0}});
    const LaurentPoly q = alt_trace(rd, rd.weyl_vector_weight());
    const auto lhs = eval_numeric(p * q, at);
    const auto rhs = eval_numeric(p, at) * eval_numeric(q, at);
    CHECK(std::abs(lhs - rhs) < 1e-10);
}
