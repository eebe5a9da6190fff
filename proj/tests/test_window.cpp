#include "doctest.h"

#include <cmath>

#include "czlattice/window.hpp"

using namespace czlattice;

TEST_CASE("translation units: exchange, fusion, circulation (exact)") {
    WeylRing wr(7);
    Report rep = verify_MTA(wr.q(), 3);
    CHECK(rep.all_pass());
    // exchange/fusion/circulation entries are exponent-level
    bool any_exact = false;
    for (const auto& c : rep.checks)
        if (c.exact) any_exact = true;
    CHECK(any_exact);

    // a nonzero spin offset shifts every unit but preserves the whole algebra
    Report shifted = verify_MTA(wr.q(), 2, SpinDelta{1});
    CHECK(shifted.all_pass());
}

TEST_CASE("fusion rule directly at the term level") {
    WeylRing wr(5);
    PhaseExponent q = wr.q();
    for (int n = -2; n <= 2; ++n)
        for (int m = -2; m <= 2; ++m)
            for (int k = -2; k <= 2; ++k)
                for (int l = -2; l <= 2; ++l) {
                    long long x = (long long)n * l - (long long)m * k;
                    WindowOp lhs = make_tau(q, n, k) * make_tau(q, m, l);
                    WindowOp rhs = make_tau(q, n + m, k + l).mul_qpow4(2 * x);
                    CHECK(lhs == rhs); // exact: same exponent keys and coefficients
                }
}

TEST_CASE("q-derivative acts as the deformed integer") {
    WeylRing wr(9);
    PhaseExponent q = wr.q();
    WindowOp d = q_derivative_op(q);
    auto img = d.apply_to_monomial(5);
    // z^5 -> q^{-5}[5] z^4
    cplx expect = q.pow(-5).value() * q_bracket(5, q);
    CHECK(std::abs(img[4] - expect) < 1e-14);
    CHECK(img.size() == 1);
}

TEST_CASE("generator decomposition into translation units") {
    WeylRing wr(7);
    for (int n = -3; n <= 3; ++n) {
        CHECK(czt_decomposition_check(wr.q(), n).all_pass());
        CHECK(czt_decomposition_check(wr.q(), n, SpinDelta{1}).all_pass());
    }
}

TEST_CASE("window underflow is detected, not silently wrapped") {
    WeylRing wr(5);
    PhaseExponent q = wr.q();
    LaurentWindow win(-2, 2);
    WindowOp shift = WindowOp::z_power(q, 4);
    std::map<int, cplx> f{{1, cplx(1.0, 0.0)}};
    CHECK_THROWS_AS((void)shift.apply(f, win), WindowUnderflow);
    std::map<int, cplx> g{{5, cplx(1.0, 0.0)}};
    CHECK_THROWS_AS((void)WindowOp::identity(q).apply(g, win), WindowUnderflow);
}

TEST_CASE("degenerate deformation parameter is rejected") {
    PhaseRing ring(2);
    PhaseExponent minus_one(ring, 2); // e^{i pi} = -1, real
    CHECK_THROWS_AS((void)make_That(minus_one, 1, 0), DegenerateQ);
}
