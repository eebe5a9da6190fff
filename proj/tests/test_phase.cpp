#include "doctest.h"

#include <cmath>

#include "czlattice/phase.hpp"

using namespace czlattice;

TEST_CASE("phase group law and normalization") {
    PhaseRing ring(4);
    CHECK(phase(ring, 0).value() == cplx(1.0, 0.0));
    CHECK(phase(ring, 8).exponent() == 0); // 8 mod 2M with M=4
    for (int a = 0; a < ring.order(); ++a)
        for (int b = 0; b < ring.order(); ++b)
            CHECK(phase(ring, a) * phase(ring, b) == phase(ring, a + b));
    CHECK(phase(ring, -3) == phase(ring, 5));
}

TEST_CASE("phase_to_complex at known angles") {
    PhaseRing r3(3);
    CHECK(std::abs(phase(r3, 3).value() - cplx(-1.0, 0.0)) < 1e-15); // half turn
    PhaseRing r2(2);
    CHECK(std::abs(phase(r2, 1).value() - cplx(0.0, 1.0)) < 1e-15); // quarter turn
    PhaseRing r6(6);
    CHECK(std::abs(phase(r6, 2).value() - cplx(0.5, std::sqrt(3.0) / 2.0)) < 1e-15);
    // generic angle against the direct exponential
    PhaseRing r5(5);
    const double pi = 3.14159265358979323846;
    cplx direct = std::exp(cplx(0.0, 7.0 * pi / 5.0));
    CHECK(std::abs(phase(r5, 7).value() - direct) < 1e-15);
}

TEST_CASE("conjugation and modulus") {
    PhaseRing ring(7);
    for (int e = 0; e < ring.order(); ++e) {
        CHECK(std::abs(phase(ring, -e).value() - std::conj(phase(ring, e).value())) < 1e-15);
        CHECK(std::abs(std::abs(phase(ring, e).value()) - 1.0) < 1e-15);
    }
}

TEST_CASE("fractional powers are exact or refused") {
    PhaseRing ring(12);
    PhaseExponent q = phase(ring, 4);
    CHECK(q.pow_frac(1, 2) == phase(ring, 2));
    CHECK(q.pow_frac(1, 4) == phase(ring, 1));
    CHECK(q.pow_frac(-3, 2) == phase(ring, -6));
    PhaseExponent odd = phase(ring, 3);
    CHECK_THROWS_AS((void)odd.pow_frac(1, 2), PhaseNotRepresentable);
}

TEST_CASE("imaginary unit") {
    PhaseRing even(6);
    CHECK(std::abs(imaginary_unit(even).value() - cplx(0.0, 1.0)) < 1e-15);
    PhaseRing oddM(5);
    CHECK_THROWS_AS((void)imaginary_unit(oddM), PhaseNotRepresentable);
}

TEST_CASE("q-bracket values and properties") {
    PhaseRing ring(6);
    PhaseExponent q = phase(ring, 2); // e^{i pi/3}
    CHECK(q_bracket(0, q) == doctest::Approx(0.0));
    CHECK(q_bracket(1, q) == doctest::Approx(1.0));
    // [2] = q + q^-1 = 2 cos(pi/3) = 1
    CHECK(q_bracket(2, q) == doctest::Approx(1.0).epsilon(1e-14));
    for (int n = -12; n <= 12; ++n)
        CHECK(q_bracket(-n, q) == doctest::Approx(-q_bracket(n, q)).epsilon(1e-14));
    // oracle: direct complex evaluation
    for (int s = 1; s < ring.order(); ++s) {
        PhaseExponent p = phase(ring, s);
        if (p.is_real()) continue;
        cplx pv = p.value();
        for (int n = -5; n <= 5; ++n) {
            cplx direct = (std::pow(pv, n) - std::pow(pv, -n)) / (pv - 1.0 / pv);
            CHECK(std::abs(direct.imag()) < 1e-12);
            CHECK(q_bracket(n, p) == doctest::Approx(direct.real()).epsilon(1e-12));
        }
    }
}

TEST_CASE("degenerate q is an error") {
    PhaseRing ring(4);
    CHECK_THROWS_AS((void)q_bracket(1, phase(ring, 0)), DegenerateQ);
    CHECK_THROWS_AS((void)q_bracket(1, phase(ring, 4)), DegenerateQ); // q = -1
}

TEST_CASE("family bracket reduces to plain bracket at k = 1") {
    PhaseRing ring(7);
    PhaseExponent q = phase(ring, 2); // e^{i pi/7 * 2}
    for (int n = -4; n <= 4; ++n)
        CHECK(q_bracket_family(n, q, 1) == doctest::Approx(q_bracket(n, q)));
    CHECK(q_bracket_family(1, q, 2) == doctest::Approx(1.0));
    // [3]_2 at q = e^{i pi/7}: sin(6 pi/7)/sin(2 pi/7)
    PhaseExponent q7 = phase(ring, 1);
    const double pi = 3.14159265358979323846;
    CHECK(q_bracket_family(3, q7, 2) ==
          doctest::Approx(std::sin(6 * pi / 7) / std::sin(2 * pi / 7)).epsilon(1e-14));
}

TEST_CASE("flux ratio validation") {
    CHECK_NOTHROW(FluxRatio(2, 5));
    CHECK_THROWS_AS(FluxRatio(2, 4), NonCoprimeFlux);
    CHECK_THROWS_AS(FluxRatio(1, 0), NonCoprimeFlux);
}

TEST_CASE("session ring builders") {
    WeylRing w(5); // M = 10, q = w^4 = e^{2 pi i/5}
    const double pi = 3.14159265358979323846;
    CHECK(std::abs(w.q().value() - std::exp(cplx(0.0, 2.0 * pi / 5.0))) < 1e-15);
    CHECK(w.q().pow(5).is_one());
    CHECK_NOTHROW((void)w.q().pow_frac(1, 4));
    CHECK_NOTHROW((void)imaginary_unit(w.ring));

    FluxRing f(FluxRatio(1, 3)); // M = 12
    CHECK(std::abs(f.unit().value() - std::exp(cplx(0.0, pi / 3.0))) < 1e-15);
    CHECK_NOTHROW((void)f.unit().pow_frac(1, 4));
}
