#include "doctest.h"

#include "czlattice/monomial.hpp"

using namespace czlattice;

namespace {

// Oracle: dense multiply two monomials and compare max-norm.
double dense_product_defect(const MonomialMatrix& A, const MonomialMatrix& B) {
    return ((A * B).dense() - A.dense() * B.dense()).max_norm();
}

} // namespace

TEST_CASE("shift matrix basics") {
    WeylRing w(3);
    MonomialMatrix X = make_X(3, w.ring);
    CHECK(X.pow(3) == MonomialMatrix::identity(3, w.ring));
    // action: (X psi)_j = psi_{j-1}
    CMatrix Xd = X.dense();
    CHECK(Xd(1, 0) == cplx(1.0, 0.0));
    CHECK(Xd(0, 2) == cplx(1.0, 0.0));

    WeylRing w4(4);
    MonomialMatrix X4 = make_X(4, w4.ring);
    CHECK((X4.dagger() * X4) == MonomialMatrix::identity(4, w4.ring));
    CHECK(X4.inverse() == X4.dagger()); // X^-1 = X^T for a real permutation
    CHECK_THROWS_AS((void)make_X(1, w.ring), SizeTooSmall);
}

TEST_CASE("clock matrix basics") {
    WeylRing w(4);
    PhaseExponent i = imaginary_unit(w.ring);
    MonomialMatrix Y = make_Y(4, i); // q = i: diag(i, -1, -i, 1)
    CMatrix Yd = Y.dense();
    CHECK(std::abs(Yd(0, 0) - cplx(0.0, 1.0)) < 1e-15);
    CHECK(std::abs(Yd(1, 1) - cplx(-1.0, 0.0)) < 1e-15);
    CHECK(std::abs(Yd(2, 2) - cplx(0.0, -1.0)) < 1e-15);
    CHECK(std::abs(Yd(3, 3) - cplx(1.0, 0.0)) < 1e-15);

    WeylRing w3(3);
    CHECK(make_Y(3, w3.q()).pow(3) == MonomialMatrix::identity(3, w3.ring));
}

TEST_CASE("Weyl exchange at exponent level") {
    for (int N = 3; N <= 8; ++N) {
        WeylRing w(N);
        for (int m = 0; m <= N; ++m)
            for (int n = 0; n <= N; ++n) CHECK(weyl_exchange_check(N, w.q(), m, n));
    }
    // dense oracle for one representative case
    WeylRing w(5);
    MonomialMatrix X = make_X(5, w.ring), Y = make_Y(5, w.q());
    CMatrix lhs = (Y.pow(2) * X.pow(3)).dense();
    CMatrix rhs = w.q().pow(6).value() * (X.pow(3) * Y.pow(2)).dense();
    CHECK((lhs - rhs).max_norm() < 1e-13);
}

TEST_CASE("monomial closure against dense oracle") {
    WeylRing w(6);
    MonomialMatrix X = make_X(6, w.ring), Y = make_Y(6, w.q());
    MonomialMatrix words[] = {X, Y, X * Y, Y.pow(3) * X.pow(2), X.inverse() * Y.inverse(),
                              make_Xtilde(6, w.q())};
    for (const auto& A : words)
        for (const auto& B : words) CHECK(dense_product_defect(A, B) < 1e-13);
}

TEST_CASE("dagger is an involution, bitwise") {
    WeylRing w(5);
    MonomialMatrix A = make_Y(5, w.q()).pow(2) * make_X(5, w.ring).pow(3) * w.q().pow(7);
    CHECK(A.dagger().dagger() == A);
    CHECK((A.dagger().dense() - A.dense().dagger()).max_norm() < 1e-15);
}

TEST_CASE("deformed commutator combinators") {
    WeylRing w(5);
    CMatrix A = make_X(5, w.ring).dense();
    CMatrix B = make_Y(5, w.q()).dense();
    // x = y = 0: plain commutator
    CMatrix plain = deformed_commutator(A, B, 0, 0, w.q());
    CHECK((plain - (A * B - B * A)).max_norm() < 1e-14);
    CHECK(deformed_commutator(A, A, 0, 0, w.q()).max_norm() < 1e-14);
    // skew property [A,B]_{(x,-x)} = -[B,A]_{(-x,x)}
    for (long long x2 = -3; x2 <= 3; ++x2) {
        CMatrix lhs = deformed_commutator2(A, B, x2, w.q());
        CMatrix rhs = cplx(-1.0, 0.0) * deformed_commutator2(B, A, -x2, w.q());
        CHECK((lhs - rhs).max_norm() < 1e-13);
    }
}

TEST_CASE("bracket-splitting identity") {
    // (q^n + q^-n) [A,B]_{(m+l-n)} = [A,B]_{(m+l)} + [A,B]_{(m+l-2n)}
    WeylRing w(7);
    CMatrix A = (make_X(7, w.ring) * make_Y(7, w.q())).dense();
    CMatrix B = make_Y(7, w.q()).pow(2).dense();
    for (int n = -2; n <= 2; ++n)
        for (int m = -2; m <= 2; ++m)
            for (int l = -2; l <= 2; ++l) {
                cplx c = w.q().pow(n).value() + w.q().pow(-n).value();
                CMatrix lhs = c * deformed_commutator(A, B, m + l - n, -(m + l - n), w.q());
                CMatrix rhs = deformed_commutator(A, B, m + l, -(m + l), w.q()) +
                              deformed_commutator(A, B, m + l - 2 * n, -(m + l - 2 * n), w.q());
                CHECK((lhs - rhs).max_norm() < 1e-12);
            }
}

TEST_CASE("Xtilde square against its defining relation") {
    WeylRing w(6);
    MonomialMatrix Xt = make_Xtilde(6, w.q());
    // Xt^-2 = -q X^-2  <=>  -X^-2 = q^-1 Xt^-2, exactly in exponents
    MonomialMatrix lhs = Xt.pow(-2);
    MonomialMatrix rhs = make_X(6, w.ring).pow(-2) * (imaginary_unit(w.ring).pow(2) * w.q());
    CHECK(lhs == rhs);
    // (Xt)^{2N} is a pure phase times identity
    MonomialMatrix p = Xt.pow(12);
    CHECK(p.shift() == 0);
    for (int j = 0; j < 6; ++j) CHECK(p.rowphase(j) == p.rowphase(0));
}

TEST_CASE("ring mismatch is detected") {
    WeylRing a(4), b(5);
    CHECK_THROWS_AS((void)(make_X(4, a.ring) * make_X(4, b.ring)), RingMismatch);
}
