#include "czlattice/window.hpp"

#include <cmath>
#include <string>

namespace czlattice {

namespace {

// Inverse of a single-monomial map (translation units are always of this form).
WindowOp invert_monomial(const WindowOp& op) {
    if (op.terms().size() != 1) throw Error("invert_monomial: not a monomial map");
    const WindowTerm& t = op.terms().front();
    WindowTerm r;
    r.shift = -t.shift;
    r.alpha2 = -t.alpha2;
    r.beta4 = 2 * t.alpha2 * t.shift - t.beta4;
    r.coeff = 1.0 / t.coeff;
    return WindowOp(op.q(), {r});
}

// [A,B]_{(x)} = q^x A B - q^{-x} B A with x given in quarter units.
WindowOp window_defbr4(const WindowOp& A, const WindowOp& B, long long x4) {
    return (A * B).mul_qpow4(x4) - (B * A).mul_qpow4(-x4);
}

// [n2/2] = sin((n2/2) theta)/sin(theta): q-bracket with half-integer argument.
double q_bracket_half(long long n2, const PhaseExponent& q) {
    if (q.is_real()) throw DegenerateQ("q-bracket undefined for real q");
    const double pi = 3.14159265358979323846264338327950288;
    double theta = pi * double(q.exponent()) / double(q.ring().M);
    return std::sin(0.5 * double(n2) * theta) / std::sin(theta);
}

CheckResult exact_check(std::string name, bool ok, std::map<std::string, long long> params) {
    CheckResult c;
    c.name = std::move(name);
    c.params = std::move(params);
    c.exact = true;
    c.pass = ok;
    c.residual = ok ? 0.0 : 1.0;
    return c;
}

} // namespace

Report verify_MTA(const PhaseExponent& q, int range, SpinDelta d) {
    Report rep;
    rep.suite = "magnetic-translation-algebra";
    rep.q_exponent_s = q.exponent();
    rep.q_exponent_M = q.ring().M;
    LaurentWindow win(-4 * range - 8, 4 * range + 8);

    for (int n = -range; n <= range; ++n)
        for (int m = -range; m <= range; ++m)
            for (int k = -2; k <= 2; ++k)
                for (int l = -2; l <= 2; ++l) {
                    std::map<std::string, long long> P{{"n", n}, {"m", m}, {"k", k}, {"l", l}};
                    long long x = (long long)n * l - (long long)m * k;
                    WindowOp tn = make_tau(q, n, k, d);
                    WindowOp tm = make_tau(q, m, l, d);

                    // Exchange: tau_n^(k) tau_m^(l) = q^{nl-mk} tau_m^(l) tau_n^(k).
                    rep.add(exact_check("exchange", tn * tm == (tm * tn).mul_qpow(x), P));

                    // Fusion: tau_n^(k) tau_m^(l) = q^{(nl-mk)/2} tau_{n+m}^{(k+l)}.
                    rep.add(exact_check(
                        "fusion",
                        tn * tm == make_tau(q, n + m, k + l, d).mul_qpow4(2 * x), P));

                    // Circulation around the elementary cell.
                    WindowOp circ = invert_monomial(tn) * invert_monomial(tm) * tn * tm;
                    rep.add(exact_check("circulation",
                                        circ == WindowOp::identity(q).mul_qpow(x), P));

                    // Normalized commutator: [T_n^(k), T_m^(l)] = [(nl-mk)/2] T_{n+m}^{(k+l)}.
                    WindowOp Tn = make_That(q, n, k, d);
                    WindowOp Tm = make_That(q, m, l, d);
                    WindowOp lhs = Tn * Tm - Tm * Tn;
                    WindowOp rhs = q_bracket_half(x, q) * make_That(q, n + m, k + l, d);
                    CheckResult c;
                    c.name = "normalized-commutator";
                    c.params = P;
                    c.residual = window_residual(lhs, rhs, win);
                    c.pass = c.residual < 1e-12;
                    rep.add(c);

                    // Graded star bracket vanishes identically.
                    rep.add(exact_check("star-zero",
                                        window_defbr4(Tn, Tm, -2 * x) == WindowOp::zero(q), P));
                }
    return rep;
}

Report czt_decomposition_check(const PhaseExponent& q, int n, SpinDelta d) {
    Report rep;
    rep.suite = "derivative-translation-decomposition";
    rep.q_exponent_s = q.exponent();
    rep.q_exponent_M = q.ring().M;
    LaurentWindow win(-4 * std::abs(n) - 12, 4 * std::abs(n) + 12);

    std::map<std::string, long long> P{{"n", n}, {"delta2", d.delta2}};

    // L_n = -T_n^(0) + q^{n+2Delta} T_n^(2) exactly at the term level.
    WindowOp plus_rhs =
        cplx(-1.0, 0.0) * make_That(q, n, 0, d) + make_That(q, n, 2, d).mul_qpow(n + d.delta2);
    rep.add(exact_check("plus-decomposition", make_Lhat(q, n, +1) == plus_rhs, P));

    // L_n^- = T_n^(0) - q^{-n-2Delta} T_n^(-2).
    WindowOp minus_rhs =
        make_That(q, n, 0, d) - make_That(q, n, -2, d).mul_qpow(-n - d.delta2);
    rep.add(exact_check("minus-decomposition", make_Lhat(q, n, -1) == minus_rhs, P));

    // Closure of the derivative realization and its action on translations.
    for (int m = -2; m <= 2; ++m) {
        std::map<std::string, long long> Pm = P;
        Pm["m"] = m;
        WindowOp ln = make_Lhat(q, n, +1);
        WindowOp lm = make_Lhat(q, m, +1);
        CheckResult c;
        c.name = "closure";
        c.params = Pm;
        c.residual = window_residual(window_defbr4(ln, lm, 4LL * (m - n)),
                                     q_bracket_half(2LL * (n - m), q) * make_Lhat(q, n + m, +1),
                                     win);
        c.pass = c.residual < 1e-12;
        rep.add(c);

        for (int k = -2; k <= 2; k += 2) {
            std::map<std::string, long long> Pk = Pm;
            Pk["k"] = k;
            WindowOp Tm = make_That(q, m, k, d);
            CheckResult a;
            a.name = "translation-action";
            a.params = Pk;
            a.residual = window_residual(
                window_defbr4(ln, Tm, 4LL * m - 2LL * n * k),
                cplx(-q_bracket_half(2LL * m, q), 0.0) * make_That(q, n + m, k, d), win);
            a.pass = a.residual < 1e-12;
            rep.add(a);
        }
    }
    return rep;
}

} // namespace czlattice
