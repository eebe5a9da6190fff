#include "czlattice/qplane.hpp"

namespace czlattice {

namespace {

CheckResult exact_check(std::string name, bool ok, std::map<std::string, long long> params = {}) {
    CheckResult c;
    c.name = std::move(name);
    c.params = std::move(params);
    c.exact = true;
    c.pass = ok;
    c.residual = ok ? 0.0 : 1.0;
    return c;
}

} // namespace

Report dmt_composite_check(int N, const PhaseExponent& q) {
    Report rep;
    rep.suite = "quantum-line-composites";
    rep.N = N;
    rep.q_exponent_s = q.exponent();
    rep.q_exponent_M = q.ring().M;

    const PhaseRing& ring = q.ring();
    PhaseExponent i_unit = imaginary_unit(ring);
    MonomialMatrix X = make_X(N, ring);
    MonomialMatrix Y = make_Y(N, q);
    MonomialMatrix Xt = make_Xtilde(N, q);

    // The four hopping operators as clock/shift words.
    MonomialMatrix Tx = (X * Y) * i_unit.inverse();
    MonomialMatrix Ty = (Y.inverse() * X) * i_unit.inverse();
    MonomialMatrix TxD = Tx.dagger();
    MonomialMatrix TyD = Ty.dagger();

    rep.add(exact_check("dagger-x", TxD == (Y.inverse() * X.inverse()) * i_unit));
    rep.add(exact_check("dagger-y", TyD == (X.inverse() * Y) * i_unit));

    // Exchange, fusion normalization and plaquette circulation.
    rep.add(exact_check("exchange", Tx * Ty == (Ty * Tx) * q.pow(2)));
    rep.add(exact_check("circulation",
                        TyD * TxD * Ty * Tx ==
                            MonomialMatrix::identity(N, ring) * q.pow(-2)));
    rep.add(exact_check("unitarity", Tx * TxD == MonomialMatrix::identity(N, ring) &&
                                         Ty * TyD == MonomialMatrix::identity(N, ring)));

    // Composite moves collapse onto the two quantum lines.
    MonomialMatrix Y2 = Y.pow(2);
    MonomialMatrix Xm2 = Xt.pow(-2);
    rep.add(exact_check("y-line-up", TyD * Tx == Y2 * q));
    rep.add(exact_check("y-line-down", Tx * TyD == Y2 * q.inverse()));
    rep.add(exact_check("x-line-up", TxD * TyD == Xm2 * q));
    rep.add(exact_check("x-line-down", TyD * TxD == Xm2 * q.inverse()));

    // Move bookkeeping against the monomial product, both lines.
    struct Seq {
        QuantumLine line;
        std::vector<LineMove> moves;
    };
    std::vector<Seq> seqs = {
        {QuantumLine::Yline, {{QuantumLine::Yline, 1, 0, +1}, {QuantumLine::Yline, 0, 1, +1}}},
        {QuantumLine::Yline, {{QuantumLine::Yline, 2, 1, +1}, {QuantumLine::Yline, 0, 2, -1}}},
        {QuantumLine::Xline, {{QuantumLine::Xline, 1, 0, +1}, {QuantumLine::Xline, 1, 2, +1}}},
        {QuantumLine::Xline, {{QuantumLine::Xline, 0, 1, -1}, {QuantumLine::Xline, 2, 0, +1}}},
    };
    int idx = 0;
    for (const auto& s : seqs) {
        OrderedProduct p = star_ordered_compose(s.moves);
        MonomialMatrix base = (s.line == QuantumLine::Yline) ? Y2 : Xm2;
        MonomialMatrix expect = base.pow((int)p.power) * q.pow(p.phase_q);
        MonomialMatrix got = MonomialMatrix::identity(N, ring);
        for (const auto& m : s.moves) {
            // One detour pair = one composite factor on the matching line.
            MonomialMatrix up = (s.line == QuantumLine::Yline) ? TyD * Tx : TxD * TyD;
            MonomialMatrix down = (s.line == QuantumLine::Yline) ? Tx * TyD : TyD * TxD;
            MonomialMatrix fup = (m.line == s.line && m.direction > 0) ? up : up.inverse();
            MonomialMatrix fdown = (m.direction > 0) ? down : down.inverse();
            int nup = (s.line == QuantumLine::Yline) ? m.neg_fluct : m.pos_fluct;
            int ndown = (s.line == QuantumLine::Yline) ? m.pos_fluct : m.neg_fluct;
            for (int t = 0; t < nup; ++t) got = got * fup;
            for (int t = 0; t < ndown; ++t) got = got * fdown;
        }
        rep.add(exact_check("ordered-compose", got == expect, {{"seq", idx++}}));
    }

    // The induced commutative families close as the two one-sign algebras
    // under the graded star bracket.
    if (!q.is_real()) {
        cplx inv = 1.0 / (q.value() - q.inverse().value());
        auto Lplus = [&](int n) {
            GradedOp op;
            op.mat = cplx(-1.0, 0.0) * inv * Y.pow(2 * n).dense();
            op.mode = n;
            op.weight2 = 4;
            return op;
        };
        auto Lminus = [&](int n) {
            GradedOp op;
            op.mat = inv * Xt.pow(-2 * n).dense();
            op.mode = n;
            op.weight2 = -4;
            return op;
        };
        for (int n = -2; n <= 2; ++n)
            for (int m = -2; m <= 2; ++m) {
                std::map<std::string, long long> P{{"n", n}, {"m", m}};
                CMatrix lp = star_bracket(Lplus(n), Lplus(m), q);
                CMatrix rp = q_bracket(n - m, q) * Lplus(n + m).mat;
                CheckResult cp;
                cp.name = "y-line-closure";
                cp.params = P;
                cp.residual = CMatrix::rel_residual(lp, rp);
                cp.pass = cp.residual < 1e-13;
                rep.add(cp);

                CMatrix lm = star_bracket(Lminus(n), Lminus(m), q);
                CMatrix rm = q_bracket(n - m, q) * Lminus(n + m).mat;
                CheckResult cm;
                cm.name = "x-line-closure";
                cm.params = P;
                cm.residual = CMatrix::rel_residual(lm, rm);
                cm.pass = cm.residual < 1e-13;
                rep.add(cm);
            }
    }
    return rep;
}

} // namespace czlattice
