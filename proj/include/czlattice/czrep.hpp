#pragma once

#include <string>

#include "czlattice/monomial.hpp"

namespace czlattice {

/**
 * Dense operator tagged with the (mode, weight) metadata that drives the
 * star-bracket.  Weights are stored doubled (weight2 = 2k), so the canonical
 * weights k = -2, 0, +2 are weight2 = -4, 0, +4 and half-integer weights
 * stay exact.
 */
struct GradedOp {
    CMatrix mat;
    int mode = 0;
    int weight2 = 0;
    std::string label;
};

/// Star exponent x = (n_A k_B - n_B k_A)/2, returned in quartered units
/// (x4 = 4x) so q^x is evaluated exactly via pow_frac(x4, 4).
inline long long star_exponent4(const GradedOp& A, const GradedOp& B) {
    return (long long)A.mode * B.weight2 - (long long)B.mode * A.weight2;
}

/// A*B = q^{-x} A B.
inline CMatrix star_mul(const GradedOp& A, const GradedOp& B, const PhaseExponent& q) {
    cplx s = q.pow_frac(-star_exponent4(A, B), 4).value();
    return s * (A.mat * B.mat);
}

/// [A,B]_* = A*B - B*A = q^{-x} A B - q^{+x} B A.
inline CMatrix star_bracket(const GradedOp& A, const GradedOp& B, const PhaseExponent& q) {
    return star_mul(A, B, q) - star_mul(B, A, q);
}

/// Size-N representation workspace: the Weyl pair and its aliases over one ring.
struct RepContext {
    int N;
    PhaseExponent q;

    RepContext(int N_, const PhaseExponent& q_) : N(N_), q(q_) {
        if (N < 3) throw SizeTooSmall("matrix representations need N >= 3");
    }

    MonomialMatrix X() const { return make_X(N, q.ring()); }
    MonomialMatrix Y() const { return make_Y(N, q); }
    MonomialMatrix H() const { return make_H(N, q.ring()); }
    MonomialMatrix Qm() const { return make_Q(N, q); }

    cplx inv_qq() const {
        if (q.is_real()) throw DegenerateQ("q - q^-1 = 0 in representation context");
        return 1.0 / (q.value() - q.inverse().value());
    }
};

/// Parameters of the general two-parameter cyclic representation:
/// L_n^+- = -+((1 - Q^{+-2})/(q - q^-1) + A_n^+- Q^{+-2}) H^n with
/// A_n^+- = a_+- + b (q^{+-2n} - 1).
struct CZParams {
    cplx a_plus{0.0, 0.0};
    cplx a_minus{0.0, 0.0};
    cplx b{0.0, 0.0};
};

inline GradedOp make_L_general(const RepContext& ctx, int n, int sign, const CZParams& p) {
    cplx inv = ctx.inv_qq();
    cplx a = sign > 0 ? p.a_plus : p.a_minus;
    cplx An = a + p.b * (ctx.q.pow(2LL * sign * n).value() - 1.0);
    CMatrix Q2 = ctx.Qm().pow(2 * sign).dense();
    CMatrix I = CMatrix::identity(ctx.N);
    CMatrix Hn = ctx.H().pow(n).dense();
    CMatrix core = inv * (I - Q2) + An * Q2;
    GradedOp op;
    op.mat = cplx(sign > 0 ? -1.0 : 1.0, 0.0) * (core * Hn);
    op.mode = n;
    op.weight2 = 4 * sign;
    op.label = std::string("L") + (sign > 0 ? "+" : "-") + "{" + std::to_string(n) + "}";
    return op;
}

/// Mode-graded rephasing H^n (.) H^{-n}; leaves the one-sign algebras
/// untouched but fixes the cross-sign mixing phases.
inline GradedOp transform_HLH(const RepContext& ctx, const GradedOp& op) {
    GradedOp r = op;
    CMatrix Hn = ctx.H().pow(op.mode).dense();
    CMatrix Hmn = ctx.H().pow(-op.mode).dense();
    r.mat = Hn * (op.mat * Hmn);
    return r;
}

/// Scalar rescaling that preserves the grading (used for the primed family
/// L'_n^- = q^n L_n^-).
inline GradedOp rescale(const GradedOp& op, cplx s, const std::string& label = "") {
    GradedOp r = op;
    r.mat = s * op.mat;
    if (!label.empty()) r.label = label;
    return r;
}

enum class RepKind {
    CZHQ2, ///< -+ X^-n (1 -+ i Y^{+-2})/(q - q^-1)
    CZHZ,  ///< X^-n Y^{+-1} [Z]
    CZHQk, ///< family member k: -+ X^-n (1 -+ i Y_k^{+-1})/(q_k - q_k^-1), Y_k = Y^k
    CZHQ1, ///< half-parameter member: Y_1^2 = Y, q_1 = q^{1/2}; needs q_1^N = 1
};

/**
 * Diagonal clock matrix of the family member k: Y_k = diag(q_k, ..., q_k^N)
 * with q_k = q^k.  q_k must be N-periodic for the Weyl exchange with the
 * shift to hold across the wrap-around, which q^k always is.
 */
inline MonomialMatrix family_Y(const RepContext& ctx, int k) {
    return make_Y(ctx.N, ctx.q.pow(k));
}

inline PhaseExponent family_q(const RepContext& ctx, int k) { return ctx.q.pow(k); }

/**
 * Deformation parameter of the family member's own algebra.
 *
 * The member k is the k = 2 pattern run with clock matrix Y_k, whose hop
 * phase against X is q_k; a generator -X^-n (1 - i W)/(p - p^-1) with
 * W X = w X W closes as a CZ algebra precisely for p^2 = w.  Hence
 * p_k = q_k^{1/2}, and the member's star bracket and q-brackets use p_k.
 * (For k = 2 this is just q.)
 */
inline PhaseExponent family_p(const RepContext& ctx, int k) {
    return family_q(ctx, k).pow_frac(1, 2);
}

/// [Z] = (Y - Y^-1)/(q - q^-1): diagonal with entries [1], ..., [N].
inline CMatrix make_bracket_Z(const RepContext& ctx) {
    cplx inv = ctx.inv_qq();
    MonomialMatrix Y = ctx.Y();
    return inv * (Y.dense() - Y.inverse().dense());
}

/**
 * Named matrix representations of the two sign families.
 *
 * For RepKind::CZHQk/CZHQ1 the generator is normalized by p_k - p_k^{-1}
 * (see family_p); brackets for those reps must use family_p as deformation
 * parameter.
 */
inline GradedOp make_rep(const RepContext& ctx, RepKind kind, int n, int sign, int k = 2) {
    GradedOp op;
    op.mode = n;
    op.weight2 = 4 * sign;
    CMatrix Xn = ctx.X().pow(-n).dense();
    CMatrix I = CMatrix::identity(ctx.N);
    switch (kind) {
        case RepKind::CZHQ2: {
            cplx inv = ctx.inv_qq();
            cplx i_unit = imaginary_unit(ctx.q.ring()).value();
            CMatrix Y2 = ctx.Y().pow(2 * sign).dense();
            cplx s = sign > 0 ? -1.0 : 1.0;
            CMatrix core = I - (cplx(double(sign), 0.0) * i_unit) * Y2;
            op.mat = (s * inv) * (Xn * core);
            op.label = std::string("CZHQ2") + (sign > 0 ? "+" : "-");
            break;
        }
        case RepKind::CZHZ: {
            CMatrix Ypm = ctx.Y().pow(sign).dense();
            op.mat = Xn * (Ypm * make_bracket_Z(ctx));
            op.label = std::string("CZHZ") + (sign > 0 ? "+" : "-");
            break;
        }
        case RepKind::CZHQ1: {
            // Exceptional half-parameter member: clock parameter q1 = q^{1/2}
            // with Y1^2 = Y.  The Weyl exchange across the wrap-around needs
            // q1^N = 1, i.e. an even-size context whose q has order N/2
            // (e.g. N = 2Q with q = e^{2*pi*i*P/Q}).
            PhaseExponent q1 = ctx.q.pow_frac(1, 2);
            if (!q1.pow(ctx.N).is_one())
                throw PhaseNotRepresentable(
                    "CZHQ1 clock parameter q^{1/2} is not N-periodic for this context");
            if (q1.is_real()) throw DegenerateQ("CZHQ1 parameter q^{1/2} is real");
            // normalized, like every family member, by its own deformation
            // parameter p = q1^{1/2}
            PhaseExponent p1 = q1.pow_frac(1, 2);
            if (p1.is_real()) throw DegenerateQ("CZHQ1 deformation parameter is real");
            cplx inv1 = 1.0 / (p1.value() - p1.inverse().value());
            CMatrix Y1 = make_Y(ctx.N, q1).pow(sign).dense();
            cplx s = sign > 0 ? -1.0 : 1.0;
            cplx i_unit = imaginary_unit(ctx.q.ring()).value();
            CMatrix core = I - (cplx(double(sign), 0.0) * i_unit) * Y1;
            op.mat = (s * inv1) * (Xn * core);
            op.label = std::string("CZHQ1") + (sign > 0 ? "+" : "-");
            break;
        }
        case RepKind::CZHQk: {
            PhaseExponent p = family_p(ctx, k);
            if (p.is_real()) throw DegenerateQ("family parameter p_k is real");
            cplx invp = 1.0 / (p.value() - p.inverse().value());
            cplx i_unit = imaginary_unit(ctx.q.ring()).value();
            CMatrix Yk = family_Y(ctx, k).pow(sign).dense();
            cplx s = sign > 0 ? -1.0 : 1.0;
            CMatrix core = I - (cplx(double(sign), 0.0) * i_unit) * Yk;
            op.mat = (s * invp) * (Xn * core);
            op.label = "CZHQ[" + std::to_string(k) + "]" + (sign > 0 ? "+" : "-");
            break;
        }
    }
    op.label += "{" + std::to_string(n) + "}";
    return op;
}

enum class TrivialKind { powH, quadQ, powY };

/**
 * Commutative representations L'_n^+- = -+ g_n/(q - q^-1) with
 * g_n g_m = g_{n+m}: g_n = c^n H^n, or q^{c n^2} Q^{2cn} H^n (integer c),
 * or c^n Y^n.
 */
inline GradedOp make_trivial(const RepContext& ctx, TrivialKind kind, int n, int sign,
                             const PhaseExponent& c_phase, int c_int = 1) {
    cplx inv = ctx.inv_qq();
    MonomialMatrix g = MonomialMatrix::identity(ctx.N, ctx.q.ring());
    switch (kind) {
        case TrivialKind::powH:
            g = ctx.H().pow(n) * c_phase.pow(n);
            break;
        case TrivialKind::quadQ:
            g = (ctx.Qm().pow(2 * c_int * n) * ctx.H().pow(n)) *
                ctx.q.pow((long long)c_int * n * n);
            break;
        case TrivialKind::powY:
            g = ctx.Y().pow(n) * c_phase.pow(n);
            break;
    }
    GradedOp op;
    op.mat = (cplx(sign > 0 ? -1.0 : 1.0, 0.0) * inv) * g.dense();
    op.mode = n;
    op.weight2 = 4 * sign;
    op.label = std::string("Ltriv") + (sign > 0 ? "+" : "-") + "{" + std::to_string(n) + "}";
    return op;
}

/**
 * Weight-graded translation substitution:
 * T_n^{(k)} = q^{n + k - kn/2} H^n Q^{k}/(q - q^-1) for k in {0, +-2}.
 * The q^{-kn/2} factor symmetrizes the H/Q ordering so all weight channels
 * close with the same bracket rule [x + (nl - mk)/2].
 */
inline GradedOp make_T_substitution(const RepContext& ctx, int n, int k) {
    if (k != 0 && k != 2 && k != -2)
        throw Error("make_T_substitution: weight must be 0 or +-2");
    cplx inv = ctx.inv_qq();
    GradedOp op;
    op.mode = n;
    op.weight2 = 2 * k;
    if (k == 0) {
        op.mat = (ctx.q.pow(n).value() * inv) * ctx.H().pow(n).dense();
    } else {
        int s = k > 0 ? 1 : -1;
        long long e = (long long)n + 2LL * s - (long long)s * n;
        op.mat = (ctx.q.pow(e).value() * inv) * (ctx.H().pow(n) * ctx.Qm().pow(2 * s)).dense();
    }
    op.label = "T{" + std::to_string(n) + "," + std::to_string(k) + "}";
    return op;
}

/// Central element S_0^+- = 1 +- (q - q^-1) L_0^+-, carrying weight +-2.
inline GradedOp make_S0(const RepContext& ctx, int sign, const GradedOp& L0) {
    if (L0.mode != 0) throw Error("make_S0 expects a mode-0 generator");
    cplx d = ctx.q.value() - ctx.q.inverse().value();
    GradedOp op;
    op.mat = CMatrix::identity(ctx.N) + (cplx(double(sign), 0.0) * d) * L0.mat;
    op.mode = 0;
    op.weight2 = 4 * sign;
    op.label = std::string("S0") + (sign > 0 ? "+" : "-");
    return op;
}

/// k-th power of S_0^eps, weight 2*eps*k by stipulation.
inline GradedOp s0_power(const GradedOp& s0, int k) {
    GradedOp op;
    op.mat = CMatrix::identity(s0.mat.size());
    for (int i = 0; i < k; ++i) op.mat = op.mat * s0.mat;
    op.mode = 0;
    op.weight2 = s0.weight2 * k;
    op.label = s0.label + "^" + std::to_string(k);
    return op;
}

} // namespace czlattice
