#include "czlattice/relcheck.hpp"

#include "czlattice/lattice.hpp"
#include "czlattice/qplane.hpp"

namespace czlattice {

namespace {

long long as_int(const Frac& f, const char* what) {
    if (!f.is_integer()) throw EvaluationError(std::string(what) + ": integer argument required");
    return f.num;
}

CZParams default_params(const PhaseExponent& q, double b) {
    cplx i_unit(0.0, 1.0);
    cplx d = q.value() - q.inverse().value();
    CZParams p;
    p.a_plus = (1.0 - i_unit * q.pow(2).value()) / d;
    p.a_minus = (1.0 + i_unit * q.pow(-2).value()) / d;
    p.b = b;
    return p;
}

// General cyclic representation, optionally mode-rephased.
Registry general_registry(const SuiteConfig& cfg, bool transformed) {
    int N = cfg.N.value_or(7);
    WeylRing wr(N);
    RepContext ctx(N, wr.q());
    CZParams params = default_params(ctx.q, cfg.b);
    Registry reg{ctx.q, {}, LaurentWindow(-8, 12)};
    reg.ops["Lp"] = [ctx, params, transformed](const std::vector<Frac>& a) {
        GradedOp g = make_L_general(ctx, (int)as_int(a.at(0), "Lp"), +1, params);
        return eval_matrix(transformed ? transform_HLH(ctx, g) : g);
    };
    reg.ops["Lm"] = [ctx, params, transformed](const std::vector<Frac>& a) {
        GradedOp g = make_L_general(ctx, (int)as_int(a.at(0), "Lm"), -1, params);
        return eval_matrix(transformed ? transform_HLH(ctx, g) : g);
    };
    reg.ops["T"] = [ctx](const std::vector<Frac>& a) {
        return eval_matrix(make_T_substitution(ctx, (int)as_int(a.at(0), "T"),
                                               (int)as_int(a.at(1), "T")));
    };
    return reg;
}

Registry center_registry(const SuiteConfig& cfg) {
    Registry reg = general_registry(cfg, true);
    int N = cfg.N.value_or(7);
    WeylRing wr(N);
    RepContext ctx(N, wr.q());
    CZParams params = default_params(ctx.q, cfg.b);
    GradedOp s0p = make_S0(ctx, +1, make_L_general(ctx, 0, +1, params));
    GradedOp s0m = make_S0(ctx, -1, make_L_general(ctx, 0, -1, params));
    reg.ops["S0p"] = [s0p](const std::vector<Frac>& a) {
        return eval_matrix(s0_power(s0p, (int)as_int(a.at(0), "S0p")));
    };
    reg.ops["S0m"] = [s0m](const std::vector<Frac>& a) {
        return eval_matrix(s0_power(s0m, (int)as_int(a.at(0), "S0m")));
    };
    return reg;
}

// Named representation registries; for the clock family the registry q is the
// member's own deformation parameter.
Registry rep_registry(const SuiteConfig& cfg, RepKind kind) {
    int N = cfg.N.value_or(7);
    WeylRing wr(N);
    RepContext ctx(N, wr.q());
    int k = (kind == RepKind::CZHQ1) ? 1 : cfg.k;
    PhaseExponent q = (kind == RepKind::CZHQk || kind == RepKind::CZHQ1)
                          ? family_p(ctx, k)
                          : ctx.q;
    Registry reg{q, {}, LaurentWindow(-8, 12)};
    reg.ops["Lp"] = [ctx, kind, k](const std::vector<Frac>& a) {
        return eval_matrix(make_rep(ctx, kind, (int)as_int(a.at(0), "Lp"), +1, k));
    };
    reg.ops["Lm"] = [ctx, kind, k](const std::vector<Frac>& a) {
        return eval_matrix(make_rep(ctx, kind, (int)as_int(a.at(0), "Lm"), -1, k));
    };
    return reg;
}

// Laurent-window (q-derivative / magnetic-translation) realization.
Registry window_registry(const SuiteConfig& cfg) {
    int N = cfg.N.value_or(7);
    WeylRing wr(N);
    PhaseExponent q = wr.q();
    SpinDelta d{cfg.delta2};
    cplx inv = inv_qq(q);
    Registry reg{q, {}, LaurentWindow(-14, 18)};
    reg.ops["T"] = [q, d](const std::vector<Frac>& a) {
        int n = (int)as_int(a.at(0), "T");
        int k = (int)as_int(a.at(1), "T");
        return eval_window(make_That(q, n, k, d), n, 2 * k);
    };
    reg.ops["tau"] = [q, d](const std::vector<Frac>& a) {
        int n = (int)as_int(a.at(0), "tau");
        int k = (int)as_int(a.at(1), "tau");
        return eval_window(make_tau(q, n, k, d), n, 2 * k);
    };
    reg.ops["L"] = [q](const std::vector<Frac>& a) {
        int n = (int)as_int(a.at(0), "L");
        return eval_window(make_Lhat(q, n, +1), n, 4);
    };
    reg.ops["Lm"] = [q](const std::vector<Frac>& a) {
        int n = (int)as_int(a.at(0), "Lm");
        return eval_window(make_Lhat(q, n, -1), n, -4);
    };
    reg.ops["a"] = [q](const std::vector<Frac>&) { return eval_window(osc_lower(q), -1, 0); };
    reg.ops["ad"] = [q](const std::vector<Frac>& a) {
        int k = (int)as_int(a.at(0), "ad");
        if (k < 0) throw EvaluationError("ad: nonnegative power required");
        WindowOp w = WindowOp::identity(q);
        for (int i = 0; i < k; ++i) w = w * osc_raise(q);
        return eval_window(w, k, 0);
    };
    reg.ops["qN"] = [q](const std::vector<Frac>& a) {
        return eval_window(q_pow_number(q, (int)as_int(a.at(0), "qN")), 0, 0);
    };
    reg.ops["Nbr"] = [q, inv](const std::vector<Frac>&) {
        return eval_window(inv * (q_pow_number(q, 1) - q_pow_number(q, -1)), 0, 0);
    };
    return reg;
}

// Commutative (one-line) representations.
Registry trivial_registry(const SuiteConfig& cfg) {
    int N = cfg.N.value_or(7);
    WeylRing wr(N);
    RepContext ctx(N, wr.q());
    PhaseExponent one = one_phase(wr.ring);
    Registry reg{ctx.q, {}, LaurentWindow(-8, 12)};
    reg.ops["Ly"] = [ctx, one](const std::vector<Frac>& a) {
        return eval_matrix(
            make_trivial(ctx, TrivialKind::powY, (int)as_int(a.at(0), "Ly"), +1, one));
    };
    reg.ops["Lh"] = [ctx, one](const std::vector<Frac>& a) {
        return eval_matrix(
            make_trivial(ctx, TrivialKind::powH, (int)as_int(a.at(0), "Lh"), +1, one));
    };
    return reg;
}

// Factored-clock representation with the primed minus family L'_n^- = q^n L_n^-.
Registry primed_registry(const SuiteConfig& cfg) {
    FluxRatio flux = cfg.flux.value_or(FluxRatio(1, 3));
    FluxRing fr(flux);
    PhaseExponent q = fr.unit().inverse();
    RepContext ctx(2 * flux.Q, q);
    Registry reg{q, {}, LaurentWindow(-8, 12)};
    reg.ops["Lp"] = [ctx](const std::vector<Frac>& a) {
        return eval_matrix(make_rep(ctx, RepKind::CZHZ, (int)as_int(a.at(0), "Lp"), +1));
    };
    reg.ops["Lpm"] = [ctx](const std::vector<Frac>& a) {
        int n = (int)as_int(a.at(0), "Lpm");
        GradedOp g = make_rep(ctx, RepKind::CZHZ, n, -1);
        return eval_matrix(rescale(g, ctx.q.pow(n).value()));
    };
    return reg;
}

Registry uqsl2_registry(const SuiteConfig& cfg, UqKind kind) {
    FluxRatio flux = cfg.flux.value_or(FluxRatio(1, 3));
    UqTriple t = make_uqsl2(kind, flux);
    int N = t.K.size();
    CMatrix Ki(N);
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c)
            if (t.K(r, c) != cplx(0.0, 0.0)) Ki(c, r) = 1.0 / t.K(r, c);
    Registry reg{t.q, {}, LaurentWindow(-8, 12)};
    auto mat = [](CMatrix m) {
        GradedOp g;
        g.mat = std::move(m);
        return eval_matrix(g);
    };
    reg.ops["Ep"] = [t, mat](const std::vector<Frac>&) { return mat(t.Eplus); };
    reg.ops["Em"] = [t, mat](const std::vector<Frac>&) { return mat(t.Eminus); };
    reg.ops["K"] = [t, Ki, mat](const std::vector<Frac>& a) {
        long long s = as_int(a.at(0), "K");
        if (s == 1) return mat(t.K);
        if (s == -1) return mat(Ki);
        throw EvaluationError("K: power must be +-1");
    };
    return reg;
}

Registry dmt_registry(const SuiteConfig& cfg) {
    int N = cfg.N.value_or(7);
    WeylRing wr(N);
    PhaseExponent q = wr.q();
    PhaseExponent iu = imaginary_unit(wr.ring);
    MonomialMatrix X = make_X(N, wr.ring);
    MonomialMatrix Y = make_Y(N, q);
    MonomialMatrix Xt = make_Xtilde(N, q);
    MonomialMatrix Tx = (X * Y) * iu.inverse();
    MonomialMatrix Ty = (Y.inverse() * X) * iu.inverse();
    Registry reg{q, {}, LaurentWindow(-8, 12)};
    auto put = [&reg](const std::string& name, MonomialMatrix m) {
        reg.ops[name] = [m](const std::vector<Frac>&) {
            GradedOp g;
            g.mat = m.dense();
            return eval_matrix(g);
        };
    };
    put("Tx", Tx);
    put("Ty", Ty);
    put("Txd", Tx.dagger());
    put("Tyd", Ty.dagger());
    reg.ops["Y2"] = [Y](const std::vector<Frac>& a) {
        GradedOp g;
        g.mat = Y.pow(2 * (int)as_int(a.at(0), "Y2")).dense();
        return eval_matrix(g);
    };
    reg.ops["Xm2"] = [Xt](const std::vector<Frac>& a) {
        GradedOp g;
        g.mat = Xt.pow(-2 * (int)as_int(a.at(0), "Xm2")).dense();
        return eval_matrix(g);
    };
    return reg;
}

const char* kClosureStarText = R"(
# one-sign closures
[Lp{n},Lp{m}]_(m-n) == qb(n-m)*Lp{n+m} for n in -3..3, m in -3..3
[Lm{n},Lm{m}]_(n-m) == qb(n-m)*Lm{n+m} for n in -3..3, m in -3..3
# compact graded form, all sign pairs
[Lp{n},Lp{m}]_* == q^(m)*qb(n)*Lp{n+m} - q^(n)*qb(m)*Lp{n+m} for n in -3..3, m in -3..3
[Lp{n},Lm{m}]_* == q^(-m)*qb(n)*Lp{n+m} - q^(n)*qb(m)*Lm{n+m} for n in -3..3, m in -3..3
[Lm{n},Lp{m}]_* == q^(m)*qb(n)*Lm{n+m} - q^(-n)*qb(m)*Lp{n+m} for n in -3..3, m in -3..3
[Lm{n},Lm{m}]_* == q^(-m)*qb(n)*Lm{n+m} - q^(-n)*qb(m)*Lm{n+m} for n in -3..3, m in -3..3
)";

const char* kClosureStarMutated = R"(
[Lp{n},Lp{m}]_(m-n) == qb(n-m+1)*Lp{n+m} for n in -3..3, m in -3..3
[Lm{n},Lm{m}]_(n-m) == qb(n-m)*Lm{n+m} for n in -3..3, m in -3..3
[Lp{n},Lp{m}]_* == q^(m)*qb(n)*Lp{n+m} - q^(n)*qb(m)*Lp{n+m} for n in -3..3, m in -3..3
[Lp{n},Lm{m}]_* == q^(m)*qb(n)*Lp{n+m} - q^(n)*qb(m)*Lm{n+m} for n in -3..3, m in -3..3
[Lm{n},Lp{m}]_* == q^(m)*qb(n)*Lm{n+m} - q^(-n)*qb(m)*Lp{n+m} for n in -3..3, m in -3..3
[Lm{n},Lm{m}]_* == q^(-m)*qb(n)*Lm{n+m} - q^(-n)*qb(m)*Lm{n+m} for n in -3..3, m in -3..3
)";

std::vector<SuiteDef> make_suites() {
    std::vector<SuiteDef> v;
    auto add = [&v](std::string name, std::string desc, std::string text, std::string mutated,
                    double tol, std::function<Registry(const SuiteConfig&)> mk) {
        SuiteDef d;
        d.name = std::move(name);
        d.description = std::move(desc);
        d.text = std::move(text);
        d.mutated_text = std::move(mutated);
        d.tol = tol;
        d.make_registry = std::move(mk);
        v.push_back(std::move(d));
    };

    add("cyclic-plus-closure",
        "one-sign closure of the cyclic representation, any parameter choice",
        "[Lp{n},Lp{m}]_(m-n) == qb(n-m)*Lp{n+m} for n in -3..3, m in -3..3",
        "[Lp{n},Lp{m}]_(m-n) == qb(n-m+1)*Lp{n+m} for n in -3..3, m in -3..3", 1e-12,
        [](const SuiteConfig& c) { return general_registry(c, false); });

    add("cyclic-minus-closure",
        "minus-sign closure of the cyclic representation, any parameter choice",
        "[Lm{n},Lm{m}]_(n-m) == qb(n-m)*Lm{n+m} for n in -3..3, m in -3..3",
        "[Lm{n},Lm{m}]_(m-n) == qb(n-m)*Lm{n+m} for n in -3..3, m in -3..3", 1e-12,
        [](const SuiteConfig& c) { return general_registry(c, false); });

    add("cross-sign-mixing", "mixing algebra after the mode rephasing",
        "[Lp{n},Lm{m}]_(n+m) == q^(-m)*qb(n)*Lp{n+m} - q^(n)*qb(m)*Lm{n+m} for n in -3..3, m in -3..3",
        "[Lp{n},Lm{m}]_(n+m) == q^(m)*qb(n)*Lp{n+m} - q^(n)*qb(m)*Lm{n+m} for n in -3..3, m in -3..3",
        1e-12, [](const SuiteConfig& c) { return general_registry(c, true); });

    add("pre-transform-mixing", "mixing algebra of the untransformed representation",
        "[Lp{n},Lm{m}]_(n+m) == q^(m)*qb(n)*Lp{n+m} - q^(-n)*qb(m)*Lm{n+m} for n in -3..3, m in -3..3",
        "[Lp{n},Lm{m}]_(n+m) == q^(-m)*qb(n)*Lp{n+m} - q^(-n)*qb(m)*Lm{n+m} for n in -3..3, m in -3..3",
        1e-12, [](const SuiteConfig& c) { return general_registry(c, false); });

    add("graded-star-compact", "compact graded-bracket form of all four sign pairs",
        R"([Lp{n},Lp{m}]_* == q^(m)*qb(n)*Lp{n+m} - q^(n)*qb(m)*Lp{n+m} for n in -3..3, m in -3..3
[Lp{n},Lm{m}]_* == q^(-m)*qb(n)*Lp{n+m} - q^(n)*qb(m)*Lm{n+m} for n in -3..3, m in -3..3
[Lm{n},Lp{m}]_* == q^(m)*qb(n)*Lm{n+m} - q^(-n)*qb(m)*Lp{n+m} for n in -3..3, m in -3..3
[Lm{n},Lm{m}]_* == q^(-m)*qb(n)*Lm{n+m} - q^(-n)*qb(m)*Lm{n+m} for n in -3..3, m in -3..3)",
        R"([Lp{n},Lp{m}]_* == q^(m+1)*qb(n)*Lp{n+m} - q^(n)*qb(m)*Lp{n+m} for n in -3..3, m in -3..3)",
        1e-12, [](const SuiteConfig& c) { return general_registry(c, true); });

    add("clock-square-rep", "closure and graded form of the squared-clock representation",
        kClosureStarText, kClosureStarMutated, 1e-12,
        [](const SuiteConfig& c) { return rep_registry(c, RepKind::CZHQ2); });

    add("factored-clock-rep", "closure and graded form of the factored-clock representation",
        kClosureStarText, kClosureStarMutated, 1e-12,
        [](const SuiteConfig& c) { return rep_registry(c, RepKind::CZHZ); });

    add("clock-family-rep",
        "closure and graded form of the clock-family member at its own parameter",
        kClosureStarText, kClosureStarMutated, 1e-12,
        [](const SuiteConfig& c) { return rep_registry(c, RepKind::CZHQk); });

    add("central-element-star", "central elements star-commute with every generator",
        R"([S0p{1},Lp{n}]_* == qb(0) for n in -3..3
[S0p{1},Lm{n}]_* == qb(0) for n in -3..3
[S0m{1},Lp{n}]_* == qb(0) for n in -3..3
[S0m{1},Lm{n}]_* == qb(0) for n in -3..3
[S0p{2},Lp{n}]_* == qb(0) for n in -3..3
[S0m{3},Lm{n}]_* == qb(0) for n in -3..3)",
        "[S0p{1},Lp{n}]_* == Lp{n} for n in -3..3", 1e-12, center_registry);

    add("weight-zero-table", "weight-0 translation subalgebra of the matrix substitution",
        "[T{n,0},T{m,0}]_(m-n) == qb(m-n)*T{n+m,0} for n in -3..3, m in -3..3",
        "[T{n,0},T{m,0}]_(m-n) == qb(m-n)*T{n+m,0} - qb(1)*T{n+m,0} for n in -3..3, m in -3..3",
        1e-12, [](const SuiteConfig& c) { return general_registry(c, true); });

    add("weight-two-table", "weight-2 translation subalgebra entries",
        R"([T{n,2},T{m,2}]_(m-n) == qb(0) for n in -3..3, m in -3..3
[T{n,2},T{m,0}]_(m-n) == qb(-n)*T{n+m,2} for n in -3..3, m in -3..3
[T{n,0},T{m,2}]_(m-n) == qb(m)*T{n+m,2} for n in -3..3, m in -3..3)",
        "[T{n,2},T{m,0}]_(m-n) == qb(n)*T{n+m,2} for n in -3..3, m in -3..3", 1e-12,
        [](const SuiteConfig& c) { return general_registry(c, true); });

    add("weight-minus-two-table", "weight -2 translation subalgebra entries",
        R"([T{n,-2},T{m,-2}]_(n-m) == qb(0) for n in -3..3, m in -3..3
[T{n,-2},T{m,0}]_(n-m) == qb(n)*T{n+m,-2} for n in -3..3, m in -3..3
[T{n,0},T{m,-2}]_(n-m) == qb(-m)*T{n+m,-2} for n in -3..3, m in -3..3)",
        "[T{n,-2},T{m,0}]_(n-m) == qb(-n)*T{n+m,-2} for n in -3..3, m in -3..3", 1e-12,
        [](const SuiteConfig& c) { return general_registry(c, true); });

    add("translation-star-commute", "translations commute under the graded bracket",
        R"([T{n,0},T{m,0}]_* == qb(0) for n in -3..3, m in -3..3
[T{n,0},T{m,2}]_* == qb(0) for n in -3..3, m in -3..3
[T{n,0},T{m,-2}]_* == qb(0) for n in -3..3, m in -3..3
[T{n,2},T{m,-2}]_* == qb(0) for n in -3..3, m in -3..3)",
        "[T{n,0},T{m,2}]_(0) == qb(0) for n in -3..3, m in -3..3", 1e-12,
        [](const SuiteConfig& c) { return general_registry(c, true); });

    add("weighted-jacobi", "weighted cyclic Jacobi identity of the deformed bracket",
        "(q^(n)+q^(-n))*[Lp{n},[Lp{m},Lp{l}]_(l-m)]_(m+l-n) + (q^(m)+q^(-m))*[Lp{m},[Lp{l},Lp{n}]_(n-l)]_(l+n-m) + (q^(l)+q^(-l))*[Lp{l},[Lp{n},Lp{m}]_(m-n)]_(n+m-l) == qb(0) for n in -2..2, m in -2..2, l in -2..2",
        "(q^(n)+q^(-n))*[Lp{n},[Lp{m},Lp{l}]_(l-m)]_(m+l-n) + (q^(m)+q^(-m+1))*[Lp{m},[Lp{l},Lp{n}]_(n-l)]_(l+n-m) + (q^(l)+q^(-l))*[Lp{l},[Lp{n},Lp{m}]_(m-n)]_(n+m-l) == qb(0) for n in -2..2, m in -2..2, l in -2..2",
        1e-11, [](const SuiteConfig& c) { return general_registry(c, true); });

    add("braid-associativity", "outer-shifted cyclic sum vanishes on its own",
        "[Lp{n},[Lp{m},Lp{l}]_(l-m)]_(m+l-2*n) + [Lp{m},[Lp{l},Lp{n}]_(n-l)]_(l+n-2*m) + [Lp{l},[Lp{n},Lp{m}]_(m-n)]_(n+m-2*l) == qb(0) for n in -2..2, m in -2..2, l in -2..2",
        "[Lp{n},[Lp{m},Lp{l}]_(l-m)]_(m+l-2*n) + [Lp{m},[Lp{l},Lp{n}]_(n-l)]_(l+n-2*m) + [Lp{l},[Lp{n},Lp{m}]_(m-n)]_(n+m-2*l+1) == qb(0) for n in -2..2, m in -2..2, l in -2..2",
        1e-11, [](const SuiteConfig& c) { return general_registry(c, true); });

    add("undeformed-consistency", "plain-weight cyclic sum vanishes on its own",
        "[Lp{n},[Lp{m},Lp{l}]_(l-m)]_(m+l) + [Lp{m},[Lp{l},Lp{n}]_(n-l)]_(l+n) + [Lp{l},[Lp{n},Lp{m}]_(m-n)]_(n+m) == qb(0) for n in -2..2, m in -2..2, l in -2..2",
        "[Lp{n},[Lp{m},Lp{l}]_(l-m)]_(m+l) + [Lp{m},[Lp{l},Lp{n}]_(n-l)]_(l+n) + q^(1)*[Lp{l},[Lp{n},Lp{m}]_(m-n)]_(n+m) == qb(0) for n in -2..2, m in -2..2, l in -2..2",
        1e-11, [](const SuiteConfig& c) { return general_registry(c, true); });

    add("derivative-closure", "closure of the q-derivative realization on the Laurent space",
        R"([L{n},L{m}]_(m-n) == qb(n-m)*L{n+m} for n in -3..3, m in -3..3
[Lm{n},Lm{m}]_(n-m) == qb(n-m)*Lm{n+m} for n in -3..3, m in -3..3)",
        "[L{n},L{m}]_(m-n) == qb(n-m)*L{n+m} - qb(2)*L{n+m} for n in -3..3, m in -3..3", 1e-12,
        window_registry);

    add("derivative-translation-action", "generators lower translations by a deformed integer",
        R"([L{n},T{m,k}]_(m-n*k/2) == qb(-m)*T{n+m,k} for n in -2..2, m in -2..2, k in -2..2
[Lm{n},T{m,k}]_(-m-n*k/2) == qb(-m)*T{n+m,k} for n in -2..2, m in -2..2, k in -2..2)",
        "[L{n},T{m,k}]_(m-n*k/2) == qb(m)*T{n+m,k} for n in -2..2, m in -2..2, k in -2..2",
        1e-12, window_registry);

    add("sine-commutator", "plain commutator closes with the half-index deformed integer",
        "[T{n,k},T{m,l}]_(0) == qb((n*l-m*k)/2)*T{n+m,k+l} for n in -2..2, m in -2..2, k in -2..2, l in -2..2",
        "[T{n,k},T{m,l}]_(0) == qb((n*l-m*k)/2+1)*T{n+m,k+l} for n in -2..2, m in -2..2, k in -2..2, l in -2..2",
        1e-12, window_registry);

    add("translation-exchange-fusion", "exchange and fusion rules of the translation units",
        R"(tau{n,k}*tau{m,l} == q^(n*l-m*k)*tau{m,l}*tau{n,k} for n in -2..2, m in -2..2, k in -2..2, l in -2..2
tau{n,k}*tau{m,l} == q^((n*l-m*k)/2)*tau{n+m,k+l} for n in -2..2, m in -2..2, k in -2..2, l in -2..2)",
        "tau{n,k}*tau{m,l} == q^(n*l-m*k+1)*tau{m,l}*tau{n,k} for n in -2..2, m in -2..2, k in -2..2, l in -2..2",
        1e-12, window_registry);

    add("translation-weight-table", "general weighted bracket tables of the translations",
        R"([T{n,k},T{m,l}]_(m-n) == qb((n*(l-2)-m*(k-2))/2)*T{n+m,k+l} for n in -2..2, m in -2..2, k in -2..2, l in -2..2
[T{n,k},T{m,l}]_(n-m) == qb((n*(l+2)-m*(k+2))/2)*T{n+m,k+l} for n in -2..2, m in -2..2, k in -2..2, l in -2..2)",
        "[T{n,k},T{m,l}]_(m-n) == qb((n*(l-2)-m*(k+2))/2)*T{n+m,k+l} for n in -2..2, m in -2..2, k in -2..2, l in -2..2",
        1e-12, window_registry);

    add("derivative-translation-split", "generators decompose into weight-0 and weight +-2 parts",
        R"(L{n} == q^(n)*T{n,2} - T{n,0} for n in -3..3
Lm{n} == T{n,0} - q^(-n)*T{n,-2} for n in -3..3)",
        "L{n} == q^(n+1)*T{n,2} - T{n,0} for n in -3..3", 1e-13,
        [](const SuiteConfig& c) {
            // The split phases above are written for zero spin offset.
            SuiteConfig c0 = c;
            c0.delta2 = 0;
            return window_registry(c0);
        });

    add("oscillator-form", "q-oscillator relations and the generator in oscillator form",
        R"(a{0}*ad{1} - q^(1)*ad{1}*a{0} == qN{-1}
ad{1}*a{0} == Nbr{0}
qN{-1}*ad{n+1}*a{0} == qb(0) - L{n} for n in -1..3)",
        "a{0}*ad{1} - q^(2)*ad{1}*a{0} == qN{-1}", 1e-13, window_registry);

    add("commutative-reps-star", "one-line commutative representations close under the graded bracket",
        R"([Ly{n},Ly{m}]_* == qb(n-m)*Ly{n+m} for n in -3..3, m in -3..3
[Lh{n},Lh{m}]_* == qb(n-m)*Lh{n+m} for n in -3..3, m in -3..3)",
        "[Ly{n},Ly{m}]_* == qb(n-m+1)*Ly{n+m} for n in -3..3, m in -3..3", 1e-12,
        trivial_registry);

    add("primed-minus-closure", "closure of the primed minus family used by the factorized chain",
        "[Lpm{n},Lpm{m}]_(n-m) == qb(n-m)*Lpm{n+m} for n in -2..2, m in -2..2",
        "[Lpm{n},Lpm{m}]_(n-m) == qb(n-m)*Lpm{n+m} - qb(1)*Lpm{n+m} for n in -2..2, m in -2..2",
        1e-12, primed_registry);

    add("primed-mixing", "mixing of the plus family with the primed minus family",
        "[Lp{n},Lpm{m}]_(n+m) == qb(n)*Lp{n+m} - qb(m)*Lpm{n+m} for n in -2..2, m in -2..2",
        "[Lp{n},Lpm{m}]_(n+m) == qb(n)*Lp{n+m} - qb(m+1)*Lpm{n+m} for n in -2..2, m in -2..2",
        1e-12, primed_registry);

    auto uq_text = std::string(
        R"((q^(1)-q^(-1))*([Ep{0},Em{0}]_(0)) == K{1} - K{-1}
K{1}*Ep{0}*K{-1} == q^(2)*Ep{0}
K{1}*Em{0}*K{-1} == q^(-2)*Em{0})");
    auto uq_mut = std::string("K{1}*Ep{0}*K{-1} == q^(3)*Ep{0}");
    add("quantum-sl2-base", "quantum sl(2) relations of the base chain generators", uq_text,
        uq_mut, 1e-12, [](const SuiteConfig& c) { return uqsl2_registry(c, UqKind::base); });
    add("quantum-sl2-primed", "quantum sl(2) relations of the conjugated generators", uq_text,
        uq_mut, 1e-12, [](const SuiteConfig& c) { return uqsl2_registry(c, UqKind::primed); });
    add("quantum-sl2-squared", "quantum sl(2) relations at the squared parameter", uq_text,
        uq_mut, 1e-12, [](const SuiteConfig& c) { return uqsl2_registry(c, UqKind::q2); });
    add("quantum-sl2-fourth", "quantum sl(2) relations at the fourth-power parameter", uq_text,
        uq_mut, 1e-12, [](const SuiteConfig& c) { return uqsl2_registry(c, UqKind::q4); });

    add("hopping-composites", "hopping-operator exchange, circulation and line composites",
        R"(Tx{0}*Ty{0} == q^(2)*Ty{0}*Tx{0}
Tyd{0}*Txd{0}*Ty{0}*Tx{0} == q^(-2)
Tyd{0}*Tx{0} == q^(1)*Y2{1}
Tx{0}*Tyd{0} == q^(-1)*Y2{1}
Txd{0}*Tyd{0} == q^(1)*Xm2{1}
Tyd{0}*Txd{0} == q^(-1)*Xm2{1})",
        "Tyd{0}*Tx{0} == q^(2)*Y2{1}", 1e-13, dmt_registry);

    return v;
}

} // namespace

const std::vector<SuiteDef>& builtin_suites() {
    static const std::vector<SuiteDef> suites = make_suites();
    return suites;
}

const SuiteDef* find_suite(const std::string& name) {
    for (const auto& s : builtin_suites())
        if (s.name == name) return &s;
    return nullptr;
}

Report run_suite(const SuiteDef& def, const SuiteConfig& cfg, bool mutated) {
    RelationSuite suite;
    suite.name = def.name + (mutated ? " (mutated)" : "");
    suite.tolerance = cfg.tol.value_or(def.tol);
    suite.relations = parse_suite_text(mutated ? def.mutated_text : def.text);
    Registry reg = def.make_registry(cfg);
    Report rep = check_suite(suite, reg);
    if (cfg.N) rep.N = *cfg.N;
    return rep;
}

} // namespace czlattice
