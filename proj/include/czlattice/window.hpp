#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "czlattice/phase.hpp"
#include "czlattice/report.hpp"

namespace czlattice {

/// Inclusive degree range of the truncated Laurent coefficient space.
struct LaurentWindow {
    int d_min;
    int d_max;

    LaurentWindow(int lo, int hi) : d_min(lo), d_max(hi) {
        if (lo > hi) throw Error("LaurentWindow: empty range");
    }
    bool contains(int d) const { return d >= d_min && d <= d_max; }
};

/**
 * One monomial map z^j -> coeff * q^{(alpha2*j)/2 + beta4/4} * z^{j+shift}.
 *
 * The per-degree exponent is kept in half-q units (alpha2 = 2*alpha) and the
 * constant exponent in quarter-q units (beta4 = 4*beta), so every phase that
 * appears in the translation/fusion calculus - including the n/2 and spin
 * offsets - is integer bookkeeping.
 */
struct WindowTerm {
    int shift;
    long long alpha2;
    long long beta4;
    cplx coeff;
};

/**
 * Finite sum of monomial maps on the Laurent space.  Composition and linear
 * combinations keep exponents exact; floats enter only through coefficients
 * (deformed integers and normalizations).
 */
class WindowOp {
public:
    explicit WindowOp(const PhaseExponent& q) : q_(q) {}
    WindowOp(const PhaseExponent& q, std::vector<WindowTerm> terms) : q_(q), terms_(std::move(terms)) {
        normalize();
    }

    const PhaseExponent& q() const { return q_; }
    const std::vector<WindowTerm>& terms() const { return terms_; }

    static WindowOp identity(const PhaseExponent& q) {
        return WindowOp(q, {{0, 0, 0, cplx(1.0, 0.0)}});
    }
    static WindowOp zero(const PhaseExponent& q) { return WindowOp(q); }

    /// Multiplication by z^n.
    static WindowOp z_power(const PhaseExponent& q, int n) {
        return WindowOp(q, {{n, 0, 0, cplx(1.0, 0.0)}});
    }

    WindowOp operator+(const WindowOp& o) const {
        q_.check_ring(o.q_);
        std::vector<WindowTerm> t = terms_;
        t.insert(t.end(), o.terms_.begin(), o.terms_.end());
        return WindowOp(q_, std::move(t));
    }
    WindowOp operator-(const WindowOp& o) const { return *this + (cplx(-1.0, 0.0) * o); }

    friend WindowOp operator*(cplx s, const WindowOp& o) {
        std::vector<WindowTerm> t = o.terms_;
        for (auto& x : t) x.coeff *= s;
        return WindowOp(o.q_, std::move(t));
    }

    /// Operator product: (A*B) f = A(B f).
    WindowOp operator*(const WindowOp& o) const {
        q_.check_ring(o.q_);
        std::vector<WindowTerm> t;
        t.reserve(terms_.size() * o.terms_.size());
        for (const auto& a : terms_)
            for (const auto& b : o.terms_) {
                WindowTerm c;
                c.shift = a.shift + b.shift;
                c.alpha2 = a.alpha2 + b.alpha2;
                // A sees the shifted degree: extra alpha_A * shift_B.
                c.beta4 = a.beta4 + b.beta4 + 2 * a.alpha2 * b.shift;
                c.coeff = a.coeff * b.coeff;
                t.push_back(c);
            }
        return WindowOp(q_, std::move(t));
    }

    /// Multiply by the exact scalar q^{quarters/4}.
    WindowOp mul_qpow4(long long quarters) const {
        std::vector<WindowTerm> t = terms_;
        for (auto& x : t) x.beta4 += quarters;
        return WindowOp(q_, std::move(t));
    }
    WindowOp mul_qpow(long long n) const { return mul_qpow4(4 * n); }

    /// Exact equality of normalized term lists (keys and coefficients).
    bool operator==(const WindowOp& o) const {
        if (!(q_ == o.q_) || terms_.size() != o.terms_.size()) return false;
        for (size_t i = 0; i < terms_.size(); ++i) {
            const auto& a = terms_[i];
            const auto& b = o.terms_[i];
            if (a.shift != b.shift || a.alpha2 != b.alpha2 || a.beta4 != b.beta4 ||
                a.coeff != b.coeff)
                return false;
        }
        return true;
    }
    bool operator!=(const WindowOp& o) const { return !(*this == o); }

    /// Image of the basis monomial z^j as degree -> coefficient.
    std::map<int, cplx> apply_to_monomial(int j) const {
        std::map<int, cplx> out;
        for (const auto& t : terms_) {
            long long quarters = 2 * t.alpha2 * j + t.beta4;
            cplx v = t.coeff * q_.pow_frac(quarters, 4).value();
            out[j + t.shift] += v;
        }
        return out;
    }

    /// Image of a Laurent series given by degree -> coefficient.
    std::map<int, cplx> apply(const std::map<int, cplx>& f, const LaurentWindow& win) const {
        std::map<int, cplx> out;
        for (const auto& [deg, c] : f) {
            if (!win.contains(deg)) throw WindowUnderflow("input degree outside window");
            for (const auto& [d, v] : apply_to_monomial(deg)) out[d] += c * v;
        }
        for (const auto& [d, v] : out)
            if (!win.contains(d) && std::abs(v) > 1e-15)
                throw WindowUnderflow("result degree " + std::to_string(d) + " left the window");
        return out;
    }

    int max_abs_shift() const {
        int m = 0;
        for (const auto& t : terms_) m = std::max(m, std::abs(t.shift));
        return m;
    }

private:
    void normalize() {
        std::sort(terms_.begin(), terms_.end(), [](const WindowTerm& a, const WindowTerm& b) {
            return std::tie(a.shift, a.alpha2, a.beta4) < std::tie(b.shift, b.alpha2, b.beta4);
        });
        std::vector<WindowTerm> merged;
        for (const auto& t : terms_) {
            if (!merged.empty() && merged.back().shift == t.shift &&
                merged.back().alpha2 == t.alpha2 && merged.back().beta4 == t.beta4)
                merged.back().coeff += t.coeff;
            else
                merged.push_back(t);
        }
        std::erase_if(merged, [](const WindowTerm& t) { return std::abs(t.coeff) < 1e-300; });
        terms_ = std::move(merged);
    }

    PhaseExponent q_;
    std::vector<WindowTerm> terms_;
};

/// Max coefficient-wise deviation of A and B over the interior of the window.
inline double window_residual(const WindowOp& A, const WindowOp& B, const LaurentWindow& win) {
    int margin = std::max(A.max_abs_shift(), B.max_abs_shift());
    double worst = 0.0;
    for (int j = win.d_min + margin; j + margin <= win.d_max; ++j) {
        std::map<int, cplx> fa = A.apply_to_monomial(j);
        std::map<int, cplx> fb = B.apply_to_monomial(j);
        for (const auto& [d, v] : fb) fa[d] -= v;
        for (const auto& [d, v] : fa) worst = std::max(worst, std::abs(v));
    }
    return worst;
}

/// Spin offset 2*Delta, kept doubled so Delta = 1/2 stays exact.
struct SpinDelta {
    int delta2 = 0;
};

/**
 * Magnetic-translation unit: z^j -> q^{-k(j + n/2 + Delta)} z^{j+n},
 * a single monomial map.
 */
inline WindowOp make_tau(const PhaseExponent& q, int n, int k, SpinDelta d = {}) {
    WindowTerm t;
    t.shift = n;
    t.alpha2 = -2LL * k;
    t.beta4 = -2LL * k * n - 2LL * k * d.delta2;
    t.coeff = cplx(1.0, 0.0);
    return WindowOp(q, {t});
}

inline cplx inv_qq(const PhaseExponent& q) {
    if (q.is_real()) throw DegenerateQ("q - q^-1 = 0 in Laurent calculus");
    return 1.0 / (q.value() - q.inverse().value());
}

/// Normalized translation: T_n^{(k)} = tau_n^{(k)}/(q - q^-1).
inline WindowOp make_That(const PhaseExponent& q, int n, int k, SpinDelta d = {}) {
    return inv_qq(q) * make_tau(q, n, k, d);
}

/// d_q f(z) = (f(z) - f(z q^{-2})) / ((q - q^-1) z):  z^n -> q^{-n}[n] z^{n-1}.
inline WindowOp q_derivative_op(const PhaseExponent& q) {
    cplx inv = inv_qq(q);
    return WindowOp(q, {{-1, 0, 0, inv}, {-1, -4, 0, -inv}});
}

/// The opposite-deformation derivative: z^n -> q^{+n}[n] z^{n-1}.
inline WindowOp q_derivative_minus_op(const PhaseExponent& q) {
    cplx inv = inv_qq(q);
    return WindowOp(q, {{-1, 4, 0, -inv}, {-1, 0, 0, inv}});
}

/**
 * Window generators of the two sign families:
 *   plus:  -z^{n+1} d_q   = -z^n (1 - q^{-2 z d/dz})/(q - q^-1)
 *   minus: -z^{n+1} d_q^- = +z^n (1 - q^{+2 z d/dz})/(q - q^-1)
 */
inline WindowOp make_Lhat(const PhaseExponent& q, int n, int sign) {
    cplx inv = inv_qq(q);
    if (sign > 0) return WindowOp(q, {{n, 0, 0, -inv}, {n, -4, 0, inv}});
    return WindowOp(q, {{n, 0, 0, inv}, {n, 4, 0, -inv}});
}

/// q-oscillator raising operator: q z.
inline WindowOp osc_raise(const PhaseExponent& q) {
    return WindowOp(q, {{1, 0, 4, cplx(1.0, 0.0)}});
}

/// q-oscillator lowering operator: (qz)^{-1} [z d/dz].
inline WindowOp osc_lower(const PhaseExponent& q) {
    cplx inv = inv_qq(q);
    return WindowOp(q, {{-1, 2, -4, inv}, {-1, -2, -4, -inv}});
}

/// q^{c * number-operator}: z^j -> q^{c j} z^j.
inline WindowOp q_pow_number(const PhaseExponent& q, int c) {
    return WindowOp(q, {{0, 2LL * c, 0, cplx(1.0, 0.0)}});
}

Report verify_MTA(const PhaseExponent& q, int range, SpinDelta d = {});
Report czt_decomposition_check(const PhaseExponent& q, int n, SpinDelta d = {});

} // namespace czlattice
