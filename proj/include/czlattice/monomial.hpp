#pragma once

#include <vector>

#include "czlattice/dense.hpp"
#include "czlattice/phase.hpp"

namespace czlattice {

/**
 * Generalized permutation matrix: entry (j,k) = scale * rowphase[j] when
 * j == k + shift (mod N), else 0.  Exactly one nonzero per row and column.
 *
 * Every word in the clock and shift matrices X, Y is of this form, so all
 * exchange/fusion/circulation identities can be verified at the exponent
 * level with zero tolerance.  Products, powers and adjoints stay in the
 * class; only sums leave it (see CMatrix).
 */
class MonomialMatrix {
public:
    MonomialMatrix(int N, int shift, std::vector<PhaseExponent> rowphase, PhaseExponent scale)
        : N_(N), shift_(mod(shift, N)), rowphase_(std::move(rowphase)), scale_(scale) {
        if (N_ < 2) throw SizeTooSmall("MonomialMatrix needs N >= 2");
        if ((int)rowphase_.size() != N_) throw SizeMismatch("rowphase length != N");
    }

    static MonomialMatrix identity(int N, const PhaseRing& ring) {
        return {N, 0, std::vector<PhaseExponent>(size_t(N), one_phase(ring)), one_phase(ring)};
    }

    int size() const { return N_; }
    int shift() const { return shift_; }
    const PhaseRing& ring() const { return scale_.ring(); }
    const PhaseExponent& scale() const { return scale_; }
    const PhaseExponent& rowphase(int j) const { return rowphase_[size_t(j)]; }

    /// (A*B): row j of the product picks up B's phase at row (j - shiftA).
    MonomialMatrix operator*(const MonomialMatrix& o) const {
        if (N_ != o.N_) throw SizeMismatch("monomial sizes differ");
        scale_.check_ring(o.scale_);
        std::vector<PhaseExponent> rp;
        rp.reserve(size_t(N_));
        for (int j = 0; j < N_; ++j) rp.push_back(rowphase_[size_t(j)] * o.rowphase_[size_t(mod(j - shift_, N_))]);
        return {N_, shift_ + o.shift_, std::move(rp), scale_ * o.scale_};
    }

    MonomialMatrix operator*(const PhaseExponent& s) const {
        return {N_, shift_, rowphase_, scale_ * s};
    }

    MonomialMatrix inverse() const {
        std::vector<PhaseExponent> rp;
        rp.reserve(size_t(N_));
        for (int j = 0; j < N_; ++j)
            rp.push_back(rowphase_[size_t(mod(j + shift_, N_))].inverse());
        return {N_, -shift_, std::move(rp), scale_.inverse()};
    }

    /// Conjugate transpose; for a unit-phase monomial this equals inverse().
    MonomialMatrix dagger() const { return inverse(); }

    MonomialMatrix pow(int k) const {
        if (k < 0) return inverse().pow(-k);
        MonomialMatrix acc = identity(N_, ring());
        MonomialMatrix base = *this;
        while (k > 0) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    /// Exponent-level equality: same shift, same scaled phase in every row.
    bool operator==(const MonomialMatrix& o) const {
        if (N_ != o.N_ || shift_ != o.shift_) return false;
        for (int j = 0; j < N_; ++j)
            if (scale_ * rowphase_[size_t(j)] != o.scale_ * o.rowphase_[size_t(j)]) return false;
        return true;
    }
    bool operator!=(const MonomialMatrix& o) const { return !(*this == o); }

    CMatrix dense() const {
        CMatrix m(N_);
        for (int j = 0; j < N_; ++j)
            m(j, mod(j - shift_, N_)) = (scale_ * rowphase_[size_t(j)]).value();
        return m;
    }

    static int mod(int a, int n) {
        int r = a % n;
        return r < 0 ? r + n : r;
    }

private:
    int N_;
    int shift_;
    std::vector<PhaseExponent> rowphase_;
    PhaseExponent scale_;
};

/// Shift matrix: e_k -> e_{k+1} (indices mod N); X^N = 1 and X^-1 = X^T.
inline MonomialMatrix make_X(int N, const PhaseRing& ring) {
    if (N < 2) throw SizeTooSmall("make_X needs N >= 2");
    return {N, 1, std::vector<PhaseExponent>(size_t(N), one_phase(ring)), one_phase(ring)};
}

/**
 * Clock matrix diag(q^1, ..., q^N) in the 1-based convention; stored
 * 0-based as rowphase[j] = q^{j+1}.
 */
inline MonomialMatrix make_Y(int N, const PhaseExponent& q) {
    if (N < 2) throw SizeTooSmall("make_Y needs N >= 2");
    std::vector<PhaseExponent> rp;
    rp.reserve(size_t(N));
    for (int j = 0; j < N; ++j) rp.push_back(q.pow(j + 1));
    return {N, 0, std::move(rp), one_phase(q.ring())};
}

/// H = X^-1 = X^T.
inline MonomialMatrix make_H(int N, const PhaseRing& ring) { return make_X(N, ring).inverse(); }

/// Q = q^-1 Y (global-phase convention pinned here).
inline MonomialMatrix make_Q(int N, const PhaseExponent& q) {
    return make_Y(N, q) * q.inverse();
}

/// Xt = i X q^{-1/2}; needs i and q^{1/2} in the ring.
inline MonomialMatrix make_Xtilde(int N, const PhaseExponent& q) {
    PhaseExponent s = imaginary_unit(q.ring()) * q.pow_frac(-1, 2);
    return make_X(N, q.ring()) * s;
}

/// Exact check of Y^m X^n = q^{mn} X^n Y^m.
inline bool weyl_exchange_check(int N, const PhaseExponent& q, int m, int n) {
    MonomialMatrix X = make_X(N, q.ring());
    MonomialMatrix Y = make_Y(N, q);
    MonomialMatrix lhs = Y.pow(m) * X.pow(n);
    MonomialMatrix rhs = (X.pow(n) * Y.pow(m)) * q.pow((long long)m * n);
    return lhs == rhs;
}

} // namespace czlattice
