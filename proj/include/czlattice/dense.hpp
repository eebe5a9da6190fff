#pragma once

#include <algorithm>
#include <vector>

#include "czlattice/phase.hpp"

namespace czlattice {

/**
 * Dense complex N x N matrix.  This is the floating-point tier: sums of
 * monomial matrices (Hamiltonians, algebra generators) and everything the
 * deformed brackets produce.  Exact phase words stay in MonomialMatrix and
 * are lowered to CMatrix at assembly time.
 */
class CMatrix {
public:
    CMatrix() : n_(0) {}
    explicit CMatrix(int n) : n_(n), a_(size_t(n) * n, cplx(0.0, 0.0)) {
        if (n < 1) throw SizeTooSmall("CMatrix size must be positive");
    }

    static CMatrix identity(int n) {
        CMatrix m(n);
        for (int j = 0; j < n; ++j) m(j, j) = 1.0;
        return m;
    }

    int size() const { return n_; }

    cplx& operator()(int r, int c) { return a_[size_t(r) * n_ + c]; }
    const cplx& operator()(int r, int c) const { return a_[size_t(r) * n_ + c]; }

    CMatrix operator+(const CMatrix& o) const {
        check(o);
        CMatrix r(n_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }
    CMatrix operator-(const CMatrix& o) const {
        check(o);
        CMatrix r(n_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }
    CMatrix operator*(const CMatrix& o) const {
        check(o);
        CMatrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                cplx v = (*this)(i, k);
                if (v == cplx(0.0, 0.0)) continue;
                for (int j = 0; j < n_; ++j) r(i, j) += v * o(k, j);
            }
        return r;
    }
    friend CMatrix operator*(cplx s, const CMatrix& m) {
        CMatrix r(m.n_);
        for (size_t i = 0; i < m.a_.size(); ++i) r.a_[i] = s * m.a_[i];
        return r;
    }

    CMatrix dagger() const {
        CMatrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r(j, i) = std::conj((*this)(i, j));
        return r;
    }

    /// Max |entry|.
    double max_norm() const {
        double m = 0.0;
        for (const cplx& v : a_) m = std::max(m, std::abs(v));
        return m;
    }

    /// Relative deviation: ||A - B||_max / max(1, ||A||, ||B||).
    static double rel_residual(const CMatrix& A, const CMatrix& B) {
        double scale = std::max({1.0, A.max_norm(), B.max_norm()});
        return (A - B).max_norm() / scale;
    }

    double hermiticity_defect() const { return (*this - dagger()).max_norm(); }

    std::vector<cplx> apply(const std::vector<cplx>& v) const {
        if ((int)v.size() != n_) throw SizeMismatch("vector length != matrix size");
        std::vector<cplx> r(n_, cplx(0.0, 0.0));
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

private:
    void check(const CMatrix& o) const {
        if (n_ != o.n_)
            throw SizeMismatch("matrix sizes " + std::to_string(n_) + " vs " + std::to_string(o.n_));
    }

    int n_;
    std::vector<cplx> a_;
};

/**
 * [A,B]_{(x,y)} = q^x A B - q^y B A with half-integer x, y given in doubled
 * units (x2 = 2x), so q^x is evaluated exactly in the ring.
 */
inline CMatrix deformed_commutator2(const CMatrix& A, const CMatrix& B, long long x2, long long y2,
                                    const PhaseExponent& q) {
    cplx qx = q.pow_frac(x2, 2).value();
    cplx qy = q.pow_frac(y2, 2).value();
    return qx * (A * B) - qy * (B * A);
}

/// [A,B]_{(x)} = q^x A B - q^{-x} B A, x in doubled units.
inline CMatrix deformed_commutator2(const CMatrix& A, const CMatrix& B, long long x2,
                                    const PhaseExponent& q) {
    return deformed_commutator2(A, B, x2, -x2, q);
}

/// Integer-exponent convenience overload.
inline CMatrix deformed_commutator(const CMatrix& A, const CMatrix& B, long long x, long long y,
                                   const PhaseExponent& q) {
    return deformed_commutator2(A, B, 2 * x, 2 * y, q);
}

} // namespace czlattice
