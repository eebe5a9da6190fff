#pragma once

#include <cmath>
#include <complex>
#include <numeric>

#include "czlattice/errors.hpp"

namespace czlattice {

using cplx = std::complex<double>;

/**
 * Cyclic phase group <w> with w = e^{i*pi/M}.  Every phase in the system is
 * an integer power of w, so w has multiplicative order 2M and exponents are
 * integers mod 2M.  Exact phase identities reduce to integer arithmetic.
 *
 * Ring choices used by the builders below:
 *  - weyl_ring(N):  M = 2N, q = w^4 = e^{2pi i/N}.  Makes q^{1/4} = w and
 *    i = w^N exact, which covers every half/quarter power the fusion rules
 *    and the k = 1 family need.
 *  - flux_ring(P,Q): M = 4Q, e^{i*pi*P/Q} = w^{4P}.
 */
struct PhaseRing {
    int M;

    explicit PhaseRing(int M_) : M(M_) {
        if (M < 1) throw Error("PhaseRing: M must be >= 1");
    }
    int order() const { return 2 * M; }
    bool operator==(const PhaseRing& o) const { return M == o.M; }
};

/// w^e for a fixed ring; exponent normalized to [0, 2M).
class PhaseExponent {
public:
    PhaseExponent(const PhaseRing& ring, long long e) : ring_(ring), e_(norm(e, ring.order())) {}

    const PhaseRing& ring() const { return ring_; }
    int exponent() const { return e_; }

    PhaseExponent operator*(const PhaseExponent& o) const {
        check_ring(o);
        return PhaseExponent(ring_, (long long)e_ + o.e_);
    }
    PhaseExponent inverse() const { return PhaseExponent(ring_, -(long long)e_); }

    /// Integer power (negative allowed).
    PhaseExponent pow(long long k) const { return PhaseExponent(ring_, (long long)e_ * k); }

    /// w^{e*num/den}; throws unless e*num is divisible by den.
    PhaseExponent pow_frac(long long num, long long den) const {
        if (den == 0) throw Error("pow_frac: zero denominator");
        long long t = (long long)e_ * num;
        if (t % den != 0)
            throw PhaseNotRepresentable("phase w^" + std::to_string(e_) + " has no exact power " +
                                        std::to_string(num) + "/" + std::to_string(den) +
                                        " in ring M=" + std::to_string(ring_.M));
        return PhaseExponent(ring_, t / den);
    }

    bool operator==(const PhaseExponent& o) const { return ring_ == o.ring_ && e_ == o.e_; }
    bool operator!=(const PhaseExponent& o) const { return !(*this == o); }

    bool is_one() const { return e_ == 0; }
    /// True when the phase is +-1, i.e. real on the unit circle.
    bool is_real() const { return e_ == 0 || e_ == ring_.M; }

    cplx value() const {
        // cos/sin of an exact rational angle; exact at the special points.
        // Use the symmetric representative in (-M, M] so that inverse phases
        // evaluate to bit-exact complex conjugates.
        const double pi = 3.14159265358979323846264338327950288;
        int e = e_ > ring_.M ? e_ - ring_.order() : e_;
        double theta = pi * double(e) / double(ring_.M);
        return {std::cos(theta), std::sin(theta)};
    }

    void check_ring(const PhaseExponent& o) const {
        if (!(ring_ == o.ring_))
            throw RingMismatch("phase exponents from rings M=" + std::to_string(ring_.M) +
                               " and M=" + std::to_string(o.ring_.M));
    }

private:
    static int norm(long long e, int order) {
        long long r = e % order;
        if (r < 0) r += order;
        return (int)r;
    }

    PhaseRing ring_;
    int e_;
};

inline PhaseExponent phase(const PhaseRing& ring, long long e) { return PhaseExponent(ring, e); }
inline cplx phase_to_complex(const PhaseExponent& p) { return p.value(); }

inline PhaseExponent one_phase(const PhaseRing& ring) { return PhaseExponent(ring, 0); }

/// i = w^{M/2}; needs even M.
inline PhaseExponent imaginary_unit(const PhaseRing& ring) {
    if (ring.M % 2 != 0)
        throw PhaseNotRepresentable("imaginary unit needs even M, got M=" + std::to_string(ring.M));
    return PhaseExponent(ring, ring.M / 2);
}

/// Coprime flux ratio phi = P/Q.
struct FluxRatio {
    int P;
    int Q;

    FluxRatio(int P_, int Q_) : P(P_), Q(Q_) {
        if (Q <= 0) throw NonCoprimeFlux("flux denominator must be positive");
        if (std::gcd(P, Q) != 1)
            throw NonCoprimeFlux("flux " + std::to_string(P) + "/" + std::to_string(Q) +
                                 " is not in lowest terms");
    }
    double value() const { return double(P) / double(Q); }
};

/// [n] = (q^n - q^{-n})/(q - q^{-1}); real for |q| = 1.
inline double q_bracket(long long n, const PhaseExponent& q) {
    if (q.is_real())
        throw DegenerateQ("q-bracket undefined: q - q^-1 = 0 for q = w^" +
                          std::to_string(q.exponent()));
    // With q = e^{i*theta}: [n] = sin(n*theta)/sin(theta).
    const double pi = 3.14159265358979323846264338327950288;
    double theta = pi * double(q.exponent()) / double(q.ring().M);
    return std::sin(double(n) * theta) / std::sin(theta);
}

/// [n]_k = q-bracket of n at q^k.
inline double q_bracket_family(long long n, const PhaseExponent& q, long long k) {
    return q_bracket(n, q.pow(k));
}

/// Ring for Weyl matrices of size N: M = 2N, q = w^4.
struct WeylRing {
    PhaseRing ring;
    int N;

    explicit WeylRing(int N_) : ring(2 * N_), N(N_) {
        if (N < 2) throw SizeTooSmall("Weyl ring needs N >= 2");
    }
    /// q = e^{2*pi*i/N}
    PhaseExponent q() const { return PhaseExponent(ring, 4); }
};

/// Ring for flux phi = P/Q: M = 4Q; unit() = e^{i*pi*phi} = w^{4P}.
struct FluxRing {
    PhaseRing ring;
    FluxRatio flux;

    explicit FluxRing(FluxRatio f) : ring(4 * f.Q), flux(f) {}
    /// e^{+i*pi*phi}
    PhaseExponent unit() const { return PhaseExponent(ring, 4LL * flux.P); }
};

} // namespace czlattice
