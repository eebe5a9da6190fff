#pragma once

#include <optional>
#include <vector>

#include "czlattice/czrep.hpp"
#include "czlattice/monomial.hpp"
#include "czlattice/report.hpp"

namespace czlattice {

/**
 * Square lattice with uniform flux phi = P/Q per plaquette and the fixed
 * gauge  theta^x_{m,n} = -(n+m) pi phi,  theta^y_{m,n} = (m+n+1) pi phi,
 * which satisfies the plaquette identity
 * 2 pi phi = (theta^y_{m+1,n} - theta^y_{m,n}) - (theta^x_{m,n+1} - theta^x_{m,n})
 * exactly at every site.
 */
struct LatticeSpec {
    int Lx;
    int Ly;
    FluxRatio flux;

    LatticeSpec(int lx, int ly, FluxRatio f) : Lx(lx), Ly(ly), flux(f) {
        if (Lx < 3 || Ly < 3) throw SizeTooSmall("lattice must be at least 3 x 3");
    }

    /// theta^x_{m,n} in units of pi*phi (exact integer).
    long long theta_x_units(int m, int n) const { return -(long long)(n + m); }
    /// theta^y_{m,n} in units of pi*phi.
    long long theta_y_units(int m, int n) const { return (long long)(m + n + 1); }
};

/// Single-particle amplitude field on the open lattice.
struct WaveFunction2D {
    int Lx;
    int Ly;
    std::vector<cplx> amp;       // row-major: amp[m * Ly + n]
    bool edge_truncated = false; // set when hopping dropped amplitude off the edge

    WaveFunction2D(int lx, int ly) : Lx(lx), Ly(ly), amp(size_t(lx) * ly, cplx(0.0, 0.0)) {}
    cplx& at(int m, int n) { return amp[size_t(m) * Ly + n]; }
    const cplx& at(int m, int n) const { return amp[size_t(m) * Ly + n]; }

    static WaveFunction2D delta(const LatticeSpec& spec, int m, int n) {
        WaveFunction2D w(spec.Lx, spec.Ly);
        w.at(m, n) = 1.0;
        return w;
    }
};

enum class DMTKind { Tx, Ty, TxDag, TyDag };

/// Apply one hopping operator with its exact Peierls phase (open boundary;
/// amplitudes that would exit the lattice are dropped and flagged).
WaveFunction2D apply_DMT(const LatticeSpec& spec, DMTKind which, const WaveFunction2D& psi);

/// Exchange, fusion and circulation phases at every interior site, plus the
/// plaquette gauge identity, all at exponent level.
Report verify_dmt_algebra(const LatticeSpec& spec);

enum class HamiltonianKind {
    H,       ///< the flux-Q chain, size 2Q
    Hprime,  ///< its conjugated twin Y H Y^-1
    Hn,      ///< interval-n generalization, size 2Q
    Hcheck,  ///< family member k assembled from the algebra generators
    Hnk,     ///< i(X^-n - X^n) Y^k + Y^-k-ordered partner, size 2Q
    HZ,      ///< the factorized (generally non-Hermitian) product H [Z]
};

enum class SignConvention { minus_pi_phi, plus_pi_phi, two_pi_phi };

struct HamiltonianSpec {
    HamiltonianKind kind = HamiltonianKind::H;
    FluxRatio flux;
    int n = 1;
    int k = 1;
    SignConvention sign = SignConvention::minus_pi_phi;

    explicit HamiltonianSpec(FluxRatio f) : flux(f) {}
};

/// Matrix size used by each kind (2Q, except Q for even family members).
int hamiltonian_size(const HamiltonianSpec& spec);

CMatrix build_hamiltonian(const HamiltonianSpec& spec);

/// Direct family formula i(X^-n - X^n) Y_k + Y_k^-1 i(X^-n - X^n) with
/// Y_k = diag(q_k, ..., q_k^N), q_k the k-th power of the chain parameter;
/// same size as the Hcheck kind.  The generator-assembled Hcheck must
/// reproduce this matrix.
CMatrix build_family_direct(FluxRatio flux, int n, int k,
                            SignConvention sign = SignConvention::minus_pi_phi);

/**
 * Chain matrix assembled row by row from the reduced difference equation
 * -i(q^{j-1} + q^{-j}) psi_{j-1} + i(q^{-j} + q^{j+1}) psi_{j+1} = E psi_j
 * (1-based j, cyclic of length 2Q), at the standard mid-band momenta.
 * Also used with the conjugate convention.
 */
CMatrix midband_chain(FluxRatio flux, SignConvention sign = SignConvention::minus_pi_phi);

/// Report on the factorized family: the product form, its diagonal zero
/// modes, and the primed mixing relations of the generators used.
Report factorization_check(FluxRatio flux);

enum class UqKind { base, primed, q2, q4 };

struct UqTriple {
    CMatrix Eplus;
    CMatrix Eminus;
    CMatrix K;
    PhaseExponent q; // the deformation parameter the triple closes under
};

UqTriple make_uqsl2(UqKind kind, FluxRatio flux);

/// Relations [E+,E-] = (K - K^-1)/(q - q^-1), K E+- K^-1 = q^{+-2} E+-,
/// and the Hamiltonian recombination for the matching kind.
Report verify_uqsl2(UqKind kind, FluxRatio flux);

/// The flux-session phase ring (M = 4Q) and the chain deformation parameter.
struct FluxSession {
    FluxRing ring;
    explicit FluxSession(FluxRatio f) : ring(f) {}

    /// e^{-i pi phi}, e^{+i pi phi} or e^{-2 i pi phi} per convention.
    PhaseExponent q(SignConvention sign) const {
        switch (sign) {
            case SignConvention::minus_pi_phi: return ring.unit().inverse();
            case SignConvention::plus_pi_phi: return ring.unit();
            case SignConvention::two_pi_phi: return ring.unit().pow(-2);
        }
        throw Error("bad sign convention");
    }
};

} // namespace czlattice
