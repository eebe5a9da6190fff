#pragma once

#include <iosfwd>
#include <vector>

#include "czlattice/dense.hpp"

namespace czlattice {

/**
 * Eigenvalues of a Hermitian matrix, ascending.  Throws NotHermitian when
 * the input deviates from its adjoint by more than 1e-12 relative to scale.
 * Each pair satisfies ||H v - lambda v|| < 1e-9 ||H|| (asserted in tests).
 */
std::vector<double> spectrum(const CMatrix& H);

/// One emitted eigenvalue of the flux sweep.
struct ButterflyRow {
    int phi_num;
    int phi_den;
    int index;
    double energy;
};

/**
 * Spectra of the flux-Q chain for every coprime (P,Q) with 1 <= P < Q <= Qmax,
 * deterministically ordered by (Q, P, index).  jobs > 1 runs the independent
 * (P,Q) items on a thread pool; the merged output is identical.
 */
std::vector<ButterflyRow> butterfly_sweep(int Qmax, int jobs = 1);

/// CSV with the fixed header phi_num,phi_den,index,energy; energies as
/// shortest round-trip decimals.
void write_butterfly_csv(std::ostream& os, const std::vector<ButterflyRow>& rows);

} // namespace czlattice
