#pragma once

#include <vector>

#include "czlattice/czrep.hpp"
#include "czlattice/monomial.hpp"
#include "czlattice/report.hpp"

namespace czlattice {

/**
 * Ordered products on the quantum plane: a translation along one quantum
 * line decomposes into moves, each tagged with the number of detours through
 * the adjacent line on either side.  Only the counts matter; the phase laws
 * are k/l bookkeeping, not path geometry.
 */
enum class QuantumLine { Yline, Xline };

struct LineMove {
    QuantumLine line;
    int pos_fluct = 0; // detours via the +1 neighbour line
    int neg_fluct = 0; // detours via the -1 neighbour line
    int direction = +1;
};

struct OrderedProduct {
    QuantumLine line;
    long long phase_q = 0; // exponent of q
    long long power = 0;   // power of Y^2 (Yline) or Xt^-2 (Xline), in units of 2 steps
};

/**
 * Compose same-line moves.  On the Y line a (k,l) move contributes phase
 * q^{l-k} and operator power Y^{2(k+l)}; on the X line the phases invert:
 * q^{k-l} and Xt^{-2(k+l)}.
 */
inline OrderedProduct star_ordered_compose(const std::vector<LineMove>& moves) {
    if (moves.empty()) throw Error("star_ordered_compose: no moves");
    OrderedProduct out;
    out.line = moves.front().line;
    for (const auto& m : moves) {
        if (m.line != out.line) throw MixedLines("moves on different quantum lines");
        long long steps = (long long)m.direction * (m.pos_fluct + m.neg_fluct);
        long long ph = (long long)m.direction * (m.neg_fluct - m.pos_fluct);
        if (m.line == QuantumLine::Xline) ph = -ph;
        out.phase_q += ph;
        out.power += steps;
    }
    return out;
}

/**
 * The discrete-magnetic-translation composites that realize the two quantum
 * lines, verified exactly at the monomial level, followed by the closure of
 * the induced commutative families under the metadata star rule.
 */
Report dmt_composite_check(int N, const PhaseExponent& q);

} // namespace czlattice
