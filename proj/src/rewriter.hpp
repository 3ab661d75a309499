#pragma once

#include <cstddef>

#include "circuit.hpp"

namespace qxmap {

// True only when the two gate unitaries provably commute:
//   - disjoint wires;
//   - both diagonal (T/S/Sdg/Tdg/Z) on the same wire;
//   - both CNOT with ctrl(g1) != tgt(g2) and tgt(g1) != ctrl(g2);
//   - extended only: a diagonal gate sitting on the control of a CNOT.
bool commutes(const Gate& g1, const Gate& g2, bool extended);

struct ReductionOutcome {
    enum Kind { None, Eliminate, Merge } kind = None;
    Gate replacement{GateKind::H, 0, 0}; // valid when kind == Merge
};

// Adjacent-pair rule table: self-inverse pairs and inverse pairs eliminate,
// TT=S, SS=Z, TdgTdg=Sdg, SdgSdg=Z merge.
ReductionOutcome merge_adjacent(const Gate& g1, const Gate& g2);

// Peephole reduction to a fixpoint. Each pass scans left to right and, for
// the gate under the cursor, walks left across every gate it commutes with;
// when a merge rule fires the pair is rewritten in place (replacement at the
// earlier slot) and the scan resumes there. Gates that cannot merge keep
// their positions, so each pass either shrinks the circuit or is the last.
Circuit reduce(const Circuit& c, bool extended);

// Swaps wires q1/q2 in every gate from `position` on and records the
// transposition in output_map. Equivalent to inserting SWAP(q1,q2) at
// `position` and reading the outputs through the updated map; applying it
// twice with the same arguments restores the original circuit.
Circuit relabel_tail(const Circuit& c, std::size_t position, unsigned q1, unsigned q2);

} // namespace qxmap
