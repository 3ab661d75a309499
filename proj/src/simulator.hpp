#pragma once

#include <Eigen/Dense>

#include "circuit.hpp"

namespace qxmap {

using Unitary = Eigen::MatrixXcd;

// Bit convention, used consistently everywhere: little-endian, wire 0 is the
// least significant bit of the basis index. Later gates multiply on the left.
Unitary circuit_unitary(const Circuit& c);

Unitary gate_unitary(const Gate& g, unsigned lines);

// P with bit w of the input moved to bit sigma[w] of the output.
Unitary basis_permutation(const std::vector<std::uint8_t>& sigma);

// circuit unitary with the pending output relabeling applied as a final
// wire permutation — the matrix a circuit denotes once output_map is honored
Unitary semantic_unitary(const Circuit& c);

// True iff c2 equals c1 (embedded through `placement` and with both
// output_maps honored) up to a global phase, entrywise within tol.
bool equivalent(const Circuit& c1, const Circuit& c2, const LinePlacement& placement,
                double tol = 1e-10);
bool equivalent(const Circuit& c1, const Circuit& c2, double tol = 1e-10);

} // namespace qxmap
