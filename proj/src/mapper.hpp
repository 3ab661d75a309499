#pragma once

#include <vector>

#include "circuit.hpp"
#include "coupling.hpp"

namespace qxmap {

enum class Strategy { Swap, Template };

// CNOT with the reversed edge native: conjugate by Hadamards on both wires.
// 5 gates, depth 3.
std::vector<Gate> map_reversed_cnot(unsigned control, unsigned target);

// Rewrite CNOT(control, target) through cls.middle using only native
// orientations for cls.routed_case. Template costs 10/10/8/4 gates for
// cases A/B/C/D; every swap variant costs 11. All sequences are unitarily
// equal to the original CNOT (checked in the test suite).
std::vector<Gate> map_routed_cnot(const CnotClass& cls, unsigned control, unsigned target,
                                  Strategy strategy);

// mapIBM: replace every non-native CNOT, widening the circuit to the map's
// qubit count. Single-qubit gates and already-native CNOTs pass through.
Circuit map_circuit(const Circuit& c, const CouplingMap& m, Strategy strategy);

// Every CX in c sits on a native edge.
bool is_legal(const Circuit& c, const CouplingMap& m);

} // namespace qxmap
