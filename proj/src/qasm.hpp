#pragma once

#include <string>
#include <string_view>

#include "circuit.hpp"
#include "coupling.hpp"

namespace qxmap {

// OpenQASM 2.0, Clifford+T subset only: optional header and qelib include,
// exactly one qreg, gates h/x/z/s/sdg/t/tdg/cx, // comments. Anything else
// (measure, barrier, creg, ...) raises parse_error with the source line.
Circuit parse_qasm(std::string_view source);

// Canonical text form; appends a `// output_map: ...` comment when the
// circuit carries a non-identity output relabeling (informational only —
// parse_qasm drops comments).
std::string emit_qasm(const Circuit& c);

// JSON {"qubits": n, "edges": [[control,target], ...]}, 2 <= n <= 10.
CouplingMap parse_coupling_file(std::string_view source);

} // namespace qxmap
