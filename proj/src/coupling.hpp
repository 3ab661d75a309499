#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace qxmap {

// Directed coupling graph: an edge (c, t) means a native CNOT with control c
// and target t.
struct CouplingMap {
    unsigned qubits = 0;
    std::vector<std::pair<std::uint8_t, std::uint8_t>> edges; // sorted, unique

    bool has_edge(unsigned control, unsigned target) const;
    bool adjacent(unsigned a, unsigned b) const; // either direction
};

// "qx2" or "qx4" (the two five-qubit layouts baked in). Throws
// std::invalid_argument for anything else.
CouplingMap builtin_map(std::string_view name);

// Orientation of the two coupling edges around the middle qubit m when a
// CNOT(a, c) needs routing:
//   A: a->m and c->m      B: m->a and m->c
//   C: m->a and c->m      D: a->m and m->c
enum class RoutedCase : char { A = 'A', B = 'B', C = 'C', D = 'D' };

struct CnotClass {
    enum Kind : std::uint8_t { Direct, Reversed, Routed } kind = Direct;
    std::uint8_t middle = 0;           // meaningful for Routed only
    RoutedCase routed_case = RoutedCase::A;

    bool operator==(const CnotClass&) const = default;
};

// Direct if (control,target) is an edge, Reversed if the opposite edge
// exists, otherwise Routed through the lowest-index qubit adjacent to both
// ends, picking the cheapest applicable case (D, then C, then B, then A).
// Throws mapping_error when no single-hop route exists.
CnotClass classify_cnot(const CouplingMap& m, unsigned control, unsigned target);

} // namespace qxmap
