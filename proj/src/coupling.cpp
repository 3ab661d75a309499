#include "coupling.hpp"

#include <algorithm>
#include <stdexcept>

#include "errors.hpp"

namespace qxmap {

bool CouplingMap::has_edge(unsigned control, unsigned target) const {
    return std::binary_search(edges.begin(), edges.end(),
                              std::make_pair(static_cast<std::uint8_t>(control),
                                             static_cast<std::uint8_t>(target)));
}

bool CouplingMap::adjacent(unsigned a, unsigned b) const {
    return has_edge(a, b) || has_edge(b, a);
}

CouplingMap builtin_map(std::string_view name) {
    CouplingMap m;
    m.qubits = 5;
    if (name == "qx2") {
        m.edges = {{0, 1}, {0, 2}, {1, 2}, {3, 2}, {3, 4}, {4, 2}};
    } else if (name == "qx4") {
        m.edges = {{1, 0}, {2, 0}, {2, 1}, {2, 4}, {3, 2}, {3, 4}};
    } else {
        throw std::invalid_argument("unknown architecture '" + std::string(name) +
                                    "' (valid: qx2, qx4)");
    }
    std::sort(m.edges.begin(), m.edges.end());
    return m;
}

CnotClass classify_cnot(const CouplingMap& m, unsigned control, unsigned target) {
    if (control == target || control >= m.qubits || target >= m.qubits)
        throw std::invalid_argument("bad CNOT qubits for this coupling map");

    if (m.has_edge(control, target)) return {CnotClass::Direct, 0, RoutedCase::A};
    if (m.has_edge(target, control)) return {CnotClass::Reversed, 0, RoutedCase::A};

    for (unsigned mid = 0; mid < m.qubits; ++mid) {
        if (mid == control || mid == target) continue;
        if (!m.adjacent(control, mid) || !m.adjacent(target, mid)) continue;

        const bool am = m.has_edge(control, mid); // a->m
        const bool ma = m.has_edge(mid, control); // m->a
        const bool mc = m.has_edge(mid, target);  // m->c
        const bool cm = m.has_edge(target, mid);  // c->m

        // cheapest case first when several orientations are available
        if (am && mc) return {CnotClass::Routed, static_cast<std::uint8_t>(mid), RoutedCase::D};
        if (ma && cm) return {CnotClass::Routed, static_cast<std::uint8_t>(mid), RoutedCase::C};
        if (ma && mc) return {CnotClass::Routed, static_cast<std::uint8_t>(mid), RoutedCase::B};
        if (am && cm) return {CnotClass::Routed, static_cast<std::uint8_t>(mid), RoutedCase::A};
    }
    throw mapping_error("no single-hop route for CNOT(" + std::to_string(control) +
                        "," + std::to_string(target) + ")");
}

} // namespace qxmap
