#include "mapper.hpp"

#include <stdexcept>

#include "errors.hpp"

namespace qxmap {

namespace {

Gate H(unsigned q) { return Gate::single(GateKind::H, q); }
Gate CX(unsigned c, unsigned t) { return Gate::cx(c, t); }

} // namespace

std::vector<Gate> map_reversed_cnot(unsigned control, unsigned target) {
    return {H(control), H(target), CX(target, control), H(control), H(target)};
}

std::vector<Gate> map_routed_cnot(const CnotClass& cls, unsigned a, unsigned c,
                                  Strategy strategy) {
    if (cls.kind != CnotClass::Routed)
        throw std::invalid_argument("map_routed_cnot needs a Routed classification");
    const unsigned m = cls.middle;

    if (strategy == Strategy::Template) {
        switch (cls.routed_case) {
            case RoutedCase::A: // edges a->m, c->m
                return {CX(a, m), H(m), H(c), CX(c, m), H(m),
                        CX(a, m), H(m), CX(c, m), H(m), H(c)};
            case RoutedCase::B: // edges m->a, m->c
                return {CX(m, c), H(a), H(m), CX(m, a), H(m),
                        CX(m, c), H(m), CX(m, a), H(m), H(a)};
            case RoutedCase::C: // edges m->a, c->m
                return {H(a), H(c), CX(c, m), CX(m, a), CX(c, m), CX(m, a), H(c), H(a)};
            case RoutedCase::D: // edges a->m, m->c: plain four-CNOT identity
                return {CX(a, m), CX(m, c), CX(a, m), CX(m, c)};
        }
    } else {
        // swap-based: move one end next to the other, apply, move back; the
        // swap CNOTs that cancel against each other are already removed
        switch (cls.routed_case) {
            case RoutedCase::A:
                return {CX(c, m), H(c), H(m), CX(c, m), H(m), CX(a, m),
                        H(m), CX(c, m), H(m), H(c), CX(c, m)};
            case RoutedCase::B:
                return {CX(m, a), H(m), H(a), CX(m, a), H(m), CX(m, c),
                        H(m), CX(m, a), H(m), H(a), CX(m, a)};
            case RoutedCase::C:
                return {CX(c, m), H(m), H(c), CX(c, m), H(a), CX(m, a),
                        H(a), CX(c, m), H(m), H(c), CX(c, m)};
            case RoutedCase::D:
                return {H(a), CX(a, m), H(a), H(m), CX(a, m), CX(m, c),
                        CX(a, m), H(m), H(a), CX(a, m), H(a)};
        }
    }
    throw std::logic_error("unreachable routed case");
}

Circuit map_circuit(const Circuit& c, const CouplingMap& m, Strategy strategy) {
    if (c.lines > m.qubits)
        throw mapping_error("circuit needs " + std::to_string(c.lines) +
                            " lines but the coupling map has " + std::to_string(m.qubits) +
                            " qubits");

    Circuit out = Circuit::empty(m.qubits);
    out.gates.reserve(c.gates.size());
    for (unsigned w = 0; w < c.lines; ++w) out.output_map[w] = c.output_map[w];

    for (const Gate& g : c.gates) {
        if (!g.is_cx()) {
            out.gates.push_back(g);
            continue;
        }
        const CnotClass cls = classify_cnot(m, g.q0, g.q1);
        switch (cls.kind) {
            case CnotClass::Direct:
                out.gates.push_back(g);
                break;
            case CnotClass::Reversed: {
                const auto seq = map_reversed_cnot(g.q0, g.q1);
                out.gates.insert(out.gates.end(), seq.begin(), seq.end());
                break;
            }
            case CnotClass::Routed: {
                const auto seq = map_routed_cnot(cls, g.q0, g.q1, strategy);
                out.gates.insert(out.gates.end(), seq.begin(), seq.end());
                break;
            }
        }
    }
    return out;
}

bool is_legal(const Circuit& c, const CouplingMap& m) {
    if (c.lines > m.qubits) return false;
    for (const Gate& g : c.gates)
        if (g.is_cx() && !m.has_edge(g.q0, g.q1)) return false;
    return true;
}

} // namespace qxmap
