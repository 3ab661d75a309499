#pragma once

#include <cstdint>
#include <string_view>

namespace qxmap {

enum class GateKind : std::uint8_t { H, X, Z, S, Sdg, T, Tdg, CX };

constexpr bool is_two_qubit(GateKind k) { return k == GateKind::CX; }

// Diagonal in the computational basis: commutes with any other diagonal
// gate on the same line, and through a CNOT control.
constexpr bool is_diagonal(GateKind k) {
    return k == GateKind::Z || k == GateKind::S || k == GateKind::Sdg ||
           k == GateKind::T || k == GateKind::Tdg;
}

constexpr GateKind inverse_of(GateKind k) {
    switch (k) {
        case GateKind::S:   return GateKind::Sdg;
        case GateKind::Sdg: return GateKind::S;
        case GateKind::T:   return GateKind::Tdg;
        case GateKind::Tdg: return GateKind::T;
        default:            return k; // H, X, Z, CX are self-inverse
    }
}

constexpr std::string_view kind_name(GateKind k) {
    switch (k) {
        case GateKind::H:   return "h";
        case GateKind::X:   return "x";
        case GateKind::Z:   return "z";
        case GateKind::S:   return "s";
        case GateKind::Sdg: return "sdg";
        case GateKind::T:   return "t";
        case GateKind::Tdg: return "tdg";
        case GateKind::CX:  return "cx";
    }
    return "?";
}

// For CX, q0 is the control and q1 the target. Single-qubit gates use q0
// and keep q1 at zero so that aggregate equality is well defined.
struct Gate {
    GateKind kind;
    std::uint8_t q0;
    std::uint8_t q1;

    static Gate single(GateKind k, unsigned q) {
        return Gate{k, static_cast<std::uint8_t>(q), 0};
    }
    static Gate cx(unsigned control, unsigned target) {
        return Gate{GateKind::CX, static_cast<std::uint8_t>(control),
                    static_cast<std::uint8_t>(target)};
    }

    bool is_cx() const { return kind == GateKind::CX; }
    unsigned arity() const { return is_cx() ? 2u : 1u; }
    bool touches(unsigned q) const {
        return q0 == q || (is_cx() && q1 == q);
    }
    bool disjoint_from(const Gate& other) const {
        return !other.touches(q0) && (!is_cx() || !other.touches(q1));
    }

    bool operator==(const Gate&) const = default;
};

} // namespace qxmap
