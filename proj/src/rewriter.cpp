#include "rewriter.hpp"

#include <stdexcept>
#include <utility>

namespace qxmap {

bool commutes(const Gate& g1, const Gate& g2, bool extended) {
    if (g1.disjoint_from(g2)) return true;

    const bool cx1 = g1.is_cx();
    const bool cx2 = g2.is_cx();
    if (!cx1 && !cx2)
        return g1.q0 == g2.q0 && is_diagonal(g1.kind) && is_diagonal(g2.kind);
    if (cx1 && cx2)
        return g1.q0 != g2.q1 && g1.q1 != g2.q0;

    if (extended) {
        // a diagonal gate passes through the control of a CNOT
        const Gate& sq = cx1 ? g2 : g1;
        const Gate& cx = cx1 ? g1 : g2;
        return is_diagonal(sq.kind) && sq.q0 == cx.q0;
    }
    return false;
}

ReductionOutcome merge_adjacent(const Gate& g1, const Gate& g2) {
    if (g1.is_cx() || g2.is_cx()) {
        if (g1 == g2 && g1.is_cx()) return {ReductionOutcome::Eliminate, {}};
        return {};
    }
    if (g1.q0 != g2.q0) return {};

    const GateKind a = g1.kind;
    const GateKind b = g2.kind;
    if (b == inverse_of(a)) return {ReductionOutcome::Eliminate, {}}; // covers HH, XX, ZZ, S·Sdg, T·Tdg
    if (a == b) {
        switch (a) {
            case GateKind::T:   return {ReductionOutcome::Merge, Gate::single(GateKind::S, g1.q0)};
            case GateKind::Tdg: return {ReductionOutcome::Merge, Gate::single(GateKind::Sdg, g1.q0)};
            case GateKind::S:   return {ReductionOutcome::Merge, Gate::single(GateKind::Z, g1.q0)};
            case GateKind::Sdg: return {ReductionOutcome::Merge, Gate::single(GateKind::Z, g1.q0)};
            default: break;
        }
    }
    return {};
}

Circuit reduce(const Circuit& c, bool extended) {
    Circuit out = c;
    auto& gates = out.gates;

    bool changed = true;
    while (changed) {
        changed = false;
        std::size_t i = 1;
        while (i < gates.size()) {
            bool fired = false;
            for (std::size_t j = i; j > 0; --j) {
                const ReductionOutcome r = merge_adjacent(gates[j - 1], gates[i]);
                if (r.kind != ReductionOutcome::None) {
                    if (r.kind == ReductionOutcome::Merge) {
                        gates[j - 1] = r.replacement;
                        gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(i));
                    } else {
                        gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(i));
                        gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(j - 1));
                    }
                    i = (j - 1 > 1) ? j - 1 : 1;
                    fired = true;
                    changed = true;
                    break;
                }
                if (!commutes(gates[j - 1], gates[i], extended)) break;
            }
            if (!fired) ++i;
        }
    }
    return out;
}

Circuit relabel_tail(const Circuit& c, std::size_t position, unsigned q1, unsigned q2) {
    if (position > c.gates.size())
        throw std::invalid_argument("relabel position out of range");
    if (q1 == q2 || q1 >= c.lines || q2 >= c.lines)
        throw std::invalid_argument("relabel needs two distinct lines of the circuit");

    const auto swap_wire = [&](std::uint8_t w) -> std::uint8_t {
        if (w == q1) return static_cast<std::uint8_t>(q2);
        if (w == q2) return static_cast<std::uint8_t>(q1);
        return w;
    };

    Circuit out = c;
    for (std::size_t i = position; i < out.gates.size(); ++i) {
        Gate& g = out.gates[i];
        g.q0 = swap_wire(g.q0);
        if (g.is_cx()) g.q1 = swap_wire(g.q1);
    }
    std::swap(out.output_map[q1], out.output_map[q2]);
    return out;
}

} // namespace qxmap
