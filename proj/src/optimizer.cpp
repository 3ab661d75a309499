#include "optimizer.hpp"

#include <stdexcept>

#include "rewriter.hpp"

namespace qxmap {

CostReport cost(const Circuit& c) { return {c.gates.size(), depth(c)}; }

bool cost_less(const CostReport& a, const CostReport& b, CostMetric metric) {
    if (metric == CostMetric::GatesFirst) {
        if (a.gate_count != b.gate_count) return a.gate_count < b.gate_count;
        return a.depth < b.depth;
    }
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.gate_count < b.gate_count;
}

std::vector<LinePlacement> enumerate_placements(unsigned n, unsigned k) {
    if (n > k) throw std::invalid_argument("more logical lines than physical qubits");

    std::vector<LinePlacement> all;
    LinePlacement current;
    current.reserve(n);
    std::vector<bool> used(k, false);

    // depth-first in ascending physical order == lexicographic image tuples
    const auto rec = [&](auto&& self, unsigned line) -> void {
        if (line == n) {
            all.push_back(current);
            return;
        }
        for (unsigned phys = 0; phys < k; ++phys) {
            if (used[phys]) continue;
            used[phys] = true;
            current.push_back(static_cast<std::uint8_t>(phys));
            self(self, line + 1);
            current.pop_back();
            used[phys] = false;
        }
    };
    rec(rec, 0);
    return all;
}

OptimizeResult optimize(const Circuit& c, const CouplingMap& m, Strategy strategy,
                        CostMetric metric, bool search) {
    const std::vector<LinePlacement> candidates =
        search ? enumerate_placements(c.lines, m.qubits)
               : std::vector<LinePlacement>{identity_placement(c.lines)};

    OptimizeResult best;
    best.strategy = strategy;
    best.searched = search;
    bool have_best = false;

    for (const LinePlacement& p : candidates) {
        Circuit tmp = reduce(map_circuit(permute_lines(c, p, m.qubits), m, strategy),
                             /*extended=*/true);
        CostReport ct = cost(tmp);
        if (!have_best || cost_less(ct, best.cost, metric)) {
            best.circuit = std::move(tmp);
            best.placement = p;
            best.cost = ct;
            have_best = true;
        }
    }
    return best;
}

} // namespace qxmap
