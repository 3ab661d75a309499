#pragma once

#include <cstddef>
#include <vector>

#include "circuit.hpp"
#include "coupling.hpp"
#include "mapper.hpp"

namespace qxmap {

struct CostReport {
    std::size_t gate_count = 0;
    unsigned depth = 0;

    bool operator==(const CostReport&) const = default;
};

enum class CostMetric { GatesFirst, DepthFirst };

CostReport cost(const Circuit& c);

// strict lexicographic comparison under the chosen metric
bool cost_less(const CostReport& a, const CostReport& b, CostMetric metric);

// All injective maps {0..n-1} -> {0..k-1} in lexicographic order of the
// image tuple; k!/(k-n)! entries, the identity embedding first.
std::vector<LinePlacement> enumerate_placements(unsigned n, unsigned k);

struct OptimizeResult {
    Circuit circuit;
    LinePlacement placement;
    CostReport cost;
    Strategy strategy = Strategy::Template;
    bool searched = false;
};

// Map + reduce under the identity embedding; with `search` set, try every
// line placement and keep the cheapest result (ties broken by enumeration
// order, so the outcome does not depend on evaluation order).
OptimizeResult optimize(const Circuit& c, const CouplingMap& m, Strategy strategy,
                        CostMetric metric, bool search);

} // namespace qxmap
