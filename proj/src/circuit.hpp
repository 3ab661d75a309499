#pragma once

#include <cstdint>
#include <vector>

#include "gates.hpp"

namespace qxmap {

// placement[logical_line] = physical qubit; must be injective.
using LinePlacement = std::vector<std::uint8_t>;

LinePlacement identity_placement(unsigned n);

// Ordered gate list over `lines` qubit wires. output_map records a pending
// relabeling of the outputs: output_map[w] is the output label carried by
// wire w (identity unless relabel_tail has been applied). It is part of the
// circuit's meaning: wire w must be read as output output_map[w].
struct Circuit {
    unsigned lines = 1;
    std::vector<Gate> gates;
    std::vector<std::uint8_t> output_map;

    static Circuit empty(unsigned lines);

    bool identity_output_map() const;
    bool operator==(const Circuit&) const = default;
};

// Number of levels under greedy ASAP layering: a gate sits one level after
// the latest gate already placed on any of its wires.
unsigned depth(const Circuit& c);

// Relabels every gate wire l to p[l] and widens the circuit to target_lines.
// output_map is conjugated by the placement (extended with identity on the
// untouched wires). Throws std::invalid_argument on a bad placement.
Circuit permute_lines(const Circuit& c, const LinePlacement& p, unsigned target_lines);

} // namespace qxmap
