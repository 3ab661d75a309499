#include "circuit.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qxmap {

LinePlacement identity_placement(unsigned n) {
    LinePlacement p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Circuit Circuit::empty(unsigned lines) {
    if (lines == 0) throw std::invalid_argument("circuit needs at least one line");
    Circuit c;
    c.lines = lines;
    c.output_map.resize(lines);
    std::iota(c.output_map.begin(), c.output_map.end(), 0);
    return c;
}

bool Circuit::identity_output_map() const {
    for (unsigned w = 0; w < output_map.size(); ++w)
        if (output_map[w] != w) return false;
    return true;
}

unsigned depth(const Circuit& c) {
    std::vector<unsigned> level(c.lines, 0);
    unsigned max_level = 0;
    for (const Gate& g : c.gates) {
        unsigned l = level[g.q0];
        if (g.is_cx()) l = std::max(l, level[g.q1]);
        ++l;
        level[g.q0] = l;
        if (g.is_cx()) level[g.q1] = l;
        max_level = std::max(max_level, l);
    }
    return max_level;
}

static void check_placement(const LinePlacement& p, unsigned domain, unsigned target) {
    if (p.size() != domain)
        throw std::invalid_argument("placement domain does not match circuit lines");
    std::vector<bool> used(target, false);
    for (std::uint8_t phys : p) {
        if (phys >= target || used[phys])
            throw std::invalid_argument("invalid placement");
        used[phys] = true;
    }
}

Circuit permute_lines(const Circuit& c, const LinePlacement& p, unsigned target_lines) {
    check_placement(p, c.lines, target_lines);

    Circuit out = Circuit::empty(target_lines);
    out.gates.reserve(c.gates.size());
    for (const Gate& g : c.gates) {
        if (g.is_cx())
            out.gates.push_back(Gate::cx(p[g.q0], p[g.q1]));
        else
            out.gates.push_back(Gate::single(g.kind, p[g.q0]));
    }
    // conjugate the output map: wire p[l] carries what wire l carried, with
    // the label itself renamed through the placement as well
    for (unsigned l = 0; l < c.lines; ++l)
        out.output_map[p[l]] = p[c.output_map[l]];
    return out;
}

} // namespace qxmap
