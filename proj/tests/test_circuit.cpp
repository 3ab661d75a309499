#include <doctest.h>

#include <algorithm>
#include <random>

#include "circuit.hpp"
#include "simulator.hpp"
#include "testutil.hpp"

using namespace qxmap;

TEST_CASE("depth: empty circuit has no levels") {
    CHECK(depth(Circuit::empty(3)) == 0);
}

TEST_CASE("depth: disjoint gates share a level") {
    Circuit c = Circuit::empty(2);
    c.gates = {Gate::single(GateKind::H, 0), Gate::single(GateKind::H, 1)};
    CHECK(depth(c) == 1);
}

TEST_CASE("depth: ASAP layering chains through shared wires") {
    Circuit c = Circuit::empty(2);
    c.gates = {Gate::single(GateKind::H, 0), Gate::cx(0, 1), Gate::single(GateKind::H, 1)};
    CHECK(depth(c) == 3);
}

TEST_CASE("depth bounds: at most the gate count, exactly it on one wire") {
    Circuit c = Circuit::empty(1);
    for (int i = 0; i < 7; ++i) c.gates.push_back(Gate::single(GateKind::T, 0));
    CHECK(depth(c) == 7);

    std::mt19937 rng(11);
    for (int i = 0; i < 20; ++i) {
        const Circuit r = testutil::random_circuit(rng);
        CHECK(depth(r) <= r.gates.size());
    }
}

TEST_CASE("permute_lines: swap relabel") {
    Circuit c = Circuit::empty(2);
    c.gates = {Gate::cx(0, 1)};
    const Circuit p = permute_lines(c, {1, 0}, 2);
    CHECK(p.gates == std::vector<Gate>{Gate::cx(1, 0)});
}

TEST_CASE("permute_lines: identity is a no-op") {
    std::mt19937 rng(12);
    const Circuit c = testutil::random_circuit(rng);
    CHECK(permute_lines(c, identity_placement(c.lines), c.lines) == c);
}

TEST_CASE("permute_lines: embedding onto five lines") {
    Circuit c = Circuit::empty(2);
    c.gates = {Gate::single(GateKind::H, 0), Gate::cx(0, 1)};
    const Circuit p = permute_lines(c, {2, 4}, 5);
    CHECK(p.lines == 5);
    CHECK(p.gates == std::vector<Gate>{Gate::single(GateKind::H, 2), Gate::cx(2, 4)});
}

TEST_CASE("permute_lines rejects non-injective placements") {
    Circuit c = Circuit::empty(2);
    CHECK_THROWS_AS(permute_lines(c, {1, 1}, 2), std::invalid_argument);
    CHECK_THROWS_AS(permute_lines(c, {0}, 2), std::invalid_argument);
    CHECK_THROWS_AS(permute_lines(c, {0, 5}, 2), std::invalid_argument);
}

TEST_CASE("depth is invariant under line permutation") {
    std::mt19937 rng(13);
    for (int i = 0; i < 20; ++i) {
        const Circuit c = testutil::random_circuit(rng);
        LinePlacement p = identity_placement(5);
        std::shuffle(p.begin(), p.end(), rng);
        p.resize(c.lines); // prefix of a permutation stays injective
        CHECK(depth(permute_lines(c, p, 5)) == depth(c));
    }
}

TEST_CASE("permute_lines conjugates the unitary by the basis permutation") {
    std::mt19937 rng(14);
    for (int i = 0; i < 15; ++i) {
        const Circuit c = testutil::random_circuit(rng, 4, 12);
        LinePlacement full = identity_placement(5);
        std::shuffle(full.begin(), full.end(), rng);
        LinePlacement p(full.begin(), full.begin() + c.lines);

        const Circuit moved = permute_lines(c, p, 5);

        std::vector<std::uint8_t> sigma(5);
        for (unsigned w = 0; w < 5; ++w) sigma[w] = w;
        for (unsigned l = 0; l < c.lines; ++l) sigma[l] = p[l];
        // complete sigma into a bijection on 5 wires: unused physical qubits
        // take the remaining logical slots in order
        std::vector<bool> taken(5, false);
        for (unsigned l = 0; l < c.lines; ++l) taken[p[l]] = true;
        unsigned next = c.lines;
        for (unsigned phys = 0; phys < 5; ++phys)
            if (!taken[phys]) sigma[next++] = phys;

        const Circuit embedded = permute_lines(c, identity_placement(c.lines), 5);
        const Unitary lhs = circuit_unitary(moved);
        const Unitary perm = basis_permutation(sigma);
        const Unitary rhs = perm * circuit_unitary(embedded) * perm.adjoint();
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-10);
    }
}
