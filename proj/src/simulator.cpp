#include "simulator.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "errors.hpp"

namespace qxmap {

namespace {

constexpr unsigned kMaxLines = 10;

using cd = std::complex<double>;

struct Mat2 {
    cd a, b, c, d; // [[a,b],[c,d]]
};

Mat2 single_qubit_matrix(GateKind k) {
    const double s = 1.0 / std::sqrt(2.0);
    const cd i(0.0, 1.0);
    const cd t = std::polar(1.0, std::numbers::pi / 4.0);
    switch (k) {
        case GateKind::H:   return {s, s, s, -s};
        case GateKind::X:   return {0, 1, 1, 0};
        case GateKind::Z:   return {1, 0, 0, -1};
        case GateKind::S:   return {1, 0, 0, i};
        case GateKind::Sdg: return {1, 0, 0, -i};
        case GateKind::T:   return {1, 0, 0, t};
        case GateKind::Tdg: return {1, 0, 0, std::conj(t)};
        case GateKind::CX:  break;
    }
    throw std::logic_error("not a single-qubit kind");
}

// U <- G·U, applied in place one column at a time.
void apply_gate(Unitary& u, const Gate& g) {
    const Eigen::Index dim = u.rows();
    if (g.kind == GateKind::CX) {
        const Eigen::Index cmask = Eigen::Index(1) << g.q0;
        const Eigen::Index tmask = Eigen::Index(1) << g.q1;
        for (Eigen::Index col = 0; col < dim; ++col) {
            for (Eigen::Index r = 0; r < dim; ++r) {
                if ((r & cmask) && !(r & tmask))
                    std::swap(u(r, col), u(r | tmask, col));
            }
        }
        return;
    }
    const Mat2 m = single_qubit_matrix(g.kind);
    const Eigen::Index mask = Eigen::Index(1) << g.q0;
    for (Eigen::Index col = 0; col < dim; ++col) {
        for (Eigen::Index r = 0; r < dim; ++r) {
            if (r & mask) continue;
            const cd lo = u(r, col);
            const cd hi = u(r | mask, col);
            u(r, col) = m.a * lo + m.b * hi;
            u(r | mask, col) = m.c * lo + m.d * hi;
        }
    }
}

Eigen::Index dimension_for(unsigned lines) {
    if (lines > kMaxLines) throw dimension_error("dimension too large");
    return Eigen::Index(1) << lines;
}

} // namespace

Unitary circuit_unitary(const Circuit& c) {
    Unitary u = Unitary::Identity(dimension_for(c.lines), dimension_for(c.lines));
    for (const Gate& g : c.gates) apply_gate(u, g);
    return u;
}

Unitary gate_unitary(const Gate& g, unsigned lines) {
    Unitary u = Unitary::Identity(dimension_for(lines), dimension_for(lines));
    apply_gate(u, g);
    return u;
}

Unitary basis_permutation(const std::vector<std::uint8_t>& sigma) {
    const unsigned n = static_cast<unsigned>(sigma.size());
    const Eigen::Index dim = dimension_for(n);
    Unitary p = Unitary::Zero(dim, dim);
    for (Eigen::Index b = 0; b < dim; ++b) {
        Eigen::Index img = 0;
        for (unsigned w = 0; w < n; ++w)
            if (b & (Eigen::Index(1) << w)) img |= Eigen::Index(1) << sigma[w];
        p(img, b) = 1.0;
    }
    return p;
}

Unitary semantic_unitary(const Circuit& c) {
    Unitary u = circuit_unitary(c);
    if (c.identity_output_map()) return u;
    return basis_permutation(c.output_map) * u;
}

bool equivalent(const Circuit& c1, const Circuit& c2, const LinePlacement& placement,
                double tol) {
    const Circuit embedded = permute_lines(c1, placement, c2.lines);
    const Unitary ref = semantic_unitary(embedded);
    const Unitary got = semantic_unitary(c2);

    // normalize the global phase from the first non-negligible reference entry
    std::complex<double> phase(1.0, 0.0);
    bool found = false;
    for (Eigen::Index col = 0; col < ref.cols() && !found; ++col) {
        for (Eigen::Index row = 0; row < ref.rows(); ++row) {
            if (std::abs(ref(row, col)) > 1e-9) {
                if (std::abs(got(row, col)) <= 1e-9) return false;
                phase = got(row, col) / ref(row, col);
                found = true;
                break;
            }
        }
    }
    return (got - phase * ref).cwiseAbs().maxCoeff() <= tol;
}

bool equivalent(const Circuit& c1, const Circuit& c2, double tol) {
    return equivalent(c1, c2, identity_placement(c1.lines), tol);
}

} // namespace qxmap
