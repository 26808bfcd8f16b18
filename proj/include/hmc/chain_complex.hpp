#pragma once

// Boundary maps of a hypermap and their matrices over the quotient W / iota(E).
//
// Conventions: faces index the rows of p2, vertices the rows of p1, and the n
// basis vectors of the quotient index the columns of both. With the special
// basis those basis vectors are the nonspecial darts in ascending order.

#include <cstddef>
#include <string>
#include <vector>

#include "hmc/error.hpp"
#include "hmc/gf2.hpp"
#include "hmc/hypermap.hpp"

namespace hmc {

// Characteristic vector over all darts.
using DartSum = BitVector;

inline void check_special_darts(const Hypermap& h, const SpecialDartSet& s) {
    if (s.size() != h.hyperedges().size()) {
        throw DuplicateHyperedge("need exactly one special dart per hyperedge (" +
                                 std::to_string(h.hyperedges().size()) + "), got " + std::to_string(s.size()));
    }
    std::vector<bool> used(h.hyperedges().size(), false);
    for (auto d : s.darts()) {
        const std::size_t e = h.incident_edge(d);
        if (used[e]) throw DuplicateHyperedge("two special darts on hyperedge " + std::to_string(e + 1));
        used[e] = true;
    }
}

inline DartSum d2_face(const Hypermap& h, std::size_t face) {
    if (face >= h.faces().size()) throw OutOfRange("face index " + std::to_string(face + 1));
    DartSum out(h.dart_count());
    for (auto d : h.faces().orbits[face]) out.set(d, true);
    return out;
}

// v(i) + v(tau^-1(i)); zero when the two darts meet the same vertex.
inline BitVector d1_dart(const Hypermap& h, std::size_t dart) {
    BitVector out(h.vertices().size());
    out.flip(h.incident_vertex(dart));
    out.flip(h.incident_vertex(h.tau_inverse()(dart)));
    return out;
}

inline DartSum iota_edge(const Hypermap& h, std::size_t edge) {
    if (edge >= h.hyperedges().size()) throw OutOfRange("hyperedge index " + std::to_string(edge + 1));
    DartSum out(h.dart_count());
    for (auto d : h.hyperedges().orbits[edge]) out.set(d, true);
    return out;
}

// Rewrites every special dart of x as the sum of the remaining darts on its
// hyperedge, then restricts to the nonspecial coordinates.
inline BitVector project(const Hypermap& h, const SpecialDartSet& s, const DartSum& x) {
    if (x.size() != h.dart_count()) throw DimensionMismatch("dart sum has wrong length");
    DartSum y = x;
    for (auto special : s.darts()) {
        if (y.get(special)) y ^= iota_edge(h, h.incident_edge(special));
    }
    const auto basis = nonspecial_darts(h, s);
    BitVector out(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) out.set(k, y.get(basis[k]));
    return out;
}

enum class BasisKind { special, general };

struct QuotientBasis {
    BasisKind kind = BasisKind::special;
    std::vector<std::size_t> ordered_nonspecial;
    // Column j holds the special-basis coordinates of the j-th basis vector.
    BitMatrix change;
};

inline QuotientBasis special_basis(const Hypermap& h, const SpecialDartSet& s) {
    auto darts = nonspecial_darts(h, s);
    const std::size_t n = darts.size();
    return {BasisKind::special, std::move(darts), BitMatrix::identity(n)};
}

inline QuotientBasis general_basis(const Hypermap& h, const SpecialDartSet& s, BitMatrix change) {
    auto darts = nonspecial_darts(h, s);
    if (!change.square() || change.rows() != darts.size()) {
        throw DimensionMismatch("basis change must be " + std::to_string(darts.size()) + "x" +
                                std::to_string(darts.size()) + ", got " + change.shape());
    }
    if (rank(change) != darts.size()) throw SingularMatrix("basis change is not invertible");
    return {BasisKind::general, std::move(darts), std::move(change)};
}

struct BoundaryPair {
    BitMatrix p1;  // |V| x n
    BitMatrix p2;  // |F| x n, row f = coordinates of the boundary of face f

    bool chain_condition() const { return (p1 * p2.transpose()).is_zero(); }

    friend bool operator==(const BoundaryPair&, const BoundaryPair&) = default;
};

inline BoundaryPair boundary_pair(const Hypermap& h, const SpecialDartSet& s) {
    check_special_darts(h, s);
    const auto basis = nonspecial_darts(h, s);
    BoundaryPair bp{BitMatrix(h.vertices().size(), basis.size()), BitMatrix(0, basis.size())};
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const BitVector col = d1_dart(h, basis[k]);
        for (std::size_t v = 0; v < col.size(); ++v) {
            if (col.get(v)) bp.p1.set(v, k, true);
        }
    }
    for (std::size_t f = 0; f < h.faces().size(); ++f) bp.p2.append_row(project(h, s, d2_face(h, f)));
    return bp;
}

// Re-expresses both maps in the basis B' = T B: p1 becomes p1 T and the face
// coordinate rows become p2 (T^-1)ᵗ.
inline BoundaryPair apply_basis_change(const BoundaryPair& bp, const BitMatrix& t) {
    if (!t.square() || t.rows() != bp.p1.cols()) {
        throw DimensionMismatch("basis change " + t.shape() + " for " + std::to_string(bp.p1.cols()) + " qubits");
    }
    const BitMatrix t_inv = invert(t);
    return {bp.p1 * t, bp.p2 * t_inv.transpose()};
}

inline BoundaryPair boundary_pair(const Hypermap& h, const SpecialDartSet& s, const QuotientBasis& basis) {
    BoundaryPair bp = boundary_pair(h, s);
    if (basis.kind == BasisKind::special) return bp;
    return apply_basis_change(bp, basis.change);
}

}  // namespace hmc
