#pragma once

// CSS codes (Hx, Hz), their parameters, a brute-force distance oracle and the
// CNOT-circuit realisation of a change of quotient basis.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hmc/chain_complex.hpp"
#include "hmc/error.hpp"
#include "hmc/gf2.hpp"
#include "hmc/hypermap.hpp"

namespace hmc {

class CssCode {
  public:
    CssCode() = default;
    CssCode(BitMatrix hx, BitMatrix hz) : hx_(std::move(hx)), hz_(std::move(hz)) {
        if (hx_.cols() != hz_.cols()) {
            throw DimensionMismatch("Hx has " + std::to_string(hx_.cols()) + " columns, Hz has " +
                                    std::to_string(hz_.cols()));
        }
        if (!(hx_ * hz_.transpose()).is_zero()) throw NotOrthogonal("Hx Hzᵗ != 0");
    }

    const BitMatrix& hx() const { return hx_; }
    const BitMatrix& hz() const { return hz_; }
    std::size_t qubits() const { return hx_.cols(); }

    friend bool operator==(const CssCode&, const CssCode&) = default;

  private:
    friend CssCode apply_cnot_unchecked(CssCode c, std::size_t control, std::size_t target);

    BitMatrix hx_;
    BitMatrix hz_;
};

struct DistanceReport {
    // Empty when there are no logical operators (k = 0).
    std::optional<std::size_t> d;
    std::optional<std::size_t> d_x;
    std::optional<std::size_t> d_z;
};

struct CodeParams {
    std::size_t n = 0;
    std::size_t k = 0;
    std::optional<DistanceReport> distance;
};

inline CssCode code_from_boundary(const BoundaryPair& bp) { return CssCode(bp.p1, bp.p2); }

inline CssCode build_canonical(const Hypermap& h, const SpecialDartSet& s) {
    return code_from_boundary(boundary_pair(h, s));
}

inline std::size_t logical_count(const CssCode& c) { return c.qubits() - rank(c.hx()) - rank(c.hz()); }

inline constexpr std::size_t kDistanceQubitLimit = 24;

namespace detail {

inline std::uint32_t to_mask(const BitVector& v) {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v.get(i)) m |= std::uint32_t{1} << i;
    }
    return m;
}

// Smallest weight of v with checks·vᵗ = 0 and v outside rowspace(stabilizers).
inline std::optional<std::size_t> min_logical_weight(const BitMatrix& checks, const BitMatrix& stabilizers) {
    const std::size_t n = checks.cols();
    std::vector<std::uint32_t> check_rows;
    for (const auto& r : checks.row_list()) {
        if (r.any()) check_rows.push_back(to_mask(r));
    }
    const Echelon e = row_reduce(stabilizers);
    std::vector<std::uint32_t> basis;
    std::vector<std::uint32_t> pivot_bits;
    for (std::size_t k = 0; k < e.rows.size(); ++k) {
        basis.push_back(to_mask(e.rows[k]));
        pivot_bits.push_back(std::uint32_t{1} << e.pivots[k]);
    }
    for (std::size_t w = 1; w <= n; ++w) {
        // Gosper's hack walks all n-bit words of weight w in increasing order.
        std::uint64_t v = (std::uint64_t{1} << w) - 1;
        const std::uint64_t end = std::uint64_t{1} << n;
        while (v < end) {
            const auto word = static_cast<std::uint32_t>(v);
            bool commutes = true;
            for (auto row : check_rows) {
                if (std::popcount(row & word) & 1) {
                    commutes = false;
                    break;
                }
            }
            if (commutes) {
                std::uint32_t rest = word;
                for (std::size_t k = 0; k < basis.size(); ++k) {
                    if (rest & pivot_bits[k]) rest ^= basis[k];
                }
                if (rest != 0) return w;
            }
            const std::uint64_t low = v & (~v + 1);
            const std::uint64_t ripple = v + low;
            v = (((ripple ^ v) >> 2) / low) | ripple;
        }
    }
    return std::nullopt;
}

}  // namespace detail

// d_Z: lightest Z-type logical (in ker Hx, outside rowspace Hz); d_X likewise
// with the roles swapped. Weight-ordered enumeration, so n is capped.
inline DistanceReport distance_bruteforce(const CssCode& c) {
    if (c.qubits() > kDistanceQubitLimit) {
        throw TooLarge("distance oracle handles at most " + std::to_string(kDistanceQubitLimit) + " qubits, code has " +
                       std::to_string(c.qubits()));
    }
    DistanceReport r;
    r.d_z = detail::min_logical_weight(c.hx(), c.hz());
    r.d_x = detail::min_logical_weight(c.hz(), c.hx());
    if (r.d_x && r.d_z) r.d = std::min(*r.d_x, *r.d_z);
    return r;
}

inline CodeParams params(const CssCode& c, bool with_distance = false) {
    CodeParams p{c.qubits(), logical_count(c), std::nullopt};
    if (with_distance) p.distance = distance_bruteforce(c);
    return p;
}

// 0-based qubit indices.
struct CnotGate {
    std::size_t control = 0;
    std::size_t target = 0;

    friend bool operator==(const CnotGate&, const CnotGate&) = default;
};

struct CnotCircuit {
    std::size_t qubits = 0;
    std::vector<CnotGate> gates;
};

// Gate l is (i_l -> j_l) for T = R_{j_1}^{i_1} ... R_{j_m}^{i_m}.
inline CnotCircuit cnot_circuit(const BitMatrix& t) {
    CnotCircuit circuit{t.rows(), {}};
    for (const auto& f : decompose_elementary(t)) circuit.gates.push_back({f.source, f.dest});
    return circuit;
}

inline CssCode apply_cnot_unchecked(CssCode c, std::size_t control, std::size_t target) {
    c.hx_.add_column(control, target);
    c.hz_.add_column(target, control);
    return c;
}

// Hx: column control -> target. Hz: column target -> control.
inline CssCode apply_cnot(const CssCode& c, const CnotGate& g) {
    if (g.control == g.target) throw OutOfRange("CNOT control and target coincide");
    if (g.control >= c.qubits() || g.target >= c.qubits()) {
        throw OutOfRange("CNOT on qubit outside 1.." + std::to_string(c.qubits()));
    }
    return apply_cnot_unchecked(c, g.control, g.target);
}

inline CssCode apply_circuit(CssCode c, const CnotCircuit& circuit) {
    for (const auto& g : circuit.gates) c = apply_cnot(c, g);
    return c;
}

inline CssCode transform(const CssCode& c, const BitMatrix& t) {
    if (!t.square() || t.rows() != c.qubits()) {
        throw DimensionMismatch("basis change " + t.shape() + " for " + std::to_string(c.qubits()) + " qubits");
    }
    return apply_circuit(c, cnot_circuit(t));
}

inline bool stabilizer_equal(const CssCode& a, const CssCode& b) {
    if (a.qubits() != b.qubits()) {
        throw DimensionMismatch("codes on " + std::to_string(a.qubits()) + " and " + std::to_string(b.qubits()) +
                                " qubits");
    }
    return row_space_equal(a.hx(), b.hx()) && row_space_equal(a.hz(), b.hz());
}

// Row-reduced generators with dependent rows dropped; same code.
inline CssCode reduce(const CssCode& c) { return CssCode(reduce_rows(c.hx()), reduce_rows(c.hz())); }

inline void write_stabilizer(std::ostream& os, const CssCode& c) {
    os << "Hx\n";
    write_matrix(os, c.hx());
    os << "Hz\n";
    write_matrix(os, c.hz());
}

inline CssCode read_stabilizer(std::istream& is) {
    std::string tag;
    if (!(is >> tag) || tag != "Hx") throw ParseError("stabilizer file must start with an \"Hx\" section");
    BitMatrix hx = read_matrix(is);
    if (!(is >> tag) || tag != "Hz") throw ParseError("expected an \"Hz\" section after Hx");
    BitMatrix hz = read_matrix(is);
    return CssCode(std::move(hx), std::move(hz));
}

}  // namespace hmc
