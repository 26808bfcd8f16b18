#pragma once

// Dense linear algebra over GF(2).
//
// Vectors are bit-packed into 64-bit words; matrices are stored as a list of
// row vectors. All operations are value-semantic and pure, so concurrent use
// of shared const instances is safe.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hmc/error.hpp"

namespace hmc {

class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    static BitVector from_bits(const std::vector<int>& bits) {
        BitVector v(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (bits[i] != 0 && bits[i] != 1) {
                throw ParseError("bit value must be 0 or 1, got " + std::to_string(bits[i]));
            }
            v.set(i, bits[i] == 1);
        }
        return v;
    }
    static BitVector from_bits(std::initializer_list<int> bits) { return from_bits(std::vector<int>(bits)); }

    static BitVector unit(std::size_t size, std::size_t index) {
        BitVector v(size);
        v.set(index, true);
        return v;
    }

    std::size_t size() const { return size_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    bool operator[](std::size_t i) const { return get(i); }

    void set(std::size_t i, bool value) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }

    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    std::size_t weight() const {
        std::size_t w = 0;
        for (auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
        return w;
    }

    bool any() const {
        return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
    }
    bool none() const { return !any(); }

    // Index of the lowest set bit, if any.
    std::optional<std::size_t> first_set() const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            if (words_[k] != 0) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
        }
        return std::nullopt;
    }

    // Inner product over GF(2).
    bool dot(const BitVector& other) const {
        check_same_size(other);
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < words_.size(); ++k) acc ^= words_[k] & other.words_[k];
        return std::popcount(acc) & 1;
    }

    BitVector& operator^=(const BitVector& other) {
        check_same_size(other);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
        return *this;
    }

    friend BitVector operator^(BitVector a, const BitVector& b) {
        a ^= b;
        return a;
    }

    friend bool operator==(const BitVector&, const BitVector&) = default;

    std::vector<std::size_t> support() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < size_; ++i) {
            if (get(i)) out.push_back(i);
        }
        return out;
    }

    std::vector<int> to_bits() const {
        std::vector<int> out(size_);
        for (std::size_t i = 0; i < size_; ++i) out[i] = get(i) ? 1 : 0;
        return out;
    }

    // "0 1 1 0" style, matching one row of the matrix text format.
    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < size_; ++i) {
            if (i) s += ' ';
            s += get(i) ? '1' : '0';
        }
        return s;
    }

  private:
    void check_same_size(const BitVector& other) const {
        if (other.size_ != size_) {
            throw DimensionMismatch("bit vectors of length " + std::to_string(size_) + " and " +
                                    std::to_string(other.size_));
        }
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

    static BitMatrix identity(std::size_t n) {
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    static BitMatrix from_rows(const std::vector<std::vector<int>>& rows, std::size_t cols) {
        BitMatrix m(0, cols);
        for (const auto& r : rows) {
            if (r.size() != cols) throw DimensionMismatch("ragged row in matrix literal");
            m.append_row(BitVector::from_bits(r));
        }
        return m;
    }
    static BitMatrix from_rows(const std::vector<std::vector<int>>& rows) {
        return from_rows(rows, rows.empty() ? 0 : rows.front().size());
    }
    static BitMatrix from_rows(std::vector<BitVector> rows, std::size_t cols) {
        BitMatrix m(0, cols);
        for (auto& r : rows) m.append_row(std::move(r));
        return m;
    }

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows() == cols(); }

    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool value) { rows_[r].set(c, value); }

    const BitVector& row(std::size_t r) const { return rows_[r]; }
    void set_row(std::size_t r, BitVector v) {
        if (v.size() != cols_) throw DimensionMismatch("row length does not match column count");
        rows_[r] = std::move(v);
    }
    void append_row(BitVector v) {
        if (v.size() != cols_) throw DimensionMismatch("row length does not match column count");
        rows_.push_back(std::move(v));
    }
    const std::vector<BitVector>& row_list() const { return rows_; }

    BitVector column(std::size_t c) const {
        BitVector v(rows());
        for (std::size_t r = 0; r < rows(); ++r) v.set(r, get(r, c));
        return v;
    }

    // Column `dst` += column `src`; this is right-multiplication by I + e_src e_dstᵗ.
    void add_column(std::size_t src, std::size_t dst) {
        for (auto& r : rows_) {
            if (r.get(src)) r.flip(dst);
        }
    }

    BitMatrix transpose() const {
        BitMatrix t(cols_, rows());
        for (std::size_t r = 0; r < rows(); ++r) {
            for (std::size_t c = 0; c < cols_; ++c) {
                if (get(r, c)) t.set(c, r, true);
            }
        }
        return t;
    }

    // M · vᵗ, one parity per row.
    BitVector apply(const BitVector& v) const {
        if (v.size() != cols_) throw DimensionMismatch("vector length does not match column count");
        BitVector out(rows());
        for (std::size_t r = 0; r < rows(); ++r) out.set(r, rows_[r].dot(v));
        return out;
    }

    friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
        if (a.cols() != b.rows()) {
            throw DimensionMismatch("cannot multiply " + a.shape() + " by " + b.shape());
        }
        BitMatrix out(a.rows(), b.cols());
        for (std::size_t r = 0; r < a.rows(); ++r) {
            BitVector acc(b.cols());
            for (std::size_t k = 0; k < a.cols(); ++k) {
                if (a.get(r, k)) acc ^= b.row(k);
            }
            out.rows_[r] = std::move(acc);
        }
        return out;
    }

    bool is_zero() const {
        return std::all_of(rows_.begin(), rows_.end(), [](const BitVector& r) { return r.none(); });
    }

    std::string shape() const { return std::to_string(rows()) + "x" + std::to_string(cols_); }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

  private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

// Reduced row echelon form: nonzero rows only, pivots ascending.
struct Echelon {
    std::vector<BitVector> rows;
    std::vector<std::size_t> pivots;
};

inline Echelon row_reduce(const BitMatrix& m) {
    std::vector<BitVector> work = m.row_list();
    Echelon out;
    std::size_t next = 0;
    for (std::size_t c = 0; c < m.cols() && next < work.size(); ++c) {
        std::size_t p = next;
        while (p < work.size() && !work[p].get(c)) ++p;
        if (p == work.size()) continue;
        std::swap(work[next], work[p]);
        for (std::size_t r = 0; r < work.size(); ++r) {
            if (r != next && work[r].get(c)) work[r] ^= work[next];
        }
        out.pivots.push_back(c);
        ++next;
    }
    work.resize(next);
    out.rows = std::move(work);
    return out;
}

inline std::size_t rank(const BitMatrix& m) { return row_reduce(m).rows.size(); }

// Row-reduced copy with zero rows dropped; spans the same row space.
inline BitMatrix reduce_rows(const BitMatrix& m) { return BitMatrix::from_rows(row_reduce(m).rows, m.cols()); }

// Basis of {v : M·vᵗ = 0}, one basis vector per row.
inline BitMatrix kernel_basis(const BitMatrix& m) {
    const Echelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    BitMatrix basis(0, m.cols());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        BitVector v = BitVector::unit(m.cols(), free);
        for (std::size_t k = 0; k < e.rows.size(); ++k) {
            if (e.rows[k].get(free)) v.set(e.pivots[k], true);
        }
        basis.append_row(std::move(v));
    }
    return basis;
}

// Reduces v against an echelon basis; the result is zero iff v is in the span.
inline BitVector reduce_against(const Echelon& e, BitVector v) {
    for (std::size_t k = 0; k < e.rows.size(); ++k) {
        if (v.get(e.pivots[k])) v ^= e.rows[k];
    }
    return v;
}

inline bool row_space_contains(const BitMatrix& m, const BitVector& v) {
    if (v.size() != m.cols()) {
        throw DimensionMismatch("vector of length " + std::to_string(v.size()) + " against matrix " + m.shape());
    }
    return reduce_against(row_reduce(m), v).none();
}

inline bool row_space_equal(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.cols()) throw DimensionMismatch("row spaces of " + a.shape() + " and " + b.shape());
    const Echelon ea = row_reduce(a);
    const Echelon eb = row_reduce(b);
    return ea.rows == eb.rows;
}

inline BitMatrix invert(const BitMatrix& t) {
    if (!t.square()) throw DimensionMismatch("cannot invert non-square matrix " + t.shape());
    const std::size_t n = t.rows();
    std::vector<BitVector> left = t.row_list();
    std::vector<BitVector> right = BitMatrix::identity(n).row_list();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && !left[p].get(c)) ++p;
        if (p == n) throw SingularMatrix();
        std::swap(left[c], left[p]);
        std::swap(right[c], right[p]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r != c && left[r].get(c)) {
                left[r] ^= left[c];
                right[r] ^= right[c];
            }
        }
    }
    return BitMatrix::from_rows(std::move(right), n);
}

// R = I + e_source e_destᵗ. Right-multiplying by R adds column `source` to
// column `dest`. Indices are 0-based; text surfaces print them 1-based.
struct ElementaryFactor {
    std::size_t source = 0;
    std::size_t dest = 0;
    std::size_t dim = 0;

    friend bool operator==(const ElementaryFactor&, const ElementaryFactor&) = default;
};

inline BitMatrix elementary_matrix(const ElementaryFactor& f) {
    if (f.source == f.dest) throw OutOfRange("elementary factor needs distinct indices");
    if (f.source >= f.dim || f.dest >= f.dim) throw OutOfRange("elementary factor index outside dimension");
    BitMatrix m = BitMatrix::identity(f.dim);
    m.set(f.source, f.dest, true);
    return m;
}

inline BitMatrix product(const std::vector<ElementaryFactor>& factors, std::size_t n) {
    BitMatrix acc = BitMatrix::identity(n);
    for (const auto& f : factors) acc.add_column(f.source, f.dest);
    return acc;
}

// Factors T as R_1 R_2 ... R_m (and hence T⁻¹ = R_m ... R_1) with m ≤ n².
//
// T is driven to the identity by column additions, one row at a time from the
// top. A zero diagonal is first repaired by adding in the lowest column to its
// right holding a 1 in that row; columns to the left are never used for this
// since they would disturb rows already reduced. Every other 1 in the row is
// then cleared by adding the diagonal column. The recorded sequence gives
// T R'_1 ... R'_m = I, so T is the reversed sequence.
inline std::vector<ElementaryFactor> decompose_elementary(const BitMatrix& t) {
    if (!t.square()) throw DimensionMismatch("cannot decompose non-square matrix " + t.shape());
    const std::size_t n = t.rows();
    BitMatrix work = t;
    std::vector<ElementaryFactor> reduction;
    for (std::size_t i = 0; i < n; ++i) {
        if (!work.get(i, i)) {
            std::size_t j = i + 1;
            while (j < n && !work.get(i, j)) ++j;
            if (j == n) throw SingularMatrix();
            work.add_column(j, i);
            reduction.push_back({j, i, n});
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i && work.get(i, j)) {
                work.add_column(i, j);
                reduction.push_back({i, j, n});
            }
        }
    }
    std::reverse(reduction.begin(), reduction.end());
    return reduction;
}

// Matrix text format: "rows cols" then one line of space separated bits per row.
inline void write_matrix(std::ostream& os, const BitMatrix& m) {
    os << m.rows() << ' ' << m.cols() << '\n';
    for (const auto& r : m.row_list()) os << r.to_string() << '\n';
}

inline BitMatrix read_matrix(std::istream& is) {
    long long rows = -1;
    long long cols = -1;
    if (!(is >> rows >> cols) || rows < 0 || cols < 0) {
        throw ParseError("matrix header must be two nonnegative integers \"rows cols\"");
    }
    BitMatrix m(0, static_cast<std::size_t>(cols));
    for (long long r = 0; r < rows; ++r) {
        BitVector v(static_cast<std::size_t>(cols));
        for (long long c = 0; c < cols; ++c) {
            int bit = -1;
            if (!(is >> bit)) {
                throw ParseError("matrix truncated at row " + std::to_string(r + 1) + ", column " +
                                 std::to_string(c + 1));
            }
            if (bit != 0 && bit != 1) throw ParseError("matrix entries must be 0 or 1");
            v.set(static_cast<std::size_t>(c), bit == 1);
        }
        m.append_row(std::move(v));
    }
    return m;
}

}  // namespace hmc
