#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "hmc/gf2.hpp"
#include "test_support.hpp"

namespace hmc {
namespace {

const BitMatrix kTorusExampleHx = BitMatrix::from_rows({{1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}});
const BitMatrix kTorusHz = BitMatrix::from_rows(
    {{0, 1, 0, 0, 0, 1}, {1, 0, 0, 1, 1, 1}, {1, 1, 1, 1, 0, 0}, {0, 0, 1, 0, 1, 0}});

TEST(BitVector, WeightDotAndXor) {
    auto a = BitVector::from_bits({1, 0, 1, 1});
    auto b = BitVector::from_bits({0, 1, 1, 1});
    EXPECT_EQ(a.weight(), 3u);
    EXPECT_FALSE(a.dot(b));
    EXPECT_EQ((a ^ b), BitVector::from_bits({1, 1, 0, 0}));
    EXPECT_THROW(a.dot(BitVector(3)), DimensionMismatch);
    EXPECT_THROW(BitVector::from_bits({0, 2}), ParseError);
}

TEST(BitVector, SpansWordBoundary) {
    BitVector v(130);
    v.set(0, true);
    v.set(64, true);
    v.set(129, true);
    EXPECT_EQ(v.weight(), 3u);
    EXPECT_EQ(v.support(), (std::vector<std::size_t>{0, 64, 129}));
    EXPECT_EQ(v.first_set(), 0u);
}

TEST(Rank, Examples) {
    EXPECT_EQ(rank(BitMatrix(3, 3)), 0u);
    EXPECT_EQ(rank(BitMatrix::identity(4)), 4u);
    EXPECT_EQ(rank(kTorusExampleHx), 1u);
    EXPECT_EQ(rank(kTorusHz), 3u);
}

TEST(Rank, EqualsRankOfTranspose) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(0, 12);
        const BitMatrix m = testing::random_matrix(dim(rng), dim(rng), rng);
        EXPECT_EQ(rank(m), rank(m.transpose()));
    }
}

TEST(KernelBasis, Examples) {
    EXPECT_EQ(kernel_basis(BitMatrix::identity(3)).rows(), 0u);

    const BitMatrix parity = BitMatrix::from_rows({{1, 1}});
    const BitMatrix k = kernel_basis(parity);
    ASSERT_EQ(k.rows(), 1u);
    EXPECT_EQ(k.row(0), BitVector::from_bits({1, 1}));

    // 6 columns minus rank 1.
    const BitMatrix kernel = kernel_basis(kTorusExampleHx);
    EXPECT_EQ(kernel.rows(), 5u);
    EXPECT_EQ(rank(kernel), 5u);
    EXPECT_TRUE((kTorusExampleHx * kernel.transpose()).is_zero());
}

TEST(KernelBasis, RandomMatricesAnnihilateAndHaveFullDimension) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 10);
        const BitMatrix m = testing::random_matrix(dim(rng), dim(rng), rng);
        const BitMatrix k = kernel_basis(m);
        EXPECT_EQ(k.rows(), m.cols() - rank(m));
        EXPECT_EQ(rank(k), k.rows());
        for (const auto& v : k.row_list()) EXPECT_TRUE(m.apply(v).none());
    }
}

TEST(RowSpaceContains, Examples) {
    EXPECT_TRUE(row_space_contains(kTorusHz, BitVector(6)));
    EXPECT_TRUE(row_space_contains(BitMatrix::identity(2), BitVector::from_bits({1, 0})));
    EXPECT_THROW(row_space_contains(kTorusHz, BitVector(5)), DimensionMismatch);

    // Oracle: every combination of the four rows.
    const BitVector ones = BitVector::from_bits({1, 1, 1, 1, 1, 1});
    bool reachable = false;
    for (unsigned pick = 0; pick < 16; ++pick) {
        BitVector acc(6);
        for (std::size_t r = 0; r < 4; ++r) {
            if ((pick >> r) & 1) acc ^= kTorusHz.row(r);
        }
        reachable = reachable || acc == ones;
    }
    EXPECT_FALSE(reachable);
    EXPECT_EQ(row_space_contains(kTorusHz, ones), reachable);
    EXPECT_TRUE(row_space_contains(kTorusHz, BitVector::from_bits({0, 0, 1, 0, 1, 0})));
}

TEST(Invert, Examples) {
    EXPECT_EQ(invert(BitMatrix::identity(5)), BitMatrix::identity(5));
    const BitMatrix upper = BitMatrix::from_rows({{1, 1}, {0, 1}});
    EXPECT_EQ(invert(upper), upper);
    EXPECT_THROW(invert(BitMatrix::from_rows({{1, 1}, {1, 1}})), SingularMatrix);
    EXPECT_THROW(invert(BitMatrix(2, 3)), DimensionMismatch);

    const BitMatrix t = testing::torus_basis_change();
    EXPECT_EQ(t * invert(t), BitMatrix::identity(6));
}

TEST(ElementaryMatrix, Definition) {
    EXPECT_EQ(elementary_matrix({0, 1, 2}), BitMatrix::from_rows({{1, 1}, {0, 1}}));
    EXPECT_EQ(elementary_matrix({1, 0, 2}), BitMatrix::from_rows({{1, 0}, {1, 1}}));
    EXPECT_THROW(elementary_matrix({1, 1, 3}), OutOfRange);
    EXPECT_THROW(elementary_matrix({0, 3, 3}), OutOfRange);
}

TEST(ElementaryMatrix, IsAnInvolution) {
    for (std::size_t n = 2; n <= 6; ++n) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                const BitMatrix r = elementary_matrix({i, j, n});
                EXPECT_EQ(r * r, BitMatrix::identity(n));
            }
        }
    }
}

TEST(ElementaryMatrix, RightMultiplicationAddsColumn) {
    std::mt19937_64 rng(13);
    const BitMatrix m = testing::random_matrix(5, 5, rng);
    BitMatrix expected = m;
    expected.add_column(3, 1);
    EXPECT_EQ(m * elementary_matrix({3, 1, 5}), expected);
}

TEST(DecomposeElementary, Identity) { EXPECT_TRUE(decompose_elementary(BitMatrix::identity(4)).empty()); }

TEST(DecomposeElementary, SingleFactor) {
    const auto f = decompose_elementary(BitMatrix::from_rows({{1, 1}, {0, 1}}));
    ASSERT_EQ(f.size(), 1u);
    EXPECT_EQ(f[0], (ElementaryFactor{0, 1, 2}));
    EXPECT_EQ(elementary_matrix(f[0]), BitMatrix::from_rows({{1, 1}, {0, 1}}));
}

TEST(DecomposeElementary, SwapNeedsThreeFactors) {
    const BitMatrix swap = BitMatrix::from_rows({{0, 1}, {1, 0}});
    const auto f = decompose_elementary(swap);
    ASSERT_EQ(f.size(), 3u);
    EXPECT_EQ(product(f, 2), swap);
    EXPECT_EQ((std::vector<ElementaryFactor>{{1, 0, 2}, {0, 1, 2}, {1, 0, 2}}), f);

    // Oracle: no sequence of fewer than three factors gives the swap.
    const std::vector<ElementaryFactor> all{{0, 1, 2}, {1, 0, 2}};
    EXPECT_NE(BitMatrix::identity(2), swap);
    for (const auto& a : all) {
        EXPECT_NE(elementary_matrix(a), swap);
        for (const auto& b : all) EXPECT_NE(elementary_matrix(a) * elementary_matrix(b), swap);
    }
}

TEST(DecomposeElementary, ZeroDiagonalUsesColumnToTheRight) {
    // Row 2 has a 1 left of the zero diagonal; only the column to the right
    // keeps row 1 reduced.
    const BitMatrix t = BitMatrix::from_rows({{1, 0, 0}, {1, 0, 1}, {0, 1, 0}});
    const auto f = decompose_elementary(t);
    EXPECT_EQ(product(f, 3), t);
}

TEST(DecomposeElementary, Singular) {
    EXPECT_THROW(decompose_elementary(BitMatrix::from_rows({{1, 1}, {1, 1}})), SingularMatrix);
    EXPECT_THROW(decompose_elementary(BitMatrix(3, 3)), SingularMatrix);
    EXPECT_THROW(decompose_elementary(BitMatrix(2, 3)), DimensionMismatch);
}

TEST(DecomposeElementary, RandomInvertibleProperty) {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 300; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 8);
        const std::size_t n = dim(rng);
        const BitMatrix t = testing::random_invertible(n, rng);
        auto f = decompose_elementary(t);
        EXPECT_LE(f.size(), n * n);
        EXPECT_EQ(product(f, n), t);
        std::reverse(f.begin(), f.end());
        EXPECT_EQ(product(f, n), invert(t));
    }
}

TEST(MatrixText, RoundTripAndErrors) {
    std::mt19937_64 rng(15);
    const BitMatrix m = testing::random_matrix(4, 7, rng);
    std::stringstream ss;
    write_matrix(ss, m);
    EXPECT_EQ(read_matrix(ss), m);

    std::stringstream empty("0 5\n");
    EXPECT_EQ(read_matrix(empty), BitMatrix(0, 5));

    std::stringstream truncated("2 2\n1 0\n1\n");
    EXPECT_THROW(read_matrix(truncated), ParseError);
    std::stringstream bad("1 2\n1 3\n");
    EXPECT_THROW(read_matrix(bad), ParseError);
    std::stringstream header("x y\n");
    EXPECT_THROW(read_matrix(header), ParseError);
}

}  // namespace
}  // namespace hmc
