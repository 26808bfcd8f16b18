#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hmc/hypermap.hpp"
#include "test_support.hpp"

namespace hmc {
namespace {

using testing::torus_example;

TEST(Permutation, FromCyclesAndErrors) {
    const auto p = Permutation::from_cycles(4, {{1, 3}});
    EXPECT_EQ(p.image(), (std::vector<std::size_t>{2, 1, 0, 3}));
    EXPECT_EQ(p.inverse() * p, Permutation::identity(4));
    EXPECT_THROW(Permutation::from_cycles(3, {{1, 4}}), NotBijective);
    EXPECT_THROW(Permutation::from_cycles(3, {{1, 2}, {2, 3}}), NotBijective);
    EXPECT_THROW(Permutation::from_image({0, 0, 1}), NotBijective);
}

TEST(Orbits, Examples) {
    const auto id = orbits(Permutation::identity(3));
    EXPECT_EQ(id.orbits, (std::vector<std::vector<std::size_t>>{{0}, {1}, {2}}));

    const Hypermap h = torus_example();
    EXPECT_EQ(h.vertices().size(), 2u);
    EXPECT_EQ(h.hyperedges().size(), 2u);
    EXPECT_EQ(h.vertices().orbits[0], (std::vector<std::size_t>{0, 7, 2, 5}));
    EXPECT_EQ(h.vertices().orbits[1], (std::vector<std::size_t>{1, 4, 3, 6}));
}

TEST(Orbits, PartitionAndClosureProperty) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = testing::random_permutation(1 + rng() % 20, rng);
        const auto part = orbits(p);
        std::vector<int> hits(p.size(), 0);
        for (std::size_t o = 0; o < part.size(); ++o) {
            const auto& cyc = part.orbits[o];
            EXPECT_EQ(cyc.front(), *std::min_element(cyc.begin(), cyc.end()));
            if (o > 0) {
                EXPECT_LT(part.orbits[o - 1].front(), cyc.front());
            }
            for (std::size_t k = 0; k < cyc.size(); ++k) {
                ++hits[cyc[k]];
                EXPECT_EQ(p(cyc[k]), cyc[(k + 1) % cyc.size()]);
                EXPECT_EQ(part.class_of[p(cyc[k])], o);
            }
        }
        for (auto x : hits) EXPECT_EQ(x, 1);
    }
}

TEST(FacePermutation, Examples) {
    EXPECT_EQ(cycle_string(torus_example().face_permutation()), "(1 7)(2 8)(3 5)(4 6)");

    const auto s = Permutation::from_cycles(3, {{1, 2, 3}});
    EXPECT_EQ(Hypermap(s, s).face_permutation(), Permutation::identity(3));
    EXPECT_EQ(Hypermap(s, Permutation::identity(3)).face_permutation(), s);
}

TEST(Counts, Examples) {
    EXPECT_EQ(torus_example().counts(), (HypermapCounts{2, 2, 4, 8}));
    const Hypermap one(Permutation::identity(1), Permutation::identity(1));
    EXPECT_EQ(one.counts(), (HypermapCounts{1, 1, 1, 1}));
}

TEST(Counts, InvariantUnderRelabeling) {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 16;
        const Hypermap h = testing::random_hypermap(n, rng);
        const Permutation relabel = testing::random_permutation(n, rng);
        const Hypermap g(relabel * h.sigma() * relabel.inverse(), relabel * h.tau() * relabel.inverse());
        EXPECT_EQ(h.counts(), g.counts());
        EXPECT_EQ(h.genus(), g.genus());
    }
}

TEST(Genus, Examples) {
    EXPECT_EQ(torus_example().genus(), 1u);
    EXPECT_EQ(Hypermap(Permutation::identity(1), Permutation::identity(1)).genus(), 0u);
    // A loop split at its midpoint: one vertex, one two-dart hyperedge.
    const auto swap = Permutation::from_cycles(2, {{1, 2}});
    EXPECT_EQ(Hypermap(swap, swap).counts(), (HypermapCounts{1, 1, 2, 2}));
    EXPECT_EQ(Hypermap(swap, swap).genus(), 0u);
}

TEST(Genus, EulerCharacteristicAlwaysEven) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        const Hypermap h = testing::random_hypermap(1 + rng() % 20, rng);
        const auto c = h.counts();
        EXPECT_EQ((c.vertices + c.hyperedges + c.faces + c.darts) % 2, 0u);
        EXPECT_NO_THROW(h.genus());
    }
}

TEST(Incidence, Examples) {
    const Hypermap h = torus_example();
    EXPECT_EQ(h.vertices().orbits[h.incident_vertex(0)], (std::vector<std::size_t>{0, 7, 2, 5}));
    EXPECT_EQ(h.hyperedges().orbits[h.incident_edge(0)], (std::vector<std::size_t>{0, 1, 2, 3}));
    EXPECT_THROW(h.incident_vertex(8), OutOfRange);

    const auto cyc = Permutation::from_cycles(3, {{1, 2, 3}});
    const Hypermap flower(Permutation::identity(3), cyc);
    for (std::size_t d = 0; d < 3; ++d) EXPECT_EQ(flower.incident_vertex(d), d);
}

TEST(Validate, Errors) {
    EXPECT_NO_THROW(validate(torus_example().sigma(), torus_example().tau()));
    EXPECT_THROW(Hypermap(Permutation::identity(2), Permutation::identity(2)), NotConnected);
    EXPECT_THROW(Hypermap(Permutation::identity(2), Permutation::identity(3)), NotBijective);
    EXPECT_THROW(Hypermap(Permutation(), Permutation()), NotConnected);
    EXPECT_THROW(Hypermap::from_cycles(3, {{1, 2, 2}}, {}), NotBijective);
}

TEST(SpecialDarts, Examples) {
    const Hypermap h = torus_example();
    EXPECT_EQ(choose_special_darts(h, {2, 6}).sorted(), (std::vector<std::size_t>{2, 6}));
    EXPECT_EQ(choose_special_darts(h).sorted(), (std::vector<std::size_t>{0, 4}));
    EXPECT_THROW(choose_special_darts(h, {0, 1}), DuplicateHyperedge);
    // A partial preference only overrides its own hyperedge.
    EXPECT_EQ(choose_special_darts(h, {5}).sorted(), (std::vector<std::size_t>{0, 5}));
}

TEST(SpecialDarts, OnePerHyperedgeProperty) {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 100; ++trial) {
        const Hypermap h = testing::random_hypermap(1 + rng() % 20, rng);
        const auto s = testing::random_special(h, rng);
        std::set<std::size_t> edges;
        for (auto d : s.darts()) edges.insert(h.incident_edge(d));
        EXPECT_EQ(edges.size(), h.hyperedges().size());
        EXPECT_EQ(nonspecial_darts(h, s).size(), h.dart_count() - h.hyperedges().size());
    }
}

}  // namespace
}  // namespace hmc
