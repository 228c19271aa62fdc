#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "ecci/eccentricity.hpp"
#include "ecci/enumerate.hpp"
#include "ecci/families.hpp"
#include "ecci/tree.hpp"
#include "oracles.hpp"

using ecci::Edge;
using ecci::Errc;
using ecci::Tree;

namespace {

void expect_error(Errc code, const std::function<void()>& fn) {
    try {
        fn();
        FAIL() << "expected " << ecci::errc_name(code);
    } catch (const ecci::Error& e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

}  // namespace

TEST(ValidateTree, AcceptsSmallTrees) {
    Tree p2 = ecci::validate_tree(2, {{0, 1}});
    EXPECT_EQ(p2.order(), 2);
    Tree p4 = ecci::validate_tree(4, {{0, 1}, {1, 2}, {2, 3}});
    EXPECT_EQ(p4.edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
}

TEST(ValidateTree, RejectsTriangleWithIsolatedVertex) {
    expect_error(Errc::HasCycle, [] { ecci::validate_tree(4, {{0, 1}, {1, 2}, {2, 0}}); });
}

TEST(ValidateTree, RejectsBadInputs) {
    expect_error(Errc::VertexOutOfRange, [] { ecci::validate_tree(3, {{0, 3}, {1, 2}}); });
    expect_error(Errc::HasCycle, [] { ecci::validate_tree(2, {{0, 0}}); });
    expect_error(Errc::HasCycle, [] { ecci::validate_tree(3, {{0, 1}, {0, 1}}); });
    expect_error(Errc::NotConnected, [] { ecci::validate_tree(4, {{0, 1}, {2, 3}}); });
    expect_error(Errc::NotConnected, [] { ecci::validate_tree(3, {{0, 1}}); });
}

TEST(ValidateTree, NeighborListsSortedAndQueryable) {
    Tree t = ecci::validate_tree(4, {{3, 0}, {2, 0}, {0, 1}});
    EXPECT_EQ(t.neighbors(0), (std::vector<int>{1, 2, 3}));
    EXPECT_EQ(t.degree(0), 3);
    EXPECT_TRUE(t.has_edge(0, 2));
    EXPECT_FALSE(t.has_edge(1, 2));
}

TEST(BfsDistances, PathAndStar) {
    EXPECT_EQ(ecci::bfs_distances(ecci::path_tree(4), 0), (std::vector<int>{0, 1, 2, 3}));
    Tree s5 = ecci::star_tree(5);
    EXPECT_EQ(ecci::bfs_distances(s5, 0), (std::vector<int>{0, 1, 1, 1, 1}));
    EXPECT_EQ(ecci::bfs_distances(s5, 1), (std::vector<int>{1, 0, 2, 2, 2}));
    expect_error(Errc::VertexOutOfRange, [&] { ecci::bfs_distances(s5, 5); });
}

TEST(EccentricityProfile, PathsAndT73) {
    auto p5 = ecci::eccentricity_profile(ecci::path_tree(5));
    EXPECT_EQ(p5.ecc, (std::vector<int>{4, 3, 2, 3, 4}));
    EXPECT_EQ(p5.diameter, 4);
    EXPECT_EQ(p5.radius, 2);
    EXPECT_EQ(p5.centers, (std::vector<int>{2}));

    auto p4 = ecci::eccentricity_profile(ecci::path_tree(4));
    EXPECT_EQ(p4.ecc, (std::vector<int>{3, 2, 2, 3}));
    EXPECT_EQ(p4.centers, (std::vector<int>{1, 2}));

    auto t73 = ecci::eccentricity_profile(ecci::t_n_beta(7, 3));
    EXPECT_EQ(t73.ecc, (std::vector<int>{2, 3, 3, 3, 3, 4, 4}));
}

TEST(EccentricityProfile, MatchesFloydWarshallExhaustively) {
    for (int n = 1; n <= 10; ++n)
        for (const auto& t : ecci::free_trees(n))
            EXPECT_EQ(ecci::eccentricity_profile(t).ecc, oracles::ecc_brute(t));
}

TEST(EccentricityProfile, MatchesFloydWarshallOnRandomTrees) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        int n = 2 + static_cast<int>(rng() % 49);
        Tree t = ecci::random_tree(n, rng);
        EXPECT_EQ(ecci::eccentricity_profile(t).ecc, oracles::ecc_brute(t));
    }
}

TEST(TreeProperties, DegreeSumAndCenterStructure) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        int n = 1 + static_cast<int>(rng() % 30);
        Tree t = ecci::random_tree(n, rng);
        long degsum = 0;
        for (int v = 0; v < n; ++v) degsum += t.degree(v);
        EXPECT_EQ(degsum, 2 * (n - 1));
        auto prof = ecci::eccentricity_profile(t);
        ASSERT_LE(prof.centers.size(), 2u);
        EXPECT_TRUE(prof.diameter == 2 * prof.radius || prof.diameter == 2 * prof.radius - 1);
        if (prof.centers.size() == 2) EXPECT_TRUE(t.has_edge(prof.centers[0], prof.centers[1]));
    }
}

TEST(DiametralPath, DeterministicExamples) {
    EXPECT_EQ(ecci::diametral_path(ecci::path_tree(4)), (std::vector<int>{0, 1, 2, 3}));
    EXPECT_EQ(ecci::diametral_path(ecci::star_tree(4)), (std::vector<int>{1, 0, 2}));
    // balanced spider: starts at the smallest-id leaf
    EXPECT_EQ(ecci::diametral_path(ecci::spider({2, 2, 2})), (std::vector<int>{2, 1, 0, 3, 4}));
}

TEST(DiametralPath, RealizesDiameterWithAdjacentSteps) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
        int n = 2 + static_cast<int>(rng() % 20);
        Tree t = ecci::random_tree(n, rng);
        auto path = ecci::diametral_path(t);
        auto prof = ecci::eccentricity_profile(t);
        ASSERT_EQ(static_cast<int>(path.size()) - 1, prof.diameter);
        for (std::size_t j = 0; j + 1 < path.size(); ++j)
            EXPECT_TRUE(t.has_edge(path[j], path[j + 1]));
        EXPECT_EQ(ecci::bfs_distances(t, path.front())[path.back()], prof.diameter);
    }
}
