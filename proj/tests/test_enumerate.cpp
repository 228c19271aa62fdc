#include <gtest/gtest.h>

#include <set>

#include "ecci/canonical.hpp"
#include "ecci/enumerate.hpp"
#include "ecci/families.hpp"
#include "oracles.hpp"

using ecci::Tree;

TEST(FreeTrees, SmallCounts) {
    const long expected[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (int n = 1; n <= 10; ++n) EXPECT_EQ(ecci::count_free_trees(n), expected[n]) << n;
}

TEST(FreeTrees, CountsMatchOtterRecurrenceToN18) {
    auto otter = oracles::free_tree_counts_otter(18);
    // known values as a cross-check of the recurrence itself
    EXPECT_EQ(otter[12], 551);
    EXPECT_EQ(otter[13], 1301);
    EXPECT_EQ(otter[18], 123867);
    for (int n = 1; n <= 14; ++n) EXPECT_EQ(ecci::count_free_trees(n), otter[n]) << n;
}

TEST(FreeTrees, MatchesPruferDedupOracleToN8) {
    for (int n = 1; n <= 8; ++n) {
        auto oracle = oracles::prufer_code_set(n);
        std::set<ecci::CanonicalCode> mine;
        for (const auto& t : ecci::free_trees(n)) mine.insert(ecci::canonical_code(t));
        EXPECT_EQ(mine, oracle) << "n=" << n;
    }
}

TEST(FreeTrees, NoDuplicateCodesToN12) {
    for (int n = 1; n <= 12; ++n) {
        std::set<ecci::CanonicalCode> seen;
        long count = 0;
        ecci::FreeTreeStream stream(n);
        while (auto t = stream.next()) {
            ++count;
            seen.insert(ecci::canonical_code(*t));
        }
        EXPECT_EQ(static_cast<long>(seen.size()), count) << "n=" << n;
    }
}

TEST(FreeTrees, CapAndPartitioning) {
    EXPECT_THROW(ecci::FreeTreeStream(21), ecci::Error);
    EXPECT_NO_THROW(ecci::FreeTreeStream(21, 1, 0, 25));

    for (int parts : {2, 3, 5}) {
        std::multiset<std::string> partitioned, sequential;
        for (int off = 0; off < parts; ++off) {
            ecci::FreeTreeStream stream(9, parts, off);
            while (auto t = stream.next()) partitioned.insert(ecci::canonical_code(*t).bytes);
        }
        ecci::FreeTreeStream stream(9);
        while (auto t = stream.next()) sequential.insert(ecci::canonical_code(*t).bytes);
        EXPECT_EQ(partitioned, sequential) << parts;
    }
}

TEST(FreeTrees, RestartResumesMidStream) {
    ecci::FreeTreeStream a(8);
    for (int i = 0; i < 10; ++i) a.next();
    auto state = a.state();
    long index = a.index();
    std::vector<std::string> rest_a;
    while (auto t = a.next()) rest_a.push_back(ecci::canonical_code(*t).bytes);

    ecci::FreeTreeStream b(8);
    b.restart(state, index);
    std::vector<std::string> rest_b;
    while (auto t = b.next()) rest_b.push_back(ecci::canonical_code(*t).bytes);
    EXPECT_EQ(rest_a, rest_b);
}

TEST(FilterClass, SpecExamples) {
    std::vector<Tree> m1;
    ecci::for_each_in_class(6, ecci::ParamClass::parse("matching=1"),
                            [&](const Tree& t) { m1.push_back(t); });
    ASSERT_EQ(m1.size(), 1u);
    EXPECT_TRUE(ecci::is_isomorphic(m1[0], ecci::star_tree(6)));

    std::vector<Tree> d4;
    ecci::for_each_in_class(5, ecci::ParamClass::parse("diameter=4"),
                            [&](const Tree& t) { d4.push_back(t); });
    ASSERT_EQ(d4.size(), 1u);
    EXPECT_TRUE(ecci::is_isomorphic(d4[0], ecci::path_tree(5)));

    long p3 = 0;
    bool has_balanced = false;
    ecci::for_each_in_class(7, ecci::ParamClass::parse("pendants=3"), [&](const Tree& t) {
        ++p3;
        if (ecci::is_isomorphic(t, ecci::spider({2, 2, 2}))) has_balanced = true;
    });
    EXPECT_EQ(p3, 3);
    EXPECT_TRUE(has_balanced);
}

TEST(PruferDecode, KnownSequences) {
    // sequence (0,0) on 4 vertices is the star at 0
    Tree s = ecci::prufer_to_tree({0, 0});
    EXPECT_TRUE(ecci::is_isomorphic(s, ecci::star_tree(4)));
    // (1,2) gives the path 0-1-2-3
    Tree p = ecci::prufer_to_tree({1, 2});
    EXPECT_TRUE(ecci::is_isomorphic(p, ecci::path_tree(4)));
    EXPECT_THROW(ecci::prufer_to_tree({5}), ecci::Error);
}
