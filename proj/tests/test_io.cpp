#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "ecci/enumerate.hpp"
#include "ecci/families.hpp"
#include "ecci/io.hpp"

using ecci::Tree;

TEST(EdgeList, ParsesCommentsAndWhitespace) {
    Tree t = ecci::parse_edge_list("# a path\n4\n0 1\n\n1 2  # inline\n2 3\n");
    EXPECT_EQ(t.order(), 4);
    EXPECT_EQ(t.edges(), ecci::path_tree(4).edges());
}

TEST(EdgeList, WriterSortsEdges) {
    Tree t = ecci::validate_tree(4, {{3, 2}, {1, 0}, {2, 1}});
    EXPECT_EQ(ecci::to_edge_list(t), "4\n0 1\n1 2\n2 3\n");
}

TEST(EdgeList, Errors) {
    EXPECT_THROW(ecci::parse_edge_list(""), ecci::Error);
    EXPECT_THROW(ecci::parse_edge_list("3\n0 1\n2\n"), ecci::Error);
    EXPECT_THROW(ecci::parse_edge_list("2 2\n0 1\n"), ecci::Error);
}

TEST(Graph6, GoldenStrings) {
    EXPECT_EQ(ecci::to_graph6(ecci::path_tree(2)), "A_");
    EXPECT_EQ(ecci::to_graph6(ecci::path_tree(4)), "Ch");
    EXPECT_EQ(ecci::to_graph6(ecci::star_tree(4)), "Cs");
    EXPECT_EQ(ecci::to_graph6(ecci::t_n_beta(7, 3)), "Fs`@?");
}

TEST(Graph6, ReadsOptionalHeader) {
    Tree t = ecci::from_graph6(">>graph6<<Ch\n");
    EXPECT_EQ(t.edges(), ecci::path_tree(4).edges());
}

TEST(Graph6, RoundTripsRandomTrees) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        int n = 1 + static_cast<int>(rng() % 70);  // crosses the 62-vertex long form
        Tree t = ecci::random_tree(n, rng);
        Tree back = ecci::from_graph6(ecci::to_graph6(t));
        EXPECT_TRUE(t == back) << "n=" << n;
    }
}

TEST(Graph6, RejectsGarbage) {
    EXPECT_THROW(ecci::from_graph6(""), ecci::Error);
    EXPECT_THROW(ecci::from_graph6("C"), ecci::Error);      // truncated bit bytes
    EXPECT_THROW(ecci::from_graph6("C\x01\x01"), ecci::Error);
}
