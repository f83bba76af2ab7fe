#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "permutovol/dyck.hpp"

using namespace permutovol;

namespace {

std::vector<NorthStepLabel> labels_of(const std::string& path) {
    return north_step_labels(DyckPath::parse(path));
}

// Lexicographic order with N < E, which differs from ASCII order on the
// step characters.
bool lex_before(const DyckPath& a, const DyckPath& b) {
    auto sa = a.steps();
    auto sb = b.steps();
    for (std::size_t k = 0; k < std::min(sa.size(), sb.size()); ++k) {
        if (sa[k] != sb[k]) return sa[k] == Step::north;
    }
    return sa.size() < sb.size();
}

}  // namespace

TEST_CASE("path parsing validates dominance and balance") {
    CHECK(DyckPath::parse("NENNEE").str() == "NENNEE");
    CHECK(DyckPath::parse("").size() == 0);
    CHECK(DyckPath::parse("ne").str() == "NE");
    CHECK_THROWS_AS(DyckPath::parse("EN"), InvalidPath);
    CHECK_THROWS_AS(DyckPath::parse("NNE"), InvalidPath);
    CHECK_THROWS_AS(DyckPath::parse("NEX"), InvalidPath);
    CHECK_THROWS_AS(DyckPath::parse("NEEN"), InvalidPath);
}

TEST_CASE("enumeration is complete, duplicate-free and lex ordered") {
    CHECK(enumerate_paths(0) == std::vector<DyckPath>{DyckPath()});

    std::vector<std::string> expected3{"NNNEEE", "NNENEE", "NNEENE", "NENNEE", "NENENE"};
    std::vector<std::string> got3;
    for (const auto& p : enumerate_paths(3)) got3.push_back(p.str());
    CHECK(got3 == expected3);

    const std::vector<std::uint64_t> catalans{1,    1,    2,     5,     14,    42,   132,
                                              429,  1430, 4862,  16796, 58786, 208012};
    for (int n = 0; n <= 12; ++n) CHECK(catalan(n) == catalans[static_cast<std::size_t>(n)]);

    for (int n = 0; n <= 9; ++n) {
        std::uint64_t count = 0;
        DyckPath previous;
        std::set<std::string> seen;
        for_each_path(n, [&](const DyckPath& p) {
            if (count > 0) CHECK(lex_before(previous, p));
            previous = p;
            seen.insert(p.str());
            ++count;
        });
        CHECK(count == catalan(n));
        CHECK(seen.size() == count);
    }

    CHECK_THROWS_AS(for_each_path(kMaxEnumeration + 1, [](const DyckPath&) {}),
                    BoundExceeded);
}

TEST_CASE("north-step labels reproduce the worked examples") {
    CHECK(labels_of("NENNEE") ==
          std::vector<NorthStepLabel>{{3, 1, 0}, {2, 2, 1}, {1, 1, 1}});
    CHECK(labels_of("NNNEEE") ==
          std::vector<NorthStepLabel>{{3, 3, 0}, {2, 2, 0}, {1, 1, 0}});
    CHECK(labels_of("NNEENE") ==
          std::vector<NorthStepLabel>{{3, 2, 0}, {1, 1, 0}, {1, 1, 2}});
}

TEST_CASE("label invariants hold for every path") {
    for (int n = 1; n <= 7; ++n) {
        for_each_path(n, [&](const DyckPath& p) {
            auto labels = north_step_labels(p);
            REQUIRE(static_cast<int>(labels.size()) == n);
            CHECK(labels.front().u == 0);
            CHECK(labels.front().d == n);
            for (const auto& [d, i, u] : labels) {
                CHECK(1 <= i);
                CHECK(i <= d);
                CHECK(u >= 0);
                CHECK(u + d <= n);
            }
        });
    }
}

TEST_CASE("first-return decomposition and recomposition") {
    Decomposition parts = decompose(DyckPath::parse("NENNEE"));
    CHECK(parts.k == 1);
    CHECK(parts.bottom == DyckPath());
    CHECK(parts.top == DyckPath::parse("NNEE"));

    parts = decompose(DyckPath::parse("NNNEEE"));
    CHECK(parts.k == 3);
    CHECK(parts.bottom == DyckPath::parse("NNEE"));
    CHECK(parts.top == DyckPath());

    parts = decompose(DyckPath::parse("NNEENE"));
    CHECK(parts.k == 2);
    CHECK(parts.bottom == DyckPath::parse("NE"));
    CHECK(parts.top == DyckPath::parse("NE"));

    CHECK_THROWS_AS(decompose(DyckPath()), EmptyPath);

    for (int n = 1; n <= 8; ++n) {
        for_each_path(n, [&](const DyckPath& p) {
            Decomposition d = decompose(p);
            CHECK(d.bottom.size() == d.k - 1);
            CHECK(d.top.size() == n - d.k);
            CHECK(recompose(d) == p);
        });
    }
}

TEST_CASE("fixed first return gives the Catalan convolution bijection") {
    for (int n = 1; n <= 8; ++n) {
        std::vector<std::set<std::pair<std::string, std::string>>> images(
            static_cast<std::size_t>(n) + 1);
        std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
        for_each_path(n, [&](const DyckPath& p) {
            Decomposition d = decompose(p);
            ++counts[static_cast<std::size_t>(d.k)];
            images[static_cast<std::size_t>(d.k)].emplace(d.bottom.str(), d.top.str());
        });
        for (int k = 1; k <= n; ++k) {
            std::uint64_t expected = catalan(k - 1) * catalan(n - k);
            CHECK(counts[static_cast<std::size_t>(k)] == expected);   // surjective…
            CHECK(images[static_cast<std::size_t>(k)].size() == expected);  // …and injective
        }
    }
}

TEST_CASE("binary tree bijection") {
    CHECK(to_binary_tree(DyckPath()).is_leaf());
    BinaryTree cherry = to_binary_tree(DyckPath::parse("NE"));
    CHECK(!cherry.is_leaf());
    CHECK(cherry.left().is_leaf());
    CHECK(cherry.right().is_leaf());
    CHECK(cherry == BinaryTree::node(BinaryTree(), BinaryTree()));

    for (int n = 0; n <= 10; ++n) {
        for_each_path(n, [&](const DyckPath& p) {
            BinaryTree t = to_binary_tree(p);
            CHECK(t.leaf_count() == n + 1);
            CHECK(from_binary_tree(t) == p);
        });
    }
}

TEST_CASE("regression: the 7-Dyck worked example") {
    // The step sequence is reconstructed from a known label list rather
    // than written down independently; uniqueness is asserted by searching
    // the whole of D_7.
    const std::vector<NorthStepLabel> example{{7, 1, 0}, {6, 4, 1}, {3, 1, 1}, {2, 1, 2},
                                              {1, 1, 3}, {2, 2, 5}, {1, 1, 5}};
    std::vector<std::string> matches;
    for_each_path(7, [&](const DyckPath& p) {
        if (north_step_labels(p) == example) matches.push_back(p.str());
    });
    REQUIRE(matches.size() == 1);
    CHECK(matches.front() == "NENNENENEENNEE");
}
