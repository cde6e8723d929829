#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "fdr/partition.hpp"

using namespace fdr;

TEST_CASE("construction validates parts") {
    CHECK_NOTHROW(Partition({3, 1, 1}));
    CHECK_THROWS_AS(Partition({1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
    CHECK(Partition::from_unsorted({0, 1, 3, 0, 1}) == Partition({3, 1, 1}));
}

TEST_CASE("size, length, part access") {
    Partition p({4, 2, 1});
    CHECK(p.size() == 7);
    CHECK(p.length() == 3);
    CHECK(p.part(0) == 4);
    CHECK(p.part(2) == 1);
    CHECK(p.part(3) == 0);
    CHECK(Partition().size() == 0);
    CHECK(Partition().length() == 0);
}

TEST_CASE("to_string and parse round-trip") {
    CHECK(Partition({3, 1, 1}).to_string() == "3,1,1");
    CHECK(Partition().to_string() == "-");
    CHECK(Partition::parse("3,1,1") == Partition({3, 1, 1}));
    CHECK(Partition::parse("-") == Partition());
    CHECK_THROWS_AS(Partition::parse("1,3"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("a"), std::invalid_argument);
    for (int n = 0; n <= 9; ++n)
        for (const Partition& lam : partitions_of(n))
            CHECK(Partition::parse(lam.to_string()) == lam);
}

TEST_CASE("partitions_of counts match the partition numbers") {
    const size_t expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (int n = 0; n <= 12; ++n) CHECK(partitions_of(n).size() == expected[n]);
}

TEST_CASE("partitions_of(4) in order: (n) first, (1^n) last") {
    std::vector<Partition> got = partitions_of(4);
    std::vector<Partition> want{Partition({4}), Partition({3, 1}), Partition({2, 2}),
                                Partition({2, 1, 1}), Partition({1, 1, 1, 1})};
    CHECK(got == want);
}

TEST_CASE("PartLess is a strict total order consistent with generation") {
    PartLess less;
    for (int n = 0; n <= 8; ++n) {
        std::vector<Partition> parts = partitions_of(n);
        for (size_t i = 0; i < parts.size(); ++i)
            for (size_t j = 0; j < parts.size(); ++j) {
                CHECK(less(parts[i], parts[j]) == (i < j));
            }
    }
    // degrees sort before bigger degrees
    CHECK(less(Partition({1, 1, 1}), Partition({4})));
}

TEST_CASE("conjugate is an involution and transposes the diagram") {
    CHECK(Partition({4, 2, 1}).conjugate() == Partition({3, 2, 1, 1}));
    CHECK(Partition().conjugate() == Partition());
    for (int n = 0; n <= 8; ++n)
        for (const Partition& lam : partitions_of(n)) {
            CHECK(lam.conjugate().conjugate() == lam);
            CHECK(lam.conjugate().size() == n);
        }
}

TEST_CASE("cells are 1-indexed row-major") {
    using Cell = std::pair<int, int>;
    std::vector<Cell> want{{1, 1}, {1, 2}, {2, 1}, {2, 2}};
    CHECK(Partition({2, 2}).cells() == want);
    std::vector<Cell> hook{{1, 1}, {1, 2}, {1, 3}, {2, 1}};
    CHECK(Partition({3, 1}).cells() == hook);
    CHECK(Partition().cells().empty());
    // conjugate swaps coordinates
    for (const Partition& lam : partitions_of(6)) {
        std::set<Cell> a, b;
        for (auto [r, c] : lam.cells()) a.insert({c, r});
        for (auto [r, c] : lam.conjugate().cells()) b.insert({r, c});
        CHECK(a == b);
    }
}

TEST_CASE("z_weight is the centralizer order") {
    CHECK(Partition({1, 1, 1}).z_weight() == 6);
    CHECK(Partition({3}).z_weight() == 3);
    CHECK(Partition({2, 1}).z_weight() == 2);
    CHECK(Partition().z_weight() == 1);
    // sum over classes of n!/z_lambda = number of permutations = n!
    for (int n = 1; n <= 8; ++n) {
        unsigned long fact = 1;
        for (int i = 2; i <= n; ++i) fact *= static_cast<unsigned long>(i);
        unsigned long total = 0;
        for (const Partition& lam : partitions_of(n)) total += fact / lam.z_weight();
        CHECK(total == fact);
    }
}

TEST_CASE("multiplicities") {
    Partition p({3, 2, 2, 1});
    std::vector<int> m = p.multiplicities();
    CHECK(m[1] == 1);
    CHECK(m[2] == 2);
    CHECK(m[3] == 1);
    CHECK(m[4] == 0);
}

TEST_CASE("hook_shape builds (b, 1^a) and rejects out-of-range input") {
    CHECK(hook_shape(3, 1).value() == Partition({3, 1}));
    CHECK(hook_shape(1, 3).value() == Partition({1, 1, 1, 1}));
    CHECK(hook_shape(2, 0).value() == Partition({2}));
    CHECK_FALSE(hook_shape(0, 2).has_value());
    CHECK_FALSE(hook_shape(-1, 0).has_value());
    CHECK_FALSE(hook_shape(2, -1).has_value());
}
