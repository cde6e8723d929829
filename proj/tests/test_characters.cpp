#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include "fdr/characters.hpp"

using namespace fdr;

namespace {

mpz_class hook_product(const Partition& lam) {
    Partition conj = lam.conjugate();
    mpz_class prod = 1;
    for (auto [r, c] : lam.cells())
        prod *= (lam.part(r - 1) - c) + (conj.part(c - 1) - r) + 1;
    return prod;
}

mpz_class factorial(int n) {
    mpz_class f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

int class_sign(const Partition& mu) { return (mu.size() - mu.length()) % 2 == 0 ? 1 : -1; }

}  // namespace

TEST_CASE("S_3 table") {
    const CharTable& t = CharTable::of(3);
    // classes in order (3), (2,1), (1,1,1)
    Partition c3({3}), c21({2, 1}), c111({1, 1, 1});
    CHECK(t.chi(Partition({3}), c3) == 1);
    CHECK(t.chi(Partition({3}), c21) == 1);
    CHECK(t.chi(Partition({3}), c111) == 1);
    CHECK(t.chi(Partition({2, 1}), c3) == -1);
    CHECK(t.chi(Partition({2, 1}), c21) == 0);
    CHECK(t.chi(Partition({2, 1}), c111) == 2);
    CHECK(t.chi(Partition({1, 1, 1}), c3) == 1);
    CHECK(t.chi(Partition({1, 1, 1}), c21) == -1);
    CHECK(t.chi(Partition({1, 1, 1}), c111) == 1);
}

TEST_CASE("S_4 table") {
    const CharTable& t = CharTable::of(4);
    const int want[5][5] = {
        // classes (4), (3,1), (2,2), (2,1,1), (1,1,1,1)
        {1, 1, 1, 1, 1},    // (4)
        {-1, 0, -1, 1, 3},  // (3,1)
        {0, -1, 2, 0, 2},   // (2,2)
        {1, 0, -1, -1, 3},  // (2,1,1)
        {-1, 1, 1, -1, 1},  // (1,1,1,1)
    };
    for (int l = 0; l < 5; ++l)
        for (int m = 0; m < 5; ++m) CHECK(t.chi(l, m) == want[l][m]);
}

TEST_CASE("dimensions match the hook length formula") {
    for (int n = 1; n <= 8; ++n) {
        const CharTable& t = CharTable::of(n);
        int id = int(t.partitions().size()) - 1;  // (1^n) is last
        CHECK(t.partitions()[size_t(id)] == Partition(std::vector<int>(size_t(n), 1)));
        for (const Partition& lam : t.partitions())
            CHECK(t.chi(lam, t.partitions()[size_t(id)]) == factorial(n) / hook_product(lam));
    }
}

TEST_CASE("row orthogonality") {
    for (int n = 1; n <= 7; ++n) {
        const CharTable& t = CharTable::of(n);
        size_t k = t.partitions().size();
        for (size_t a = 0; a < k; ++a)
            for (size_t b = a; b < k; ++b) {
                mpq_class s = 0;
                for (size_t m = 0; m < k; ++m) {
                    mpq_class term(mpz_class(t.chi(int(a), int(m)) * t.chi(int(b), int(m))),
                                   mpz_class(t.z(int(m))));
                    term.canonicalize();
                    s += term;
                }
                CHECK(s == (a == b ? 1 : 0));
            }
    }
}

TEST_CASE("column orthogonality") {
    for (int n = 1; n <= 7; ++n) {
        const CharTable& t = CharTable::of(n);
        size_t k = t.partitions().size();
        for (size_t m1 = 0; m1 < k; ++m1)
            for (size_t m2 = m1; m2 < k; ++m2) {
                mpz_class s = 0;
                for (size_t l = 0; l < k; ++l) s += t.chi(int(l), int(m1)) * t.chi(int(l), int(m2));
                CHECK(s == (m1 == m2 ? mpz_class(t.z(int(m1))) : mpz_class(0)));
            }
    }
}

TEST_CASE("conjugating the shape twists by the sign character") {
    for (int n = 1; n <= 7; ++n) {
        const CharTable& t = CharTable::of(n);
        for (const Partition& lam : t.partitions())
            for (const Partition& mu : t.partitions())
                CHECK(t.chi(lam.conjugate(), mu) == class_sign(mu) * t.chi(lam, mu));
    }
}

TEST_CASE("character_value agrees with the table and index_of inverts partitions()") {
    for (int n = 1; n <= 6; ++n) {
        const CharTable& t = CharTable::of(n);
        for (size_t i = 0; i < t.partitions().size(); ++i) {
            CHECK(t.index_of(t.partitions()[i]) == int(i));
            for (const Partition& mu : t.partitions())
                CHECK(character_value(t.partitions()[i], mu) == t.chi(t.partitions()[i], mu));
        }
    }
    CHECK(&CharTable::of(5) == &CharTable::of(5));  // cached
}
