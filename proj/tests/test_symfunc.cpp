#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include "fdr/symfunc.hpp"

using namespace fdr;

namespace {
using QS = SymF<mpq_class>;

QS s(std::vector<int> parts) { return QS::s(Partition(std::move(parts))); }
}  // namespace

TEST_CASE("canonical term storage") {
    QS f(Basis::s);
    f.add_term(Partition({2}), mpq_class(1));
    f.add_term(Partition({2}), mpq_class(-1));
    CHECK(f.is_zero());
    CHECK(f.to_string() == "0");
    CHECK((s({2}) + s({1, 1})).to_string() == "s[2] + s[1,1]");
    CHECK(QS::one(Basis::s).to_string() == "s[]");
    CHECK(s({2}).scaled(mpq_class(1, 2)).to_string() == "(1/2)*s[2]");
    CHECK((s({2}) - s({2})) == QS(Basis::s));
    CHECK(s({3, 1}).degree() == 4);
    CHECK(QS(Basis::s).degree() == 0);
    CHECK_THROWS_AS(s({2}) + QS::e(2), std::invalid_argument);  // basis mismatch
}

TEST_CASE("one-row and one-column conversions") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(QS::e(n).to(Basis::s) == QS::s(Partition(std::vector<int>(size_t(n), 1))));
        CHECK(QS::h(n).to(Basis::s) == QS::s(Partition({n})));
    }
    CHECK(QS::p(2).to(Basis::s) == s({2}) - s({1, 1}));
    CHECK(QS::p(3).to(Basis::s) == s({3}) - s({2, 1}) + s({1, 1, 1}));
    CHECK(QS::h(2).to(Basis::m) ==
          QS::single(Basis::m, Partition({2})) + QS::single(Basis::m, Partition({1, 1})));
    CHECK(QS::e(2).to(Basis::m) == QS::single(Basis::m, Partition({1, 1})));
}

TEST_CASE("basis round-trips at degree <= 6") {
    const Basis all[] = {Basis::m, Basis::e, Basis::h, Basis::p, Basis::s};
    for (int n = 0; n <= 6; ++n)
        for (const Partition& lam : partitions_of(n)) {
            QS start = QS::s(lam);
            for (Basis b : all) CHECK(start.to(b).to(Basis::s) == start);
        }
    // multi-step chain
    QS f = s({3, 1}) - s({2, 2}).scaled(mpq_class(2));
    CHECK(f.to(Basis::m).to(Basis::e).to(Basis::p).to(Basis::h).to(Basis::s) == f);
}

TEST_CASE("Hall inner product orthonormality") {
    for (int n = 1; n <= 5; ++n) {
        const auto parts = partitions_of(n);
        for (const Partition& a : parts)
            for (const Partition& b : parts) {
                CHECK(hall_inner(QS::s(a), QS::s(b)) == (a == b ? 1 : 0));
                CHECK(hall_inner(QS::single(Basis::h, a), QS::single(Basis::m, b)) ==
                      (a == b ? 1 : 0));
                CHECK(hall_inner(QS::single(Basis::p, a), QS::single(Basis::p, b)) ==
                      (a == b ? mpq_class(a.z_weight()) : mpq_class(0)));
            }
    }
}

TEST_CASE("multiply follows the Pieri rule on small cases") {
    CHECK(multiply(s({1}), s({1})) == s({2}) + s({1, 1}));
    CHECK(multiply(s({2}), s({1})) == s({3}) + s({2, 1}));
    CHECK(multiply(s({1, 1}), s({1})) == s({2, 1}) + s({1, 1, 1}));
    CHECK(multiply(s({2, 1}), QS::one(Basis::s)) == s({2, 1}));
    // e_a h_b = s_(b,1^a) + s_(b+1,1^(a-1))
    for (int a = 1; a <= 3; ++a)
        for (int b = 2; b <= 3; ++b) {
            QS lhs = multiply(QS::e(a), QS::h(b));
            std::vector<int> hook1{b};
            hook1.insert(hook1.end(), size_t(a), 1);
            std::vector<int> hook2{b + 1};
            hook2.insert(hook2.end(), size_t(a - 1), 1);
            CHECK(lhs == QS::s(Partition(hook1)) + QS::s(Partition(hook2)));
        }
}

TEST_CASE("skew_h and skew_e on frozen cases") {
    CHECK(skew_h(1, s({2, 1})) == s({2}) + s({1, 1}));
    CHECK(skew_h(2, s({2, 1})) == s({1}));
    CHECK(skew_h(3, s({2, 1})) == QS(Basis::s));
    CHECK(skew_h(0, s({2, 1})) == s({2, 1}));
    CHECK(skew_e(2, s({2, 1})) == s({1}));
    CHECK(skew_e(1, s({2, 2})) == s({2, 1}));
    CHECK(skew_h(2, s({2, 2})) == s({2}));  // horizontal strips only
    CHECK(skew_e(2, s({2, 2})) == s({1, 1}));
    CHECK(skew_h(-1, s({2})) == QS(Basis::s));
}

TEST_CASE("skewing is adjoint to multiplication") {
    for (int n = 2; n <= 5; ++n)
        for (int j = 1; j < n; ++j)
            for (const Partition& nu : partitions_of(n))
                for (const Partition& mu : partitions_of(n - j)) {
                    CHECK(hall_inner(skew_h(j, QS::s(nu)), QS::s(mu)) ==
                          hall_inner(QS::s(nu), multiply(QS::h(j), QS::s(mu))));
                    CHECK(hall_inner(skew_e(j, QS::s(nu)), QS::s(mu)) ==
                          hall_inner(QS::s(nu), multiply(QS::e(j), QS::s(mu))));
                }
}

TEST_CASE("skew_general matches the specialized skews") {
    for (int n = 2; n <= 5; ++n)
        for (int j = 1; j <= n; ++j)
            for (const Partition& nu : partitions_of(n)) {
                CHECK(skew_general(QS::h(j), QS::s(nu)).to(Basis::s) == skew_h(j, QS::s(nu)));
                CHECK(skew_general(QS::e(j), QS::s(nu)).to(Basis::s) == skew_e(j, QS::s(nu)));
            }
    CHECK(skew_general(s({2, 1}), s({2, 1})).to(Basis::s) == QS::one(Basis::s));
}

TEST_CASE("alphabet_scale acts multiplicatively on power sums") {
    QS f = QS::single(Basis::p, Partition({2, 1}));
    std::function<mpq_class(int)> twice = [](int) { return mpq_class(2); };
    CHECK(alphabet_scale(f, twice) == f.scaled(mpq_class(4)));
    std::function<mpq_class(int)> byk = [](int k) { return mpq_class(k); };
    CHECK(alphabet_scale(f, byk) == f.scaled(mpq_class(2)));
    // f[2x] distributes over sums after conversion
    QS g = s({2}) + s({1, 1});
    QS scaled = alphabet_scale(g, twice).to(Basis::s);
    CHECK(scaled == alphabet_scale(s({2}), twice).to(Basis::s) +
                        alphabet_scale(s({1, 1}), twice).to(Basis::s));
}
