#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fdr/macdonald.hpp"

using namespace fdr;

namespace {
using QS = SymF<mpq_class>;

RatFuncQT rq(PolyQT num) { return RatFuncQT(std::move(num)); }
PolyQT q_pow(int e) { return PolyQT::monomial(1, e, 0); }

SymQT qt_s(std::vector<int> parts, RatFuncQT c) {
    return SymQT::single(Basis::s, Partition(std::move(parts)), std::move(c));
}

SymQT swap_qt(const SymQT& f) {
    SymQT r(f.basis());
    for (const auto& [lam, c] : f.terms()) r.add_term(lam, c.swap_qt());
    return r;
}
}  // namespace

TEST_CASE("modified Macdonald polynomials, small shapes frozen") {
    PolyQT q = PolyQT::q(), t = PolyQT::t();
    CHECK(macdonald(Partition({1}), Basis::s) == qt_s({1}, 1));
    CHECK(macdonald(Partition({2}), Basis::s) == qt_s({2}, 1) + qt_s({1, 1}, rq(q)));
    CHECK(macdonald(Partition({1, 1}), Basis::s) == qt_s({2}, 1) + qt_s({1, 1}, rq(t)));
    CHECK(macdonald(Partition({2, 1}), Basis::s) ==
          qt_s({3}, 1) + qt_s({2, 1}, rq(q + t)) + qt_s({1, 1, 1}, rq(q * t)));
    CHECK(macdonald(Partition({3}), Basis::s) ==
          qt_s({3}, 1) + qt_s({2, 1}, rq(q + q * q)) + qt_s({1, 1, 1}, rq(q_pow(3))));
    CHECK(hhl_macdonald(Partition({2, 1})).basis() == Basis::m);
}

TEST_CASE("Macdonald coefficients are polynomial and collapse to h_n at q = t = 0") {
    // Only the inv = maj = 0 fillings survive at q = t = 0, one per multiset of
    // entries, so every shape of n collapses to h_n = s_(n).
    for (int n = 0; n <= 4; ++n)
        for (const Partition& mu : partitions_of(n)) {
            const SymQT& h = hhl_macdonald(mu);
            for (const auto& [lam, c] : h.terms()) {
                (void)lam;
                CHECK(c.is_polynomial());
            }
            Partition row = n == 0 ? Partition() : Partition({n});
            CHECK(specialize_qt(macdonald(mu, Basis::s), 0, 0) == QS::s(row));
        }
}

TEST_CASE("the top-cocharge slice of the Kostka coefficients is the identity") {
    // In the transformed normalization t^{n(mu)} H~_mu(x; q, 1/t), the q = t = 0
    // specialization is s_mu; on H~ itself that reads off the coefficient of
    // q^0 t^{n(mu)} in each Schur coefficient.
    for (int n = 1; n <= 4; ++n)
        for (const Partition& mu : partitions_of(n)) {
            int nmu = 0;
            for (const auto& [r, c] : mu.cells()) {
                (void)c;
                nmu += r - 1;
            }
            SymQT h = macdonald(mu, Basis::s);
            for (const Partition& lam : partitions_of(n)) {
                mpz_class top = h.coeff(lam).numerator().at_q0().coeff(0, nmu);
                CHECK(top == (lam == mu ? 1 : 0));
            }
        }
}

TEST_CASE("conjugating the shape swaps q and t") {
    for (int n = 1; n <= 4; ++n)
        for (const Partition& mu : partitions_of(n))
            CHECK(swap_qt(macdonald(mu, Basis::s)) == macdonald(mu.conjugate(), Basis::s));
}

TEST_CASE("eigenvalue data") {
    PolyQT q = PolyQT::q(), t = PolyQT::t(), one(1);
    CHECK(eig_data(Partition()).nabla_eig == RatFuncQT(1));
    CHECK(eig_data(Partition()).pi_eig == RatFuncQT(1));
    CHECK(eig_data(Partition({1})).nabla_eig == RatFuncQT(1));
    CHECK(eig_data(Partition({1})).pi_eig == RatFuncQT(1));
    EigData e22 = eig_data(Partition({2, 2}));
    CHECK(e22.nabla_eig == rq(PolyQT::monomial(1, 2, 2)));
    CHECK(e22.pi_eig == rq((one - q) * (one - t) * (one - q * t)));
}

TEST_CASE("nabla and Pi act with the advertised eigenvalues") {
    for (int n = 1; n <= 4; ++n)
        for (const Partition& mu : partitions_of(n)) {
            SymQT h = macdonald(mu, Basis::s);
            EigData eig = eig_data(mu);
            CHECK(nabla(h) == h.scaled(eig.nabla_eig));
            CHECK(pi_op(h) == h.scaled(eig.pi_eig));
        }
}

TEST_CASE("pi_inverse undoes pi_op") {
    SymQT f = qt_s({2, 1}, 1) + qt_s({3}, RatFuncQT::q() - RatFuncQT::t());
    CHECK(pi_inverse(pi_op(f)) == f);
    CHECK(pi_op(pi_inverse(f)) == f);
}

TEST_CASE("nabla on elementary symmetric functions") {
    PolyQT q = PolyQT::q(), t = PolyQT::t();
    SymQT e2 = lift_qt(QS::e(2)).to(Basis::s);
    CHECK(nabla(e2) == qt_s({2}, 1) + qt_s({1, 1}, rq(q + t)));

    SymQT e3 = lift_qt(QS::e(3)).to(Basis::s);
    RatFuncQT catalan3 = hall_inner(nabla(e3), qt_s({1, 1, 1}, 1));
    PolyQT expected = q_pow(3) + q * q * t + q * (t * t) + t * t * t + q * t;
    CHECK(catalan3 == rq(expected));
}

TEST_CASE("Theta operator basics") {
    SymQT one = SymQT::one(Basis::s);
    PolyQT m = (PolyQT(1) - PolyQT::q()) * (PolyQT(1) - PolyQT::t());
    CHECK(theta_e(1, one) == qt_s({1}, RatFuncQT(PolyQT(1), m)));
    CHECK(theta_e(2, one).degree() == 2);

    SymQT f = qt_s({2}, RatFuncQT::q()) + qt_s({1, 1}, 1);
    CHECK(theta_e(0, f) == f);
    CHECK(theta_e(-1, f).is_zero());
    CHECK(theta_e(1, SymQT(Basis::s)).is_zero());
}

TEST_CASE("expansion in the Macdonald basis inverts assembly") {
    SymQT f = macdonald(Partition({2, 1}), Basis::s).scaled(RatFuncQT::t()) +
              macdonald(Partition({3}), Basis::s).scaled(RatFuncQT(PolyQT(1), PolyQT::q()));
    MacdonaldExpansion exp = macdonald_expand(f);
    CHECK(exp.degree == 3);
    CHECK(exp.coefficients.size() == 2);
    CHECK(exp.coefficients.at(Partition({2, 1})) == RatFuncQT::t());
    CHECK(exp.coefficients.at(Partition({3})) == RatFuncQT(PolyQT(1), PolyQT::q()));
    CHECK(from_macdonald(exp, Basis::s) == f);

    for (const Partition& mu : partitions_of(3)) {
        MacdonaldExpansion delta = macdonald_expand(macdonald(mu, Basis::m));
        CHECK(delta.coefficients.size() == 1);
        CHECK(delta.coefficients.at(mu) == RatFuncQT(1));
    }
}

TEST_CASE("E_{n,k} frozen values and the sum rule") {
    CHECK(enk(1, 1) == qt_s({1}, 1));
    CHECK(enk(2, 1) == qt_s({2}, RatFuncQT(PolyQT(-1), PolyQT::q())));
    PolyQT neg = PolyQT(-1) - PolyQT::q();
    CHECK(enk(3, 2) == qt_s({3}, RatFuncQT(neg, q_pow(3))) +
                           qt_s({2, 1}, RatFuncQT(neg, q_pow(2))));
    CHECK(enk(3, 0).is_zero());
    CHECK(enk(3, 4).is_zero());

    for (int n = 1; n <= 4; ++n) {
        SymQT total(Basis::s);
        for (int k = 1; k <= n; ++k) total += enk(n, k);
        CHECK(total == lift_qt(QS::e(n)).to(Basis::s));
    }
}

TEST_CASE("specialization of q,t coefficients") {
    PolyQT q = PolyQT::q();
    SymQT h21 = macdonald(Partition({2, 1}), Basis::s);
    CHECK(specialize_symf(h21, std::nullopt, mpq_class(0)) ==
          qt_s({3}, 1) + qt_s({2, 1}, rq(q)));
    CHECK(specialize_symf(h21, mpq_class(0), std::nullopt) ==
          qt_s({3}, 1) + qt_s({2, 1}, RatFuncQT::t()));
    CHECK_THROWS_AS(specialize_symf(h21, std::nullopt, mpq_class(1)), std::invalid_argument);

    SymQT pole = qt_s({1}, RatFuncQT(PolyQT(1), PolyQT::t()));
    CHECK_THROWS_AS(specialize_symf(pole, std::nullopt, mpq_class(0)), PoleError);

    for (int k = 1; k <= 4; ++k) {
        SymQT ek = lift_qt(QS::e(k)).to(Basis::s);
        CHECK(specialize_symf(nabla(ek), std::nullopt, mpq_class(0)) ==
              macdonald(Partition({k}), Basis::s));
    }
}

TEST_CASE("degree bound guards the q,t machinery") {
    int old = macdonald_degree_bound();
    CHECK(old == 7);
    set_macdonald_degree_bound(4);
    CHECK_THROWS_AS(hhl_macdonald(Partition({5})), std::invalid_argument);
    CHECK_THROWS_AS(macdonald_expand(lift_qt(QS::s(Partition({4, 1})))),
                    std::invalid_argument);
    set_macdonald_degree_bound(old);
    CHECK(hhl_macdonald(Partition({5})).degree() == 5);
}
