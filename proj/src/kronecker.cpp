#include "fdr/kronecker.hpp"

#include <stdexcept>

namespace fdr {

bool ClassFunction::is_integral() const {
    for (const auto& v : values)
        if (v.get_den() != 1) return false;
    return true;
}

ClassFunction character_of(const SymF<mpq_class>& f) {
    int n = f.degree();
    const CharTable& tab = CharTable::of(n);
    SymF<mpq_class> pf = f.to(Basis::p);
    ClassFunction out;
    out.n = n;
    out.values.assign(tab.partitions().size(), mpq_class(0));
    for (const auto& [mu, c] : pf.terms()) {
        if (mu.size() != n)
            throw std::invalid_argument("character_of: inhomogeneous input");
        out.values[size_t(tab.index_of(mu))] = c * mpq_class(mu.z_weight());
    }
    return out;
}

SymF<mpq_class> frobenius_of(const ClassFunction& chi) {
    const CharTable& tab = CharTable::of(chi.n);
    if (chi.values.size() != tab.partitions().size())
        throw std::invalid_argument("frobenius_of: value count mismatch");
    SymF<mpq_class> pf(Basis::p);
    for (size_t m = 0; m < chi.values.size(); ++m) {
        if (chi.values[m] == 0) continue;
        mpq_class w = chi.values[m] / mpq_class(tab.z(int(m)));
        pf.add_term(tab.partitions()[m], w);
    }
    return pf.to(Basis::s);
}

SymF<mpq_class> kronecker(const SymF<mpq_class>& f, const SymF<mpq_class>& g) {
    if (f.is_zero() || g.is_zero()) return SymF<mpq_class>(Basis::s);
    if (f.degree() != g.degree())
        throw std::invalid_argument("kronecker: degree mismatch");
    ClassFunction a = character_of(f), b = character_of(g);
    ClassFunction prod;
    prod.n = a.n;
    prod.values.resize(a.values.size());
    for (size_t i = 0; i < a.values.size(); ++i) prod.values[i] = a.values[i] * b.values[i];
    return frobenius_of(prod);
}

mpz_class kronecker_multiplicity(const Partition& rho, const Partition& mu1,
                                 const Partition& mu2) {
    if (rho.size() != mu1.size() || rho.size() != mu2.size())
        throw std::invalid_argument("kronecker_multiplicity: size mismatch");
    const CharTable& tab = CharTable::of(rho.size());
    int ri = tab.index_of(rho), ai = tab.index_of(mu1), bi = tab.index_of(mu2);
    mpq_class total = 0;
    for (size_t m = 0; m < tab.partitions().size(); ++m) {
        mpq_class term(tab.chi(ri, int(m)) * tab.chi(ai, int(m)) * tab.chi(bi, int(m)),
                       mpz_class(tab.z(int(m))));
        term.canonicalize();
        total += term;
    }
    if (total.get_den() != 1)
        throw std::logic_error("kronecker_multiplicity: non-integer result");
    return total.get_num();
}

namespace {

/// Count ballot fillings of nu/lambda with content mu: rows weakly increase,
/// columns strictly increase, and every prefix of the reverse reading word
/// (rows top to bottom, right to left) has #v >= #(v+1) for all v.
struct LrCounter {
    const Partition& lambda;
    const Partition& mu;
    const Partition& nu;
    std::vector<std::vector<int>> fill;  // 0 = empty; rows sized to nu
    std::vector<int> used;               // how many of each value placed so far
    mpz_class count = 0;

    LrCounter(const Partition& l, const Partition& m, const Partition& n)
        : lambda(l), mu(m), nu(n) {
        fill.resize(size_t(nu.length()));
        for (int r = 0; r < nu.length(); ++r) fill[size_t(r)].assign(size_t(nu.part(r)), 0);
        used.assign(size_t(mu.length() + 1), 0);
    }

    void run(int r, int c) {
        // advance to the next skew cell in reading order (right-to-left per row)
        while (r < nu.length() && c < lambda.part(r)) {
            ++r;
            c = (r < nu.length()) ? nu.part(r) - 1 : 0;
        }
        if (r == nu.length()) {
            ++count;
            return;
        }
        for (int v = 1; v <= mu.length(); ++v) {
            if (used[size_t(v)] == mu.part(v - 1)) continue;                   // content
            if (v >= 2 && used[size_t(v - 1)] <= used[size_t(v)]) continue;    // ballot
            if (c + 1 < nu.part(r) && fill[size_t(r)][size_t(c + 1)] < v) continue;  // row
            if (r > 0 && c < nu.part(r - 1) && c >= lambda.part(r - 1) &&
                fill[size_t(r - 1)][size_t(c)] >= v)
                continue;  // column strict below the cell above (if that cell is skew)
            fill[size_t(r)][size_t(c)] = v;
            used[size_t(v)]++;
            if (c > lambda.part(r))
                run(r, c - 1);
            else
                run(r + 1, (r + 1 < nu.length()) ? nu.part(r + 1) - 1 : 0);
            used[size_t(v)]--;
            fill[size_t(r)][size_t(c)] = 0;
        }
    }
};

}  // namespace

mpz_class lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() + mu.size() != nu.size())
        throw std::invalid_argument("lr_coefficient: size mismatch");
    for (int r = 0; r < nu.length() + 1; ++r)
        if (lambda.part(r) > nu.part(r)) return 0;  // lambda not contained in nu
    if (mu.size() == 0) return 1;                   // empty skew shape, empty filling
    LrCounter counter(lambda, mu, nu);
    counter.run(0, nu.part(0) - 1);
    return counter.count;
}

mpz_class lr_coefficient_oracle(const Partition& lambda, const Partition& mu,
                                const Partition& nu) {
    if (lambda.size() + mu.size() != nu.size())
        throw std::invalid_argument("lr_coefficient_oracle: size mismatch");
    auto prod = multiply(SymF<mpq_class>::s(lambda), SymF<mpq_class>::s(mu));
    mpq_class c = prod.coeff(nu);
    if (c.get_den() != 1)
        throw std::logic_error("lr_coefficient_oracle: non-integer coefficient");
    return c.get_num();
}

}  // namespace fdr
