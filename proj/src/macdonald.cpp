#include "fdr/macdonald.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fdr/linalg.hpp"

namespace fdr {

namespace {

int g_degree_bound = 7;

// Per-shape filling statistics, all precomputed against the reading order
// (rows top to bottom in French notation, left to right within a row).
// `south[i]` is the reading index of the cell directly below cell i (-1 on the
// bottom row); attacking pairs are stored as (earlier, later) reading indices.
struct ShapeData {
    std::vector<int> arm, leg, south;
    std::vector<std::pair<int, int>> attacks;
};

ShapeData shape_data(const Partition& mu) {
    ShapeData d;
    Partition conj = mu.conjugate();
    std::vector<std::pair<int, int>> order;  // (row, col), 1-indexed, row 1 = bottom
    std::map<std::pair<int, int>, int> index;
    for (int r = mu.length(); r >= 1; --r)
        for (int c = 1; c <= mu.part(r - 1); ++c) {
            index[{r, c}] = int(order.size());
            order.emplace_back(r, c);
        }
    size_t m = order.size();
    d.arm.resize(m);
    d.leg.resize(m);
    d.south.assign(m, -1);
    for (size_t i = 0; i < m; ++i) {
        auto [r, c] = order[i];
        d.arm[i] = mu.part(r - 1) - c;
        d.leg[i] = conj.part(c - 1) - r;
        if (r >= 2) d.south[i] = index.at({r - 1, c});
    }
    // u attacks v when they share a row, or v sits one row below and strictly
    // left of u; in both cases u comes first in the reading order.
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) {
            auto [ru, cu] = order[i];
            auto [rv, cv] = order[j];
            if (rv == ru || (rv == ru - 1 && cv < cu)) d.attacks.emplace_back(int(i), int(j));
        }
    return d;
}

}  // namespace

int macdonald_degree_bound() { return g_degree_bound; }
void set_macdonald_degree_bound(int bound) { g_degree_bound = bound; }

const SymQT& hhl_macdonald(const Partition& mu) {
    static std::map<Partition, SymQT, PartLess> cache;
    static std::mutex mx;
    std::lock_guard<std::mutex> lock(mx);
    auto it = cache.find(mu);
    if (it != cache.end()) return it->second;
    if (mu.size() > g_degree_bound)
        throw std::invalid_argument("hhl_macdonald: degree bound exceeded");

    ShapeData sd = shape_data(mu);
    SymQT out(Basis::m);
    for (const Partition& nu : partitions_of(mu.size())) {
        std::vector<int> w;
        for (int i = 0; i < nu.length(); ++i)
            w.insert(w.end(), size_t(nu.part(i)), i + 1);
        PolyQT total;
        do {
            int maj = 0, arms = 0, pairs = 0;
            for (size_t u = 0; u < w.size(); ++u) {
                int s = sd.south[u];
                if (s >= 0 && w[u] > w[size_t(s)]) {  // descent
                    maj += sd.leg[u] + 1;
                    arms += sd.arm[u];
                }
            }
            for (auto [a, b] : sd.attacks)
                if (w[size_t(a)] > w[size_t(b)]) ++pairs;
            int inv = pairs - arms;
            if (inv < 0)
                throw std::logic_error("hhl_macdonald: negative inv statistic");
            total += PolyQT::monomial(1, inv, maj);
        } while (std::next_permutation(w.begin(), w.end()));
        out.add_term(nu, RatFuncQT(std::move(total)));
    }
    return cache.emplace(mu, std::move(out)).first->second;
}

SymQT macdonald(const Partition& mu, Basis b) { return hhl_macdonald(mu).to(b); }

EigData eig_data(const Partition& mu) {
    PolyQT nab(1), pi(1);
    for (auto [r, c] : mu.cells()) {
        nab = nab * PolyQT::monomial(1, c - 1, r - 1);
        if (r == 1 && c == 1) continue;
        pi = pi * (PolyQT(1) - PolyQT::monomial(1, c - 1, r - 1));
    }
    return {RatFuncQT(std::move(nab)), RatFuncQT(std::move(pi))};
}

namespace {

// H~ -> m transition of one degree, inverted once.  With M[i][j] the m_(parts[j])
// coefficient of H~_(parts[i]), the expansion coefficients of f solve v = M^T c,
// so c_i = sum_j inv(M)[j][i] v_j.
struct ExpandData {
    std::vector<Partition> parts;
    Matrix<RatFuncQT> inv;
};

const ExpandData& expand_data(int n) {
    static std::map<int, ExpandData> cache;
    static std::mutex mx;
    std::lock_guard<std::mutex> lock(mx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    ExpandData d;
    d.parts = partitions_of(n);
    size_t m = d.parts.size();
    Matrix<RatFuncQT> trans(m, std::vector<RatFuncQT>(m));
    for (size_t i = 0; i < m; ++i) {
        const SymQT& h = hhl_macdonald(d.parts[i]);
        for (size_t j = 0; j < m; ++j) trans[i][j] = h.coeff(d.parts[j]);
    }
    d.inv = invert(trans);
    return cache.emplace(n, std::move(d)).first->second;
}

}  // namespace

MacdonaldExpansion macdonald_expand(const SymQT& f) {
    MacdonaldExpansion out;
    if (f.is_zero()) return out;
    int n = f.degree();
    for (const auto& [lam, c] : f.terms())
        if (lam.size() != n)
            throw std::invalid_argument("macdonald_expand: input must be homogeneous");
    if (n > g_degree_bound)
        throw std::invalid_argument("macdonald_expand: degree bound exceeded");
    out.degree = n;
    const ExpandData& d = expand_data(n);
    SymQT fm = f.to(Basis::m);
    std::vector<RatFuncQT> v(d.parts.size());
    for (size_t j = 0; j < v.size(); ++j) v[j] = fm.coeff(d.parts[j]);
    for (size_t i = 0; i < d.parts.size(); ++i) {
        RatFuncQT ci;
        for (size_t j = 0; j < v.size(); ++j) {
            if (v[j].is_zero() || d.inv[j][i].is_zero()) continue;
            ci += d.inv[j][i] * v[j];
        }
        if (!ci.is_zero()) out.coefficients.emplace(d.parts[i], std::move(ci));
    }
    return out;
}

SymQT from_macdonald(const MacdonaldExpansion& exp, Basis b) {
    SymQT acc(Basis::m);
    for (const auto& [mu, c] : exp.coefficients) acc += hhl_macdonald(mu).scaled(c);
    return acc.to(b);
}

namespace {

enum class EigKind { nabla, pi, pi_inv };

SymQT eigen_apply(const SymQT& f, EigKind kind) {
    if (f.is_zero()) return SymQT(Basis::s);
    std::map<int, SymQT> comps;  // split by degree; expansion wants homogeneous input
    for (const auto& [lam, c] : f.terms()) {
        auto [it, fresh] = comps.try_emplace(lam.size(), SymQT(f.basis()));
        it->second.add_term(lam, c);
    }
    SymQT out(Basis::s);
    for (const auto& [n, g] : comps) {
        MacdonaldExpansion e = macdonald_expand(g);
        MacdonaldExpansion scaled;
        scaled.degree = e.degree;
        for (const auto& [mu, c] : e.coefficients) {
            EigData ed = eig_data(mu);
            RatFuncQT v = kind == EigKind::nabla  ? c * ed.nabla_eig
                          : kind == EigKind::pi   ? c * ed.pi_eig
                                                  : c / ed.pi_eig;
            if (!v.is_zero()) scaled.coefficients.emplace(mu, std::move(v));
        }
        out += from_macdonald(scaled, Basis::s);
    }
    return out;
}

}  // namespace

SymQT nabla(const SymQT& f) { return eigen_apply(f, EigKind::nabla); }
SymQT pi_op(const SymQT& f) { return eigen_apply(f, EigKind::pi); }
SymQT pi_inverse(const SymQT& f) { return eigen_apply(f, EigKind::pi_inv); }

SymQT theta_e(int d, const SymQT& f) {
    if (d < 0) return SymQT(Basis::s);
    if (d == 0 || f.is_zero()) return f;
    // e_d[x/M] with M = (1-q)(1-t): scale p_k by 1/((1-q^k)(1-t^k)).
    std::function<RatFuncQT(int)> over_m = [](int k) {
        PolyQT den = (PolyQT(1) - PolyQT::monomial(1, k, 0)) *
                     (PolyQT(1) - PolyQT::monomial(1, 0, k));
        return RatFuncQT(PolyQT(1), std::move(den));
    };
    SymQT ed_over_m = alphabet_scale(SymQT::e(d), over_m);
    return pi_op(multiply(ed_over_m, pi_inverse(f), Basis::p));
}

SymQT enk(int n, int k) {
    if (n <= 0 || k <= 0 || k > n) return SymQT(Basis::s);
    SymQT total(Basis::p);
    for (int r = 1; r <= k; ++r) {  // the r = 0 plethysm empties the alphabet
        std::function<RatFuncQT(int)> rule = [r](int j) {
            PolyQT qrj = PolyQT::monomial(1, r * j, 0);
            PolyQT num = qrj - PolyQT(1);
            PolyQT den = qrj * (PolyQT(1) - PolyQT::monomial(1, j, 0));
            return RatFuncQT(std::move(num), std::move(den));
        };
        RatFuncQT coef(PolyQT::monomial(1, r * (r - 1) / 2, 0) * q_binomial(k, r));
        if (r % 2) coef = -coef;
        total += alphabet_scale(SymQT::e(n), rule).scaled(coef);
    }
    return total.scaled(RatFuncQT(PolyQT::monomial(1, k, 0))).to(Basis::s);
}

SymQT lift_qt(const SymF<mpq_class>& f) {
    SymQT out(f.basis());
    for (const auto& [lam, c] : f.terms()) out.add_term(lam, RatFuncQT(c));
    return out;
}

SymQT specialize_symf(const SymQT& f, std::optional<mpq_class> q0,
                      std::optional<mpq_class> t0) {
    if (!q0 && !t0) return f;
    if ((q0 && !t0 && *q0 != 0) || (t0 && !q0 && *t0 != 0))
        throw std::invalid_argument("specialize_symf: one-sided substitution only at 0");
    SymQT out(f.basis());
    for (const auto& [lam, c] : f.terms()) {
        try {
            RatFuncQT v = q0 && t0 ? RatFuncQT(c.eval(*q0, *t0))
                          : t0     ? c.at_t0()
                                   : c.at_q0();
            out.add_term(lam, std::move(v));
        } catch (const PoleError& e) {
            throw PoleError(std::string("pole in the coefficient of ") + char(f.basis()) +
                                "[" + lam.to_string() + "]: " + e.what(),
                            e.numerator, e.denominator);
        }
    }
    return out;
}

SymF<mpq_class> specialize_qt(const SymQT& f, const mpq_class& q0, const mpq_class& t0) {
    SymF<mpq_class> out(f.basis());
    for (const auto& [lam, c] : f.terms()) {
        try {
            out.add_term(lam, c.eval(q0, t0));
        } catch (const PoleError& e) {
            throw PoleError(std::string("pole in the coefficient of ") + char(f.basis()) +
                                "[" + lam.to_string() + "]: " + e.what(),
                            e.numerator, e.denominator);
        }
    }
    return out;
}

}  // namespace fdr
