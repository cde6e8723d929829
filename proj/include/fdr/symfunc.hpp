#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fdr/characters.hpp"
#include "fdr/partition.hpp"
#include "fdr/ratfunc.hpp"

namespace fdr {

/// m = monomial, e = elementary, h = complete homogeneous, p = power sum,
/// s = Schur, H = modified Macdonald (held as an opaque label here; expanding
/// it needs the q,t machinery, so the core converter rejects it).
enum class Basis : char { m = 'm', e = 'e', h = 'h', p = 'p', s = 's', H = 'H' };

// Per-degree / per-part expansion caches shared by every coefficient type.
// Entries are exact rationals; the p <-> m matrices are integral, their
// inverses are not.
using QMap = std::map<Partition, mpq_class, PartLess>;
const QMap& e_in_p(int k);  // e_k expanded in the p basis
const QMap& h_in_p(int k);
const QMap& p_in_e(int k);  // p_k expanded in the e basis
const QMap& p_in_h(int k);
/// Row lambda of the degree-n transition: p_lambda = sum_mu M[lambda][mu] m_mu.
const std::vector<std::vector<mpq_class>>& p_to_m_matrix(int n);
const std::vector<std::vector<mpq_class>>& m_to_p_matrix(int n);

/**
 * A symmetric function held in one basis: a finite coefficient map keyed by
 * partition.  Zero coefficients are never stored.  Addition requires matching
 * bases; cross-basis work goes through to().  All conversions route through
 * the power sums, where every product is just a multiset union of parts.
 */
template <class C>
class SymF {
public:
    using Ops = CoeffOps<C>;
    using Terms = std::map<Partition, C, PartLess>;

    SymF() : basis_(Basis::s) {}
    explicit SymF(Basis b) : basis_(b) {}

    static SymF one(Basis b = Basis::s) {
        SymF f(b);
        f.add_term(Partition(), C(1));
        return f;
    }
    static SymF single(Basis b, Partition lam, C c = C(1)) {
        SymF f(b);
        f.add_term(std::move(lam), std::move(c));
        return f;
    }
    static SymF e(int k) { return single(Basis::e, Partition(std::vector<int>(1, k))); }
    static SymF h(int k) { return single(Basis::h, Partition(std::vector<int>(1, k))); }
    static SymF p(int k) { return single(Basis::p, Partition(std::vector<int>(1, k))); }
    static SymF s(Partition lam) { return single(Basis::s, std::move(lam)); }

    Basis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    C coeff(const Partition& lam) const {
        auto it = terms_.find(lam);
        return it == terms_.end() ? C(0) : it->second;
    }

    void add_term(Partition lam, C c) {
        if (Ops::is_zero(c)) return;
        auto [it, fresh] = terms_.try_emplace(std::move(lam), C(0));
        it->second += c;
        if (Ops::is_zero(it->second)) terms_.erase(it);
    }

    SymF& operator+=(const SymF& o) {
        require_same_basis(o);
        for (const auto& [lam, c] : o.terms_) add_term(lam, c);
        return *this;
    }
    SymF& operator-=(const SymF& o) {
        require_same_basis(o);
        for (const auto& [lam, c] : o.terms_) add_term(lam, C(0) - c);
        return *this;
    }
    friend SymF operator+(SymF a, const SymF& b) { return a += b; }
    friend SymF operator-(SymF a, const SymF& b) { return a -= b; }

    SymF scaled(const C& c) const {
        SymF r(basis_);
        if (Ops::is_zero(c)) return r;
        for (const auto& [lam, v] : terms_) r.add_term(lam, v * c);
        return r;
    }

    bool operator==(const SymF& o) const {
        require_same_basis(o);
        return terms_ == o.terms_;
    }
    bool operator!=(const SymF& o) const { return !(*this == o); }

    /// Largest degree appearing (0 for the zero function).
    int degree() const {
        int d = 0;
        for (const auto& [lam, c] : terms_) d = std::max(d, lam.size());
        return d;
    }

    SymF to(Basis b) const;

    std::string to_string() const;

private:
    Basis basis_;
    Terms terms_;

    void require_same_basis(const SymF& o) const {
        if (basis_ != o.basis_)
            throw std::invalid_argument("SymF: basis mismatch; convert with to() first");
    }
};

// ---- implementation ----

namespace detail {

/// Multiply two p-basis expansions: keys merge as multisets.
template <class C>
SymF<C> p_multiply(const SymF<C>& a, const SymF<C>& b) {
    SymF<C> r(Basis::p);
    for (const auto& [la, ca] : a.terms())
        for (const auto& [lb, cb] : b.terms()) {
            std::vector<int> parts = la.parts();
            parts.insert(parts.end(), lb.parts().begin(), lb.parts().end());
            r.add_term(Partition::from_unsorted(std::move(parts)), ca * cb);
        }
    return r;
}

template <class C>
SymF<C> lift_qmap(const QMap& src, Basis b) {
    SymF<C> r(b);
    for (const auto& [lam, c] : src) r.add_term(lam, CoeffOps<C>::from_mpq(c));
    return r;
}

/// X_lambda expanded in p, where X is a multiplicative basis (e or h): the
/// product over parts of the cached single-part expansions.
template <class C>
SymF<C> multiplicative_to_p(const Partition& lam, const QMap& (*part_in_p)(int)) {
    SymF<C> acc = SymF<C>::one(Basis::p);
    for (int part : lam.parts()) acc = p_multiply(acc, lift_qmap<C>(part_in_p(part), Basis::p));
    return acc;
}

template <class C>
SymF<C> p_key_to_basis(const Partition& mu, Basis b, const QMap& (*p_part_in)(int)) {
    SymF<C> acc = SymF<C>::one(b);
    for (int part : mu.parts()) {
        SymF<C> factor = lift_qmap<C>(p_part_in(part), b);
        SymF<C> next(b);
        for (const auto& [la, ca] : acc.terms())
            for (const auto& [lb, cb] : factor.terms()) {
                std::vector<int> parts = la.parts();
                parts.insert(parts.end(), lb.parts().begin(), lb.parts().end());
                next.add_term(Partition::from_unsorted(std::move(parts)), ca * cb);
            }
        acc = std::move(next);
    }
    return acc;
}

}  // namespace detail

template <class C>
SymF<C> SymF<C>::to(Basis b) const {
    if (basis_ == Basis::H || b == Basis::H)
        throw std::invalid_argument("SymF::to: Macdonald expansions need the q,t machinery");
    if (b == basis_) return *this;

    // Everything routes through p.
    SymF<C> pform(Basis::p);
    switch (basis_) {
        case Basis::p:
            pform = *this;
            break;
        case Basis::e:
            for (const auto& [lam, c] : terms_)
                pform += detail::multiplicative_to_p<C>(lam, &e_in_p).scaled(c);
            break;
        case Basis::h:
            for (const auto& [lam, c] : terms_)
                pform += detail::multiplicative_to_p<C>(lam, &h_in_p).scaled(c);
            break;
        case Basis::s:
            for (const auto& [lam, c] : terms_) {
                const CharTable& tab = CharTable::of(lam.size());
                int li = tab.index_of(lam);
                for (size_t m = 0; m < tab.partitions().size(); ++m) {
                    const mpz_class& chi = tab.chi(li, int(m));
                    if (chi == 0) continue;
                    mpq_class w(chi, mpz_class(tab.z(int(m))));
                    w.canonicalize();
                    pform.add_term(tab.partitions()[m], c * Ops::from_mpq(w));
                }
            }
            break;
        case Basis::m:
            for (const auto& [lam, c] : terms_) {
                const auto& inv = m_to_p_matrix(lam.size());
                const CharTable& tab = CharTable::of(lam.size());
                int li = tab.index_of(lam);
                for (size_t m = 0; m < tab.partitions().size(); ++m) {
                    const mpq_class& w = inv[size_t(li)][m];
                    if (w == 0) continue;
                    pform.add_term(tab.partitions()[m], c * Ops::from_mpq(w));
                }
            }
            break;
        default:
            throw std::logic_error("SymF::to: unhandled basis");
    }
    if (b == Basis::p) return pform;

    SymF<C> out(b);
    switch (b) {
        case Basis::e:
            for (const auto& [mu, c] : pform.terms())
                out += detail::p_key_to_basis<C>(mu, Basis::e, &p_in_e).scaled(c);
            break;
        case Basis::h:
            for (const auto& [mu, c] : pform.terms())
                out += detail::p_key_to_basis<C>(mu, Basis::h, &p_in_h).scaled(c);
            break;
        case Basis::s:
            for (const auto& [mu, c] : pform.terms()) {
                const CharTable& tab = CharTable::of(mu.size());
                int mi = tab.index_of(mu);
                for (size_t l = 0; l < tab.partitions().size(); ++l) {
                    const mpz_class& chi = tab.chi(int(l), mi);
                    if (chi == 0) continue;
                    out.add_term(tab.partitions()[l], c * Ops::from_mpq(mpq_class(chi)));
                }
            }
            break;
        case Basis::m:
            for (const auto& [mu, c] : pform.terms()) {
                const auto& mat = p_to_m_matrix(mu.size());
                const CharTable& tab = CharTable::of(mu.size());
                int mi = tab.index_of(mu);
                for (size_t l = 0; l < tab.partitions().size(); ++l) {
                    const mpq_class& w = mat[size_t(mi)][l];
                    if (w == 0) continue;
                    out.add_term(tab.partitions()[l], c * Ops::from_mpq(w));
                }
            }
            break;
        default:
            throw std::logic_error("SymF::to: unhandled basis");
    }
    return out;
}

template <class C>
std::string SymF<C>::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [lam, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (!Ops::is_one(c)) {
            std::string cs = Ops::str(c);
            bool wrap = cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos ||
                        cs.find('-') != std::string::npos;
            os << (wrap ? "(" + cs + ")" : cs) << "*";
        }
        os << char(basis_) << "[" << (lam.length() ? lam.to_string() : "") << "]";
    }
    return os.str();
}

/// Product in the p basis, converted to `out`.
template <class C>
SymF<C> multiply(const SymF<C>& a, const SymF<C>& b, Basis out = Basis::s) {
    return detail::p_multiply(a.to(Basis::p), b.to(Basis::p)).to(out);
}

/// Hall inner product: <p_lambda, p_mu> = z_lambda [lambda == mu].
template <class C>
C hall_inner(const SymF<C>& a, const SymF<C>& b) {
    SymF<C> pa = a.to(Basis::p), pb = b.to(Basis::p);
    C total(0);
    for (const auto& [lam, ca] : pa.terms()) {
        auto it = pb.terms().find(lam);
        if (it == pb.terms().end()) continue;
        total += ca * it->second * CoeffOps<C>::from_mpq(mpq_class(lam.z_weight()));
    }
    return total;
}

/// h_j-perp on the s basis: strip s_nu down every horizontal strip of size j.
template <class C>
SymF<C> skew_h(int j, const SymF<C>& f) {
    if (j < 0) return SymF<C>(Basis::s);
    SymF<C> src = f.to(Basis::s), out(Basis::s);
    for (const auto& [nu, c] : src.terms()) {
        // mu interlaces nu: nu_i >= mu_i >= nu_{i+1}, |nu| - |mu| = j.
        std::vector<int> mu(size_t(nu.length()), 0);
        std::function<void(int, int)> rec = [&](int row, int removed) {
            if (removed > j) return;
            if (row == nu.length()) {
                if (removed == j) out.add_term(Partition::from_unsorted(mu), c);
                return;
            }
            int lo = nu.part(row + 1), hi = nu.part(row);
            for (int v = lo; v <= hi; ++v) {
                mu[size_t(row)] = v;
                rec(row + 1, removed + (nu.part(row) - v));
            }
            mu[size_t(row)] = 0;
        };
        rec(0, 0);
    }
    return out;
}

/// e_j-perp on the s basis: strip vertical strips (at most one cell per row).
template <class C>
SymF<C> skew_e(int j, const SymF<C>& f) {
    if (j < 0) return SymF<C>(Basis::s);
    SymF<C> src = f.to(Basis::s), out(Basis::s);
    for (const auto& [nu, c] : src.terms()) {
        std::vector<int> mu(size_t(nu.length()), 0);
        std::function<void(int, int)> rec = [&](int row, int removed) {
            if (removed > j) return;
            if (row == nu.length()) {
                if (removed == j) out.add_term(Partition::from_unsorted(mu), c);
                return;
            }
            for (int d = 0; d <= 1; ++d) {
                int v = nu.part(row) - d;
                if (v < 0) continue;
                // keep weakly decreasing against the previous row's choice
                if (row > 0 && v > mu[size_t(row - 1)]) continue;
                mu[size_t(row)] = v;
                rec(row + 1, removed + d);
            }
            mu[size_t(row)] = 0;
        };
        rec(0, 0);
    }
    return out;
}

/**
 * General skew F-perp G, computed in the p basis where p_k-perp acts on a key
 * by deleting one part k and multiplying by k * (multiplicity of k).
 */
template <class C>
SymF<C> skew_general(const SymF<C>& f, const SymF<C>& g) {
    SymF<C> pf = f.to(Basis::p), pg = g.to(Basis::p);
    SymF<C> out(Basis::p);
    for (const auto& [lam, cf] : pf.terms()) {
        for (const auto& [mu, cg] : pg.terms()) {
            // apply p_k-perp for every part k of lam in turn
            std::vector<int> rest = mu.parts();
            mpz_class factor = 1;
            bool ok = true;
            for (int k : lam.parts()) {
                auto it = std::find(rest.begin(), rest.end(), k);
                if (it == rest.end()) {
                    ok = false;
                    break;
                }
                long mult = std::count(rest.begin(), rest.end(), k);
                factor *= mpz_class(k) * mult;
                rest.erase(it);
            }
            if (!ok) continue;
            out.add_term(Partition::from_unsorted(rest),
                         cf * cg * CoeffOps<C>::from_mpq(mpq_class(factor)));
        }
    }
    return out;
}

/**
 * Plethystic alphabet scaling: in the p basis, send p_k to rule(k) * p_k.
 * Result stays in the p basis.
 */
template <class C>
SymF<C> alphabet_scale(const SymF<C>& f, const std::function<C(int)>& rule) {
    SymF<C> pf = f.to(Basis::p), out(Basis::p);
    for (const auto& [lam, c] : pf.terms()) {
        C v = c;
        for (int k : lam.parts()) v = v * rule(k);
        out.add_term(lam, std::move(v));
    }
    return out;
}

}  // namespace fdr
