#include "fdr/identities.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "fdr/exterior_coinvariants.hpp"

namespace fdr {

namespace {

using QS = SymF<mpq_class>;

QS zero_s() { return QS(Basis::s); }

/// Kronecker product of two hook Schur functions, zero when either hook's
/// parameters are out of range.
QS hook_kron(int b1, int a1, int b2, int a2) {
    auto h1 = hook_shape(b1, a1);
    auto h2 = hook_shape(b2, a2);
    if (!h1 || !h2) return zero_s();
    return kronecker(QS::s(*h1), QS::s(*h2));
}

/// h_b * e_a in the Schur basis; zero when an index is negative.
QS he_product(int b, int a) {
    if (b < 0 || a < 0) return zero_s();
    QS hb = b == 0 ? QS::one(Basis::h) : QS::h(b);
    QS ea = a == 0 ? QS::one(Basis::e) : QS::e(a);
    return multiply(hb, ea, Basis::s);
}

std::string fmt_params(std::initializer_list<std::pair<const char*, std::string>> ps) {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (const auto& [key, value] : ps) {
        if (!first) os << ", ";
        first = false;
        os << key << "=" << value;
    }
    os << ")";
    return os.str();
}

std::string num(int v) { return std::to_string(v); }
std::string part_str(const Partition& p) { return "[" + p.to_string() + "]"; }

}  // namespace

SymF<mpq_class> fdr_formula(int n, int i, int j) {
    if (n < 1) throw std::invalid_argument("fdr_formula: n must be positive");
    if (i + j >= n) return zero_s();
    return hook_kron(n - i, i, n - j, j) - hook_kron(n - i + 1, i - 1, n - j + 1, j - 1);
}

SymF<mpq_class> kron_skew_rhs(const Partition& l1, const Partition& l2, int j,
                              SkewFlavor flavor) {
    int n = l1.size();
    if (l2.size() != n) throw std::invalid_argument("kron_skew_rhs: size mismatch");
    if (j < 1 || j > n) throw std::invalid_argument("kron_skew_rhs: j out of range");
    QS out = zero_s();
    std::vector<Partition> nus = partitions_of(n - j);
    for (const Partition& mu : partitions_of(j)) {
        Partition mu1 = flavor == SkewFlavor::e ? mu.conjugate() : mu;
        for (const Partition& nu1 : nus) {
            mpz_class c1 = lr_coefficient(mu1, nu1, l1);
            if (c1 == 0) continue;
            for (const Partition& nu2 : nus) {
                mpz_class c2 = lr_coefficient(mu, nu2, l2);
                if (c2 == 0) continue;
                out += kronecker(QS::s(nu1), QS::s(nu2)).scaled(mpq_class(c1 * c2));
            }
        }
    }
    return out;
}

VerificationReport kron_skew_check(const Partition& l1, const Partition& l2, int j,
                                   SkewFlavor flavor) {
    QS prod = kronecker(QS::s(l1), QS::s(l2));
    QS lhs = flavor == SkewFlavor::h ? skew_h(j, prod) : skew_e(j, prod);
    QS rhs = kron_skew_rhs(l1, l2, j, flavor);
    const char* name = flavor == SkewFlavor::h ? "kron-skew[h]" : "kron-skew[e]";
    return detail::make_report(name,
                               fmt_params({{"l1", part_str(l1)},
                                           {"l2", part_str(l2)},
                                           {"j", num(j)}}),
                               lhs, rhs);
}

std::pair<SymF<mpq_class>, SymF<mpq_class>> hook_skew_sides(int k, int l, int m, int j) {
    QS diff = hook_kron(k + l, m, k + m, l) - hook_kron(k + l + 1, m - 1, k + m + 1, l - 1);
    QS lhs = skew_h(j, diff);
    QS rhs = kronecker(he_product(k + l - j, m), he_product(k + m - j, l)) -
             kronecker(he_product(k + l, m - j), he_product(k + m, l - j));
    return {std::move(lhs), std::move(rhs)};
}

VerificationReport hook_skew_check(int k, int l, int m, int j) {
    auto [lhs, rhs] = hook_skew_sides(k, l, m, j);
    return detail::make_report("hook-skew",
                               fmt_params({{"k", num(k)}, {"l", num(l)},
                                           {"m", num(m)}, {"j", num(j)}}),
                               lhs, rhs);
}

VerificationReport reformulation_check(int k, int l, int m, int j) {
    QS lhs = skew_h(j, hook_kron(k + l, m, k + m, l));
    QS rhs = zero_s();
    // r indexes the hooks mu = (j-r, 1^r) of j, so it stops at j-1; summing to
    // j would double-count the term the telescoped difference subtracts.
    for (int r = 0; r < j; ++r)
        rhs += kronecker(he_product(k + l - j + r, m - r), he_product(k + m - j + r, l - r));
    return detail::make_report("reformulation-one",
                               fmt_params({{"k", num(k)}, {"l", num(l)},
                                           {"m", num(m)}, {"j", num(j)}}),
                               lhs, rhs);
}

namespace {

const SymF<mpq_class>& theta_v(int m, int l, int k);

/**
 * h_j-perp of V(m,l,k) := Theta_m Theta_l nabla e_k |_{q=t=0}, in the monomial
 * basis.  This is the q=t=0 shadow of the skewing recursion for Theta chains:
 * every summand whose q-power or q-binomial coefficients survive q=0
 * contributes its V value with weight 0, 1, or 2, and the lone constant term
 * appears exactly when the chain telescopes completely (j = k, no Thetas).
 * Every surviving call drops total degree by j and keeps the third argument
 * positive, so the recursion terminates.
 */
SymF<mpq_class> hperp_v(int j, int m, int l, int k) {
    SymF<mpq_class> out(Basis::m);
    for (int r = 0; r <= std::min(j, k); ++r) {
        int mp = m - j + r;
        if (mp < 0) continue;
        for (int a = 0; a <= k; ++a) {
            int np = j - r + a;
            if (np < 1) continue;
            int lp = l + k - j - a;
            if (lp < 0) continue;
            int d = k - r - a;
            int weight = 0;
            // first summand survives q=0 iff its q-power and both binomials do
            if ((d == 0 || d == 1) && r <= j - 1 && a <= k - 1 && a >= k - j) ++weight;
            // second summand: the q-power shifts by one
            if ((d == -1 || d == 0) && a >= 1 && a >= k - j) ++weight;
            if (weight == 0) continue;
            out += theta_v(mp, lp, np).scaled(mpq_class(weight));
        }
    }
    if (j == k && m == 0 && l == 0) out.add_term(Partition(), mpq_class(1));
    return out;
}

/// V(m,l,k) in the monomial basis, reconstructed coefficient by coefficient:
/// the m_lambda coefficient equals <V, h_lambda>, which is the m_(lambda minus
/// first part) coefficient of h_{lambda_1}-perp V.  Memoized.
const SymF<mpq_class>& theta_v(int m, int l, int k) {
    static std::map<std::tuple<int, int, int>, SymF<mpq_class>> memo;
    static std::mutex mx;
    std::tuple<int, int, int> key{m, l, k};
    {
        std::lock_guard<std::mutex> lock(mx);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    SymF<mpq_class> value(Basis::m);
    if (m == 0 && l == 0 && k == 0) {
        value.add_term(Partition(), mpq_class(1));
    } else if (k < 1) {
        throw std::logic_error("theta_v: zero e-index with Theta factors is never reached");
    } else {
        for (const Partition& lam : partitions_of(m + l + k)) {
            SymF<mpq_class> g = hperp_v(lam.part(0), m, l, k);
            std::vector<int> rest(lam.parts().begin() + 1, lam.parts().end());
            mpq_class c = g.coeff(Partition(std::move(rest)));
            if (c != 0) value.add_term(lam, std::move(c));
        }
    }
    std::lock_guard<std::mutex> lock(mx);
    return memo.emplace(std::move(key), std::move(value)).first->second;
}

}  // namespace

ThetaValue theta_q0t0(int n, int i, int j) {
    if (n < 1 || i < 0 || j < 0)
        throw std::invalid_argument("theta_q0t0: need n >= 1 and i, j >= 0");
    if (i + j >= n) return {zero_s(), true};
    return {theta_v(i, j, n - i - j).to(Basis::s), false};
}

namespace {

PolyQT q_power_c2(int x) {
    // q^binom(x,2) with the polynomial reading x(x-1)/2, nonnegative for all x
    return PolyQT::monomial(1, x * (x - 1) / 2, 0);
}

Partition one_row(int k) {
    return k == 0 ? Partition() : Partition(std::vector<int>{k});
}

}  // namespace

VerificationReport theta_recursion_check(int j, int m, int l, int k) {
    if (j < 1 || m < 0 || l < 0 || k < 0)
        throw std::invalid_argument("theta_recursion_check: bad parameters");
    const SymQT& hk = hhl_macdonald(one_row(k));
    SymQT lhs = skew_h(j, theta_e(m, theta_e(l, hk)));

    SymQT rhs(Basis::s);
    for (int r = 0; r <= j; ++r) {
        PolyQT outer = q_binomial(k, r);
        if (outer.is_zero()) continue;
        for (int a = 0; a <= k; ++a) {
            int np = j - r + a;
            int mp = m - j + r;
            int lp = l + k - j - a;
            if (mp < 0 || lp < 0) continue;  // a negative Theta index kills the term
            for (int b = 1; b <= np; ++b) {
                PolyQT w1 = q_power_c2(k - r - a) * q_binomial(b - 1, a) *
                            q_binomial(b + r - a - 1, k - a - 1);
                PolyQT w2 = q_power_c2(k - r - a + 1) * q_binomial(b - 1, a - 1) *
                            q_binomial(b + r - a, k - a);
                PolyQT w = outer * (w1 + w2);
                if (w.is_zero()) continue;
                SymQT term = theta_e(mp, theta_e(lp, nabla(enk(np, b))));
                if (term.is_zero()) continue;
                rhs += term.to(Basis::s).scaled(RatFuncQT(std::move(w)));
            }
        }
    }
    if (m == 0 && l == 0 && j == k) rhs += SymQT::one(Basis::s);

    return detail::make_report("theta-recursion",
                               fmt_params({{"j", num(j)}, {"m", num(m)},
                                           {"l", num(l)}, {"k", num(k)}}),
                               lhs, rhs);
}

VerificationReport nabla_hk_check(int m, int l, int k) {
    if (m < 0 || l < 0 || k < 0)
        throw std::invalid_argument("nabla_hk_check: bad parameters");
    std::string params =
        fmt_params({{"m", num(m)}, {"l", num(l)}, {"k", num(k)}});
    SymQT ek = k == 0 ? SymQT::one(Basis::e) : SymQT::e(k);
    SymQT nabla_side = theta_e(m, theta_e(l, nabla(ek)));
    SymQT macdonald_side = theta_e(m, theta_e(l, hhl_macdonald(one_row(k))));

    std::string pole_note;
    SymQT lhs(Basis::s), rhs(Basis::s);
    try {
        lhs = specialize_symf(nabla_side, std::nullopt, mpq_class(0));
        rhs = specialize_symf(macdonald_side, std::nullopt, mpq_class(0));
        // the Macdonald coefficients of the Theta chain must themselves be
        // finite at t=0
        for (const auto& [mu, c] : macdonald_expand(macdonald_side).coefficients) {
            try {
                c.at_t0();
            } catch (const PoleError&) {
                pole_note = "Macdonald coefficient at [" + mu.to_string() +
                            "] has a pole at t=0";
                break;
            }
        }
    } catch (const PoleError& e) {
        pole_note = e.what();
    }
    if (!pole_note.empty()) {
        VerificationReport rep;
        rep.identity = "nabla-hk";
        rep.params = params;
        rep.lhs = "(pole at t=0)";
        rep.rhs = "(pole at t=0)";
        rep.equal = false;
        rep.first_difference = pole_note;
        return rep;
    }
    return detail::make_report("nabla-hk", params, lhs, rhs);
}

namespace {

const char* method_name(Method m) {
    switch (m) {
        case Method::oracle: return "oracle";
        case Method::formula: return "formula";
        case Method::recursion: return "recursion";
        case Method::direct_qt: return "direct-qt";
    }
    return "?";
}

}  // namespace

std::vector<VerificationReport> main_theorem_check(int n, const std::set<Method>& methods) {
    std::map<Method, std::map<std::pair<int, int>, QS>> tables;
    for (Method m : methods) {
        auto& table = tables[m];
        switch (m) {
            case Method::oracle: {
                BigradedTable t = fdr_frobenius(n);
                for (const auto& [ij, f] : t.entries) table[ij] = f;
                break;
            }
            case Method::formula:
                for (int i = 0; i <= n; ++i)
                    for (int j = 0; j <= n; ++j) table[{i, j}] = fdr_formula(n, i, j);
                break;
            case Method::recursion:
                for (int i = 0; i <= n; ++i)
                    for (int j = 0; j <= n; ++j) table[{i, j}] = theta_q0t0(n, i, j).value;
                break;
            case Method::direct_qt:
                for (int i = 0; i <= n; ++i)
                    for (int j = 0; j <= n && i + j < n; ++j) {
                        SymQT chain = theta_e(
                            i, theta_e(j, nabla(lift_qt(QS::e(n - i - j)))));
                        table[{i, j}] = specialize_qt(chain, 0, 0);
                    }
                break;
        }
    }
    std::vector<VerificationReport> reports;
    for (auto a = methods.begin(); a != methods.end(); ++a)
        for (auto b = std::next(a); b != methods.end(); ++b) {
            std::string name = std::string("main-theorem[") + method_name(*a) + "=" +
                               method_name(*b) + "]";
            for (int i = 0; i <= n; ++i)
                for (int j = 0; j <= n; ++j) {
                    if ((*a == Method::direct_qt || *b == Method::direct_qt) && i + j >= n)
                        continue;  // outside direct_qt's defined regime
                    auto get = [&](Method m) {
                        auto& table = tables[m];
                        auto it = table.find({i, j});
                        return it == table.end() ? zero_s() : it->second;
                    };
                    reports.push_back(detail::make_report(
                        name,
                        fmt_params({{"n", num(n)}, {"i", num(i)}, {"j", num(j)}}),
                        get(*a), get(*b)));
                }
        }
    return reports;
}

bool h_perp_equal(const SymF<mpq_class>& F, const SymF<mpq_class>& G) {
    QS fs = F.to(Basis::s), gs = G.to(Basis::s);
    int d = fs.degree();
    if (gs.degree() != d || d == 0)
        throw std::invalid_argument("h_perp_equal: need equal positive degree");
    for (const auto& [lam, c] : fs.terms())
        if (lam.size() != d) throw std::invalid_argument("h_perp_equal: F not homogeneous");
    for (const auto& [lam, c] : gs.terms())
        if (lam.size() != d) throw std::invalid_argument("h_perp_equal: G not homogeneous");
    bool all_skews_equal = true;
    for (int j = 1; j <= d && all_skews_equal; ++j)
        if (!(skew_h(j, fs) == skew_h(j, gs))) all_skews_equal = false;
    if (all_skews_equal != (fs == gs))
        throw std::logic_error("h_perp_equal: skew criterion disagrees with equality");
    return all_skews_equal;
}

std::vector<VerificationReport> k0_probe_reports() {
    // Degree-zero e-index: the Theta side need not vanish even though the hook
    // side does; both values are recorded, neither reading is asserted.
    std::vector<std::tuple<int, int, int>> probes = {
        {0, 0, 1}, {0, 1, 1}, {0, 0, 2}, {0, 2, 1}};
    std::vector<VerificationReport> out;
    for (auto [k, l, m] : probes) {
        SymQT chain = theta_e(m, theta_e(l, nabla(SymQT::one(Basis::e))));
        QS theta_side = specialize_qt(chain, 0, 0);
        QS hook_side = fdr_formula(k + l + m, m, l);
        out.push_back(detail::make_report(
            "k0-probe (informational)",
            fmt_params({{"k", num(k)}, {"l", num(l)}, {"m", num(m)}}),
            theta_side, hook_side));
    }
    return out;
}

}  // namespace fdr
