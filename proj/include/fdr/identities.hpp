#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fdr/kronecker.hpp"
#include "fdr/macdonald.hpp"
#include "fdr/partition.hpp"
#include "fdr/symfunc.hpp"

namespace fdr {

/// Outcome of computing both sides of one identity instance.  The sides are
/// recorded as canonical Schur-basis strings; verdict is exact equality.
struct VerificationReport {
    std::string identity;
    std::string params;
    std::string lhs, rhs;
    bool equal = false;
    std::string first_difference;  // "s[2,1]: 1 vs 0"; empty when equal
};

namespace detail {

template <class C>
VerificationReport make_report(std::string identity, std::string params,
                               const SymF<C>& lhs_in, const SymF<C>& rhs_in) {
    SymF<C> lhs = lhs_in.to(Basis::s), rhs = rhs_in.to(Basis::s);
    VerificationReport rep;
    rep.identity = std::move(identity);
    rep.params = std::move(params);
    rep.lhs = lhs.to_string();
    rep.rhs = rhs.to_string();
    rep.equal = lhs == rhs;
    if (!rep.equal) {
        std::set<Partition, PartLess> keys;
        for (const auto& [lam, c] : lhs.terms()) keys.insert(lam);
        for (const auto& [lam, c] : rhs.terms()) keys.insert(lam);
        for (const auto& lam : keys) {
            C a = lhs.coeff(lam), b = rhs.coeff(lam);
            if (!(a == b)) {
                rep.first_difference = "s[" + lam.to_string() + "]: " + CoeffOps<C>::str(a) +
                                       " vs " + CoeffOps<C>::str(b);
                break;
            }
        }
    }
    return rep;
}

}  // namespace detail

/// Frobenius image of the (i,j) bidegree piece by the hook Kronecker formula:
/// s_(n-i,1^i) * s_(n-j,1^j) - s_(n-i+1,1^(i-1)) * s_(n-j+1,1^(j-1)), where a
/// hook with out-of-range parameters is zero; 0 whenever i+j >= n.
SymF<mpq_class> fdr_formula(int n, int i, int j);

/// h_j-perp (flavor h) or e_j-perp (flavor e) of a Kronecker product of Schur
/// functions, written through Littlewood-Richardson coefficients:
/// sum over mu |- j and nu1,nu2 |- n-j of c^l1_{mu,nu1} c^l2_{mu,nu2} s_nu1 * s_nu2,
/// with mu conjugated inside the first coefficient for flavor e.
enum class SkewFlavor { h, e };
SymF<mpq_class> kron_skew_rhs(const Partition& l1, const Partition& l2, int j,
                              SkewFlavor flavor);
VerificationReport kron_skew_check(const Partition& l1, const Partition& l2, int j,
                                   SkewFlavor flavor);

/// Both sides of the hook Kronecker recursion at (k,l,m), skewed by h_j:
/// lhs = h_j-perp of the hook Kronecker difference; rhs = the h,e product form
/// h_{k+l-j}e_m * h_{k+m-j}e_l - h_{k+l}e_{m-j} * h_{k+m}e_{l-j} (negative
/// indices kill a product).
std::pair<SymF<mpq_class>, SymF<mpq_class>> hook_skew_sides(int k, int l, int m, int j);
VerificationReport hook_skew_check(int k, int l, int m, int j);

/// Telescoped variant: h_j-perp of a single hook Kronecker product equals
/// sum_{r=0}^{j-1} h_{k+l-j+r}e_{m-r} * h_{k+m-j+r}e_{l-r} (one summand per
/// hook (j-r, 1^r) of j).
VerificationReport reformulation_check(int k, int l, int m, int j);

/// Theta_i Theta_j nabla e_{n-i-j} at q = t = 0, computed with integer
/// arithmetic only, through the skewing recursion (memoized).  In the
/// vanishing regime i+j >= n the value is 0 and the flag is set.
struct ThetaValue {
    SymF<mpq_class> value;  // Schur basis
    bool vanishing = false;
};
ThetaValue theta_q0t0(int n, int i, int j);

/// Exact q,t check of the skewing recursion for Theta chains on H~_(k):
/// h_j-perp Theta_m Theta_l H~_(k) against the r/a/b triple sum built from
/// q-binomials and nabla E_{n',b} terms.
VerificationReport theta_recursion_check(int j, int m, int l, int k);

/// Theta_m Theta_l nabla e_k at t=0 versus Theta_m Theta_l H~_(k) at t=0,
/// including the no-pole assertions on the Macdonald coefficients; a pole is a
/// failure, not an error.
VerificationReport nabla_hk_check(int m, int l, int k);

/// Pairwise comparison of the selected computation routes over all bidegrees
/// 0 <= i,j <= n (direct_qt only where i+j < n, its defined regime).
enum class Method { oracle, formula, recursion, direct_qt };
std::vector<VerificationReport> main_theorem_check(int n, const std::set<Method>& methods);

/// Whether h_j-perp F = h_j-perp G for every j = 1..deg; for homogeneous F, G
/// of equal positive degree this is equivalent to F = G, and the function
/// asserts the equivalence held.
bool h_perp_equal(const SymF<mpq_class>& F, const SymF<mpq_class>& G);

/// Informational probes of the k = 0 edge of the final recursion step, where
/// the Theta side and the hook side are allowed to disagree; never asserted.
std::vector<VerificationReport> k0_probe_reports();

}  // namespace fdr
