#pragma once

#include <map>
#include <optional>

#include "fdr/partition.hpp"
#include "fdr/ratfunc.hpp"
#include "fdr/symfunc.hpp"

namespace fdr {

/// Symmetric function with coefficients in Q(q,t).
using SymQT = SymF<RatFuncQT>;

SymQT lift_qt(const SymF<mpq_class>& f);

/// Eigenvalues attached to a shape: nabla scales H~_mu by prod over cells
/// (row r, col c) of q^(c-1) t^(r-1); Pi by the same product of (1 - q^(c-1) t^(r-1))
/// with the corner cell (1,1) omitted.  pi_eig is never zero, so Pi is invertible;
/// for the empty and single-cell shapes both products are empty.
struct EigData {
    RatFuncQT nabla_eig;
    RatFuncQT pi_eig;
};
EigData eig_data(const Partition& mu);

/// f written in the modified Macdonald basis: f = sum_mu coefficients[mu] * H~_mu.
struct MacdonaldExpansion {
    int degree = 0;
    std::map<Partition, RatFuncQT, PartLess> coefficients;
};

/// Degree cap on the q,t machinery (Macdonald expansions grow fast).  Checked
/// by hhl_macdonald and macdonald_expand.
int macdonald_degree_bound();
void set_macdonald_degree_bound(int bound);

/**
 * Modified Macdonald polynomial H~_mu(x;q,t) in the monomial basis, via the
 * filling formula: sum over all fillings of mu with entries in {1..|mu|}
 * (enough variables for degree |mu|) weighted q^inv t^maj.  Coefficients are
 * honest polynomials.  Cached per shape.
 */
const SymQT& hhl_macdonald(const Partition& mu);

/// H~_mu converted to the given basis.
SymQT macdonald(const Partition& mu, Basis b);

/// Solve for the H~-basis coefficients of a homogeneous f (exact, cached
/// per-degree inverse transition matrix).
MacdonaldExpansion macdonald_expand(const SymQT& f);

SymQT from_macdonald(const MacdonaldExpansion& exp, Basis b = Basis::s);

/// Eigenoperators: expand in the H~ basis, scale, reassemble (s basis out).
SymQT nabla(const SymQT& f);
SymQT pi_op(const SymQT& f);
SymQT pi_inverse(const SymQT& f);

/**
 * Theta operator Theta_{e_d} = Pi . (e_d[x/M] *) . Pi^{-1} with M = (1-q)(1-t);
 * the plethysm scales p_k by 1/((1-q^k)(1-t^k)).  Raises degree by d.
 * d = 0 is the identity, d < 0 gives 0.
 */
SymQT theta_e(int d, const SymQT& f);

/**
 * E_{n,k} = q^k sum_{r=0}^k q^C(r,2) [k choose r]_q (-1)^r e_n[x(1-q^{-r})/(1-q)],
 * the plethysm scaling p_j by (q^{rj}-1)/(q^{rj}(1-q^j)); the r = 0 summand kills
 * the alphabet and contributes only for n = 0.  Out-of-range (n,k) gives 0.
 * Satisfies sum_{k=1}^n E_{n,k} = e_n.
 */
SymQT enk(int n, int k);

/**
 * Substitute numbers for q and/or t in every coefficient.  A one-sided
 * substitution keeps the other variable symbolic and is supported only at 0.
 * Throws PoleError (message names the offending term) when a coefficient has
 * no finite value there.
 */
SymQT specialize_symf(const SymQT& f, std::optional<mpq_class> q0,
                      std::optional<mpq_class> t0);

/// Full numeric specialization, dropping to rational coefficients.
SymF<mpq_class> specialize_qt(const SymQT& f, const mpq_class& q0, const mpq_class& t0);

}  // namespace fdr
