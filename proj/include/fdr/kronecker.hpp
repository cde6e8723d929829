#pragma once

#include <gmpxx.h>

#include "fdr/characters.hpp"
#include "fdr/partition.hpp"
#include "fdr/symfunc.hpp"

namespace fdr {

/// Class function on S_n; values indexed by partitions_of(n) order (cycle types).
struct ClassFunction {
    int n = 0;
    std::vector<mpq_class> values;

    bool is_integral() const;
};

/// Character of the virtual module whose Frobenius image is f (degree n, any basis).
ClassFunction character_of(const SymF<mpq_class>& f);

/// Frob: sum over classes of chi(mu) p_mu / z_mu, expanded in the Schur basis.
SymF<mpq_class> frobenius_of(const ClassFunction& chi);

/// Kronecker product via pointwise character multiplication; inputs of equal degree.
SymF<mpq_class> kronecker(const SymF<mpq_class>& f, const SymF<mpq_class>& g);

/// g_{rho, mu1, mu2} by the triple character sum over classes.
mpz_class kronecker_multiplicity(const Partition& rho, const Partition& mu1,
                                 const Partition& mu2);

/// c^nu_{lambda mu} by ballot-tableau enumeration on the skew shape nu/lambda.
mpz_class lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Same coefficient as <s_lambda s_mu, s_nu> through the product machinery;
/// kept as an independent cross-check of the combinatorial rule.
mpz_class lr_coefficient_oracle(const Partition& lambda, const Partition& mu,
                                const Partition& nu);

}  // namespace fdr
