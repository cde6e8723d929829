#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "fdr/partition.hpp"

namespace fdr {

/// Irreducible character chi^lambda evaluated on the class of cycle type mu.
/// Both partitions must have the same size.
mpz_class character_value(const Partition& lambda, const Partition& mu);

/**
 * Character table of S_n.  Rows (irreducibles) and columns (classes) are both
 * indexed by partitions_of(n) order.  Tables are computed once per n and cached.
 */
class CharTable {
public:
    static const CharTable& of(int n);

    int n() const { return n_; }
    const std::vector<Partition>& partitions() const { return parts_; }
    int index_of(const Partition& p) const;
    const mpz_class& chi(int lambda_idx, int mu_idx) const {
        return table_[size_t(lambda_idx)][size_t(mu_idx)];
    }
    const mpz_class& chi(const Partition& lambda, const Partition& mu) const {
        return chi(index_of(lambda), index_of(mu));
    }
    /// z_mu for the class indexed by mu_idx (centralizer order).
    unsigned long z(int mu_idx) const { return z_[size_t(mu_idx)]; }

private:
    explicit CharTable(int n);
    int n_;
    std::vector<Partition> parts_;
    std::map<Partition, int, PartLess> index_;
    std::vector<std::vector<mpz_class>> table_;
    std::vector<unsigned long> z_;
};

}  // namespace fdr
