#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "fdr/kronecker.hpp"
#include "fdr/linalg.hpp"
#include "fdr/partition.hpp"
#include "fdr/symfunc.hpp"

namespace fdr {

/**
 * Monomial in the exterior algebra on theta_1..theta_n, xi_1..xi_n, held in
 * canonical order (thetas ascending, then xis ascending) as two bit sets;
 * bit i-1 stands for index i.  Reordering signs are tracked by act and wedge.
 */
struct ExtMonomial {
    uint32_t theta = 0;
    uint32_t xi = 0;
    bool operator==(const ExtMonomial& o) const { return theta == o.theta && xi == o.xi; }
    bool operator<(const ExtMonomial& o) const {
        return theta != o.theta ? theta < o.theta : xi < o.xi;
    }
};

/// Diagonal action theta_i -> theta_{w(i)}, xi_i -> xi_{w(i)} of a permutation
/// given in one-line 0-indexed form; returns the sorting sign and the
/// canonical relabeled monomial.  The theta and xi blocks never interleave.
std::pair<int, ExtMonomial> act(const std::vector<int>& w, const ExtMonomial& m);

/// Exterior product of canonical monomials; sign 0 when an index repeats.
std::pair<int, ExtMonomial> wedge(const ExtMonomial& a, const ExtMonomial& b);

/// All monomials with |theta set| = i and |xi set| = j, masks ascending
/// (theta-major); empty when i or j is out of 0..n.
std::vector<ExtMonomial> bidegree_monomials(int n, int i, int j);

/// Row-reduced exact basis of the S_n-invariants of bidegree (a,b), as
/// coefficient rows over bidegree_monomials(n,a,b).  Built from monomial orbit
/// sums (never dividing by the group order), then reduced.  Cached.
const Matrix<mpq_class>& invariant_basis(int n, int a, int b);

/// Bidegree (i,j) slice of the ideal generated by the positive-degree
/// invariants: fully reduced rows plus their pivot columns.  Cached.
struct IdealPiece {
    Matrix<mpq_class> rows;
    std::vector<int> pivots;
};
const IdealPiece& ideal_bidegree(int n, int i, int j);

/// Character of the quotient piece: trace over the full bidegree slice minus
/// the trace on the ideal slice, evaluated on one canonical representative per
/// cycle type.  Throws std::logic_error if a trace fails to be an integer.
ClassFunction quotient_character(int n, int i, int j);

struct BigradedTable {
    int n = 0;
    std::map<std::pair<int, int>, SymF<mpq_class>> entries;  // nonzero pieces only

    SymF<mpq_class> entry(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? SymF<mpq_class>(Basis::s) : it->second;
    }
};

/// Size cap for the brute-force computation (4^n monomials); default 6.
int fdr_oracle_bound();
void set_fdr_oracle_bound(int bound);

/// Bigraded Frobenius image of the fermionic diagonal coinvariant ring on n
/// letters, computed by exact linear algebra in the exterior algebra.
BigradedTable fdr_frobenius(int n);

}  // namespace fdr
