#include "fdr/exterior_coinvariants.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace fdr {

namespace {

int g_oracle_bound = 6;
constexpr int kHardCap = 8;

/// Inversions between two ascending index lists given as bit sets: pairs
/// (x in a, y in b) with x > y; the parity of moving the b-word in front of
/// nothing — i.e. of merging "a then b" into sorted order.
int cross_inversions(uint32_t a, uint32_t b) {
    int count = 0;
    while (b) {
        int y = std::countr_zero(b);
        b &= b - 1;
        count += std::popcount(a >> (y + 1));
    }
    return count;
}

}  // namespace

std::pair<int, ExtMonomial> act(const std::vector<int>& w, const ExtMonomial& m) {
    int parity = 0;
    auto relabel = [&](uint32_t mask) {
        std::vector<int> img;
        for (int i = 0; i < int(w.size()); ++i)
            if (mask >> i & 1) img.push_back(w[size_t(i)]);
        uint32_t out = 0;
        for (size_t i = 0; i < img.size(); ++i) {
            out |= uint32_t(1) << img[i];
            for (size_t j = i + 1; j < img.size(); ++j)
                if (img[i] > img[j]) parity ^= 1;
        }
        return out;
    };
    ExtMonomial r{relabel(m.theta), relabel(m.xi)};
    return {parity ? -1 : 1, r};
}

std::pair<int, ExtMonomial> wedge(const ExtMonomial& a, const ExtMonomial& b) {
    if ((a.theta & b.theta) || (a.xi & b.xi)) return {0, ExtMonomial{}};
    // b's thetas move left past a's xis, then the two sorted blocks merge.
    int swaps = std::popcount(a.xi) * std::popcount(b.theta) +
                cross_inversions(a.theta, b.theta) + cross_inversions(a.xi, b.xi);
    return {(swaps & 1) ? -1 : 1, ExtMonomial{a.theta | b.theta, a.xi | b.xi}};
}

std::vector<ExtMonomial> bidegree_monomials(int n, int i, int j) {
    std::vector<ExtMonomial> out;
    if (i < 0 || j < 0 || i > n || j > n) return out;
    std::vector<uint32_t> ti, xj;
    for (uint32_t m = 0; m < (uint32_t(1) << n); ++m) {
        if (std::popcount(m) == i) ti.push_back(m);
        if (std::popcount(m) == j) xj.push_back(m);
    }
    out.reserve(ti.size() * xj.size());
    for (uint32_t t : ti)
        for (uint32_t x : xj) out.push_back(ExtMonomial{t, x});
    return out;
}

namespace {

/// Incremental reduced row echelon form: rows keyed by pivot column, each with
/// a unit pivot, fully reduced against one another.  add() reduces the incoming
/// vector, inserts it if independent, and reports whether the rank grew.
struct RrefAccum {
    size_t cols;
    std::map<int, std::vector<mpq_class>> rows;

    explicit RrefAccum(size_t c) : cols(c) {}

    bool add(std::vector<mpq_class> v) {
        for (const auto& [p, row] : rows) {
            if (v[size_t(p)] == 0) continue;
            mpq_class f = v[size_t(p)];
            for (size_t j = size_t(p); j < cols; ++j)
                if (row[j] != 0) v[j] -= f * row[j];
        }
        size_t p = 0;
        while (p < cols && v[p] == 0) ++p;
        if (p == cols) return false;
        mpq_class inv = mpq_class(1) / v[p];
        for (size_t j = p; j < cols; ++j)
            if (v[j] != 0) v[j] *= inv;
        for (auto& [q, row] : rows) {
            if (row[p] == 0) continue;
            mpq_class f = row[p];
            for (size_t j = p; j < cols; ++j)
                if (v[j] != 0) row[j] -= f * v[j];
        }
        rows.emplace(int(p), std::move(v));
        return true;
    }

    bool full() const { return rows.size() == cols; }
};

std::map<ExtMonomial, int> index_monomials(const std::vector<ExtMonomial>& mons) {
    std::map<ExtMonomial, int> idx;
    for (size_t k = 0; k < mons.size(); ++k) idx.emplace(mons[k], int(k));
    return idx;
}

/// Permutation of cycle type mu made of consecutive cycles, 0-indexed one-line.
std::vector<int> cycle_representative(const Partition& mu, int n) {
    std::vector<int> w(static_cast<size_t>(n));
    int pos = 0;
    for (int k : mu.parts()) {
        for (int i = 0; i < k; ++i) w[size_t(pos + i)] = pos + (i + 1) % k;
        pos += k;
    }
    return w;
}

}  // namespace

const Matrix<mpq_class>& invariant_basis(int n, int a, int b) {
    static std::map<std::tuple<int, int, int>, Matrix<mpq_class>> cache;
    static std::mutex mx;
    std::lock_guard<std::mutex> lock(mx);
    auto key = std::make_tuple(n, a, b);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::vector<ExtMonomial> mons = bidegree_monomials(n, a, b);
    auto idx = index_monomials(mons);
    RrefAccum acc(mons.size());
    std::vector<bool> visited(mons.size(), false);
    std::vector<int> w(static_cast<size_t>(n));
    for (size_t k = 0; k < mons.size(); ++k) {
        if (visited[k]) continue;  // its orbit sum is +- an already added row
        std::vector<mpq_class> v(mons.size(), mpq_class(0));
        std::iota(w.begin(), w.end(), 0);
        do {
            auto [s, m2] = act(w, mons[k]);
            size_t k2 = size_t(idx.at(m2));
            visited[k2] = true;
            v[k2] += s;
        } while (std::next_permutation(w.begin(), w.end()));
        acc.add(std::move(v));
    }
    Matrix<mpq_class> rows;
    rows.reserve(acc.rows.size());
    for (auto& [p, row] : acc.rows) rows.push_back(std::move(row));
    return cache.emplace(key, std::move(rows)).first->second;
}

const IdealPiece& ideal_bidegree(int n, int i, int j) {
    static std::map<std::tuple<int, int, int>, IdealPiece> cache;
    static std::mutex mx;
    std::lock_guard<std::mutex> lock(mx);
    auto key = std::make_tuple(n, i, j);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::vector<ExtMonomial> mons = bidegree_monomials(n, i, j);
    auto idx = index_monomials(mons);
    RrefAccum acc(mons.size());
    for (int a = 0; a <= i && !acc.full(); ++a)
        for (int b = 0; b <= j && !acc.full(); ++b) {
            if (a + b == 0) continue;
            const Matrix<mpq_class>& inv = invariant_basis(n, a, b);
            if (inv.empty()) continue;
            std::vector<ExtMonomial> gen = bidegree_monomials(n, a, b);
            std::vector<ExtMonomial> rest = bidegree_monomials(n, i - a, j - b);
            for (const auto& vrow : inv) {
                for (const auto& m : rest) {
                    std::vector<mpq_class> out(mons.size(), mpq_class(0));
                    bool nonzero = false;
                    for (size_t k = 0; k < gen.size(); ++k) {
                        if (vrow[k] == 0) continue;
                        auto [s, mm] = wedge(gen[k], m);
                        if (s == 0) continue;
                        out[size_t(idx.at(mm))] += s > 0 ? vrow[k] : -vrow[k];
                        nonzero = true;
                    }
                    if (nonzero) acc.add(std::move(out));
                    if (acc.full()) break;
                }
                if (acc.full()) break;
            }
        }
    IdealPiece piece;
    piece.rows.reserve(acc.rows.size());
    for (auto& [p, row] : acc.rows) {
        piece.pivots.push_back(p);
        piece.rows.push_back(std::move(row));
    }
    return cache.emplace(key, std::move(piece)).first->second;
}

ClassFunction quotient_character(int n, int i, int j) {
    std::vector<ExtMonomial> mons = bidegree_monomials(n, i, j);
    auto idx = index_monomials(mons);
    const IdealPiece& ideal = ideal_bidegree(n, i, j);
    std::vector<Partition> classes = partitions_of(n);

    ClassFunction chi;
    chi.n = n;
    chi.values.assign(classes.size(), mpq_class(0));
    for (size_t c = 0; c < classes.size(); ++c) {
        std::vector<int> w = cycle_representative(classes[c], n);
        std::vector<int> winv(static_cast<size_t>(n));
        for (int x = 0; x < n; ++x) winv[size_t(w[size_t(x)])] = x;

        mpz_class full = 0;
        for (const auto& m : mons) {
            auto [s, m2] = act(w, m);
            if (m2 == m) full += s;
        }
        // Trace on the ideal in its pivot basis: the (r,r) entry of the action
        // matrix is sign(w on the preimage of pivot r) * row_r[preimage index].
        mpq_class on_ideal = 0;
        for (size_t r = 0; r < ideal.pivots.size(); ++r) {
            auto [s, pre] = act(winv, mons[size_t(ideal.pivots[r])]);
            const mpq_class& coeff = ideal.rows[r][size_t(idx.at(pre))];
            on_ideal += s > 0 ? coeff : -coeff;
        }
        mpq_class value = mpq_class(full) - on_ideal;
        if (value.get_den() != 1)
            throw std::logic_error("quotient_character: non-integer trace");
        chi.values[c] = value;
    }
    return chi;
}

int fdr_oracle_bound() { return g_oracle_bound; }

void set_fdr_oracle_bound(int bound) {
    g_oracle_bound = std::min(bound, kHardCap);
}

BigradedTable fdr_frobenius(int n) {
    if (n < 0 || n > g_oracle_bound)
        throw std::invalid_argument("fdr_frobenius: size bound exceeded");
    BigradedTable table;
    table.n = n;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            ClassFunction chi = quotient_character(n, i, j);
            bool zero = true;
            for (const auto& v : chi.values)
                if (v != 0) zero = false;
            if (!zero) table.entries.emplace(std::make_pair(i, j), frobenius_of(chi));
        }
    return table;
}

}  // namespace fdr
