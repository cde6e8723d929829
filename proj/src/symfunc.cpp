#include "fdr/symfunc.hpp"

#include <algorithm>

#include "fdr/linalg.hpp"

namespace fdr {

namespace {

Partition one_part(int k) { return Partition(std::vector<int>(1, k)); }

QMap scaled(const QMap& f, const mpq_class& c) {
    QMap out;
    if (c == 0) return out;
    for (const auto& [lam, v] : f) out.emplace(lam, v * c);
    return out;
}

void add_into(QMap& dst, const QMap& src) {
    for (const auto& [lam, v] : src) {
        mpq_class& slot = dst[lam];
        slot += v;
        if (slot == 0) dst.erase(lam);
    }
}

/// Multiply by p_k inside a p-basis expansion: push one part onto every key.
QMap push_part(int k, const QMap& f) {
    QMap out;
    for (const auto& [lam, v] : f) {
        std::vector<int> parts = lam.parts();
        parts.push_back(k);
        out.emplace(Partition::from_unsorted(std::move(parts)), v);
    }
    return out;
}

/// p_k * m_mu = sum over ways to grow one part of mu by k (or add a new part
/// k); the resulting m_nu picks up the multiplicity of the grown part in nu.
QMap p_times_m(int k, const QMap& f) {
    QMap out;
    for (const auto& [mu, c] : f) {
        std::vector<int> vals = mu.parts();
        vals.push_back(0);
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        for (int v : vals) {
            std::vector<int> parts = mu.parts();
            if (v > 0) parts.erase(std::find(parts.begin(), parts.end(), v));
            parts.push_back(v + k);
            Partition nu = Partition::from_unsorted(std::move(parts));
            long mult = std::count(nu.parts().begin(), nu.parts().end(), v + k);
            mpq_class& slot = out[nu];
            slot += c * mult;
            if (slot == 0) out.erase(nu);
        }
    }
    return out;
}

}  // namespace

const QMap& e_in_p(int k) {
    static std::map<int, QMap> cache{{0, QMap{{Partition(), mpq_class(1)}}}};
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    // k e_k = sum_{i=1..k} (-1)^(i-1) p_i e_{k-i}
    QMap acc;
    for (int i = 1; i <= k; ++i) {
        mpq_class c(((i - 1) % 2) ? -1 : 1, k);
        add_into(acc, scaled(push_part(i, e_in_p(k - i)), c));
    }
    return cache.emplace(k, std::move(acc)).first->second;
}

const QMap& h_in_p(int k) {
    static std::map<int, QMap> cache{{0, QMap{{Partition(), mpq_class(1)}}}};
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    // k h_k = sum_{i=1..k} p_i h_{k-i}
    QMap acc;
    for (int i = 1; i <= k; ++i)
        add_into(acc, scaled(push_part(i, h_in_p(k - i)), mpq_class(1, k)));
    return cache.emplace(k, std::move(acc)).first->second;
}

namespace {

/// Shared shape of the two inverse Newton recursions: expresses p_k in the
/// basis whose single-part expansion of degree j is the key (j) itself.
QMap p_in_multiplicative(int k, const QMap& (*self)(int), bool alternating) {
    // alternating (e):  p_k = (-1)^(k-1) [ k e_k - sum_{i<k} (-1)^(i-1) p_i e_{k-i} ]
    // plain (h):        p_k = k h_k - sum_{i<k} p_i h_{k-i}
    QMap acc;
    mpq_class lead = (alternating && k % 2 == 0) ? mpq_class(-k) : mpq_class(k);
    acc.emplace(one_part(k), lead);
    for (int i = 1; i < k; ++i) {
        // subtracted term carries -(-1)^(k-1)(-1)^(i-1) = (-1)^(k+i+1) when alternating
        mpq_class sign = alternating ? mpq_class(((k + i) % 2) ? 1 : -1) : mpq_class(-1);
        add_into(acc, scaled(push_part(k - i, self(i)), sign));
    }
    return acc;
}

}  // namespace

const QMap& p_in_e(int k) {
    static std::map<int, QMap> cache{{0, QMap{{Partition(), mpq_class(1)}}}};
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    QMap acc = p_in_multiplicative(k, &p_in_e, true);
    return cache.emplace(k, std::move(acc)).first->second;
}

const QMap& p_in_h(int k) {
    static std::map<int, QMap> cache{{0, QMap{{Partition(), mpq_class(1)}}}};
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    QMap acc = p_in_multiplicative(k, &p_in_h, false);
    return cache.emplace(k, std::move(acc)).first->second;
}

const std::vector<std::vector<mpq_class>>& p_to_m_matrix(int n) {
    static std::map<int, std::vector<std::vector<mpq_class>>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<Partition> parts = partitions_of(n);
    std::map<Partition, size_t, PartLess> index;
    for (size_t i = 0; i < parts.size(); ++i) index.emplace(parts[i], i);

    std::vector<std::vector<mpq_class>> mat(parts.size(),
                                            std::vector<mpq_class>(parts.size(), 0));
    for (size_t i = 0; i < parts.size(); ++i) {
        QMap acc{{Partition(), mpq_class(1)}};
        for (int k : parts[i].parts()) acc = p_times_m(k, acc);
        for (const auto& [mu, c] : acc) mat[i][index.at(mu)] = c;
    }
    return cache.emplace(n, std::move(mat)).first->second;
}

const std::vector<std::vector<mpq_class>>& m_to_p_matrix(int n) {
    static std::map<int, std::vector<std::vector<mpq_class>>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    return cache.emplace(n, invert(p_to_m_matrix(n))).first->second;
}

}  // namespace fdr
