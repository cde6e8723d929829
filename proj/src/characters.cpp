#include "fdr/characters.hpp"

#include <algorithm>
#include <stdexcept>

namespace fdr {

namespace {

// Murnaghan-Nakayama on beta-sets.  Removing a border strip of size s from the
// shape with beta-set B means replacing some b in B by b - s (when b - s >= 0
// and not already in B); the sign is (-1)^(number of beta entries passed over).
mpz_class mn(std::vector<int> beta, const std::vector<int>& mu, size_t k,
             std::map<std::pair<std::vector<int>, size_t>, mpz_class>& memo) {
    if (k == mu.size()) return 1;
    auto key = std::make_pair(beta, k);
    auto hit = memo.find(key);
    if (hit != memo.end()) return hit->second;

    int s = mu[k];
    mpz_class total = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
        int b = beta[i];
        int target = b - s;
        if (target < 0) continue;
        if (std::binary_search(beta.begin(), beta.end(), target)) continue;
        int passed = 0;
        for (int x : beta)
            if (x > target && x < b) ++passed;
        std::vector<int> next = beta;
        next[i] = target;
        std::sort(next.begin(), next.end());
        mpz_class sub = mn(std::move(next), mu, k + 1, memo);
        if (passed % 2)
            total -= sub;
        else
            total += sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

mpz_class character_value(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("character_value: size mismatch");
    int len = lambda.length();
    std::vector<int> beta(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i) beta[size_t(i)] = lambda.part(i) + (len - 1 - i);
    std::sort(beta.begin(), beta.end());
    std::map<std::pair<std::vector<int>, size_t>, mpz_class> memo;
    return mn(std::move(beta), mu.parts(), 0, memo);
}

CharTable::CharTable(int n) : n_(n), parts_(partitions_of(n)) {
    for (size_t i = 0; i < parts_.size(); ++i) index_.emplace(parts_[i], int(i));
    table_.resize(parts_.size());
    for (size_t l = 0; l < parts_.size(); ++l) {
        table_[l].resize(parts_.size());
        for (size_t m = 0; m < parts_.size(); ++m)
            table_[l][m] = character_value(parts_[l], parts_[m]);
    }
    z_.reserve(parts_.size());
    for (const auto& p : parts_) z_.push_back(p.z_weight());
}

const CharTable& CharTable::of(int n) {
    static std::map<int, CharTable> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, CharTable(n)).first;
    return it->second;
}

int CharTable::index_of(const Partition& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw std::invalid_argument("CharTable: wrong degree");
    return it->second;
}

}  // namespace fdr
