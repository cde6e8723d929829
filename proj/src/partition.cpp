#include "fdr/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fdr {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    if (!parts_.empty()) {
        conj.resize(parts_[0]);
        for (int p : parts_)
            for (int i = 0; i < p; ++i) conj[i]++;
    }
    return Partition(std::move(conj));
}

std::vector<std::pair<int, int>> Partition::cells() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(size_);
    for (int r = 0; r < length(); ++r)
        for (int c = 1; c <= parts_[r]; ++c) out.emplace_back(r + 1, c);
    return out;
}

std::vector<int> Partition::multiplicities() const {
    std::vector<int> mult(size_ + 1, 0);
    for (int p : parts_) mult[p]++;
    return mult;
}

unsigned long Partition::z_weight() const {
    unsigned long z = 1;
    auto mult = multiplicities();
    for (int i = 1; i <= size_; ++i) {
        for (int j = 1; j <= mult[i]; ++j) z *= (unsigned long)j;
        for (int j = 0; j < mult[i]; ++j) z *= (unsigned long)i;
    }
    return z;
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "-";
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    return os.str();
}

Partition Partition::parse(const std::string& text) {
    if (text == "-" || text.empty()) return Partition();
    std::vector<int> parts;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        size_t pos = 0;
        int v;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("Partition::parse: bad token '" + tok + "'");
        }
        if (pos != tok.size())
            throw std::invalid_argument("Partition::parse: bad token '" + tok + "'");
        parts.push_back(v);
    }
    return Partition(std::move(parts));  // validates decreasing/positive
}

bool PartLess::operator()(const Partition& a, const Partition& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                        a.parts().begin(), a.parts().end());
}

namespace {

void gen_parts(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_parts(n - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    gen_parts(n, n, cur, out);
    return out;
}

std::optional<Partition> hook_shape(int b, int a) {
    if (b <= 0 || a < 0) return std::nullopt;
    std::vector<int> parts{b};
    parts.insert(parts.end(), size_t(a), 1);
    return Partition(std::move(parts));
}

}  // namespace fdr
