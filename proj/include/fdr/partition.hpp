#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fdr {

/**
 * Integer partitions, stored as weakly decreasing vectors of positive parts.
 * The empty partition (size 0) is the unique partition of 0.
 */
class Partition {
public:
    Partition() = default;

    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);

    /// Sorts the given multiset of nonnegative integers, dropping zeros.
    static Partition from_unsorted(std::vector<int> parts);

    int size() const { return size_; }                 // sum of parts
    int length() const { return int(parts_.size()); }  // number of parts
    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return i < length() ? parts_[i] : 0; }  // 0-indexed, 0 beyond length

    Partition conjugate() const;

    /// Cells (row, col), 1-indexed, row-major: row 1 first, within a row col ascending.
    std::vector<std::pair<int, int>> cells() const;

    /// Multiplicity vector: mult[i] = number of parts equal to i, for i = 1..size.
    std::vector<int> multiplicities() const;

    /// z_lambda = prod_i m_i! * i^(m_i); order of the centralizer of a permutation
    /// of cycle type lambda.  Returned as unsigned long (fits for sizes used here).
    unsigned long z_weight() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }

    /// "3,1,1" for (3,1,1); "-" for the empty partition.
    std::string to_string() const;

    /// Inverse of to_string.  Throws std::invalid_argument on malformed input.
    static Partition parse(const std::string& text);

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/**
 * Strict order: by size ascending, then lexicographically descending on parts.
 * Within one degree this puts (n) first and (1^n) last, matching the order in
 * which partitions_of generates them.
 */
struct PartLess {
    bool operator()(const Partition& a, const Partition& b) const;
};

/// All partitions of n in the PartLess order for that degree: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

/// Hook (b, 1^a).  Returns nullopt when b <= 0 or a < 0; callers treat nullopt
/// as the zero symmetric function, which makes hook-sum identities uniform.
std::optional<Partition> hook_shape(int b, int a);

}  // namespace fdr
