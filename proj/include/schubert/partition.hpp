#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace schubert {

/// Finite integer sequence; entries may be negative. Fixed length, entrywise equality.
using IntSeq = std::vector<int>;

/// Weakly decreasing sequence of non-negative integers, stored normalized
/// (no trailing zeros). Two partitions are equal iff their normalized parts agree.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    long long weight() const;
    bool empty() const { return parts_.empty(); }

    /// 1-based part access; parts beyond length() are 0.
    int part(int r) const;

    bool operator==(const Partition&) const = default;

    /// Comma-separated rendering of the nonzero parts; "0" for the empty partition.
    std::string to_string() const;

private:
    std::vector<int> parts_;
};

/// Parses "5,3,1". Rejects non-numeric parts, negative parts and increasing
/// neighbors, reporting the 1-based position of the offending part.
/// "0" parses to the empty partition.
Partition parse_partition(std::string_view csv);

/// True iff no two equal parts of lambda exceed k.
bool is_k_strict(const Partition& lambda, int k);

/// A partition together with the k of its k-strictness constraint;
/// construction rejects non-k-strict input.
class KStrictPartition {
public:
    KStrictPartition(Partition lambda, int k);

    const Partition& partition() const { return lambda_; }
    int k() const { return k_; }

private:
    Partition lambda_;
    int k_;
};

/// Strictly increasing column indices i_1 < ... < i_m in [1, n].
class PivotSet {
public:
    PivotSet(std::vector<int> indices, int n);

    const std::vector<int>& indices() const { return indices_; }
    int m() const { return static_cast<int>(indices_.size()); }
    int n() const { return n_; }

    bool operator==(const PivotSet&) const = default;

private:
    std::vector<int> indices_;
    int n_;
};

/// lambda_r = n - m + r - i_r. The result fits in the (m, n-m) box.
Partition subset_to_partition(const PivotSet& pivots);

/// Inverse of subset_to_partition; lambda must fit in the (m, n-m) box.
PivotSet partition_to_subset(const Partition& lambda, int m, int n);

/// All w in S_n with w(i) < w(i+1) for every i != m, in lexicographic order
/// of one-line notation (1-based values). Exactly binomial(n, m) of them.
/// Guarded at n <= 12.
std::vector<std::vector<int>> enumerate_grassmannian_permutations(int m, int n);

} // namespace schubert
