#include "schubert/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace schubert {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) {
            throw std::invalid_argument("partition: negative part at position " +
                                        std::to_string(i + 1));
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition: parts increase at position " +
                                        std::to_string(i + 1));
        }
    }
    while (!parts_.empty() && parts_.back() == 0) {
        parts_.pop_back();
    }
}

long long Partition::weight() const {
    long long w = 0;
    for (int p : parts_) {
        w += p;
    }
    return w;
}

int Partition::part(int r) const {
    if (r < 1) {
        throw std::invalid_argument("partition: part index must be >= 1");
    }
    return r <= length() ? parts_[r - 1] : 0;
}

std::string Partition::to_string() const {
    if (parts_.empty()) {
        return "0";
    }
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) {
            s += ',';
        }
        s += std::to_string(parts_[i]);
    }
    return s;
}

Partition parse_partition(std::string_view csv) {
    std::vector<int> parts;
    std::size_t pos = 0;
    int field = 1;
    while (true) {
        std::size_t comma = csv.find(',', pos);
        std::string_view tok = csv.substr(pos, comma == std::string_view::npos
                                                   ? std::string_view::npos
                                                   : comma - pos);
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) {
                return c >= '0' && c <= '9';
            })) {
            throw std::invalid_argument("partition: position " + std::to_string(field) +
                                        ": expected a non-negative integer, got \"" +
                                        std::string(tok) + "\"");
        }
        long v = std::stol(std::string(tok));
        if (!parts.empty() && v > parts.back()) {
            throw std::invalid_argument("partition: position " + std::to_string(field) +
                                        ": part " + std::to_string(v) +
                                        " exceeds preceding part " +
                                        std::to_string(parts.back()));
        }
        parts.push_back(static_cast<int>(v));
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
        ++field;
    }
    return Partition(std::move(parts));
}

bool is_k_strict(const Partition& lambda, int k) {
    if (k < 0) {
        throw std::invalid_argument("is_k_strict: k must be >= 0");
    }
    const auto& p = lambda.parts();
    for (std::size_t i = 1; i < p.size(); ++i) {
        if (p[i] > k && p[i] == p[i - 1]) {
            return false;
        }
    }
    return true;
}

KStrictPartition::KStrictPartition(Partition lambda, int k)
    : lambda_(std::move(lambda)), k_(k) {
    if (!is_k_strict(lambda_, k_)) {
        throw std::invalid_argument("partition " + lambda_.to_string() + " is not " +
                                    std::to_string(k_) + "-strict");
    }
}

PivotSet::PivotSet(std::vector<int> indices, int n) : indices_(std::move(indices)), n_(n) {
    for (std::size_t r = 0; r < indices_.size(); ++r) {
        if (indices_[r] < 1 || indices_[r] > n_) {
            throw std::invalid_argument("pivot set: index " + std::to_string(indices_[r]) +
                                        " outside [1, " + std::to_string(n_) + "]");
        }
        if (r > 0 && indices_[r] <= indices_[r - 1]) {
            throw std::invalid_argument("pivot set: indices not strictly increasing at position " +
                                        std::to_string(r + 1));
        }
    }
}

Partition subset_to_partition(const PivotSet& pivots) {
    const int m = pivots.m();
    const int n = pivots.n();
    std::vector<int> parts(m);
    for (int r = 1; r <= m; ++r) {
        parts[r - 1] = n - m + r - pivots.indices()[r - 1];
    }
    return Partition(std::move(parts));
}

PivotSet partition_to_subset(const Partition& lambda, int m, int n) {
    if (m < 0 || m > n) {
        throw std::invalid_argument("partition_to_subset: need 0 <= m <= n");
    }
    if (lambda.length() > m || lambda.part(1) > n - m) {
        throw std::invalid_argument("partition " + lambda.to_string() +
                                    " does not fit in the (" + std::to_string(m) + ", " +
                                    std::to_string(n - m) + ") box");
    }
    std::vector<int> idx(m);
    for (int r = 1; r <= m; ++r) {
        idx[r - 1] = n - m + r - lambda.part(r);
    }
    return PivotSet(std::move(idx), n);
}

std::vector<std::vector<int>> enumerate_grassmannian_permutations(int m, int n) {
    if (m < 0 || m > n) {
        throw std::invalid_argument("enumerate_grassmannian_permutations: need 0 <= m <= n");
    }
    if (n > 12) {
        throw std::invalid_argument("enumerate_grassmannian_permutations: n > 12 enumeration guard");
    }
    // Each permutation ascends on [1,m) and on (m,n], so it is determined by the
    // value set of its first m entries. Lexicographic subsets give lexicographic w.
    std::vector<std::vector<int>> out;
    std::vector<int> subset(m);
    for (int i = 0; i < m; ++i) {
        subset[i] = i + 1;
    }
    for (;;) {
        std::vector<int> w(subset.begin(), subset.end());
        std::vector<char> used(n + 1, 0);
        for (int v : subset) {
            used[v] = 1;
        }
        for (int v = 1; v <= n; ++v) {
            if (!used[v]) {
                w.push_back(v);
            }
        }
        out.push_back(std::move(w));
        // next m-subset of [1, n] in lexicographic order
        int i = m - 1;
        while (i >= 0 && subset[i] == n - (m - 1 - i)) {
            --i;
        }
        if (i < 0) {
            break;
        }
        ++subset[i];
        for (int j = i + 1; j < m; ++j) {
            subset[j] = subset[j - 1] + 1;
        }
    }
    return out;
}

} // namespace schubert
