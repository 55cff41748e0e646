#pragma once

#include "schubert/cpoly.hpp"
#include "schubert/partition.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace schubert {

/// One factor of an operator product acting on integer sequences:
/// MINUS stands for (1 - R_ij), INV_PLUS for (1 + R_ij)^{-1}.
enum class FactorKind { minus, inv_plus };

struct RaisingFactor {
    int i;
    int j;
    FactorKind kind;

    bool operator==(const RaisingFactor&) const = default;
};

/// A product of raising-operator factors on sequences of a fixed length.
/// At most one factor of each kind per position pair (i, j).
class OperatorProduct {
public:
    explicit OperatorProduct(int length);

    void add_minus(int i, int j);
    void add_inv_plus(int i, int j);

    int length() const { return len_; }
    const std::vector<RaisingFactor>& factors() const { return factors_; }

private:
    void add(int i, int j, FactorKind kind);

    int len_;
    std::vector<RaisingFactor> factors_;
};

/// prod_{i<j} (1 - R_ij) on sequences of the given length.
OperatorProduct determinant_product(int length);

/// prod_{i<j} (1 - R_ij)(1 + R_ij)^{-1} on sequences of the given length.
OperatorProduct pfaffian_product(int length);

/// alpha + m * (e_i - e_j): R_ij applied m times.
IntSeq apply_rij(const IntSeq& alpha, int i, int j, int m);

/// Expands the operator product against c_alpha into the formal ring.
///
/// Factors are processed grouped by their second position j, from j = length
/// down to 2; (1 - R_ij) contributes {1, -R_ij} and (1 + R_ij)^{-1} the
/// alternating series sum_m (-1)^m R_ij^m, cut off once entry j drops below
/// zero. After a column is finished, intermediate sequences with a negative
/// entry j are discarded: no remaining factor raises position j, so they can
/// only end in c_{<0} = 0. This schedule makes every series finite.
///
/// When debug_out is set, the intermediate sequence -> coefficient map is
/// dumped after each processed column.
CPolynomial expand(const OperatorProduct& op, const IntSeq& alpha,
                   std::optional<int> truncation = std::nullopt,
                   std::ostream* debug_out = nullptr);

/// Closed form of (1 - R_12)(1 + R_12)^{-1} c_{(a,b)}:
/// c_a c_b + 2 * sum_{m=1}^{b} (-1)^m c_{a+m} c_{b-m}.
CPolynomial pair_entry(int a, int b, std::optional<int> truncation = std::nullopt);

} // namespace schubert
