#pragma once

#include "schubert/cpoly.hpp"
#include "schubert/partition.hpp"
#include "schubert/raising.hpp"

#include <optional>
#include <vector>

namespace schubert {

/// Square matrix over the formal ring; all entries share one truncation setting.
class RingMatrix {
public:
    RingMatrix(int size, std::optional<int> truncation = std::nullopt);

    int size() const { return size_; }
    std::optional<int> truncation() const { return trunc_; }

    const CPolynomial& at(int i, int j) const;
    void set(int i, int j, CPolynomial value);

private:
    int size_;
    std::optional<int> trunc_;
    std::vector<CPolynomial> e_;
};

/// Determinant over the ring by cofactor expansion, memoized on column subsets.
CPolynomial ring_det(const RingMatrix& a);

/// Pfaffian by recursive first-row expansion:
/// Pf(A) = sum_{j=2}^{2l} (-1)^j A[1][j] Pf(A with rows/cols 1, j removed),
/// Pf of the empty matrix being 1. Requires even size and skew-symmetry.
CPolynomial pfaffian(const RingMatrix& a);

/// det(c_{lambda_i + j - i}) over the normalized length of lambda, with
/// c_0 = 1, c_{<0} = 0 and indices above the truncation bound killed.
CPolynomial giambelli_det(const Partition& lambda,
                          std::optional<int> truncation = std::nullopt);

/// Pfaffian of the skew matrix with (i, j) entry pair_entry(lambda_i, lambda_j)
/// for i < j; lambda must have distinct nonzero parts and is padded with one
/// zero part when its length is odd.
CPolynomial schur_pfaffian(const Partition& lambda,
                           std::optional<int> truncation = std::nullopt);

/// The operator product of the theta polynomial: a MINUS factor for every
/// pair i < j <= length and an INV_PLUS factor exactly for the pairs with
/// lambda_i + lambda_j > 2k + j - i. Length is the number of nonzero parts.
OperatorProduct theta_product(const KStrictPartition& lambda);

/// Theta polynomial: expand(theta_product(lambda), lambda). Coincides with
/// giambelli_det when all parts are <= k and with the Pfaffian-form expansion
/// when all nonzero parts exceed k.
CPolynomial theta(const KStrictPartition& lambda,
                  std::optional<int> truncation = std::nullopt);

/// Bialternant value det(x_i^{lambda_j + N - j}) / det(x_i^{N - j}) of the
/// Schur polynomial s_lambda at pairwise distinct x; N = |x| >= length(lambda).
Rational schur_alternant(const Partition& lambda, const std::vector<Rational>& x);

} // namespace schubert
