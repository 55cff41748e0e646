#pragma once

#include "schubert/numeric.hpp"
#include "schubert/partition.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace schubert {

/// Product c_{i_1} c_{i_2} ... of special classes, stored as a weakly
/// decreasing list of indices >= 1. The empty monomial is the constant 1.
class CMonomial {
public:
    CMonomial() = default;
    explicit CMonomial(std::vector<int> indices);

    const std::vector<int>& indices() const { return idx_; }
    long long degree() const;
    bool constant() const { return idx_.empty(); }

    bool operator==(const CMonomial&) const = default;

    /// Term order used for maps and rendering: degree first, then ascending
    /// lexicographic comparison of the ascending-sorted index tuples.
    bool operator<(const CMonomial& o) const;

private:
    std::vector<int> idx_;
};

/// Element of the formal commutative ring Z[c_1, c_2, ...] with the
/// conventions c_0 = 1 and c_p = 0 for p < 0. An optional truncation bound B
/// additionally kills every monomial containing an index > B; polynomials
/// with different truncation settings live in different rings and do not mix.
class CPolynomial {
public:
    CPolynomial() = default;

    static CPolynomial zero(std::optional<int> truncation = std::nullopt);
    static CPolynomial one(std::optional<int> truncation = std::nullopt);
    static CPolynomial term(CMonomial m, Int coeff, std::optional<int> truncation = std::nullopt);

    bool is_zero() const { return terms_.empty(); }
    std::optional<int> truncation() const { return trunc_; }
    const std::map<CMonomial, Int>& terms() const { return terms_; }

    /// Degree of the highest term, -1 for the zero polynomial.
    long long degree() const;
    bool homogeneous() const;

    CPolynomial& operator+=(const CPolynomial& g);
    CPolynomial& operator-=(const CPolynomial& g);
    CPolynomial operator-() const;
    friend CPolynomial operator+(CPolynomial f, const CPolynomial& g) { return f += g; }
    friend CPolynomial operator-(CPolynomial f, const CPolynomial& g) { return f -= g; }
    friend CPolynomial operator*(const CPolynomial& f, const CPolynomial& g);
    friend CPolynomial operator*(const Int& c, const CPolynomial& f);

    /// Symbolic equality is equality of the canonical term maps.
    bool operator==(const CPolynomial& g) const { return terms_ == g.terms_; }

    /// Re-imposes a truncation bound, dropping the monomials it kills.
    CPolynomial truncated(std::optional<int> truncation) const;

    /// "c3*c1 - 2*c2^2"; "0" for the zero polynomial.
    std::string to_string() const;

private:
    void add_term(const CMonomial& m, const Int& coeff);
    static void require_compatible(const CPolynomial& f, const CPolynomial& g);

    std::map<CMonomial, Int> terms_;
    std::optional<int> trunc_;
};

/// The single term c_alpha under the ring conventions: zero if any entry is
/// negative (or above the truncation bound), zero entries dropped as c_0 = 1.
CPolynomial monomial_from_seq(const IntSeq& alpha,
                              std::optional<int> truncation = std::nullopt);

/// Exact evaluation under c_p -> assignment[p]; every index occurring in f
/// must be present.
Rational evaluate(const CPolynomial& f, const std::map<int, Rational>& assignment);

/// Complete homogeneous symmetric polynomial values {p -> h_p(x)} for
/// 1 <= p <= maxdeg, by the generating-function recurrence for prod 1/(1-x_i t).
std::map<int, Rational> h_values(const std::vector<Rational>& x, int maxdeg);

} // namespace schubert
