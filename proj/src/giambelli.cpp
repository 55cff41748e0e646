#include "schubert/giambelli.hpp"

#include "schubert/cell.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace schubert {

RingMatrix::RingMatrix(int size, std::optional<int> truncation)
    : size_(size), trunc_(truncation),
      e_(static_cast<std::size_t>(size) * size, CPolynomial::zero(truncation)) {
    if (size < 0) {
        throw std::invalid_argument("ring matrix: negative size");
    }
}

const CPolynomial& RingMatrix::at(int i, int j) const {
    if (i < 0 || i >= size_ || j < 0 || j >= size_) {
        throw std::invalid_argument("ring matrix: index out of range");
    }
    return e_[static_cast<std::size_t>(i) * size_ + j];
}

void RingMatrix::set(int i, int j, CPolynomial value) {
    if (i < 0 || i >= size_ || j < 0 || j >= size_) {
        throw std::invalid_argument("ring matrix: index out of range");
    }
    if (value.truncation() != trunc_) {
        throw std::runtime_error("ring matrix: entry truncation differs from matrix truncation");
    }
    e_[static_cast<std::size_t>(i) * size_ + j] = std::move(value);
}

namespace {

// det over rows r.., columns = set bits of mask; memoized on the column mask
CPolynomial det_rec(const RingMatrix& a, unsigned mask,
                    std::map<unsigned, CPolynomial>& memo) {
    if (mask == 0) {
        return CPolynomial::one(a.truncation());
    }
    auto it = memo.find(mask);
    if (it != memo.end()) {
        return it->second;
    }
    int r = a.size() - __builtin_popcount(mask);
    CPolynomial det = CPolynomial::zero(a.truncation());
    int sign = 1;
    for (int c = 0; c < a.size(); ++c) {
        if (!(mask & (1u << c))) {
            continue;
        }
        if (!a.at(r, c).is_zero()) {
            CPolynomial sub = det_rec(a, mask & ~(1u << c), memo);
            CPolynomial contrib = a.at(r, c) * sub;
            if (sign > 0) {
                det += contrib;
            } else {
                det -= contrib;
            }
        }
        sign = -sign;
    }
    memo.emplace(mask, det);
    return det;
}

CPolynomial pfaffian_rec(const RingMatrix& a, std::vector<int> rows) {
    if (rows.empty()) {
        return CPolynomial::one(a.truncation());
    }
    CPolynomial pf = CPolynomial::zero(a.truncation());
    // expansion along the first remaining row; j is the 1-based position
    // within the submatrix, so signs alternate starting with +
    for (std::size_t j = 1; j < rows.size(); ++j) {
        const CPolynomial& entry = a.at(rows[0], rows[j]);
        if (entry.is_zero()) {
            continue;
        }
        std::vector<int> rest;
        rest.reserve(rows.size() - 2);
        for (std::size_t t = 1; t < rows.size(); ++t) {
            if (t != j) {
                rest.push_back(rows[t]);
            }
        }
        CPolynomial contrib = entry * pfaffian_rec(a, std::move(rest));
        if (j % 2 == 1) {
            pf += contrib;
        } else {
            pf -= contrib;
        }
    }
    return pf;
}

} // namespace

CPolynomial ring_det(const RingMatrix& a) {
    if (a.size() > 20) {
        throw std::invalid_argument("ring_det: size above cofactor-expansion guard (20)");
    }
    if (a.size() == 0) {
        return CPolynomial::one(a.truncation());
    }
    std::map<unsigned, CPolynomial> memo;
    return det_rec(a, (1u << a.size()) - 1, memo);
}

CPolynomial pfaffian(const RingMatrix& a) {
    if (a.size() % 2 != 0) {
        throw std::invalid_argument("pfaffian: matrix size must be even");
    }
    for (int i = 0; i < a.size(); ++i) {
        if (!a.at(i, i).is_zero()) {
            throw std::invalid_argument("pfaffian: nonzero diagonal entry");
        }
        for (int j = i + 1; j < a.size(); ++j) {
            if (!(a.at(i, j) == -a.at(j, i))) {
                throw std::invalid_argument("pfaffian: matrix not skew-symmetric");
            }
        }
    }
    std::vector<int> rows(a.size());
    for (int i = 0; i < a.size(); ++i) {
        rows[i] = i;
    }
    return pfaffian_rec(a, std::move(rows));
}

CPolynomial giambelli_det(const Partition& lambda, std::optional<int> truncation) {
    const int d = lambda.length();
    RingMatrix a(d, truncation);
    for (int i = 1; i <= d; ++i) {
        for (int j = 1; j <= d; ++j) {
            a.set(i - 1, j - 1, monomial_from_seq({lambda.part(i) + j - i}, truncation));
        }
    }
    return ring_det(a);
}

CPolynomial schur_pfaffian(const Partition& lambda, std::optional<int> truncation) {
    std::set<int> seen(lambda.parts().begin(), lambda.parts().end());
    if (static_cast<int>(seen.size()) != lambda.length()) {
        throw std::invalid_argument("schur_pfaffian: partition " + lambda.to_string() +
                                    " is not strict");
    }
    std::vector<int> parts = lambda.parts();
    if (parts.size() % 2 != 0) {
        parts.push_back(0);
    }
    const int d = static_cast<int>(parts.size());
    RingMatrix a(d, truncation);
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            CPolynomial entry = pair_entry(parts[i], parts[j], truncation);
            a.set(j, i, -entry);
            a.set(i, j, std::move(entry));
        }
    }
    return pfaffian(a);
}

OperatorProduct theta_product(const KStrictPartition& lambda) {
    const Partition& p = lambda.partition();
    const int len = p.length();
    const long long bound = 2LL * lambda.k();
    OperatorProduct op(len);
    for (int i = 1; i < len; ++i) {
        for (int j = i + 1; j <= len; ++j) {
            op.add_minus(i, j);
            if (p.part(i) + p.part(j) > bound + (j - i)) {
                op.add_inv_plus(i, j);
            }
        }
    }
    return op;
}

CPolynomial theta(const KStrictPartition& lambda, std::optional<int> truncation) {
    return expand(theta_product(lambda), lambda.partition().parts(), truncation);
}

Rational schur_alternant(const Partition& lambda, const std::vector<Rational>& x) {
    const int n = static_cast<int>(x.size());
    if (lambda.length() > n) {
        throw std::invalid_argument("schur_alternant: fewer variables than parts");
    }
    auto power = [](const Rational& base, int e) {
        Rational p = 1;
        for (int t = 0; t < e; ++t) {
            p *= base;
        }
        return p;
    };
    RationalMatrix num(n, n);
    RationalMatrix den(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 1; j <= n; ++j) {
            num.at(i, j - 1) = power(x[i], lambda.part(j) + n - j);
            den.at(i, j - 1) = power(x[i], n - j);
        }
    }
    Rational d = rational_det(std::move(den));
    if (d == 0) {
        throw std::invalid_argument("schur_alternant: repeated x values, alternant denominator vanishes");
    }
    return rational_det(std::move(num)) / d;
}

} // namespace schubert
