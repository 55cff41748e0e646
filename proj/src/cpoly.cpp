#include "schubert/cpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace schubert {

CMonomial::CMonomial(std::vector<int> indices) : idx_(std::move(indices)) {
    for (std::size_t i = 0; i < idx_.size(); ++i) {
        if (idx_[i] < 1) {
            throw std::invalid_argument("monomial: index " + std::to_string(idx_[i]) +
                                        " below 1");
        }
        if (i > 0 && idx_[i] > idx_[i - 1]) {
            throw std::invalid_argument("monomial: indices not weakly decreasing");
        }
    }
}

long long CMonomial::degree() const {
    long long d = 0;
    for (int i : idx_) {
        d += i;
    }
    return d;
}

bool CMonomial::operator<(const CMonomial& o) const {
    long long da = degree();
    long long db = o.degree();
    if (da != db) {
        return da < db;
    }
    return std::lexicographical_compare(idx_.rbegin(), idx_.rend(),
                                        o.idx_.rbegin(), o.idx_.rend());
}

CPolynomial CPolynomial::zero(std::optional<int> truncation) {
    CPolynomial f;
    f.trunc_ = truncation;
    return f;
}

CPolynomial CPolynomial::one(std::optional<int> truncation) {
    return term(CMonomial{}, 1, truncation);
}

CPolynomial CPolynomial::term(CMonomial m, Int coeff, std::optional<int> truncation) {
    CPolynomial f;
    f.trunc_ = truncation;
    if (coeff != 0 && !(truncation && !m.indices().empty() &&
                        m.indices().front() > *truncation)) {
        f.terms_.emplace(std::move(m), std::move(coeff));
    }
    return f;
}

long long CPolynomial::degree() const {
    return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
}

bool CPolynomial::homogeneous() const {
    if (terms_.empty()) {
        return true;
    }
    long long d = terms_.begin()->first.degree();
    return terms_.rbegin()->first.degree() == d;
}

void CPolynomial::require_compatible(const CPolynomial& f, const CPolynomial& g) {
    if (f.trunc_ != g.trunc_) {
        auto show = [](const std::optional<int>& t) {
            return t ? std::to_string(*t) : std::string("none");
        };
        throw std::runtime_error("truncation mismatch: " + show(f.trunc_) + " vs " +
                                 show(g.trunc_));
    }
}

void CPolynomial::add_term(const CMonomial& m, const Int& coeff) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (coeff != 0) {
            terms_.emplace(m, coeff);
        }
        return;
    }
    it->second += coeff;
    if (it->second == 0) {
        terms_.erase(it);
    }
}

CPolynomial& CPolynomial::operator+=(const CPolynomial& g) {
    require_compatible(*this, g);
    for (const auto& [m, c] : g.terms_) {
        add_term(m, c);
    }
    return *this;
}

CPolynomial& CPolynomial::operator-=(const CPolynomial& g) {
    require_compatible(*this, g);
    for (const auto& [m, c] : g.terms_) {
        add_term(m, -c);
    }
    return *this;
}

CPolynomial CPolynomial::operator-() const {
    CPolynomial f = zero(trunc_);
    for (const auto& [m, c] : terms_) {
        f.terms_.emplace(m, -c);
    }
    return f;
}

CPolynomial operator*(const CPolynomial& f, const CPolynomial& g) {
    CPolynomial::require_compatible(f, g);
    CPolynomial out = CPolynomial::zero(f.trunc_);
    for (const auto& [ma, ca] : f.terms_) {
        for (const auto& [mb, cb] : g.terms_) {
            // monomial product is the multiset union; both sides are sorted
            std::vector<int> idx;
            idx.reserve(ma.indices().size() + mb.indices().size());
            std::merge(ma.indices().begin(), ma.indices().end(),
                       mb.indices().begin(), mb.indices().end(),
                       std::back_inserter(idx), std::greater<int>());
            if (out.trunc_ && !idx.empty() && idx.front() > *out.trunc_) {
                continue;
            }
            out.add_term(CMonomial(std::move(idx)), ca * cb);
        }
    }
    return out;
}

CPolynomial operator*(const Int& c, const CPolynomial& f) {
    CPolynomial out = CPolynomial::zero(f.trunc_);
    if (c == 0) {
        return out;
    }
    for (const auto& [m, coeff] : f.terms_) {
        out.terms_.emplace(m, c * coeff);
    }
    return out;
}

CPolynomial CPolynomial::truncated(std::optional<int> truncation) const {
    CPolynomial out = zero(truncation);
    for (const auto& [m, c] : terms_) {
        if (truncation && !m.indices().empty() && m.indices().front() > *truncation) {
            continue;
        }
        out.terms_.emplace(m, c);
    }
    return out;
}

std::string CPolynomial::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) {
                s += "-";
            }
            first = false;
        } else {
            s += c < 0 ? " - " : " + ";
        }
        std::string body;
        if (mag != 1 || m.constant()) {
            body = mag.str();
        }
        if (!m.constant()) {
            if (!body.empty()) {
                body += "*";
            }
            const auto& idx = m.indices();
            for (std::size_t i = 0; i < idx.size();) {
                std::size_t j = i;
                while (j < idx.size() && idx[j] == idx[i]) {
                    ++j;
                }
                if (i > 0) {
                    body += "*";
                }
                body += "c" + std::to_string(idx[i]);
                if (j - i > 1) {
                    body += "^" + std::to_string(j - i);
                }
                i = j;
            }
        }
        s += body;
    }
    return s;
}

CPolynomial monomial_from_seq(const IntSeq& alpha, std::optional<int> truncation) {
    std::vector<int> idx;
    idx.reserve(alpha.size());
    for (int a : alpha) {
        if (a < 0 || (truncation && a > *truncation)) {
            return CPolynomial::zero(truncation);
        }
        if (a > 0) {
            idx.push_back(a);
        }
    }
    std::sort(idx.begin(), idx.end(), std::greater<int>());
    return CPolynomial::term(CMonomial(std::move(idx)), 1, truncation);
}

Rational evaluate(const CPolynomial& f, const std::map<int, Rational>& assignment) {
    Rational total = 0;
    for (const auto& [m, c] : f.terms()) {
        Rational prod(Int(c), Int(1));
        for (int i : m.indices()) {
            auto it = assignment.find(i);
            if (it == assignment.end()) {
                throw std::invalid_argument("evaluate: no value assigned to c" +
                                            std::to_string(i));
            }
            prod *= it->second;
        }
        total += prod;
    }
    return total;
}

std::map<int, Rational> h_values(const std::vector<Rational>& x, int maxdeg) {
    if (maxdeg < 1) {
        throw std::invalid_argument("h_values: maxdeg must be >= 1");
    }
    // One variable at a time: h'_p = h_p + x * h'_{p-1}, coefficients of
    // prod 1/(1 - x_i t) up to degree maxdeg.
    std::vector<Rational> h(static_cast<std::size_t>(maxdeg) + 1);
    h[0] = 1;
    for (const Rational& xi : x) {
        for (int p = 1; p <= maxdeg; ++p) {
            h[p] += xi * h[p - 1];
        }
    }
    std::map<int, Rational> out;
    for (int p = 1; p <= maxdeg; ++p) {
        out[p] = h[p];
    }
    return out;
}

} // namespace schubert
