#include "schubert/raising.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>

namespace schubert {

OperatorProduct::OperatorProduct(int length) : len_(length) {
    if (length < 0) {
        throw std::invalid_argument("operator product: negative length");
    }
}

void OperatorProduct::add(int i, int j, FactorKind kind) {
    if (i < 1 || i >= j || j > len_) {
        throw std::invalid_argument("operator product: factor (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ") outside 1 <= i < j <= " +
                                    std::to_string(len_));
    }
    RaisingFactor f{i, j, kind};
    if (std::find(factors_.begin(), factors_.end(), f) != factors_.end()) {
        throw std::invalid_argument("operator product: duplicate factor (" +
                                    std::to_string(i) + ", " + std::to_string(j) + ")");
    }
    factors_.push_back(f);
}

void OperatorProduct::add_minus(int i, int j) { add(i, j, FactorKind::minus); }
void OperatorProduct::add_inv_plus(int i, int j) { add(i, j, FactorKind::inv_plus); }

OperatorProduct determinant_product(int length) {
    OperatorProduct op(length);
    for (int i = 1; i < length; ++i) {
        for (int j = i + 1; j <= length; ++j) {
            op.add_minus(i, j);
        }
    }
    return op;
}

OperatorProduct pfaffian_product(int length) {
    OperatorProduct op(length);
    for (int i = 1; i < length; ++i) {
        for (int j = i + 1; j <= length; ++j) {
            op.add_minus(i, j);
            op.add_inv_plus(i, j);
        }
    }
    return op;
}

IntSeq apply_rij(const IntSeq& alpha, int i, int j, int m) {
    if (i < 1 || i >= j || j > static_cast<int>(alpha.size())) {
        throw std::invalid_argument("apply_rij: need 1 <= i < j <= length");
    }
    if (m < 0) {
        throw std::invalid_argument("apply_rij: negative power");
    }
    IntSeq out = alpha;
    out[i - 1] += m;
    out[j - 1] -= m;
    return out;
}

namespace {

using SeqMap = std::map<IntSeq, Int>;

void merge_term(SeqMap& into, IntSeq seq, const Int& coeff) {
    auto it = into.find(seq);
    if (it == into.end()) {
        into.emplace(std::move(seq), coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) {
        into.erase(it);
    }
}

SeqMap apply_factor(const SeqMap& state, const RaisingFactor& f) {
    SeqMap next;
    for (const auto& [seq, coeff] : state) {
        if (f.kind == FactorKind::minus) {
            merge_term(next, seq, coeff);
            IntSeq raised = seq;
            ++raised[f.i - 1];
            --raised[f.j - 1];
            merge_term(next, std::move(raised), -coeff);
        } else {
            // alternating geometric series, cut once entry j would go negative
            Int c = coeff;
            IntSeq cur = seq;
            for (int m = 0; cur[f.j - 1] >= 0; ++m) {
                merge_term(next, cur, c);
                c = -c;
                ++cur[f.i - 1];
                --cur[f.j - 1];
            }
        }
    }
    return next;
}

void dump_state(std::ostream& os, int column, const SeqMap& state) {
    os << "after column " << column << ": " << state.size() << " sequence(s)\n";
    for (const auto& [seq, coeff] : state) {
        os << "  " << coeff.str() << " * (";
        for (std::size_t t = 0; t < seq.size(); ++t) {
            if (t > 0) {
                os << ",";
            }
            os << seq[t];
        }
        os << ")\n";
    }
}

} // namespace

CPolynomial expand(const OperatorProduct& op, const IntSeq& alpha,
                   std::optional<int> truncation, std::ostream* debug_out) {
    if (static_cast<int>(alpha.size()) != op.length()) {
        throw std::invalid_argument("expand: sequence length " +
                                    std::to_string(alpha.size()) +
                                    " does not match operator length " +
                                    std::to_string(op.length()));
    }
    SeqMap state;
    state.emplace(alpha, 1);
    for (int j = op.length(); j >= 2; --j) {
        for (const RaisingFactor& f : op.factors()) {
            if (f.j == j) {
                state = apply_factor(state, f);
            }
        }
        for (auto it = state.begin(); it != state.end();) {
            it = it->first[j - 1] < 0 ? state.erase(it) : std::next(it);
        }
        if (debug_out) {
            dump_state(*debug_out, j, state);
        }
    }
    CPolynomial out = CPolynomial::zero(truncation);
    for (const auto& [seq, coeff] : state) {
        out += coeff * monomial_from_seq(seq, truncation);
    }
    return out;
}

CPolynomial pair_entry(int a, int b, std::optional<int> truncation) {
    CPolynomial out = monomial_from_seq({a, b}, truncation);
    for (int m = 1; m <= b; ++m) {
        Int c = m % 2 ? -2 : 2;
        out += c * monomial_from_seq({a + m, b - m}, truncation);
    }
    return out;
}

} // namespace schubert
