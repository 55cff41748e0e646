#include "schubert/cell.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace schubert {

RationalMatrix parse_matrix(std::istream& in) {
    std::vector<std::vector<Rational>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<Rational> row;
        std::string tok;
        while (ls >> tok) {
            row.push_back(parse_rational(tok));
        }
        if (row.empty()) {
            continue; // blank line
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw std::invalid_argument("matrix: row " + std::to_string(rows.size() + 1) +
                                        " has " + std::to_string(row.size()) +
                                        " entries, expected " +
                                        std::to_string(rows.front().size()));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw std::invalid_argument("matrix: no rows");
    }
    RationalMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) {
            m.at(r, c) = rows[r][c];
        }
    }
    return m;
}

std::vector<int> rref_in_place(RationalMatrix& mat) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < mat.cols && r < mat.rows; ++c) {
        int p = -1;
        for (int i = r; i < mat.rows; ++i) {
            if (mat.at(i, c) != 0) {
                p = i;
                break;
            }
        }
        if (p < 0) {
            continue;
        }
        if (p != r) {
            for (int j = 0; j < mat.cols; ++j) {
                std::swap(mat.at(p, j), mat.at(r, j));
            }
        }
        Rational inv = Rational(1) / mat.at(r, c);
        for (int j = c; j < mat.cols; ++j) {
            mat.at(r, j) *= inv;
        }
        for (int i = 0; i < mat.rows; ++i) {
            if (i == r || mat.at(i, c) == 0) {
                continue;
            }
            Rational f = mat.at(i, c);
            for (int j = c; j < mat.cols; ++j) {
                mat.at(i, j) -= f * mat.at(r, j);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

Rational rational_det(RationalMatrix mat) {
    if (mat.rows != mat.cols) {
        throw std::invalid_argument("rational_det: matrix not square");
    }
    Rational det = 1;
    for (int c = 0; c < mat.cols; ++c) {
        int p = -1;
        for (int i = c; i < mat.rows; ++i) {
            if (mat.at(i, c) != 0) {
                p = i;
                break;
            }
        }
        if (p < 0) {
            return Rational(0);
        }
        if (p != c) {
            for (int j = 0; j < mat.cols; ++j) {
                std::swap(mat.at(p, j), mat.at(c, j));
            }
            det = -det;
        }
        det *= mat.at(c, c);
        Rational inv = Rational(1) / mat.at(c, c);
        for (int i = c + 1; i < mat.rows; ++i) {
            if (mat.at(i, c) == 0) {
                continue;
            }
            Rational f = mat.at(i, c) * inv;
            for (int j = c; j < mat.cols; ++j) {
                mat.at(i, j) -= f * mat.at(c, j);
            }
        }
    }
    return det;
}

CellResult cell_of(const RationalMatrix& mat) {
    RationalMatrix work = mat;
    std::vector<int> pivots0 = rref_in_place(work);
    if (static_cast<int>(pivots0.size()) < mat.rows) {
        throw std::invalid_argument("cell_of: matrix has rank " +
                                    std::to_string(pivots0.size()) + ", expected full row rank " +
                                    std::to_string(mat.rows));
    }
    std::vector<int> idx(pivots0.size());
    for (std::size_t i = 0; i < pivots0.size(); ++i) {
        idx[i] = pivots0[i] + 1;
    }
    PivotSet pivots(std::move(idx), mat.cols);
    Partition lambda = subset_to_partition(pivots);
    return CellResult{std::move(pivots), std::move(lambda)};
}

} // namespace schubert
