#pragma once

#include "schubert/numeric.hpp"
#include "schubert/partition.hpp"

#include <iosfwd>
#include <vector>

namespace schubert {

/// Dense row-major matrix of exact rationals.
struct RationalMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> a;

    RationalMatrix() = default;
    RationalMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    Rational& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const Rational& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

/// Reads one matrix row per line, entries whitespace-separated, each "p/q" or
/// an integer. Rejects empty and ragged input.
RationalMatrix parse_matrix(std::istream& in);

/// In-place reduced row echelon form with exact arithmetic and first-nonzero
/// pivot selection (no tolerance). Returns the 0-based pivot columns.
std::vector<int> rref_in_place(RationalMatrix& mat);

/// Exact determinant by Gaussian elimination; square input required.
Rational rational_det(RationalMatrix mat);

struct CellResult {
    PivotSet pivots;
    Partition lambda;
};

/// Schubert cell of the row space: RREF pivot columns (1-based) and the
/// partition they correspond to under subset_to_partition.
/// Throws if the matrix does not have full row rank.
CellResult cell_of(const RationalMatrix& mat);

} // namespace schubert
