#pragma once

#include "taut/rational.hpp"

#include <map>
#include <vector>

namespace taut {

using SparseVector = std::map<int, Rational>;

struct SparseMatrix {
    int cols = 0;
    std::vector<SparseVector> rows;

    explicit SparseMatrix(int c = 0) : cols(c) {}
    void add_row(SparseVector v);
};

// Incremental row echelon form. Each stored row has a pivot column scaled to 1.
class RowEchelon {
public:
    // Pivots are only taken from columns below pivot_limit (default: all).
    explicit RowEchelon(int cols, int pivot_limit = -1)
        : cols_(cols), pivot_limit_(pivot_limit < 0 ? cols : pivot_limit) {}
    // Reduces v and stores it if independent; returns whether it was new.
    bool add(const SparseVector& v);
    SparseVector reduce(SparseVector v) const;
    bool in_span(const SparseVector& v) const { return reduce(v).empty(); }
    int rank() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }
    const std::vector<std::pair<int, SparseVector>>& rows() const { return rows_; }

private:
    void check(const SparseVector& v) const;
    int cols_;
    int pivot_limit_;
    std::vector<std::pair<int, SparseVector>> rows_;  // (pivot, row)
};

int rank(const SparseMatrix& m);
// Left kernel: vectors y (indexed by row) with y * m = 0.
std::vector<SparseVector> kernel_basis(const SparseMatrix& m);
bool in_span(const SparseVector& v, const SparseMatrix& m);
int quotient_dim(int basis_size, const SparseMatrix& relations);

}  // namespace taut
