#include "taut/linalg.hpp"

#include <stdexcept>

namespace taut {

namespace {

std::size_t entry_size(const Rational& q) {
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

// v -= f * r
void axpy(SparseVector& v, const Rational& f, const SparseVector& r) {
    for (const auto& [c, x] : r) {
        auto [it, fresh] = v.try_emplace(c, 0);
        it->second -= f * x;
        if (it->second == 0) v.erase(it);
    }
}

}  // namespace

void SparseMatrix::add_row(SparseVector v) {
    for (auto it = v.begin(); it != v.end();) {
        if (it->first < 0 || it->first >= cols) throw std::out_of_range("matrix row has a column outside the basis");
        it = it->second == 0 ? v.erase(it) : std::next(it);
    }
    rows.push_back(std::move(v));
}

void RowEchelon::check(const SparseVector& v) const {
    for (const auto& [c, x] : v)
        if (c < 0 || c >= cols_) throw std::out_of_range("vector has a column outside the basis");
}

SparseVector RowEchelon::reduce(SparseVector v) const {
    check(v);
    for (const auto& [p, r] : rows_) {
        auto it = v.find(p);
        if (it == v.end()) continue;
        Rational f = it->second;
        axpy(v, f, r);
    }
    return v;
}

bool RowEchelon::add(const SparseVector& v) {
    SparseVector r = reduce(v);
    if (r.empty() || r.begin()->first >= pivot_limit_) return false;
    // Cheapest entry as pivot keeps coefficient growth down.
    auto best = r.begin();
    for (auto it = r.begin(); it != r.end() && it->first < pivot_limit_; ++it)
        if (entry_size(it->second) < entry_size(best->second)) best = it;
    const int p = best->first;
    Rational inv = 1 / best->second;
    for (auto& [c, x] : r) x *= inv;
    // Clear the new pivot from older rows so reduction order stays valid.
    for (auto& [q, row] : rows_) {
        auto it = row.find(p);
        if (it != row.end()) {
            Rational f = it->second;
            axpy(row, f, r);
        }
    }
    rows_.emplace_back(p, std::move(r));
    return true;
}

int rank(const SparseMatrix& m) {
    RowEchelon e(m.cols);
    for (const auto& r : m.rows) e.add(r);
    return e.rank();
}

std::vector<SparseVector> kernel_basis(const SparseMatrix& m) {
    // Augment each row with an identity block tracking the combination.
    const int n = static_cast<int>(m.rows.size());
    RowEchelon e(m.cols + n, m.cols);
    std::vector<SparseVector> kernel;
    for (int i = 0; i < n; ++i) {
        SparseVector v = m.rows[i];
        v[m.cols + i] = 1;
        SparseVector r = e.reduce(v);
        bool dependent = r.empty() || r.begin()->first >= m.cols;
        if (dependent) {
            SparseVector k;
            for (const auto& [c, x] : r) k[c - m.cols] = x;
            kernel.push_back(std::move(k));
        } else {
            e.add(v);
        }
    }
    return kernel;
}

bool in_span(const SparseVector& v, const SparseMatrix& m) {
    RowEchelon e(m.cols);
    for (const auto& r : m.rows) e.add(r);
    return e.in_span(v);
}

int quotient_dim(int basis_size, const SparseMatrix& relations) {
    if (relations.cols != basis_size) throw std::invalid_argument("relation matrix basis size mismatch");
    return basis_size - rank(relations);
}

}  // namespace taut
