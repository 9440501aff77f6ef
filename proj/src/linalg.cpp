#include "toric/linalg.hpp"

#include <stdexcept>

namespace toric {

ExactMatrix ExactMatrix::identity(size_t n) {
    ExactMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

ExactMatrix ExactMatrix::from_columns(const std::vector<ExtVector>& cols) {
    if (cols.empty()) return ExactMatrix(0, 0);
    size_t rows = cols[0].dim();
    ExactMatrix m(rows, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].dim() != rows)
            throw std::invalid_argument("linalg: ragged column list");
        for (size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j].coords[i];
    }
    return m;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

ExactMatrix ExactMatrix::augment(const ExactMatrix& right) const {
    if (right.rows() != rows_) throw std::invalid_argument("linalg: augment row mismatch");
    ExactMatrix m(rows_, cols_ + right.cols());
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        for (size_t j = 0; j < right.cols(); ++j) m.at(i, cols_ + j) = right.at(i, j);
    }
    return m;
}

ExtVector ExactMatrix::column(size_t j) const {
    ExtVector v(rows_);
    for (size_t i = 0; i < rows_; ++i) v.coords[i] = at(i, j);
    return v;
}

ExtVector ExactMatrix::apply(const ExtVector& v) const {
    if (v.dim() != cols_) throw std::invalid_argument("linalg: apply dimension mismatch");
    ExtVector out(rows_);
    for (size_t i = 0; i < rows_; ++i) {
        Scalar acc;
        for (size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v.coords[j].is_zero()) acc += at(i, j) * v.coords[j];
        out.coords[i] = acc;
    }
    return out;
}

ExactMatrix ExactMatrix::multiply(const ExactMatrix& o) const {
    if (cols_ != o.rows()) throw std::invalid_argument("linalg: multiply shape mismatch");
    ExactMatrix out(rows_, o.cols());
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (size_t j = 0; j < o.cols(); ++j)
                if (!o.at(k, j).is_zero()) out.at(i, j) += at(i, k) * o.at(k, j);
        }
    return out;
}

Rref rref(const ExactMatrix& m) {
    Rref r{m, {}};
    ExactMatrix& a = r.reduced;
    size_t row = 0;
    for (size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        size_t pivot = row;
        while (pivot < a.rows() && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != row)
            for (size_t j = 0; j < a.cols(); ++j) std::swap(a.at(pivot, j), a.at(row, j));
        Scalar inv = Scalar(1) / a.at(row, col);
        for (size_t j = col; j < a.cols(); ++j) a.at(row, j) *= inv;
        for (size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a.at(i, col).is_zero()) continue;
            Scalar f = a.at(i, col);
            for (size_t j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(row, j);
        }
        r.pivot_cols.push_back(col);
        ++row;
    }
    return r;
}

size_t rank(const ExactMatrix& m) { return rref(m).rank(); }

std::vector<ExtVector> kernel_basis(const ExactMatrix& m) {
    Rref r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t p : r.pivot_cols) is_pivot[p] = true;

    std::vector<ExtVector> basis;
    for (size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        ExtVector k(m.cols());
        k.coords[f] = Scalar(1);
        for (size_t i = 0; i < r.pivot_cols.size(); ++i)
            k.coords[r.pivot_cols[i]] = -r.reduced.at(i, f);
        basis.push_back(std::move(k));
    }
    return basis;
}

bool in_span(const ExtVector& v, const std::vector<ExtVector>& S) {
    if (v.is_zero()) return true;
    if (S.empty()) return false;
    std::vector<ExtVector> extended = S;
    extended.push_back(v);
    return rank(ExactMatrix::from_columns(S)) == rank(ExactMatrix::from_columns(extended));
}

std::optional<ExactMatrix> solve(const ExactMatrix& A, const ExactMatrix& B) {
    if (A.rows() != B.rows()) throw std::invalid_argument("linalg: solve shape mismatch");
    Rref r = rref(A.augment(B));
    // Inconsistent iff some pivot falls in the appended block.
    for (size_t p : r.pivot_cols)
        if (p >= A.cols()) return std::nullopt;
    ExactMatrix x(A.cols(), B.cols());
    for (size_t i = 0; i < r.pivot_cols.size(); ++i)
        for (size_t j = 0; j < B.cols(); ++j)
            x.at(r.pivot_cols[i], j) = r.reduced.at(i, A.cols() + j);
    return x;
}

ExactMatrix inverse(const ExactMatrix& A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("linalg: inverse of non-square matrix");
    Rref r = rref(A.augment(ExactMatrix::identity(A.rows())));
    size_t pivots_in_a = 0;
    for (size_t p : r.pivot_cols) pivots_in_a += (p < A.cols());
    if (pivots_in_a < A.rows()) throw std::domain_error("linalg: singular matrix");
    ExactMatrix inv(A.rows(), A.cols());
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t j = 0; j < A.cols(); ++j) inv.at(i, j) = r.reduced.at(i, A.cols() + j);
    return inv;
}

}  // namespace toric
