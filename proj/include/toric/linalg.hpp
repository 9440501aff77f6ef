#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toric/scalar.hpp"

namespace toric {

/// Coordinate vector in the basis e_1..e_n of N_C.
struct ExtVector {
    std::vector<Scalar> coords;

    ExtVector() = default;
    explicit ExtVector(size_t n) : coords(n) {}
    explicit ExtVector(std::vector<Scalar> c) : coords(std::move(c)) {}

    size_t dim() const { return coords.size(); }
    bool is_zero() const {
        for (const auto& c : coords)
            if (!c.is_zero()) return false;
        return true;
    }
    friend bool operator==(const ExtVector& a, const ExtVector& b) {
        return a.coords == b.coords;
    }
};

/// Dense matrix over the Gaussian rationals. All eliminations are exact;
/// rank and kernel decisions never involve rounding.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static ExactMatrix identity(size_t n);
    static ExactMatrix from_columns(const std::vector<ExtVector>& cols);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Scalar& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    ExactMatrix transpose() const;

    /// Appends the columns of `right` (row counts must agree).
    ExactMatrix augment(const ExactMatrix& right) const;

    ExtVector column(size_t j) const;
    ExtVector apply(const ExtVector& v) const;  // matrix * vector
    ExactMatrix multiply(const ExactMatrix& o) const;

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

struct Rref {
    ExactMatrix reduced;
    std::vector<size_t> pivot_cols;  // increasing
    size_t rank() const { return pivot_cols.size(); }
};

/// Gauss-Jordan elimination with first-nonzero pivoting (deterministic:
/// columns are scanned left to right, rows top to bottom).
Rref rref(const ExactMatrix& m);

size_t rank(const ExactMatrix& m);

/// Basis of the exact null space; rank + kernel size = cols, and M*k = 0
/// holds exactly for every returned k.
std::vector<ExtVector> kernel_basis(const ExactMatrix& m);

/// True iff v lies in the Scalar-linear span of S (exact rank comparison).
bool in_span(const ExtVector& v, const std::vector<ExtVector>& S);

/// Solves A X = B exactly; nullopt when inconsistent. When the solution is
/// not unique the free variables are set to zero.
std::optional<ExactMatrix> solve(const ExactMatrix& A, const ExactMatrix& B);

/// Inverse of a square nonsingular matrix; throws on singular input.
ExactMatrix inverse(const ExactMatrix& A);

}  // namespace toric
