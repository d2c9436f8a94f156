#pragma once

#include "froblab/cyclotomic.hpp"

#include <optional>
#include <vector>

namespace froblab {

/// Dense matrix over Q(zeta_p), row-major.  All entries share one context.
class Matrix {
public:
    Matrix() : p_(2), rows_(0), cols_(0) {}
    Matrix(int p, int rows, int cols);
    Matrix(int p, int rows, int cols, std::vector<CycScalar> entries);

    static Matrix identity(int p, int n);

    int prime() const { return p_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    CycScalar& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
    const CycScalar& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

    bool is_zero() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const CycScalar& s) const;

    /// Column c as a vector.
    std::vector<CycScalar> col(int c) const;
    std::vector<CycScalar> row(int r) const;
    void set_col(int c, const std::vector<CycScalar>& v);

private:
    int p_, rows_, cols_;
    std::vector<CycScalar> e_;
};

struct RrefResult {
    Matrix R;
    int rank = 0;
    std::vector<int> pivots;  // pivot column indices
};

/// Reduced row echelon form with exact arithmetic; pivot = first row
/// with a nonzero entry in the current column.  Deterministic.
RrefResult rref(const Matrix& M);

Matrix matmul(const Matrix& A, const Matrix& B);
std::vector<CycScalar> matvec(const Matrix& A, const std::vector<CycScalar>& v);
Matrix transpose(const Matrix& A);
Matrix kron(const Matrix& A, const Matrix& B);
Matrix block_diag(const std::vector<Matrix>& blocks);
/// One solution X of A X = B with free variables set to zero, or nullopt.
std::optional<Matrix> solve(const Matrix& A, const Matrix& B);
/// Columns form a basis of the kernel of A.
Matrix nullspace(const Matrix& A);
std::optional<Matrix> inverse(const Matrix& A);
int rank(const Matrix& A);
Matrix hstack(const Matrix& A, const Matrix& B);
Matrix from_columns(int p, int dim, const std::vector<std::vector<CycScalar>>& cols);

// ---- internal sparse layer (used for large stacked hom/kernel systems) ----

struct SparseRow {
    // sorted by column index, nonzero coefficients only
    std::vector<std::pair<int, CycScalar>> nz;
};

/// Kernel basis (as dense columns) of the matrix whose rows are given.
Matrix sparse_nullspace(int p, int ncols, std::vector<SparseRow> rows);
int sparse_rank(int p, int ncols, std::vector<SparseRow> rows);

}  // namespace froblab
