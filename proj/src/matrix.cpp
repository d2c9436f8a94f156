#include "froblab/matrix.hpp"

#include <algorithm>
#include <map>

namespace froblab {

Matrix::Matrix(int p, int rows, int cols)
    : p_(p), rows_(rows), cols_(cols),
      e_(static_cast<size_t>(rows) * cols, CycScalar::zero(p)) {}

Matrix::Matrix(int p, int rows, int cols, std::vector<CycScalar> entries)
    : p_(p), rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != static_cast<size_t>(rows) * cols)
        throw Error("matrix entry count " + std::to_string(e_.size()) + " does not match " +
                    std::to_string(rows) + "x" + std::to_string(cols));
}

Matrix Matrix::identity(int p, int n) {
    Matrix I(p, n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = CycScalar::one(p);
    return I;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error("matrix add shape mismatch: " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                    " vs " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
    Matrix r(*this);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error("matrix sub shape mismatch: " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                    " vs " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
    Matrix r(*this);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
}

Matrix Matrix::operator*(const CycScalar& s) const {
    Matrix r(*this);
    for (auto& x : r.e_) x *= s;
    return r;
}

std::vector<CycScalar> Matrix::col(int c) const {
    std::vector<CycScalar> v;
    v.reserve(rows_);
    for (int r = 0; r < rows_; ++r) v.push_back(at(r, c));
    return v;
}

std::vector<CycScalar> Matrix::row(int r) const {
    std::vector<CycScalar> v(e_.begin() + static_cast<size_t>(r) * cols_,
                             e_.begin() + static_cast<size_t>(r + 1) * cols_);
    return v;
}

void Matrix::set_col(int c, const std::vector<CycScalar>& v) {
    for (int r = 0; r < rows_; ++r) at(r, c) = v[r];
}

RrefResult rref(const Matrix& M) {
    RrefResult res;
    res.R = M;
    Matrix& R = res.R;
    int lead = 0;
    for (int c = 0; c < R.cols() && lead < R.rows(); ++c) {
        int piv = -1;
        for (int r = lead; r < R.rows(); ++r) {
            if (!R.at(r, c).is_zero()) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != lead)
            for (int j = 0; j < R.cols(); ++j) std::swap(R.at(piv, j), R.at(lead, j));
        CycScalar inv = R.at(lead, c).inverse();
        for (int j = c; j < R.cols(); ++j) R.at(lead, j) *= inv;
        for (int r = 0; r < R.rows(); ++r) {
            if (r == lead || R.at(r, c).is_zero()) continue;
            CycScalar f = R.at(r, c);
            for (int j = c; j < R.cols(); ++j) R.at(r, j) -= f * R.at(lead, j);
        }
        res.pivots.push_back(c);
        ++lead;
    }
    res.rank = static_cast<int>(res.pivots.size());
    return res;
}

Matrix matmul(const Matrix& A, const Matrix& B) {
    if (A.cols() != B.rows())
        throw Error("matmul shape mismatch: " + std::to_string(A.rows()) + "x" + std::to_string(A.cols()) +
                    " times " + std::to_string(B.rows()) + "x" + std::to_string(B.cols()));
    Matrix C(A.prime(), A.rows(), B.cols());
    for (int i = 0; i < A.rows(); ++i)
        for (int k = 0; k < A.cols(); ++k) {
            const CycScalar& a = A.at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < B.cols(); ++j) {
                const CycScalar& b = B.at(k, j);
                if (b.is_zero()) continue;
                C.at(i, j) += a * b;
            }
        }
    return C;
}

std::vector<CycScalar> matvec(const Matrix& A, const std::vector<CycScalar>& v) {
    if (A.cols() != static_cast<int>(v.size()))
        throw Error("matvec shape mismatch: " + std::to_string(A.rows()) + "x" + std::to_string(A.cols()) +
                    " times vector of length " + std::to_string(v.size()));
    std::vector<CycScalar> out(A.rows(), CycScalar::zero(A.prime()));
    for (int k = 0; k < A.cols(); ++k) {
        if (v[k].is_zero()) continue;
        for (int i = 0; i < A.rows(); ++i) {
            const CycScalar& a = A.at(i, k);
            if (a.is_zero()) continue;
            out[i] += a * v[k];
        }
    }
    return out;
}

Matrix transpose(const Matrix& A) {
    Matrix T(A.prime(), A.cols(), A.rows());
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) T.at(j, i) = A.at(i, j);
    return T;
}

Matrix kron(const Matrix& A, const Matrix& B) {
    Matrix K(A.prime(), A.rows() * B.rows(), A.cols() * B.cols());
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) {
            const CycScalar& a = A.at(i, j);
            if (a.is_zero()) continue;
            for (int r = 0; r < B.rows(); ++r)
                for (int c = 0; c < B.cols(); ++c) {
                    const CycScalar& b = B.at(r, c);
                    if (b.is_zero()) continue;
                    K.at(i * B.rows() + r, j * B.cols() + c) = a * b;
                }
        }
    return K;
}

Matrix block_diag(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) return Matrix();
    int p = blocks[0].prime();
    int rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    Matrix M(p, rows, cols);
    int ro = 0, co = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) M.at(ro + i, co + j) = b.at(i, j);
        ro += b.rows();
        co += b.cols();
    }
    return M;
}

Matrix hstack(const Matrix& A, const Matrix& B) {
    if (A.rows() != B.rows())
        throw Error("hstack row mismatch: " + std::to_string(A.rows()) + " vs " + std::to_string(B.rows()));
    Matrix M(A.prime(), A.rows(), A.cols() + B.cols());
    for (int i = 0; i < A.rows(); ++i) {
        for (int j = 0; j < A.cols(); ++j) M.at(i, j) = A.at(i, j);
        for (int j = 0; j < B.cols(); ++j) M.at(i, A.cols() + j) = B.at(i, j);
    }
    return M;
}

Matrix from_columns(int p, int dim, const std::vector<std::vector<CycScalar>>& cols) {
    Matrix M(p, dim, static_cast<int>(cols.size()));
    for (size_t c = 0; c < cols.size(); ++c)
        for (int r = 0; r < dim; ++r) M.at(r, static_cast<int>(c)) = cols[c][r];
    return M;
}

std::optional<Matrix> solve(const Matrix& A, const Matrix& B) {
    if (A.rows() != B.rows())
        throw Error("solve row mismatch: " + std::to_string(A.rows()) + " vs " + std::to_string(B.rows()));
    RrefResult rr = rref(hstack(A, B));
    // consistency: no pivot may land in the B block
    for (int c : rr.pivots)
        if (c >= A.cols()) return std::nullopt;
    Matrix X(A.prime(), A.cols(), B.cols());
    for (size_t k = 0; k < rr.pivots.size(); ++k)
        for (int j = 0; j < B.cols(); ++j) X.at(rr.pivots[k], j) = rr.R.at(static_cast<int>(k), A.cols() + j);
    return X;
}

Matrix nullspace(const Matrix& A) {
    RrefResult rr = rref(A);
    std::vector<bool> is_pivot(A.cols(), false);
    for (int c : rr.pivots) is_pivot[c] = true;
    int nfree = A.cols() - rr.rank;
    Matrix N(A.prime(), A.cols(), nfree);
    int idx = 0;
    for (int c = 0; c < A.cols(); ++c) {
        if (is_pivot[c]) continue;
        N.at(c, idx) = CycScalar::one(A.prime());
        for (size_t k = 0; k < rr.pivots.size(); ++k)
            N.at(rr.pivots[k], idx) = -rr.R.at(static_cast<int>(k), c);
        ++idx;
    }
    return N;
}

std::optional<Matrix> inverse(const Matrix& A) {
    if (A.rows() != A.cols())
        throw Error("inverse of non-square matrix " + std::to_string(A.rows()) + "x" + std::to_string(A.cols()));
    RrefResult rr = rref(hstack(A, Matrix::identity(A.prime(), A.rows())));
    if (rr.rank != A.rows()) return std::nullopt;
    Matrix X(A.prime(), A.rows(), A.rows());
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.rows(); ++j) X.at(i, j) = rr.R.at(i, A.cols() + j);
    return X;
}

int rank(const Matrix& A) { return rref(A).rank; }

// Sparse elimination keyed by leading column; row choice by fewest
// nonzeros, ties by insertion order.
namespace {

struct Eliminator {
    int p;
    int ncols;
    std::map<int, std::vector<SparseRow>> pending;  // leading col -> rows
    std::map<int, SparseRow> pivot_rows;            // pivot col -> normalized row

    void push(SparseRow r) {
        if (r.nz.empty()) return;
        pending[r.nz.front().first].push_back(std::move(r));
    }

    static SparseRow combine(const SparseRow& a, const CycScalar& f, const SparseRow& b) {
        // a - f*b, merged by column
        SparseRow out;
        out.nz.reserve(a.nz.size() + b.nz.size());
        size_t i = 0, j = 0;
        while (i < a.nz.size() || j < b.nz.size()) {
            if (j == b.nz.size() || (i < a.nz.size() && a.nz[i].first < b.nz[j].first)) {
                out.nz.push_back(a.nz[i++]);
            } else if (i == a.nz.size() || b.nz[j].first < a.nz[i].first) {
                out.nz.emplace_back(b.nz[j].first, -(f * b.nz[j].second));
                ++j;
            } else {
                CycScalar v = a.nz[i].second - f * b.nz[j].second;
                if (!v.is_zero()) out.nz.emplace_back(a.nz[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        return out;
    }

    void run() {
        while (!pending.empty()) {
            auto it = pending.begin();
            int c = it->first;
            std::vector<SparseRow> rows = std::move(it->second);
            pending.erase(it);
            // choose pivot row with fewest nonzeros
            size_t best = 0;
            for (size_t i = 1; i < rows.size(); ++i)
                if (rows[i].nz.size() < rows[best].nz.size()) best = i;
            SparseRow piv = std::move(rows[best]);
            CycScalar inv = piv.nz.front().second.inverse();
            for (auto& [col, v] : piv.nz) v *= inv;
            for (size_t i = 0; i < rows.size(); ++i) {
                if (i == best) continue;
                SparseRow r = combine(rows[i], rows[i].nz.front().second, piv);
                push(std::move(r));
            }
            pivot_rows[c] = std::move(piv);
        }
        // back-substitute pivot rows into full reduced form
        for (auto it = pivot_rows.rbegin(); it != pivot_rows.rend(); ++it) {
            SparseRow& row = it->second;
            bool changed = true;
            while (changed) {
                changed = false;
                for (size_t k = 1; k < row.nz.size(); ++k) {
                    auto pit = pivot_rows.find(row.nz[k].first);
                    if (pit != pivot_rows.end() && pit->first != it->first) {
                        row = combine(row, row.nz[k].second, pit->second);
                        changed = true;
                        break;
                    }
                }
            }
        }
    }
};

}  // namespace

Matrix sparse_nullspace(int p, int ncols, std::vector<SparseRow> rows) {
    Eliminator el{p, ncols, {}, {}};
    for (auto& r : rows) el.push(std::move(r));
    el.run();
    std::vector<bool> is_pivot(ncols, false);
    for (const auto& [c, _] : el.pivot_rows) is_pivot[c] = true;
    int nfree = ncols - static_cast<int>(el.pivot_rows.size());
    Matrix N(p, ncols, nfree);
    int idx = 0;
    for (int c = 0; c < ncols; ++c) {
        if (is_pivot[c]) continue;
        N.at(c, idx) = CycScalar::one(p);
        for (const auto& [pc, row] : el.pivot_rows) {
            for (const auto& [col, v] : row.nz)
                if (col == c) N.at(pc, idx) = -v;
        }
        ++idx;
    }
    return N;
}

int sparse_rank(int p, int ncols, std::vector<SparseRow> rows) {
    Eliminator el{p, ncols, {}, {}};
    for (auto& r : rows) el.push(std::move(r));
    el.run();
    return static_cast<int>(el.pivot_rows.size());
}

}  // namespace froblab
