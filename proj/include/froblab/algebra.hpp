#pragma once

#include "froblab/matrix.hpp"

#include <memory>
#include <string>
#include <vector>

namespace froblab {

/// Finite-dimensional associative unital algebra over Q(zeta_p), given
/// by structure constants: sc[i*n+j] lists (k, coeff of b_k in b_i*b_j).
struct Algebra {
    int p = 2;
    int n = 0;
    std::vector<std::vector<std::pair<int, CycScalar>>> sc;
    std::vector<CycScalar> unit;
    std::vector<std::string> labels;
    /// Basis indices generating the algebra as a unital algebra; empty
    /// means "use the whole basis" in homomorphism systems.
    std::vector<int> generators;

    const std::vector<std::pair<int, CycScalar>>& table(int i, int j) const {
        return sc[static_cast<size_t>(i) * n + j];
    }
    std::vector<std::pair<int, CycScalar>>& table(int i, int j) {
        return sc[static_cast<size_t>(i) * n + j];
    }

    std::vector<CycScalar> mult(const std::vector<CycScalar>& a, const std::vector<CycScalar>& b) const;
    Matrix left_mult_matrix(int i) const;
    Matrix left_mult_matrix(const std::vector<CycScalar>& a) const;
    Matrix right_mult_matrix(const std::vector<CycScalar>& a) const;
    std::vector<CycScalar> basis_vector(int i) const;
    /// Indices used as homomorphism constraints (generators or all).
    std::vector<int> constraint_indices() const;
};

Algebra make_algebra(int p, int n, std::vector<std::string> labels = {});
void set_structure_constant(Algebra& A, int i, int j, int k, const CycScalar& c);

struct AlgebraCheckReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Verifies associativity over all basis triples and unit laws.
AlgebraCheckReport check_algebra(const Algebra& A);

Algebra opposite(const Algebra& A);

struct RadicalResult {
    Matrix basis;             // n x dim(J), columns span J(A)
    int gram_rank = 0;        // rank of the trace Gram matrix, = n - dim J
    bool nilpotency_checked = false;
    int nilpotency_index = 0;  // smallest k with J^k = 0, when checked
};

/// Jacobson radical via the characteristic-zero trace-form criterion:
/// J = { a : Tr(L_a L_b) = 0 for all b }.  The nilpotency postcondition
/// is verified by iterating span products for n <= nilpotency_dim_cap.
RadicalResult radical(const Algebra& A, int nilpotency_dim_cap = 128);

/// Multiply the spans: basis of span{ a*b : a in U, b in V } (columns).
Matrix span_product(const Algebra& A, const Matrix& U, const Matrix& V);

/// Column space basis of M (deterministic, from RREF of transpose).
Matrix column_space(const Matrix& M);

/// True if v lies in the column span of basis B.
bool in_span(const Matrix& B, const std::vector<CycScalar>& v);

}  // namespace froblab
