#include "froblab/algebra.hpp"

namespace froblab {

std::vector<CycScalar> Algebra::mult(const std::vector<CycScalar>& a,
                                     const std::vector<CycScalar>& b) const {
    std::vector<CycScalar> out(n, CycScalar::zero(p));
    for (int i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            if (b[j].is_zero()) continue;
            CycScalar f = a[i] * b[j];
            for (const auto& [k, c] : table(i, j)) out[k] += f * c;
        }
    }
    return out;
}

Matrix Algebra::left_mult_matrix(int i) const {
    Matrix L(p, n, n);
    for (int j = 0; j < n; ++j)
        for (const auto& [k, c] : table(i, j)) L.at(k, j) += c;
    return L;
}

Matrix Algebra::left_mult_matrix(const std::vector<CycScalar>& a) const {
    Matrix L(p, n, n);
    for (int i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < n; ++j)
            for (const auto& [k, c] : table(i, j)) L.at(k, j) += a[i] * c;
    }
    return L;
}

Matrix Algebra::right_mult_matrix(const std::vector<CycScalar>& a) const {
    Matrix R(p, n, n);
    for (int j = 0; j < n; ++j) {
        if (a[j].is_zero()) continue;
        for (int i = 0; i < n; ++i)
            for (const auto& [k, c] : table(i, j)) R.at(k, i) += a[j] * c;
    }
    return R;
}

std::vector<CycScalar> Algebra::basis_vector(int i) const {
    std::vector<CycScalar> v(n, CycScalar::zero(p));
    v[i] = CycScalar::one(p);
    return v;
}

std::vector<int> Algebra::constraint_indices() const {
    if (!generators.empty()) return generators;
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    return all;
}

Algebra make_algebra(int p, int n, std::vector<std::string> labels) {
    Algebra A;
    A.p = p;
    A.n = n;
    A.sc.assign(static_cast<size_t>(n) * n, {});
    A.unit.assign(n, CycScalar::zero(p));
    if (labels.empty()) {
        for (int i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i));
    }
    A.labels = std::move(labels);
    return A;
}

void set_structure_constant(Algebra& A, int i, int j, int k, const CycScalar& c) {
    if (c.is_zero()) return;
    A.table(i, j).emplace_back(k, c);
}

AlgebraCheckReport check_algebra(const Algebra& A) {
    AlgebraCheckReport rep;
    const int n = A.n;
    // unit laws
    for (int i = 0; i < n; ++i) {
        auto bi = A.basis_vector(i);
        if (A.mult(A.unit, bi) != bi || A.mult(bi, A.unit) != bi) {
            rep.ok = false;
            rep.violations.push_back("unit law fails at basis " + A.labels[i]);
        }
    }
    // associativity over all basis triples, via sparse tables; terms are
    // accumulated into short index/coefficient lists to avoid dense
    // n-vector churn on large sparse algebras
    using Terms = std::vector<std::pair<int, CycScalar>>;
    auto accumulate = [](Terms& acc, int q, const CycScalar& v) {
        for (auto& [idx, s] : acc)
            if (idx == q) {
                s += v;
                return;
            }
        acc.emplace_back(q, v);
    };
    auto coeff_of = [&](const Terms& t, int q) {
        for (const auto& [idx, s] : t)
            if (idx == q) return s;
        return CycScalar::zero(A.p);
    };
    Terms lhs, rhs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto& ij = A.table(i, j);
            for (int k = 0; k < n; ++k) {
                lhs.clear();
                rhs.clear();
                for (const auto& [m, c] : ij)
                    for (const auto& [q, d] : A.table(m, k)) accumulate(lhs, q, c * d);
                for (const auto& [m, c] : A.table(j, k))
                    for (const auto& [q, d] : A.table(i, m)) accumulate(rhs, q, c * d);
                bool equal = true;
                for (const auto& [q, s] : lhs)
                    if (!(s == coeff_of(rhs, q))) equal = false;
                for (const auto& [q, s] : rhs)
                    if (!(s == coeff_of(lhs, q))) equal = false;
                if (!equal) {
                    rep.ok = false;
                    rep.violations.push_back("associativity fails at (" + A.labels[i] + ", " +
                                             A.labels[j] + ", " + A.labels[k] + ")");
                }
            }
        }
    return rep;
}

Algebra opposite(const Algebra& A) {
    Algebra B = make_algebra(A.p, A.n, A.labels);
    B.unit = A.unit;
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j) B.table(i, j) = A.table(j, i);
    // generators of A generate A^op as well
    B.generators = A.generators;
    return B;
}

Matrix column_space(const Matrix& M) {
    RrefResult rr = rref(transpose(M));
    Matrix B(M.prime(), M.rows(), rr.rank);
    for (int k = 0; k < rr.rank; ++k)
        for (int r = 0; r < M.rows(); ++r) B.at(r, k) = rr.R.at(k, r);
    return B;
}

bool in_span(const Matrix& B, const std::vector<CycScalar>& v) {
    Matrix V(B.prime(), B.rows(), 1);
    V.set_col(0, v);
    return solve(B, V).has_value();
}

Matrix span_product(const Algebra& A, const Matrix& U, const Matrix& V) {
    std::vector<std::vector<CycScalar>> prods;
    for (int i = 0; i < U.cols(); ++i)
        for (int j = 0; j < V.cols(); ++j) prods.push_back(A.mult(U.col(i), V.col(j)));
    return column_space(from_columns(A.p, A.n, prods));
}

RadicalResult radical(const Algebra& A, int nilpotency_dim_cap) {
    const int n = A.n;
    // tau_k = Tr(L_{b_k}); then Tr(L_a L_b) = Tr(L_{ab}) = sum_k c[a][b][k] tau_k
    std::vector<CycScalar> tau(n, CycScalar::zero(A.p));
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (const auto& [m, c] : A.table(k, i))
                if (m == i) tau[k] += c;
    Matrix G(A.p, n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            CycScalar s = CycScalar::zero(A.p);
            for (const auto& [k, c] : A.table(a, b)) s += c * tau[k];
            G.at(a, b) = s;
        }
    RadicalResult res;
    res.basis = nullspace(G);
    res.gram_rank = n - res.basis.cols();
    if (n <= nilpotency_dim_cap && res.basis.cols() > 0) {
        Matrix Jk = res.basis;
        int k = 1;
        while (Jk.cols() > 0 && k <= n) {
            Jk = span_product(A, res.basis, Jk);
            ++k;
        }
        if (Jk.cols() > 0)
            throw Error("radical postcondition failed: J^" + std::to_string(k) + " nonzero");
        res.nilpotency_checked = true;
        res.nilpotency_index = k;
    }
    return res;
}

}  // namespace froblab
