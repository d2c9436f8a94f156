#include "froblab/module.hpp"

#include <map>
#include <random>

namespace froblab {

Matrix Module::rho_of(const std::vector<CycScalar>& a) const {
    Matrix R(A->p, dim, dim);
    for (int i = 0; i < A->n; ++i) {
        if (a[i].is_zero()) continue;
        R = R + rho[i] * a[i];
    }
    return R;
}

bool Module::is_valid(std::string* why) const {
    const int n = A->n;
    if (rho_of(A->unit) != Matrix::identity(A->p, dim)) {
        if (why) *why = "rho(1) != I";
        return false;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Matrix lhs = matmul(rho[i], rho[j]);
            Matrix rhs(A->p, dim, dim);
            for (const auto& [k, c] : A->table(i, j)) rhs = rhs + rho[k] * c;
            if (lhs != rhs) {
                if (why)
                    *why = "rho(b_" + std::to_string(i) + ")rho(b_" + std::to_string(j) +
                           ") violates the structure constants";
                return false;
            }
        }
    return true;
}

AntiAutomorphism make_anti_automorphism(std::shared_ptr<const Algebra> A, Matrix m) {
    if (m.rows() != A->n || m.cols() != A->n)
        throw Error("anti-automorphism matrix must be n x n");
    if (!inverse(m)) throw Error("anti-automorphism matrix is singular");
    if (matvec(m, A->unit) != A->unit) throw Error("anti-automorphism does not fix the unit");
    for (int i = 0; i < A->n; ++i)
        for (int j = 0; j < A->n; ++j) {
            auto lhs = matvec(m, A->mult(A->basis_vector(i), A->basis_vector(j)));
            auto rhs = A->mult(m.col(j), m.col(i));
            if (lhs != rhs)
                throw Error("map does not reverse products at basis pair (" + std::to_string(i) +
                            ", " + std::to_string(j) + ")");
        }
    return AntiAutomorphism{std::move(A), std::move(m)};
}

Module regular_module(std::shared_ptr<const Algebra> A, Side side) {
    Module M;
    M.dim = A->n;
    M.rho.reserve(A->n);
    if (side == Side::Left) {
        for (int i = 0; i < A->n; ++i) M.rho.push_back(A->left_mult_matrix(i));
        M.A = std::move(A);
        M.regular_left = true;
    } else {
        // right regular module realized as a left module over the opposite algebra
        auto Aop = std::make_shared<Algebra>(opposite(*A));
        for (int i = 0; i < Aop->n; ++i) M.rho.push_back(Aop->left_mult_matrix(i));
        M.A = std::move(Aop);
        M.regular_left = true;
    }
    return M;
}

Module zero_module(std::shared_ptr<const Algebra> A) {
    Module M;
    M.dim = 0;
    M.rho.assign(A->n, Matrix(A->p, 0, 0));
    M.A = std::move(A);
    return M;
}

Module direct_sum(const Module& M, const Module& N) {
    if (M.A.get() != N.A.get()) throw Error("direct_sum over different algebras");
    Module S;
    S.A = M.A;
    S.dim = M.dim + N.dim;
    for (int i = 0; i < M.A->n; ++i) S.rho.push_back(block_diag({M.rho[i], N.rho[i]}));
    return S;
}

std::vector<Matrix> hom_space(const Module& M, const Module& N) {
    if (M.A->n != N.A->n || M.A->p != N.A->p)
        throw Error("hom_space: modules over incompatible algebras");
    const int p = M.A->p;
    const int md = M.dim, nd = N.dim;
    const int unknowns = nd * md;  // X[r][c], r in N, c in M; index r*md + c
    std::vector<SparseRow> rows;
    for (int b : M.A->constraint_indices()) {
        const Matrix& RN = N.rho[b];
        const Matrix& RM = M.rho[b];
        for (int r = 0; r < nd; ++r)
            for (int c = 0; c < md; ++c) {
                std::map<int, CycScalar> acc;
                for (int k = 0; k < nd; ++k) {
                    const CycScalar& v = RN.at(r, k);
                    if (v.is_zero()) continue;
                    auto [it, fresh] = acc.try_emplace(k * md + c, v);
                    if (!fresh) it->second += v;
                }
                for (int k = 0; k < md; ++k) {
                    const CycScalar& v = RM.at(k, c);
                    if (v.is_zero()) continue;
                    auto [it, fresh] = acc.try_emplace(r * md + k, -v);
                    if (!fresh) it->second -= v;
                }
                SparseRow row;
                for (auto& [col, v] : acc)
                    if (!v.is_zero()) row.nz.emplace_back(col, std::move(v));
                if (!row.nz.empty()) rows.push_back(std::move(row));
            }
    }
    Matrix K = sparse_nullspace(p, unknowns, std::move(rows));
    std::vector<Matrix> basis;
    for (int c = 0; c < K.cols(); ++c) {
        Matrix X(p, nd, md);
        for (int r = 0; r < nd; ++r)
            for (int cc = 0; cc < md; ++cc) X.at(r, cc) = K.at(r * md + cc, c);
        basis.push_back(std::move(X));
    }
    return basis;
}

namespace {

// Incremental reduced column echelon span
struct Span {
    int p;
    int dim;
    std::vector<std::vector<CycScalar>> basis;  // each with pivot entry 1
    std::vector<int> pivots;

    // returns true (and the reduced vector) if v was independent and added
    bool add(std::vector<CycScalar> v) {
        for (size_t k = 0; k < basis.size(); ++k) {
            const CycScalar& f = v[pivots[k]];
            if (f.is_zero()) continue;
            CycScalar fc = f;
            for (int r = 0; r < dim; ++r) v[r] -= fc * basis[k][r];
        }
        int piv = -1;
        for (int r = 0; r < dim; ++r)
            if (!v[r].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return false;
        CycScalar inv = v[piv].inverse();
        for (int r = 0; r < dim; ++r) v[r] *= inv;
        for (size_t k = 0; k < basis.size(); ++k) {
            const CycScalar f = basis[k][piv];
            if (f.is_zero()) continue;
            for (int r = 0; r < dim; ++r) basis[k][r] -= f * v[r];
        }
        basis.push_back(std::move(v));
        pivots.push_back(piv);
        return true;
    }

    Matrix to_matrix() const {
        return from_columns(p, dim, basis);
    }
};

Module module_from_basis(const Module& M, const Matrix& B) {
    Module S;
    S.A = M.A;
    S.dim = B.cols();
    for (int i = 0; i < M.A->n; ++i) {
        auto X = solve(B, matmul(M.rho[i], B));
        if (!X) throw Error("span is not closed under the action of basis " + std::to_string(i));
        S.rho.push_back(std::move(*X));
    }
    return S;
}

}  // namespace

Module submodule(const Module& M, const std::vector<std::vector<CycScalar>>& gens,
                 Matrix* basis_out) {
    Span span{M.A->p, M.dim, {}, {}};
    std::vector<std::vector<CycScalar>> work;
    for (const auto& g : gens)
        if (span.add(g)) work.push_back(span.basis.back());
    auto cons = M.A->constraint_indices();
    while (!work.empty()) {
        auto v = std::move(work.back());
        work.pop_back();
        for (int b : cons) {
            auto w = matvec(M.rho[b], v);
            if (span.add(w)) work.push_back(span.basis.back());
        }
    }
    Matrix B = span.to_matrix();
    if (basis_out) *basis_out = B;
    if (B.cols() == 0) return zero_module(M.A);
    return module_from_basis(M, B);
}

Module quotient(const Module& M, const Matrix& sub_basis, Matrix* lift_out) {
    const int p = M.A->p;
    // row-echelon the subspace: rows of rref(transpose) are the reduced basis
    RrefResult rr = rref(transpose(sub_basis));
    std::vector<bool> is_pivot(M.dim, false);
    for (int c : rr.pivots) is_pivot[c] = true;
    std::vector<int> qpos;  // quotient coordinate positions
    for (int r = 0; r < M.dim; ++r)
        if (!is_pivot[r]) qpos.push_back(r);
    const int qd = static_cast<int>(qpos.size());
    auto project = [&](std::vector<CycScalar> v) {
        for (int k = 0; k < rr.rank; ++k) {
            const CycScalar f = v[rr.pivots[k]];
            if (f.is_zero()) continue;
            for (int r = 0; r < M.dim; ++r) v[r] -= f * rr.R.at(k, r);
        }
        std::vector<CycScalar> q(qd, CycScalar::zero(p));
        for (int t = 0; t < qd; ++t) q[t] = v[qpos[t]];
        return q;
    };
    Module Q;
    Q.A = M.A;
    Q.dim = qd;
    for (int i = 0; i < M.A->n; ++i) {
        Matrix R(p, qd, qd);
        for (int t = 0; t < qd; ++t) {
            auto img = project(M.rho[i].col(qpos[t]));
            for (int r = 0; r < qd; ++r) R.at(r, t) = img[r];
        }
        Q.rho.push_back(std::move(R));
    }
    if (lift_out) {
        Matrix L(p, M.dim, qd);
        for (int t = 0; t < qd; ++t) L.at(qpos[t], t) = CycScalar::one(p);
        *lift_out = L;
    }
    return Q;
}

Matrix socle_basis(const Module& M, const Matrix& radical_basis) {
    const int p = M.A->p;
    std::vector<SparseRow> rows;
    for (int a = 0; a < radical_basis.cols(); ++a) {
        Matrix R = M.rho_of(radical_basis.col(a));
        for (int r = 0; r < M.dim; ++r) {
            SparseRow row;
            for (int c = 0; c < M.dim; ++c)
                if (!R.at(r, c).is_zero()) row.nz.emplace_back(c, R.at(r, c));
            if (!row.nz.empty()) rows.push_back(std::move(row));
        }
    }
    return sparse_nullspace(p, M.dim, std::move(rows));
}

Module socle_module(const Module& M, const Matrix& radical_basis) {
    Matrix B = socle_basis(M, radical_basis);
    if (B.cols() == 0) return zero_module(M.A);
    Module S;
    S.A = M.A;
    S.dim = B.cols();
    for (int i = 0; i < M.A->n; ++i) {
        auto X = solve(B, matmul(M.rho[i], B));
        if (!X) throw Error("socle not closed under action (internal)");
        S.rho.push_back(std::move(*X));
    }
    return S;
}

Matrix radical_submodule_basis(const Module& M, const Matrix& radical_basis) {
    std::vector<std::vector<CycScalar>> cols;
    for (int a = 0; a < radical_basis.cols(); ++a) {
        Matrix R = M.rho_of(radical_basis.col(a));
        for (int c = 0; c < M.dim; ++c) cols.push_back(R.col(c));
    }
    if (cols.empty()) return Matrix(M.A->p, M.dim, 0);
    return column_space(from_columns(M.A->p, M.dim, cols));
}

int cosocle_dim(const Module& M, const Matrix& radical_basis) {
    return M.dim - radical_submodule_basis(M, radical_basis).cols();
}

Module cosocle_module(const Module& M, const Matrix& radical_basis) {
    return quotient(M, radical_submodule_basis(M, radical_basis));
}

IsoResult is_isomorphic(const Module& M, const Module& N, std::uint64_t seed) {
    IsoResult res;
    if (M.dim != N.dim) {
        res.method = "dimension mismatch";
        return res;
    }
    if (M.dim == 0) {
        res.isomorphic = true;
        res.method = "both zero";
        res.witness = Matrix(M.A->p, 0, 0);
        return res;
    }
    auto homs = hom_space(M, N);
    res.hom_dim = static_cast<int>(homs.size());
    if (homs.empty()) {
        res.method = "hom space is zero";
        return res;
    }
    for (const auto& X : homs) {
        if (rank(X) == M.dim) {
            res.isomorphic = true;
            res.witness = X;
            res.method = "basis element";
            return res;
        }
    }
    const int p = M.A->p;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-3, 3);
    const int tries = 4 * res.hom_dim;
    for (int t = 0; t < tries; ++t) {
        Matrix X(p, N.dim, M.dim);
        for (const auto& H : homs) X = X + H * CycScalar::from_int(p, dist(rng));
        if (rank(X) == M.dim) {
            res.isomorphic = true;
            res.witness = X;
            res.randomized_used = true;
            res.method = "randomized combination";
            return res;
        }
    }
    res.randomized_used = true;
    // deterministic fallback: det(sum t_i X_i) is a polynomial of degree
    // <= dim in each t_i, so vanishing on a (dim+1)^h grid proves non-iso
    if (res.hom_dim <= 3) {
        long long grid = 1;
        for (int i = 0; i < res.hom_dim; ++i) grid *= (M.dim + 1);
        if (grid > 30000)
            throw Error("is_isomorphic: deterministic fallback grid too large; raise the sample budget");
        std::vector<int> t(res.hom_dim, 0);
        for (long long g = 0; g < grid; ++g) {
            long long r = g;
            Matrix X(p, N.dim, M.dim);
            for (int i = 0; i < res.hom_dim; ++i) {
                t[i] = static_cast<int>(r % (M.dim + 1));
                r /= (M.dim + 1);
                if (t[i] != 0) X = X + homs[i] * CycScalar::from_int(p, t[i]);
            }
            if (rank(X) == M.dim) {
                res.isomorphic = true;
                res.witness = X;
                res.deterministic_fallback_used = true;
                res.method = "deterministic grid";
                return res;
            }
        }
        res.deterministic_fallback_used = true;
        res.method = "deterministic grid exhausted";
        return res;
    }
    throw Error("is_isomorphic: hom dimension " + std::to_string(res.hom_dim) +
                " exceeds the deterministic fallback; raise the sample budget");
}

std::vector<int> composition_factors(const Module& M, const std::vector<Module>& simples,
                                     const Matrix& radical_basis) {
    std::vector<int> factors;
    Module cur = M;
    while (cur.dim > 0) {
        Matrix soc = socle_basis(cur, radical_basis);
        if (soc.cols() == 0) throw Error("composition_factors: nonzero module with zero socle");
        Module socM = socle_module(cur, radical_basis);
        int accounted = 0;
        for (size_t k = 0; k < simples.size(); ++k) {
            int mult = static_cast<int>(hom_space(simples[k], socM).size());
            for (int t = 0; t < mult; ++t) factors.push_back(static_cast<int>(k));
            accounted += mult * simples[k].dim;
        }
        if (accounted != socM.dim)
            throw Error("composition factor matches no provided simple (socle dim " +
                        std::to_string(socM.dim) + ", accounted " + std::to_string(accounted) + ")");
        cur = quotient(cur, soc);
    }
    return factors;
}

Module dual_module(const Module& M, const AntiAutomorphism& sigma) {
    Module D;
    D.A = M.A;
    D.dim = M.dim;
    for (int i = 0; i < M.A->n; ++i) D.rho.push_back(transpose(M.rho_of(sigma.matrix.col(i))));
    return D;
}

Module dual_of_right_regular(std::shared_ptr<const Algebra> A) {
    Module D;
    D.dim = A->n;
    for (int i = 0; i < A->n; ++i)
        D.rho.push_back(transpose(A->right_mult_matrix(A->basis_vector(i))));
    D.A = std::move(A);
    return D;
}

Module tensor_modules(const Module& M, const Module& N, const Matrix& delta) {
    const int n = M.A->n;
    const int p = M.A->p;
    if (delta.rows() != n * n || delta.cols() != n)
        throw Error("tensor_modules: delta must be n^2 x n");
    Module T;
    T.A = M.A;
    T.dim = M.dim * N.dim;
    for (int i = 0; i < n; ++i) {
        Matrix R(p, T.dim, T.dim);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                const CycScalar& c = delta.at(u * n + v, i);
                if (c.is_zero()) continue;
                R = R + kron(M.rho[u], N.rho[v]) * c;
            }
        T.rho.push_back(std::move(R));
    }
    return T;
}

}  // namespace froblab
