#include "froblab/frobenius.hpp"

#include <random>

namespace froblab {

ProjectivityResult is_projective(const Module& M) {
    ProjectivityResult res;
    if (M.dim == 0) {
        res.projective = true;
        return res;
    }
    auto A = M.A;
    const int p = A->p;
    const int n = A->n, m = M.dim;
    Module reg = regular_module(A, Side::Left);
    auto homs = hom_space(M, reg);  // maps M -> A
    res.hom_to_regular_dim = static_cast<int>(homs.size());
    if (homs.empty()) return res;
    const int h = res.hom_to_regular_dim;
    // phi: A^m -> M, component t: mu_t(a) = rho_M(a) e_t (m x n matrix)
    // psi_t = sum_u y[t][u] X_u; phi psi = sum_{t,u} y[t][u] mu_t X_u = id
    std::vector<Matrix> mu(m, Matrix(p, m, n));
    for (int t = 0; t < m; ++t)
        for (int i = 0; i < n; ++i)
            for (int r = 0; r < m; ++r) mu[t].at(r, i) = M.rho[i].at(r, t);
    Matrix system(p, m * m, m * h);
    for (int t = 0; t < m; ++t)
        for (int u = 0; u < h; ++u) {
            Matrix prod = matmul(mu[t], homs[u]);
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < m; ++c) system.at(r * m + c, t * h + u) = prod.at(r, c);
        }
    Matrix target(p, m * m, 1);
    for (int r = 0; r < m; ++r) target.at(r * m + r, 0) = CycScalar::one(p);
    res.projective = solve(system, target).has_value();
    return res;
}

QfResult is_quasi_frobenius(std::shared_ptr<const Algebra> A) {
    QfResult res;
    Module dual = dual_of_right_regular(A);
    res.dual_projectivity = is_projective(dual);
    res.quasi_frobenius = res.dual_projectivity.projective;
    return res;
}

Matrix gram_matrix(const Algebra& A, const std::vector<CycScalar>& lambda) {
    Matrix G(A.p, A.n, A.n);
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j) {
            CycScalar s = CycScalar::zero(A.p);
            for (const auto& [k, c] : A.table(i, j)) s += c * lambda[k];
            G.at(i, j) = s;
        }
    return G;
}

FrobeniusResult is_frobenius(const Algebra& A, const FrobeniusOptions& opts) {
    FrobeniusResult res;
    res.seed = opts.seed;
    const int p = A.p, n = A.n;

    if (opts.qf_known) {
        res.quasi_frobenius = *opts.qf_known;
    } else {
        auto shared = std::make_shared<Algebra>(A);
        res.quasi_frobenius = is_quasi_frobenius(shared).quasi_frobenius;
    }
    if (!res.quasi_frobenius) {
        res.frobenius = false;
        res.method = "not quasi-Frobenius";
        return res;
    }

    auto certify = [&](const std::vector<CycScalar>& lambda) {
        return rank(gram_matrix(A, lambda)) == n;
    };

    // module-iso method: Hom(A, A^vee) = A^vee, witnesses are functionals;
    // basis-dual functionals first, then seeded random combinations
    int basis_tries = opts.iso_basis_tries < 0 ? n : std::min(opts.iso_basis_tries, n);
    for (int k = 0; k < basis_tries; ++k) {
        std::vector<CycScalar> lambda(n, CycScalar::zero(p));
        lambda[k] = CycScalar::one(p);
        if (certify(lambda)) {
            res.iso_certificate = true;
            res.witness_functional = lambda;
            break;
        }
    }
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<int> dist(-3, 3);
    if (!res.iso_certificate) {
        int rand_tries = opts.iso_random_tries < 0 ? 2 * n : opts.iso_random_tries;
        res.iso_randomized_used = rand_tries > 0;
        for (int t = 0; t < rand_tries; ++t) {
            std::vector<CycScalar> lambda(n, CycScalar::zero(p));
            for (int k = 0; k < n; ++k) lambda[k] = CycScalar::from_int(p, dist(rng));
            if (certify(lambda)) {
                res.iso_certificate = true;
                res.witness_functional = lambda;
                break;
            }
        }
    }
    // independent random-functional oracle (its own stream)
    std::mt19937_64 orng(opts.seed ^ 0x9E3779B97F4A7C15ULL);
    for (int t = 0; t < opts.oracle_tries; ++t) {
        std::vector<CycScalar> lambda(n, CycScalar::zero(p));
        for (int k = 0; k < n; ++k) lambda[k] = CycScalar::from_int(p, dist(orng));
        if (certify(lambda)) {
            res.oracle_certificate = true;
            if (res.witness_functional.empty()) res.witness_functional = lambda;
            break;
        }
    }

    if (res.iso_certificate || res.oracle_certificate) {
        res.frobenius = true;
        res.method = res.iso_certificate ? "module isomorphism witness" : "random functional oracle";
        if (!opts.soc_cosoc_dims.empty()) {
            for (const auto& [s, c] : opts.soc_cosoc_dims)
                if (s != c)
                    throw Error("Frobenius certificate found but a projective indecomposable has "
                                "soc dim " + std::to_string(s) + " != cosoc dim " + std::to_string(c));
        }
        return res;
    }
    if (!opts.soc_cosoc_dims.empty()) {
        // exact criterion for QF split algebras: Frobenius iff soc and
        // cosoc of every projective indecomposable have equal dimension
        res.decided_by_socle_criterion = true;
        res.frobenius = true;
        for (const auto& [s, c] : opts.soc_cosoc_dims)
            if (s != c) res.frobenius = false;
        res.method = "socle-cosocle criterion";
        return res;
    }
    throw Error("is_frobenius inconclusive: no certificate in budget and no projective "
                "indecomposable data supplied; raise the sample budget or supply projectives");
}

EndAlgebraResult end_algebra(const Module& M, bool opposite_orientation) {
    EndAlgebraResult out;
    const int p = M.A->p;
    const int m = M.dim;
    out.hom_basis = hom_space(M, M);
    out.opposite_orientation = opposite_orientation;
    const int h = static_cast<int>(out.hom_basis.size());
    // coordinate extraction: pivot rows of the vectorized hom basis
    Matrix B(p, m * m, h);
    for (int u = 0; u < h; ++u)
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c) B.at(r * m + c, u) = out.hom_basis[u].at(r, c);
    RrefResult rr = rref(transpose(B));
    if (rr.rank != h) throw Error("end_algebra: hom basis not independent (internal)");
    Matrix Bpiv(p, h, h);
    for (int u = 0; u < h; ++u)
        for (int k = 0; k < h; ++k) Bpiv.at(k, u) = B.at(rr.pivots[k], u);
    auto Binv = inverse(Bpiv);
    if (!Binv) throw Error("end_algebra: pivot submatrix singular (internal)");
    auto coords = [&](const Matrix& X) {
        std::vector<CycScalar> w(h, CycScalar::zero(p));
        for (int k = 0; k < h; ++k) {
            int rc = rr.pivots[k];
            w[k] = X.at(rc / m, rc % m);
        }
        auto y = matvec(*Binv, w);
        // verify the product lies in the span
        Matrix chk(p, m, m);
        for (int u = 0; u < h; ++u)
            if (!y[u].is_zero()) chk = chk + out.hom_basis[u] * y[u];
        if (chk != X) throw Error("end_algebra: composition left the hom space (internal)");
        return y;
    };
    auto Alg = make_algebra(p, h);
    for (int u = 0; u < h; ++u)
        for (int v = 0; v < h; ++v) {
            Matrix prod = opposite_orientation ? matmul(out.hom_basis[v], out.hom_basis[u])
                                               : matmul(out.hom_basis[u], out.hom_basis[v]);
            auto y = coords(prod);
            for (int k = 0; k < h; ++k)
                if (!y[k].is_zero()) set_structure_constant(Alg, u, v, k, y[k]);
        }
    Alg.unit = coords(Matrix::identity(p, m));
    out.algebra = std::make_shared<Algebra>(std::move(Alg));
    return out;
}

}  // namespace froblab
