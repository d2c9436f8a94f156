#include "froblab/taft.hpp"

namespace froblab {

namespace {

// product in B (x) B of coordinate vectors (size n^2)
std::vector<CycScalar> tensor_square_mult(const Algebra& A, const std::vector<CycScalar>& u,
                                          const std::vector<CycScalar>& v) {
    const int n = A.n;
    std::vector<CycScalar> out(static_cast<size_t>(n) * n, CycScalar::zero(A.p));
    for (int a = 0; a < n * n; ++a) {
        if (u[a].is_zero()) continue;
        int a1 = a / n, a2 = a % n;
        for (int b = 0; b < n * n; ++b) {
            if (v[b].is_zero()) continue;
            int b1 = b / n, b2 = b % n;
            CycScalar f = u[a] * v[b];
            for (const auto& [k1, c1] : A.table(a1, b1))
                for (const auto& [k2, c2] : A.table(a2, b2)) out[k1 * n + k2] += f * c1 * c2;
        }
    }
    return out;
}

}  // namespace

TaftAlgebra build_taft(int p) {
    if (!is_prime(p)) throw Error("Taft algebra requires a prime p, got " + std::to_string(p));
    const int n = p * p;
    std::vector<std::string> labels;
    for (int i = 0; i < p; ++i)
        for (int s = 0; s < p; ++s) labels.push_back("g^" + std::to_string(i) + "*x^" + std::to_string(s));
    Algebra A = make_algebra(p, n, std::move(labels));
    auto lam = CycScalar::zeta(p);
    // (g^i x^s)(g^j x^t) = lambda^{sj} g^{i+j} x^{s+t}, zero when s+t >= p
    for (int i = 0; i < p; ++i)
        for (int s = 0; s < p; ++s)
            for (int j = 0; j < p; ++j)
                for (int t = 0; t < p; ++t) {
                    if (s + t >= p) continue;
                    int from1 = i * p + s, from2 = j * p + t;
                    int to = ((i + j) % p) * p + (s + t);
                    set_structure_constant(A, from1, from2, to,
                                           CycScalar::zeta_pow(p, static_cast<long long>(s) * j));
                }
    A.unit[0] = CycScalar::one(p);
    A.generators = {1 * p + 0, 0 * p + 1};  // g, x
    auto B = std::make_shared<Algebra>(std::move(A));

    TaftAlgebra T;
    T.p = p;
    T.B = B;
    T.lambda = lam;

    // Delta(g) = g (x) g, Delta(x) = g (x) x + x (x) 1
    std::vector<CycScalar> dg(static_cast<size_t>(n) * n, CycScalar::zero(p));
    dg[(1 * p) * n + (1 * p)] = CycScalar::one(p);
    std::vector<CycScalar> dx(static_cast<size_t>(n) * n, CycScalar::zero(p));
    dx[(1 * p) * n + 1] = CycScalar::one(p);
    dx[1 * n + 0] = CycScalar::one(p);
    Matrix delta(p, n * n, n);
    for (int i = 0; i < p; ++i)
        for (int s = 0; s < p; ++s) {
            std::vector<CycScalar> acc(static_cast<size_t>(n) * n, CycScalar::zero(p));
            acc[0] = CycScalar::one(p);  // 1 (x) 1
            for (int t = 0; t < i; ++t) acc = tensor_square_mult(*B, acc, dg);
            for (int t = 0; t < s; ++t) acc = tensor_square_mult(*B, acc, dx);
            for (int r = 0; r < n * n; ++r) delta.at(r, i * p + s) = acc[r];
        }
    T.delta = std::move(delta);

    Matrix counit(p, 1, n);
    for (int i = 0; i < p; ++i) counit.at(0, i * p + 0) = CycScalar::one(p);
    T.counit = std::move(counit);

    // S(g^i x^s) = S(x)^s S(g)^i = (-g^{p-1} x)^s g^{p-i}
    std::vector<CycScalar> sx(n, CycScalar::zero(p));
    sx[(p - 1) * p + 1] = -CycScalar::one(p);
    Matrix S(p, n, n);
    for (int i = 0; i < p; ++i)
        for (int s = 0; s < p; ++s) {
            std::vector<CycScalar> acc(n, CycScalar::zero(p));
            acc[0] = CycScalar::one(p);
            for (int t = 0; t < s; ++t) acc = B->mult(acc, sx);
            std::vector<CycScalar> ginv(n, CycScalar::zero(p));
            ginv[(((p - i) % p)) * p + 0] = CycScalar::one(p);
            acc = B->mult(acc, ginv);
            for (int r = 0; r < n; ++r) S.at(r, i * p + s) = acc[r];
        }
    T.antipode = make_anti_automorphism(B, S);
    auto Sinv = inverse(T.antipode.matrix);
    if (!Sinv) throw Error("Taft antipode not invertible (internal)");
    T.antipode_inv = std::move(*Sinv);
    return T;
}

Module simple_module(const TaftAlgebra& T, int k) {
    const int p = T.p, n = p * p;
    Module V;
    V.A = T.B;
    V.dim = 1;
    V.rho.reserve(n);
    for (int i = 0; i < p; ++i)
        for (int s = 0; s < p; ++s) {
            Matrix m(p, 1, 1);
            if (s == 0) m.at(0, 0) = CycScalar::zeta_pow(p, static_cast<long long>(i) * k);
            V.rho.push_back(std::move(m));
        }
    return V;
}

std::vector<CycScalar> x_element(const TaftAlgebra& T, int k, int s) {
    const int p = T.p, n = p * p;
    if (s < 0 || s >= p) throw Error("x_element: s out of range");
    std::vector<CycScalar> v(n, CycScalar::zero(p));
    for (int i = 0; i < p; ++i) v[i * p + s] = CycScalar::zeta_pow(p, -static_cast<long long>(i) * k);
    // defining relations, asserted on construction
    auto g = T.B->basis_vector(T.g_index());
    auto x = T.B->basis_vector(T.x_index());
    auto gv = T.B->mult(g, v);
    std::vector<CycScalar> expect(n, CycScalar::zero(p));
    auto lamk = CycScalar::zeta_pow(p, k);
    for (int r = 0; r < n; ++r) expect[r] = lamk * v[r];
    if (gv != expect) throw Error("x_element: g-eigenvector relation failed (internal)");
    auto xv = T.B->mult(x, v);
    std::vector<CycScalar> next(n, CycScalar::zero(p));
    if (s + 1 < p)
        for (int i = 0; i < p; ++i)
            next[i * p + (s + 1)] = CycScalar::zeta_pow(p, -static_cast<long long>(i) * (k - 1));
    if (xv != next) throw Error("x_element: x-shift relation failed (internal)");
    return v;
}

Module chain_submodule(const TaftAlgebra& T, int k, int i, Matrix* basis_out) {
    if (i < 1 || i > T.p) throw Error("chain_submodule: index i must be in 1..p");
    Module reg = regular_module(T.B, Side::Left);
    std::vector<std::vector<CycScalar>> gens;
    for (int j = 1; j <= i; ++j) gens.push_back(x_element(T, k + j, T.p - j));
    Matrix basis;
    Module M = submodule(reg, gens, &basis);
    if (M.dim != i)
        throw Error("chain ideal I_" + std::to_string(k) + "^" + std::to_string(i) +
                    " has dimension " + std::to_string(M.dim) + ", expected " + std::to_string(i));
    if (basis_out) *basis_out = basis;
    return M;
}

Module projective_cover(const TaftAlgebra& T, int k, Matrix* basis_out) {
    return chain_submodule(T, k, T.p, basis_out);
}

Module tensor_modules(const TaftAlgebra& T, const Module& M, const Module& N) {
    return tensor_modules(M, N, T.delta);
}

TaftRadicalReport radical_check(const TaftAlgebra& T) {
    TaftRadicalReport rep;
    const int p = T.p, n = p * p;
    RadicalResult rad = radical(*T.B);
    rep.radical_basis = rad.basis;
    rep.radical_dim = rad.basis.cols();
    rep.nilpotency_index = rad.nilpotency_index;
    if (rep.radical_dim != n - p) return rep;
    // expected span: { g^i x^s : s >= 1 }
    for (int c = 0; c < rad.basis.cols(); ++c)
        for (int i = 0; i < p; ++i)
            if (!rad.basis.at(i * p + 0, c).is_zero()) return rep;
    rep.ok = true;
    return rep;
}

}  // namespace froblab
