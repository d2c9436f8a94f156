#include "froblab/wcat.hpp"

#include <cmath>

namespace froblab {

WeightVector f1(const TaftAlgebra& T, const Module& M) {
    const int p = T.p;
    auto G = M.rho[T.g_index()];
    WeightVector w(p, 0);
    long long total = 0;
    for (int k = 0; k < p; ++k) {
        auto shifted = G - Matrix::identity(p, M.dim) * CycScalar::zeta_pow(p, k);
        w[k] = nullspace(shifted).cols();
        total += w[k];
    }
    if (total != M.dim)
        throw Error("f1: grouplike action is not diagonalizable over the character set");
    return w;
}

MultMatrix f2(const WeightVector& w) {
    const int p = static_cast<int>(w.size());
    MultMatrix M(p, std::vector<long long>(p, 0));
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) M[i][j] = w[(i + j) % p];
    return M;
}

long long f_dim(const MultMatrix& M, const BaseDims& d) {
    const int p = static_cast<int>(d.size());
    if (static_cast<int>(M.size()) != p) throw Error("f_dim: size mismatch");
    long long out = 0;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) out += M[i][j] * d[i] * d[j];
    return out;
}

MultMatrix mult_tensor(const MultMatrix& MX, const MultMatrix& MY) {
    const int p = static_cast<int>(MX.size());
    if (static_cast<int>(MY.size()) != p) throw Error("mult_tensor: size mismatch");
    MultMatrix R(p, std::vector<long long>(p, 0));
    for (int i = 0; i < p; ++i)
        for (int k = 0; k < p; ++k)
            for (int j = 0; j < p; ++j) R[i][j] += MX[i][k] * MY[(p - k) % p][j];
    return R;
}

std::vector<long long> convolution(const BaseDims& d) {
    const int p = static_cast<int>(d.size());
    std::vector<long long> c(p, 0);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) c[(i + j) % p] += d[i] * d[j];
    return c;
}

std::pair<long long, long long> soc_cosoc_dims_predicted(const BaseDims& d, int k) {
    auto c = convolution(d);
    const int p = static_cast<int>(d.size());
    int kk = ((k % p) + p) % p;
    return {c[(kk + 1) % p], c[kk]};
}

bool frobenius_criterion(const BaseDims& d) {
    const int p = static_cast<int>(d.size());
    if (p == 0) throw Error("frobenius_criterion: empty dimension vector");
    for (long long x : d)
        if (x < 1) throw Error("frobenius_criterion: dimensions must be >= 1");

    // (a) all convolutions equal
    auto c = convolution(d);
    bool a = true;
    for (int k = 1; k < p; ++k)
        if (c[k] != c[0]) a = false;

    // (b) all d_i equal
    bool b = true;
    for (int i = 1; i < p; ++i)
        if (d[i] != d[0]) b = false;

    // (c) (sum d_i zeta^i)^2 = 0 in Q(zeta_p); needs p prime
    if (!is_prime(p)) {
        if (a != b) throw Error("frobenius_criterion: methods disagree (non-prime length)");
        return a;
    }
    auto t = CycScalar::zero(p);
    for (int i = 0; i < p; ++i) t += CycScalar::from_int(p, d[i]) * CycScalar::zeta_pow(p, i);
    bool cc = (t * t).is_zero();

    if (a != b || b != cc)
        throw Error("frobenius_criterion: the three methods disagree: " + std::to_string(a) +
                    "/" + std::to_string(b) + "/" + std::to_string(cc));
    return a;
}

long long predicted_total_dim(const BaseDims& d) {
    long long s = 0;
    for (long long x : d) s += x;
    long long dim = s * s * s * s;
    auto c = convolution(d);
    long long cs = 0;
    for (long long x : c) cs += x;
    if (cs * cs != dim) throw Error("predicted_total_dim: cross-check failed");
    return dim;
}

FusionMatrix fusion_matrix(const TaftAlgebra& T, const Module& X) {
    const int p = T.p;
    auto rad = radical(*T.B);
    std::vector<Module> simples;
    simples.reserve(p);
    for (int k = 0; k < p; ++k) simples.push_back(simple_module(T, k));
    FusionMatrix N(p, std::vector<long long>(p, 0));
    for (int j = 0; j < p; ++j) {
        auto W = tensor_modules(T, X, simples[j]);
        for (int f : composition_factors(W, simples, rad.basis)) N[f][j] += 1;
    }
    return N;
}

double fp_dim(const FusionMatrix& N) {
    const int n = static_cast<int>(N.size());
    if (n == 0) return 0.0;
    bool all_zero = true;
    for (const auto& row : N)
        for (long long x : row) {
            if (x < 0) throw Error("fp_dim: negative entry");
            if (x != 0) all_zero = false;
        }
    if (all_zero) return 0.0;

    constexpr double kTol = 1e-9;
    constexpr int kMaxIter = 100000;
    std::vector<double> v(n, 1.0);
    double lam = 0.0;
    for (int it = 0; it < kMaxIter; ++it) {
        std::vector<double> w(n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) w[i] += static_cast<double>(N[i][j]) * v[j];
        double norm = 0.0;
        for (double x : w) norm = std::max(norm, std::abs(x));
        if (norm == 0.0) return 0.0;  // started in the kernel; spectral radius on nilpotent part
        for (double& x : w) x /= norm;
        if (std::abs(norm - lam) < kTol && it > 0) return norm;
        lam = norm;
        v = std::move(w);
    }
    throw Error("fp_dim: power iteration did not converge within " + std::to_string(kMaxIter) +
                " iterations");
}

DualIndexResult dual_index_D(const TaftAlgebra& T, int k) {
    const int p = T.p;
    auto sigma = make_anti_automorphism(T.B, T.antipode_inv);
    auto Pk_dual = dual_module(projective_cover(T, k), sigma);
    DualIndexResult res;
    bool found = false;
    for (int j = 0; j < p; ++j) {
        if (is_isomorphic(Pk_dual, projective_cover(T, j)).isomorphic) {
            res.D = j;
            found = true;
            break;
        }
    }
    if (!found) throw Error("dual_index_D: dual of a cover is not a cover");
    auto Vk_ldual = dual_module(simple_module(T, k), sigma);
    bool rho_found = false;
    for (int r = 0; r < p; ++r) {
        auto W = tensor_modules(T, Vk_ldual, simple_module(T, r));
        if (is_isomorphic(W, simple_module(T, res.D)).isomorphic) {
            res.rho_index = r;
            rho_found = true;
            break;
        }
    }
    if (!rho_found) throw Error("dual_index_D: no twisting index matches");
    return res;
}

}  // namespace froblab
