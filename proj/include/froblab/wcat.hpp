#pragma once

#include "froblab/taft.hpp"

namespace froblab {

/// Dimensions d_0..d_{p-1} of the simple modules of the base algebra
/// A = (+)_i M_{d_i}(K); all entries >= 1.
using BaseDims = std::vector<long long>;
/// n_k = multiplicity of the character lambda^k under the restriction
/// to the grouplike part; sums to the module dimension.
using WeightVector = std::vector<long long>;
/// Entry (i,j) = multiplicity of the simple bimodule S_i^v (x) S_j.
using MultMatrix = std::vector<std::vector<long long>>;
using FusionMatrix = std::vector<std::vector<long long>>;

/// g-eigenspace dimensions of a module; throws if rho(g) is not
/// diagonalizable with eigenvalues among the lambda^k.
WeightVector f1(const TaftAlgebra& T, const Module& M);

/// M[i][j] = w[(i+j) mod p].  All indices mod p.
MultMatrix f2(const WeightVector& w);

/// Sum of M[i][j] * d_i * d_j.
long long f_dim(const MultMatrix& M, const BaseDims& d);

/// Product of multiplicity matrices under the tensor product:
/// entry (i,l) = sum_j MX[i][j] * MY[(-j) mod p][l].  The contraction
/// pairs the right tensor factor of one bimodule against the dual left
/// factor of the next, which in character labels carries a sign;
/// relabelling the first index by negation turns this into the
/// ordinary matrix product.
MultMatrix mult_tensor(const MultMatrix& MX, const MultMatrix& MY);

/// Convolution c_k = sum over i+j = k (mod p) of d_i d_j.
std::vector<long long> convolution(const BaseDims& d);

/// (soc dim, cosoc dim) of P_k after the fiber functor:
/// (c_{k+1}, c_k), indices mod p.
std::pair<long long, long long> soc_cosoc_dims_predicted(const BaseDims& d, int k);

/// True iff d supports a Frobenius reconstruction.  Decided by three
/// independent methods which must agree (a disagreement throws):
/// (a) all convolutions c_k equal, (b) all d_i equal,
/// (c) (sum d_i zeta^i)^2 = 0 in Q(zeta_p).
bool frobenius_criterion(const BaseDims& d);

/// (sum d_i)^4, cross-checked against (sum_k c_k)^2.
long long predicted_total_dim(const BaseDims& d);

/// Entry (k,j) = multiplicity of V_k in the composition series of
/// X (x) V_j.
FusionMatrix fusion_matrix(const TaftAlgebra& T, const Module& X);

/// Largest nonnegative eigenvalue by floating-point power iteration;
/// tolerance 1e-9, at most 1e5 iterations (non-convergence throws with
/// the iteration count).  The only approximate computation here.
double fp_dim(const FusionMatrix& N);

struct DualIndexResult {
    int D = 0;          // P_k^* is isomorphic to P_{D(k)}
    int rho_index = 0;  // V_{D(k)} is isomorphic to *V_k (x) V_rho
};

/// Locates D(k) by isomorphism search of the right dual of P_k against
/// all covers, then solves for the twisting index rho.
DualIndexResult dual_index_D(const TaftAlgebra& T, int k);

}  // namespace froblab
