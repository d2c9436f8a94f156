#pragma once

#include "froblab/frobenius.hpp"
#include "froblab/module.hpp"

namespace froblab {

/// Taft's Hopf algebra of dimension p^2: generators g, x with g^p = 1,
/// x^p = 0, xg = lambda g x for lambda a primitive p-th root of unity;
/// basis g^i x^s at index i*p + s.
struct TaftAlgebra {
    int p = 0;
    std::shared_ptr<Algebra> B;
    CycScalar lambda;
    Matrix delta;    // p^2 -> p^4 coordinates of the comultiplication
    Matrix counit;   // 1 x p^2
    AntiAutomorphism antipode;
    Matrix antipode_inv;

    int idx(int i, int s) const { return ((i % p + p) % p) * p + s; }
    int g_index() const { return idx(1, 0); }
    int x_index() const { return idx(0, 1); }
};

TaftAlgebra build_taft(int p);

/// 1-dimensional module V_k: x acts by 0, g by lambda^k.
Module simple_module(const TaftAlgebra& T, int k);

/// Coordinates of x_k^{(s)} = sum_i lambda^{-ik} g^i x^s; the defining
/// relations g.x_k^{(s)} = lambda^k x_k^{(s)} and x.x_k^{(s)} =
/// x_{k-1}^{(s+1)} are asserted on construction.
std::vector<CycScalar> x_element(const TaftAlgebra& T, int k, int s);

/// The chain ideal I_k^i spanned by x_{k+1}^{(p-1)}, ..., x_{k+i}^{(p-i)}.
Module chain_submodule(const TaftAlgebra& T, int k, int i, Matrix* basis_out = nullptr);

/// P_k = I_k^p, the p-dimensional projective cover of V_k.
Module projective_cover(const TaftAlgebra& T, int k, Matrix* basis_out = nullptr);

Module tensor_modules(const TaftAlgebra& T, const Module& M, const Module& N);

struct TaftRadicalReport {
    bool ok = false;
    int radical_dim = 0;
    int nilpotency_index = 0;
    Matrix radical_basis;
};

/// Asserts radical(B) = span{ g^i x^s : s >= 1 } of dimension p^2 - p.
TaftRadicalReport radical_check(const TaftAlgebra& T);

}  // namespace froblab
