#pragma once

#include "froblab/algebra.hpp"

#include <cstdint>
#include <memory>
#include <optional>

namespace froblab {

enum class Side { Left, Right };

/// Left module over an Algebra: one action matrix per basis element.
struct Module {
    std::shared_ptr<const Algebra> A;
    int dim = 0;
    std::vector<Matrix> rho;  // size A->n, each dim x dim
    bool regular_left = false;

    Matrix rho_of(const std::vector<CycScalar>& a) const;
    /// Checks rho(b_i)rho(b_j) = sum_k c[i][j][k] rho(b_k) and rho(1) = I.
    bool is_valid(std::string* why = nullptr) const;
};

struct ModHom {
    const Module* source = nullptr;
    const Module* target = nullptr;
    Matrix matrix;
};

struct AntiAutomorphism {
    std::shared_ptr<const Algebra> A;
    Matrix matrix;  // n x n, column i = coordinates of sigma(b_i)
};

/// Validates linearity is implicit; checks sigma(ab)=sigma(b)sigma(a),
/// sigma(1)=1 and bijectivity.
AntiAutomorphism make_anti_automorphism(std::shared_ptr<const Algebra> A, Matrix m);

Module regular_module(std::shared_ptr<const Algebra> A, Side side);
Module zero_module(std::shared_ptr<const Algebra> A);
Module direct_sum(const Module& M, const Module& N);

/// Basis matrices of Hom_A(M, N): solutions X of rho_N(b) X = X rho_M(b)
/// for b over the algebra's constraint indices.
std::vector<Matrix> hom_space(const Module& M, const Module& N);

Module submodule(const Module& M, const std::vector<std::vector<CycScalar>>& gens,
                 Matrix* basis_out = nullptr);
Module quotient(const Module& M, const Matrix& sub_basis,
                Matrix* lift_out = nullptr);

/// Basis (columns) of soc(M) = { m : J * m = 0 }.
Matrix socle_basis(const Module& M, const Matrix& radical_basis);
Module socle_module(const Module& M, const Matrix& radical_basis);
int cosocle_dim(const Module& M, const Matrix& radical_basis);
/// J*M as a column basis.
Matrix radical_submodule_basis(const Module& M, const Matrix& radical_basis);
Module cosocle_module(const Module& M, const Matrix& radical_basis);

struct IsoResult {
    bool isomorphic = false;
    Matrix witness;
    int hom_dim = 0;
    bool randomized_used = false;
    bool deterministic_fallback_used = false;
    std::string method;
};

/// Isomorphism test: dim check, Hom-space search over the basis, then
/// seeded random combinations, then a deterministic grid fallback for
/// hom dimension <= 3.  Seed is recorded by callers for reproducibility.
IsoResult is_isomorphic(const Module& M, const Module& N, std::uint64_t seed = 0x66726F62ULL);

/// Multiset of simple indices (with multiplicity) by socle peeling.
std::vector<int> composition_factors(const Module& M, const std::vector<Module>& simples,
                                     const Matrix& radical_basis);

/// Dual space with action rho(b) = transpose(rho(sigma(b))).
Module dual_module(const Module& M, const AntiAutomorphism& sigma);
/// Plain linear dual of the RIGHT regular module of A, as a left module.
Module dual_of_right_regular(std::shared_ptr<const Algebra> A);

/// Module action on M (x) N through the comultiplication delta
/// (an n^2 x n matrix of coordinates).
Module tensor_modules(const Module& M, const Module& N, const Matrix& delta);

}  // namespace froblab
