#pragma once

#include "froblab/module.hpp"

#include <cstdint>

namespace froblab {

inline constexpr std::uint64_t kDefaultSeed = 0x66726F62ULL;

struct ProjectivityResult {
    bool projective = false;
    int hom_to_regular_dim = 0;
};

/// Free-cover section test: phi: A^{dim M} -> M by evaluation at the
/// basis; M is projective iff a module section psi with phi psi = id
/// exists.  Feasible for dim(M)*dim(A) up to a few thousand unknowns.
ProjectivityResult is_projective(const Module& M);

struct QfResult {
    bool quasi_frobenius = false;
    ProjectivityResult dual_projectivity;
};

/// A is quasi-Frobenius iff the dual of the right regular module is
/// projective as a left module.
QfResult is_quasi_frobenius(std::shared_ptr<const Algebra> A);

struct FrobeniusOptions {
    std::uint64_t seed = kDefaultSeed;
    int oracle_tries = 16;
    int iso_basis_tries = -1;   // -1: all basis functionals
    int iso_random_tries = -1;  // -1: 2 * dim
    /// Known quasi-Frobenius verdict (skips the generic QF computation);
    /// used when the caller has already decided QF by other exact means.
    std::optional<bool> qf_known;
    /// Distinct projective indecomposables with their soc/cosoc dims,
    /// enabling the exact socle criterion for QF split algebras.
    std::vector<std::pair<int, int>> soc_cosoc_dims;
};

struct FrobeniusResult {
    bool frobenius = false;
    bool quasi_frobenius = false;
    bool iso_certificate = false;        // module-iso method found a witness
    bool oracle_certificate = false;     // random functional with nondegenerate Gram
    bool iso_randomized_used = false;
    bool decided_by_socle_criterion = false;
    std::uint64_t seed = kDefaultSeed;
    std::string method;
    std::vector<CycScalar> witness_functional;  // when a certificate exists
};

/// Frobenius decision.  A functional lambda certifies A Frobenius when
/// the Gram matrix G_ij = lambda(b_i b_j) is nondegenerate; a ->
/// a.lambda is then the module isomorphism A -> A^vee.  The
/// module-isomorphism method searches basis-dual functionals (Hom(A, M)
/// = M for the regular source), the oracle searches seeded random
/// functionals.  When neither certifies, the verdict falls back to "not
/// QF => not Frobenius" or, when soc/cosoc data for the projective
/// indecomposables is supplied, the exact socle-cosocle criterion.
FrobeniusResult is_frobenius(const Algebra& A, const FrobeniusOptions& opts = {});

/// Gram matrix G_ij = lambda(b_i b_j) of a linear functional.
Matrix gram_matrix(const Algebra& A, const std::vector<CycScalar>& lambda);

struct EndAlgebraResult {
    std::shared_ptr<Algebra> algebra;
    std::vector<Matrix> hom_basis;  // embedding of each basis element
    bool opposite_orientation = false;
};

/// End(M) in a Hom-space basis, multiplication = composition; with
/// opposite_orientation the product is reversed composition (a*b = b o a).
EndAlgebraResult end_algebra(const Module& M, bool opposite_orientation = false);

}  // namespace froblab
