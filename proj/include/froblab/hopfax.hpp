#pragma once

#include "froblab/taft.hpp"

#include <optional>

namespace froblab {

/// Coalgebra/antipode data on top of an Algebra, everything in basis
/// coordinates: delta is n^2 x n (column a = Delta(b_a)), counit is
/// 1 x n, antipode is n x n.  phi/phi_inv (length n^3) and alpha/beta
/// (length n) are only present for quasi-Hopf data.
struct HopfData {
    std::shared_ptr<const Algebra> A;
    Matrix delta;
    Matrix counit;
    Matrix antipode;
    std::optional<std::vector<CycScalar>> phi;
    std::optional<std::vector<CycScalar>> phi_inv;
    std::optional<std::vector<CycScalar>> alpha;
    std::optional<std::vector<CycScalar>> beta;
};

struct AxiomVerdict {
    std::string axiom;
    bool pass = true;
    /// For failures: the basis element/triple and both sides' coordinates.
    std::string witness;
};

struct AxiomReport {
    bool pass = true;
    std::vector<AxiomVerdict> verdicts;  // fixed, deterministic order
    /// Informational: the counit is multiplicative (data is plain Hopf).
    bool counit_multiplicative = false;
};

/// The five weak-Hopf axioms plus multiplicativity of delta,
/// coassociativity and the counit laws.  The triple-loop axiom is cubic
/// in dim, hence the cap (override deliberately explicit).
AxiomReport check_weak_hopf(const HopfData& Hd, int triple_axiom_dim_cap = 64);

/// Weak-Hopf checks plus: counit multiplicative, Delta(1) = 1 (x) 1,
/// and the collapsed antipode laws a_(1)S(a_(2)) = eps(a)1 = S(a_(1))a_(2).
AxiomReport check_hopf(const HopfData& Hd, int triple_axiom_dim_cap = 64);

/// Quasi-Hopf laws: counit laws, delta multiplicative, phi invertible,
/// quasi-coassociativity, the pentagon 3-cocycle, normalization,
/// S an anti-automorphism, and the four alpha/beta antipode identities.
/// Missing phi/phi_inv/alpha/beta is malformed input and throws.
AxiomReport check_quasi_hopf(const HopfData& Hd);

/// Copies Hd with phi = 1 (x) 1 (x) 1 and alpha = beta = 1.
HopfData promote_trivial_quasi(const HopfData& Hd);

struct CounitalSubalgebras {
    Matrix left_basis;   // image of a -> eps(1_(1) a) 1_(2), as columns
    Matrix right_basis;  // image of a -> 1_(1) eps(a 1_(2))
    /// Antipode restricted to the left base, in (left basis -> right
    /// basis) coordinates; the anti-isomorphism witness.
    Matrix antipode_witness;
    bool ok = true;
    std::vector<std::string> violations;
};

/// Computes the two base subalgebras and asserts: both are unital
/// subalgebras, they commute elementwise, S maps the left one
/// anti-isomorphically onto the right one, and the left one is
/// semisimple (zero radical).
CounitalSubalgebras counital_subalgebras(const HopfData& Hd);

/// K[Z/p] for prime p, with the grouplike coproduct.
HopfData group_algebra(int p);
/// M_n(K) with basis e_ij, Delta(e_ij) = e_ij (x) e_ij, eps(e_ij) = 1
/// (one of several possible normalizations; fixed here), S(e_ij) = e_ji.
HopfData pair_groupoid_algebra(int n);
HopfData to_hopf_data(const TaftAlgebra& T);

}  // namespace froblab
