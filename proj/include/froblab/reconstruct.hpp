#pragma once

#include "froblab/frobenius.hpp"
#include "froblab/taft.hpp"
#include "froblab/wcat.hpp"

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

namespace froblab {

/// One copy of an indecomposable projective in the sum Q: the index k of
/// the cover P_k and which copy (0 .. m_k-1) this is.
struct SummandRef {
    int k = 0;
    int copy = 0;
};

/// Blueprint for a reconstructed endomorphism algebra: Q = sum over k of
/// P_k^{m_k} with multiplicities m_k produced by the dimension
/// convolution of the base dimension vector d.
struct ReconstructionPlan {
    int p = 2;
    BaseDims d;
    std::vector<long long> m;          // m[k] = convolution(d)[k]
    std::vector<SummandRef> summands;  // block order of Q
    TaftAlgebra T;
    std::vector<Module> covers;        // covers[k] = P_k
    Module Q;                          // direct sum in summand order
};

ReconstructionPlan plan(int p, const BaseDims& d);

/// H = End(Q) with the product a*b = b o a, so that left ideals H e
/// correspond to Hom(Q, image of e) and the left regular module
/// decomposes with the plan's multiplicities.  Basis elements are the
/// maps phi_{(s,t)} = (include block t) o u_{k(s),k(t)} o (project block
/// s), where u_{k,l} spans the one-dimensional Hom(P_k, P_l) and u_{k,k}
/// is the identity.
struct ReconstructedAlgebra {
    ReconstructionPlan plan;
    std::shared_ptr<Algebra> H;
    bool opposite_orientation = true;
    /// idempotent_index[s] = basis index of e_s = phi_{(s,s)}.
    std::vector<int> idempotent_index;
    /// gamma[(k*p + l)*p + t] = scalar with u_{l,t} o u_{k,l} = gamma * u_{k,t}.
    std::vector<CycScalar> gamma;
    /// hom_basis[b] = matrix of basis map b as an endomorphism of Q.
    std::vector<Matrix> hom_basis;
};

ReconstructedAlgebra build(const ReconstructionPlan& plan);

/// Per-block summary of the projective indecomposable H e_{k,0}.
struct ProjectiveRow {
    int k = 0;
    long long c_k = 0;        // multiplicity m_k = dim of the simple top
    long long dim = 0;        // dim H e_{k,0} (= sum of all m_l)
    long long soc = 0;        // socle dimension, computed
    long long cosoc = 0;      // cosocle dimension, computed
    long long soc_pred = 0;   // predicted socle dim c_{k+1}
    long long cosoc_pred = 0; // predicted cosocle dim c_k
    bool dual_projective = false;  // (e_{k,0} H)^vee projective?
};

struct ReconstructionReport {
    long long dim = 0;
    int radical_dim = 0;
    int nilpotency_index = 0;
    bool predictions_match = false;  // computed soc/cosoc == predicted
    bool quasi_frobenius = false;
    bool frobenius = false;
    bool criterion = false;          // combinatorial criterion on d
    bool frobenius_matches_criterion = false;
    std::vector<ProjectiveRow> table;
    FrobeniusResult frobenius_detail;
};

/// Full structural analysis of the reconstructed algebra: radical and
/// its nilpotency index, soc/cosoc of each projective indecomposable
/// H e_{k,0} against the predicted dimensions, quasi-Frobenius by
/// projectivity of the duals (e_{k,0} H)^vee, and the Frobenius verdict
/// compared with the combinatorial criterion on d.
ReconstructionReport analyze(const ReconstructedAlgebra& R, std::uint64_t seed = kDefaultSeed);

}  // namespace froblab
