#include "froblab/reconstruct.hpp"

#include "froblab/cyclotomic.hpp"

#include <string>
#include <utility>
#include <vector>

namespace froblab {

namespace {

// Scalar c with C = c * U for U spanning a one-dimensional space;
// throws if C is not proportional to U.
CycScalar proportionality_scalar(const Matrix& C, const Matrix& U) {
    int r = U.rows(), c = U.cols();
    CycScalar scalar = CycScalar::zero(C.prime());
    bool found = false;
    for (int i = 0; i < r && !found; ++i)
        for (int j = 0; j < c && !found; ++j)
            if (!U.at(i, j).is_zero()) {
                scalar = C.at(i, j) * U.at(i, j).inverse();
                found = true;
            }
    if (!found) throw Error("proportionality_scalar: spanning matrix is zero");
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            if (!(C.at(i, j) == scalar * U.at(i, j)))
                throw Error("proportionality_scalar: matrices are not proportional");
    return scalar;
}

}  // namespace

ReconstructionPlan plan(int p, const BaseDims& d) {
    if (!is_prime(p)) throw Error("plan: p must be prime");
    if (static_cast<int>(d.size()) != p) throw Error("plan: dimension vector must have length p");
    for (long long di : d)
        if (di < 1) throw Error("plan: dimensions must be positive");

    ReconstructionPlan pl;
    pl.p = p;
    pl.d = d;
    pl.m = convolution(d);
    pl.T = build_taft(p);
    for (int k = 0; k < p; ++k) pl.covers.push_back(projective_cover(pl.T, k));
    for (int k = 0; k < p; ++k)
        for (int c = 0; c < pl.m[static_cast<size_t>(k)]; ++c)
            pl.summands.push_back(SummandRef{k, c});
    pl.Q = pl.covers[0];
    bool first = true;
    for (const SummandRef& s : pl.summands) {
        if (first && s.k == 0 && s.copy == 0) {
            first = false;
            continue;
        }
        pl.Q = direct_sum(pl.Q, pl.covers[static_cast<size_t>(s.k)]);
    }
    return pl;
}

ReconstructedAlgebra build(const ReconstructionPlan& pl) {
    const int p = pl.p;
    const int S = static_cast<int>(pl.summands.size());
    const int n = S * S;
    if (static_cast<long long>(n) != predicted_total_dim(pl.d))
        throw Error("build: dimension " + std::to_string(n) + " does not match the prediction " +
                    std::to_string(predicted_total_dim(pl.d)));

    // u[k][l] spans the one-dimensional Hom(P_k, P_l); u[k][k] = id.
    std::vector<std::vector<Matrix>> u(static_cast<size_t>(p));
    for (int k = 0; k < p; ++k)
        for (int l = 0; l < p; ++l) {
            auto basis = hom_space(pl.covers[static_cast<size_t>(k)], pl.covers[static_cast<size_t>(l)]);
            if (basis.size() != 1)
                throw Error("build: Hom(P_" + std::to_string(k) + ", P_" + std::to_string(l) +
                            ") has dimension " + std::to_string(basis.size()) + ", expected 1");
            u[static_cast<size_t>(k)].push_back(k == l ? Matrix::identity(basis[0].prime(), p)
                                                       : basis[0]);
        }

    ReconstructedAlgebra R;
    R.plan = pl;
    R.gamma.assign(static_cast<size_t>(p) * p * p, CycScalar::zero(pl.T.B->p));
    auto gamma_at = [&](int k, int l, int t) -> CycScalar& {
        return R.gamma[(static_cast<size_t>(k) * p + l) * p + t];
    };
    for (int k = 0; k < p; ++k)
        for (int l = 0; l < p; ++l)
            for (int t = 0; t < p; ++t) {
                Matrix C = matmul(u[static_cast<size_t>(l)][static_cast<size_t>(t)],
                                  u[static_cast<size_t>(k)][static_cast<size_t>(l)]);
                bool zero = true;
                for (int i = 0; i < p && zero; ++i)
                    for (int j = 0; j < p && zero; ++j)
                        if (!C.at(i, j).is_zero()) zero = false;
                gamma_at(k, l, t) = zero ? CycScalar::zero(C.prime())
                                         : proportionality_scalar(C, u[static_cast<size_t>(k)][static_cast<size_t>(t)]);
            }

    std::vector<std::string> labels(static_cast<size_t>(n));
    auto block_name = [&](int s) {
        const SummandRef& r = pl.summands[static_cast<size_t>(s)];
        return std::to_string(r.k) + "." + std::to_string(r.copy);
    };
    for (int s = 0; s < S; ++s)
        for (int t = 0; t < S; ++t)
            labels[static_cast<size_t>(s) * S + t] = "q" + block_name(s) + ">" + block_name(t);

    Algebra H = make_algebra(pl.T.B->p, n, labels);
    auto kof = [&](int s) { return pl.summands[static_cast<size_t>(s)].k; };
    // Product phi_{(s,t)} * phi_{(t,t2)} = (second composed after first)
    // = gamma(k(s), k(t), k(t2)) phi_{(s,t2)}; disjoint pairs multiply to 0.
    for (int s = 0; s < S; ++s)
        for (int t = 0; t < S; ++t)
            for (int t2 = 0; t2 < S; ++t2) {
                const CycScalar& g = gamma_at(kof(s), kof(t), kof(t2));
                if (!g.is_zero())
                    set_structure_constant(H, s * S + t, t * S + t2, s * S + t2, g);
            }
    H.unit.assign(static_cast<size_t>(n), CycScalar::zero(H.p));
    for (int s = 0; s < S; ++s) H.unit[static_cast<size_t>(s) * S + s] = CycScalar::one(H.p);

    auto report = check_algebra(H);
    if (!report.ok)
        throw Error("build: endomorphism algebra failed validation: " + report.violations.front());
    R.H = std::make_shared<Algebra>(std::move(H));

    for (int s = 0; s < S; ++s) R.idempotent_index.push_back(s * S + s);
    // Orthogonal idempotents summing to 1.
    for (int s = 0; s < S; ++s)
        for (int t = 0; t < S; ++t) {
            auto prod = R.H->mult(R.H->basis_vector(s * S + s), R.H->basis_vector(t * S + t));
            auto expect = s == t ? R.H->basis_vector(s * S + s)
                                 : std::vector<CycScalar>(static_cast<size_t>(n), CycScalar::zero(R.H->p));
            if (prod != expect) throw Error("build: block idempotents are not orthogonal");
        }

    const int dq = pl.Q.dim;
    for (int s = 0; s < S; ++s)
        for (int t = 0; t < S; ++t) {
            Matrix M(R.H->p, dq, dq);
            const Matrix& map = u[static_cast<size_t>(kof(s))][static_cast<size_t>(kof(t))];
            for (int i = 0; i < p; ++i)
                for (int j = 0; j < p; ++j)
                    M.at(t * p + i, s * p + j) = map.at(i, j);
            R.hom_basis.push_back(std::move(M));
        }
    return R;
}

namespace {

// Left module H e_c with basis {phi_{(s, c)}}: basis element j = (s', t')
// of H sends phi_{(t', c)} to gamma(k(s'), k(t'), k(c)) phi_{(s', c)}.
Module left_ideal_module(const ReconstructedAlgebra& R, int c) {
    const int p = R.plan.p;
    const int S = static_cast<int>(R.plan.summands.size());
    auto kof = [&](int s) { return R.plan.summands[static_cast<size_t>(s)].k; };
    auto gamma_at = [&](int k, int l, int t) {
        return R.gamma[(static_cast<size_t>(k) * p + l) * p + t];
    };
    Module M;
    M.A = R.H;
    M.dim = S;
    M.rho.reserve(static_cast<size_t>(R.H->n));
    for (int s2 = 0; s2 < S; ++s2)
        for (int t2 = 0; t2 < S; ++t2) {
            Matrix m(R.H->p, S, S);
            m.at(s2, t2) = gamma_at(kof(s2), kof(t2), kof(c));
            M.rho.push_back(std::move(m));
        }
    return M;
}

// Linear dual of the right ideal e_c H as a left module, basis dual to
// {phi_{(c, t)}}: the action of j = (s', t') has matrix entry [s'][t']
// equal to gamma(k(c), k(s'), k(t')).
Module right_ideal_dual_module(const ReconstructedAlgebra& R, int c) {
    const int p = R.plan.p;
    const int S = static_cast<int>(R.plan.summands.size());
    auto kof = [&](int s) { return R.plan.summands[static_cast<size_t>(s)].k; };
    auto gamma_at = [&](int k, int l, int t) {
        return R.gamma[(static_cast<size_t>(k) * p + l) * p + t];
    };
    Module M;
    M.A = R.H;
    M.dim = S;
    M.rho.reserve(static_cast<size_t>(R.H->n));
    for (int s2 = 0; s2 < S; ++s2)
        for (int t2 = 0; t2 < S; ++t2) {
            Matrix m(R.H->p, S, S);
            m.at(s2, t2) = gamma_at(kof(c), kof(s2), kof(t2));
            M.rho.push_back(std::move(m));
        }
    return M;
}

// Smallest t with J^t M = 0, by iterating V -> column space of J V.
int module_radical_series_length(const Module& M, const std::vector<Matrix>& rad_action) {
    Matrix V = Matrix::identity(M.A->p, M.dim);
    int t = 0;
    while (V.cols() > 0) {
        std::vector<Matrix> pieces;
        for (const Matrix& J : rad_action)
            if (V.cols() > 0) pieces.push_back(matmul(J, V));
        Matrix stacked = pieces.empty() ? Matrix(M.A->p, M.dim, 0) : pieces[0];
        for (size_t i = 1; i < pieces.size(); ++i) stacked = hstack(stacked, pieces[i]);
        V = column_space(stacked);
        ++t;
        if (t > M.dim + 1) throw Error("module_radical_series_length: series does not terminate");
    }
    return t;
}

// Multiplicity of each simple S_l in a semisimple module W, read off as
// rank(rho_W(sigma_l)) / dim S_l where sigma_l sums the block idempotents
// of colour l.
std::vector<long long> semisimple_multiplicities(const ReconstructedAlgebra& R, const Module& W) {
    const int p = R.plan.p;
    const int S = static_cast<int>(R.plan.summands.size());
    std::vector<long long> mult;
    for (int l = 0; l < p; ++l) {
        std::vector<CycScalar> sigma(static_cast<size_t>(R.H->n), CycScalar::zero(R.H->p));
        for (int s = 0; s < S; ++s)
            if (R.plan.summands[static_cast<size_t>(s)].k == l)
                sigma[static_cast<size_t>(s) * S + s] = CycScalar::one(R.H->p);
        int r = rank(W.rho_of(sigma));
        long long ml = R.plan.m[static_cast<size_t>(l)];
        if (r % ml != 0)
            throw Error("semisimple_multiplicities: rank " + std::to_string(r) +
                        " is not a multiple of the simple dimension " + std::to_string(ml));
        mult.push_back(r / ml);
    }
    return mult;
}

}  // namespace

ReconstructionReport analyze(const ReconstructedAlgebra& R, std::uint64_t seed) {
    const int p = R.plan.p;
    const int S = static_cast<int>(R.plan.summands.size());
    const Algebra& H = *R.H;
    ReconstructionReport rep;
    rep.dim = H.n;
    if (rep.dim != predicted_total_dim(R.plan.d))
        throw Error("analyze: dimension does not match the prediction");

    RadicalResult rad = radical(H);
    rep.radical_dim = rad.basis.cols();

    // Radical action matrices on an S-dimensional block module are shared
    // by shape: cache per module below (cheap enough to recompute).
    auto rad_action_on = [&](const Module& M) {
        std::vector<Matrix> act;
        for (int j = 0; j < rad.basis.cols(); ++j) act.push_back(M.rho_of(rad.basis.col(j)));
        return act;
    };

    // First summand index of each colour k (copy 0).
    std::vector<int> first(static_cast<size_t>(p), -1);
    for (int s = 0; s < S; ++s) {
        int k = R.plan.summands[static_cast<size_t>(s)].k;
        if (first[static_cast<size_t>(k)] < 0) first[static_cast<size_t>(k)] = s;
    }

    rep.predictions_match = true;
    bool qf = true;
    int nilpotency = rad.nilpotency_checked ? rad.nilpotency_index : 0;
    for (int k = 0; k < p; ++k) {
        int c = first[static_cast<size_t>(k)];
        Module He = left_ideal_module(R, c);
        std::string why;
        // Full pairwise action validation is quadratic in dim H; the
        // construction is cross-checked against the generic endomorphism
        // algebra at small sizes instead.
        if (H.n <= 100 && !He.is_valid(&why))
            throw Error("analyze: left ideal module invalid: " + why);
        if (He.dim != S) throw Error("analyze: projective indecomposable has unexpected dimension");

        ProjectiveRow row;
        row.k = k;
        row.c_k = R.plan.m[static_cast<size_t>(k)];
        row.dim = He.dim;
        row.soc = socle_basis(He, rad.basis).cols();
        row.cosoc = cosocle_dim(He, rad.basis);
        auto pred = soc_cosoc_dims_predicted(R.plan.d, k);
        row.soc_pred = pred.first;
        row.cosoc_pred = pred.second;
        if (row.soc != row.soc_pred || row.cosoc != row.cosoc_pred) rep.predictions_match = false;

        // The simple top has dimension m_k and trivial endomorphisms.
        Module top = cosocle_module(He, rad.basis);
        if (top.dim != R.plan.m[static_cast<size_t>(k)])
            throw Error("analyze: simple top has unexpected dimension");
        if (hom_space(top, top).size() != 1)
            throw Error("analyze: simple top has non-scalar endomorphisms");

        if (!rad.nilpotency_checked) {
            int t = module_radical_series_length(He, rad_action_on(He));
            if (t > nilpotency) nilpotency = t;
        }

        // Quasi-Frobenius summand test: (e_{k,0} H)^vee is projective iff
        // its dimension equals that of its projective cover, which is
        // determined by the multiplicities of the simples in its top.
        Module dual = right_ideal_dual_module(R, c);
        if (H.n <= 100 && !dual.is_valid(&why))
            throw Error("analyze: dual ideal module invalid: " + why);
        Module dual_top = cosocle_module(dual, rad.basis);
        std::vector<long long> mult = semisimple_multiplicities(R, dual_top);
        long long cover_dim = 0;
        for (int l = 0; l < p; ++l) cover_dim += mult[static_cast<size_t>(l)] * S;
        row.dual_projective = (cover_dim == dual.dim);
        if (!row.dual_projective) qf = false;

        rep.table.push_back(row);
    }
    rep.nilpotency_index = nilpotency;
    rep.quasi_frobenius = qf;
    rep.criterion = frobenius_criterion(R.plan.d);

    FrobeniusOptions opts;
    opts.seed = seed;
    opts.qf_known = qf;
    for (const ProjectiveRow& row : rep.table)
        opts.soc_cosoc_dims.push_back({static_cast<int>(row.soc), static_cast<int>(row.cosoc)});
    if (H.n > 100) {
        opts.iso_basis_tries = 4;
        opts.iso_random_tries = 8;
    }
    rep.frobenius_detail = is_frobenius(H, opts);
    rep.frobenius = rep.frobenius_detail.frobenius;
    rep.frobenius_matches_criterion = (rep.frobenius == rep.criterion);
    return rep;
}

}  // namespace froblab
