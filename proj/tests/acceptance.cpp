// Acceptance gate: one pass/fail line per criterion.  Exit 0 iff every
// executed criterion passes.  "--slow" additionally runs the 256-dim
// reconstruction (criterion 10).
#include "froblab/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace froblab;

namespace {

struct Criterion {
    int number;
    std::string summary;
    std::function<void()> run;  // throws Error on failure
    bool slow = false;
};

void require(bool cond, const std::string& what) {
    if (!cond) throw Error(what);
}

// --- criterion bodies -------------------------------------------------

void taft_suite() {
    for (int p : {2, 3, 5}) {
        TaftAlgebra T = build_taft(p);
        require(T.B->n == p * p, "dim is not p^2 at p=" + std::to_string(p));
        TaftRadicalReport rad = radical_check(T);
        require(rad.ok && rad.radical_dim == p * p - p, "radical dim mismatch");
        std::vector<Module> simples;
        for (int k = 0; k < p; ++k) simples.push_back(simple_module(T, k));
        for (int k = 0; k < p; ++k) {
            Module P = projective_cover(T, k);
            require(P.dim == p, "cover dim mismatch");
            Module soc = socle_module(P, rad.radical_basis);
            Module top = cosocle_module(P, rad.radical_basis);
            require(is_isomorphic(soc, simples[(k + 1) % p]).isomorphic, "socle type mismatch");
            require(is_isomorphic(top, simples[k]).isomorphic, "cosocle type mismatch");
            std::vector<int> cf = composition_factors(P, simples, rad.radical_basis);
            std::sort(cf.begin(), cf.end());
            std::vector<int> expect;
            for (int i = 0; i < p; ++i) expect.push_back(i);
            require(cf == expect, "composition factors are not each simple exactly once");
        }
        AxiomReport ax = check_hopf(to_hopf_data(T), axiom_triple_cap());
        require(ax.pass, "Hopf axioms fail at p=" + std::to_string(p));
        FrobeniusOptions opts;
        FrobeniusResult fr = is_frobenius(*T.B, opts);
        require(fr.frobenius && fr.iso_certificate && fr.oracle_certificate,
                "Frobenius certificates missing at p=" + std::to_string(p));
    }
}

void reconstruction_counterexample() {
    CommandResult res = cmd_taftd(2, {1, 2}, true, kDefaultSeed);
    require(res.status == 0, "taftd --p 2 --d 1,2 --reconstruct exited " + std::to_string(res.status));
    const Json& r = res.report["reconstruction"];
    require(r["dim"] == 81, "dim != 81");
    require(r["quasi_frobenius"] == true, "quasi-Frobenius != true");
    require(r["frobenius"] == false, "Frobenius != false");
    const Json& t = r["projectives"];
    require(t[0]["soc"] == 4 && t[0]["cosoc"] == 5, "row 0 soc/cosoc != (4,5)");
    require(t[1]["soc"] == 5 && t[1]["cosoc"] == 4, "row 1 soc/cosoc != (5,4)");
    for (int k = 0; k < 2; ++k) {
        auto pred = soc_cosoc_dims_predicted({1, 2}, k);
        require(t[k]["soc"] == pred.first && t[k]["cosoc"] == pred.second,
                "table does not match the convolution sums");
    }
}

void positive_controls() {
    CommandResult a = cmd_taftd(2, {1, 1}, true, kDefaultSeed);
    require(a.status == 0 && a.report["reconstruction"]["dim"] == 16 &&
                a.report["reconstruction"]["frobenius"] == true,
            "(p=2, d=1,1) control failed");
    CommandResult b = cmd_taftd(3, {1, 1, 1}, true, kDefaultSeed);
    require(b.status == 0 && b.report["reconstruction"]["dim"] == 81 &&
                b.report["reconstruction"]["frobenius"] == true,
            "(p=3, d=1,1,1) control failed");
}

void criterion_equivalence() {
    std::mt19937_64 rng(kDefaultSeed);
    std::uniform_int_distribution<int> entry(1, 5);
    const int primes[4] = {2, 3, 5, 7};
    for (int t = 0; t < 200; ++t) {
        int p = primes[t % 4];
        BaseDims d(static_cast<size_t>(p));
        for (auto& x : d) x = entry(rng);
        bool all_equal = true;
        for (auto x : d) all_equal = all_equal && (x == d[0]);
        // frobenius_criterion itself throws if its three methods disagree.
        require(frobenius_criterion(d) == all_equal,
                "criterion disagrees with all-equal at trial " + std::to_string(t));
    }
}

std::vector<Module> module_pool(const TaftAlgebra& T) {
    std::vector<Module> pool;
    const int p = T.B->p;
    for (int k = 0; k < p; ++k) {
        pool.push_back(simple_module(T, k));
        pool.push_back(projective_cover(T, k));
        for (int i = 1; i < p; ++i) pool.push_back(chain_submodule(T, k, i));
    }
    return pool;
}

void multiplicativity_property() {
    std::mt19937_64 rng(kDefaultSeed);
    for (int p : {2, 3}) {
        TaftAlgebra T = build_taft(p);
        std::vector<Module> pool = module_pool(T);
        std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
        for (int t = 0; t < 25; ++t) {
            const Module& X = pool[pick(rng)];
            const Module& Y = pool[pick(rng)];
            MultMatrix lhs = f2(f1(T, tensor_modules(T, X, Y)));
            MultMatrix rhs = mult_tensor(f2(f1(T, X)), f2(f1(T, Y)));
            require(lhs == rhs, "multiplicativity fails at p=" + std::to_string(p) +
                                    " trial " + std::to_string(t));
        }
    }
}

void soc_cosoc_instantiation() {
    for (int p : {2, 3}) {
        BaseDims d = p == 2 ? BaseDims{1, 2} : BaseDims{1, 1, 2};
        TaftAlgebra T = build_taft(p);
        TaftRadicalReport rad = radical_check(T);
        for (int k = 0; k < p; ++k) {
            Module P = projective_cover(T, k);
            Module soc = socle_module(P, rad.radical_basis);
            Module top = cosocle_module(P, rad.radical_basis);
            auto pred = soc_cosoc_dims_predicted(d, k);
            require(f_dim(f2(f1(T, soc)), d) == pred.first, "socle image-dimension mismatch");
            require(f_dim(f2(f1(T, top)), d) == pred.second, "cosocle image-dimension mismatch");
        }
    }
}

void axiom_fleet() {
    for (int p : {2, 3, 5})
        require(check_hopf(group_algebra(p), axiom_triple_cap()).pass,
                "group algebra fails at p=" + std::to_string(p));
    HopfData pg = pair_groupoid_algebra(2);
    require(check_weak_hopf(pg, axiom_triple_cap()).pass, "pair groupoid fails weak axioms");
    CounitalSubalgebras base = counital_subalgebras(pg);
    require(base.ok && base.left_basis.cols() == 2 && base.right_basis.cols() == 2,
            "base subalgebras wrong");
    require(rank(base.antipode_witness) == 2, "antipode witness not invertible");

    // Five single-datum perturbations of K[Z/3], one per axiom family;
    // each must fail its targeted axiom with a witness.
    HopfData G = group_algebra(3);
    const int n = G.A->n;
    auto one = CycScalar::one(G.A->p);
    auto expects_failure = [&](const HopfData& Hd, const std::string& target) {
        AxiomReport rep = check_weak_hopf(Hd, axiom_triple_cap());
        require(!rep.pass, "perturbed data still passes (" + target + ")");
        for (const AxiomVerdict& v : rep.verdicts)
            if (v.axiom == target) {
                require(!v.pass, "targeted axiom \"" + target + "\" did not fail");
                require(!v.witness.empty(), "no witness for \"" + target + "\"");
                return;
            }
        throw Error("axiom \"" + target + "\" not reported");
    };

    {  // multiplicativity: Delta(g^2) := g^2 (x) g^1
        HopfData Hd = G;
        std::vector<CycScalar> col(static_cast<size_t>(n) * n, CycScalar::zero(G.A->p));
        col[static_cast<size_t>(2) * n + 1] = one;
        Hd.delta.set_col(2, col);
        expects_failure(Hd, "comultiplication multiplicative");
    }
    {  // coassociativity: Delta(g) := g (x) g + 1 (x) 1
        HopfData Hd = G;
        std::vector<CycScalar> col = Hd.delta.col(1);
        col[0] += one;
        Hd.delta.set_col(1, col);
        expects_failure(Hd, "coassociativity");
    }
    {  // triple counit factorization: eps(g) := 2
        HopfData Hd = G;
        Hd.counit = G.counit;
        Hd.counit.at(0, 1) = one + one;
        expects_failure(Hd, "counit factorization on triples");
    }
    {  // unit coproduct compatibility: Delta(1) := g (x) g^2
        HopfData Hd = G;
        std::vector<CycScalar> col(static_cast<size_t>(n) * n, CycScalar::zero(G.A->p));
        col[static_cast<size_t>(1) * n + 2] = one;
        Hd.delta.set_col(0, col);
        expects_failure(Hd, "coproduct of unit compatibility");
    }
    {  // antipode: S(g) := g
        HopfData Hd = G;
        Hd.antipode = G.antipode;
        std::vector<CycScalar> col(static_cast<size_t>(n), CycScalar::zero(G.A->p));
        col[1] = one;
        Hd.antipode.set_col(1, col);
        expects_failure(Hd, "antipode right counital law");
    }
}

void qf_invariant() {
    std::vector<HopfData> fleet;
    for (int p : {2, 3, 5}) fleet.push_back(group_algebra(p));
    fleet.push_back(pair_groupoid_algebra(2));
    fleet.push_back(pair_groupoid_algebra(3));
    for (int p : {2, 3}) fleet.push_back(to_hopf_data(build_taft(p)));
    for (const HopfData& Hd : fleet) {
        require(check_weak_hopf(Hd, axiom_triple_cap()).pass, "fleet member fails weak axioms");
        auto A = std::make_shared<Algebra>(*Hd.A);
        require(is_quasi_frobenius(A).quasi_frobenius, "fleet member is not quasi-Frobenius");
    }
}

void frobenius_perron() {
    for (int p : {2, 3}) {
        TaftAlgebra T = build_taft(p);
        TaftRadicalReport rad = radical_check(T);
        for (int k = 0; k < p; ++k) {
            FusionMatrix N = fusion_matrix(T, simple_module(T, k));
            for (const auto& row : N) {
                long long s = 0;
                for (long long e : row) {
                    require(e == 0 || e == 1, "fusion entry not 0/1");
                    s += e;
                }
                require(s == 1, "fusion row is not a permutation row");
            }
            require(std::fabs(fp_dim(N) - 1.0) <= 1e-9, "simple Perron dimension != 1");
            Module P = projective_cover(T, k);
            double ds = fp_dim(fusion_matrix(T, socle_module(P, rad.radical_basis)));
            double dc = fp_dim(fusion_matrix(T, cosocle_module(P, rad.radical_basis)));
            require(std::fabs(ds - dc) <= 1e-9, "Perron dims of soc/cosoc differ");
        }
    }
}

void slow_tier() {
    CommandResult res = cmd_taftd(3, {1, 1, 2}, true, kDefaultSeed);
    require(res.status == 0, "taftd --p 3 --d 1,1,2 --reconstruct exited " +
                                 std::to_string(res.status));
    const Json& r = res.report["reconstruction"];
    require(r["dim"] == 256, "dim != 256");
    require(r["quasi_frobenius"] == true, "quasi-Frobenius != true");
    require(r["frobenius"] == false, "Frobenius != false");
}

}  // namespace

int main(int argc, char** argv) {
    bool slow = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--slow") == 0) slow = true;

    std::vector<Criterion> criteria = {
        {1, "Taft suite: dims, radical, projectives, Hopf axioms, Frobenius certificates",
         taft_suite},
        {2, "counterexample: (p=2, d=1,2) gives dim 81, QF true, Frobenius false, table (4,5)/(5,4)",
         reconstruction_counterexample},
        {3, "positive controls: (2, 1,1) dim 16 and (3, 1,1,1) dim 81 both Frobenius",
         positive_controls},
        {4, "criterion equivalence on 200 random dimension vectors", criterion_equivalence},
        {5, "multiplicativity of the induced matrices under tensor product (50 random pairs)",
         multiplicativity_property},
        {6, "predicted soc/cosoc dims equal directly computed image dimensions",
         soc_cosoc_instantiation},
        {7, "axiom fleet: positives plus five targeted single-datum perturbations", axiom_fleet},
        {8, "every weak-axiom-passing fleet member is quasi-Frobenius", qf_invariant},
        {9, "Frobenius-Perron: permutation fusion matrices, unit Perron dims, soc/cosoc balance",
         frobenius_perron},
        {10, "slow tier: (p=3, d=1,1,2) gives dim 256, QF true, Frobenius false", slow_tier, true},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        if (c.slow && !slow) {
            std::printf("criterion %2d SKIP  (slow tier; rerun with --slow) %s\n", c.number,
                        c.summary.c_str());
            continue;
        }
        try {
            c.run();
            std::printf("criterion %2d PASS  %s\n", c.number, c.summary.c_str());
        } catch (const std::exception& e) {
            ++failures;
            std::printf("criterion %2d FAIL  %s: %s\n", c.number, c.summary.c_str(), e.what());
        }
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
