#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "froblab/reconstruct.hpp"

#include <random>

using namespace froblab;

TEST_CASE("plan lays out one cover copy per convolution unit") {
    ReconstructionPlan pl = plan(2, {1, 1});
    CHECK(pl.m == std::vector<long long>{2, 2});
    CHECK(pl.summands.size() == 4);
    CHECK(pl.Q.dim == 8);
    CHECK(pl.covers.size() == 2);
    CHECK(pl.covers[0].dim == 2);

    ReconstructionPlan big = plan(3, {1, 1, 2});
    CHECK(big.m == std::vector<long long>{5, 6, 5});
    CHECK(big.summands.size() == 16);
    CHECK(big.Q.dim == 48);

    CHECK_THROWS_AS(plan(4, {1, 1, 1, 1}), Error);
    CHECK_THROWS_AS(plan(2, {1, 1, 1}), Error);
    CHECK_THROWS_AS(plan(2, {1, 0}), Error);
}

TEST_CASE("built product is reversed composition of the endomorphism matrices") {
    ReconstructedAlgebra R = build(plan(2, {1, 1}));
    const Algebra& H = *R.H;
    CHECK(H.n == 16);
    for (int i = 0; i < H.n; ++i)
        for (int j = 0; j < H.n; ++j) {
            Matrix expect = matmul(R.hom_basis[static_cast<size_t>(j)],
                                   R.hom_basis[static_cast<size_t>(i)]);
            Matrix got(H.p, R.plan.Q.dim, R.plan.Q.dim);
            for (const auto& [k, c] : H.table(i, j)) got = got + R.hom_basis[static_cast<size_t>(k)] * c;
            CHECK(expect == got);
        }
}

TEST_CASE("built product matches reversed composition on sampled pairs at p = 3") {
    ReconstructedAlgebra R = build(plan(3, {1, 1, 1}));
    const Algebra& H = *R.H;
    CHECK(H.n == 81);
    std::mt19937_64 rng(kDefaultSeed);
    std::uniform_int_distribution<int> pick(0, H.n - 1);
    for (int trial = 0; trial < 60; ++trial) {
        int i = pick(rng), j = pick(rng);
        Matrix expect = matmul(R.hom_basis[static_cast<size_t>(j)],
                               R.hom_basis[static_cast<size_t>(i)]);
        Matrix got(H.p, R.plan.Q.dim, R.plan.Q.dim);
        for (const auto& [k, c] : H.table(i, j)) got = got + R.hom_basis[static_cast<size_t>(k)] * c;
        CHECK(expect == got);
    }
}

TEST_CASE("endomorphism matrices commute with the module action") {
    ReconstructedAlgebra R = build(plan(2, {1, 2}));
    const Module& Q = R.plan.Q;
    for (const Matrix& f : R.hom_basis)
        for (const Matrix& act : Q.rho) CHECK(matmul(f, act) == matmul(act, f));
}

TEST_CASE("built algebra spans the full generic endomorphism algebra") {
    ReconstructedAlgebra R = build(plan(2, {1, 1}));
    EndAlgebraResult E = end_algebra(R.plan.Q, /*opposite_orientation=*/true);
    CHECK(E.algebra->n == R.H->n);
    // Flatten both hom bases and compare spans.
    int dq = R.plan.Q.dim;
    Matrix all(R.H->p, dq * dq, 2 * R.H->n);
    for (int b = 0; b < R.H->n; ++b)
        for (int r = 0; r < dq; ++r)
            for (int c = 0; c < dq; ++c) {
                all.at(r * dq + c, b) = R.hom_basis[static_cast<size_t>(b)].at(r, c);
                all.at(r * dq + c, R.H->n + b) = E.hom_basis[static_cast<size_t>(b)].at(r, c);
            }
    CHECK(rank(all) == R.H->n);
}

TEST_CASE("block idempotents are orthogonal and sum to the unit") {
    ReconstructedAlgebra R = build(plan(3, {1, 1, 1}));
    const Algebra& H = *R.H;
    std::vector<CycScalar> total(static_cast<size_t>(H.n), CycScalar::zero(H.p));
    for (int e : R.idempotent_index) {
        auto v = H.basis_vector(e);
        CHECK(H.mult(v, v) == v);
        for (int i = 0; i < H.n; ++i) total[static_cast<size_t>(i)] += v[static_cast<size_t>(i)];
    }
    CHECK(total == H.unit);
    auto e0 = H.basis_vector(R.idempotent_index[0]);
    auto e1 = H.basis_vector(R.idempotent_index[1]);
    std::vector<CycScalar> zero(static_cast<size_t>(H.n), CycScalar::zero(H.p));
    CHECK(H.mult(e0, e1) == zero);
}

TEST_CASE("sixteen-dimensional reconstruction is Frobenius with matching projectives") {
    ReconstructedAlgebra R = build(plan(2, {1, 1}));
    ReconstructionReport rep = analyze(R);
    CHECK(rep.dim == 16);
    CHECK(rep.radical_dim == 8);
    CHECK(rep.nilpotency_index == 2);
    CHECK(rep.predictions_match);
    CHECK(rep.quasi_frobenius);
    CHECK(rep.criterion);
    CHECK(rep.frobenius);
    CHECK(rep.frobenius_matches_criterion);
    REQUIRE(rep.table.size() == 2);
    for (const ProjectiveRow& row : rep.table) {
        CHECK(row.c_k == 2);
        CHECK(row.dim == 4);
        CHECK(row.soc == 2);
        CHECK(row.cosoc == 2);
        CHECK(row.dual_projective);
    }
    // Cross-check the summand-wise quasi-Frobenius decision against the
    // generic dual-of-regular projectivity test.
    QfResult qf = is_quasi_frobenius(R.H);
    CHECK(qf.quasi_frobenius == rep.quasi_frobenius);
}

TEST_CASE("81-dimensional reconstruction with unequal dimensions is not Frobenius") {
    ReconstructedAlgebra R = build(plan(2, {1, 2}));
    ReconstructionReport rep = analyze(R);
    CHECK(rep.dim == 81);
    CHECK(rep.radical_dim == 40);
    CHECK(rep.nilpotency_index == 2);
    CHECK(rep.predictions_match);
    CHECK(rep.quasi_frobenius);
    CHECK_FALSE(rep.criterion);
    CHECK_FALSE(rep.frobenius);
    CHECK(rep.frobenius_matches_criterion);
    REQUIRE(rep.table.size() == 2);
    CHECK(rep.table[0].c_k == 5);
    CHECK(rep.table[0].soc == 4);
    CHECK(rep.table[0].cosoc == 5);
    CHECK(rep.table[1].c_k == 4);
    CHECK(rep.table[1].soc == 5);
    CHECK(rep.table[1].cosoc == 4);
    CHECK(rep.frobenius_detail.decided_by_socle_criterion);
}

TEST_CASE("81-dimensional reconstruction at p = 3 with equal dimensions is Frobenius") {
    ReconstructedAlgebra R = build(plan(3, {1, 1, 1}));
    ReconstructionReport rep = analyze(R);
    CHECK(rep.dim == 81);
    CHECK(rep.radical_dim == 54);
    CHECK(rep.nilpotency_index == 3);
    CHECK(rep.predictions_match);
    CHECK(rep.quasi_frobenius);
    CHECK(rep.criterion);
    CHECK(rep.frobenius);
    for (const ProjectiveRow& row : rep.table) {
        CHECK(row.c_k == 3);
        CHECK(row.soc == 3);
        CHECK(row.cosoc == 3);
    }
}

TEST_CASE("256-dimensional reconstruction with equal dimensions is Frobenius") {
    ReconstructedAlgebra R = build(plan(2, {2, 2}));
    ReconstructionReport rep = analyze(R);
    CHECK(rep.dim == 256);
    CHECK(rep.radical_dim == 128);
    CHECK(rep.nilpotency_index == 2);
    CHECK(rep.predictions_match);
    CHECK(rep.quasi_frobenius);
    CHECK(rep.criterion);
    CHECK(rep.frobenius);
    CHECK(rep.frobenius_matches_criterion);
}

TEST_CASE("256-dimensional reconstruction at p = 3 separates quasi-Frobenius from Frobenius") {
    ReconstructedAlgebra R = build(plan(3, {1, 1, 2}));
    ReconstructionReport rep = analyze(R);
    CHECK(rep.dim == 256);
    CHECK(rep.radical_dim == 170);
    CHECK(rep.nilpotency_index == 3);
    CHECK(rep.predictions_match);
    CHECK(rep.quasi_frobenius);
    CHECK_FALSE(rep.criterion);
    CHECK_FALSE(rep.frobenius);
    CHECK(rep.frobenius_matches_criterion);
    REQUIRE(rep.table.size() == 3);
    CHECK(rep.table[0].soc == 6);
    CHECK(rep.table[0].cosoc == 5);
    CHECK(rep.table[1].soc == 5);
    CHECK(rep.table[1].cosoc == 6);
    CHECK(rep.table[2].soc == 5);
    CHECK(rep.table[2].cosoc == 5);
}
