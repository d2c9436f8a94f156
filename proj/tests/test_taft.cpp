#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "froblab/frobenius.hpp"
#include "froblab/taft.hpp"

using namespace froblab;

TEST_CASE("structure table is a valid associative unital algebra") {
    for (int p : {2, 3, 5}) {
        auto T = build_taft(p);
        CHECK(T.B->n == p * p);
        CHECK(check_algebra(*T.B).ok);
        // xg = lambda gx
        auto gx = T.B->mult(T.B->basis_vector(T.g_index()), T.B->basis_vector(T.x_index()));
        auto xg = T.B->mult(T.B->basis_vector(T.x_index()), T.B->basis_vector(T.g_index()));
        std::vector<CycScalar> expect(p * p, CycScalar::zero(p));
        for (int r = 0; r < p * p; ++r) expect[r] = T.lambda * gx[r];
        CHECK(xg == expect);
        // g^p = 1, x^p = 0
        auto acc = T.B->basis_vector(0);
        for (int t = 0; t < p; ++t) acc = T.B->mult(acc, T.B->basis_vector(T.g_index()));
        CHECK(acc == T.B->basis_vector(0));
        acc = T.B->basis_vector(0);
        for (int t = 0; t < p; ++t) acc = T.B->mult(acc, T.B->basis_vector(T.x_index()));
        CHECK(acc == std::vector<CycScalar>(p * p, CycScalar::zero(p)));
    }
}

TEST_CASE("comultiplication is coassociative and counital") {
    for (int p : {2, 3}) {
        auto T = build_taft(p);
        const int n = p * p;
        // (Delta (x) id) Delta = (id (x) Delta) Delta
        auto I = Matrix::identity(p, n);
        CHECK(matmul(kron(T.delta, I), T.delta) == matmul(kron(I, T.delta), T.delta));
        // (eps (x) id) Delta = id = (id (x) eps) Delta
        CHECK(matmul(kron(T.counit, I), T.delta) == I);
        CHECK(matmul(kron(I, T.counit), T.delta) == I);
        // Delta is an algebra map on products of basis elements
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                auto di = T.delta.col(i);
                auto dj = T.delta.col(j);
                // product in B (x) B
                std::vector<CycScalar> lhs(static_cast<size_t>(n) * n, CycScalar::zero(p));
                for (int a = 0; a < n * n; ++a) {
                    if (di[a].is_zero()) continue;
                    for (int b = 0; b < n * n; ++b) {
                        if (dj[b].is_zero()) continue;
                        auto f = di[a] * dj[b];
                        for (const auto& [k1, c1] : T.B->table(a / n, b / n))
                            for (const auto& [k2, c2] : T.B->table(a % n, b % n))
                                lhs[k1 * n + k2] += f * c1 * c2;
                    }
                }
                std::vector<CycScalar> rhs(static_cast<size_t>(n) * n, CycScalar::zero(p));
                for (const auto& [k, c] : T.B->table(i, j)) {
                    auto dk = T.delta.col(k);
                    for (int r = 0; r < n * n; ++r) rhs[r] += c * dk[r];
                }
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("antipode squares to conjugation by g^{-1}") {
    // S^2(a) = g^{-1} a g: on generators, S^2(g) = g and S^2(x) = lambda x
    for (int p : {2, 3, 5}) {
        auto T = build_taft(p);
        auto S2 = matmul(T.antipode.matrix, T.antipode.matrix);
        std::vector<CycScalar> ginv(p * p, CycScalar::zero(p));
        ginv[((p - 1) % p) * p] = CycScalar::one(p);
        auto Lginv = T.B->left_mult_matrix(ginv);
        auto Rg = T.B->right_mult_matrix(T.B->basis_vector(T.g_index()));
        CHECK(S2 == matmul(Rg, Lginv));
        CHECK(matmul(T.antipode.matrix, T.antipode_inv) == Matrix::identity(p, p * p));
    }
}

TEST_CASE("radical is spanned by the positive x-degree part") {
    for (int p : {2, 3, 5}) {
        auto T = build_taft(p);
        auto rep = radical_check(T);
        CHECK(rep.ok);
        CHECK(rep.radical_dim == p * p - p);
        CHECK(rep.nilpotency_index == p);
    }
}

TEST_CASE("eigenvector elements obey the two defining relations") {
    for (int p : {2, 3, 5})
        for (int k = 0; k < p; ++k)
            for (int s = 0; s < p; ++s) CHECK_NOTHROW((void)x_element(build_taft(p), k, s));
}

TEST_CASE("chain of ideals has strictly increasing dimensions") {
    for (int p : {2, 3}) {
        auto T = build_taft(p);
        for (int k = 0; k < p; ++k) {
            Matrix prev;
            for (int i = 1; i <= p; ++i) {
                Matrix basis;
                auto M = chain_submodule(T, k, i, &basis);
                CHECK(M.dim == i);
                CHECK(M.is_valid());
                if (i > 1)
                    for (int c = 0; c < prev.cols(); ++c) CHECK(in_span(basis, prev.col(c)));
                prev = basis;
            }
        }
    }
}

TEST_CASE("projective covers have simple socle V_{k+1} and top V_k") {
    for (int p : {2, 3, 5}) {
        auto T = build_taft(p);
        auto rad = radical(*T.B);
        for (int k = 0; k < p; ++k) {
            auto P = projective_cover(T, k);
            CHECK(P.dim == p);
            CHECK(is_projective(P).projective);
            auto soc = socle_module(P, rad.basis);
            REQUIRE(soc.dim == 1);
            CHECK(is_isomorphic(soc, simple_module(T, k + 1)).isomorphic);
            auto top = cosocle_module(P, rad.basis);
            REQUIRE(top.dim == 1);
            CHECK(is_isomorphic(top, simple_module(T, k)).isomorphic);
        }
    }
}

TEST_CASE("simple modules are pairwise non-isomorphic and 1-dimensional") {
    auto T = build_taft(5);
    for (int k = 0; k < 5; ++k) {
        auto Vk = simple_module(T, k);
        CHECK(Vk.is_valid());
        for (int l = 0; l < 5; ++l)
            CHECK(is_isomorphic(Vk, simple_module(T, l)).isomorphic == (k == l));
        // index is mod p
        CHECK(is_isomorphic(Vk, simple_module(T, k + 5)).isomorphic);
    }
}

TEST_CASE("regular module decomposes as p copies of each cover in composition series") {
    auto T = build_taft(3);
    auto rad = radical(*T.B);
    auto reg = regular_module(T.B, Side::Left);
    std::vector<Module> simples;
    for (int k = 0; k < 3; ++k) simples.push_back(simple_module(T, k));
    auto factors = composition_factors(reg, simples, rad.basis);
    REQUIRE(factors.size() == 9);
    int count[3] = {0, 0, 0};
    for (int f : factors) count[f]++;
    CHECK(count[0] == 3);
    CHECK(count[1] == 3);
    CHECK(count[2] == 3);
}

TEST_CASE("tensor product of simples adds the indices") {
    for (int p : {2, 3}) {
        auto T = build_taft(p);
        for (int k = 0; k < p; ++k)
            for (int l = 0; l < p; ++l) {
                auto W = tensor_modules(T, simple_module(T, k), simple_module(T, l));
                REQUIRE(W.dim == 1);
                CHECK(W.is_valid());
                CHECK(is_isomorphic(W, simple_module(T, k + l)).isomorphic);
            }
    }
}

TEST_CASE("the algebra itself is Frobenius") {
    for (int p : {2, 3}) {
        auto T = build_taft(p);
        auto res = is_frobenius(*T.B);
        CHECK(res.frobenius);
        CHECK(res.quasi_frobenius);
    }
}
