#include "froblab/hopfax.hpp"

#include <sstream>

namespace froblab {

namespace {

using Vec = std::vector<CycScalar>;

size_t ipow(size_t b, int e) {
    size_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

Vec zero_vec(int p, size_t len) { return Vec(len, CycScalar::zero(p)); }

/// Product in the m-th tensor power of A; index digits are base n with
/// the FIRST tensor factor most significant.
Vec tmul(const Algebra& A, int m, const Vec& u, const Vec& v) {
    const size_t n = A.n;
    Vec out = zero_vec(A.p, u.size());
    for (size_t a = 0; a < u.size(); ++a) {
        if (u[a].is_zero()) continue;
        for (size_t b = 0; b < v.size(); ++b) {
            if (v[b].is_zero()) continue;
            std::vector<std::pair<size_t, CycScalar>> cur{{0, u[a] * v[b]}};
            size_t aa = a, bb = b, place = 1;
            bool dead = false;
            for (int t = 0; t < m && !dead; ++t) {
                int ai = static_cast<int>(aa % n), bi = static_cast<int>(bb % n);
                aa /= n;
                bb /= n;
                const auto& tab = A.table(ai, bi);
                if (tab.empty()) {
                    dead = true;
                    break;
                }
                std::vector<std::pair<size_t, CycScalar>> next;
                next.reserve(cur.size() * tab.size());
                for (const auto& [idx, c0] : cur)
                    for (const auto& [k, ck] : tab) next.emplace_back(idx + place * k, c0 * ck);
                cur = std::move(next);
                place *= n;
            }
            if (dead) continue;
            for (const auto& [idx, c] : cur) out[idx] += c;
        }
    }
    return out;
}

/// Comultiplication applied to tensor slot pos of u in A^{(x)m}.
Vec apply_delta(const Algebra& A, const Matrix& D, int m, int pos, const Vec& u) {
    const size_t n = A.n;
    const size_t placeP = ipow(n, m - 1 - pos);
    Vec out = zero_vec(A.p, u.size() * n);
    for (size_t I = 0; I < u.size(); ++I) {
        if (u[I].is_zero()) continue;
        size_t high = I / (placeP * n);
        size_t d = (I / placeP) % n;
        size_t low = I % placeP;
        for (size_t xy = 0; xy < n * n; ++xy) {
            const auto& c = D.at(static_cast<int>(xy), static_cast<int>(d));
            if (c.is_zero()) continue;
            size_t x = xy / n, y = xy % n;
            out[(((high * n + x) * n + y) * placeP) + low] += u[I] * c;
        }
    }
    return out;
}

/// Counit applied to tensor slot pos of u in A^{(x)m}.
Vec apply_counit(const Algebra& A, const Vec& eps, int m, int pos, const Vec& u) {
    const size_t n = A.n;
    const size_t placeP = ipow(n, m - 1 - pos);
    Vec out = zero_vec(A.p, u.size() / n);
    for (size_t I = 0; I < u.size(); ++I) {
        if (u[I].is_zero()) continue;
        size_t high = I / (placeP * n);
        size_t d = (I / placeP) % n;
        size_t low = I % placeP;
        out[high * placeP + low] += eps[d] * u[I];
    }
    return out;
}

/// u (x) v as a vector in A^{(x)(mu+mv)}.
Vec tensor_embed(int p, const Vec& u, const Vec& v) {
    Vec out = zero_vec(p, u.size() * v.size());
    for (size_t a = 0; a < u.size(); ++a) {
        if (u[a].is_zero()) continue;
        for (size_t b = 0; b < v.size(); ++b)
            if (!v[b].is_zero()) out[a * v.size() + b] = u[a] * v[b];
    }
    return out;
}

std::string format_vec(const Vec& v) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << format_scalar(v[i]);
    }
    os << "]";
    return os.str();
}

std::string label_of(const Algebra& A, int i) {
    if (i < static_cast<int>(A.labels.size()) && !A.labels[i].empty()) return A.labels[i];
    return "b" + std::to_string(i);
}

struct Ctx {
    const Algebra& A;
    Vec eps;              // eps(b_i)
    Matrix E;             // E[i][j] = eps(b_i b_j)
    Vec d1;               // Delta(1)
    std::vector<Vec> dcol;
    std::vector<Vec> scol;

    explicit Ctx(const HopfData& Hd) : A(*Hd.A), E(Hd.A->p, Hd.A->n, Hd.A->n) {
        const int n = A.n;
        eps.reserve(n);
        for (int i = 0; i < n; ++i) eps.push_back(Hd.counit.at(0, i));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                auto s = CycScalar::zero(A.p);
                for (const auto& [k, c] : A.table(i, j)) s += c * eps[k];
                E.at(i, j) = s;
            }
        d1 = matvec(Hd.delta, A.unit);
        dcol.reserve(n);
        scol.reserve(n);
        for (int i = 0; i < n; ++i) {
            dcol.push_back(Hd.delta.col(i));
            scol.push_back(Hd.antipode.col(i));
        }
    }
};

void push_verdict(AxiomReport& rep, std::string axiom, bool pass, std::string witness = "") {
    rep.verdicts.push_back({std::move(axiom), pass, std::move(witness)});
    rep.pass = rep.pass && pass;
}

void check_shapes(const HopfData& Hd) {
    const int n = Hd.A->n;
    if (Hd.delta.rows() != n * n || Hd.delta.cols() != n)
        throw Error("coalgebra data: delta must be n^2 x n");
    if (Hd.counit.rows() != 1 || Hd.counit.cols() != n)
        throw Error("coalgebra data: counit must be 1 x n");
    if (Hd.antipode.rows() != n || Hd.antipode.cols() != n)
        throw Error("coalgebra data: antipode must be n x n");
}

/// Shared structural checks: Delta multiplicative, coassociativity.
void check_delta_multiplicative(const HopfData& Hd, const Ctx& cx, AxiomReport& rep) {
    const int n = cx.A.n;
    bool pass = true;
    std::string witness;
    for (int i = 0; i < n && pass; ++i)
        for (int j = 0; j < n && pass; ++j) {
            Vec lhs = zero_vec(cx.A.p, static_cast<size_t>(n) * n);
            for (const auto& [k, c] : cx.A.table(i, j))
                for (size_t r = 0; r < lhs.size(); ++r) lhs[r] += c * cx.dcol[k][r];
            Vec rhs = tmul(cx.A, 2, cx.dcol[i], cx.dcol[j]);
            if (lhs != rhs) {
                pass = false;
                witness = "pair (" + label_of(cx.A, i) + ", " + label_of(cx.A, j) +
                          "): coproduct of product = " + format_vec(lhs) +
                          ", product of coproducts = " + format_vec(rhs);
            }
        }
    push_verdict(rep, "comultiplication multiplicative", pass, witness);
}

void check_coassociativity(const HopfData& Hd, const Ctx& cx, AxiomReport& rep) {
    const Algebra& A = *Hd.A;
    bool pass = true;
    std::string witness;
    for (int a = 0; a < A.n && pass; ++a)
        if (apply_delta(A, Hd.delta, 2, 0, cx.dcol[a]) !=
            apply_delta(A, Hd.delta, 2, 1, cx.dcol[a])) {
            pass = false;
            witness = "the two iterated coproducts differ on " + label_of(A, a);
        }
    push_verdict(rep, "coassociativity", pass, witness);
}

void check_counit_laws(const HopfData& Hd, const Ctx& cx, AxiomReport& rep) {
    const Algebra& A = *Hd.A;
    bool pass = true;
    std::string witness;
    for (int a = 0; a < A.n && pass; ++a) {
        Vec left = apply_counit(A, cx.eps, 2, 0, cx.dcol[a]);
        Vec right = apply_counit(A, cx.eps, 2, 1, cx.dcol[a]);
        if (left != A.basis_vector(a) || right != A.basis_vector(a)) {
            pass = false;
            witness = "a counit contraction of the coproduct is not the identity on " +
                      label_of(A, a);
        }
    }
    push_verdict(rep, "counit laws", pass, witness);
}

bool counit_is_multiplicative(const Ctx& cx) {
    const int n = cx.A.n;
    auto e1 = CycScalar::zero(cx.A.p);
    for (int i = 0; i < n; ++i) e1 += cx.eps[i] * cx.A.unit[i];
    if (!e1.is_one()) return false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (cx.E.at(i, j) != cx.eps[i] * cx.eps[j]) return false;
    return true;
}

}  // namespace

AxiomReport check_weak_hopf(const HopfData& Hd, int triple_axiom_dim_cap) {
    check_shapes(Hd);
    const Algebra& A = *Hd.A;
    const int n = A.n;
    const int p = A.p;
    Ctx cx(Hd);
    AxiomReport rep;

    check_delta_multiplicative(Hd, cx, rep);
    check_coassociativity(Hd, cx, rep);
    check_counit_laws(Hd, cx, rep);

    // counit factorization over triples: eps(a b_(1)) eps(b_(2) c)
    // = eps(abc) = eps(a b_(2)) eps(b_(1) c)
    if (n > triple_axiom_dim_cap)
        throw Error("dimension " + std::to_string(n) + " exceeds the triple-axiom cap " +
                    std::to_string(triple_axiom_dim_cap) +
                    " (cubic check); raise FROBLAB_MAX_DIM to override");
    {
        bool pass = true;
        std::string witness;
        for (int b = 0; b < n && pass; ++b) {
            std::vector<std::pair<size_t, CycScalar>> db;
            for (size_t r = 0; r < cx.dcol[b].size(); ++r)
                if (!cx.dcol[b][r].is_zero()) db.emplace_back(r, cx.dcol[b][r]);
            for (int a = 0; a < n && pass; ++a)
                for (int c = 0; c < n && pass; ++c) {
                    auto lhs = CycScalar::zero(p), rhs = CycScalar::zero(p),
                         mid = CycScalar::zero(p);
                    for (const auto& [uv, coeff] : db) {
                        int u = static_cast<int>(uv / n), v = static_cast<int>(uv % n);
                        lhs += coeff * cx.E.at(a, u) * cx.E.at(v, c);
                        rhs += coeff * cx.E.at(a, v) * cx.E.at(u, c);
                    }
                    for (const auto& [k, ck] : A.table(a, b)) mid += ck * cx.E.at(k, c);
                    if (lhs != mid || rhs != mid) {
                        pass = false;
                        witness = "triple (" + label_of(A, a) + ", " + label_of(A, b) + ", " +
                                  label_of(A, c) + "): split forms " + format_scalar(lhs) +
                                  " / " + format_scalar(rhs) + ", product form " +
                                  format_scalar(mid);
                    }
                }
        }
        push_verdict(rep, "counit factorization on triples", pass, witness);
    }

    // compatibility of the coproduct of the unit with itself
    {
        Vec t_mid = apply_delta(A, Hd.delta, 2, 0, cx.d1);
        Vec w1 = tensor_embed(p, cx.d1, A.unit);  // Delta(1) (x) 1
        Vec w2 = tensor_embed(p, A.unit, cx.d1);  // 1 (x) Delta(1)
        Vec lhs = tmul(A, 3, w1, w2);
        Vec rhs = tmul(A, 3, w2, w1);
        bool pass = (lhs == t_mid) && (rhs == t_mid);
        push_verdict(rep, "coproduct of unit compatibility", pass,
                     pass ? ""
                          : "iterated coproduct of 1 = " + format_vec(t_mid) +
                                ", shuffled products = " + format_vec(lhs) + " / " +
                                format_vec(rhs));
    }

    // a_(1) S(a_(2)) = eps(1_(1) a) 1_(2)
    {
        bool pass = true;
        std::string witness;
        for (int a = 0; a < n && pass; ++a) {
            Vec lhs = zero_vec(p, n);
            for (size_t uv = 0; uv < cx.dcol[a].size(); ++uv) {
                if (cx.dcol[a][uv].is_zero()) continue;
                int u = static_cast<int>(uv / n), v = static_cast<int>(uv % n);
                auto prod = A.mult(A.basis_vector(u), cx.scol[v]);
                for (int r = 0; r < n; ++r) lhs[r] += cx.dcol[a][uv] * prod[r];
            }
            Vec rhs = zero_vec(p, n);
            for (size_t xy = 0; xy < cx.d1.size(); ++xy) {
                if (cx.d1[xy].is_zero()) continue;
                int x = static_cast<int>(xy / n), y = static_cast<int>(xy % n);
                rhs[y] += cx.d1[xy] * cx.E.at(x, a);
            }
            if (lhs != rhs) {
                pass = false;
                witness = "element " + label_of(A, a) + ": lhs=" + format_vec(lhs) +
                          ", rhs=" + format_vec(rhs);
            }
        }
        push_verdict(rep, "antipode right counital law", pass, witness);
    }

    // S(a_(1)) a_(2) = 1_(1) eps(a 1_(2))
    {
        bool pass = true;
        std::string witness;
        for (int a = 0; a < n && pass; ++a) {
            Vec lhs = zero_vec(p, n);
            for (size_t uv = 0; uv < cx.dcol[a].size(); ++uv) {
                if (cx.dcol[a][uv].is_zero()) continue;
                int u = static_cast<int>(uv / n), v = static_cast<int>(uv % n);
                auto prod = A.mult(cx.scol[u], A.basis_vector(v));
                for (int r = 0; r < n; ++r) lhs[r] += cx.dcol[a][uv] * prod[r];
            }
            Vec rhs = zero_vec(p, n);
            for (size_t xy = 0; xy < cx.d1.size(); ++xy) {
                if (cx.d1[xy].is_zero()) continue;
                int x = static_cast<int>(xy / n), y = static_cast<int>(xy % n);
                rhs[x] += cx.d1[xy] * cx.E.at(a, y);
            }
            if (lhs != rhs) {
                pass = false;
                witness = "element " + label_of(A, a) + ": lhs=" + format_vec(lhs) +
                          ", rhs=" + format_vec(rhs);
            }
        }
        push_verdict(rep, "antipode left counital law", pass, witness);
    }

    // S(a_(1)) a_(2) S(a_(3)) = S(a)
    {
        bool pass = true;
        std::string witness;
        for (int a = 0; a < n && pass; ++a) {
            Vec d2 = apply_delta(A, Hd.delta, 2, 0, cx.dcol[a]);
            Vec lhs = zero_vec(p, n);
            for (size_t I = 0; I < d2.size(); ++I) {
                if (d2[I].is_zero()) continue;
                int u = static_cast<int>(I / (static_cast<size_t>(n) * n));
                int v = static_cast<int>((I / n) % n);
                int w = static_cast<int>(I % n);
                auto prod = A.mult(A.mult(cx.scol[u], A.basis_vector(v)), cx.scol[w]);
                for (int r = 0; r < n; ++r) lhs[r] += d2[I] * prod[r];
            }
            if (lhs != cx.scol[a]) {
                pass = false;
                witness = "element " + label_of(A, a) + ": sandwich=" + format_vec(lhs) +
                          ", antipode=" + format_vec(cx.scol[a]);
            }
        }
        push_verdict(rep, "antipode sandwich law", pass, witness);
    }

    rep.counit_multiplicative = counit_is_multiplicative(cx);
    return rep;
}

AxiomReport check_hopf(const HopfData& Hd, int triple_axiom_dim_cap) {
    AxiomReport rep = check_weak_hopf(Hd, triple_axiom_dim_cap);
    const Algebra& A = *Hd.A;
    const int n = A.n;
    const int p = A.p;
    Ctx cx(Hd);

    push_verdict(rep, "counit multiplicative", rep.counit_multiplicative,
                 rep.counit_multiplicative ? "" : "counit fails to split over some product");

    {
        Vec one_one = tensor_embed(p, A.unit, A.unit);
        bool pass = (cx.d1 == one_one);
        push_verdict(rep, "coproduct of unit is 1 (x) 1", pass,
                     pass ? "" : "coproduct of 1 = " + format_vec(cx.d1));
    }

    // a_(1) S(a_(2)) = eps(a) 1 = S(a_(1)) a_(2)
    {
        bool pass = true;
        std::string witness;
        for (int a = 0; a < n && pass; ++a) {
            Vec left = zero_vec(p, n), right = zero_vec(p, n), expect = zero_vec(p, n);
            for (int r = 0; r < n; ++r) expect[r] = cx.eps[a] * A.unit[r];
            for (size_t uv = 0; uv < cx.dcol[a].size(); ++uv) {
                if (cx.dcol[a][uv].is_zero()) continue;
                int u = static_cast<int>(uv / n), v = static_cast<int>(uv % n);
                auto pr = A.mult(A.basis_vector(u), cx.scol[v]);
                auto pl = A.mult(cx.scol[u], A.basis_vector(v));
                for (int r = 0; r < n; ++r) {
                    left[r] += cx.dcol[a][uv] * pr[r];
                    right[r] += cx.dcol[a][uv] * pl[r];
                }
            }
            if (left != expect || right != expect) {
                pass = false;
                witness = "element " + label_of(A, a) + ": a_(1)S(a_(2))=" + format_vec(left) +
                          ", S(a_(1))a_(2)=" + format_vec(right) +
                          ", eps(a)1=" + format_vec(expect);
            }
        }
        push_verdict(rep, "antipode convolution inverse laws", pass, witness);
    }
    return rep;
}

HopfData promote_trivial_quasi(const HopfData& Hd) {
    HopfData out = Hd;
    const int n = Hd.A->n;
    const int p = Hd.A->p;
    Vec phi = tensor_embed(p, tensor_embed(p, Hd.A->unit, Hd.A->unit), Hd.A->unit);
    out.phi = phi;
    out.phi_inv = phi;
    out.alpha = Hd.A->unit;
    out.beta = Hd.A->unit;
    return out;
}

AxiomReport check_quasi_hopf(const HopfData& Hd) {
    check_shapes(Hd);
    if (!Hd.phi || !Hd.phi_inv || !Hd.alpha || !Hd.beta)
        throw Error("quasi-Hopf check requires phi, phi_inv, alpha and beta");
    const Algebra& A = *Hd.A;
    const int n = A.n;
    const int p = A.p;
    const size_t n3 = ipow(n, 3);
    if (Hd.phi->size() != n3 || Hd.phi_inv->size() != n3)
        throw Error("quasi-Hopf data: phi and phi_inv must have length n^3");
    if (Hd.alpha->size() != static_cast<size_t>(n) || Hd.beta->size() != static_cast<size_t>(n))
        throw Error("quasi-Hopf data: alpha and beta must have length n");
    Ctx cx(Hd);
    AxiomReport rep;

    check_delta_multiplicative(Hd, cx, rep);
    check_counit_laws(Hd, cx, rep);

    Vec unit3 = tensor_embed(p, tensor_embed(p, A.unit, A.unit), A.unit);
    {
        bool pass = tmul(A, 3, *Hd.phi, *Hd.phi_inv) == unit3 &&
                    tmul(A, 3, *Hd.phi_inv, *Hd.phi) == unit3;
        push_verdict(rep, "associator invertible", pass,
                     pass ? "" : "phi * phi_inv or phi_inv * phi differs from 1 (x) 1 (x) 1");
    }

    // (Id (x) Delta)(Delta(a)) * phi = phi * (Delta (x) Id)(Delta(a))
    {
        bool pass = true;
        std::string witness;
        for (int a = 0; a < n && pass; ++a) {
            Vec l3 = apply_delta(A, Hd.delta, 2, 1, cx.dcol[a]);
            Vec r3 = apply_delta(A, Hd.delta, 2, 0, cx.dcol[a]);
            if (tmul(A, 3, l3, *Hd.phi) != tmul(A, 3, *Hd.phi, r3)) {
                pass = false;
                witness = "element " + label_of(A, a);
            }
        }
        push_verdict(rep, "quasi-coassociativity", pass, witness);
    }

    // pentagon: (1(x)phi)((Id(x)Delta(x)Id)phi)(phi(x)1)
    //         = ((Id(x)Id(x)Delta)phi)((Delta(x)Id(x)Id)phi)
    {
        Vec one_phi = tensor_embed(p, A.unit, *Hd.phi);
        Vec phi_one = tensor_embed(p, *Hd.phi, A.unit);
        Vec mid = apply_delta(A, Hd.delta, 3, 1, *Hd.phi);
        Vec lhs = tmul(A, 4, tmul(A, 4, one_phi, mid), phi_one);
        Vec rhs = tmul(A, 4, apply_delta(A, Hd.delta, 3, 2, *Hd.phi),
                       apply_delta(A, Hd.delta, 3, 0, *Hd.phi));
        bool pass = (lhs == rhs);
        push_verdict(rep, "pentagon cocycle", pass,
                     pass ? "" : "the two fourth-power tensor products differ");
    }

    {
        Vec contracted = apply_counit(A, cx.eps, 3, 1, *Hd.phi);
        Vec one_one = tensor_embed(p, A.unit, A.unit);
        bool pass = (contracted == one_one);
        push_verdict(rep, "associator normalization", pass,
                     pass ? "" : "(Id (x) eps (x) Id)(phi) = " + format_vec(contracted));
    }

    {
        bool pass = true;
        std::string witness;
        try {
            (void)make_anti_automorphism(Hd.A, Hd.antipode);
        } catch (const Error& e) {
            pass = false;
            witness = e.what();
        }
        push_verdict(rep, "antipode anti-automorphism", pass, witness);
    }

    // S(a_(1)) alpha a_(2) = eps(a) alpha ; a_(1) beta S(a_(2)) = eps(a) beta
    {
        bool pass_a = true, pass_b = true;
        std::string wit_a, wit_b;
        for (int a = 0; a < n; ++a) {
            Vec lhs_a = zero_vec(p, n), lhs_b = zero_vec(p, n);
            for (size_t uv = 0; uv < cx.dcol[a].size(); ++uv) {
                if (cx.dcol[a][uv].is_zero()) continue;
                int u = static_cast<int>(uv / n), v = static_cast<int>(uv % n);
                auto ta = A.mult(A.mult(cx.scol[u], *Hd.alpha), A.basis_vector(v));
                auto tb = A.mult(A.mult(A.basis_vector(u), *Hd.beta), cx.scol[v]);
                for (int r = 0; r < n; ++r) {
                    lhs_a[r] += cx.dcol[a][uv] * ta[r];
                    lhs_b[r] += cx.dcol[a][uv] * tb[r];
                }
            }
            Vec ea = zero_vec(p, n), eb = zero_vec(p, n);
            for (int r = 0; r < n; ++r) {
                ea[r] = cx.eps[a] * (*Hd.alpha)[r];
                eb[r] = cx.eps[a] * (*Hd.beta)[r];
            }
            if (pass_a && lhs_a != ea) {
                pass_a = false;
                wit_a = "element " + label_of(A, a) + ": lhs=" + format_vec(lhs_a) +
                        ", eps(a)alpha=" + format_vec(ea);
            }
            if (pass_b && lhs_b != eb) {
                pass_b = false;
                wit_b = "element " + label_of(A, a) + ": lhs=" + format_vec(lhs_b) +
                        ", eps(a)beta=" + format_vec(eb);
            }
        }
        push_verdict(rep, "antipode alpha law", pass_a, wit_a);
        push_verdict(rep, "antipode beta law", pass_b, wit_b);
    }

    // X^1 beta S(X^2) alpha X^3 = 1 and S(x^1) alpha x^2 beta S(x^3) = 1
    {
        Vec acc1 = zero_vec(p, n), acc2 = zero_vec(p, n);
        for (size_t I = 0; I < n3; ++I) {
            const size_t nn = static_cast<size_t>(n);
            int u = static_cast<int>(I / (nn * nn));
            int v = static_cast<int>((I / nn) % nn);
            int w = static_cast<int>(I % nn);
            if (!(*Hd.phi)[I].is_zero()) {
                auto t = A.mult(
                    A.mult(A.mult(A.mult(A.basis_vector(u), *Hd.beta), cx.scol[v]), *Hd.alpha),
                    A.basis_vector(w));
                for (int r = 0; r < n; ++r) acc1[r] += (*Hd.phi)[I] * t[r];
            }
            if (!(*Hd.phi_inv)[I].is_zero()) {
                auto t = A.mult(
                    A.mult(A.mult(A.mult(cx.scol[u], *Hd.alpha), A.basis_vector(v)), *Hd.beta),
                    cx.scol[w]);
                for (int r = 0; r < n; ++r) acc2[r] += (*Hd.phi_inv)[I] * t[r];
            }
        }
        bool p1 = (acc1 == A.unit), p2 = (acc2 == A.unit);
        push_verdict(rep, "associator antipode contraction", p1,
                     p1 ? "" : "contraction = " + format_vec(acc1));
        push_verdict(rep, "inverse associator antipode contraction", p2,
                     p2 ? "" : "contraction = " + format_vec(acc2));
    }

    rep.counit_multiplicative = counit_is_multiplicative(cx);
    return rep;
}

CounitalSubalgebras counital_subalgebras(const HopfData& Hd) {
    check_shapes(Hd);
    const Algebra& A = *Hd.A;
    const int n = A.n;
    const int p = A.p;
    Ctx cx(Hd);
    CounitalSubalgebras out;
    auto complain = [&](const std::string& s) {
        out.ok = false;
        out.violations.push_back(s);
    };

    Matrix PL(p, n, n), PR(p, n, n);  // projection images per basis element
    for (int a = 0; a < n; ++a) {
        for (size_t xy = 0; xy < cx.d1.size(); ++xy) {
            if (cx.d1[xy].is_zero()) continue;
            int x = static_cast<int>(xy / n), y = static_cast<int>(xy % n);
            PL.at(y, a) += cx.d1[xy] * cx.E.at(x, a);
            PR.at(x, a) += cx.d1[xy] * cx.E.at(a, y);
        }
    }
    out.left_basis = column_space(PL);
    out.right_basis = column_space(PR);

    auto check_subalgebra = [&](const Matrix& basis, const std::string& name)
        -> std::optional<Algebra> {
        const int m = basis.cols();
        Matrix unit_col(p, n, 1);
        unit_col.set_col(0, A.unit);
        auto unit_coords = solve(basis, unit_col);
        if (!unit_coords) {
            complain(name + " does not contain the unit");
            return std::nullopt;
        }
        Algebra S = make_algebra(p, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                auto prod = A.mult(basis.col(i), basis.col(j));
                Matrix pc(p, n, 1);
                pc.set_col(0, prod);
                auto coords = solve(basis, pc);
                if (!coords) {
                    complain(name + " is not closed under multiplication");
                    return std::nullopt;
                }
                for (int k = 0; k < m; ++k)
                    set_structure_constant(S, i, j, k, coords->at(k, 0));
            }
        for (int k = 0; k < m; ++k) S.unit[k] = unit_coords->at(k, 0);
        if (!check_algebra(S).ok) {
            complain(name + " induced structure constants fail validation");
            return std::nullopt;
        }
        return S;
    };

    auto SL = check_subalgebra(out.left_basis, "left base");
    auto SR = check_subalgebra(out.right_basis, "right base");

    // elementwise commutation of the two bases
    for (int i = 0; i < out.left_basis.cols(); ++i)
        for (int j = 0; j < out.right_basis.cols(); ++j)
            if (A.mult(out.left_basis.col(i), out.right_basis.col(j)) !=
                A.mult(out.right_basis.col(j), out.left_basis.col(i))) {
                complain("left and right bases do not commute elementwise");
                i = out.left_basis.cols();
                break;
            }

    // S maps the left base anti-isomorphically onto the right base
    if (out.left_basis.cols() != out.right_basis.cols()) {
        complain("left and right bases have different dimensions");
    } else {
        Matrix simg = matmul(Hd.antipode, out.left_basis);
        auto W = solve(out.right_basis, simg);
        if (!W || rank(*W) != W->cols()) {
            complain("antipode does not map the left base bijectively onto the right base");
        } else {
            out.antipode_witness = *W;
            for (int i = 0; i < out.left_basis.cols(); ++i)
                for (int j = 0; j < out.left_basis.cols(); ++j) {
                    auto lhs = matvec(Hd.antipode,
                                      A.mult(out.left_basis.col(i), out.left_basis.col(j)));
                    auto rhs = A.mult(matvec(Hd.antipode, out.left_basis.col(j)),
                                      matvec(Hd.antipode, out.left_basis.col(i)));
                    if (lhs != rhs) {
                        complain("antipode is not anti-multiplicative on the left base");
                        i = out.left_basis.cols();
                        break;
                    }
                }
        }
    }

    if (SL && radical(*SL).basis.cols() != 0) complain("left base is not semisimple");
    if (SR && radical(*SR).basis.cols() != 0) complain("right base is not semisimple");
    return out;
}

HopfData group_algebra(int p) {
    if (!is_prime(p)) throw Error("group_algebra: p must be prime");
    Algebra A = make_algebra(p, p);
    for (int i = 0; i < p; ++i) {
        A.labels[i] = "g^" + std::to_string(i);
        for (int j = 0; j < p; ++j)
            set_structure_constant(A, i, j, (i + j) % p, CycScalar::one(p));
    }
    A.unit[0] = CycScalar::one(p);
    A.generators = {p > 1 ? 1 : 0};
    HopfData Hd;
    Hd.A = std::make_shared<Algebra>(std::move(A));
    const int n = p;
    Matrix delta(p, n * n, n), counit(p, 1, n), antipode(p, n, n);
    for (int i = 0; i < n; ++i) {
        delta.at(i * n + i, i) = CycScalar::one(p);
        counit.at(0, i) = CycScalar::one(p);
        antipode.at((n - i) % n, i) = CycScalar::one(p);
    }
    Hd.delta = std::move(delta);
    Hd.counit = std::move(counit);
    Hd.antipode = std::move(antipode);
    return Hd;
}

HopfData pair_groupoid_algebra(int n) {
    if (n < 1) throw Error("pair_groupoid_algebra: n must be >= 1");
    const int p = 2;  // rational scalars
    const int dim = n * n;
    Algebra A = make_algebra(p, dim);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            A.labels[i * n + j] = "e" + std::to_string(i) + std::to_string(j);
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    if (j == k)
                        set_structure_constant(A, i * n + j, k * n + l, i * n + l,
                                               CycScalar::one(p));
        }
    for (int i = 0; i < n; ++i) A.unit[i * n + i] = CycScalar::one(p);
    HopfData Hd;
    Hd.A = std::make_shared<Algebra>(std::move(A));
    Matrix delta(p, dim * dim, dim), counit(p, 1, dim), antipode(p, dim, dim);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int e = i * n + j;
            delta.at(e * dim + e, e) = CycScalar::one(p);
            counit.at(0, e) = CycScalar::one(p);
            antipode.at(j * n + i, e) = CycScalar::one(p);
        }
    Hd.delta = std::move(delta);
    Hd.counit = std::move(counit);
    Hd.antipode = std::move(antipode);
    return Hd;
}

HopfData to_hopf_data(const TaftAlgebra& T) {
    HopfData Hd;
    Hd.A = T.B;
    Hd.delta = T.delta;
    Hd.counit = T.counit;
    Hd.antipode = T.antipode.matrix;
    return Hd;
}

}  // namespace froblab
