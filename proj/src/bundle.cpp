#include "froblab/bundle.hpp"

#include <string>
#include <utility>
#include <vector>

namespace froblab {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error("malformed bundle: " + what); }

Json scalar_array(const std::vector<CycScalar>& v) {
    Json a = Json::array();
    for (const CycScalar& s : v) a.push_back(format_scalar(s));
    return a;
}

Json matrix_array(const Matrix& m) {
    Json a = Json::array();
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) a.push_back(format_scalar(m.at(r, c)));
    return a;
}

std::vector<CycScalar> parse_scalar_array(const Json& j, int p, size_t expect, const std::string& field) {
    if (!j.is_array() || j.size() != expect)
        malformed("field \"" + field + "\" must be an array of " + std::to_string(expect) + " scalars");
    std::vector<CycScalar> v;
    v.reserve(expect);
    for (const auto& e : j) {
        if (!e.is_string()) malformed("field \"" + field + "\" holds a non-string scalar");
        try {
            v.push_back(parse_scalar(p, e.get<std::string>()));
        } catch (const Error& err) {
            malformed("field \"" + field + "\": " + err.what());
        }
    }
    return v;
}

Matrix parse_matrix(const Json& j, int p, int rows, int cols, const std::string& field) {
    auto v = parse_scalar_array(j, p, static_cast<size_t>(rows) * cols, field);
    Matrix m(p, rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = v[static_cast<size_t>(r) * cols + c];
    return m;
}

}  // namespace

Json bundle_to_json(const AlgebraBundle& b) {
    const Algebra& A = *b.algebra;
    Json j;
    j["p"] = A.p;
    j["dim"] = A.n;
    j["basis_labels"] = A.labels;
    Json sc = Json::array();
    for (int i = 0; i < A.n; ++i)
        for (int jj = 0; jj < A.n; ++jj)
            for (const auto& [k, c] : A.table(i, jj))
                if (!c.is_zero()) sc.push_back(Json::array({i, jj, k, format_scalar(c)}));
    j["structure_constants"] = std::move(sc);
    j["unit"] = scalar_array(A.unit);
    if (!A.generators.empty()) j["generators"] = A.generators;
    if (b.delta) j["delta"] = matrix_array(*b.delta);
    if (b.counit) j["counit"] = matrix_array(*b.counit);
    if (b.antipode) j["antipode"] = matrix_array(*b.antipode);
    if (b.phi) j["phi"] = scalar_array(*b.phi);
    if (b.phi_inv) j["phi_inv"] = scalar_array(*b.phi_inv);
    if (b.alpha) j["alpha"] = scalar_array(*b.alpha);
    if (b.beta) j["beta"] = scalar_array(*b.beta);
    return j;
}

AlgebraBundle bundle_from_json(const Json& j) {
    if (!j.is_object()) malformed("top level must be an object");
    if (!j.contains("p") || !j["p"].is_number_integer()) malformed("missing integer field \"p\"");
    if (!j.contains("dim") || !j["dim"].is_number_integer()) malformed("missing integer field \"dim\"");
    int p = j["p"].get<int>();
    int n = j["dim"].get<int>();
    if (!is_prime(p)) malformed("p = " + std::to_string(p) + " is not prime");
    if (n <= 0) malformed("dim must be positive");

    std::vector<std::string> labels;
    if (j.contains("basis_labels")) {
        if (!j["basis_labels"].is_array() || j["basis_labels"].size() != static_cast<size_t>(n))
            malformed("basis_labels must list dim strings");
        for (const auto& l : j["basis_labels"]) {
            if (!l.is_string()) malformed("basis_labels holds a non-string entry");
            labels.push_back(l.get<std::string>());
        }
    }
    Algebra A = make_algebra(p, n, labels);

    if (!j.contains("structure_constants") || !j["structure_constants"].is_array())
        malformed("missing array field \"structure_constants\"");
    for (const auto& e : j["structure_constants"]) {
        if (!e.is_array() || e.size() != 4 || !e[0].is_number_integer() ||
            !e[1].is_number_integer() || !e[2].is_number_integer() || !e[3].is_string())
            malformed("structure_constants entries must be [i, j, k, scalar-text]");
        int i = e[0].get<int>(), jj = e[1].get<int>(), k = e[2].get<int>();
        if (i < 0 || i >= n || jj < 0 || jj >= n || k < 0 || k >= n)
            malformed("structure_constants index out of range");
        CycScalar c = CycScalar::zero(p);
        try {
            c = parse_scalar(p, e[3].get<std::string>());
        } catch (const Error& err) {
            malformed(std::string("structure_constants scalar: ") + err.what());
        }
        if (!c.is_zero()) set_structure_constant(A, i, jj, k, c);
    }
    if (!j.contains("unit")) malformed("missing field \"unit\"");
    A.unit = parse_scalar_array(j["unit"], p, static_cast<size_t>(n), "unit");
    if (j.contains("generators")) {
        if (!j["generators"].is_array()) malformed("generators must be an array of basis indices");
        for (const auto& g : j["generators"]) {
            if (!g.is_number_integer() || g.get<int>() < 0 || g.get<int>() >= n)
                malformed("generators index out of range");
            A.generators.push_back(g.get<int>());
        }
    }
    auto rep = check_algebra(A);
    if (!rep.ok) malformed("algebra axioms fail: " + rep.violations.front());

    AlgebraBundle b;
    b.algebra = std::make_shared<Algebra>(std::move(A));
    const size_t nn = static_cast<size_t>(n);
    if (j.contains("delta")) b.delta = parse_matrix(j["delta"], p, n * n, n, "delta");
    if (j.contains("counit")) b.counit = parse_matrix(j["counit"], p, 1, n, "counit");
    if (j.contains("antipode")) b.antipode = parse_matrix(j["antipode"], p, n, n, "antipode");
    if (j.contains("phi")) b.phi = parse_scalar_array(j["phi"], p, nn * nn * nn, "phi");
    if (j.contains("phi_inv")) b.phi_inv = parse_scalar_array(j["phi_inv"], p, nn * nn * nn, "phi_inv");
    if (j.contains("alpha")) b.alpha = parse_scalar_array(j["alpha"], p, nn, "alpha");
    if (j.contains("beta")) b.beta = parse_scalar_array(j["beta"], p, nn, "beta");
    if ((b.delta || b.counit || b.antipode) && !b.has_coalgebra())
        malformed("delta, counit and antipode must be supplied together");
    return b;
}

AlgebraBundle bundle_of(std::shared_ptr<Algebra> A) {
    AlgebraBundle b;
    b.algebra = std::move(A);
    return b;
}

AlgebraBundle bundle_of(const HopfData& Hd) {
    AlgebraBundle b;
    b.algebra = std::make_shared<Algebra>(*Hd.A);
    b.delta = Hd.delta;
    b.counit = Hd.counit;
    b.antipode = Hd.antipode;
    b.phi = Hd.phi;
    b.phi_inv = Hd.phi_inv;
    b.alpha = Hd.alpha;
    b.beta = Hd.beta;
    return b;
}

HopfData hopf_data_of(const AlgebraBundle& b) {
    if (!b.has_coalgebra()) throw Error("bundle has no coalgebra data (delta/counit/antipode)");
    HopfData Hd;
    Hd.A = b.algebra;
    Hd.delta = *b.delta;
    Hd.counit = *b.counit;
    Hd.antipode = *b.antipode;
    Hd.phi = b.phi;
    Hd.phi_inv = b.phi_inv;
    Hd.alpha = b.alpha;
    Hd.beta = b.beta;
    return Hd;
}

}  // namespace froblab
