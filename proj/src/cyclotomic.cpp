#include "froblab/cyclotomic.hpp"

#include <cctype>
#include <sstream>

namespace froblab {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

CycContext::CycContext(int prime) : p(prime) {
    if (!is_prime(prime))
        throw Error("cyclotomic context requires a prime p >= 2, got " + std::to_string(prime));
}

CycScalar::CycScalar(int p, std::vector<Rational> coeffs) : p_(p), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != p_ - 1)
        throw Error("coefficient vector length " + std::to_string(c_.size()) +
                    " does not match field degree " + std::to_string(p_ - 1));
}

CycScalar CycScalar::zero(int p) { return CycScalar(p, std::vector<Rational>(p - 1, Rational(0))); }

CycScalar CycScalar::one(int p) {
    std::vector<Rational> c(p - 1, Rational(0));
    c[0] = 1;
    return CycScalar(p, std::move(c));
}

CycScalar CycScalar::from_rational(int p, const Rational& r) {
    std::vector<Rational> c(p - 1, Rational(0));
    c[0] = r;
    return CycScalar(p, std::move(c));
}

CycScalar CycScalar::from_int(int p, long long v) { return from_rational(p, Rational(v)); }

// Reduce a polynomial in z of arbitrary degree to the power basis:
// first z^p = 1, then fold z^{p-1} = -(1 + z + ... + z^{p-2}).
static std::vector<Rational> reduce_poly(int p, const std::vector<Rational>& poly) {
    std::vector<Rational> modp(p, Rational(0));
    for (size_t e = 0; e < poly.size(); ++e) modp[e % p] += poly[e];
    std::vector<Rational> out(p - 1);
    for (int e = 0; e < p - 1; ++e) out[e] = modp[e] - modp[p - 1];
    return out;
}

CycScalar CycScalar::zeta_pow(int p, long long k) {
    long long e = ((k % p) + p) % p;
    std::vector<Rational> poly(static_cast<size_t>(e) + 1, Rational(0));
    poly[e] = 1;
    return CycScalar(p, reduce_poly(p, poly));
}

bool CycScalar::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycScalar::is_one() const {
    if (c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool CycScalar::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

void CycScalar::check_same(const CycScalar& o) const {
    if (p_ != o.p_)
        throw Error("mixed cyclotomic contexts: p=" + std::to_string(p_) + " vs p=" + std::to_string(o.p_));
}

CycScalar CycScalar::operator-() const {
    std::vector<Rational> c(c_);
    for (auto& x : c) x = -x;
    return CycScalar(p_, std::move(c));
}

CycScalar CycScalar::operator+(const CycScalar& o) const {
    CycScalar r(*this);
    r += o;
    return r;
}

CycScalar CycScalar::operator-(const CycScalar& o) const {
    CycScalar r(*this);
    r -= o;
    return r;
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
    check_same(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) {
    check_same(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CycScalar CycScalar::operator*(const CycScalar& o) const {
    check_same(o);
    int d = p_ - 1;
    std::vector<Rational> prod(2 * d - 1, Rational(0));
    for (int i = 0; i < d; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (o.c_[j] == 0) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    return CycScalar(p_, reduce_poly(p_, prod));
}

CycScalar& CycScalar::operator*=(const CycScalar& o) {
    *this = *this * o;
    return *this;
}

bool CycScalar::operator==(const CycScalar& o) const {
    if (p_ != o.p_) return false;
    return c_ == o.c_;
}

// Extended Euclid for a(x)*u + Phi_p(x)*v = gcd in Q[x]; Phi_p is
// irreducible so a nonzero a is invertible mod Phi_p.
CycScalar CycScalar::inverse() const {
    if (is_zero()) throw Error("inverse of zero in Q(zeta_" + std::to_string(p_) + ")");
    using Poly = std::vector<Rational>;
    auto deg = [](const Poly& f) {
        for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
            if (f[i] != 0) return i;
        return -1;
    };
    Poly r0(p_, Rational(1));  // Phi_p
    Poly r1(c_.begin(), c_.end());
    Poly s0(1, Rational(0)), s1(1, Rational(1));  // Bezout coefficients for a
    while (deg(r1) > 0) {
        int d0 = deg(r0), d1 = deg(r1);
        // r0 -= q * r1 by repeated leading-term cancellation
        Poly q(d0 - d1 + 1, Rational(0));
        Poly rem = r0;
        while (deg(rem) >= d1) {
            int dr = deg(rem);
            Rational f = rem[dr] / r1[d1];
            q[dr - d1] = f;
            for (int i = 0; i <= d1; ++i) rem[dr - d1 + i] -= f * r1[i];
        }
        // s2 = s0 - q*s1
        Poly s2(std::max(s0.size(), q.size() + s1.size()), Rational(0));
        for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
        }
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    int d1 = deg(r1);
    if (d1 != 0) throw Error("internal: gcd with Phi_p not a unit");
    Rational lead = r1[0];
    Poly inv = s1;
    for (auto& x : inv) x /= lead;
    return CycScalar(p_, reduce_poly(p_, inv));
}

CycScalar CycScalar::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    CycScalar acc = one(p_);
    CycScalar base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string format_rational(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

Rational parse_rational(const std::string& text) {
    try {
        return Rational(text);
    } catch (const std::exception&) {
        throw Error("malformed rational: '" + text + "'");
    }
}

std::string format_scalar(const CycScalar& s) {
    if (s.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const auto& c = s.coeffs();
    for (size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        Rational a = c[k];
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (k == 0) {
            os << format_rational(a);
        } else {
            if (a != 1) os << format_rational(a) << "*";
            os << "z^" << k;
        }
    }
    return os.str();
}

CycScalar parse_scalar(int p, const std::string& text) {
    if (!is_prime(p)) throw Error("parse_scalar: invalid prime " + std::to_string(p));
    CycScalar result = CycScalar::zero(p);
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == text.size()) throw Error("malformed scalar: empty text");
    bool any = false;
    while (true) {
        skip_ws();
        if (i == text.size()) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sign = -1;
            ++i;
            skip_ws();
        } else if (any) {
            throw Error("malformed scalar near position " + std::to_string(i) + " in '" + text + "'");
        }
        Rational coeff(1);
        bool have_coeff = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            std::string num = text.substr(start, i - start);
            skip_ws();
            if (i < text.size() && text[i] == '/') {
                ++i;
                skip_ws();
                size_t ds = i;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                if (ds == i) throw Error("malformed scalar: missing denominator in '" + text + "'");
                num += "/" + text.substr(ds, i - ds);
            }
            coeff = parse_rational(num);
            have_coeff = true;
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        long long expo = 0;
        bool have_z = false;
        if (i < text.size() && text[i] == 'z') {
            have_z = true;
            ++i;
            expo = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                size_t es = i;
                if (i < text.size() && text[i] == '-') ++i;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                if (es == i) throw Error("malformed scalar: missing exponent in '" + text + "'");
                expo = std::stoll(text.substr(es, i - es));
            }
        }
        if (!have_coeff && !have_z)
            throw Error("malformed scalar near position " + std::to_string(i) + " in '" + text + "'");
        CycScalar term = have_z ? CycScalar::zeta_pow(p, expo) : CycScalar::one(p);
        if (sign < 0) coeff = -coeff;
        term *= CycScalar::from_rational(p, coeff);
        result += term;
        any = true;
    }
    if (!any) throw Error("malformed scalar: '" + text + "'");
    return result;
}

}  // namespace froblab
