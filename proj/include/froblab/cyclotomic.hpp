#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace froblab {

using Rational = boost::multiprecision::mpq_rational;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool is_prime(int p);

/// Field context for Q(zeta_p), p prime.  Elements are stored as
/// coordinate vectors in the power basis 1, z, ..., z^{p-2} of
/// Q[x]/(Phi_p) with Phi_p = 1 + x + ... + x^{p-1}.  For p = 2 the
/// field is Q itself and z = -1, through the same code path.
struct CycContext {
    int p;

    explicit CycContext(int prime);
    int degree() const { return p - 1; }
};

class CycScalar {
public:
    CycScalar() : p_(0) {}
    CycScalar(int p, std::vector<Rational> coeffs);

    static CycScalar zero(int p);
    static CycScalar one(int p);
    static CycScalar from_rational(int p, const Rational& r);
    static CycScalar from_int(int p, long long v);
    /// zeta^k, any integer k (reduced mod p).
    static CycScalar zeta_pow(int p, long long k);
    static CycScalar zeta(int p) { return zeta_pow(p, 1); }

    int prime() const { return p_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// Constant coefficient; only meaningful when is_rational().
    const Rational& rational_part() const { return c_.at(0); }

    CycScalar operator-() const;
    CycScalar operator+(const CycScalar& o) const;
    CycScalar operator-(const CycScalar& o) const;
    CycScalar operator*(const CycScalar& o) const;
    CycScalar& operator+=(const CycScalar& o);
    CycScalar& operator-=(const CycScalar& o);
    CycScalar& operator*=(const CycScalar& o);
    bool operator==(const CycScalar& o) const;
    bool operator!=(const CycScalar& o) const { return !(*this == o); }

    CycScalar inverse() const;
    CycScalar pow(long long e) const;

private:
    void check_same(const CycScalar& o) const;
    int p_;
    std::vector<Rational> c_;
};

/// Text grammar: signed rational coefficients attached to "z^k" tokens,
/// e.g. "1/2 - 3*z^1 + z^2".  Exponents >= p-1 are reduced, not rejected.
CycScalar parse_scalar(int p, const std::string& text);
std::string format_scalar(const CycScalar& s);

std::string format_rational(const Rational& r);
Rational parse_rational(const std::string& text);

}  // namespace froblab
