#pragma once

#include <complex>
#include <vector>

#include "etaforge/rational.hpp"

namespace etaforge {

// Exact element of the cyclotomic field Q(zeta_m), stored as a coefficient
// vector of length phi(m) over the power basis 1, zeta, ..., zeta^{phi(m)-1}
// after reduction modulo the m-th cyclotomic polynomial.  Reduction mod
// Phi_m makes the representation canonical within a fixed order, so
// structural equality of the vectors is exact equality of field elements.
//
// Values of different orders compare and combine by embedding into
// Q(zeta_lcm) via zeta_m -> zeta_lcm^{lcm/m}.
class CycNum {
public:
    CycNum();  // zero in Q(zeta_1)
    explicit CycNum(const Rat& r);
    explicit CycNum(long n);

    static CycNum zeta(long m);              // zeta_m
    static CycNum zeta_pow(long m, long k);  // zeta_m^k, k any integer
    // coeffs must have length phi(m); stored as given (already a canonical rep).
    static CycNum from_coeffs(long m, std::vector<Rat> coeffs);

    long order() const { return order_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;  // true iff the value lies in Q
    // The rational value; throws std::domain_error if not rational.
    Rat rational_value() const;

    // Image in Q(zeta_m2); requires order() | m2.
    CycNum embedded(long m2) const;
    // Complex conjugate (zeta -> zeta^{-1}).
    CycNum conj() const;
    // Multiplicative inverse; throws on zero.
    CycNum inverse() const;
    CycNum pow(long k) const;

    // Numeric image under zeta_m -> exp(2*pi*i/m).
    std::complex<double> to_complex() const;

    CycNum operator-() const;
    friend CycNum operator+(const CycNum& a, const CycNum& b);
    friend CycNum operator-(const CycNum& a, const CycNum& b);
    friend CycNum operator*(const CycNum& a, const CycNum& b);
    friend CycNum operator/(const CycNum& a, const CycNum& b);
    CycNum& operator+=(const CycNum& b) { return *this = *this + b; }
    CycNum& operator-=(const CycNum& b) { return *this = *this - b; }
    CycNum& operator*=(const CycNum& b) { return *this = *this * b; }
    CycNum& operator/=(const CycNum& b) { return *this = *this / b; }

    // Equality of field values (embeds to the lcm order when needed).
    friend bool operator==(const CycNum& a, const CycNum& b);
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    // Scalar fast paths.
    friend CycNum operator*(const Rat& s, const CycNum& a);
    friend CycNum operator*(const CycNum& a, const Rat& s) { return s * a; }

    std::string to_string() const;  // human-readable, e.g. "1/2 + 3*z20^4"

private:
    long order_;
    std::vector<Rat> coeffs_;
};

// Integer coefficients of Phi_m, ascending degree, monic.
const std::vector<Int>& cyclotomic_polynomial(long m);

}  // namespace etaforge
