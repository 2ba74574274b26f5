#pragma once

#include <vector>

#include "etaforge/cyclotomic.hpp"

namespace etaforge {

// Truncated Puiseux q-series q^r * sum_{n<P} c_n q^n + O(q^{r+P}) with
// rational leading exponent r and coefficients in Q(zeta_m).  All
// coefficients are kept embedded at a common zeta order; precision is the
// number of known series coefficients and propagates as the min over
// operands.
class QSeries {
public:
    QSeries() : zeta_order_(1), lead_(0) {}
    QSeries(long zeta_order, Rat lead, std::vector<CycNum> coeffs);

    static QSeries zero(long precision);
    static QSeries constant(const CycNum& c, long precision);
    // q^{num/den} * 1 + O(...)
    static QSeries monomial(const Rat& exponent, long precision);

    long zeta_order() const { return zeta_order_; }
    const Rat& leading_exponent() const { return lead_; }
    long precision() const { return (long)coeffs_.size(); }
    const CycNum& coeff(long n) const { return coeffs_[n]; }
    const std::vector<CycNum>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    // Drops leading zero coefficients, bumping the exponent (loses one unit
    // of precision per dropped coefficient).
    QSeries normalized() const;
    QSeries truncated(long precision) const;

    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend QSeries operator/(const QSeries& a, const QSeries& b);
    QSeries operator-() const;
    friend QSeries operator*(const CycNum& s, const QSeries& a);

    QSeries int_pow(long k) const;
    // Formal log: requires leading exponent 0 and constant term 1.
    QSeries log() const;
    // Formal exp: requires leading exponent 0 and constant term 0.
    QSeries exp() const;
    // a^w := exp(w * log(a)); requires leading exponent 0, constant term 1.
    QSeries cyc_pow(const CycNum& w) const;

    // theta = q d/dq; the leading exponent contributes the rational shift.
    QSeries theta() const;
    // r + theta(S)/S for q^r S; requires a unit series part.
    QSeries q_log_derivative() const;
    // q -> q^t; precision becomes t*P (zero padding is exact).
    QSeries v_operator(long t) const;

    // Exact value equality over the common known range (leading exponents
    // aligned; series truncated to min precision).
    bool value_equals(const QSeries& other) const;
    // Structural equality (order, exponent, precision, coefficients).
    friend bool operator==(const QSeries& a, const QSeries& b);
    friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

    std::string to_string(long max_terms = 12) const;

private:
    long zeta_order_;
    Rat lead_;
    std::vector<CycNum> coeffs_;
};

}  // namespace etaforge
