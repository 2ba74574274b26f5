#pragma once

#include <complex>

#include "etaforge/characters.hpp"
#include "etaforge/cusps.hpp"
#include "etaforge/qseries.hpp"

namespace etaforge {

struct UnimodularMatrix {
    long a, b, c, d;  // ad - bc = 1

    static UnimodularMatrix identity() { return {1, 0, 0, 1}; }
    // Some gamma in SL2(Z) mapping infinity to the cusp (Bezout).
    static UnimodularMatrix cusp_map(const Cusp& s);

    std::complex<double> apply(std::complex<double> tau) const;
    bool check() const { return a * d - b * c == 1; }
};

// zeta^{d mod N}(2) = sum over m == d (mod N), m != 0, of 1/m^2, via
// Hurwitz zeta with Euler-Maclaurin tail correction.
double zeta_shifted(long d, long n, double target_abs_err);

// Constant term of (G2^{chi, conj chi} |_2 gamma): the finite triple
// character sum over 0 <= c, d, e < u; the quasi-modular correction term
// cancels in the chi-weighted combination and is never evaluated.
std::complex<double> g2_constant_term(const DirChar& chi, const UnimodularMatrix& gamma,
                                      double target_abs_err);

// w_s c^2 chi(-1) u^2/(8 pi^2) times the G2 constant term at s; within
// 1e-6 of the exact integer order for the supported characters.
double eta_chi_order_numeric(const DirChar& chi, const Cusp& s);

struct EvalResult {
    std::complex<double> value;
    double tail_bound;
};

// Partial sum of f at tau (Im tau > 0); the q^r prefactor is evaluated as
// exp(2 pi i r tau).  Throws std::domain_error when |q| >= 1.
EvalResult eval_series(const QSeries& f, std::complex<double> tau, long terms);

// nu-hat = f(gamma tau)/f(tau) for a weight-0 series.  Both evaluation
// points must have |q| <= max_abs_q (default 0.85) or std::domain_error.
std::complex<double> estimate_multiplier(const QSeries& f, const UnimodularMatrix& gamma,
                                         std::complex<double> tau, long truncation = 500,
                                         double max_abs_q = 0.85);

}  // namespace etaforge
