#include "etaforge/analytic.hpp"

#include <cmath>
#include <stdexcept>

#include "etaforge/numtheory.hpp"

namespace etaforge {

namespace {
constexpr double kPi = 3.14159265358979323846;

// Hurwitz zeta(2, x), 0 < x <= 1, Euler-Maclaurin with cutoff M.
double hurwitz2(double x, long M) {
    double s = 0;
    for (long k = 0; k < M; ++k) s += 1.0 / ((k + x) * (k + x));
    const double y = M + x;
    // tail: 1/y + 1/(2y^2) + (1/6)y^-3 - (1/30)y^-5 + (1/42)y^-7
    s += 1.0 / y + 0.5 / (y * y) + (1.0 / 6.0) / (y * y * y) -
         (1.0 / 30.0) / std::pow(y, 5) + (1.0 / 42.0) / std::pow(y, 7);
    return s;
}
}  // namespace

UnimodularMatrix UnimodularMatrix::cusp_map(const Cusp& s) {
    if (s.is_infinity()) return identity();
    long a = s.a, c = s.c;
    if (c == 0) return identity();
    // find b, d with a*d - b*c = 1
    long d = c == 1 ? 1 : inverse_mod(a, c);
    if (c == 1) d = 1;
    long b = (a * d - 1) / c;
    UnimodularMatrix g{a, b, c, d};
    if (!g.check()) throw std::logic_error("cusp_map: Bezout failed");
    return g;
}

std::complex<double> UnimodularMatrix::apply(std::complex<double> tau) const {
    return (double(a) * tau + double(b)) / (double(c) * tau + double(d));
}

double zeta_shifted(long d, long n, double target_abs_err) {
    if (n < 1) throw std::invalid_argument("zeta_shifted: modulus must be positive");
    d %= n;
    if (d < 0) d += n;
    // cutoff 48 puts the Euler-Maclaurin truncation error far below 1e-12
    const long M = 48;
    if (d == 0) return kPi * kPi / (3.0 * n * n);
    (void)target_abs_err;
    return (hurwitz2((double)d / n, M) + hurwitz2((double)(n - d) / n, M)) / ((double)n * n);
}

std::complex<double> g2_constant_term(const DirChar& chi, const UnimodularMatrix& gamma,
                                      double target_abs_err) {
    const long u = chi.conductor();
    const long n2 = u * u;
    const double err = target_abs_err / (u * u * u);
    std::complex<double> acc = 0;
    for (long c = 0; c < u; ++c) {
        std::complex<double> xc = chi(c).to_complex();
        if (std::abs(xc) == 0) continue;
        for (long d = 0; d < u; ++d) {
            std::complex<double> xd = chi(d).to_complex();
            if (std::abs(xd) == 0) continue;
            for (long e = 0; e < u; ++e) {
                long cv = ((u * (gamma.c * e + c * gamma.a) + gamma.c * d) % n2 + n2) % n2;
                if (cv != 0) continue;  // delta factor
                long dv = ((u * (gamma.b * c + gamma.d * e) + gamma.d * d) % n2 + n2) % n2;
                acc += xc * xd * zeta_shifted(dv, n2, err);
            }
        }
    }
    return acc;
}

double eta_chi_order_numeric(const DirChar& chi, const Cusp& s) {
    if (!chi.is_real() || !chi.is_primitive())
        throw std::invalid_argument("eta_chi_order_numeric: chi must be real primitive");
    const long u = chi.conductor();
    if (s.is_infinity()) return 0.0;
    UnimodularMatrix gamma = UnimodularMatrix::cusp_map(s);
    std::complex<double> g2 = g2_constant_term(chi, gamma, 1e-10);
    const double w = (double)cusp_width(s);
    const double scale = w * (double)(s.c * s.c) * chi.parity() * (double)(u * u) /
                         (8.0 * kPi * kPi);
    return scale * g2.real();
}

EvalResult eval_series(const QSeries& f, std::complex<double> tau, long terms) {
    if (tau.imag() <= 0) throw std::domain_error("eval_series: Im tau must be positive");
    const std::complex<double> two_pi_i(0.0, 2.0 * kPi);
    std::complex<double> q = std::exp(two_pi_i * tau);
    if (std::abs(q) >= 1.0) throw std::domain_error("eval_series: |q| >= 1");
    terms = std::min(terms, f.precision());
    std::complex<double> acc = 0, qn = 1;
    double last = 0;
    for (long n = 0; n < terms; ++n) {
        const CycNum& c = f.coeff(n);
        if (!c.is_zero()) {
            std::complex<double> term = c.to_complex() * qn;
            acc += term;
            last = std::abs(term);
        }
        qn *= q;
    }
    // q^r as exp(2 pi i r tau): the modular convention for fractional powers
    double r = rat_to_double(f.leading_exponent());
    std::complex<double> prefac = std::exp(two_pi_i * tau * r);
    double aq = std::abs(q);
    double tail = last * aq / (1.0 - aq);
    return {prefac * acc, tail * std::abs(prefac)};
}

std::complex<double> estimate_multiplier(const QSeries& f, const UnimodularMatrix& gamma,
                                         std::complex<double> tau, long truncation,
                                         double max_abs_q) {
    if (!gamma.check()) throw std::invalid_argument("estimate_multiplier: det != 1");
    std::complex<double> tau2 = gamma.apply(tau);
    for (std::complex<double> t : {tau, tau2}) {
        double aq = std::exp(-2.0 * kPi * t.imag());
        if (aq > max_abs_q)
            throw std::domain_error("estimate_multiplier: |q| exceeds the admissible bound");
    }
    EvalResult num = eval_series(f, tau2, truncation);
    EvalResult den = eval_series(f, tau, truncation);
    return num.value / den.value;
}

}  // namespace etaforge
