#include "etaforge/eisenstein.hpp"

#include <stdexcept>

#include "etaforge/numtheory.hpp"

namespace etaforge {

CycNum sigma1(const DirChar& psi, const DirChar& phi, long n) {
    if (n < 1) throw std::invalid_argument("sigma1: n must be positive");
    CycNum acc;
    for (long d : divisors(n)) {
        const CycNum& a = psi(n / d);
        if (a.is_zero()) continue;
        const CycNum& b = phi(d);
        if (b.is_zero()) continue;
        acc += Rat(d) * (a * b);
    }
    return acc;
}

CycNum L_minus_one(const DirChar& phi) {
    const long v = phi.modulus();
    CycNum b2;  // B_{2,phi}
    for (long a = 1; a <= v; ++a) {
        const CycNum& val = phi(a);
        if (val.is_zero()) continue;
        // v * B2(a/v) = a^2/v - a + v/6
        Rat term = make_rat(a * a, v) - Rat(a) + make_rat(v, 6);
        b2 += term * val;
    }
    return make_rat(-1, 2) * b2;
}

EisensteinE2 e2_series(const DirChar& psi, const DirChar& phi, long precision) {
    if (precision < 1) throw std::invalid_argument("e2_series: precision must be >= 1");
    std::vector<CycNum> c(precision);
    if (psi.is_principal()) c[0] = L_minus_one(phi);
    for (long n = 1; n < precision; ++n) c[n] = Rat(2) * sigma1(psi, phi, n);
    return {psi, phi, QSeries(1, Rat(0), std::move(c)), psi.modulus() * phi.modulus()};
}

QSeries e2t_series(long t, long precision) {
    if (t <= 1) throw std::invalid_argument("e2t_series: t must be > 1");
    DirChar one = DirChar::principal(1);
    QSeries e2 = e2_series(one, one, precision).series;
    return (e2 - Rat(t) * CycNum(1) * e2.v_operator(t)).truncated(precision);
}

Rat L2_real_pi2_factor(const DirChar& chi) {
    if (!chi.is_real()) throw std::invalid_argument("L2_real: character must be real");
    const long u = chi.conductor();
    if (u <= 1) throw std::invalid_argument("L2_real: conductor must exceed 1");
    Rat f = make_rat(1, 6);
    for (auto [p, e] : factorize(u)) f *= make_rat(p * p - 1, p * p);
    return f;
}

}  // namespace etaforge
