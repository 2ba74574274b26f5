#pragma once

#include "etaforge/characters.hpp"
#include "etaforge/qseries.hpp"

namespace etaforge {

// Weight-2 Eisenstein series E2^{psi,phi} = delta(psi) L(-1,phi)
//                                           + 2 sum_{n>=1} sigma1^{psi,phi}(n) q^n.
struct EisensteinE2 {
    DirChar psi;
    DirChar phi;
    QSeries series;
    long level;  // uv
};

// sigma1^{psi,phi}(n) = sum_{d|n} psi(n/d) phi(d) d
CycNum sigma1(const DirChar& psi, const DirChar& phi, long n);

// L(-1, phi) = -B_{2,phi}/2 with B_{2,phi} = v sum_{a=1..v} phi(a) B2(a/v),
// B2(x) = x^2 - x + 1/6.
CycNum L_minus_one(const DirChar& phi);

EisensteinE2 e2_series(const DirChar& psi, const DirChar& phi, long precision);

// E_{2,t} = E2 - t (E2|V_t), E2 = E2^{1,1}; t > 1.
QSeries e2t_series(long t, long precision);

// For real chi of conductor u > 1: L(2, chi^2) = f * pi^2 with
// f = (1/6) prod_{p|u} (1 - p^{-2}); returned as the exact rational f.
Rat L2_real_pi2_factor(const DirChar& chi);

}  // namespace etaforge
