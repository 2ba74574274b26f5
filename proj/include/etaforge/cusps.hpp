#pragma once

#include <string>
#include <vector>

#include "etaforge/characters.hpp"
#include "etaforge/rational.hpp"

namespace etaforge {

// Cusp a/c of Gamma_0(N) in lowest terms; infinity is 1/0.
struct Cusp {
    long a;
    long c;  // >= 0; 0 means infinity
    long level;

    bool is_infinity() const { return c == 0; }
    std::string to_string() const;
};

// Width N / gcd(c^2, N); infinity has width 1.
long cusp_width(const Cusp& s);

// Gamma_0(N)-equivalence of a1/c1 and a2/c2 (reduced fractions; c = 0 for
// infinity) via the standard congruence criterion.
bool cusp_equivalent(long a1, long c1, long a2, long c2, long n);

// One canonical representative per equivalence class; count matches
// sum_{d|N} phi(gcd(d, N/d)).
std::vector<Cusp> enumerate_cusps(long n);

long cusp_count(long n);

// Order of eta_chi at a cusp of Gamma_0(u^2), chi real primitive of
// conductor u > 1: chi(k) u^4/24 prod_{p|u}(p^2-1)/p^2 at cusps ~ k/u,
// zero elsewhere.  Throws if the exact rational fails to be an integer.
long eta_chi_cusp_order(const DirChar& chi, const Cusp& s);

}  // namespace etaforge
