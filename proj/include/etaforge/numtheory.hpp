#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace etaforge {

using std::gcd;
using std::lcm;

// Prime factorization as (p, exponent) pairs, p ascending.
std::vector<std::pair<long, int>> factorize(long n);

std::vector<long> divisors(long n);

long euler_phi(long n);

int moebius(long n);

bool is_squarefree(long n);

// x with a*x == 1 (mod m), m >= 1.  Throws if gcd(a, m) != 1.
long inverse_mod(long a, long m);

long pow_mod(long base, long exp, long m);

}  // namespace etaforge
