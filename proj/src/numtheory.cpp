#include "etaforge/numtheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace etaforge {

std::vector<std::pair<long, int>> factorize(long n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<long, int>> out;
    for (long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<long> divisors(long n) {
    std::vector<long> out{1};
    for (auto [p, e] : factorize(n)) {
        const std::size_t sz = out.size();
        long pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

long euler_phi(long n) {
    long phi = n;
    for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
    return phi;
}

int moebius(long n) {
    int sign = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

bool is_squarefree(long n) {
    for (auto [p, e] : factorize(n))
        if (e > 1) return false;
    return true;
}

long inverse_mod(long a, long m) {
    if (m < 1) throw std::invalid_argument("inverse_mod: modulus must be positive");
    a %= m;
    if (a < 0) a += m;
    // extended Euclid
    long r0 = m, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        long q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    if (r0 != 1) throw std::domain_error("inverse_mod: not invertible");
    s0 %= m;
    if (s0 < 0) s0 += m;
    return s0;
}

long pow_mod(long base, long exp, long m) {
    base %= m;
    if (base < 0) base += m;
    long acc = 1 % m;
    while (exp > 0) {
        if (exp & 1) acc = (acc * base) % m;
        base = (base * base) % m;
        exp >>= 1;
    }
    return acc;
}

}  // namespace etaforge
