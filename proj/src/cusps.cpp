#include "etaforge/cusps.hpp"

#include <stdexcept>

#include "etaforge/numtheory.hpp"

namespace etaforge {

std::string Cusp::to_string() const {
    if (is_infinity()) return "oo";
    if (c == 1) return std::to_string(a);
    return std::to_string(a) + "/" + std::to_string(c);
}

long cusp_width(const Cusp& s) {
    if (s.is_infinity()) return 1;
    return s.level / gcd(s.c * s.c, s.level);
}

bool cusp_equivalent(long a1, long c1, long a2, long c2, long n) {
    // Infinity is the class of 1/N.
    if (c1 == 0) { a1 = 1; c1 = n; }
    if (c2 == 0) { a2 = 1; c2 = n; }
    a1 %= c1; if (a1 < 0) a1 += c1;
    a2 %= c2; if (a2 < 0) a2 += c2;
    if (gcd(a1 == 0 ? c1 : a1, c1) != 1 && c1 != 1)
        throw std::invalid_argument("cusp_equivalent: fractions must be reduced");
    // a1/c1 ~ a2/c2 on Gamma_0(N) iff s1 c2 == s2 c1 (mod gcd(c1 c2, N))
    // with a_i s_i == 1 (mod c_i).
    long s1 = c1 == 1 ? 0 : inverse_mod(a1, c1);
    long s2 = c2 == 1 ? 0 : inverse_mod(a2, c2);
    long g = gcd(c1 * c2, n);
    return ((s1 * c2 - s2 * c1) % g + g) % g == 0;
}

long cusp_count(long n) {
    long total = 0;
    for (long d : divisors(n)) total += euler_phi(gcd(d, n / d));
    return total;
}

std::vector<Cusp> enumerate_cusps(long n) {
    if (n < 1) throw std::invalid_argument("enumerate_cusps: level must be positive");
    std::vector<Cusp> out;
    for (long c : divisors(n)) {
        if (c == n) {
            out.push_back({1, 0, n});  // infinity
            continue;
        }
        const long g = gcd(c, n / c);
        std::vector<Cusp> found;
        const long bound = 4 * c * g + 10;
        for (long a = 0; (long)found.size() < euler_phi(g); ++a) {
            if (a > bound) throw std::logic_error("enumerate_cusps: representative search overran");
            if (c > 1 && gcd(a, c) != 1) continue;
            if (c == 1 && a > 0) break;  // the single class 0/1
            bool fresh = true;
            for (const auto& f : found)
                if (cusp_equivalent(a, c, f.a, f.c, n)) { fresh = false; break; }
            if (fresh) found.push_back({a, c, n});
        }
        out.insert(out.end(), found.begin(), found.end());
    }
    return out;
}

long eta_chi_cusp_order(const DirChar& chi, const Cusp& s) {
    if (!chi.is_real() || !chi.is_primitive() || chi.conductor() <= 1)
        throw std::invalid_argument("eta_chi_cusp_order: chi must be real primitive, u > 1");
    const long u = chi.conductor();
    if (s.level != u * u)
        throw std::invalid_argument("eta_chi_cusp_order: cusp must live on Gamma_0(u^2)");
    for (long k = 1; k < u; ++k) {
        if (gcd(k, u) != 1) continue;
        if (!cusp_equivalent(s.a, s.c, k, u, s.level)) continue;
        Rat val = chi(k).rational_value() * make_rat(1, 24);
        Rat u4(u);
        u4 = u4 * u4 * u4 * u4;
        val *= u4;
        for (auto [p, e] : factorize(u)) val *= make_rat(p * p - 1, p * p);
        if (!is_integer(val))
            throw std::logic_error("eta_chi_cusp_order: non-integral order (bug)");
        return val.get_num().get_si();
    }
    return 0;
}

}  // namespace etaforge
