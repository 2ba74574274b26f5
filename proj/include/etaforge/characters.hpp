#pragma once

#include <string>
#include <vector>

#include "etaforge/cyclotomic.hpp"

namespace etaforge {

// Decomposition of (Z/N)* into independent cyclic factors; gens[i] has
// order orders[i] and the factors are independent (CRT over prime powers).
struct UnitGroup {
    long modulus;
    std::vector<long> gens;
    std::vector<long> orders;
};

const UnitGroup& unit_group(long n);

// Dirichlet character mod N, stored as a full value table.  chi(a) = 0 for
// gcd(a, N) > 1; nonzero values are roots of unity.
class DirChar {
public:
    // Principal character mod N (chi(a) = 1 on units); DirChar(1) is the
    // modulus-1 character with chi(n) = 1 for every n >= 1.
    static DirChar principal(long modulus);
    // Legendre symbol (./p), p an odd prime.
    static DirChar kronecker(long p);
    // The non-principal character mod 4.
    static DirChar psi4();
    // chi(gens[i]) = zeta_order^{exps[i]} on the generators of a descriptor;
    // gens need not be the canonical unit_group generators but must generate
    // (Z/N)* and the assignment must be multiplicatively consistent.
    static DirChar from_generator_values(long modulus, long order,
                                         const std::vector<std::pair<long, long>>& gen_exps);

    long modulus() const { return modulus_; }
    // chi(a) for any integer a (reduced mod N; zero on non-units).
    const CycNum& operator()(long a) const;

    bool is_principal() const { return is_principal_; }
    bool is_real() const { return is_real_; }
    long order() const { return order_; }       // multiplicative order of chi
    int parity() const { return parity_; }      // chi(-1) as +1 / -1
    long conductor() const { return conductor_; }
    bool is_primitive() const { return conductor_ == modulus_; }

    DirChar conj() const;
    // The primitive character of modulus conductor() agreeing with chi on
    // residues coprime to N.
    DirChar primitive_core() const;
    // Character mod new_modulus induced by this one; modulus() must divide
    // new_modulus.
    DirChar induced(long new_modulus) const;

    // Canonical descriptor in the CLI mini-language: "one:N", "kronecker:p",
    // "psi4", or "chi:N:r:g1^k1,g2^k2,...".
    std::string descriptor() const;

    friend bool operator==(const DirChar& a, const DirChar& b);
    friend bool operator!=(const DirChar& a, const DirChar& b) { return !(a == b); }

private:
    DirChar() = default;
    void finalize();  // fills the cached conductor/parity/order/real flags

    long modulus_ = 1;
    std::vector<CycNum> values_;  // index a in [0, N)
    long conductor_ = 1;
    long order_ = 1;
    int parity_ = 1;
    bool is_principal_ = true;
    bool is_real_ = true;
};

struct PrimitiveDecomposition {
    DirChar core;
    long induced_modulus;
};

PrimitiveDecomposition primitive_decomposition(const DirChar& chi);

// g(n, chi) = sum over a coprime to u of chi(a) zeta_u^{a n}; g(chi) is n=1.
// Convention: the modulus-1 character has Gauss sum 1.
CycNum gauss_sum(long n, const DirChar& chi);
CycNum gauss_sum(const DirChar& chi);

// Q = u^2 * prod of primes p | N with p not dividing u (u = conductor).
long eta_chi_level(const DirChar& chi);

// All characters mod n (the full dual group), in a deterministic order.
std::vector<DirChar> enumerate_chars(long n);
// All primitive characters of conductor exactly u ([] for u = 2).
std::vector<DirChar> enumerate_primitive_chars(long u);

// Parse the descriptor mini-language understood by descriptor().
// Additionally accepts "spec*one:N" to induce any spec to modulus N.
DirChar char_from_spec(const std::string& spec);

}  // namespace etaforge
