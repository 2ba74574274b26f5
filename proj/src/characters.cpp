#include "etaforge/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "etaforge/numtheory.hpp"

namespace etaforge {

namespace {

long multiplicative_order(long a, long n) {
    long x = a % n, r = 1;
    while (x != 1) {
        x = (x * a) % n;
        if (++r > n) throw std::logic_error("multiplicative_order: not a unit");
    }
    return r;
}

long primitive_root(long q) {  // q an odd prime power
    const long phi = euler_phi(q);
    for (long g = 2; g < q; ++g) {
        if (gcd(g, q) != 1) continue;
        if (multiplicative_order(g, q) == phi) return g;
    }
    throw std::logic_error("primitive_root: none found");
}

long crt_lift(long residue, long q, long n) {
    // x == residue (mod q), x == 1 (mod n/q); gcd(q, n/q) == 1
    const long rest = n / q;
    if (rest == 1) return residue % n;
    const long inv_rest = inverse_mod(rest, q);
    long x = (1 + rest * (((residue - 1) % q + q) % q * inv_rest % q)) % n;
    return x;
}

// Root of unity zeta_R^e with the order reduced as far as possible.
CycNum root_of_unity(long e, long R) {
    e %= R;
    if (e < 0) e += R;
    if (e == 0) return CycNum(1);
    if (2 * e == R) return CycNum(-1);
    const long g = gcd(e, R);
    return CycNum::zeta_pow(R / g, e / g);
}

// Value table (as exponents of zeta_R) from generator assignments, by
// multiplicative closure.  -1 marks non-units.
std::vector<long> closure_table(long n, long R,
                                const std::vector<std::pair<long, long>>& gen_exps) {
    std::vector<long> exps(std::max(n, 1L), -1);
    for (auto [g, e] : gen_exps) {
        if (gcd(g % n, n) != 1) throw std::invalid_argument("character generator is not a unit");
        (void)e;
    }
    exps[1 % n] = 0;
    std::queue<long> todo;
    todo.push(1 % n);
    while (!todo.empty()) {
        long a = todo.front();
        todo.pop();
        for (auto [g, e] : gen_exps) {
            long b = (a * (g % n)) % n;
            long ne = (exps[a] + e) % R;
            if (ne < 0) ne += R;
            if (exps[b] == -1) {
                exps[b] = ne;
                todo.push(b);
            } else if (exps[b] != ne) {
                throw std::invalid_argument("inconsistent character generator assignment");
            }
        }
    }
    for (long a = n == 1 ? 0 : 1; a < n; ++a)
        if (gcd(a, n) == 1 && exps[a] == -1)
            throw std::invalid_argument("character generators do not generate (Z/N)*");
    return exps;
}

}  // namespace

const UnitGroup& unit_group(long n) {
    static std::map<long, UnitGroup> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    UnitGroup ug;
    ug.modulus = n;
    for (auto [p, e] : factorize(n)) {
        long q = 1;
        for (int i = 0; i < e; ++i) q *= p;
        if (p == 2) {
            if (e == 1) continue;  // trivial factor
            if (e == 2) {
                ug.gens.push_back(crt_lift(3, 4, n));
                ug.orders.push_back(2);
            } else {
                ug.gens.push_back(crt_lift(q - 1, q, n));  // -1 mod 2^e
                ug.orders.push_back(2);
                ug.gens.push_back(crt_lift(5, q, n));
                ug.orders.push_back(q / 4);
            }
        } else {
            ug.gens.push_back(crt_lift(primitive_root(q), q, n));
            ug.orders.push_back(euler_phi(q));
        }
    }
    auto [pos, ok] = cache.emplace(n, std::move(ug));
    return pos->second;
}

void DirChar::finalize() {
    const long n = modulus_;
    is_principal_ = true;
    is_real_ = true;
    for (long a = 0; a < (long)values_.size(); ++a) {
        if (n > 1 && gcd(a, n) != 1) continue;
        if (!(values_[a] == CycNum(1))) is_principal_ = false;
        if (!values_[a].is_rational()) is_real_ = false;
    }
    parity_ = (n <= 2) ? 1 : (values_[n - 1] == CycNum(1) ? 1 : -1);
    // order: smallest r with chi^r principal
    order_ = 1;
    std::vector<CycNum> cur = values_;
    auto all_one = [&](const std::vector<CycNum>& v) {
        for (long a = 0; a < (long)v.size(); ++a) {
            if (n > 1 && gcd(a, n) != 1) continue;
            if (!(v[a] == CycNum(1))) return false;
        }
        return true;
    };
    while (!all_one(cur)) {
        for (long a = 0; a < (long)cur.size(); ++a) {
            if (n > 1 && gcd(a, n) != 1) continue;
            cur[a] *= values_[a];
        }
        ++order_;
    }
    // conductor: smallest d | N with chi trivial on units congruent to 1 mod d
    conductor_ = n;
    for (long d : divisors(n)) {
        bool ok = true;
        for (long a = 1; a < n && ok; ++a) {
            if (gcd(a, n) != 1 || a % d != 1 % d) continue;
            if (!(values_[a] == CycNum(1))) ok = false;
        }
        if (ok) {
            conductor_ = d;
            break;
        }
    }
    if (n == 1) conductor_ = 1;
}

DirChar DirChar::principal(long modulus) {
    if (modulus < 1) throw std::invalid_argument("principal: modulus must be positive");
    DirChar chi;
    chi.modulus_ = modulus;
    chi.values_.assign(std::max(modulus, 1L), CycNum());
    if (modulus == 1) {
        chi.values_[0] = CycNum(1);
    } else {
        for (long a = 0; a < modulus; ++a)
            if (gcd(a, modulus) == 1) chi.values_[a] = CycNum(1);
    }
    chi.finalize();
    return chi;
}

DirChar DirChar::kronecker(long p) {
    if (p < 3 || p % 2 == 0 || factorize(p).size() != 1 || factorize(p)[0].second != 1)
        throw std::invalid_argument("kronecker: expects an odd prime");
    DirChar chi;
    chi.modulus_ = p;
    chi.values_.assign(p, CycNum());
    // quadratic residues by direct squaring
    std::vector<bool> qr(p, false);
    for (long a = 1; a < p; ++a) qr[(a * a) % p] = true;
    for (long a = 1; a < p; ++a) chi.values_[a] = CycNum(qr[a] ? 1 : -1);
    chi.finalize();
    return chi;
}

DirChar DirChar::psi4() { return from_generator_values(4, 2, {{3, 1}}); }

DirChar DirChar::from_generator_values(long modulus, long order,
                                       const std::vector<std::pair<long, long>>& gen_exps) {
    if (modulus < 1 || order < 1) throw std::invalid_argument("bad character parameters");
    auto exps = closure_table(modulus, order, gen_exps);
    DirChar chi;
    chi.modulus_ = modulus;
    chi.values_.assign(std::max(modulus, 1L), CycNum());
    for (long a = 0; a < (long)exps.size(); ++a)
        if (exps[a] >= 0) chi.values_[a] = root_of_unity(exps[a], order);
    chi.finalize();
    return chi;
}

const CycNum& DirChar::operator()(long a) const {
    long idx = a % modulus_;
    if (idx < 0) idx += modulus_;
    return values_[idx];
}

DirChar DirChar::conj() const {
    DirChar chi = *this;
    for (auto& v : chi.values_) v = v.conj();
    return chi;  // cached invariants unchanged by conjugation
}

DirChar DirChar::primitive_core() const {
    const long u = conductor_;
    if (u == modulus_) return *this;
    DirChar core;
    core.modulus_ = u;
    core.values_.assign(std::max(u, 1L), CycNum());
    if (u == 1) {
        core.values_[0] = CycNum(1);
    } else {
        for (long a = 0; a < u; ++a) {
            if (gcd(a, u) != 1) continue;
            long b = a;
            while (gcd(b, modulus_) != 1) b += u;  // lift to a unit mod N
            core.values_[a] = values_[b % modulus_];
        }
    }
    core.finalize();
    return core;
}

DirChar DirChar::induced(long new_modulus) const {
    if (new_modulus % modulus_ != 0)
        throw std::invalid_argument("induced: modulus must be a multiple of the current one");
    DirChar chi;
    chi.modulus_ = new_modulus;
    chi.values_.assign(std::max(new_modulus, 1L), CycNum());
    if (new_modulus == 1) {
        chi.values_[0] = CycNum(1);
    } else {
        for (long a = 0; a < new_modulus; ++a)
            if (gcd(a, new_modulus) == 1) chi.values_[a] = (*this)(a);
    }
    chi.finalize();
    return chi;
}

PrimitiveDecomposition primitive_decomposition(const DirChar& chi) {
    return {chi.primitive_core(), chi.modulus()};
}

CycNum gauss_sum(long n, const DirChar& chi) {
    const long u = chi.modulus();
    if (u == 1) return CycNum(1);
    CycNum acc;
    for (long a = 1; a < u; ++a) {
        if (gcd(a, u) != 1) continue;
        acc += chi(a) * CycNum::zeta_pow(u, a * (n % u));
    }
    return acc;
}

CycNum gauss_sum(const DirChar& chi) { return gauss_sum(1, chi); }

long eta_chi_level(const DirChar& chi) {
    const long u = chi.conductor();
    long q = u * u;
    for (auto [p, e] : factorize(chi.modulus()))
        if (u % p != 0) q *= p;
    return q;
}

std::vector<DirChar> enumerate_chars(long n) {
    const UnitGroup& ug = unit_group(n);
    const long k = (long)ug.gens.size();
    long R = 1;
    for (long d : ug.orders) R = lcm(R, d);
    std::vector<DirChar> out;
    std::vector<long> idx(k, 0);
    while (true) {
        std::vector<std::pair<long, long>> gen_exps;
        for (long i = 0; i < k; ++i)
            gen_exps.emplace_back(ug.gens[i], idx[i] * (R / ug.orders[i]));
        out.push_back(DirChar::from_generator_values(n, R, gen_exps));
        long i = k - 1;
        for (; i >= 0; --i) {
            if (++idx[i] < ug.orders[i]) break;
            idx[i] = 0;
        }
        if (i < 0) break;
    }
    return out;
}

std::vector<DirChar> enumerate_primitive_chars(long u) {
    std::vector<DirChar> out;
    for (auto& chi : enumerate_chars(u))
        if (chi.conductor() == u) out.push_back(chi);
    return out;
}

std::string DirChar::descriptor() const {
    if (is_principal_) return "one:" + std::to_string(modulus_);
    if (is_primitive() && order_ == 2 && modulus_ % 2 == 1) {
        auto f = factorize(modulus_);
        if (f.size() == 1 && f[0].second == 1) return "kronecker:" + std::to_string(modulus_);
    }
    if (modulus_ == 4) return "psi4";
    std::ostringstream os;
    os << "chi:" << modulus_ << ":" << order_ << ":";
    const UnitGroup& ug = unit_group(modulus_);
    bool first = true;
    for (long g : ug.gens) {
        long k = -1;
        for (long j = 0; j < order_; ++j) {
            if ((*this)(g) == root_of_unity(j, order_)) {
                k = j;
                break;
            }
        }
        if (!first) os << ",";
        first = false;
        os << g << "^" << k;
    }
    return os.str();
}

bool operator==(const DirChar& a, const DirChar& b) {
    return a.modulus_ == b.modulus_ && a.values_ == b.values_;
}

DirChar char_from_spec(const std::string& spec) {
    auto star = spec.find('*');
    if (star != std::string::npos) {
        DirChar base = char_from_spec(spec.substr(0, star));
        std::string rest = spec.substr(star + 1);
        if (rest.rfind("one:", 0) != 0)
            throw std::invalid_argument("bad induced-character spec: " + spec);
        long n = std::stol(rest.substr(4));
        return base.induced(lcm(base.modulus(), n));
    }
    if (spec == "psi4") return DirChar::psi4();
    if (spec.rfind("one:", 0) == 0) return DirChar::principal(std::stol(spec.substr(4)));
    if (spec.rfind("kronecker:", 0) == 0) return DirChar::kronecker(std::stol(spec.substr(10)));
    if (spec.rfind("chi:", 0) == 0) {
        std::string body = spec.substr(4);
        std::istringstream is(body);
        std::string mod_s, ord_s, gens_s;
        if (!std::getline(is, mod_s, ':') || !std::getline(is, ord_s, ':') ||
            !std::getline(is, gens_s))
            throw std::invalid_argument("bad character spec: " + spec);
        long n = std::stol(mod_s), r = std::stol(ord_s);
        std::vector<std::pair<long, long>> gen_exps;
        std::istringstream gs(gens_s);
        std::string item;
        while (std::getline(gs, item, ',')) {
            auto caret = item.find('^');
            if (caret == std::string::npos)
                throw std::invalid_argument("bad generator assignment: " + item);
            gen_exps.emplace_back(std::stol(item.substr(0, caret)),
                                  std::stol(item.substr(caret + 1)));
        }
        return DirChar::from_generator_values(n, r, gen_exps);
    }
    throw std::invalid_argument("unknown character spec: " + spec);
}

}  // namespace etaforge
