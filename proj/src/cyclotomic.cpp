#include "etaforge/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "etaforge/numtheory.hpp"

namespace etaforge {

namespace {

// Exact division of integer polynomials (ascending coefficients), used to
// build Phi_m = (x^m - 1) / prod_{d|m, d<m} Phi_d.
std::vector<Int> poly_divide_exact(std::vector<Int> num, const std::vector<Int>& den) {
    const std::size_t dn = num.size() - 1, dd = den.size() - 1;
    std::vector<Int> quot(dn - dd + 1);
    for (std::size_t i = dn + 1; i-- > dd;) {
        Int q = num[i] / den.back();  // den is monic (+/-1 lead in our usage)
        quot[i - dd] = q;
        if (q != 0)
            for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= q * den[j];
    }
    return quot;
}

struct FieldData {
    long phi;
    std::vector<Int> cyclo;                   // Phi_m, ascending, monic
    std::vector<std::vector<Int>> xpow;       // x^k mod Phi_m for 0 <= k < m
    std::vector<std::vector<Int>> high;       // x^j mod Phi_m for phi <= j <= 2phi-2
};

std::vector<Int> compute_cyclo(long m) {
    if (m == 1) return {Int(-1), Int(1)};  // x - 1
    std::vector<Int> num(m + 1);
    num[0] = -1;
    num[m] = 1;
    std::vector<Int> acc{Int(1)};
    for (long d : divisors(m)) {
        if (d == m) continue;
        const auto& phid = cyclotomic_polynomial(d);
        std::vector<Int> next(acc.size() + phid.size() - 1);
        for (std::size_t i = 0; i < acc.size(); ++i)
            for (std::size_t j = 0; j < phid.size(); ++j) next[i + j] += acc[i] * phid[j];
        acc = std::move(next);
    }
    return poly_divide_exact(std::move(num), acc);
}

const FieldData& field_data(long m) {
    static std::map<long, FieldData> cache;
    static std::recursive_mutex mu;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    FieldData fd;
    fd.phi = euler_phi(m);
    fd.cyclo = compute_cyclo(m);
    const long phi = fd.phi;
    // x^{phi} mod Phi = -(c_0 + c_1 x + ... + c_{phi-1} x^{phi-1}); then the
    // next rows follow the shift-and-reduce recurrence.
    std::vector<std::vector<Int>> high;
    if (phi >= 1) {
        std::vector<Int> row(phi);
        for (long i = 0; i < phi; ++i) row[i] = -fd.cyclo[i];
        high.push_back(row);
        for (long j = phi + 1; j <= 2 * phi - 2; ++j) {
            std::vector<Int> next(phi);
            const auto& prev = high.back();
            Int top = prev[phi - 1];
            for (long i = phi - 1; i >= 1; --i) next[i] = prev[i - 1];
            next[0] = 0;
            if (top != 0)
                for (long i = 0; i < phi; ++i) next[i] += top * high[0][i];
            high.push_back(std::move(next));
        }
    }
    fd.high = std::move(high);
    fd.xpow.resize(m);
    {
        std::vector<Int> cur(phi);
        cur[0] = 1;
        for (long k = 0; k < m; ++k) {
            fd.xpow[k] = cur;
            // multiply by x, reduce
            Int top = cur[phi - 1];
            for (long i = phi - 1; i >= 1; --i) cur[i] = cur[i - 1];
            cur[0] = 0;
            if (top != 0)
                for (long i = 0; i < phi; ++i) cur[i] += top * fd.high[0][i];
        }
    }
    auto [pos, ok] = cache.emplace(m, std::move(fd));
    return pos->second;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(long m) { return field_data(m).cyclo; }

CycNum::CycNum() : order_(1), coeffs_(1) {}

CycNum::CycNum(const Rat& r) : order_(1), coeffs_{r} {}

CycNum::CycNum(long n) : order_(1), coeffs_{Rat(n)} {}

CycNum CycNum::zeta(long m) { return zeta_pow(m, 1); }

CycNum CycNum::zeta_pow(long m, long k) {
    if (m < 1) throw std::invalid_argument("zeta_pow: order must be positive");
    k %= m;
    if (k < 0) k += m;
    const auto& fd = field_data(m);
    std::vector<Rat> c(fd.phi);
    for (long i = 0; i < fd.phi; ++i) c[i] = Rat(fd.xpow[k][i]);
    CycNum out;
    out.order_ = m;
    out.coeffs_ = std::move(c);
    return out;
}

CycNum CycNum::from_coeffs(long m, std::vector<Rat> coeffs) {
    if (m < 1) throw std::invalid_argument("from_coeffs: order must be positive");
    if ((long)coeffs.size() != euler_phi(m))
        throw std::invalid_argument("from_coeffs: coefficient vector must have length phi(m)");
    CycNum out;
    out.order_ = m;
    out.coeffs_ = std::move(coeffs);
    return out;
}

bool CycNum::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rat CycNum::rational_value() const {
    if (!is_rational()) throw std::domain_error("rational_value: not a rational number");
    return coeffs_[0];
}

CycNum CycNum::embedded(long m2) const {
    if (m2 == order_) return *this;
    if (m2 % order_ != 0)
        throw std::invalid_argument("embedded: current order must divide target order");
    const long step = m2 / order_;
    const auto& fd = field_data(m2);
    std::vector<Rat> out(fd.phi);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        const auto& row = fd.xpow[(long)k * step % m2];
        for (long i = 0; i < fd.phi; ++i)
            if (row[i] != 0) out[i] += coeffs_[k] * Rat(row[i]);
    }
    return from_coeffs(m2, std::move(out));
}

CycNum CycNum::conj() const {
    const auto& fd = field_data(order_);
    std::vector<Rat> out(fd.phi);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        const auto& row = fd.xpow[k == 0 ? 0 : order_ - (long)k];
        for (long i = 0; i < fd.phi; ++i)
            if (row[i] != 0) out[i] += coeffs_[k] * Rat(row[i]);
    }
    return from_coeffs(order_, std::move(out));
}

CycNum CycNum::operator-() const {
    CycNum out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

CycNum operator+(const CycNum& a, const CycNum& b) {
    if (a.order_ == b.order_) {
        CycNum out = a;
        for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += b.coeffs_[i];
        return out;
    }
    const long m = lcm(a.order_, b.order_);
    return a.embedded(m) + b.embedded(m);
}

CycNum operator-(const CycNum& a, const CycNum& b) { return a + (-b); }

CycNum operator*(const Rat& s, const CycNum& a) {
    CycNum out = a;
    for (auto& c : out.coeffs_) c *= s;
    return out;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
    // scalar fast paths keep rational-coefficient work out of Q(zeta_m)
    if (a.is_rational()) return a.coeffs_[0] * b;
    if (b.is_rational()) return b.coeffs_[0] * a;
    if (a.order_ != b.order_) {
        const long m = lcm(a.order_, b.order_);
        return a.embedded(m) * b.embedded(m);
    }
    const long m = a.order_;
    const auto& fd = field_data(m);
    const long phi = fd.phi;
    std::vector<Rat> prod(2 * phi - 1);
    for (long i = 0; i < phi; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (long j = 0; j < phi; ++j)
            if (b.coeffs_[j] != 0) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    std::vector<Rat> out(prod.begin(), prod.begin() + phi);
    for (long j = phi; j <= 2 * phi - 2; ++j) {
        if (prod[j] == 0) continue;
        const auto& row = fd.high[j - phi];
        for (long i = 0; i < phi; ++i)
            if (row[i] != 0) out[i] += prod[j] * Rat(row[i]);
    }
    return CycNum::from_coeffs(m, std::move(out));
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw std::domain_error("inverse: division by zero");
    if (is_rational()) return CycNum(Rat(1) / coeffs_[0]);
    // extended Euclid in Q[x] against Phi_m; Phi_m is irreducible so the
    // gcd is a nonzero constant.
    const auto& fd = field_data(order_);
    std::vector<Rat> r0(fd.cyclo.size()), r1 = coeffs_, s0, s1{Rat(1)};
    for (std::size_t i = 0; i < fd.cyclo.size(); ++i) r0[i] = Rat(fd.cyclo[i]);
    auto deg = [](const std::vector<Rat>& p) {
        for (std::size_t i = p.size(); i-- > 0;)
            if (p[i] != 0) return (long)i;
        return -1L;
    };
    while (deg(r1) > 0) {
        // r0 = q*r1 + rem
        std::vector<Rat> rem = r0, q(std::max<long>(deg(r0) - deg(r1) + 1, 1));
        long d1 = deg(r1);
        for (long i = deg(rem); i >= d1; --i) {
            if (rem[i] == 0) continue;
            Rat f = rem[i] / r1[d1];
            q[i - d1] = f;
            for (long j = 0; j <= d1; ++j) rem[i - d1 + j] -= f * r1[j];
        }
        // s_new = s0 - q*s1
        std::vector<Rat> snew = s0;
        snew.resize(std::max(snew.size(), q.size() + s1.size() - 1));
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < s1.size(); ++j) snew[i + j] -= q[i] * s1[j];
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(snew);
    }
    long d = deg(r1);
    if (d != 0) throw std::domain_error("inverse: division by zero");
    Rat unit = r1[0];
    std::vector<Rat> out(fd.phi);
    for (std::size_t i = 0; i < s1.size() && i < out.size(); ++i) out[i] = s1[i] / unit;
    return from_coeffs(order_, std::move(out));
}

CycNum operator/(const CycNum& a, const CycNum& b) {
    if (b.is_rational()) {
        if (b.coeffs_[0] == 0) throw std::domain_error("division by zero");
        return (Rat(1) / b.coeffs_[0]) * a;
    }
    if (a.order_ != b.order_) {
        const long m = lcm(a.order_, b.order_);
        return a.embedded(m) / b.embedded(m);
    }
    return a * b.inverse();
}

CycNum CycNum::pow(long k) const {
    if (k == 0) return CycNum(1);
    CycNum base = k < 0 ? inverse() : *this;
    unsigned long e = k < 0 ? -(unsigned long)k : (unsigned long)k;
    CycNum acc(1);
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

bool operator==(const CycNum& a, const CycNum& b) {
    if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
    const long m = lcm(a.order_, b.order_);
    return a.embedded(m).coeffs_ == b.embedded(m).coeffs_;
}

std::complex<double> CycNum::to_complex() const {
    long double re = 0, im = 0;
    const long double two_pi = 6.283185307179586476925286766559L;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        long double c = (long double)coeffs_[k].get_d();
        long double ang = two_pi * (long double)k / (long double)order_;
        re += c * std::cos(ang);
        im += c * std::sin(ang);
    }
    return {(double)re, (double)im};
}

std::string CycNum::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << rat_to_string(coeffs_[k]);
        if (k > 0) os << "*z" << order_ << "^" << k;
    }
    return os.str();
}

}  // namespace etaforge
