#include "etaforge/qseries.hpp"

#include <sstream>
#include <stdexcept>

#include "etaforge/numtheory.hpp"

namespace etaforge {

namespace {

long common_order(const std::vector<CycNum>& coeffs, long base) {
    long m = base;
    for (const auto& c : coeffs) m = lcm(m, c.order());
    return m;
}

}  // namespace

QSeries::QSeries(long zeta_order, Rat lead, std::vector<CycNum> coeffs)
    : zeta_order_(zeta_order), lead_(std::move(lead)), coeffs_(std::move(coeffs)) {
    zeta_order_ = common_order(coeffs_, zeta_order_);
    for (auto& c : coeffs_)
        if (c.order() != zeta_order_) c = c.embedded(zeta_order_);
}

QSeries QSeries::zero(long precision) {
    return QSeries(1, Rat(0), std::vector<CycNum>(std::max(precision, 0L)));
}

QSeries QSeries::constant(const CycNum& c, long precision) {
    QSeries s = zero(precision);
    if (precision > 0) {
        s.coeffs_[0] = c;
        s.zeta_order_ = c.order();
    }
    return s;
}

QSeries QSeries::monomial(const Rat& exponent, long precision) {
    QSeries s = constant(CycNum(1), precision);
    s.lead_ = exponent;
    return s;
}

bool QSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

QSeries QSeries::normalized() const {
    long shift = 0;
    while (shift < (long)coeffs_.size() && coeffs_[shift].is_zero()) ++shift;
    if (shift == 0) return *this;
    QSeries out;
    out.zeta_order_ = zeta_order_;
    out.lead_ = lead_ + shift;
    out.coeffs_.assign(coeffs_.begin() + shift, coeffs_.end());
    return out;
}

QSeries QSeries::truncated(long precision) const {
    if (precision >= (long)coeffs_.size()) return *this;
    QSeries out = *this;
    out.coeffs_.resize(std::max(precision, 0L));
    return out;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    // align leading exponents; their difference must be an integer
    Rat diff = b.lead_ - a.lead_;
    if (!is_integer(diff)) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        throw std::invalid_argument("QSeries add: incompatible leading exponents");
    }
    long d = (long)diff.get_num().get_si();
    if (d < 0) return b + a;
    // value known through min(ra + Pa, ra + d + Pb)
    long prec = std::min((long)a.coeffs_.size(), d + (long)b.coeffs_.size());
    std::vector<CycNum> out(a.coeffs_.begin(), a.coeffs_.begin() + prec);
    for (long n = d; n < prec; ++n) out[n] += b.coeffs_[n - d];
    return QSeries(lcm(a.zeta_order_, b.zeta_order_), a.lead_, std::move(out));
}

QSeries QSeries::operator-() const {
    QSeries out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const CycNum& s, const QSeries& a) {
    QSeries out = a;
    for (auto& c : out.coeffs_) c = s * c;
    out.zeta_order_ = lcm(out.zeta_order_, s.order());
    return out;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    const long prec = std::min(a.precision(), b.precision());
    std::vector<CycNum> out(std::max(prec, 0L));
    for (long i = 0; i < prec; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (long j = 0; j + i < prec; ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return QSeries(lcm(a.zeta_order_, b.zeta_order_), a.lead_ + b.lead_, std::move(out));
}

QSeries operator/(const QSeries& a, const QSeries& b) {
    QSeries bn = b.normalized();
    if (bn.precision() == 0 || bn.coeff(0).is_zero())
        throw std::domain_error("QSeries div: divisor has no unit series part");
    const long prec = std::min(a.precision(), bn.precision());
    CycNum inv0 = bn.coeff(0).inverse();
    std::vector<CycNum> out(std::max(prec, 0L));
    for (long n = 0; n < prec; ++n) {
        CycNum acc = n < a.precision() ? a.coeff(n) : CycNum();
        for (long k = 1; k <= n; ++k) {
            if (bn.coeff(k).is_zero() || out[n - k].is_zero()) continue;
            acc -= bn.coeff(k) * out[n - k];
        }
        out[n] = acc * inv0;
    }
    return QSeries(lcm(a.zeta_order_, bn.zeta_order_), a.lead_ - bn.lead_, std::move(out));
}

QSeries QSeries::int_pow(long k) const {
    if (k == 0) return constant(CycNum(1), precision());
    QSeries base = *this;
    if (k < 0) base = constant(CycNum(1), precision()) / base;
    unsigned long e = k < 0 ? -(unsigned long)k : (unsigned long)k;
    QSeries acc = constant(CycNum(1), precision());
    while (e) {
        if (e & 1) acc = acc * base;
        base = e > 1 ? base * base : base;
        e >>= 1;
    }
    return acc;
}

QSeries QSeries::log() const {
    if (lead_ != 0 || precision() == 0 || !(coeffs_[0] == CycNum(1)))
        throw std::domain_error("QSeries log: requires exponent 0 and constant term 1");
    // F = exp(S) <=> n f_n = sum_{k<=n} k s_k f_{n-k}
    const long P = precision();
    std::vector<CycNum> s(P);
    for (long n = 1; n < P; ++n) {
        CycNum acc = Rat(n) * coeffs_[n];
        for (long k = 1; k < n; ++k) {
            if (s[k].is_zero() || coeffs_[n - k].is_zero()) continue;
            acc -= (Rat(k) * s[k]) * coeffs_[n - k];
        }
        s[n] = make_rat(1, n) * acc;
    }
    return QSeries(zeta_order_, Rat(0), std::move(s));
}

QSeries QSeries::exp() const {
    if (lead_ != 0 || (precision() > 0 && !coeffs_[0].is_zero()))
        throw std::domain_error("QSeries exp: requires exponent 0 and constant term 0");
    const long P = precision();
    std::vector<CycNum> f(std::max(P, 0L));
    if (P > 0) f[0] = CycNum(1);
    for (long n = 1; n < P; ++n) {
        CycNum acc;
        for (long k = 1; k <= n; ++k) {
            if (coeffs_[k].is_zero() || f[n - k].is_zero()) continue;
            acc += (Rat(k) * coeffs_[k]) * f[n - k];
        }
        f[n] = make_rat(1, n) * acc;
    }
    return QSeries(zeta_order_, Rat(0), std::move(f));
}

QSeries QSeries::cyc_pow(const CycNum& w) const { return (w * log()).exp(); }

QSeries QSeries::theta() const {
    QSeries out = *this;
    for (long n = 0; n < out.precision(); ++n)
        out.coeffs_[n] = (lead_ + n) * out.coeffs_[n];
    return out;
}

QSeries QSeries::q_log_derivative() const {
    QSeries f = normalized();
    if (f.precision() == 0 || f.coeff(0).is_zero())
        throw std::domain_error("q_log_derivative: series part is not a unit");
    QSeries unit(f.zeta_order_, Rat(0), f.coeffs_);  // strip the q^r prefactor
    QSeries g = unit.theta() / unit;
    g.coeffs_[0] += CycNum(f.lead_);
    return g;
}

QSeries QSeries::v_operator(long t) const {
    if (t < 1) throw std::invalid_argument("v_operator: t must be positive");
    if (t == 1) return *this;
    QSeries out;
    out.zeta_order_ = zeta_order_;
    out.lead_ = lead_ * t;
    out.coeffs_.assign(precision() * t, CycNum());
    for (long n = 0; n < precision(); ++n) out.coeffs_[n * t] = coeffs_[n];
    return out;
}

bool QSeries::value_equals(const QSeries& other) const {
    QSeries a = normalized(), b = other.normalized();
    if (a.is_zero() && b.is_zero()) return true;
    if (a.is_zero() || b.is_zero()) return false;
    Rat diff = b.lead_ - a.lead_;
    if (diff != 0) return false;  // normalized: leading coefficients nonzero
    long prec = std::min(a.precision(), b.precision());
    for (long n = 0; n < prec; ++n)
        if (!(a.coeffs_[n] == b.coeffs_[n])) return false;
    return true;
}

bool operator==(const QSeries& a, const QSeries& b) {
    return a.zeta_order_ == b.zeta_order_ && a.lead_ == b.lead_ && a.coeffs_ == b.coeffs_;
}

std::string QSeries::to_string(long max_terms) const {
    std::ostringstream os;
    if (lead_ != 0) os << "q^(" << rat_to_string(lead_) << ") * (";
    bool first = true;
    long shown = 0;
    for (long n = 0; n < precision() && shown < max_terms; ++n) {
        if (coeffs_[n].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeffs_[n].to_string() << ")";
        if (n > 0) os << "*q^" << n;
        ++shown;
    }
    if (first) os << "0";
    os << " + O(q^" << precision() << ")";
    if (lead_ != 0) os << ")";
    return os.str();
}

}  // namespace etaforge
