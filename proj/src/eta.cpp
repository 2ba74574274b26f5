#include "etaforge/eta.hpp"

#include <sstream>
#include <stdexcept>

#include "etaforge/numtheory.hpp"

namespace etaforge {

void EtaQuotientExpr::add_term(long t, const DirChar& chi, const Rat& exponent) {
    if (t < 1) throw std::invalid_argument("add_term: t must be positive");
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
        if (it->t == t && it->chi == chi) {
            it->exponent += exponent;
            if (it->exponent == 0) terms_.erase(it);
            return;
        }
    }
    if (exponent != 0) terms_.push_back({t, chi, exponent});
}

std::optional<Rat> EtaQuotientExpr::exponent_of(long t, const DirChar& chi) const {
    for (const auto& term : terms_)
        if (term.t == t && term.chi == chi) return term.exponent;
    return std::nullopt;
}

bool EtaQuotientExpr::all_exponents_integral() const {
    for (const auto& term : terms_)
        if (!is_integer(term.exponent)) return false;
    return true;
}

std::string EtaQuotientExpr::to_string() const {
    std::ostringstream os;
    os << "(" << constant_.to_string() << ")";
    for (const auto& term : terms_)
        os << " * (eta[" << term.chi.descriptor() << "]|V" << term.t << ")^("
           << rat_to_string(term.exponent) << ")";
    return os.str();
}

QSeries eta_series(long precision) {
    if (precision < 1) throw std::invalid_argument("eta_series: precision must be >= 1");
    // Euler product expanded by repeated sparse multiplication; (1 - q^n)
    // leaves coefficients below n untouched.
    std::vector<Rat> c(precision);
    c[0] = 1;
    for (long n = 1; n < precision; ++n)
        for (long m = precision - 1; m >= n; --m) c[m] -= c[m - n];
    std::vector<CycNum> coeffs(precision);
    for (long m = 0; m < precision; ++m) coeffs[m] = CycNum(c[m]);
    return QSeries(1, make_rat(1, 24), std::move(coeffs));
}

QSeries eta_chi_series(const DirChar& chi, long precision) {
    if (precision < 1) throw std::invalid_argument("eta_chi_series: precision must be >= 1");
    if (chi.modulus() == 1) return eta_series(precision);
    if (chi.is_principal()) return expand_quotient(eta_chi_moebius_expand(chi), precision);

    // S = sum_{n>=1} sum_{a coprime to u} chibar0(a) chibar(n) log(1 - zeta_u^a q^n)
    // with u the conductor and chi0 the primitive core: the exponent chibar(an)
    // splits multiplicatively with a taken mod u and n mod the full modulus
    // (for primitive chi this is literally chibar(a)chibar(n)).  This is the
    // reading under which the Moebius product identity holds.  Accumulated via
    // log(1 - z q^n) = -sum_r z^r q^{nr} / r.
    const long u = chi.conductor();
    DirChar chibar = chi.conj();
    DirChar chibar0 = chibar.primitive_core();
    std::vector<CycNum> s(precision);
    for (long n = 1; n < precision; ++n) {
        const CycNum& wn = chibar(n);
        if (wn.is_zero()) continue;
        for (long a = 1; a <= u; ++a) {
            if (gcd(a, u) != 1) continue;
            CycNum w = wn * chibar0(a);
            for (long r = 1; n * r < precision; ++r)
                s[n * r] -= make_rat(1, r) * (w * CycNum::zeta_pow(u, a * r));
        }
    }
    return QSeries(1, Rat(0), std::move(s)).exp();
}

EtaQuotientExpr eta_chi_moebius_expand(const DirChar& chi) {
    if (!chi.is_real())
        throw std::invalid_argument(
            "eta_chi_moebius_expand: only real characters are supported (the "
            "principal-branch product identity is not claimed for non-real chi)");
    const long n = chi.modulus();
    DirChar core = chi.primitive_core();
    EtaQuotientExpr e(n);
    for (long t : divisors(n)) {
        const CycNum& v = core(t);
        int mu = moebius(t);
        if (mu == 0 || v.is_zero()) continue;
        e.add_term(t, core, v.rational_value() * Rat(mu));
    }
    return e;
}

QSeries expand_quotient(const EtaQuotientExpr& e, long precision) {
    if (!e.all_exponents_integral())
        throw std::invalid_argument("expand_quotient: exponents must be integers");
    QSeries acc = QSeries::constant(e.constant(), precision);
    for (const auto& term : e.terms()) {
        const long t = term.t;
        const long base_prec = (precision + t - 1) / t + 1;
        QSeries factor = eta_chi_series(term.chi, base_prec)
                             .v_operator(t)
                             .truncated(precision)
                             .int_pow(term.exponent.get_num().get_si());
        acc = acc * factor;
    }
    return acc.truncated(precision);
}

QSeries quotient_log_derivative(const EtaQuotientExpr& e, long precision) {
    QSeries acc = QSeries::zero(precision);
    for (const auto& term : e.terms()) {
        const long t = term.t;
        const long base_prec = (precision + t - 1) / t + 1;
        QSeries ld = eta_chi_series(term.chi, base_prec)
                         .q_log_derivative()
                         .v_operator(t)
                         .truncated(precision);
        acc = acc + CycNum(term.exponent * t) * ld;
    }
    return acc;
}

}  // namespace etaforge
