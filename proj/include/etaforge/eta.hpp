#pragma once

#include <optional>
#include <string>
#include <vector>

#include "etaforge/characters.hpp"
#include "etaforge/qseries.hpp"

namespace etaforge {

// c * prod over terms of (eta_chi | V_t)^{a_{t,chi}}.  Terms are keyed by
// (t, canonical character descriptor); exponents are rational, but only
// integer-exponent expressions expand exactly.
class EtaQuotientExpr {
public:
    EtaQuotientExpr() : constant_(CycNum(1)), level_(1) {}
    explicit EtaQuotientExpr(long level) : constant_(CycNum(1)), level_(level) {}

    struct Term {
        long t;
        DirChar chi;
        Rat exponent;
    };

    const CycNum& constant() const { return constant_; }
    void set_constant(const CycNum& c) { constant_ = c; }
    long level() const { return level_; }
    void set_level(long n) { level_ = n; }
    const std::vector<Term>& terms() const { return terms_; }

    // Adds to any existing exponent for the same (t, chi); zero-exponent
    // terms are dropped.
    void add_term(long t, const DirChar& chi, const Rat& exponent);
    std::optional<Rat> exponent_of(long t, const DirChar& chi) const;
    bool all_exponents_integral() const;

    std::string to_string() const;

private:
    CycNum constant_;
    std::vector<Term> terms_;
    long level_;
};

// eta = q^{1/24} prod (1 - q^n)
QSeries eta_series(long precision);

// Generalized eta function attached to chi.  The modulus-1 character routes
// to the classical eta; a principal character of modulus > 1 expands through
// its Moebius product; otherwise the defining character-weighted product is
// realized as exp of the log sum over 1 <= a <= u, gcd(a, u) = 1.
QSeries eta_chi_series(const DirChar& chi, long precision);

// eta_chi = prod_{t|N} (eta_{chi0} | V_t)^{chi0(t) mu(t)}, chi real.
// Refuses non-real chi: the principal-branch identity is only claimed for
// real characters.
EtaQuotientExpr eta_chi_moebius_expand(const DirChar& chi);

// Exact expansion; requires all exponents integral.
QSeries expand_quotient(const EtaQuotientExpr& e, long precision);

// sum a_{t,chi} * t * (q_log_derivative(eta_chi) | V_t); linear in the
// exponents, so rational exponents are fine here.
QSeries quotient_log_derivative(const EtaQuotientExpr& e, long precision);

}  // namespace etaforge
