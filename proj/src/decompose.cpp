#include "etaforge/decompose.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "etaforge/numtheory.hpp"

namespace etaforge {

LevelClass supported_level(long n) {
    if (n < 1) throw std::invalid_argument("supported_level: level must be positive");
    if (is_squarefree(n)) return LevelClass::SquareFree;
    auto shape = [&](long q, long q2, long coprime_p) {
        // n = q*M or q2*M with M square-free and coprime to coprime_p
        for (long base : {q, q2}) {
            if (n % base != 0) continue;
            long m = n / base;
            if (is_squarefree(m) && gcd(m, coprime_p) == 1) return true;
        }
        return false;
    };
    if (shape(4, 8, 2)) return LevelClass::Thm3;  // 4M/8M, M odd square-free
    if (shape(9, 27, 3)) return LevelClass::Thm4_3;
    if (shape(16, 32, 2)) return LevelClass::Thm4_4;
    if (shape(25, 125, 5)) return LevelClass::Thm4_5;
    return LevelClass::Unsupported;
}

std::string level_class_name(LevelClass c) {
    switch (c) {
        case LevelClass::SquareFree: return "square-free";
        case LevelClass::Thm3: return "4M/8M";
        case LevelClass::Thm4_3: return "9M/27M";
        case LevelClass::Thm4_4: return "16M/32M";
        case LevelClass::Thm4_5: return "25M/125M";
        default: return "unsupported";
    }
}

bool decomposition_guaranteed(LevelClass c) { return c != LevelClass::Unsupported; }

long gamma0_index(long n) {
    long idx = n;
    for (auto [p, e] : factorize(n)) idx = idx / p * (p + 1);
    return idx;
}

long sturm_bound(long n) {
    long idx = gamma0_index(n);
    return (idx + 5) / 6 + 1;  // ceil(idx/6) + 1
}

std::vector<BasisElement> build_basis(long n, long precision) {
    static std::map<std::pair<long, long>, std::vector<BasisElement>> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({n, precision});
        if (it != cache.end()) return it->second;
    }
    std::vector<BasisElement> basis;
    auto push = [&](long t, const DirChar& chi) {
        const long base_prec = (precision + t - 1) / t + 1;
        QSeries b = eta_chi_series(chi, base_prec)
                        .q_log_derivative()
                        .v_operator(t)
                        .truncated(precision);
        basis.push_back({t, chi, CycNum(Rat(t)) * b});
    };
    DirChar one1 = DirChar::principal(1);
    for (long t : divisors(n)) push(t, one1);
    for (long u = 2; u * u <= n; ++u) {
        if (n % (u * u) != 0) continue;
        for (const auto& chi : enumerate_primitive_chars(u))
            for (long t : divisors(n / (u * u))) push(t, chi);
    }
    {
        std::lock_guard<std::mutex> lock(mu);
        cache.emplace(std::make_pair(n, precision), basis);
    }
    return basis;
}

std::vector<CycNum> solve_exact(std::vector<std::vector<CycNum>> A, std::vector<CycNum> rhs,
                                bool& full_rank) {
    const long rows = (long)A.size();
    const long cols = rows ? (long)A[0].size() : 0;
    std::vector<long> pivot_row_of_col(cols, -1);
    long cur = 0;
    for (long col = 0; col < cols && cur < rows; ++col) {
        long piv = -1;
        for (long r = cur; r < rows; ++r)
            if (!A[r][col].is_zero()) { piv = r; break; }
        if (piv < 0) { full_rank = false; continue; }
        std::swap(A[cur], A[piv]);
        std::swap(rhs[cur], rhs[piv]);
        CycNum inv = A[cur][col].inverse();
        for (long c = col; c < cols; ++c) A[cur][c] = A[cur][c] * inv;
        rhs[cur] = rhs[cur] * inv;
        for (long r = 0; r < rows; ++r) {
            if (r == cur || A[r][col].is_zero()) continue;
            CycNum f = A[r][col];
            for (long c = col; c < cols; ++c) A[r][c] -= f * A[cur][c];
            rhs[r] -= f * rhs[cur];
        }
        pivot_row_of_col[col] = cur;
        ++cur;
    }
    std::vector<CycNum> x(cols);
    for (long col = 0; col < cols; ++col)
        if (pivot_row_of_col[col] >= 0) x[col] = rhs[pivot_row_of_col[col]];
    return x;
}

DecompositionResult decompose(const DecompositionProblem& p) {
    const long n = p.level;
    const long sturm = sturm_bound(n);
    if (p.input.precision() < sturm + 10)
        throw std::invalid_argument("decompose: precision must be at least sturm_bound + 10");
    QSeries f = p.input.normalized();
    if (f.precision() == 0 || f.coeff(0).is_zero())
        throw std::invalid_argument("decompose: input needs a unit leading coefficient");
    const long prec = f.precision();

    // weight reduction: replace f by f^12 / Delta^k
    QSeries h = f;
    if (p.weight != 0) {
        QSeries delta = eta_series(prec).int_pow(24);
        h = f.int_pow(12) / delta.int_pow(p.weight);
    }

    QSeries L = h.q_log_derivative();
    auto basis = build_basis(n, prec);
    const long rows = std::min(prec, L.precision());
    const long cols = (long)basis.size();

    std::vector<std::vector<CycNum>> A(rows, std::vector<CycNum>(cols));
    std::vector<CycNum> rhs(rows);
    for (long r = 0; r < rows; ++r) {
        rhs[r] = L.coeff(r);
        for (long c = 0; c < cols; ++c)
            A[r][c] = r < basis[c].series.precision() ? basis[c].series.coeff(r) : CycNum();
    }
    DecompositionResult res;
    res.full_rank = true;
    std::vector<CycNum> x = solve_exact(std::move(A), std::move(rhs), res.full_rank);

    // residual over the full known range
    QSeries fit = QSeries::zero(rows);
    for (long c = 0; c < cols; ++c)
        if (!x[c].is_zero()) fit = fit + x[c] * basis[c].series.truncated(rows);
    res.residual = L.truncated(rows) - fit;

    // exponents: rational solution components are reported as-is; non-
    // rational components (impossible for genuine inputs) block certification
    bool rational_solution = true;
    EtaQuotientExpr raw(n);
    for (long c = 0; c < cols; ++c) {
        if (x[c].is_zero()) continue;
        if (!x[c].is_rational()) { rational_solution = false; continue; }
        raw.add_term(basis[c].t, basis[c].chi, x[c].rational_value());
    }
    res.raw_expr = raw;

    EtaQuotientExpr expr(n);
    if (p.weight == 0) {
        expr = raw;
    } else {
        DirChar one1 = DirChar::principal(1);
        for (const auto& term : raw.terms()) {
            if (term.t == 1 && term.chi == one1) continue;
            expr.add_term(term.t, term.chi, term.exponent / 12);
        }
        Rat b0 = raw.exponent_of(1, one1).value_or(Rat(0));
        expr.add_term(1, one1, (b0 + Rat(24 * p.weight)) / 12);
    }

    bool certified = rational_solution && res.residual.is_zero() &&
                     expr.all_exponents_integral();
    if (certified) {
        QSeries reexp = expand_quotient(expr, prec).normalized();
        if (reexp.precision() == 0 || reexp.coeff(0).is_zero()) {
            certified = false;
        } else {
            CycNum c0 = f.coeff(0) / reexp.coeff(0);
            expr.set_constant(c0);
            certified = verify_quotient(expr, p.input);
        }
    }
    res.expr = expr;
    res.certified = certified;
    return res;
}

bool verify_quotient(const EtaQuotientExpr& e, const QSeries& target) {
    if (!e.all_exponents_integral()) return false;
    QSeries got = expand_quotient(e, target.precision());
    return got.value_equals(target);
}

}  // namespace etaforge
