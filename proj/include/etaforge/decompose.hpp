#pragma once

#include <string>
#include <vector>

#include "etaforge/eta.hpp"
#include "etaforge/qseries.hpp"

namespace etaforge {

enum class LevelClass { SquareFree, Thm3, Thm4_3, Thm4_4, Thm4_5, Unsupported };

// Classification of N against the shapes for which a cuspidal-divisor
// function is guaranteed to decompose.  Unsupported levels are still
// attempted best-effort.
LevelClass supported_level(long n);
std::string level_class_name(LevelClass c);
bool decomposition_guaranteed(LevelClass c);

// ceil(index(Gamma_0(N)) / 6) + 1, the certification horizon for weight-2
// coefficient equality.
long sturm_bound(long n);

long gamma0_index(long n);

struct BasisElement {
    long t;
    DirChar chi;
    QSeries series;  // t * (q_log_derivative(eta_chi) | V_t)
};

// Scaled eta log-derivatives B_{t,chi} for every label with chi primitive
// of conductor u and t u^2 | N (u = 1 gives the classical labels t | N).
std::vector<BasisElement> build_basis(long n, long precision);

struct DecompositionProblem {
    long level;
    long weight;
    QSeries input;  // q-expansion at infinity, unit leading series coefficient
};

struct DecompositionResult {
    EtaQuotientExpr expr;      // exponents for the input itself
    EtaQuotientExpr raw_expr;  // exponents for the weight-0 object f^12/Delta^k
    QSeries residual;          // cusp-form part left after Eisenstein matching
    bool certified = false;
    bool full_rank = true;
};

DecompositionResult decompose(const DecompositionProblem& p);

// Exact Gauss-Jordan solve of A x = rhs over the cyclotomic field; free
// variables are set to zero and clear full_rank.  Inconsistent rows are not
// detected here; callers check the residual.
std::vector<CycNum> solve_exact(std::vector<std::vector<CycNum>> A, std::vector<CycNum> rhs,
                                bool& full_rank);

// Exact re-expansion check through the common precision.
bool verify_quotient(const EtaQuotientExpr& e, const QSeries& target);

}  // namespace etaforge
