#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "etaforge/analytic.hpp"
#include "etaforge/eta.hpp"
#include "etaforge/verify.hpp"

using namespace etaforge;

static const double PI = 3.14159265358979323846;

TEST_CASE("shifted zeta values") {
    // sum over all m != 0 of 1/m^2 = 2 zeta(2) = pi^2/3
    CHECK(std::abs(zeta_shifted(0, 1, 1e-12) - PI * PI / 3) < 1e-11);
    // odd m only: 2 * (3/4) zeta(2) = pi^2/4
    CHECK(std::abs(zeta_shifted(1, 2, 1e-12) - PI * PI / 4) < 1e-11);
    // m == 0 mod 2: (1/4) * 2 zeta(2)
    CHECK(std::abs(zeta_shifted(0, 2, 1e-12) - PI * PI / 12) < 1e-11);
    // residues d and N-d agree (the sum runs over both signs)
    CHECK(std::abs(zeta_shifted(2, 7, 1e-12) - zeta_shifted(5, 7, 1e-12)) < 1e-12);
    // partition of all residues recovers 2 zeta(2)
    double total = 0;
    for (long d = 0; d < 5; ++d) total += zeta_shifted(d, 5, 1e-13);
    CHECK(std::abs(total - PI * PI / 3) < 1e-11);
}

TEST_CASE("cusp_map sends infinity to the cusp") {
    for (Cusp s : {Cusp{2, 3, 9}, Cusp{1, 4, 16}, Cusp{0, 1, 25}, Cusp{1, 0, 9}}) {
        UnimodularMatrix g = UnimodularMatrix::cusp_map(s);
        CHECK(g.check());
        if (s.is_infinity()) {
            CHECK(g.c == 0);
        } else {
            CHECK(g.a * s.c == g.c * s.a);  // g(oo) = a/c equals s projectively
            CHECK(g.c != 0);
        }
    }
}

TEST_CASE("eta at i") {
    // eta(i) = Gamma(1/4) / (2 pi^{3/4})
    QSeries eta = eta_series(80);
    auto r = eval_series(eta, {0.0, 1.0}, 80);
    CHECK(std::abs(r.value - std::complex<double>(0.76822542232605666, 0.0)) < 1e-12);
    CHECK(r.tail_bound < 1e-12);
}

TEST_CASE("eval respects the V operator: (f|V2)(tau) = f(2 tau)") {
    QSeries f = eta_chi_series(DirChar::kronecker(3), 120);
    std::complex<double> tau(0.1, 0.4);
    auto lhs = eval_series(f.v_operator(2), tau, 200);
    auto rhs = eval_series(f, 2.0 * tau, 120);
    CHECK(std::abs(lhs.value - rhs.value) < 1e-10);
}

TEST_CASE("eval domain errors") {
    QSeries eta = eta_series(10);
    CHECK_THROWS_AS(eval_series(eta, {0.0, -1.0}, 10), std::domain_error);
    CHECK_THROWS_AS(eval_series(eta, {0.0, 0.0}, 10), std::domain_error);
}

TEST_CASE("multiplier of the identity and of a true invariance") {
    QSeries f = eta_chi_series(DirChar::kronecker(3), 300);
    std::complex<double> tau(-0.11, 0.35);
    auto nu = estimate_multiplier(f, UnimodularMatrix::identity(), tau, 300);
    CHECK(std::abs(nu - 1.0) < 1e-12);

    // Delta(2tau)/Delta(tau) is weight-0 invariant on Gamma_0(2)
    DirChar one1 = DirChar::principal(1);
    EtaQuotientExpr e(2);
    e.add_term(1, one1, Rat(-24));
    e.add_term(2, one1, Rat(24));
    QSeries g = expand_quotient(e, 400);
    auto nu2 = estimate_multiplier(g, {1, 0, 2, 1}, {-0.5, 0.5}, 400);
    CHECK(std::abs(nu2 - 1.0) < 1e-8);
}

TEST_CASE("multiplier admissibility guard") {
    QSeries f = eta_series(50);
    // Im(gamma tau) tiny -> |q| too close to 1
    CHECK_THROWS_AS(estimate_multiplier(f, {1, 0, 9, 1}, {0.3, 4.0}, 50), std::domain_error);
}

TEST_CASE("eta_chi multiplier is a 12th root of unity along fixture generators") {
    QSeries f = eta_chi_series(DirChar::kronecker(3), 400);
    std::complex<double> tau(-1.0 / 9.0, 1.0 / 3.0);
    auto nu = estimate_multiplier(f, {1, 0, 9, 1}, tau, 400);
    CHECK(std::abs(std::pow(nu, 12) - 1.0) < 1e-4);
    CHECK(std::abs(std::abs(nu) - 1.0) < 1e-6);  // unitary
}

TEST_CASE("numeric cusp orders agree with the closed form (spot checks)") {
    DirChar k3 = DirChar::kronecker(3);
    CHECK(std::abs(eta_chi_order_numeric(k3, {1, 3, 9}) - 3.0) < 1e-6);
    CHECK(std::abs(eta_chi_order_numeric(k3, {2, 3, 9}) + 3.0) < 1e-6);
    CHECK(std::abs(eta_chi_order_numeric(k3, {0, 1, 9})) < 1e-6);
    DirChar psi = DirChar::psi4();
    CHECK(std::abs(eta_chi_order_numeric(psi, {3, 4, 16}) + 8.0) < 1e-6);
}

TEST_CASE("fixture generator lists are unimodular with the right level") {
    for (long n : {9L, 16L, 25L}) {
        for (const auto& g : verify::fixture_generators(n)) {
            CHECK(g.check());
            CHECK(g.c % n == 0);
        }
    }
    CHECK_THROWS_AS(verify::fixture_generators(7), std::invalid_argument);
}
