#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "etaforge/eisenstein.hpp"
#include "etaforge/eta.hpp"

using namespace etaforge;

TEST_CASE("twisted divisor sums") {
    DirChar one1 = DirChar::principal(1);
    CHECK(sigma1(one1, one1, 6) == CycNum(12));   // sigma(6)
    CHECK(sigma1(one1, one1, 12) == CycNum(28));
    DirChar k3 = DirChar::kronecker(3);
    CHECK(sigma1(k3, k3, 1) == CycNum(1));
    CHECK(sigma1(k3, k3, 2) == CycNum(-3));
    CHECK(sigma1(k3, k3, 3) == CycNum(0));
    CHECK(sigma1(k3, k3, 4) == CycNum(7));
}

TEST_CASE("classical E2") {
    QSeries e2 = e2_series(DirChar::principal(1), DirChar::principal(1), 6).series;
    CHECK(e2.coeff(0) == CycNum(make_rat(-1, 12)));
    CHECK(e2.coeff(1) == CycNum(2));
    CHECK(e2.coeff(2) == CycNum(6));
    CHECK(e2.coeff(3) == CycNum(8));
    CHECK(e2.coeff(4) == CycNum(14));
    CHECK(e2.coeff(5) == CycNum(12));
}

TEST_CASE("E_{2,t}") {
    QSeries e22 = e2t_series(2, 6);
    CHECK(e22.coeff(0) == CycNum(make_rat(1, 12)));
    CHECK(e22.coeff(1) == CycNum(2));
    CHECK(e22.coeff(2) == CycNum(2));
    CHECK(e22.coeff(3) == CycNum(8));
    CHECK(e22.coeff(4) == CycNum(2));  // 14 - 2*6
    CHECK_THROWS_AS(e2t_series(1, 6), std::invalid_argument);
}

TEST_CASE("non-principal psi kills the constant term") {
    DirChar k3 = DirChar::kronecker(3);
    QSeries s = e2_series(k3, k3.conj(), 5).series;
    CHECK(s.coeff(0).is_zero());
    CHECK(s.coeff(1) == CycNum(2));   // 2 sigma1(1)
    CHECK(s.coeff(2) == CycNum(-6));  // 2 * (-3)
}

TEST_CASE("L(-1, phi) special values") {
    CHECK(L_minus_one(DirChar::principal(1)) == CycNum(make_rat(-1, 12)));
    // odd characters have vanishing generalized B_2
    CHECK(L_minus_one(DirChar::kronecker(3)).is_zero());
    CHECK(L_minus_one(DirChar::psi4()).is_zero());
    CHECK(L_minus_one(DirChar::kronecker(7)).is_zero());
    // even: L(-1, (./5)) = -B_{2,chi}/2 = -2/5
    CHECK(L_minus_one(DirChar::kronecker(5)) == CycNum(make_rat(-2, 5)));
}

TEST_CASE("L(2, chi^2) rational pi^2 factor") {
    CHECK(L2_real_pi2_factor(DirChar::kronecker(3)) == make_rat(4, 27));
    CHECK(L2_real_pi2_factor(DirChar::psi4()) == make_rat(1, 8));
    CHECK(L2_real_pi2_factor(DirChar::kronecker(5)) == make_rat(4, 25));
}

TEST_CASE("lemma 1 at small precision") {
    for (const char* spec : {"kronecker:3", "psi4"}) {
        DirChar chi = char_from_spec(spec);
        QSeries lhs = eta_chi_series(chi, 40).q_log_derivative();
        CycNum scale = CycNum(make_rat(-1, 2)) * gauss_sum(chi.conj());
        CHECK(lhs.value_equals(scale * e2_series(chi, chi.conj(), 40).series));
    }
}
