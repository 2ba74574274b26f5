#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "etaforge/cyclotomic.hpp"
#include "etaforge/numtheory.hpp"

using namespace etaforge;

namespace {

std::mt19937 rng(20240817);

CycNum random_cyc(long m) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    std::vector<Rat> c(euler_phi(m));
    for (auto& x : c) x = make_rat(num(rng), den(rng));
    return CycNum::from_coeffs(m, std::move(c));
}

}  // namespace

TEST_CASE("zeta3 identities") {
    CycNum z = CycNum::zeta(3);
    CHECK(z + z * z == CycNum(-1));
    CycNum d = z - z * z;
    CHECK(d * d == CycNum(-3));
    CHECK(z.pow(3) == CycNum(1));
}

TEST_CASE("power relations and Phi_m reduction") {
    for (long m = 1; m <= 40; ++m) {
        CHECK(CycNum::zeta_pow(m, m) == CycNum(1));
        CHECK(CycNum::zeta_pow(m, -1) == CycNum::zeta_pow(m, m - 1));
        CHECK(CycNum::zeta(m).pow(m + 3) == CycNum::zeta_pow(m, 3));
    }
    // sum of all p-th roots of unity vanishes
    for (long p : {2, 3, 5, 7, 11, 13}) {
        CycNum s(0);
        for (long k = 0; k < p; ++k) s += CycNum::zeta_pow(p, k);
        CHECK(s.is_zero());
    }
}

TEST_CASE("cross-order embedding and equality") {
    CHECK(CycNum::zeta(3) == CycNum::zeta(6).pow(2));
    CHECK(CycNum::zeta(2) == CycNum(-1));
    CHECK(CycNum::zeta(4) * CycNum::zeta(4) == CycNum(-1));
    CycNum mixed = CycNum::zeta(3) + CycNum::zeta(4);  // lands in Q(zeta_12)
    CHECK(mixed.order() == 12);
    CHECK(mixed - CycNum::zeta(4) == CycNum::zeta(3));
}

TEST_CASE("rational detection") {
    CycNum z4 = CycNum::zeta(4);
    CHECK(!z4.is_rational());
    CHECK((z4 * z4).is_rational());
    CHECK((z4 * z4).rational_value() == -1);
    CHECK_THROWS_AS(z4.rational_value(), std::domain_error);
    CHECK(CycNum(make_rat(3, 7)).rational_value() == make_rat(3, 7));
}

TEST_CASE("conjugation") {
    CHECK(CycNum::zeta(5).conj() == CycNum::zeta_pow(5, 4));
    for (long m : {3, 5, 8, 12}) {
        CycNum a = random_cyc(m);
        CHECK(a.conj().conj() == a);
        // a * conj(a) maps to |a|^2 >= 0 under the complex embedding
        CHECK((a * a.conj()).to_complex().real() >= -1e-12);
    }
}

TEST_CASE("field inverse: (a*b)/b == a randomized") {
    for (long m : {3, 4, 5, 7, 8, 9, 12, 15, 20}) {
        for (int it = 0; it < 20; ++it) {
            CycNum a = random_cyc(m), b = random_cyc(m);
            if (b.is_zero()) continue;
            CHECK((a * b) / b == a);
            CHECK(b * b.inverse() == CycNum(1));
        }
    }
    CHECK_THROWS_AS(CycNum(0).inverse(), std::domain_error);
}

TEST_CASE("complex embedding is a ring homomorphism") {
    for (long m : {5, 8, 12, 21}) {
        for (int it = 0; it < 10; ++it) {
            CycNum a = random_cyc(m), b = random_cyc(m);
            auto za = a.to_complex(), zb = b.to_complex();
            CHECK(std::abs((a + b).to_complex() - (za + zb)) < 1e-9);
            CHECK(std::abs((a * b).to_complex() - za * zb) < 1e-9 * (1 + std::abs(za * zb)));
        }
    }
    CHECK(std::abs(CycNum::zeta(8).to_complex() -
                   std::complex<double>(std::sqrt(0.5), std::sqrt(0.5))) < 1e-14);
}

TEST_CASE("cyclotomic polynomials") {
    auto& phi12 = cyclotomic_polynomial(12);  // x^4 - x^2 + 1
    REQUIRE(phi12.size() == 5);
    CHECK(phi12[0] == 1);
    CHECK(phi12[1] == 0);
    CHECK(phi12[2] == -1);
    CHECK(phi12[3] == 0);
    CHECK(phi12[4] == 1);
    auto& phi2 = cyclotomic_polynomial(2);  // x + 1
    REQUIRE(phi2.size() == 2);
    CHECK(phi2[0] == 1);
    CHECK(phi2[1] == 1);
    CHECK(cyclotomic_polynomial(9).size() == 7);  // x^6 + x^3 + 1
}

TEST_CASE("negative and zero powers") {
    CycNum a = random_cyc(7);
    if (!a.is_zero()) {
        CHECK(a.pow(0) == CycNum(1));
        CHECK(a.pow(-2) == (a * a).inverse());
    }
}
