#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "etaforge/numtheory.hpp"
#include "etaforge/serialize.hpp"

using namespace etaforge;

namespace {

std::mt19937 rng(20240820);

CycNum random_cyc(long m) {
    std::uniform_int_distribution<long> num(-99, 99), den(1, 40);
    std::vector<Rat> c(euler_phi(m));
    for (auto& x : c) x = make_rat(num(rng), den(rng));
    return CycNum::from_coeffs(m, std::move(c));
}

}  // namespace

TEST_CASE("CycNum round trip is bit-exact") {
    std::vector<long> orders = {1, 2, 3, 4, 5, 8, 12, 20, 36};
    for (int it = 0; it < 500; ++it) {
        CycNum x = random_cyc(orders[it % orders.size()]);
        CycNum y = cycnum_from_json(to_json(x));
        CHECK(y.order() == x.order());
        CHECK(y.coeffs() == x.coeffs());
    }
}

TEST_CASE("CycNum JSON shape") {
    json j = to_json(CycNum::zeta(4) * CycNum(make_rat(-3, 2)));
    CHECK(j.at("zeta_order") == 4);
    REQUIRE(j.at("coeffs").size() == 2);
    CHECK(j.at("coeffs")[0] == "0");
    CHECK(j.at("coeffs")[1] == "-3/2");
}

TEST_CASE("QSeries round trip is bit-exact") {
    std::vector<long> orders = {1, 3, 4, 12};
    for (int it = 0; it < 100; ++it) {
        long m = orders[it % orders.size()];
        std::uniform_int_distribution<long> len(1, 12), num(-9, 9), den(1, 24);
        std::vector<CycNum> c(len(rng));
        for (auto& x : c) x = random_cyc(m);
        QSeries s(m, make_rat(num(rng), den(rng)), std::move(c));
        QSeries t = qseries_from_json(to_json(s));
        CHECK(t == s);
    }
}

TEST_CASE("QSeries JSON rejects inconsistent precision") {
    json j = to_json(eta_series(4));
    j["precision"] = 7;
    CHECK_THROWS_AS(qseries_from_json(j), std::invalid_argument);
}

TEST_CASE("DirChar round trip") {
    for (long n : {1, 3, 4, 5, 8, 9, 12, 16, 25, 40}) {
        for (const auto& chi : enumerate_chars(n)) {
            CHECK(dirchar_from_json(to_json(chi)) == chi);
        }
    }
}

TEST_CASE("EtaQuotientExpr round trip") {
    EtaQuotientExpr e(18);
    e.set_constant(CycNum::zeta_pow(12, 5));
    e.add_term(1, DirChar::principal(1), Rat(-24));
    e.add_term(2, DirChar::kronecker(3), make_rat(7, 2));
    e.add_term(9, DirChar::principal(1), Rat(3));
    EtaQuotientExpr f = quotient_from_json(to_json(e));
    CHECK(f.level() == 18);
    CHECK(f.constant() == e.constant());
    REQUIRE(f.terms().size() == 3);
    for (const auto& term : e.terms())
        CHECK(f.exponent_of(term.t, term.chi) == term.exponent);
    // field names per format
    json j = to_json(e);
    CHECK(j.contains("level"));
    CHECK(j.at("terms")[0].contains("t"));
    CHECK(j.at("terms")[0].contains("char"));
    CHECK(j.at("terms")[0].contains("exp"));
}

TEST_CASE("expanded series survive a serialization cycle") {
    QSeries f = eta_chi_series(DirChar::kronecker(5), 40);
    CHECK(qseries_from_json(to_json(f)) == f);
}
