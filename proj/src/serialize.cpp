#include "etaforge/serialize.hpp"

#include "etaforge/numtheory.hpp"

namespace etaforge {

json to_json(const CycNum& x) {
    json coeffs = json::array();
    for (const auto& c : x.coeffs()) coeffs.push_back(rat_to_string(c));
    return json{{"zeta_order", x.order()}, {"coeffs", coeffs}};
}

CycNum cycnum_from_json(const json& j) {
    long m = j.at("zeta_order").get<long>();
    std::vector<Rat> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rat_from_string(c.get<std::string>()));
    return CycNum::from_coeffs(m, std::move(coeffs));
}

json to_json(const QSeries& s) {
    json coeffs = json::array();
    for (long n = 0; n < s.precision(); ++n) {
        json row = json::array();
        for (const auto& c : s.coeff(n).coeffs()) row.push_back(rat_to_string(c));
        coeffs.push_back(row);
    }
    return json{{"zeta_order", s.zeta_order()},
                {"leading_exponent", rat_to_string(s.leading_exponent())},
                {"precision", s.precision()},
                {"coeffs", coeffs}};
}

QSeries qseries_from_json(const json& j) {
    long m = j.at("zeta_order").get<long>();
    Rat lead = rat_from_string(j.at("leading_exponent").get<std::string>());
    std::vector<CycNum> coeffs;
    for (const auto& row : j.at("coeffs")) {
        std::vector<Rat> v;
        for (const auto& c : row) v.push_back(rat_from_string(c.get<std::string>()));
        coeffs.push_back(CycNum::from_coeffs(m, std::move(v)));
    }
    long prec = j.at("precision").get<long>();
    if (prec != (long)coeffs.size())
        throw std::invalid_argument("qseries json: precision does not match coefficient count");
    return QSeries(m, lead, std::move(coeffs));
}

json to_json(const EtaQuotientExpr& e) {
    json terms = json::array();
    for (const auto& term : e.terms())
        terms.push_back(json{{"t", term.t},
                             {"char", term.chi.descriptor()},
                             {"exp", rat_to_string(term.exponent)}});
    return json{{"level", e.level()}, {"constant", to_json(e.constant())}, {"terms", terms}};
}

EtaQuotientExpr quotient_from_json(const json& j) {
    EtaQuotientExpr e(j.at("level").get<long>());
    e.set_constant(cycnum_from_json(j.at("constant")));
    for (const auto& term : j.at("terms"))
        e.add_term(term.at("t").get<long>(), char_from_spec(term.at("char").get<std::string>()),
                   rat_from_string(term.at("exp").get<std::string>()));
    return e;
}

json to_json(const DirChar& chi) {
    const UnitGroup& ug = unit_group(chi.modulus());
    json gens = json::array();
    const long r = chi.order();
    for (long g : ug.gens) {
        long k = -1;
        for (long j2 = 0; j2 < r; ++j2) {
            CycNum target = j2 == 0 ? CycNum(1) : CycNum::zeta_pow(r, j2);
            if (chi(g) == target) { k = j2; break; }
        }
        gens.push_back(json::array({g, k}));
    }
    return json{{"modulus", chi.modulus()}, {"order", r}, {"gens", gens}};
}

DirChar dirchar_from_json(const json& j) {
    long n = j.at("modulus").get<long>();
    long r = j.at("order").get<long>();
    std::vector<std::pair<long, long>> gen_exps;
    for (const auto& g : j.at("gens"))
        gen_exps.emplace_back(g.at(0).get<long>(), g.at(1).get<long>());
    return DirChar::from_generator_values(n, r, gen_exps);
}

}  // namespace etaforge
