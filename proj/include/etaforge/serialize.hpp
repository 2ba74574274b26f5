#pragma once

#include <json.hpp>

#include "etaforge/characters.hpp"
#include "etaforge/cyclotomic.hpp"
#include "etaforge/eta.hpp"
#include "etaforge/qseries.hpp"

namespace etaforge {

using nlohmann::json;

json to_json(const CycNum& x);
CycNum cycnum_from_json(const json& j);

json to_json(const QSeries& s);
QSeries qseries_from_json(const json& j);

json to_json(const EtaQuotientExpr& e);
EtaQuotientExpr quotient_from_json(const json& j);

// {"modulus": N, "order": r, "gens": [[g, k], ...]} meaning chi(g) = zeta_r^k
json to_json(const DirChar& chi);
DirChar dirchar_from_json(const json& j);

}  // namespace etaforge
