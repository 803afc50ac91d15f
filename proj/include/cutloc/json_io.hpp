#pragma once

#include "json.hpp"

#include "cutloc/boundary.hpp"
#include "cutloc/integrals.hpp"
#include "cutloc/mk.hpp"
#include "cutloc/symmetry.hpp"
#include "cutloc/web.hpp"

namespace cutloc {

void to_json(nlohmann::json& j, const Vec2& v);
void to_json(nlohmann::json& j, const BoundaryPoint& p);
void to_json(nlohmann::json& j, const CornerInfo& c);
void to_json(nlohmann::json& j, const IntegralReport& r);
void to_json(nlohmann::json& j, const SymmetryReport& r);
void to_json(nlohmann::json& j, const MKSummary& s);
void to_json(nlohmann::json& j, const MKVerdict& v);
void to_json(nlohmann::json& j, const Teo10& t);
void to_json(nlohmann::json& j, const PartialWebCheck& c);

}  // namespace cutloc
