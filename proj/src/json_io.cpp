#include "cutloc/json_io.hpp"

namespace cutloc {

using nlohmann::json;

void to_json(json& j, const Vec2& v) { j = json::array({v.x, v.y}); }

void to_json(json& j, const BoundaryPoint& p)
{
    j = json{{"arc", p.param.arc}, {"t", p.param.t},       {"s", p.s},
             {"position", p.position}, {"normal", p.normal}, {"curvature", p.curvature}};
}

void to_json(json& j, const CornerInfo& c)
{
    j = json{{"arc", c.arc},           {"s", c.s},
             {"position", c.position}, {"nu_minus", c.nu_minus},
             {"nu_plus", c.nu_plus},   {"delta_nu", c.delta_nu},
             {"turning_angle", c.turning_angle}, {"convex", c.convex}};
}

void to_json(json& j, const IntegralReport& r)
{
    j = json{{"name", r.name},
             {"lhs", r.lhs},
             {"rhs", r.rhs},
             {"abs_residual", r.abs_residual},
             {"rel_residual", r.rel_residual},
             {"samples_used", r.samples_used}};
    if (!r.extra.empty()) j["extra"] = r.extra;
}

void to_json(json& j, const SymmetryReport& r)
{
    j = json{{"verdict", to_string(r.verdict)},
             {"route", r.route},
             {"failing_check", r.failing_check},
             {"y0", r.y0},
             {"H_max", r.H_max},
             {"lambda_at_y0", r.lambda_at_y0},
             {"phi_at_y0", r.phi_at_y0},
             {"ratio", r.ratio},
             {"area", r.area},
             {"perimeter", r.perimeter},
             {"hypothesis_H", r.hypothesis_H},
             {"hypothesis_phi", r.hypothesis_phi},
             {"phi_min", r.phi_min},
             {"phi_max", r.phi_max},
             {"phi_mean", r.phi_mean},
             {"phi_constancy", r.phi_constancy},
             {"basic_bound_max", r.basic_bound_max},
             {"kappa_spread", r.kappa_spread},
             {"corner_status", to_string(r.corner_status)},
             {"corners", r.corners},
             {"starshaped", r.starshaped},
             {"min_support", r.min_support},
             {"smooth_samples", r.smooth_samples},
             {"notes", r.notes}};
}

void to_json(json& j, const MKSummary& s)
{
    j = json{{"valid_cells", s.valid_cells},
             {"max_abs_residual", s.max_abs_residual},
             {"median_abs_residual", s.median_abs_residual},
             {"l1_residual", s.l1_residual},
             {"complementarity_max", s.complementarity_max},
             {"v_max", s.v_max},
             {"v_min", s.v_min},
             {"max_jump", s.max_jump},
             {"continuity_bound", s.continuity_bound},
             {"inradius", s.inradius}};
}

void to_json(json& j, const MKVerdict& v)
{
    j = json{{"gamma", v.gamma},
             {"trace_min", v.trace_min},
             {"trace_max", v.trace_max},
             {"trace_mean", v.trace_mean},
             {"report", v.report}};
}

void to_json(json& j, const Teo10& t)
{
    j = json{{"y0", t.y0},         {"lambda", t.lambda}, {"phi", t.phi},
             {"hprime0", t.hprime0}, {"flux0", t.flux0},   {"residual", t.residual}};
}

void to_json(json& j, const PartialWebCheck& c)
{
    json collar = json::array();
    for (const CollarDefect& d : c.collar) collar.push_back({{"eps", d.eps}, {"defect", d.defect}});
    j = json{{"verdict", to_string(c.verdict)},
             {"failing_check", c.failing_check},
             {"failing", c.failing},
             {"max_kappa_on_gamma", c.max_kappa_on_gamma},
             {"max_flux_on_gamma", c.max_flux_on_gamma},
             {"flux_max_all", c.flux_max_all},
             {"flux_max_gamma", c.flux_max_gamma},
             {"collar", collar},
             {"phi_at_y0", c.phi_at_y0},
             {"ratio", c.ratio},
             {"chain", c.chain}};
}

}  // namespace cutloc
