#include "cutloc/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <boost/math/quadrature/gauss.hpp>

#include "cutloc/arcs.hpp"
#include "cutloc/errors.hpp"

namespace cutloc {

namespace {

constexpr std::size_t kTableIntervals = 256;
constexpr std::size_t kCheckSamplesPerArc = 96;

double gauss8(const Arc& arc, double a, double b)
{
    if (a == b) return 0.0;
    auto speed = [&arc](double t) { return norm(arc.first(t)); };
    return boost::math::quadrature::gauss<double, 8>::integrate(speed, a, b);
}

bool on_segment(Vec2 a, Vec2 b, Vec2 p)
{
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

// closed segments: touching counts, since only non-adjacent pairs are tested
bool segments_cross(Vec2 a, Vec2 b, Vec2 c, Vec2 d)
{
    const double d1 = cross(b - a, c - a);
    const double d2 = cross(b - a, d - a);
    const double d3 = cross(d - c, a - c);
    const double d4 = cross(d - c, b - c);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) return true;
    return (d1 == 0 && on_segment(a, b, c)) || (d2 == 0 && on_segment(a, b, d)) || (d3 == 0 && on_segment(c, d, a)) ||
           (d4 == 0 && on_segment(c, d, b));
}

std::vector<Vec2> trace_polyline(const std::vector<ArcPtr>& arcs)
{
    std::vector<Vec2> pts;
    for (const auto& a : arcs) {
        for (std::size_t k = 0; k < kCheckSamplesPerArc; ++k) {
            const double t = a->t0() + (a->t1() - a->t0()) * static_cast<double>(k) / kCheckSamplesPerArc;
            pts.push_back(a->position(t));
        }
    }
    return pts;
}

double signed_area(const std::vector<Vec2>& pts)
{
    double acc = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) acc += cross(pts[i], pts[(i + 1) % pts.size()]);
    return 0.5 * acc;
}

Vec2 outward_normal(Vec2 d1)
{
    const Vec2 t = normalized(d1);
    return {t.y, -t.x};
}

}  // namespace

BoundaryCurve::BoundaryCurve(std::vector<ArcPtr> arcs, double closure_tolerance)
    : arcs_(std::move(arcs)), closure_tolerance_(closure_tolerance)
{
    if (arcs_.empty()) throw ConstructionError("boundary curve needs at least one arc");
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        const Arc& a = *arcs_[i];
        if (!(a.t1() > a.t0())) throw ConstructionError("arc " + std::to_string(i) + " has an empty parameter interval");
        for (std::size_t k = 0; k <= kCheckSamplesPerArc; ++k) {
            const double t = a.t0() + (a.t1() - a.t0()) * static_cast<double>(k) / kCheckSamplesPerArc;
            if (!(norm(a.first(t)) > 0.0)) throw ConstructionError("arc " + std::to_string(i) + " is not regular");
        }
        const Arc& next = *arcs_[(i + 1) % arcs_.size()];
        const double gap = norm(a.position(a.t1()) - next.position(next.t0()));
        if (!(gap <= closure_tolerance_))
            throw ConstructionError("arcs " + std::to_string(i) + " and " + std::to_string((i + 1) % arcs_.size())
                                    + " do not chain (gap " + std::to_string(gap) + ")");
    }

    auto poly = trace_polyline(arcs_);
    const std::size_t np = poly.size();
    for (std::size_t i = 0; i < np; ++i) {
        for (std::size_t j = i + 2; j < np; ++j) {
            if (i == 0 && j == np - 1) continue;
            if (segments_cross(poly[i], poly[(i + 1) % np], poly[j], poly[(j + 1) % np]))
                throw ConstructionError("boundary curve self-intersects");
        }
    }
    const double area = signed_area(poly);
    if (area == 0.0) throw ConstructionError("boundary curve encloses no area");
    if (area < 0.0) {
        supplied_ccw_ = false;
        std::vector<ArcPtr> rev;
        for (auto it = arcs_.rbegin(); it != arcs_.rend(); ++it) rev.push_back(std::make_shared<ReversedArc>(*it));
        arcs_ = std::move(rev);
        poly = trace_polyline(arcs_);
    }

    offsets_.assign(1, 0.0);
    for (const auto& a : arcs_) {
        LengthTable tab;
        tab.knots.resize(kTableIntervals + 1);
        tab.cumul.resize(kTableIntervals + 1);
        for (std::size_t k = 0; k <= kTableIntervals; ++k)
            tab.knots[k] = a->t0() + (a->t1() - a->t0()) * static_cast<double>(k) / kTableIntervals;
        tab.knots.back() = a->t1();
        tab.cumul[0] = 0.0;
        for (std::size_t k = 0; k < kTableIntervals; ++k)
            tab.cumul[k + 1] = tab.cumul[k] + gauss8(*a, tab.knots[k], tab.knots[k + 1]);
        if (!(tab.cumul.back() > 0.0)) throw ConstructionError("degenerate arc of zero length");
        offsets_.push_back(offsets_.back() + tab.cumul.back());
        tables_.push_back(std::move(tab));
    }

    bbox_ = {poly.front(), poly.front()};
    for (const auto& p : poly) {
        bbox_.lo = {std::min(bbox_.lo.x, p.x), std::min(bbox_.lo.y, p.y)};
        bbox_.hi = {std::max(bbox_.hi.x, p.x), std::max(bbox_.hi.y, p.y)};
    }
    const std::size_t stride = std::max<std::size_t>(1, poly.size() / 512);
    for (std::size_t i = 0; i < poly.size(); i += stride)
        for (std::size_t j = i + stride; j < poly.size(); j += stride)
            diameter_ = std::max(diameter_, norm(poly[i] - poly[j]));
}

double BoundaryCurve::length_between(std::size_t arc, double ta, double tb) const
{
    const auto& tab = tables_[arc];
    auto cum = [&](double t) {
        auto it = std::upper_bound(tab.knots.begin(), tab.knots.end(), t);
        std::size_t k = it == tab.knots.begin() ? 0 : static_cast<std::size_t>(it - tab.knots.begin()) - 1;
        k = std::min(k, kTableIntervals - 1);
        return tab.cumul[k] + gauss8(*arcs_[arc], tab.knots[k], t);
    };
    return cum(tb) - cum(ta);
}

BoundaryPoint BoundaryCurve::eval(CurveParam p) const
{
    if (p.arc >= arcs_.size()) throw DomainError("arc index out of range");
    const Arc& a = *arcs_[p.arc];
    const double slack = 1e-12 * (a.t1() - a.t0());
    if (!(p.t >= a.t0() - slack && p.t <= a.t1() + slack))
        throw DomainError("parameter " + std::to_string(p.t) + " outside arc interval");
    p.t = std::clamp(p.t, a.t0(), a.t1());

    BoundaryPoint out;
    out.param = p;
    out.s = arclength_of(p);
    out.position = a.position(p.t);
    const Vec2 d1 = a.first(p.t);
    const Vec2 d2 = a.second(p.t);
    const double speed = norm(d1);
    out.tangent = d1 / speed;
    out.normal = {out.tangent.y, -out.tangent.x};
    out.curvature = cross(d1, d2) / (speed * speed * speed);
    return out;
}

CurveParam BoundaryCurve::param_at_arclength(double s) const
{
    const double L = length();
    s = std::fmod(s, L);
    if (s < 0) s += L;
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), s);
    std::size_t arc = static_cast<std::size_t>(it - offsets_.begin()) - 1;
    arc = std::min(arc, arcs_.size() - 1);
    const double sigma = s - offsets_[arc];

    const auto& tab = tables_[arc];
    auto kt = std::upper_bound(tab.cumul.begin(), tab.cumul.end(), sigma);
    std::size_t k = kt == tab.cumul.begin() ? 0 : static_cast<std::size_t>(kt - tab.cumul.begin()) - 1;
    k = std::min(k, kTableIntervals - 1);
    const double lo = tab.knots[k], hi = tab.knots[k + 1];
    const double span = tab.cumul[k + 1] - tab.cumul[k];
    double t = span > 0 ? lo + (hi - lo) * (sigma - tab.cumul[k]) / span : lo;
    const Arc& a = *arcs_[arc];
    for (int it_n = 0; it_n < 8; ++it_n) {
        const double f = tab.cumul[k] + gauss8(a, lo, t) - sigma;
        const double step = f / norm(a.first(t));
        t = std::clamp(t - step, lo, hi);
        if (std::abs(step) <= 1e-15 * (1.0 + std::abs(t))) break;
    }
    return {arc, t};
}

BoundaryPoint BoundaryCurve::at_arclength(double s) const { return eval(param_at_arclength(s)); }

double BoundaryCurve::arclength_of(CurveParam p) const
{
    const Arc& a = *arcs_[p.arc];
    return offsets_[p.arc] + length_between(p.arc, a.t0(), std::clamp(p.t, a.t0(), a.t1()));
}

double BoundaryCurve::periodic_distance(double s1, double s2) const
{
    const double L = length();
    double d = std::fmod(std::abs(s1 - s2), L);
    return std::min(d, L - d);
}

BoundaryCurve BoundaryCurve::transformed(double scale, double rotation, Vec2 shift) const
{
    if (!(scale > 0.0)) throw DomainError("similarity scale must be positive");
    std::vector<ArcPtr> out;
    out.reserve(arcs_.size());
    for (const auto& a : arcs_) out.push_back(std::make_shared<SimilarityArc>(a, scale, rotation, shift));
    return BoundaryCurve(std::move(out), closure_tolerance_ * scale);
}

std::vector<BoundaryPoint> resample_arclength(const BoundaryCurve& curve, std::size_t n)
{
    if (n < 4) throw ConfigError("resample_arclength needs at least 4 samples");
    const auto corners = detect_corners(curve);
    const double L = curve.length();
    const double step = L / static_cast<double>(n);
    const double offset = corners.empty() ? 0.0 : 0.5 * step;
    std::vector<BoundaryPoint> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double s = offset + step * static_cast<double>(k);
        const bool on_corner = std::any_of(corners.begin(), corners.end(), [&](const CornerInfo& c) {
            return curve.periodic_distance(c.s, s) <= 1e-12 * L;
        });
        if (on_corner) continue;
        BoundaryPoint p = curve.at_arclength(s);
        p.s = s;
        out.push_back(p);
    }
    return out;
}

std::vector<CornerInfo> junctions(const BoundaryCurve& curve)
{
    std::vector<CornerInfo> out;
    const std::size_t n = curve.arc_count();
    for (std::size_t i = 0; i < n; ++i) {
        const Arc& in = curve.arc(i);
        const Arc& next = curve.arc((i + 1) % n);
        CornerInfo c;
        c.arc = i;
        c.s = curve.arc_offset(i) + curve.arc_length(i);
        if (c.s >= curve.length()) c.s -= curve.length();
        c.position = next.position(next.t0());
        c.nu_minus = outward_normal(in.first(in.t1()));
        c.nu_plus = outward_normal(next.first(next.t0()));
        c.delta_nu = c.nu_plus - c.nu_minus;
        c.turning_angle = std::atan2(cross(c.nu_minus, c.nu_plus), dot(c.nu_minus, c.nu_plus));
        c.convex = c.turning_angle >= 0.0;
        out.push_back(c);
    }
    return out;
}

std::vector<CornerInfo> detect_corners(const BoundaryCurve& curve, double angle_tol)
{
    auto all = junctions(curve);
    std::erase_if(all, [&](const CornerInfo& c) { return std::abs(c.turning_angle) <= angle_tol; });
    return all;
}

StarshapedCheck check_starshaped(std::span<const BoundaryPoint> samples)
{
    StarshapedCheck out;
    out.min_support = std::numeric_limits<double>::infinity();
    for (const auto& p : samples) out.min_support = std::min(out.min_support, dot(p.position, p.normal));
    out.starshaped = !samples.empty() && out.min_support > 0.0;
    return out;
}

StarshapedCheck check_starshaped(const BoundaryCurve& curve, std::size_t n)
{
    const auto samples = resample_arclength(curve, n);
    return check_starshaped(samples);
}

}  // namespace cutloc
