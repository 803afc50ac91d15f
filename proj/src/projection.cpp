#include "cutloc/projection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/tools/minima.hpp>

#include "cutloc/errors.hpp"

namespace cutloc {

namespace {
constexpr std::size_t kChunk = 32;
}

double minimize_distance_on_arc(const Arc& arc, Vec2 x, double ta, double tb, double seed)
{
    if (tb < ta) std::swap(ta, tb);
    auto g = [&](double t) { return dot(arc.position(t) - x, arc.first(t)); };
    auto f = [&](double t) { return norm2(arc.position(t) - x); };
    // safeguarded Newton on g over a sign-changing bracket
    auto newton = [&](double lo, double hi, double t) {
        t = std::clamp(t, lo, hi);
        for (int it = 0; it < 100; ++it) {
            const Vec2 d = arc.position(t) - x;
            const Vec2 d1 = arc.first(t);
            const double gt = dot(d, d1);
            if (gt < 0.0)
                lo = t;
            else if (gt > 0.0)
                hi = t;
            else
                break;
            const double dg = norm2(d1) + dot(d, arc.second(t));
            double next = dg > 0.0 ? t - gt / dg : 0.5 * (lo + hi);
            if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
            const double step = std::abs(next - t);
            t = next;
            if (step <= 1e-15 * (1.0 + std::abs(t)) || hi - lo <= 1e-15 * (1.0 + std::abs(t))) break;
        }
        return t;
    };

    double best_t = f(ta) <= f(tb) ? ta : tb;
    double best_f = f(best_t);
    auto consider = [&](double t) {
        const double ft = f(t);
        if (ft <= best_f) {
            best_t = t;
            best_f = ft;
        }
    };
    if (g(ta) < 0.0 && g(tb) > 0.0) {
        consider(newton(ta, tb, seed));
        return best_t;
    }
    // no clean bracket, e.g. an endpoint sits on a stationary maximum near a focal point
    const double tm = boost::math::tools::brent_find_minima(f, ta, tb, std::numeric_limits<double>::digits / 2).first;
    const double delta = 1e-6 * (tb - ta);
    const double lo = std::max(ta, tm - delta), hi = std::min(tb, tm + delta);
    consider(g(lo) < 0.0 && g(hi) > 0.0 ? newton(lo, hi, tm) : tm);
    return best_t;
}

BoundaryProjector::BoundaryProjector(const BoundaryCurve& curve, std::size_t samples) : curve_(curve)
{
    if (samples < 64) throw ConstructionError("projector needs at least 64 samples");
    const double L = curve_.length();
    // Per-arc sampling proportional to length; every arc keeps its start point so
    // corner points are represented exactly.
    for (std::size_t a = 0; a < curve_.arc_count(); ++a) {
        const double len = curve_.arc_length(a);
        const auto n = std::max<std::size_t>(4, static_cast<std::size_t>(std::ceil(samples * len / L)));
        for (std::size_t k = 0; k < n; ++k) {
            const double s = curve_.arc_offset(a) + len * static_cast<double>(k) / static_cast<double>(n);
            CurveParam p = k == 0 ? CurveParam{a, curve_.arc(a).t0()} : curve_.param_at_arclength(s);
            if (p.arc != a) p = {a, p.arc < a ? curve_.arc(a).t0() : curve_.arc(a).t1()};
            const Vec2 y = curve_.arc(a).position(p.t);
            xs_.push_back(y.x);
            ys_.push_back(y.y);
            ts_.push_back(p.t);
            arc_of_.push_back(a);
        }
    }
    spacing_ = L / static_cast<double>(xs_.size());
    for (std::size_t b = 0; b < xs_.size(); b += kChunk) {
        Chunk c{{}, 0.0, b, std::min(b + kChunk, xs_.size())};
        for (std::size_t k = c.begin; k < c.end; ++k) c.center += Vec2{xs_[k], ys_[k]};
        c.center = c.center / static_cast<double>(c.end - c.begin);
        for (std::size_t k = c.begin; k < c.end; ++k) c.radius = std::max(c.radius, norm(Vec2{xs_[k], ys_[k]} - c.center));
        chunks_.push_back(c);
    }
    for (const auto& c : detect_corners(curve_)) corner_s_.push_back(c.s);
}

bool BoundaryProjector::corner_between(double s1, double s2) const
{
    const double L = curve_.length();
    double a = std::min(s1, s2), b = std::max(s1, s2);
    const bool wrap = b - a > 0.5 * L;
    const double eps = 1e-12 * L;
    for (double c : corner_s_) {
        const bool inside = c > a + eps && c < b - eps;
        if (wrap ? !inside && c != a && c != b : inside) return true;
    }
    return false;
}

double BoundaryProjector::sample_dist(Vec2 x, std::size_t k) const
{
    return std::hypot(xs_[k] - x.x, ys_[k] - x.y);
}

Projection BoundaryProjector::make_projection(Vec2 x, std::size_t arc, double t, std::size_t k) const
{
    Projection p;
    p.param = {arc, t};
    p.point = curve_.arc(arc).position(t);
    p.distance = norm(p.point - x);
    p.s = curve_.arclength_of(p.param);
    p.sample = k;
    return p;
}

Projection BoundaryProjector::refine_near(Vec2 x, std::size_t k) const
{
    const std::size_t n = xs_.size();
    const std::size_t prev = (k + n - 1) % n, next = (k + 1) % n;
    const std::size_t a = arc_of_[k];
    const Arc& arc = curve_.arc(a);

    const double lo = arc_of_[prev] == a && prev < k ? ts_[prev] : arc.t0();
    const double hi = arc_of_[next] == a && next > k ? ts_[next] : arc.t1();
    Projection best = make_projection(x, a, minimize_distance_on_arc(arc, x, lo, hi, ts_[k]), k);

    if (arc_of_[prev] != a || prev > k) {
        const std::size_t pa = arc_of_[prev];
        const Arc& parc = curve_.arc(pa);
        const double plo = arc_of_[prev] == pa ? ts_[prev] : parc.t0();
        auto cand = make_projection(x, pa, minimize_distance_on_arc(parc, x, plo, parc.t1(), parc.t1()), k);
        if (cand.distance < best.distance) best = cand;
    }
    if (arc_of_[next] != a || next < k) {
        const std::size_t na = arc_of_[next];
        const Arc& narc = curve_.arc(na);
        const double nhi = ts_[next];
        if (nhi > narc.t0()) {
            auto cand = make_projection(x, na, minimize_distance_on_arc(narc, x, narc.t0(), nhi, narc.t0()), k);
            if (cand.distance < best.distance) best = cand;
        }
    }
    return best;
}

std::vector<Projection> BoundaryProjector::candidates(Vec2 x, double slack, std::size_t max_refine) const
{
    const std::size_t n = xs_.size();
    double ub = std::numeric_limits<double>::infinity();
    std::vector<double> lb(chunks_.size());
    for (std::size_t c = 0; c < chunks_.size(); ++c) {
        const double dc = norm(x - chunks_[c].center);
        lb[c] = dc - chunks_[c].radius;
        ub = std::min(ub, dc + chunks_[c].radius);
    }
    // distances of unpruned samples; pruned ones stay +inf, which is above every limit
    thread_local std::vector<double> d;
    d.assign(n, std::numeric_limits<double>::infinity());
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < chunks_.size(); ++c) {
        if (lb[c] > ub) continue;
        for (std::size_t k = chunks_[c].begin; k < chunks_[c].end; ++k) best = std::min(best, d[k] = sample_dist(x, k));
    }
    const double limit = best + slack;
    std::vector<std::pair<double, std::size_t>> minima;
    for (std::size_t c = 0; c < chunks_.size(); ++c) {
        if (lb[c] > limit) continue;
        for (std::size_t k = chunks_[c].begin; k < chunks_[c].end; ++k) {
            const double dk = d[k];
            if (dk > limit) continue;
            if (dk <= d[(k + n - 1) % n] && dk <= d[(k + 1) % n]) minima.emplace_back(dk, k);
        }
    }
    // equidistant arcs (x at a center of curvature) make every sample a tie
    if (minima.size() > max_refine) {
        std::partial_sort(minima.begin(), minima.begin() + static_cast<std::ptrdiff_t>(max_refine), minima.end());
        minima.resize(max_refine);
    }

    std::vector<Projection> out;
    for (const auto& [dk, k] : minima) {
        Projection p = refine_near(x, k);
        bool merged = false;
        for (auto& q : out) {
            if (curve_.periodic_distance(p.s, q.s) <= 2.0 * spacing_) {
                if (p.distance < q.distance) q = p;
                merged = true;
                break;
            }
        }
        if (!merged) out.push_back(p);
    }
    std::sort(out.begin(), out.end(), [](const Projection& a, const Projection& b) { return a.distance < b.distance; });
    return out;
}

Projection BoundaryProjector::descend(Vec2 x, std::size_t k) const
{
    const std::size_t n = xs_.size();
    double dk = sample_dist(x, k);
    for (std::size_t step = 0; step < n; ++step) {
        const std::size_t prev = (k + n - 1) % n, next = (k + 1) % n;
        const double dp = sample_dist(x, prev), dn = sample_dist(x, next);
        if (dp >= dk && dn >= dk) break;
        if (dp < dn) { k = prev; dk = dp; }
        else { k = next; dk = dn; }
    }
    return refine_near(x, k);
}

Projection BoundaryProjector::nearest(Vec2 x) const
{
    auto c = candidates(x, spacing_, 16);
    return c.front();
}

ProjectionAnalysis BoundaryProjector::analyze(Vec2 x, double separation, double cap) const
{
    auto c = candidates(x, cap + spacing_, 64);
    ProjectionAnalysis out;
    out.best = c.front();
    out.gap = cap;
    for (std::size_t i = 1; i < c.size(); ++i) {
        if (curve_.periodic_distance(c[i].s, out.best.s) < separation && !corner_between(c[i].s, out.best.s)) continue;
        out.second = c[i];
        out.gap = std::min(cap, c[i].distance - out.best.distance);
        break;
    }
    return out;
}

}  // namespace cutloc
