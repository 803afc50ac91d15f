#include "cutloc/web.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cmath>
#include <limits>

#include <boost/math/tools/roots.hpp>

#include "cutloc/errors.hpp"
#include "cutloc/integrals.hpp"
#include "cutloc/quadrature.hpp"

namespace cutloc {

DivergenceOperator::DivergenceOperator(double p) : p_(p)
{
    if (!(p > 1)) throw ConfigError("p-Laplacian needs p > 1");
    double prev = m(0.0);
    if (prev != 0.0) throw ConfigError("m(0) must vanish");
    for (int k = 1; k <= 1024; ++k) {
        const double r = 10.0 * k / 1024.0;
        const double cur = m(r);
        if (!(cur > prev)) throw ConfigError("m(r) = A(r) r is not strictly increasing");
        prev = cur;
    }
}

DivergenceOperator DivergenceOperator::laplace() { return DivergenceOperator(2.0); }
DivergenceOperator DivergenceOperator::p_laplace(double p) { return DivergenceOperator(p); }

DivergenceOperator DivergenceOperator::parse(std::string_view spec)
{
    if (spec == "laplace") return laplace();
    if (spec.substr(0, 5) == "plap:") {
        const std::string_view num = spec.substr(5);
        double p = 0.0;
        const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), p);
        if (ec == std::errc() && ptr == num.data() + num.size()) return p_laplace(p);
    }
    throw ConfigError("unknown operator '" + std::string(spec) + "' (expected laplace or plap:p)");
}

double DivergenceOperator::A(double r) const { return p_ == 2.0 ? 1.0 : std::pow(r, p_ - 2.0); }

double DivergenceOperator::m(double r) const { return p_ == 2.0 ? r : std::pow(r, p_ - 1.0); }

double DivergenceOperator::m_inverse(double y) const
{
    if (y < 0) throw DomainError("m_inverse needs a nonnegative argument");
    if (y == 0) return 0.0;
    if (y > m(r_max_)) throw DomainError("operator range exceeded in m_inverse");
    double hi = 1.0;
    while (m(hi) < y) hi *= 2.0;
    const auto [a, b] = boost::math::tools::bisect([&](double r) { return m(r) - y; }, 0.0, hi,
                                                   boost::math::tools::eps_tolerance<double>(50));
    return 0.5 * (a + b);
}

std::string DivergenceOperator::name() const
{
    if (p_ == 2.0) return "laplace";
    char buf[32];
    std::snprintf(buf, sizeof buf, "plap:%g", p_);
    return buf;
}

WebProfile web_profile(const DivergenceOperator& op, double kappa, double lambda, std::span<const double> t)
{
    if (kappa * lambda > 1.0 + 1e-9) throw DegenerateRayError("kappa lambda > 1 on a web ray");
    WebProfile w;
    w.kappa = kappa;
    w.lambda = lambda;
    for (double ti : t) {
        if (ti < 0 || ti > lambda) throw DomainError("profile abscissa outside [0, lambda]");
        double g = 0.0;
        if (ti < lambda) {
            const double jac = 1.0 - ti * kappa;
            if (jac <= 0) throw DegenerateRayError("ray Jacobian vanishes before the cut point");
            g = -quad::integrate([&](double s) { return 1.0 - s * kappa; }, ti, lambda) / jac;
        }
        const double hp = g < 0 ? -op.m_inverse(-g) : op.m_inverse(g);
        w.t.push_back(ti);
        w.g.push_back(g);
        w.hprime.push_back(hp);
        w.flux.push_back(std::copysign(op.m(std::abs(hp)), hp) * (1.0 - ti * kappa));
    }
    return w;
}

bool ArcWindow::contains(const BoundaryCurve& curve, double s) const
{
    const double L = curve.length();
    if (end - start >= L) return true;
    const auto wrap = [L](double v) {
        v = std::fmod(v, L);
        return v < 0 ? v + L : v;
    };
    return wrap(s - start) <= wrap(end - start);
}

namespace {

std::vector<BoundaryPoint> smooth_points(std::span<const CutSample> samples)
{
    std::vector<BoundaryPoint> pts;
    for (const CutSample& c : samples)
        if (!c.corner_limit) pts.push_back(c.point);
    return pts;
}

struct WindowMax {
    BoundaryPoint y0;
    bool attained = false;
};

WindowMax kappa_max_on_window(const BoundaryCurve& curve, const ArcWindow& gamma, std::span<const CutSample> samples)
{
    const auto all = smooth_points(samples);
    std::vector<BoundaryPoint> inside;
    for (const auto& p : all)
        if (gamma.contains(curve, p.s)) inside.push_back(p);
    if (inside.empty()) throw ConfigError("no boundary samples fall in the window");
    double kmax = -std::numeric_limits<double>::infinity();
    for (const auto& p : all) kmax = std::max(kmax, p.curvature);
    WindowMax w;
    w.y0 = refine_curvature_max(curve, inside);
    if (!gamma.contains(curve, w.y0.s)) {
        // the polished point slipped out of the window; keep the best sample
        w.y0 = *std::max_element(inside.begin(), inside.end(),
                                 [](const BoundaryPoint& a, const BoundaryPoint& b) { return a.curvature < b.curvature; });
    }
    w.attained = w.y0.curvature >= kmax - 1e-9 * std::max(1.0, std::abs(kmax));
    return w;
}

}  // namespace

Teo10 teo10_residual(const BoundaryCurve& curve, const ArcWindow& gamma, const DivergenceOperator& op,
                     std::span<const CutSample> samples, const NearestPointOracle& oracle, double tol)
{
    if (!detect_corners(curve).empty()) throw InapplicableError("the web identity needs a smooth boundary");
    const auto pts = smooth_points(samples);
    if (!check_starshaped(pts).starshaped) throw InapplicableError("boundary is not starshaped");
    const WindowMax w = kappa_max_on_window(curve, gamma, samples);
    if (!w.attained) throw InapplicableError("maximum of the curvature is not attained on the window");
    Teo10 r;
    r.y0 = w.y0;
    r.lambda = cut_value(curve, r.y0, oracle, tol);
    r.phi = phi_2d(r.lambda, r.y0.curvature);
    const double t0[] = {0.0};
    const WebProfile prof = web_profile(op, r.y0.curvature, r.lambda, t0);
    r.hprime0 = prof.hprime[0];
    r.flux0 = prof.flux[0];
    r.residual = std::abs(std::copysign(op.m(std::abs(r.hprime0)), r.hprime0) + r.phi);
    return r;
}

PartialWebCheck teopartialweb_check(const BoundaryCurve& curve, const ArcWindow& gamma, const DivergenceOperator& op,
                                    std::span<const double> eps, std::span<const CutSample> samples,
                                    const NearestPointOracle& oracle, const SymmetryOptions& options)
{
    PartialWebCheck out;
    const bool cornered = !detect_corners(curve).empty();
    const auto pts = smooth_points(samples);
    const bool star = check_starshaped(pts).starshaped;
    const WindowMax w = kappa_max_on_window(curve, gamma, samples);
    out.max_kappa_on_gamma = w.attained;

    out.boundary_flux.assign(samples.size(), 0.0);
    out.flux_max_all = out.flux_max_gamma = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < samples.size(); ++k) {
        const CutSample& c = samples[k];
        if (c.corner_limit) continue;
        const double t0[] = {0.0};
        const double q = -web_profile(op, c.point.curvature, c.lambda, t0).flux[0];
        out.boundary_flux[k] = q;
        out.flux_max_all = std::max(out.flux_max_all, q);
        if (gamma.contains(curve, c.point.s)) out.flux_max_gamma = std::max(out.flux_max_gamma, q);
    }
    out.max_flux_on_gamma = out.flux_max_gamma >= out.flux_max_all - 1e-9 * std::max(1.0, out.flux_max_all);

    for (double e : eps) {
        CollarDefect cd{e, -std::numeric_limits<double>::infinity()};
        for (const CutSample& c : samples) {
            if (c.corner_limit) continue;
            const double top = std::min(e, c.lambda);
            std::vector<double> ts;
            for (int i = 0; i < 8; ++i) ts.push_back(top * i / 8.0);
            const WebProfile prof = web_profile(op, c.point.curvature, c.lambda, ts);
            // u = h(d) gives A(|grad u|) <grad u, grad d> = -g(t) along each ray
            for (double g : prof.g) cd.defect = std::max(cd.defect, -g - out.flux_max_gamma);
        }
        out.collar.push_back(cd);
    }

    out.ratio = area(curve) / perimeter(curve);
    const double tol = options.tol > 0 ? options.tol : default_tol(curve);
    out.phi_at_y0 = phi_2d(cut_value(curve, w.y0, oracle, tol), w.y0.curvature);
    out.chain = out.phi_at_y0 >= out.ratio - options.phi_slack * curve.diameter();

    if (!out.max_kappa_on_gamma) out.failing.push_back("(i) max kappa on Gamma");
    if (!out.chain) out.failing.push_back("phi(y0) >= |Omega|/|dOmega|");
    if (!out.max_flux_on_gamma) out.failing.push_back("(ii') max flux on Gamma");
    if (cornered || !star) {
        out.verdict = Verdict::inapplicable;
        out.failing_check = cornered ? "corners" : "starshaped";
    } else if (out.failing.empty()) {
        out.verdict = Verdict::ball;
    } else {
        out.verdict = Verdict::hypotheses_not_met;
        out.failing_check = out.failing.front();
    }
    return out;
}

}  // namespace cutloc
