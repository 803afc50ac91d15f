#include "cutloc/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "cutloc/errors.hpp"
#include "cutloc/integrals.hpp"

namespace cutloc {

double f_value(std::span<const double> x)
{
    if (x.empty()) throw ConfigError("f needs at least one variable");
    // coefficients of prod (1 - s x_j) in powers of s
    std::vector<double> c{1.0};
    double sum = 0.0;
    for (double xj : x) {
        sum += xj;
        c.push_back(0.0);
        for (std::size_t k = c.size() - 1; k > 0; --k) c[k] -= xj * c[k - 1];
    }
    double integral = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) integral += c[k] / static_cast<double>(k + 1);
    return sum / static_cast<double>(x.size()) * integral;
}

FMax f_max_bruteforce(int n, std::size_t resolution)
{
    if (n < 2 || n > 4) throw ConfigError("f_max_bruteforce supports n in {2, 3, 4}");
    if (resolution < 200) throw ConfigError("resolution must be at least 200");
    const std::size_t dim = static_cast<std::size_t>(n - 1);
    const auto coord = [&](std::size_t i) {
        return i + 1 == resolution ? 1.0 : -3.0 + 4.0 * static_cast<double>(i) / static_cast<double>(resolution - 1);
    };
    FMax best;
    best.value = -std::numeric_limits<double>::infinity();
    std::vector<std::size_t> idx(dim, 0);
    std::vector<double> x(dim);
    for (;;) {
        double sum = 0.0;
        for (std::size_t j = 0; j < dim; ++j) sum += x[j] = coord(idx[j]);
        if (sum >= 0) {
            const double v = f_value(x);
            if (v > best.value) {
                best.value = v;
                best.argmax = x;
            }
        }
        std::size_t j = 0;
        while (j < dim && ++idx[j] == resolution) idx[j++] = 0;
        if (j == dim) break;
    }
    return best;
}

const char* to_string(CornerStatus s)
{
    switch (s) {
    case CornerStatus::none: return "none";
    case CornerStatus::convex_only: return "convex-only";
    case CornerStatus::concave_present: return "concave-present";
    }
    return "?";
}

const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::ball: return "ball";
    case Verdict::hypotheses_not_met: return "hypotheses-not-met";
    case Verdict::inapplicable: return "inapplicable";
    }
    return "?";
}

SymmetryReport criterion_report(const BoundaryCurve& curve, std::span<const CutSample> samples,
                                const NearestPointOracle& oracle, const SymmetryOptions& options)
{
    SymmetryReport r;
    std::vector<BoundaryPoint> smooth;
    std::vector<BoundaryPoint> all;
    double phi_sum = 0.0;
    r.phi_min = std::numeric_limits<double>::infinity();
    r.phi_max = -std::numeric_limits<double>::infinity();
    r.basic_bound_max = -std::numeric_limits<double>::infinity();
    double kmin = std::numeric_limits<double>::infinity(), kmax = -kmin;
    for (const CutSample& c : samples) {
        all.push_back(c.point);
        if (c.corner_limit) continue;
        smooth.push_back(c.point);
        phi_sum += c.phi;
        r.phi_min = std::min(r.phi_min, c.phi);
        r.phi_max = std::max(r.phi_max, c.phi);
        r.basic_bound_max = std::max(r.basic_bound_max, c.phi * c.point.curvature);
        kmin = std::min(kmin, c.point.curvature);
        kmax = std::max(kmax, c.point.curvature);
    }
    if (smooth.size() < 64) throw ConfigError("criterion needs at least 64 smooth samples");
    r.smooth_samples = smooth.size();
    r.phi_mean = phi_sum / static_cast<double>(smooth.size());
    r.phi_constancy = (r.phi_max - r.phi_min) / r.phi_mean;
    r.kappa_spread = kmax - kmin;

    r.area = area(curve);
    r.perimeter = perimeter(curve);
    r.ratio = r.area / r.perimeter;

    r.corners = detect_corners(curve);
    for (const CornerInfo& c : r.corners)
        r.corner_status = !c.convex ? CornerStatus::concave_present
                          : r.corner_status == CornerStatus::none ? CornerStatus::convex_only
                                                                  : r.corner_status;
    const StarshapedCheck star = check_starshaped(all);
    r.starshaped = star.starshaped;
    r.min_support = star.min_support;

    const double tol = options.tol > 0 ? options.tol : default_tol(curve);
    r.y0 = refine_curvature_max(curve, smooth);
    r.H_max = r.y0.curvature;
    r.hypothesis_H = r.H_max >= kmax - 1e-12;
    r.lambda_at_y0 = cut_value(curve, r.y0, oracle, tol);
    r.phi_at_y0 = phi_2d(r.lambda_at_y0, r.H_max);
    r.hypothesis_phi = r.phi_at_y0 >= r.ratio - options.phi_slack * curve.diameter();
    const bool constant_phi = r.phi_constancy <= options.constancy_threshold;

    r.route = "none";
    if (!r.starshaped) {
        r.verdict = Verdict::inapplicable;
        r.failing_check = "starshaped";
        r.notes.push_back("boundary is not starshaped with respect to the origin");
    } else if (r.corner_status == CornerStatus::concave_present) {
        r.verdict = Verdict::inapplicable;
        r.failing_check = "concave-corners";
    } else if (r.corner_status == CornerStatus::none && r.hypothesis_H && r.hypothesis_phi) {
        r.verdict = Verdict::ball;
        r.route = "max-curvature";
    } else if (constant_phi) {
        r.verdict = Verdict::ball;
        r.route = "constant-phi";
    } else {
        r.verdict = Verdict::hypotheses_not_met;
        r.failing_check = r.corner_status == CornerStatus::none ? "phi(y0) >= |Omega|/|dOmega|" : "phi-constancy";
    }
    if (r.corner_status == CornerStatus::concave_present && constant_phi) {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "phi is constant (%.6g) on the smooth part, yet the domain is not a ball: "
                      "concave corners are outside the theorem",
                      r.phi_mean);
        r.notes.push_back(buf);
    }
    if (r.corner_status != CornerStatus::none)
        r.notes.push_back("uniform exterior sphere condition assumed, not checked");
    if (r.verdict == Verdict::ball) r.notes.push_back("constant curvature plus Alexandrov's theorem gives the ball");
    return r;
}

ChainCheck inequality_chain_check(std::span<const CutSample> samples, const SymmetryReport& report, double tol)
{
    ChainCheck out;
    const double r0 = report.ratio * report.H_max;
    const double p0 = report.phi_at_y0 * report.H_max;
    for (const CutSample& c : samples) {
        if (c.corner_limit) continue;
        ChainEntry e{report.ratio * c.point.curvature, r0, p0, 0.5};
        out.link_max = out.link_max && e.ratio_H <= e.ratio_H0 + tol;
        out.entries.push_back(e);
    }
    out.link_phi = r0 <= p0 + tol;
    out.link_basic = p0 <= 0.5 + tol;
    if (!out.link_max) out.first_failure = "ratio*H(y) <= ratio*H(y0)";
    else if (!out.link_phi) out.first_failure = "ratio*H(y0) <= phi(y0)*H(y0)";
    else if (!out.link_basic) out.first_failure = "phi(y0)*H(y0) <= 1/2";
    return out;
}

}  // namespace cutloc
