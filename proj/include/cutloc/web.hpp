#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cutloc/boundary.hpp"
#include "cutloc/cutlocus.hpp"
#include "cutloc/symmetry.hpp"

namespace cutloc {

/// A in -div(A(|grad u|) grad u) = 1, with m(r) = A(r) r strictly increasing.
class DivergenceOperator {
public:
    static DivergenceOperator laplace();
    /// A(r) = r^(p - 2), p > 1.
    static DivergenceOperator p_laplace(double p);
    /// "laplace" or "plap:p".
    static DivergenceOperator parse(std::string_view spec);

    double A(double r) const;
    /// A(r) r, taken as r^(p - 1) so that m(0) = 0 also for p < 2.
    double m(double r) const;
    /// Bisection inverse of m on [0, r_max]; throws DomainError beyond the range.
    double m_inverse(double y) const;
    std::string name() const;
    double p() const { return p_; }

private:
    explicit DivergenceOperator(double p);
    double p_;
    double r_max_ = 1e6;
};

/// Sign convention: hprime is the derivative of u along the inward ray (u_nu), so it is <= 0.
struct WebProfile {
    double kappa = 0.0, lambda = 0.0;
    std::vector<double> t, g, hprime, flux;  ///< flux F(t) = A(|h'|) h' (1 - t kappa)
};

/// g(t) = -(1/(1 - t kappa)) * integral over [t, lambda] of (1 - s kappa), h' = sign(g) m^-1(|g|).
/// Throws DegenerateRayError when kappa lambda > 1.
WebProfile web_profile(const DivergenceOperator& op, double kappa, double lambda, std::span<const double> t);

/// Arclength window of the boundary; end < start wraps through s = 0.
struct ArcWindow {
    double start = 0.0, end = 0.0;
    bool contains(const BoundaryCurve& curve, double s) const;
};

struct Teo10 {
    BoundaryPoint y0;
    double lambda = 0.0, phi = 0.0, hprime0 = 0.0, flux0 = 0.0;
    double residual = 0.0;  ///< |A(|h'(0)|) h'(0) + phi(y0)|
};

/// Throws InapplicableError when the curve has corners, is not starshaped, or the
/// maximum of the curvature is not attained on the window.
Teo10 teo10_residual(const BoundaryCurve& curve, const ArcWindow& gamma, const DivergenceOperator& op,
                     std::span<const CutSample> samples, const NearestPointOracle& oracle, double tol);

struct CollarDefect {
    double eps = 0.0;
    double defect = 0.0;  ///< max over rays and t < eps of A<grad u, grad d> minus the window value
};

struct PartialWebCheck {
    bool max_kappa_on_gamma = false;         ///< hypothesis (i)
    bool max_flux_on_gamma = false;          ///< hypothesis (ii')
    double flux_max_all = 0.0;               ///< max over the boundary of -A(|h'(0)|) h'(0)
    double flux_max_gamma = 0.0;             ///< same, restricted to the window
    std::vector<double> boundary_flux;       ///< -F(0) per sample (0 at corner-limit samples)
    std::vector<CollarDefect> collar;
    double phi_at_y0 = 0.0;
    double ratio = 0.0;
    bool chain = false;                      ///< phi(y0) >= |Omega| / |boundary|
    Verdict verdict = Verdict::hypotheses_not_met;
    std::string failing_check;
    std::vector<std::string> failing;
};

PartialWebCheck teopartialweb_check(const BoundaryCurve& curve, const ArcWindow& gamma, const DivergenceOperator& op,
                                    std::span<const double> eps, std::span<const CutSample> samples,
                                    const NearestPointOracle& oracle, const SymmetryOptions& options = {});

}  // namespace cutloc
