#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "cutloc/boundary.hpp"
#include "cutloc/projection.hpp"

namespace cutloc {

struct CutSample {
    BoundaryPoint point;
    double lambda = 0.0;
    double phi = 0.0;
    double lambda_kappa = 0.0;
    bool corner_limit = false;  ///< sample next to a corner; lambda and phi reported as 0
};

/// Arclength tolerance under which the projection of y - t nu counts as y itself.
double cut_acceptance(const NearestPointOracle& oracle, double tol);

/// "The nearest boundary point of y - t nu(y) is y."
bool cut_predicate(const BoundaryCurve& curve, const BoundaryPoint& y, const NearestPointOracle& oracle, double t,
                   double tol);

/// Cut value by bisection on the predicate over [0, min(diameter, 1/kappa+)].
/// Throws DegenerateRayError when the predicate already fails at t = tol.
double cut_value(const BoundaryCurve& curve, const BoundaryPoint& y, const NearestPointOracle& oracle, double tol);

inline double default_tol(const BoundaryCurve& curve) { return 1e-6 * curve.diameter(); }

/// lambda - lambda^2 kappa / 2
double phi_2d(double lambda, double kappa);
/// Integral over [0, lambda] of prod (1 - t kappa_j).
double phi_general(double lambda, std::span<const double> kappas, double abs_tol = 1e-10);

/// Cut samples for every boundary point; samples within 10 tol of a corner get the corner-limit flag.
std::vector<CutSample> compute_cut_samples(const BoundaryCurve& curve, std::span<const BoundaryPoint> points,
                                           const NearestPointOracle& oracle, double tol);

/// Max of kappa * lambda.
double verify_kd(std::span<const CutSample> samples);

/// Maximizer of the curvature: best sample, polished by Brent's method along arclength.
BoundaryPoint refine_curvature_max(const BoundaryCurve& curve, std::span<const BoundaryPoint> points);

struct FocalCheck {
    BoundaryPoint y0;
    double lambda = 0.0;
    double residual = 0.0;  ///< |kappa(y0) lambda(y0) - 1|
};

/// Throws InapplicableError on cornered curves or when max curvature is not positive.
FocalCheck focal_check(const BoundaryCurve& curve, std::span<const BoundaryPoint> points,
                       const NearestPointOracle& oracle, double tol);

/// Largest |lambda(a) - lambda(b)| / |s(a) - s(b)| over consecutive smooth samples.
double lambda_lipschitz(const BoundaryCurve& curve, std::span<const CutSample> samples);

/// X(sigma, t) = Y(sigma) - t N(sigma) over an arclength window, sampled at midpoints.
struct NormalRayChart {
    double s0 = 0.0, s1 = 0.0;
    std::vector<double> sigma;
    std::vector<Vec2> Y, N;
    std::vector<double> K, Lambda;

    std::size_t size() const { return sigma.size(); }
    Vec2 X(std::size_t k, double t) const { return Y[k] - t * N[k]; }
    double J(std::size_t k, double t) const { return 1.0 - t * K[k]; }
};

/// Throws DomainError when a corner lies strictly inside the window.
NormalRayChart build_ray_chart(const BoundaryCurve& curve, double s0, double s1, std::size_t n,
                               const NearestPointOracle& oracle, double tol);

/// Columns s,x,y,nx,ny,kappa,lambda,phi,kappa_lambda.
void write_samples_csv(std::ostream& os, std::span<const CutSample> samples);

}  // namespace cutloc
