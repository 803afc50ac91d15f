#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>

#include "cutloc/boundary.hpp"
#include "cutloc/cutlocus.hpp"
#include "cutloc/distfield.hpp"
#include "cutloc/fields.hpp"

namespace cutloc {

struct IntegralReport {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_residual = 0.0;
    double rel_residual = 0.0;
    std::size_t samples_used = 0;
    std::map<std::string, double> extra;  ///< named intermediate terms
};

/// Fills the residual fields from lhs and rhs.
IntegralReport make_report(std::string name, double lhs, double rhs, std::size_t samples_used);

double perimeter(const BoundaryCurve& curve);
/// Half the boundary integral of <y, nu>.
double area(const BoundaryCurve& curve);

/// Integral of kappa <y, nu> against the perimeter. Throws InapplicableError on cornered curves.
IntegralReport minkowski_residual(const BoundaryCurve& curve);

/// Curvature integral minus the junction sum of <y_i, R delta_nu>, against the perimeter.
/// Extra terms: curvature_integral, corner_sum, max_corner_term.
/// Throws InapplicableError when a concave corner is present.
IntegralReport minkowski_residual_corners(const BoundaryCurve& curve);

struct CovIntegral {
    double value = 0.0;
    std::size_t used = 0;
    std::size_t skipped = 0;  ///< corner-limit samples left out of the outer sum
};

/// Ray-side integral: midpoint rule over equispaced samples, Gauss-Kronrod along each ray.
/// Throws InapplicableError when a concave corner is present.
CovIntegral cov_integral(const BoundaryCurve& curve, std::span<const CutSample> samples, const Polynomial2& h);

/// Grid-side integral with a one-cell ramp weight on the signed distance.
double grid_integral(const DistanceField& field, const Polynomial2& h);

IntegralReport cov_residual(const BoundaryCurve& curve, std::span<const CutSample> samples, const Polynomial2& h,
                            const DistanceField& field);

struct CovConvergence {
    IntegralReport coarse;
    IntegralReport fine;
    double ratio = 0.0;  ///< fine / coarse absolute residual
};

/// Residual at spacing h0 and h0 / 2.
CovConvergence cov_convergence(const BoundaryCurve& curve, std::span<const CutSample> samples, const Polynomial2& h,
                               double h0, std::size_t boundary_samples = 4096);

/// Arclength average of phi against |Omega| / |boundary|.
IntegralReport mean_value_identity(const BoundaryCurve& curve, std::span<const CutSample> samples);

}  // namespace cutloc
