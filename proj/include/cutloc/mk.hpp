#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "cutloc/boundary.hpp"
#include "cutloc/cutlocus.hpp"
#include "cutloc/distfield.hpp"
#include "cutloc/fields.hpp"
#include "cutloc/integrals.hpp"
#include "cutloc/symmetry.hpp"

namespace cutloc {

struct VfValue {
    double v = 0.0;
    bool singular = false;
    bool corner_limit = false;
    double d = 0.0, tau = 0.0, kappa = 0.0, lambda = 0.0;
};

/// Ray integral of f(x - t nu) (1 - (d + t) kappa) / (1 - d kappa) over [0, tau],
/// tau = lambda(pi(x)) - d(x). Points on the cut locus (tau <= tol, or flagged by a
/// distance field) get 0. Throws DegenerateRayError when 1 - d kappa <= 1e-12.
VfValue vf_at(const BoundaryCurve& curve, Vec2 x, const SourceField& f, const NearestPointOracle& oracle, double tol);

/// Boundary trace: integral of f(y - t nu)(1 - t kappa) over [0, lambda(y)].
VfValue vf_boundary(const BoundaryCurve& curve, const BoundaryPoint& y, const SourceField& f,
                    const NearestPointOracle& oracle, double tol);
/// Same, reusing a computed cut sample.
VfValue vf_boundary(const CutSample& sample, const SourceField& f);

/// Periodic piecewise-linear lambda(s) through the cut samples, pinned to 0 at convex corners.
class LambdaTable {
public:
    LambdaTable(const BoundaryCurve& curve, std::span<const CutSample> samples);
    double operator()(double s) const;

private:
    double length_;
    std::vector<double> s_, lambda_;
};

struct MKSummary {
    std::size_t valid_cells = 0;
    double max_abs_residual = 0.0;
    double median_abs_residual = 0.0;
    double l1_residual = 0.0;
    double complementarity_max = 0.0;  ///< max of (1 - |grad u|) v over non-singular inside cells
    double v_max = 0.0;
    double v_min = 0.0;
    double max_jump = 0.0;             ///< between neighbouring non-singular inside cells
    double continuity_bound = 0.0;     ///< 10 max v / inradius * h
    double inradius = 0.0;
};

struct MKSolution {
    GridSpec grid;
    std::vector<double> u, v, tau, residual;  ///< residual is NaN outside the valid stencil region
    std::vector<std::uint8_t> inside, singular, valid;
    MKSummary summary;

    /// Columns x,y,u,v,tau,residual,singular for inside cells.
    void write_csv(std::ostream& os) const;
};

MKSolution vf_field(const BoundaryCurve& curve, const DistanceField& field, std::span<const CutSample> samples,
                    const SourceField& f);

/// (1/eps) * integral over {d < eps} of v <grad u, grad d> against the integral of f min(d/eps, 1).
IntegralReport tent_weak_form(const MKSolution& solution, const SourceField& f, double eps);

struct MKVerdict {
    double gamma = 0.0;
    double trace_min = 0.0, trace_max = 0.0, trace_mean = 0.0;
    SymmetryReport report;
};

/// Boundary trace gamma * phi fed into the symmetry criterion. Throws ConfigError unless gamma > 0.
MKVerdict mk_verdict(const BoundaryCurve& curve, double gamma, std::span<const CutSample> samples,
                     const NearestPointOracle& oracle, const SymmetryOptions& options = {});

}  // namespace cutloc
