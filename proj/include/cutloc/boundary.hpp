#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "cutloc/vec2.hpp"

namespace cutloc {

/// One C2 piece of a boundary: a regular parametric map on [t0, t1] with
/// first and second derivatives.
class Arc {
public:
    Arc(double t0, double t1) : t0_(t0), t1_(t1) {}
    virtual ~Arc() = default;

    double t0() const { return t0_; }
    double t1() const { return t1_; }

    virtual Vec2 position(double t) const = 0;
    virtual Vec2 first(double t) const = 0;
    virtual Vec2 second(double t) const = 0;

private:
    double t0_;
    double t1_;
};

using ArcPtr = std::shared_ptr<const Arc>;

/// Position on a curve: arc index and the arc's own parameter.
struct CurveParam {
    std::size_t arc = 0;
    double t = 0.0;
};

/// Pointwise geometry. The normal points out of the domain, the tangent follows the
/// counterclockwise orientation, and the curvature is positive where the domain is
/// locally convex (a circle of radius R has curvature 1/R).
struct BoundaryPoint {
    CurveParam param;
    double s = 0.0;  ///< arclength from the start of arc 0
    Vec2 position;
    Vec2 tangent;
    Vec2 normal;
    double curvature = 0.0;
};

/// Junction between arc `arc` (incoming) and the next arc (outgoing).
struct CornerInfo {
    std::size_t arc = 0;
    double s = 0.0;
    Vec2 position;
    Vec2 nu_minus;   ///< outward normal of the incoming arc at the junction
    Vec2 nu_plus;    ///< outward normal of the outgoing arc at the junction
    Vec2 delta_nu;   ///< nu_plus - nu_minus
    double turning_angle = 0.0;  ///< signed exterior angle, positive for convex corners
    bool convex = true;
};

struct BBox {
    Vec2 lo;
    Vec2 hi;
};

/// Closed, simple, counterclockwise planar curve made of C2 arcs chained head to tail.
///
/// Construction validates closure, regularity and simplicity (at sampling
/// resolution) and reorients clockwise input. The object is immutable.
class BoundaryCurve {
public:
    explicit BoundaryCurve(std::vector<ArcPtr> arcs, double closure_tolerance = 1e-9);

    std::size_t arc_count() const { return arcs_.size(); }
    const Arc& arc(std::size_t i) const { return *arcs_[i]; }
    const std::vector<ArcPtr>& arcs() const { return arcs_; }
    double closure_tolerance() const { return closure_tolerance_; }
    /// True when the arcs were supplied counterclockwise (no reorientation needed).
    bool supplied_counterclockwise() const { return supplied_ccw_; }

    double length() const { return offsets_.back(); }
    double arc_length(std::size_t i) const { return offsets_[i + 1] - offsets_[i]; }
    double arc_offset(std::size_t i) const { return offsets_[i]; }
    double diameter() const { return diameter_; }
    BBox bbox() const { return bbox_; }

    /// Throws DomainError when the parameter lies outside its arc's interval.
    BoundaryPoint eval(CurveParam p) const;
    /// Arclength is taken modulo the length.
    BoundaryPoint at_arclength(double s) const;
    CurveParam param_at_arclength(double s) const;
    double arclength_of(CurveParam p) const;
    /// Distance between two arclength positions measured along the closed curve.
    double periodic_distance(double s1, double s2) const;

    /// Image under x -> scale * R(rotation) x + shift.
    BoundaryCurve transformed(double scale, double rotation, Vec2 shift) const;

private:
    struct LengthTable {
        std::vector<double> knots;  // parameter values
        std::vector<double> cumul;  // arclength from arc start at each knot
    };

    double length_between(std::size_t arc, double ta, double tb) const;

    std::vector<ArcPtr> arcs_;
    double closure_tolerance_;
    bool supplied_ccw_ = true;
    std::vector<LengthTable> tables_;
    std::vector<double> offsets_;
    double diameter_ = 0.0;
    BBox bbox_;
};

/// n points approximately equispaced in arclength. Smooth curves start at s = 0;
/// curves with corners are shifted by half a step so that no sample sits on a corner.
std::vector<BoundaryPoint> resample_arclength(const BoundaryCurve& curve, std::size_t n);

/// Every arc junction, including C1 ones, with its normal jump.
std::vector<CornerInfo> junctions(const BoundaryCurve& curve);

/// Junctions whose normals turn by more than angle_tol.
std::vector<CornerInfo> detect_corners(const BoundaryCurve& curve, double angle_tol = 1e-6);

struct StarshapedCheck {
    bool starshaped = false;
    double min_support = 0.0;  ///< min over samples of <y, nu(y)>
};

StarshapedCheck check_starshaped(std::span<const BoundaryPoint> samples);
StarshapedCheck check_starshaped(const BoundaryCurve& curve, std::size_t n);

}  // namespace cutloc
