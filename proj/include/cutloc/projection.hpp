#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cutloc/boundary.hpp"

namespace cutloc {

/// Nearest boundary point of a query point.
struct Projection {
    CurveParam param;
    double s = 0.0;
    Vec2 point;
    double distance = 0.0;
    std::size_t sample = 0;  ///< dense sample that seeded the refinement
};

/// Anything that can answer "which boundary point is closest to x".
class NearestPointOracle {
public:
    virtual ~NearestPointOracle() = default;
    virtual Projection nearest(Vec2 x) const = 0;
    /// Length scale below which two projections are indistinguishable (0 for exact oracles).
    virtual double resolution() const = 0;
};

/// Result of a multi-basin search: the global minimizer and the best competing
/// local minimizer lying at least `separation` away in arclength or across a corner.
struct ProjectionAnalysis {
    Projection best;
    std::optional<Projection> second;
    double gap = 0.0;  ///< second.distance - best.distance, capped
};

/// Exact projector: global search over a dense arclength sampling followed by a
/// safeguarded Newton solve of <Y(t) - x, Y'(t)> = 0 on the owning arc.
class BoundaryProjector final : public NearestPointOracle {
public:
    explicit BoundaryProjector(const BoundaryCurve& curve, std::size_t samples = 4096);

    Projection nearest(Vec2 x) const override;
    double resolution() const override { return 0.0; }

    ProjectionAnalysis analyze(Vec2 x, double separation, double cap) const;

    /// Local minimization seeded at dense sample k, searching the parameter
    /// window between its neighbours (crossing into adjacent arcs at junctions).
    Projection refine_near(Vec2 x, std::size_t k) const;

    /// Walks downhill over the dense samples from k, then refines.
    Projection descend(Vec2 x, std::size_t k) const;

    /// Refined local minimizers whose sampled distance is within slack of the best,
    /// at most max_refine of them (closest samples first).
    std::vector<Projection> candidates(Vec2 x, double slack, std::size_t max_refine = 64) const;

    const BoundaryCurve& curve() const { return curve_; }
    std::size_t sample_count() const { return xs_.size(); }
    Vec2 sample_point(std::size_t k) const { return {xs_[k], ys_[k]}; }
    double sample_spacing() const { return spacing_; }

private:
    struct Chunk {
        Vec2 center;
        double radius;
        std::size_t begin, end;
    };

    Projection make_projection(Vec2 x, std::size_t arc, double t, std::size_t k) const;
    double sample_dist(Vec2 x, std::size_t k) const;
    bool corner_between(double s1, double s2) const;

    BoundaryCurve curve_;
    std::vector<double> xs_, ys_, ts_;
    std::vector<std::size_t> arc_of_;
    std::vector<Chunk> chunks_;
    std::vector<double> corner_s_;
    double spacing_ = 0.0;
};

/// Minimizes |Y(t) - x| over t in [ta, tb] on one arc; returns the parameter.
double minimize_distance_on_arc(const Arc& arc, Vec2 x, double ta, double tb, double seed);

}  // namespace cutloc
