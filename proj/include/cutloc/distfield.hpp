#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "cutloc/boundary.hpp"
#include "cutloc/projection.hpp"

namespace cutloc {

/// Uniform grid of square cells; cell (i, j) has center origin + ((i+1/2)h, (j+1/2)h).
struct GridSpec {
    Vec2 origin;
    double h = 0.0;
    std::size_t nx = 0;
    std::size_t ny = 0;

    Vec2 center(std::size_t i, std::size_t j) const
    {
        return origin + Vec2{(static_cast<double>(i) + 0.5) * h, (static_cast<double>(j) + 0.5) * h};
    }
    std::size_t index(std::size_t i, std::size_t j) const { return j * nx + i; }
    std::size_t size() const { return nx * ny; }
    Vec2 upper() const { return origin + Vec2{h * static_cast<double>(nx), h * static_cast<double>(ny)}; }

    /// Box centered on the curve's bounding box with spacing h; margin is raised to 2h if smaller.
    static GridSpec with_spacing(const BoundaryCurve& curve, double h, double margin = 0.0);
    /// Box with nx columns (ny rows, derived from the aspect ratio when 0).
    static GridSpec with_counts(const BoundaryCurve& curve, std::size_t nx, std::size_t ny = 0, double margin = -1.0);
};

/// Grid oracle for the distance function, the projection and the singular set.
///
/// A cell is flagged singular when its multiplicity gap is at most 2h. The gap is
/// the smaller of (a) the distance excess of the best competing local minimizer at
/// least 10h away in arclength and (b) the remaining distance 1/kappa - d to the
/// focal point along the ray of the projection (kappa > 0 only). Both vanish
/// exactly on the closure of the singular set.
class DistanceField final : public NearestPointOracle {
public:
    DistanceField(const BoundaryCurve& curve, const GridSpec& grid, std::size_t boundary_samples = 4096);

    const GridSpec& grid() const { return grid_; }
    const BoundaryProjector& projector() const { return projector_; }
    const BoundaryCurve& curve() const { return projector_.curve(); }

    double d(std::size_t c) const { return d_[c]; }
    double signed_distance(std::size_t c) const { return inside_[c] ? d_[c] : -d_[c]; }
    bool inside(std::size_t c) const { return inside_[c] != 0; }
    bool singular(std::size_t c) const { return sigma_[c] != 0; }
    const CurveParam& nearest_param(std::size_t c) const { return nearest_[c]; }
    double nearest_s(std::size_t c) const { return nearest_s_[c]; }
    double multiplicity_gap(std::size_t c) const { return gap_[c]; }
    double sigma_threshold() const { return 2.0 * grid_.h; }
    double separation() const { return 10.0 * grid_.h; }

    /// Throws DomainError when x lies outside the grid box.
    struct Lookup {
        Projection projection;
        bool singular = false;
    };
    Lookup project(Vec2 x) const;

    Projection nearest(Vec2 x) const override { return project(x).projection; }
    double resolution() const override { return grid_.h; }

    /// Area of the flagged cells.
    double singular_measure() const;
    /// Area of the cells whose center is inside.
    double inside_area() const;

    /// CSV with columns x,y,d,inside,sigma.
    void write_csv(std::ostream& os) const;

private:
    std::size_t owning_cell(Vec2 x) const;

    GridSpec grid_;
    BoundaryProjector projector_;
    std::vector<double> d_, nearest_s_, gap_;
    std::vector<CurveParam> nearest_;
    std::vector<std::size_t> seed_;
    std::vector<std::uint8_t> inside_, sigma_;
};

/// Nonzero-winding insideness of every cell center against a closed polygon,
/// evaluated row by row with horizontal crossings.
std::vector<std::uint8_t> inside_mask(const GridSpec& grid, const std::vector<Vec2>& polygon);

}  // namespace cutloc
