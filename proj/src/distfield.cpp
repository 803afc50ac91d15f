#include "cutloc/distfield.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <utility>

#include "cutloc/errors.hpp"
#include "cutloc/format.hpp"
#include "cutloc/parallel.hpp"

namespace cutloc {

GridSpec GridSpec::with_spacing(const BoundaryCurve& curve, double h, double margin)
{
    if (!(h > 0)) throw ConstructionError("grid spacing must be positive");
    margin = std::max(margin, 2.0 * h);
    const BBox b = curve.bbox();
    const Vec2 mid = 0.5 * (b.lo + b.hi);
    GridSpec g;
    g.h = h;
    g.nx = std::max<std::size_t>(16, static_cast<std::size_t>(std::ceil((b.hi.x - b.lo.x + 2 * margin) / h)));
    g.ny = std::max<std::size_t>(16, static_cast<std::size_t>(std::ceil((b.hi.y - b.lo.y + 2 * margin) / h)));
    g.origin = mid - 0.5 * Vec2{h * static_cast<double>(g.nx), h * static_cast<double>(g.ny)};
    return g;
}

GridSpec GridSpec::with_counts(const BoundaryCurve& curve, std::size_t nx, std::size_t ny, double margin)
{
    if (nx < 16 || (ny != 0 && ny < 16)) throw ConstructionError("grid needs at least 16 cells per axis");
    const BBox b = curve.bbox();
    const double w = b.hi.x - b.lo.x, hgt = b.hi.y - b.lo.y;
    if (margin < 0) margin = 0.05 * std::max(w, hgt);
    // Solve for h with margin >= 2h on both axes.
    double h = (w + 2 * margin) / static_cast<double>(nx);
    if (ny != 0) h = std::max(h, (hgt + 2 * margin) / static_cast<double>(ny));
    h = std::max(h, w / (static_cast<double>(nx) - 4.0));
    if (ny != 0) h = std::max(h, hgt / (static_cast<double>(ny) - 4.0));
    GridSpec g;
    g.h = h;
    g.nx = nx;
    g.ny = ny != 0 ? ny : std::max<std::size_t>(16, static_cast<std::size_t>(std::ceil((hgt + 2 * std::max(margin, 2 * h)) / h)));
    const Vec2 mid = 0.5 * (b.lo + b.hi);
    g.origin = mid - 0.5 * Vec2{h * static_cast<double>(g.nx), h * static_cast<double>(g.ny)};
    return g;
}

std::vector<std::uint8_t> inside_mask(const GridSpec& grid, const std::vector<Vec2>& polygon)
{
    std::vector<std::uint8_t> out(grid.size(), 0);
    const std::size_t n = polygon.size();
    std::vector<std::pair<double, int>> hits;
    for (std::size_t j = 0; j < grid.ny; ++j) {
        const double y = grid.center(0, j).y;
        hits.clear();
        for (std::size_t e = 0; e < n; ++e) {
            const Vec2 a = polygon[e], b = polygon[(e + 1) % n];
            // half-open rule on y so shared vertices count once
            if ((a.y <= y && b.y > y) || (b.y <= y && a.y > y)) {
                const double x = a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y);
                hits.emplace_back(x, b.y > a.y ? 1 : -1);
            }
        }
        std::sort(hits.begin(), hits.end());
        int winding = 0;
        std::size_t h = 0;
        for (std::size_t i = 0; i < grid.nx; ++i) {
            const double x = grid.center(i, j).x;
            while (h < hits.size() && hits[h].first <= x) winding += hits[h++].second;
            out[grid.index(i, j)] = winding != 0;
        }
    }
    return out;
}

DistanceField::DistanceField(const BoundaryCurve& curve, const GridSpec& grid, std::size_t boundary_samples)
    : grid_(grid), projector_(curve, boundary_samples)
{
    if (grid_.nx < 16 || grid_.ny < 16) throw ConstructionError("grid needs at least 16 cells per axis");
    if (boundary_samples < 256) throw ConstructionError("distance field needs at least 256 boundary samples");
    const BBox b = curve.bbox();
    const Vec2 lo = grid_.origin, hi = grid_.upper();
    const double m = 2.0 * grid_.h * (1.0 - 1e-9);
    if (b.lo.x - lo.x < m || b.lo.y - lo.y < m || hi.x - b.hi.x < m || hi.y - b.hi.y < m)
        throw ConstructionError("grid does not contain the curve with a margin of 2h");

    std::vector<Vec2> polygon(projector_.sample_count());
    for (std::size_t k = 0; k < polygon.size(); ++k) polygon[k] = projector_.sample_point(k);
    inside_ = inside_mask(grid_, polygon);

    const std::size_t n = grid_.size();
    d_.resize(n);
    nearest_s_.resize(n);
    gap_.resize(n);
    nearest_.resize(n);
    seed_.resize(n);
    sigma_.assign(n, 0);
    const double cap = 2.0 * sigma_threshold();
    parallel_for(grid_.ny, [&](std::size_t j) {
        for (std::size_t i = 0; i < grid_.nx; ++i) {
            const std::size_t c = grid_.index(i, j);
            const Vec2 x = grid_.center(i, j);
            if (!inside_[c]) {
                const Projection p = projector_.nearest(x);
                d_[c] = p.distance;
                nearest_[c] = p.param;
                nearest_s_[c] = p.s;
                seed_[c] = p.sample;
                gap_[c] = cap;
                continue;
            }
            const ProjectionAnalysis a = projector_.analyze(x, separation(), cap);
            d_[c] = a.best.distance;
            nearest_[c] = a.best.param;
            nearest_s_[c] = a.best.s;
            seed_[c] = a.best.sample;
            double gap = a.gap;
            const double kappa = curve.eval(a.best.param).curvature;
            if (kappa > 0) gap = std::min(gap, std::max(0.0, 1.0 / kappa - a.best.distance));
            gap_[c] = std::min(gap, cap);
            sigma_[c] = gap_[c] <= sigma_threshold();
        }
    });
}

std::size_t DistanceField::owning_cell(Vec2 x) const
{
    const Vec2 lo = grid_.origin, hi = grid_.upper();
    if (!(x.x >= lo.x && x.x <= hi.x && x.y >= lo.y && x.y <= hi.y)) throw DomainError("point outside the grid box");
    const auto i = std::min<std::size_t>(grid_.nx - 1, static_cast<std::size_t>((x.x - lo.x) / grid_.h));
    const auto j = std::min<std::size_t>(grid_.ny - 1, static_cast<std::size_t>((x.y - lo.y) / grid_.h));
    return grid_.index(i, j);
}

DistanceField::Lookup DistanceField::project(Vec2 x) const
{
    const std::size_t own = owning_cell(x);
    // cell-center lattice coordinates of x; the four surrounding centers seed the search
    const double fx = (x.x - grid_.origin.x) / grid_.h - 0.5;
    const double fy = (x.y - grid_.origin.y) / grid_.h - 0.5;
    const auto clampi = [](double v, std::size_t n) {
        return static_cast<std::size_t>(std::clamp(v, 0.0, static_cast<double>(n - 1)));
    };
    const std::size_t i0 = clampi(std::floor(fx), grid_.nx), j0 = clampi(std::floor(fy), grid_.ny);
    const std::size_t i1 = clampi(std::floor(fx) + 1, grid_.nx), j1 = clampi(std::floor(fy) + 1, grid_.ny);

    Lookup out;
    out.projection.distance = std::numeric_limits<double>::infinity();
    for (std::size_t c : {own, grid_.index(i0, j0), grid_.index(i1, j0), grid_.index(i0, j1), grid_.index(i1, j1)}) {
        const Projection p = projector_.descend(x, seed_[c]);
        if (p.distance < out.projection.distance) out.projection = p;
    }
    out.singular = sigma_[own] != 0;
    return out;
}

double DistanceField::singular_measure() const
{
    const auto flagged = std::count(sigma_.begin(), sigma_.end(), std::uint8_t{1});
    return static_cast<double>(flagged) * grid_.h * grid_.h;
}

double DistanceField::inside_area() const
{
    const auto in = std::count(inside_.begin(), inside_.end(), std::uint8_t{1});
    return static_cast<double>(in) * grid_.h * grid_.h;
}

void DistanceField::write_csv(std::ostream& os) const
{
    os << "x,y,d,inside,sigma\n";
    for (std::size_t j = 0; j < grid_.ny; ++j) {
        for (std::size_t i = 0; i < grid_.nx; ++i) {
            const std::size_t c = grid_.index(i, j);
            const Vec2 x = grid_.center(i, j);
            os << fmt17(x.x) << ',' << fmt17(x.y) << ',' << fmt17(d_[c]) << ',' << int(inside_[c]) << ','
               << int(sigma_[c]) << '\n';
        }
    }
}

}  // namespace cutloc
