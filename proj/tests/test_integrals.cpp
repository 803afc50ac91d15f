#include "doctest.h"

#include <cmath>
#include <numbers>

#include "cutloc/errors.hpp"
#include "cutloc/integrals.hpp"
#include "cutloc/shapes.hpp"

using namespace cutloc;
using std::numbers::pi;

namespace {

std::vector<CutSample> cut_samples(const BoundaryCurve& c, std::size_t n)
{
    const BoundaryProjector proj(c, std::max<std::size_t>(4096, 2 * n));
    return compute_cut_samples(c, resample_arclength(c, n), proj, default_tol(c));
}

}  // namespace

TEST_CASE("polynomial fields")
{
    const Vec2 p{2.0, -3.0};
    CHECK(Polynomial2::constant(1.5)(p) == 1.5);
    CHECK(Polynomial2::x1()(p) == 2.0);
    CHECK(Polynomial2::x2()(p) == -3.0);
    CHECK(Polynomial2::x1_squared()(p) == 4.0);
    CHECK(Polynomial2::norm_squared()(p) == 13.0);
    CHECK(Polynomial2({{2.0, 1, 2}, {-1.0, 0, 0}})(p) == 35.0);
    CHECK(Polynomial2::norm_squared().scaled(3.0)(p) == 39.0);
    double v = 0;
    CHECK(Polynomial2::constant(2.5).is_constant(&v));
    CHECK(v == 2.5);
    CHECK(Polynomial2().is_constant(&v));
    CHECK(v == 0.0);
    CHECK_FALSE(Polynomial2::x1().is_constant());
}

TEST_CASE("report residuals")
{
    const auto r = make_report("t", 3.0, 2.0, 5);
    CHECK(r.abs_residual == 1.0);
    CHECK(r.rel_residual == 0.5);
    CHECK(r.samples_used == 5);
    CHECK(make_report("z", 1e-20, 0.0, 1).rel_residual == doctest::Approx(1e-6));
}

TEST_CASE("perimeter and area")
{
    const auto circle = shapes::circle(1.0);
    CHECK(perimeter(circle) == doctest::Approx(2 * pi).epsilon(1e-10));
    CHECK(area(circle) == doctest::Approx(pi).epsilon(1e-10));
    const auto ellipse = shapes::ellipse(2.0, 1.0);
    // independent high-precision value of the complete elliptic integral
    CHECK(perimeter(ellipse) == doctest::Approx(9.68844822054767619842850319639).epsilon(1e-10));
    CHECK(area(ellipse) == doctest::Approx(2 * pi).epsilon(1e-10));
    const auto sq = shapes::square(2.0);
    CHECK(perimeter(sq) == doctest::Approx(8.0).epsilon(1e-12));
    CHECK(area(sq) == doctest::Approx(4.0).epsilon(1e-12));
    // stadium: 2 pi r + 2 L, pi r^2 + 2 r L
    const auto st = shapes::stadium(1.0, 2.0);
    CHECK(perimeter(st) == doctest::Approx(2 * pi + 4).epsilon(1e-10));
    CHECK(area(st) == doctest::Approx(pi + 4).epsilon(1e-10));
    // rounded square: apothem 1, corner radius r: 8(1 - r) + 2 pi r, 4 - (4 - pi) r^2
    const auto rs = shapes::rounded_polygon(4, 1.0, 0.2);
    CHECK(perimeter(rs) == doctest::Approx(8 * 0.8 + 2 * pi * 0.2).epsilon(1e-10));
    CHECK(area(rs) == doctest::Approx(4 - (4 - pi) * 0.04).epsilon(1e-10));
}

TEST_CASE("minkowski formula")
{
    CHECK(minkowski_residual(shapes::circle(1.0)).abs_residual <= 1e-12);
    CHECK(minkowski_residual(shapes::ellipse(2.0, 1.0)).rel_residual <= 1e-8);
    CHECK(minkowski_residual(shapes::fourier(1.0, {0.0, 0.0, 0.1}, {})).rel_residual <= 1e-6);
    CHECK(minkowski_residual(shapes::superellipse(1.0, 1.0, 4.0)).rel_residual <= 1e-6);
    CHECK_THROWS_AS(minkowski_residual(shapes::square(2.0)), InapplicableError);

    const auto sq = minkowski_residual_corners(shapes::square(2.0));
    CHECK(std::abs(sq.extra.at("curvature_integral")) <= 1e-12);
    CHECK(sq.extra.at("corner_sum") == doctest::Approx(-8.0));
    CHECK(sq.lhs == doctest::Approx(8.0));
    CHECK(sq.rhs == doctest::Approx(8.0));
    CHECK(sq.abs_residual <= 1e-10);

    // off-center square: the identity does not depend on the origin
    const auto moved = minkowski_residual_corners(shapes::square(2.0).transformed(1.0, 0.3, {0.4, -0.2}));
    CHECK(moved.abs_residual <= 1e-10);

    for (const auto& c : {shapes::stadium(1.0, 2.0), shapes::rounded_polygon(4, 1.0, 0.2)}) {
        const auto r = minkowski_residual_corners(c);
        CHECK(r.rel_residual <= 1e-8);
        CHECK(std::abs(r.extra.at("corner_sum")) <= 1e-10);
        CHECK(r.extra.at("max_corner_term") <= 1e-10);
    }
    // smooth shapes go through the cornered variant with no corner terms at all
    CHECK(minkowski_residual_corners(shapes::ellipse(2.0, 1.0)).rel_residual <= 1e-8);
    CHECK_THROWS_AS(minkowski_residual_corners(shapes::union_disks(2.0, 2.0)), InapplicableError);
}

TEST_CASE("change of variables, ray side")
{
    const auto disk = shapes::circle(1.0);
    const auto ds = cut_samples(disk, 1024);
    CHECK(std::abs(cov_integral(disk, ds, Polynomial2::constant(1.0)).value - pi) <= 1e-6);
    CHECK(std::abs(cov_integral(disk, ds, Polynomial2::norm_squared()).value - pi / 2) <= 1e-6);
    CHECK(std::abs(cov_integral(disk, ds, Polynomial2::x1()).value) <= 1e-9);

    const auto ellipse = shapes::ellipse(2.0, 1.0);
    const auto es = cut_samples(ellipse, 1024);
    CHECK(std::abs(cov_integral(ellipse, es, Polynomial2::constant(1.0)).value - 2 * pi) <= 5e-4);
    // pi a^3 b / 4 and pi a b^3 / 4
    CHECK(std::abs(cov_integral(ellipse, es, Polynomial2::x1_squared()).value - 2 * pi) <= 2e-3);
    CHECK(std::abs(cov_integral(ellipse, es, Polynomial2({{1.0, 0, 2}})).value - pi / 2) <= 5e-4);

    const auto sq = shapes::square(2.0);
    const auto ss = cut_samples(sq, 1024);
    const auto sv = cov_integral(sq, ss, Polynomial2::constant(1.0));
    CHECK(sv.used + sv.skipped == ss.size());
    CHECK(std::abs(sv.value - 4.0) <= 1e-3);
    CHECK(std::abs(cov_integral(sq, ss, Polynomial2::x1_squared()).value - 4.0 / 3.0) <= 1e-3);

    const auto un = shapes::union_disks(2.0, 2.0);
    CHECK_THROWS_AS(cov_integral(un, cut_samples(un, 128), Polynomial2::constant(1.0)), InapplicableError);
}

TEST_CASE("change of variables against the grid")
{
    const auto disk = shapes::circle(1.0);
    const auto ds = cut_samples(disk, 1024);
    const DistanceField field(disk, GridSpec::with_spacing(disk, 1.0 / 64), 4096);
    const auto r = cov_residual(disk, ds, Polynomial2::constant(1.0), field);
    CHECK(r.rel_residual <= 2e-2);
    CHECK(r.lhs == doctest::Approx(pi).epsilon(1e-6));

    const auto conv = cov_convergence(disk, ds, Polynomial2::constant(1.0), 1.0 / 32);
    CHECK(conv.ratio >= 0.3);
    CHECK(conv.ratio <= 0.7);

    const auto ellipse = shapes::ellipse(2.0, 1.0);
    const auto es = cut_samples(ellipse, 1024);
    const auto ec = cov_convergence(ellipse, es, Polynomial2::x1_squared(), 1.0 / 16);
    MESSAGE("ellipse x1^2 residuals " << ec.coarse.abs_residual << " -> " << ec.fine.abs_residual);
    CHECK(ec.fine.abs_residual < ec.coarse.abs_residual);

    const auto sq = shapes::square(2.0);
    const DistanceField sf(sq, GridSpec::with_spacing(sq, 1.0 / 64), 4096);
    CHECK(cov_residual(sq, cut_samples(sq, 1024), Polynomial2::constant(1.0), sf).rel_residual <= 2e-2);

    // cell-count area against the divergence theorem
    for (const auto& c : {disk, ellipse, sq}) {
        const DistanceField f(c, GridSpec::with_spacing(c, 1.0 / 32), 2048);
        CHECK(std::abs(f.inside_area() - area(c)) <= 3 * f.grid().h * perimeter(c));
    }
}

TEST_CASE("mean value of phi")
{
    for (const auto& entry : shapes::catalog()) {
        CAPTURE(entry.name);
        const auto c = shapes::from_json(entry.example);
        bool concave = false, junction = false;
        const auto joins = junctions(c);
        // a single arc closes up at its seam, which is not a junction between pieces
        junction = joins.size() > 1;
        for (const auto& j : joins) concave = concave || !j.convex;
        if (concave) continue;
        const auto r = mean_value_identity(c, cut_samples(c, 2048));
        CHECK(r.rhs == doctest::Approx(area(c) / perimeter(c)));
        CHECK(r.rel_residual <= (junction ? 1e-3 : 1e-5));
    }
}
