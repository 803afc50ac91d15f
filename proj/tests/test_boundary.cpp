#include "doctest.h"

#include <cmath>
#include <memory>
#include <numbers>

#include "cutloc/arcs.hpp"
#include "cutloc/boundary.hpp"
#include "cutloc/errors.hpp"
#include "cutloc/shapes.hpp"

using namespace cutloc;
using std::numbers::pi;

namespace {

// curvature of (a cos t, b sin t)
double ellipse_kappa(double a, double b, double t)
{
    const double s = std::sin(t), c = std::cos(t);
    return a * b / std::pow(a * a * s * s + b * b * c * c, 1.5);
}

std::vector<BoundaryCurve> catalog_shapes()
{
    return {shapes::circle(1.0),
            shapes::ellipse(2.0, 1.0),
            shapes::superellipse(1.0, 1.0, 4.0),
            shapes::rounded_polygon(4, 1.0, 0.2),
            shapes::rounded_polygon(6, 1.0, 0.3),
            shapes::square(2.0),
            shapes::stadium(1.0, 2.0),
            shapes::union_disks(2.0, 2.0),
            shapes::fourier(1.0, {0.0, 0.0, 0.1}, {})};
}

}  // namespace

TEST_CASE("circle evaluation")
{
    const auto c = shapes::circle(1.0);
    const BoundaryPoint p = c.eval({0, 0.0});
    CHECK(p.position.x == doctest::Approx(1.0));
    CHECK(p.position.y == doctest::Approx(0.0));
    CHECK(p.normal.x == doctest::Approx(1.0));
    CHECK(p.normal.y == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(std::abs(p.curvature - 1.0) <= 1e-10);
    for (double R : {0.5, 3.0}) CHECK(std::abs(shapes::circle(R).eval({0, 1.0}).curvature - 1.0 / R) <= 1e-10);
}

TEST_CASE("ellipse curvature against the closed form")
{
    const auto e = shapes::ellipse(2.0, 1.0);
    CHECK(std::abs(e.eval({0, 0.0}).curvature - 2.0) <= 1e-10);
    CHECK(std::abs(e.eval({0, pi / 2}).curvature - 0.25) <= 1e-10);
    for (double t = 0.05; t < 2 * pi; t += 0.37) CHECK(std::abs(e.eval({0, t}).curvature - ellipse_kappa(2, 1, t)) <= 1e-10);
}

TEST_CASE("parameter out of range")
{
    const auto e = shapes::ellipse(2.0, 1.0);
    CHECK_THROWS_AS(e.eval({0, 7.0}), DomainError);
    CHECK_THROWS_AS(e.eval({1, 0.0}), DomainError);
}

TEST_CASE("frame is orthonormal")
{
    for (const auto& c : catalog_shapes()) {
        for (const auto& p : resample_arclength(c, 257)) {
            CHECK(std::abs(dot(p.tangent, p.normal)) <= 1e-12);
            CHECK(std::abs(norm(p.tangent) - 1.0) <= 1e-12);
            CHECK(std::abs(norm(p.normal) - 1.0) <= 1e-12);
        }
    }
}

TEST_CASE("resampling")
{
    SUBCASE("circle, four samples")
    {
        const auto pts = resample_arclength(shapes::circle(1.0), 4);
        REQUIRE(pts.size() == 4);
        for (int k = 0; k < 4; ++k) CHECK(std::abs(pts[k].s - k * pi / 2) <= 1e-6);
    }
    SUBCASE("square keeps away from corners")
    {
        const auto sq = shapes::square(2.0);
        const auto pts = resample_arclength(sq, 8);
        REQUIRE(pts.size() == 8);
        std::vector<int> per_arc(4, 0);
        for (const auto& p : pts) {
            per_arc[p.param.arc]++;
            CHECK(std::abs(std::abs(p.position.x) - 1.0) + std::abs(std::abs(p.position.y) - 1.0) > 0.1);
        }
        for (int n : per_arc) CHECK(n == 2);
    }
    SUBCASE("monotone arclength and ellipse perimeter")
    {
        const auto e = shapes::ellipse(2.0, 1.0);
        const auto pts = resample_arclength(e, 1024);
        for (std::size_t k = 1; k < pts.size(); ++k) CHECK(pts[k].s > pts[k - 1].s);
        // uniform spacing: the last sample plus one step closes the curve
        const double step = pts[1].s - pts[0].s;
        CHECK(std::abs(pts.back().s + step - 9.688448220547676) <= 1e-4);
        CHECK(std::abs(e.length() - 9.688448220547676) <= 1e-9);
    }
    SUBCASE("samples match positions")
    {
        const auto e = shapes::ellipse(2.0, 1.0);
        for (const auto& p : resample_arclength(e, 64)) {
            const auto q = e.at_arclength(p.s);
            CHECK(norm(q.position - p.position) <= 1e-12);
            CHECK(std::abs(e.arclength_of(p.param) - p.s) <= 1e-9);
        }
    }
    CHECK_THROWS_AS(resample_arclength(shapes::circle(1.0), 3), ConfigError);
}

TEST_CASE("corner detection")
{
    CHECK(detect_corners(shapes::circle(1.0)).empty());
    CHECK(detect_corners(shapes::stadium(1.0, 2.0)).empty());
    CHECK(detect_corners(shapes::rounded_polygon(4, 1.0, 0.2)).empty());

    const auto sq = detect_corners(shapes::square(2.0));
    REQUIRE(sq.size() == 4);
    for (const auto& c : sq) {
        CHECK(c.convex);
        CHECK(std::abs(norm(c.delta_nu) - std::sqrt(2.0)) <= 1e-12);
        CHECK(std::abs(norm(c.nu_minus) - 1.0) <= 1e-12);
        CHECK(std::abs(norm(c.nu_plus) - 1.0) <= 1e-12);
    }

    const auto u = detect_corners(shapes::union_disks(2.0, 2.0));
    REQUIRE(u.size() == 2);
    for (const auto& c : u) {
        CHECK_FALSE(c.convex);
        CHECK(std::abs(c.position.x) <= 1e-9);
        CHECK(std::abs(std::abs(c.position.y) - std::sqrt(3.0)) <= 1e-9);
    }
}

TEST_CASE("starshapedness")
{
    auto c = check_starshaped(shapes::circle(1.0), 512);
    CHECK(c.starshaped);
    CHECK(c.min_support == doctest::Approx(1.0).epsilon(1e-12));
    auto e = check_starshaped(shapes::ellipse(2.0, 1.0), 512);
    CHECK(e.starshaped);
    CHECK(e.min_support == doctest::Approx(1.0).epsilon(1e-9));
    auto off = check_starshaped(shapes::circle(1.0, {5.0, 0.0}), 512);
    CHECK_FALSE(off.starshaped);
    CHECK(off.min_support < 0);
}

TEST_CASE("Gauss map consistency")
{
    for (const auto& c : catalog_shapes()) {
        const double h = 1e-5;
        for (const auto& p : resample_arclength(c, 64)) {
            const auto a = c.at_arclength(p.s - h), b = c.at_arclength(p.s + h);
            if (a.param.arc != p.param.arc || b.param.arc != p.param.arc) continue;
            const Vec2 dpos = (b.position - a.position) / (2 * h);
            const Vec2 dnu = (b.normal - a.normal) / (2 * h);
            CHECK(norm(dpos - p.tangent) <= 1e-6);
            CHECK(norm(dnu - p.curvature * p.tangent) <= 1e-5 * std::max(1.0, std::abs(p.curvature)));
        }
    }
}

TEST_CASE("total turning")
{
    for (const auto& c : catalog_shapes()) {
        double total = 0.0;
        for (std::size_t i = 0; i < c.arc_count(); ++i) {
            const Arc& a = c.arc(i);
            const int n = 4000;
            const double dt = (a.t1() - a.t0()) / n;
            for (int k = 0; k < n; ++k) {
                const double t = a.t0() + (k + 0.5) * dt;
                const Vec2 d1 = a.first(t), d2 = a.second(t);
                total += cross(d1, d2) / norm2(d1) * dt;
            }
        }
        for (const auto& j : junctions(c)) total += j.turning_angle;
        CHECK(std::abs(total - 2 * pi) <= 1e-6);
    }
}

TEST_CASE("dilation scales curvature")
{
    for (const auto& c : catalog_shapes()) {
        const auto big = c.transformed(3.0, 0.0, {});
        double kmax = 0.0;
        for (std::size_t i = 0; i < c.arc_count(); ++i) kmax = std::max(kmax, std::abs(c.eval({i, c.arc(i).t0()}).curvature));
        for (std::size_t i = 0; i < c.arc_count(); ++i) {
            const Arc& a = c.arc(i);
            for (double w : {0.1, 0.5, 0.9}) {
                const double t = a.t0() + w * (a.t1() - a.t0());
                const double k0 = c.eval({i, t}).curvature, k1 = big.eval({i, t}).curvature;
                CHECK(std::abs(3.0 * k1 - k0) <= 1e-10 * std::max({1.0, std::abs(k0), kmax}));
            }
        }
    }
}

TEST_CASE("construction errors")
{
    SUBCASE("open chain")
    {
        std::vector<ArcPtr> arcs{std::make_shared<SegmentArc>(Vec2{0, 0}, Vec2{1, 0}),
                                 std::make_shared<SegmentArc>(Vec2{1, 0}, Vec2{0, 1})};
        CHECK_THROWS_AS(BoundaryCurve{arcs}, ConstructionError);
    }
    SUBCASE("bow tie")
    {
        std::vector<ArcPtr> arcs{std::make_shared<SegmentArc>(Vec2{0, 0}, Vec2{1, 1}),
                                 std::make_shared<SegmentArc>(Vec2{1, 1}, Vec2{1, 0}),
                                 std::make_shared<SegmentArc>(Vec2{1, 0}, Vec2{0, 1}),
                                 std::make_shared<SegmentArc>(Vec2{0, 1}, Vec2{0, 0})};
        CHECK_THROWS_AS(BoundaryCurve{arcs}, ConstructionError);
    }
    SUBCASE("zero-length arc")
    {
        std::vector<ArcPtr> arcs{std::make_shared<SegmentArc>(Vec2{0, 0}, Vec2{1, 0}),
                                 std::make_shared<SegmentArc>(Vec2{1, 0}, Vec2{1, 0}),
                                 std::make_shared<SegmentArc>(Vec2{1, 0}, Vec2{0, 1}),
                                 std::make_shared<SegmentArc>(Vec2{0, 1}, Vec2{0, 0})};
        CHECK_THROWS_AS(BoundaryCurve{arcs}, ConstructionError);
    }
    SUBCASE("clockwise input is reoriented")
    {
        std::vector<ArcPtr> arcs{std::make_shared<SegmentArc>(Vec2{0, 0}, Vec2{0, 1}),
                                 std::make_shared<SegmentArc>(Vec2{0, 1}, Vec2{1, 1}),
                                 std::make_shared<SegmentArc>(Vec2{1, 1}, Vec2{1, 0}),
                                 std::make_shared<SegmentArc>(Vec2{1, 0}, Vec2{0, 0})};
        const BoundaryCurve c(arcs);
        CHECK_FALSE(c.supplied_counterclockwise());
        for (const auto& k : detect_corners(c)) CHECK(k.convex);
        const auto p = c.at_arclength(0.5);
        CHECK(dot(p.normal, p.position - Vec2{0.5, 0.5}) > 0);
    }
}

TEST_CASE("shape files")
{
    const auto c = shapes::from_json_text(R"({"type": "circle", "radius": 2, "center": [1, -1]})");
    CHECK(c.bbox().lo.x == doctest::Approx(-1.0));
    CHECK(c.bbox().hi.y == doctest::Approx(1.0));
    const auto e = shapes::from_json_text(R"({"type": "ellipse", "a": 2, "b": 1, "rotation": 1.5707963267948966})");
    CHECK(e.bbox().hi.y == doctest::Approx(2.0));
    const auto f = shapes::from_json_text(R"({"type": "fourier", "a0": 1, "cos": [0, 0, 0.1], "sin": [0.05]})");
    CHECK(detect_corners(f).empty());
    CHECK_THROWS_AS(shapes::from_json_text(R"({"type": "heart"})"), ConfigError);
    CHECK_THROWS_AS(shapes::from_json_text(R"({"type": "circle"})"), ConfigError);
    try {
        shapes::from_json_text("{\"type\": \"circle\",\n \"radius\": }");
        FAIL("expected a parse error");
    } catch (const ConfigError& err) {
        CHECK(std::string(err.what()).find("line 2") != std::string::npos);
    }
    for (const auto& entry : shapes::catalog()) CHECK_NOTHROW(shapes::from_json(entry.example));
}
