#include "doctest.h"

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "cutloc/cutlocus.hpp"
#include "cutloc/distfield.hpp"
#include "cutloc/errors.hpp"
#include "cutloc/shapes.hpp"

using namespace cutloc;

namespace {

BoundaryPoint point_near(const BoundaryCurve& c, Vec2 target)
{
    BoundaryProjector proj(c, 4096);
    return c.eval(proj.nearest(target).param);
}

// always answers with the point diametrically opposite the query's angle
class AntipodalOracle final : public NearestPointOracle {
public:
    explicit AntipodalOracle(const BoundaryCurve& c) : c_(c), proj_(c, 1024) {}
    Projection nearest(Vec2 x) const override { return proj_.nearest(-1.0 * x / std::max(norm(x), 1e-300)); }
    double resolution() const override { return 0.0; }

private:
    const BoundaryCurve& c_;
    BoundaryProjector proj_;
};

}  // namespace

TEST_CASE("cut value examples")
{
    const auto circle = shapes::circle(1.0);
    const BoundaryProjector cp(circle, 2048);
    for (double s : {0.0, 0.7, 2.0, 5.5}) {
        const auto y = circle.at_arclength(s);
        CHECK(std::abs(cut_value(circle, y, cp, 1e-8) - 1.0) <= 1e-8);
    }

    const auto ellipse = shapes::ellipse(2.0, 1.0);
    const BoundaryProjector ep(ellipse, 4096);
    const double tol = default_tol(ellipse);
    CHECK(tol == doctest::Approx(4e-6));
    const auto top = point_near(ellipse, {0.0, 1.5});
    CHECK(std::abs(cut_value(ellipse, top, ep, tol) - 1.0) <= tol);
    const auto vertex = point_near(ellipse, {3.0, 0.0});
    CHECK(vertex.curvature == doctest::Approx(2.0));
    CHECK(std::abs(cut_value(ellipse, vertex, ep, tol) - 0.5) <= tol);
}

TEST_CASE("degenerate ray")
{
    const auto c = shapes::circle(1.0);
    const AntipodalOracle bad(c);
    CHECK_THROWS_AS(cut_value(c, c.at_arclength(0.3), bad, 1e-6), DegenerateRayError);
}

TEST_CASE("phi")
{
    CHECK(phi_2d(1.0, 1.0) == doctest::Approx(0.5));
    CHECK(phi_2d(0.5, 2.0) == doctest::Approx(0.25));
    CHECK(phi_2d(1.0, 0.25) == doctest::Approx(0.875));
    CHECK(phi_2d(1.0, 0.0) == doctest::Approx(1.0));
    CHECK(phi_2d(0.5, -2.0) == doctest::Approx(0.75));

    // one curvature reproduces the closed form
    for (double k : {-1.0, 0.0, 0.3, 2.0}) {
        const double ks[] = {k};
        CHECK(std::abs(phi_general(0.5, ks) - phi_2d(0.5, k)) <= 1e-10);
    }
    // unit sphere in R^3: int_0^1 (1-t)^2 = 1/3
    const double sphere[] = {1.0, 1.0};
    CHECK(std::abs(phi_general(1.0, sphere) - 1.0 / 3.0) <= 1e-10);
    // int_0^1 (1-t)(1-t/2) = 1 - 3/4 + 1/6
    const double mixed[] = {1.0, 0.5};
    CHECK(std::abs(phi_general(1.0, mixed) - (1.0 - 0.75 + 1.0 / 6.0)) <= 1e-10);
    const double flat[] = {0.0, 0.0, 0.0};
    CHECK(std::abs(phi_general(2.0, flat) - 2.0) <= 1e-10);
}

TEST_CASE("sample invariants and kd")
{
    struct Case {
        BoundaryCurve curve;
        double kd;
    };
    const std::vector<Case> cases = {
        {shapes::circle(1.0), 1.0},
        {shapes::ellipse(2.0, 1.0), 1.0},
        {shapes::stadium(1.0, 2.0), 1.0},
    };
    for (const auto& [c, kd] : cases) {
        const BoundaryProjector proj(c, 4096);
        const auto pts = resample_arclength(c, 256);
        const double tol = default_tol(c);
        const auto samples = compute_cut_samples(c, pts, proj, tol);
        REQUIRE(samples.size() == pts.size());
        for (const auto& s : samples) {
            CHECK(s.lambda > 0);
            CHECK(s.lambda_kappa <= 1 + 1e-6);
            CHECK(s.phi > 0);
            CHECK(s.phi <= s.lambda + 1e-12);
            CHECK(s.phi == doctest::Approx(phi_2d(s.lambda, s.point.curvature)));
            if (std::abs(s.lambda_kappa - 1) <= 1e-6) CHECK(std::abs(s.phi * s.point.curvature - 0.5) <= 1e-6);
        }
        CHECK(std::abs(verify_kd(samples) - kd) <= 1e-6);
        CHECK(std::isfinite(lambda_lipschitz(c, samples)));
    }

    // stadium: lambda = 1 on the caps, kappa lambda = 0 on the flats
    const auto st = shapes::stadium(1.0, 2.0);
    const BoundaryProjector sp(st, 4096);
    for (const auto& s : compute_cut_samples(st, resample_arclength(st, 200), sp, default_tol(st))) {
        if (std::abs(s.point.position.x) < 0.95) {
            CHECK(s.point.curvature == doctest::Approx(0.0));
            CHECK(s.lambda_kappa == doctest::Approx(0.0));
            CHECK(std::abs(s.lambda - 1.0) <= 1e-5);
        } else if (std::abs(s.point.position.x) > 1.05) {
            CHECK(std::abs(s.lambda - 1.0) <= 1e-5);
            CHECK(std::abs(s.lambda_kappa - 1.0) <= 1e-5);
        }
    }
}

TEST_CASE("corner samples")
{
    const auto sq = shapes::square(2.0);
    const BoundaryProjector proj(sq, 4096);
    const double tol = default_tol(sq);
    std::vector<BoundaryPoint> pts = {sq.at_arclength(1.0), sq.at_arclength(2.0 - 2 * tol), sq.at_arclength(2.0 + 100 * tol)};
    const auto samples = compute_cut_samples(sq, pts, proj, tol);
    CHECK_FALSE(samples[0].corner_limit);
    CHECK(samples[1].corner_limit);
    CHECK(samples[1].lambda == 0.0);
    CHECK(samples[1].phi == 0.0);
    CHECK_FALSE(samples[2].corner_limit);
    CHECK(samples[2].lambda < 200 * tol);
}

TEST_CASE("predicate monotonicity")
{
    for (const auto& c : {shapes::ellipse(2.0, 1.0), shapes::fourier(1.0, {0.0, 0.0, 0.1}, {}), shapes::square(2.0)}) {
        const BoundaryProjector proj(c, 4096);
        const double tol = default_tol(c);
        for (const auto& y : resample_arclength(c, 24)) {
            const double lambda = cut_value(c, y, proj, tol);
            for (double f : {0.05, 0.3, 0.6, 0.9}) CHECK(cut_predicate(c, y, proj, f * (lambda - tol), tol));
            CHECK(cut_predicate(c, y, proj, lambda - tol, tol));
            for (double f : {1.0, 1.2, 1.6}) {
                const double t = f * lambda + tol * (1 + f);
                if (t < c.diameter()) CHECK_FALSE(cut_predicate(c, y, proj, t, tol));
            }
        }
    }
}

TEST_CASE("focal identity")
{
    {
        const auto c = shapes::circle(1.0);
        const BoundaryProjector proj(c, 2048);
        CHECK(focal_check(c, resample_arclength(c, 512), proj, default_tol(c)).residual <= 1e-6);
    }
    {
        const auto c = shapes::ellipse(2.0, 1.0);
        const BoundaryProjector proj(c, 8192);
        const auto fc = focal_check(c, resample_arclength(c, 4096), proj, default_tol(c));
        CHECK(fc.residual <= 1e-4);
        CHECK(std::abs(std::abs(fc.y0.position.x) - 2.0) <= 1e-6);
    }
    {
        const auto c = shapes::fourier(1.0, {0.0, 0.0, 0.1}, {});
        const BoundaryProjector proj(c, 8192);
        CHECK(focal_check(c, resample_arclength(c, 2048), proj, default_tol(c)).residual <= 1e-3);
    }
    const auto sq = shapes::square(2.0);
    const BoundaryProjector sp(sq, 1024);
    CHECK_THROWS_AS(focal_check(sq, resample_arclength(sq, 64), sp, default_tol(sq)), InapplicableError);
}

TEST_CASE("curvature maximizer")
{
    const auto c = shapes::ellipse(2.0, 1.0);
    const auto y0 = refine_curvature_max(c, resample_arclength(c, 37));
    CHECK(y0.curvature == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("normal ray chart")
{
    {
        const auto c = shapes::circle(1.0);
        const BoundaryProjector proj(c, 2048);
        const auto chart = build_ray_chart(c, 0.0, c.length(), 64, proj, 1e-7);
        REQUIRE(chart.size() == 64);
        for (std::size_t k = 0; k < chart.size(); ++k) {
            CHECK(std::abs(chart.Lambda[k] - 1.0) <= 1e-7);
            CHECK(chart.J(k, 0.0) == 1.0);
            CHECK(chart.J(k, 0.4) == doctest::Approx(0.6));
            CHECK(norm(chart.X(k, 1.0)) <= 1e-12);
        }
    }
    {
        // window ending at the major vertex (2, 0), approached from below
        const auto c = shapes::ellipse(2.0, 1.0);
        const BoundaryProjector proj(c, 8192);
        const double sv = proj.nearest({3.0, 0.0}).s;
        const double L = c.length();
        const auto chart = build_ray_chart(c, sv - 0.5 + L, sv + L, 40, proj, default_tol(c));
        double prev = 2.0;
        for (std::size_t k = 0; k < chart.size(); ++k) {
            const double j = chart.J(k, chart.Lambda[k]);
            CHECK(j >= -1e-6);
            CHECK(j <= prev + 1e-9);
            prev = j;
        }
        CHECK(prev <= 1e-3);
    }
    {
        const auto sq = shapes::square(2.0);
        const BoundaryProjector proj(sq, 4096);
        const auto corners = detect_corners(sq);
        REQUIRE(corners.size() == 4);
        const double a = corners[0].s, b = corners[1].s;
        const auto chart = build_ray_chart(sq, a, b, 50, proj, default_tol(sq));
        const double mid = 0.5 * (a + b);
        for (std::size_t k = 0; k < chart.size(); ++k) {
            CHECK(chart.K[k] == doctest::Approx(0.0));
            CHECK(std::abs(chart.Lambda[k] - (1.0 - std::abs(chart.sigma[k] - mid))) <= 1e-5);
        }
        CHECK_THROWS_AS(build_ray_chart(sq, a - 0.1, a + 0.1, 8, proj, default_tol(sq)), DomainError);
    }
}

TEST_CASE("chart injectivity")
{
    const auto c = shapes::ellipse(2.0, 1.0);
    const BoundaryProjector proj(c, 4096);
    const auto chart = build_ray_chart(c, 0.3, 2.3, 30, proj, default_tol(c));
    const double h = 1.0 / 64;
    std::vector<Vec2> pts;
    for (std::size_t k = 0; k < chart.size(); ++k)
        for (int m = 0; m < 8; ++m) pts.push_back(chart.X(k, chart.Lambda[k] * (m + 0.5) / 8.0 * 0.98));
    double closest = 1e300;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) closest = std::min(closest, norm(pts[i] - pts[j]));
    CHECK(closest > h / 2);
}

TEST_CASE("cross-oracle agreement")
{
    for (const auto& entry : shapes::catalog()) {
        CAPTURE(entry.name);
        const auto c = shapes::from_json(entry.example);
        const DistanceField field(c, GridSpec::with_counts(c, 128), 2048);
        const BoundaryProjector exact(c, 4096);
        const double tol = default_tol(c);
        const double h = field.grid().h;
        for (const auto& y : resample_arclength(c, 48)) {
            bool near_corner = false;
            for (const auto& k : detect_corners(c)) near_corner = near_corner || c.periodic_distance(k.s, y.s) < 10 * tol;
            if (near_corner) continue;
            CHECK(std::abs(cut_value(c, y, exact, tol) - cut_value(c, y, field, tol)) <= 5 * h);
        }
    }
}

TEST_CASE("dilation covariance")
{
    const auto base = shapes::fourier(1.0, {0.0, 0.0, 0.1}, {});
    const double scale = 2.5;
    const auto big = base.transformed(scale, 0.0, {});
    const BoundaryProjector p1(base, 4096), p2(big, 4096);
    const auto s1 = compute_cut_samples(base, resample_arclength(base, 64), p1, default_tol(base));
    const auto s2 = compute_cut_samples(big, resample_arclength(big, 64), p2, default_tol(big));
    for (std::size_t k = 0; k < s1.size(); ++k) {
        CHECK(std::abs(s2[k].lambda - scale * s1[k].lambda) <= 1e-8);
        CHECK(std::abs(s2[k].phi - scale * s1[k].phi) <= 1e-8);
    }
}

TEST_CASE("samples csv")
{
    const auto c = shapes::circle(1.0);
    const BoundaryProjector proj(c, 1024);
    const auto samples = compute_cut_samples(c, resample_arclength(c, 10), proj, 1e-6);
    std::ostringstream os;
    write_samples_csv(os, samples);
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "s,x,y,nx,ny,kappa,lambda,phi,kappa_lambda");
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        CHECK(std::count(line.begin(), line.end(), ',') == 8);
    }
    CHECK(rows == 10);
}
