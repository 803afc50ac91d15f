#include "cutloc/arcs.hpp"

#include <cmath>
#include <utility>

namespace cutloc {

EllipseArc::EllipseArc(Vec2 center, double a, double b, double t0, double t1)
    : Arc(t0, t1), c_(center), a_(a), b_(b)
{
}

Vec2 EllipseArc::position(double t) const
{
    return c_ + Vec2{a_ * std::cos(t), b_ * std::sin(t)};
}

Vec2 EllipseArc::first(double t) const { return {-a_ * std::sin(t), b_ * std::cos(t)}; }

Vec2 EllipseArc::second(double t) const { return {-a_ * std::cos(t), -b_ * std::sin(t)}; }

Vec2 PolarArc::position(double t) const
{
    const auto r = radial(t);
    return r.r * Vec2{std::cos(t), std::sin(t)};
}

Vec2 PolarArc::first(double t) const
{
    const auto r = radial(t);
    const Vec2 e{std::cos(t), std::sin(t)};
    return r.dr * e + r.r * rot90(e);
}

Vec2 PolarArc::second(double t) const
{
    const auto r = radial(t);
    const Vec2 e{std::cos(t), std::sin(t)};
    return (r.ddr - r.r) * e + 2.0 * r.dr * rot90(e);
}

SuperellipseArc::SuperellipseArc(double a, double b, double p, double t0, double t1)
    : PolarArc(t0, t1), a_(a), b_(b), p_(p)
{
}

PolarArc::Radial SuperellipseArc::radial(double t) const
{
    // r = g^(-1/p), g = |cos t / a|^p + |sin t / b|^p
    const double c = std::cos(t), s = std::sin(t);
    const double u = c / a_, v = s / b_;
    const double du = -s / a_, dv = c / b_;
    const double ddu = -c / a_, ddv = -s / b_;
    const double au = std::abs(u), av = std::abs(v);
    const double su = u < 0 ? -1.0 : 1.0, sv = v < 0 ? -1.0 : 1.0;
    const double p = p_;

    const double g = std::pow(au, p) + std::pow(av, p);
    const double gp1 = p * su * std::pow(au, p - 1.0) * du + p * sv * std::pow(av, p - 1.0) * dv;
    const double gp2 = p * (p - 1.0) * std::pow(au, p - 2.0) * du * du
                     + p * su * std::pow(au, p - 1.0) * ddu
                     + p * (p - 1.0) * std::pow(av, p - 2.0) * dv * dv
                     + p * sv * std::pow(av, p - 1.0) * ddv;

    const double r = std::pow(g, -1.0 / p);
    const double dr = -(1.0 / p) * std::pow(g, -1.0 / p - 1.0) * gp1;
    const double ddr = -(1.0 / p) * ((-1.0 / p - 1.0) * std::pow(g, -1.0 / p - 2.0) * gp1 * gp1
                                     + std::pow(g, -1.0 / p - 1.0) * gp2);
    return {r, dr, ddr};
}

FourierArc::FourierArc(double a0, std::vector<double> cos_coeffs, std::vector<double> sin_coeffs)
    : PolarArc(0.0, 2.0 * M_PI), a0_(a0), cos_(std::move(cos_coeffs)), sin_(std::move(sin_coeffs))
{
}

PolarArc::Radial FourierArc::radial(double t) const
{
    Radial out{a0_, 0.0, 0.0};
    for (std::size_t i = 0; i < cos_.size(); ++i) {
        const double k = static_cast<double>(i + 1);
        const double c = std::cos(k * t), s = std::sin(k * t);
        out.r += cos_[i] * c;
        out.dr -= k * cos_[i] * s;
        out.ddr -= k * k * cos_[i] * c;
    }
    for (std::size_t i = 0; i < sin_.size(); ++i) {
        const double k = static_cast<double>(i + 1);
        const double c = std::cos(k * t), s = std::sin(k * t);
        out.r += sin_[i] * s;
        out.dr += k * sin_[i] * c;
        out.ddr -= k * k * sin_[i] * s;
    }
    return out;
}

SimilarityArc::SimilarityArc(ArcPtr inner, double scale, double rotation, Vec2 shift)
    : Arc(inner->t0(), inner->t1()),
      inner_(std::move(inner)),
      scale_(scale),
      cos_(std::cos(rotation)),
      sin_(std::sin(rotation)),
      shift_(shift)
{
}

namespace {
Vec2 apply(double c, double s, double k, Vec2 v) { return k * Vec2{c * v.x - s * v.y, s * v.x + c * v.y}; }
}  // namespace

Vec2 SimilarityArc::position(double t) const { return apply(cos_, sin_, scale_, inner_->position(t)) + shift_; }
Vec2 SimilarityArc::first(double t) const { return apply(cos_, sin_, scale_, inner_->first(t)); }
Vec2 SimilarityArc::second(double t) const { return apply(cos_, sin_, scale_, inner_->second(t)); }

ReversedArc::ReversedArc(ArcPtr inner) : Arc(inner->t0(), inner->t1()), inner_(std::move(inner)) {}

Vec2 ReversedArc::position(double t) const { return inner_->position(mirror(t)); }
Vec2 ReversedArc::first(double t) const { return -inner_->first(mirror(t)); }
Vec2 ReversedArc::second(double t) const { return inner_->second(mirror(t)); }

}  // namespace cutloc
