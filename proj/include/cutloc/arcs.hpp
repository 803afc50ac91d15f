#pragma once

#include <vector>

#include "cutloc/boundary.hpp"

namespace cutloc {

/// Straight segment p0 -> p1, parameter t in [0, 1].
class SegmentArc final : public Arc {
public:
    SegmentArc(Vec2 p0, Vec2 p1) : Arc(0.0, 1.0), p0_(p0), p1_(p1) {}
    Vec2 position(double t) const override { return p0_ + t * (p1_ - p0_); }
    Vec2 first(double) const override { return p1_ - p0_; }
    Vec2 second(double) const override { return {}; }

private:
    Vec2 p0_, p1_;
};

/// center + (a cos t, b sin t) for t in [t0, t1]; a == b gives a circular arc.
class EllipseArc final : public Arc {
public:
    EllipseArc(Vec2 center, double a, double b, double t0, double t1);
    Vec2 position(double t) const override;
    Vec2 first(double t) const override;
    Vec2 second(double t) const override;

private:
    Vec2 c_;
    double a_, b_;
};

/// Star-shaped arc r(t) (cos t, sin t); subclasses supply r and its derivatives.
class PolarArc : public Arc {
public:
    PolarArc(double t0, double t1) : Arc(t0, t1) {}
    struct Radial {
        double r, dr, ddr;
    };
    virtual Radial radial(double t) const = 0;

    Vec2 position(double t) const override;
    Vec2 first(double t) const override;
    Vec2 second(double t) const override;
};

/// Lame curve |x/a|^p + |y/b|^p = 1 in polar form (p >= 2 keeps it C2).
class SuperellipseArc final : public PolarArc {
public:
    SuperellipseArc(double a, double b, double p, double t0, double t1);
    Radial radial(double t) const override;

private:
    double a_, b_, p_;
};

/// r(t) = a0 + sum_k cos_k cos(k t) + sin_k sin(k t), k starting at 1.
class FourierArc final : public PolarArc {
public:
    FourierArc(double a0, std::vector<double> cos_coeffs, std::vector<double> sin_coeffs);
    Radial radial(double t) const override;

private:
    double a0_;
    std::vector<double> cos_, sin_;
};

/// x -> scale * R(rotation) x + shift applied to another arc.
class SimilarityArc final : public Arc {
public:
    SimilarityArc(ArcPtr inner, double scale, double rotation, Vec2 shift);
    Vec2 position(double t) const override;
    Vec2 first(double t) const override;
    Vec2 second(double t) const override;

private:
    ArcPtr inner_;
    double scale_, cos_, sin_;
    Vec2 shift_;
};

/// The same trace run backwards, on the same parameter interval.
class ReversedArc final : public Arc {
public:
    explicit ReversedArc(ArcPtr inner);
    Vec2 position(double t) const override;
    Vec2 first(double t) const override;
    Vec2 second(double t) const override;

private:
    double mirror(double t) const { return t0() + t1() - t; }
    ArcPtr inner_;
};

}  // namespace cutloc
