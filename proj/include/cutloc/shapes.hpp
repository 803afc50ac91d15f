#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "cutloc/boundary.hpp"

namespace cutloc::shapes {

BoundaryCurve circle(double radius, Vec2 center = {});
BoundaryCurve ellipse(double a, double b);
BoundaryCurve superellipse(double a, double b, double exponent);
/// Regular polygon with the given apothem whose corners are replaced by circular
/// arcs of corner_radius (C1 junctions).
BoundaryCurve rounded_polygon(int sides, double apothem, double corner_radius);
/// Axis-aligned square centered at the origin.
BoundaryCurve square(double side);
/// Rectangle of the given straight length capped by two semicircles of radius.
BoundaryCurve stadium(double radius, double length);
/// Union of two disks of equal radius centered at (+-separation/2, 0).
BoundaryCurve union_disks(double radius, double separation);
/// Star-shaped curve r(t) = a0 + sum cos_k cos(kt) + sin_k sin(kt).
BoundaryCurve fourier(double a0, std::vector<double> cos_coeffs, std::vector<double> sin_coeffs);

/// Builds a curve from a shape object: {"type": ..., parameters..., "center": [x, y], "rotation": rad}.
/// Throws ConfigError on unknown types or missing/invalid parameters.
BoundaryCurve from_json(const nlohmann::json& shape);

/// Parses shape text. Syntax errors are reported with line and column.
BoundaryCurve from_json_text(std::string_view text);

struct CatalogEntry {
    std::string name;
    std::string description;
    nlohmann::json schema;   ///< parameter name -> type description
    nlohmann::json example;  ///< a complete shape object
};

const std::vector<CatalogEntry>& catalog();

}  // namespace cutloc::shapes
