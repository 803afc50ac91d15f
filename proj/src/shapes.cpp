#include "cutloc/shapes.hpp"

#include <cmath>
#include <memory>
#include <string>

#include "cutloc/arcs.hpp"
#include "cutloc/errors.hpp"

namespace cutloc::shapes {

using nlohmann::json;

BoundaryCurve circle(double radius, Vec2 center)
{
    if (!(radius > 0)) throw ConfigError("circle radius must be positive");
    return BoundaryCurve({std::make_shared<EllipseArc>(center, radius, radius, 0.0, 2.0 * M_PI)});
}

BoundaryCurve ellipse(double a, double b)
{
    if (!(a > 0 && b > 0)) throw ConfigError("ellipse semi-axes must be positive");
    return BoundaryCurve({std::make_shared<EllipseArc>(Vec2{}, a, b, 0.0, 2.0 * M_PI)});
}

BoundaryCurve superellipse(double a, double b, double exponent)
{
    if (!(a > 0 && b > 0)) throw ConfigError("superellipse semi-axes must be positive");
    if (!(exponent >= 2.0)) throw ConfigError("superellipse exponent must be >= 2");
    return BoundaryCurve({std::make_shared<SuperellipseArc>(a, b, exponent, 0.0, 2.0 * M_PI)});
}

BoundaryCurve rounded_polygon(int sides, double apothem, double corner_radius)
{
    if (sides < 3) throw ConfigError("rounded_polygon needs at least 3 sides");
    if (!(apothem > 0)) throw ConfigError("rounded_polygon apothem must be positive");
    if (!(corner_radius > 0 && corner_radius < apothem))
        throw ConfigError("rounded_polygon corner_radius must lie in (0, apothem)");
    const double half = M_PI / sides;
    const double center_dist = (apothem - corner_radius) / std::cos(half);
    std::vector<ArcPtr> arcs;
    for (int k = 0; k < sides; ++k) {
        const double dir = half + 2.0 * half * k;
        const Vec2 c = center_dist * Vec2{std::cos(dir), std::sin(dir)};
        arcs.push_back(std::make_shared<EllipseArc>(c, corner_radius, corner_radius, dir - half, dir + half));
        const double next_dir = half + 2.0 * half * (k + 1);
        const Vec2 cn = center_dist * Vec2{std::cos(next_dir), std::sin(next_dir)};
        const Vec2 p0 = c + corner_radius * Vec2{std::cos(dir + half), std::sin(dir + half)};
        const Vec2 p1 = cn + corner_radius * Vec2{std::cos(next_dir - half), std::sin(next_dir - half)};
        arcs.push_back(std::make_shared<SegmentArc>(p0, p1));
    }
    return BoundaryCurve(std::move(arcs));
}

BoundaryCurve square(double side)
{
    if (!(side > 0)) throw ConfigError("square side must be positive");
    const double h = 0.5 * side;
    const Vec2 v[4] = {{-h, -h}, {h, -h}, {h, h}, {-h, h}};
    std::vector<ArcPtr> arcs;
    for (int k = 0; k < 4; ++k) arcs.push_back(std::make_shared<SegmentArc>(v[k], v[(k + 1) % 4]));
    return BoundaryCurve(std::move(arcs));
}

BoundaryCurve stadium(double radius, double length)
{
    if (!(radius > 0 && length > 0)) throw ConfigError("stadium radius and length must be positive");
    const double h = 0.5 * length;
    std::vector<ArcPtr> arcs;
    arcs.push_back(std::make_shared<SegmentArc>(Vec2{-h, -radius}, Vec2{h, -radius}));
    arcs.push_back(std::make_shared<EllipseArc>(Vec2{h, 0}, radius, radius, -0.5 * M_PI, 0.5 * M_PI));
    arcs.push_back(std::make_shared<SegmentArc>(Vec2{h, radius}, Vec2{-h, radius}));
    arcs.push_back(std::make_shared<EllipseArc>(Vec2{-h, 0}, radius, radius, 0.5 * M_PI, 1.5 * M_PI));
    return BoundaryCurve(std::move(arcs));
}

BoundaryCurve union_disks(double radius, double separation)
{
    const double c = 0.5 * separation;
    if (!(radius > 0 && c > 0 && c < radius)) throw ConfigError("union_disks needs 0 < separation < 2 radius");
    const double yi = std::sqrt(radius * radius - c * c);
    const double right = std::atan2(yi, -c);  // angle of (0, yi) seen from (c, 0)
    const double left = std::atan2(yi, c);    // angle of (0, yi) seen from (-c, 0)
    std::vector<ArcPtr> arcs;
    arcs.push_back(std::make_shared<EllipseArc>(Vec2{c, 0}, radius, radius, -right, right));
    arcs.push_back(std::make_shared<EllipseArc>(Vec2{-c, 0}, radius, radius, left, 2.0 * M_PI - left));
    return BoundaryCurve(std::move(arcs), 1e-9 * radius);
}

BoundaryCurve fourier(double a0, std::vector<double> cos_coeffs, std::vector<double> sin_coeffs)
{
    auto arc = std::make_shared<FourierArc>(a0, std::move(cos_coeffs), std::move(sin_coeffs));
    for (int k = 0; k < 4096; ++k) {
        const double t = 2.0 * M_PI * k / 4096.0;
        if (!(arc->radial(t).r > 0)) throw ConfigError("fourier radius must stay positive");
    }
    return BoundaryCurve({arc});
}

namespace {

double number(const json& j, const char* key)
{
    if (!j.contains(key)) throw ConfigError(std::string("shape parameter '") + key + "' is missing");
    const auto& v = j.at(key);
    if (!v.is_number()) throw ConfigError(std::string("shape parameter '") + key + "' must be a number");
    return v.get<double>();
}

double number_or(const json& j, const char* key, double fallback)
{
    return j.contains(key) ? number(j, key) : fallback;
}

std::vector<double> numbers_or_empty(const json& j, const char* key)
{
    if (!j.contains(key)) return {};
    const auto& v = j.at(key);
    if (!v.is_array()) throw ConfigError(std::string("shape parameter '") + key + "' must be an array");
    std::vector<double> out;
    for (const auto& e : v) {
        if (!e.is_number()) throw ConfigError(std::string("shape parameter '") + key + "' must hold numbers");
        out.push_back(e.get<double>());
    }
    return out;
}

BoundaryCurve build(const std::string& type, const json& j)
{
    if (type == "circle") return circle(number(j, "radius"));
    if (type == "ellipse") return ellipse(number(j, "a"), number(j, "b"));
    if (type == "superellipse") return superellipse(number(j, "a"), number(j, "b"), number(j, "p"));
    if (type == "rounded_polygon") {
        const double sides = number(j, "sides");
        if (sides != std::floor(sides)) throw ConfigError("rounded_polygon sides must be an integer");
        return rounded_polygon(static_cast<int>(sides), number(j, "apothem"), number(j, "corner_radius"));
    }
    if (type == "square") return square(number(j, "side"));
    if (type == "stadium") return stadium(number(j, "radius"), number(j, "length"));
    if (type == "union_disks") return union_disks(number(j, "radius"), number(j, "separation"));
    if (type == "fourier") return fourier(number(j, "a0"), numbers_or_empty(j, "cos"), numbers_or_empty(j, "sin"));
    throw ConfigError("unknown shape type '" + type + "'");
}

}  // namespace

BoundaryCurve from_json(const json& shape)
{
    if (!shape.is_object()) throw ConfigError("shape definition must be a JSON object");
    if (!shape.contains("type") || !shape.at("type").is_string())
        throw ConfigError("shape definition needs a string 'type'");
    BoundaryCurve curve = build(shape.at("type").get<std::string>(), shape);

    Vec2 center{};
    if (shape.contains("center")) {
        const auto c = numbers_or_empty(shape, "center");
        if (c.size() != 2) throw ConfigError("'center' must be [x, y]");
        center = {c[0], c[1]};
    }
    const double rotation = number_or(shape, "rotation", 0.0);
    if (center.x == 0.0 && center.y == 0.0 && rotation == 0.0) return curve;
    return curve.transformed(1.0, rotation, center);
}

BoundaryCurve from_json_text(std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, col = 1;
        const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < upto; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ConfigError("shape file parse error at line " + std::to_string(line) + ", column "
                          + std::to_string(col) + ": " + e.what());
    }
    return from_json(j);
}

const std::vector<CatalogEntry>& catalog()
{
    static const std::vector<CatalogEntry> entries = [] {
        const json placement = {{"center", "[x, y] (optional)"}, {"rotation", "number, radians (optional)"}};
        auto with_placement = [&](json schema) {
            schema.update(placement);
            return schema;
        };
        std::vector<CatalogEntry> e;
        e.push_back({"circle", "disk boundary", with_placement({{"radius", "number"}}),
                     {{"type", "circle"}, {"radius", 1.0}}});
        e.push_back({"ellipse", "ellipse with semi-axes a (x) and b (y)",
                     with_placement({{"a", "number"}, {"b", "number"}}), {{"type", "ellipse"}, {"a", 2.0}, {"b", 1.0}}});
        e.push_back({"superellipse", "|x/a|^p + |y/b|^p = 1, p >= 2",
                     with_placement({{"a", "number"}, {"b", "number"}, {"p", "number"}}),
                     {{"type", "superellipse"}, {"a", 1.0}, {"b", 1.0}, {"p", 4.0}}});
        e.push_back({"rounded_polygon", "regular polygon with circular corner fillets (C1)",
                     with_placement({{"sides", "integer"}, {"apothem", "number"}, {"corner_radius", "number"}}),
                     {{"type", "rounded_polygon"}, {"sides", 4}, {"apothem", 1.0}, {"corner_radius", 0.2}}});
        e.push_back({"square", "axis-aligned square", with_placement({{"side", "number"}}),
                     {{"type", "square"}, {"side", 2.0}}});
        e.push_back({"stadium", "rectangle with semicircular caps",
                     with_placement({{"radius", "number"}, {"length", "number"}}),
                     {{"type", "stadium"}, {"radius", 1.0}, {"length", 2.0}}});
        e.push_back({"union_disks", "union of two equal disks centered at (+-separation/2, 0)",
                     with_placement({{"radius", "number"}, {"separation", "number"}}),
                     {{"type", "union_disks"}, {"radius", 2.0}, {"separation", 2.0}}});
        e.push_back({"fourier", "star-shaped r(t) = a0 + sum cos[k-1] cos(kt) + sin[k-1] sin(kt)",
                     with_placement({{"a0", "number"}, {"cos", "array of numbers"}, {"sin", "array of numbers"}}),
                     {{"type", "fourier"}, {"a0", 1.0}, {"cos", {0.0, 0.0, 0.1}}, {"sin", json::array()}}});
        return e;
    }();
    return entries;
}

}  // namespace cutloc::shapes
