#include "cutloc/fields.hpp"

#include <cmath>
#include <utility>

#include "cutloc/errors.hpp"

namespace cutloc {

Polynomial2::Polynomial2(std::vector<Term> terms, std::string name) : terms_(std::move(terms)), name_(std::move(name))
{
    for (const Term& t : terms_)
        if (t.i < 0 || t.j < 0) throw ConfigError("polynomial exponents must be nonnegative");
}

Polynomial2 Polynomial2::constant(double c) { return Polynomial2({{c, 0, 0}}, "constant"); }
Polynomial2 Polynomial2::x1() { return Polynomial2({{1.0, 1, 0}}, "x1"); }
Polynomial2 Polynomial2::x2() { return Polynomial2({{1.0, 0, 1}}, "x2"); }
Polynomial2 Polynomial2::x1_squared() { return Polynomial2({{1.0, 2, 0}}, "x1^2"); }
Polynomial2 Polynomial2::norm_squared() { return Polynomial2({{1.0, 2, 0}, {1.0, 0, 2}}, "|x|^2"); }

double Polynomial2::operator()(Vec2 p) const
{
    double v = 0.0;
    for (const Term& t : terms_) v += t.c * std::pow(p.x, t.i) * std::pow(p.y, t.j);
    return v;
}

Polynomial2 Polynomial2::scaled(double k) const
{
    Polynomial2 out = *this;
    for (Term& t : out.terms_) t.c *= k;
    return out;
}

bool Polynomial2::is_constant(double* value) const
{
    double c = 0.0;
    for (const Term& t : terms_) {
        if (t.i != 0 || t.j != 0) return false;
        c += t.c;
    }
    if (value) *value = c;
    return true;
}

}  // namespace cutloc
