#pragma once

#include <string>
#include <vector>

#include "cutloc/vec2.hpp"

namespace cutloc {

/// Polynomial in two variables, sum of c * x^i * y^j.
class Polynomial2 {
public:
    struct Term {
        double c;
        int i;
        int j;
    };

    Polynomial2() = default;
    explicit Polynomial2(std::vector<Term> terms, std::string name = "polynomial");

    static Polynomial2 constant(double c);
    static Polynomial2 x1();
    static Polynomial2 x2();
    static Polynomial2 x1_squared();
    static Polynomial2 norm_squared();

    double operator()(Vec2 p) const;
    Polynomial2 scaled(double k) const;
    /// Single constant term (or empty): value returned through `value`.
    bool is_constant(double* value = nullptr) const;
    const std::vector<Term>& terms() const { return terms_; }
    const std::string& name() const { return name_; }

private:
    std::vector<Term> terms_;
    std::string name_ = "zero";
};

/// Source of the mass-transport system; same representation as the integrands.
using SourceField = Polynomial2;

}  // namespace cutloc
