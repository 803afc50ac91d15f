#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cutloc/boundary.hpp"
#include "cutloc/cutlocus.hpp"

namespace cutloc {

/// mean(x) * integral over [0, 1] of prod (1 - s x_j), integrated exactly.
double f_value(std::span<const double> x);

struct FMax {
    double value = 0.0;
    std::vector<double> argmax;
};

/// Grid maximum of f over {x in [-3, 1]^(n-1) : sum x >= 0}; n in {2, 3, 4}, resolution >= 200.
FMax f_max_bruteforce(int n, std::size_t resolution);

enum class CornerStatus { none, convex_only, concave_present };
enum class Verdict { ball, hypotheses_not_met, inapplicable };

const char* to_string(CornerStatus s);
const char* to_string(Verdict v);

struct SymmetryOptions {
    double tol = 0.0;               ///< cut tolerance; 0 means 1e-6 * diameter
    double phi_slack = 1e-4;        ///< relative to the diameter
    double constancy_threshold = 1e-3;
};

struct SymmetryReport {
    BoundaryPoint y0;
    double H_max = 0.0;
    double lambda_at_y0 = 0.0;
    double phi_at_y0 = 0.0;
    double ratio = 0.0;  ///< |Omega| / |boundary|
    double area = 0.0;
    double perimeter = 0.0;
    bool hypothesis_H = false;
    bool hypothesis_phi = false;
    double phi_min = 0.0, phi_max = 0.0, phi_mean = 0.0;
    double phi_constancy = 0.0;
    double basic_bound_max = 0.0;  ///< max of phi * H
    double kappa_spread = 0.0;     ///< max kappa - min kappa over smooth samples
    CornerStatus corner_status = CornerStatus::none;
    std::vector<CornerInfo> corners;
    bool starshaped = false;
    double min_support = 0.0;
    std::size_t smooth_samples = 0;
    std::string route;  ///< max-curvature, constant-phi or none
    Verdict verdict = Verdict::hypotheses_not_met;
    std::string failing_check;
    std::vector<std::string> notes;
};

/// Throws ConfigError with fewer than 64 smooth samples.
SymmetryReport criterion_report(const BoundaryCurve& curve, std::span<const CutSample> samples,
                                const NearestPointOracle& oracle, const SymmetryOptions& options = {});

struct ChainEntry {
    double ratio_H = 0.0;     ///< ratio * H(y)
    double ratio_H0 = 0.0;    ///< ratio * H(y0)
    double phi0_H0 = 0.0;     ///< phi(y0) H(y0)
    double half = 0.5;
};

struct ChainCheck {
    std::vector<ChainEntry> entries;
    bool link_max = true;     ///< ratio H(y) <= ratio H(y0)
    bool link_phi = true;     ///< ratio H(y0) <= phi(y0) H(y0)
    bool link_basic = true;   ///< phi(y0) H(y0) <= 1/2
    std::string first_failure;
    bool holds() const { return link_max && link_phi && link_basic; }
};

ChainCheck inequality_chain_check(std::span<const CutSample> samples, const SymmetryReport& report, double tol = 1e-6);

}  // namespace cutloc
