#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cutloc/boundary.hpp"
#include "cutloc/cutlocus.hpp"
#include "cutloc/integrals.hpp"
#include "cutloc/projection.hpp"

namespace cutloc {

struct PipelineConfig {
    std::size_t samples = 2048;
    std::size_t grid_nx = 256;
    std::size_t grid_ny = 256;
    double margin = -1.0;  ///< negative: 5% of the bounding box
    double tol = 1e-6;     ///< relative to the diameter
};

/// Boundary samples with their cut values, computed with the exact projector.
struct Prepared {
    BoundaryCurve curve;
    BoundaryProjector projector;
    std::vector<BoundaryPoint> points;
    std::vector<CutSample> cuts;
    double tol;

    Prepared(const BoundaryCurve& c, const PipelineConfig& config);
};

GridSpec grid_for(const BoundaryCurve& curve, const PipelineConfig& config);

/// One identity of the verification suite. status is pass, fail, skipped or out-of-scope.
struct Check {
    IntegralReport report;
    std::string status;
    double tolerance = 0.0;
    std::string reason;
};

std::vector<Check> verify_suite(const Prepared& prep, const PipelineConfig& config);

}  // namespace cutloc
