#pragma once

#include <string>

namespace cutloc {

/// Shortest-width %.17g rendering used for every CSV number.
std::string fmt17(double v);

}  // namespace cutloc
