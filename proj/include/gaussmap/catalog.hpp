#pragma once

#include <vector>

#include "gaussmap/weierstrass.hpp"

namespace gaussmap {

// Built-in model surfaces: catenoid (g=z, h=1/z), enneper (g=z, h=z) and the
// higher-order enneperK families (g=z^k, h=z^k).
WeierstrassData catalog_surface(const std::string& name);
std::vector<std::string> catalog_names();

}  // namespace gaussmap
