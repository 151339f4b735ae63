#pragma once

#include "csl_lab/isometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace csl_lab {

/// Built-in lattices: square (Z^2), cubic (Z^3), 2zx3z (2Z x 3Z),
/// zx5z (Z x 5Z).
std::vector<std::string> lattice_preset_names();
std::optional<Lattice> lattice_preset(const std::string& name);

/// Built-in isometries: identity2, identity3, rot90, mirror2, rot5, rot13,
/// rot65 (= rot5 rot13), quat1110 (Σ=3 on Z^3), quat2100 (Σ=5 on Z^3).
std::vector<std::string> isometry_preset_names();
std::optional<Isometry> isometry_preset(const std::string& name);

}  // namespace csl_lab
