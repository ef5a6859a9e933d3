#pragma once

#include <string>

#include "ipseg/model.hpp"

namespace ipseg {

/// Deterministic SVG 1.1 drawing: L1 is the upper line, L2 the lower one.
/// Interval segments are drawn just off their line (stacked when they
/// overlap), permutation segments run between the lines, and every segment is
/// labelled with its id.
std::string render_svg(const Model& model);

}  // namespace ipseg
