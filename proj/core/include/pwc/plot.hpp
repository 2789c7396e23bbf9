#pragma once

#include <string>

#include "pwc/pwcmap.hpp"

namespace pwc {

/// 512x512 SVG of the graph of g: branch segments with a filled (closed)
/// left endpoint and a hollow (open) right endpoint, dashed guides at the
/// discontinuities and gap endpoints, and a brace per gap component.
std::string plot_svg(const PiecewiseAffineMap& g, const std::string& caption = {});

}  // namespace pwc
