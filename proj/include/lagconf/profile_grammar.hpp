#pragma once

#include <string>

#include "lagconf/piecewise.hpp"

namespace lagconf {

/**
 * Parse a radial profile expression on [-1/2, 1/2]. Terms are separated by
 * top-level '+' and summed:
 *   const:c                     constant c
 *   poly:[c0,c1,...]@[a,b]      polynomial sum c_i x^i on [a,b], zero outside
 *   bump:center,width,height    C^1 bump supported on [center +- width]
 *   indicator-smooth:r,delta    normalized two-bump packing profile
 * Numbers are rationals ("2/5", "-3") or decimals ("0.125").
 */
PiecewisePoly parse_profile(const std::string& text);

}  // namespace lagconf
