#ifndef CROWN_RENDER_HPP
#define CROWN_RENDER_HPP

#include "crown/model.hpp"

#include <string>

namespace crown {

/// Deterministic SVG picture of a solved instance: one labelled rect per
/// box, realized contacts highlighted, viewBox = bounding box plus a
/// margin of one unit. All coordinates are scaled by the least common
/// multiple of the layout denominators so the file contains integers
/// only. Throws Error("invalid-report") when the layout does not fit the
/// instance.
std::string renderSvg(const Instance& instance, const SolveReport& report);

}  // namespace crown

#endif
