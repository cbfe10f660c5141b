#pragma once

#include <string>
#include <vector>

#include "plumbstein/stein.hpp"
#include "plumbstein/wrap.hpp"

namespace plumbstein {

// Schematic emitters for human inspection. Coordinates are integers and all
// iteration follows vertex, edge and handle order, so output is a pure
// function of the input.

/// Rows on a grid (bottom row lowest), tree edges as segments and curved
/// edges as nested arcs below the rows, innermost arc closest.
std::string to_svg(const WrappedForm& w);
/// Several wrapped clusters stacked top to bottom in one picture.
std::string to_svg(const std::vector<WrappedForm>& forms);
std::string to_dot(const WrappedForm& w);
std::string to_dot(const std::vector<WrappedForm>& forms);

/// Unknot glyph per 2-handle at its placement, clasps between linked
/// unknots, and one pair of boxes per 1-handle on either side of the rows.
std::string to_svg(const HandlebodyDiagram& h);
std::string to_dot(const HandlebodyDiagram& h);

}  // namespace plumbstein
