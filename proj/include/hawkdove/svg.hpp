#ifndef HAWKDOVE_SVG_HPP
#define HAWKDOVE_SVG_HPP

#include <string>

#include "hawkdove/equilibria.hpp"
#include "hawkdove/flow.hpp"

namespace hawkdove {

// Phase portrait as a standalone SVG: the two nullclines, a vector-field
// glyph grid, and one marker per stationary state (solid = asymptotically
// stable, hollow = unstable/marginal). Output is byte-deterministic.
std::string render_phase_portrait_svg(const PhasePortrait& portrait, const StationarySet& states,
                                      const std::string& title);

}  // namespace hawkdove

#endif
