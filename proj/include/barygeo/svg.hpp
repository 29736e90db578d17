#pragma once

#include <optional>
#include <string>

#include "barygeo/hpoint.hpp"
#include "barygeo/metric.hpp"

namespace barygeo {

struct FigureRequest {
    std::string figure_id;  // theorem5 | lemma6 | inversion | theorem7 | theorem10
    std::array<Rat, 3> sides;
    std::optional<HPoint<Rat>> p;
    std::optional<HPoint<Rat>> q;
};

// Renders the named figure to an SVG document. Geometry is computed on the
// exact backend and converted to floats only for drawing; identical requests
// produce byte-identical output.
std::string render_figure(const FigureRequest& req);

}  // namespace barygeo
