#pragma once

#include <string>

#include "svoronoi/diagram.hpp"

namespace svor {

struct SvgOptions {
    int highlight_region = -1; // shade R_k(i) and stroke B_k(i) for this site
};

/// Spherical diagrams render as a two-panel stereographic projection (front
/// and back hemispheres) from a pole chosen away from all vertices; type I
/// vertices are filled blue, type II red. Planar diagrams render in their
/// own coordinates with rays clipped to the frame.
void export_svg(const Diagram& d, const std::string& path, const SvgOptions& opts = {});

/// Sphere mesh with the diagram edges as polylines slightly above the
/// surface. Spherical diagrams only.
void export_obj(const Diagram& d, const std::string& path);

} // namespace svor
