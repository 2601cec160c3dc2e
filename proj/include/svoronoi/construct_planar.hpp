#pragma once

#include "svoronoi/diagram.hpp"
#include "svoronoi/planar_geom.hpp"

namespace svor {

/// No 3 collinear, no 4 concyclic, with tol.gp determinant clearance.
PositionReport validate_general_position(const PlanarSiteSet& sites,
                                         const Tolerances& tol = Tolerances{});

/// Brute-force planar order-k Voronoi diagram with unbounded rays. Vertices
/// are circumcenters with disk enclosure k-1 or k-2; bounded edges are
/// bisector segments whose through-disks enclose exactly k-1 sites (same
/// sorted-propagation scheme as the spherical construction, on a line);
/// rays are kept symbolically as (pair, direction sign) so the inversion
/// gluing stays a key lookup.
Diagram build_planar(const PlanarSiteSet& sites, int k, const Tolerances& tol = Tolerances{},
                     bool paranoid = false);

} // namespace svor
