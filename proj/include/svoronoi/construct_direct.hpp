#pragma once

#include <vector>

#include "svoronoi/diagram.hpp"
#include "svoronoi/sphere_geom.hpp"

namespace svor {

/// Oracle construction of the order-k spherical Voronoi diagram straight from
/// the definitions: classify every circumcenter by enclosure count, then cut
/// each bisector great circle into arcs whose two-point circles enclose
/// exactly k-1 sites. O(n^3 log n); favors transparency over speed.
///
/// `paranoid` recounts every arc midpoint from scratch instead of trusting
/// the +-1 propagation across crossings and throws InternalInconsistency on
/// any disagreement.
Diagram build_direct(const SiteSet& sites, int k, const Tolerances& tol = Tolerances{},
                     bool paranoid = false);

/// c[m] = number of circumcircles of site triples enclosing exactly m other
/// sites, counting the two antipodal centers of each triple separately;
/// sum over m is 2*C(n,3).
std::vector<long long> circle_enclosure_histogram(const SiteSet& sites,
                                                  const Tolerances& tol = Tolerances{});

} // namespace svor
