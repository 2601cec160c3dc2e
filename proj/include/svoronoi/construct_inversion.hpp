#pragma once

#include <vector>

#include "svoronoi/construct_planar.hpp"
#include "svoronoi/diagram.hpp"
#include "svoronoi/sphere_geom.hpp"

namespace svor {

enum class SphereSource { from_vk, from_vnk, glue };

/// Provenance of a spherical vertex: which planar diagram produced it and
/// under which planar key.
struct VertexProvenance {
    SphereSource source = SphereSource::from_vk;
    VertexKey planar_key;
};

/// One fused pair of unbounded planar edges: the V_k ray and the V_{n-k} ray
/// on the same bisector with opposite directions become one spherical edge
/// crossing B_k(center).
struct GluePair {
    int i = 0, j = 0;
    int vk_edge = -1;     // edge index in the V_k diagram
    int vnk_edge = -1;    // edge index in the V_{n-k} diagram
    int sphere_edge = -1; // edge index in the glued spherical diagram
};

struct InversionBuild {
    Diagram diagram; // the spherical result
    Diagram vk;      // planar V_k(U')
    Diagram vnk;     // planar V_{n-k}(U')
    Vec3 center;
    double radius = 2.0;
    std::vector<VertexProvenance> vertex_source; // per diagram vertex
    std::vector<SphereSource> edge_source;       // per diagram edge
    std::vector<GluePair> glue;
};

/// The inversion construction: invert the sites to the plane through
/// `center`, build the planar diagrams of orders k and n-k, map both back to
/// the sphere (vertex positions re-solved from the original sites, not
/// round-tripped through the plane) and glue the rays of shared bisectors.
///
/// A ray of V_k with direction dir glues to the V_{n-k} ray on the same
/// bisector with direction -dir; the matching must be perfect or GlueMismatch
/// is thrown. Throws CenterCollision when the center is too close to a site
/// and GeneralPositionViolation when sites+center fail validation.
InversionBuild build_via_inversion(const SiteSet& sites, int k, const Vec3& center,
                                   double radius = 2.0, const Tolerances& tol = Tolerances{},
                                   bool paranoid = false);

/// Theorem-2 partition check: builds SV_k(U + center) directly, extracts the
/// region of the center, and verifies the three-way correspondence: vertices
/// of SV_k(U) strictly inside circles through the center's region relate to
/// the V_{n-k} side, outside ones to the V_k side, and the edges crossed by
/// the region boundary are exactly the glued edges.
struct PartitionReport {
    bool pass = true;
    std::vector<std::string> issues;
    int rays_vk = 0;
    int rays_vnk = 0;
    int crossed_edges = 0;
};
PartitionReport region_partition_check(const SiteSet& sites, int k, const Vec3& center,
                                       double radius = 2.0, const Tolerances& tol = Tolerances{});

} // namespace svor
