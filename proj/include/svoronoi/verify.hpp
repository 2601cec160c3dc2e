#pragma once

#include <string>
#include <vector>

#include "svoronoi/diagram.hpp"
#include "svoronoi/planar_geom.hpp"
#include "svoronoi/sphere_geom.hpp"

namespace svor {

/// Closed-form structure counts of the order-k spherical diagram of n sites:
///   type I  = 2k(n-k-1)         type II = 2(k-1)(n-k)
///   V = 4kn - 4k^2 - 2n   E = 6kn - 6k^2 - 3n   F = 2kn - 2k^2 - n + 2
struct ExpectedCounts {
    int n = 0, k = 0;
    long long type_i = 0, type_ii = 0, vertices = 0, edges = 0, faces = 0;
};
ExpectedCounts expected_counts(int n, int k);

/// Exact integer comparison of a built diagram against the count formulas;
/// any drift is a construction bug or a degeneracy leak, so no tolerance.
struct CountReport {
    bool pass = false;
    ExpectedCounts expected;
    ExpectedCounts actual;
    std::string delta;
};
CountReport verify_counts(const Diagram& d);

/// Antipodal dualities:
///  - SV_k(U) equals SV_{n-k}(U*) with complemented faces, complemented
///    vertex enclosure counts and swapped types (checked as key isomorphism);
///  - the antipode of a vertex of SV_k(U) is a vertex of SV_{n-k}(U) of the
///    other type;
///  - corresponding faces of SV_k(U) and SV_{n-k}(U) use the same bisectors
///    on opposite sides (interior labels become exterior).
struct AntipodalReport {
    bool pass = true;
    std::vector<std::string> issues;
};
AntipodalReport verify_antipodal(const SiteSet& sites, int k, const Tolerances& tol = Tolerances{});

/// Circle-count identities. Spherical: c_{k-1} + c_{k-2} equals the vertex
/// formula for every k and the histogram sums to 2*C(n,3). Planar:
/// c_{k-1} + c_{n-k-2} = 2k(n-k-1) and c_{k-2} + c_{n-k-1} = 2(k-1)(n-k).
struct CircleIdentityReport {
    bool pass = true;
    std::vector<std::string> issues;
};
CircleIdentityReport verify_circle_identities(const SiteSet& sites,
                                              const Tolerances& tol = Tolerances{});
CircleIdentityReport verify_circle_identities(const PlanarSiteSet& sites,
                                              const Tolerances& tol = Tolerances{});

/// Sampled star-shapedness probe of each region around its own site (a cited
/// guarantee, spot-checked only): geodesics from site i to boundary samples
/// must stay inside R_k(i). Returns warnings, never fails a verification.
std::vector<std::string> star_shape_spot_check(const Diagram& d, int samples_per_region = 64);

} // namespace svor
