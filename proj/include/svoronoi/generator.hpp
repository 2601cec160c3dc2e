#pragma once

#include <cstdint>
#include <vector>

#include "svoronoi/sphere_geom.hpp"

namespace svor {

struct GenerateStats {
    int rejected_sets = 0;
    int rejected_centers = 0;
};

/// Uniform-on-sphere sites via normalized 3D Gaussians, redrawn wholesale
/// until general position holds. `margin` is the determinant floor applied at
/// generation time; it is stricter than the runtime tolerance so seeded
/// instances stay clear of the predicate tie bands. Deterministic per seed.
SiteSet random_sites(int n, std::uint64_t seed, const Tolerances& tol = Tolerances{},
                     double margin = 1e-6, GenerateStats* stats = nullptr);

/// Uniform inversion center, rejection-sampled until sites+center are in
/// general position and the center clears every site by 10 * tol.sep.
Vec3 random_center(const SiteSet& sites, std::uint64_t seed, const Tolerances& tol = Tolerances{},
                   double margin = 1e-6, GenerateStats* stats = nullptr);

/// Explicit random angular perturbation: each point rotates by an angle drawn
/// from N(0, sigma) about a random tangent axis.
std::vector<Vec3> jitter_points(const std::vector<Vec3>& pts, double sigma, std::uint64_t seed);

} // namespace svor
