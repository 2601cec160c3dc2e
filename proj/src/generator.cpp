#include "svoronoi/generator.hpp"

#include <cmath>
#include <random>

#include "svoronoi/errors.hpp"

namespace svor {

namespace {

Vec3 gaussian_direction(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    while (true) {
        const Vec3 p{g(rng), g(rng), g(rng)};
        if (norm(p) > 1e-6) return normalized(p);
    }
}

Tolerances with_margin(const Tolerances& tol, double margin) {
    Tolerances t = tol;
    t.gp = std::max(t.gp, margin);
    return t;
}

} // namespace

SiteSet random_sites(int n, std::uint64_t seed, const Tolerances& tol, double margin,
                     GenerateStats* stats) {
    if (n < 3) throw OrderOutOfRange("need at least 3 sites");
    std::mt19937_64 rng(seed);
    const Tolerances strict = with_margin(tol, margin);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<Vec3> pts;
        pts.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) pts.push_back(gaussian_direction(rng));
        try {
            SiteSet sites(pts, tol);
            if (validate_general_position(sites, std::nullopt, strict).ok()) return sites;
        } catch (const Error&) {
            // coincident draw; fall through to a redraw
        }
        if (stats) ++stats->rejected_sets;
    }
    throw Error("rejection budget exhausted while generating sites (pathological tolerances?)");
}

Vec3 random_center(const SiteSet& sites, std::uint64_t seed, const Tolerances& tol, double margin,
                   GenerateStats* stats) {
    std::mt19937_64 rng(seed);
    const Tolerances strict = with_margin(tol, margin);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const Vec3 c = gaussian_direction(rng);
        bool clear = true;
        for (int i = 0; i < sites.size() && clear; ++i)
            clear = spherical_distance(c, sites[i]) > 10.0 * tol.sep;
        if (clear && validate_general_position(sites, c, strict).ok()) return c;
        if (stats) ++stats->rejected_centers;
    }
    throw Error("rejection budget exhausted while sampling an inversion center");
}

std::vector<Vec3> jitter_points(const std::vector<Vec3>& pts, double sigma, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, sigma);
    std::uniform_real_distribution<double> u(0.0, 2.0 * 3.14159265358979323846);
    std::vector<Vec3> out;
    out.reserve(pts.size());
    for (const Vec3& p : pts) {
        const Vec3 unit = normalized(p);
        const auto [f1, f2] = tangent_frame(unit);
        const double phi = u(rng);
        const Vec3 axis = f1 * std::cos(phi) + f2 * std::sin(phi);
        const double ang = g(rng);
        // Rodrigues rotation of `unit` about the tangent `axis`
        const Vec3 rotated = unit * std::cos(ang) + cross(axis, unit) * std::sin(ang) +
                             axis * (dot(axis, unit) * (1.0 - std::cos(ang)));
        out.push_back(normalized(rotated));
    }
    return out;
}

} // namespace svor
