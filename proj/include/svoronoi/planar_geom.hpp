#pragma once

#include <span>
#include <vector>

#include "svoronoi/sphere_geom.hpp"
#include "svoronoi/tolerances.hpp"
#include "svoronoi/vec.hpp"

namespace svor {

/// Planar images of a spherical site set; ids match the spherical pre-images.
class PlanarSiteSet {
  public:
    explicit PlanarSiteSet(std::vector<Vec2> points);
    /// Invert every site of `sites` through `inv` (ids preserved).
    PlanarSiteSet(const SiteSet& sites, const Inversion& inv, const Tolerances& tol = Tolerances{});

    int size() const { return static_cast<int>(pts_.size()); }
    const Vec2& operator[](int id) const { return pts_[static_cast<std::size_t>(id)]; }
    const std::vector<Vec2>& points() const { return pts_; }

    const double* us() const { return us_.data(); }
    const double* vs() const { return vs_.data(); }

  private:
    std::vector<Vec2> pts_;
    std::vector<double> us_, vs_;
};

/// Equidistant point from a, b, c. Throws DegenerateTriple when the triple is
/// collinear within tol.deg (twice the signed triangle area).
Vec2 planar_circumcenter(const Vec2& a, const Vec2& b, const Vec2& c,
                         const Tolerances& tol = Tolerances{});

/// Number of sites strictly inside the open disk centered at `center` whose
/// boundary passes through `through`, skipping `exclude`. Throws
/// PredicateDegeneracy on a site within tol.pred of the boundary.
int disk_enclosure_count(const Vec2& center, const Vec2& through, const PlanarSiteSet& sites,
                         std::span<const int> exclude, const Tolerances& tol = Tolerances{});

/// Sites (excluding i and j) strictly inside the open half-plane bounded by
/// line ij on the side a disk through i, j recedes toward as its center goes
/// to infinity along `direction`. Direction must be parallel to the bisector
/// of i and j. Throws PredicateDegeneracy when a site sits on line ij.
int halfplane_count(int i, int j, const Vec2& direction, const PlanarSiteSet& sites,
                    const Tolerances& tol = Tolerances{});

/// Canonical bisector direction for pair (i, j), i < j: the perpendicular of
/// (site_j - site_i) turned counterclockwise. Ray keys use signs relative to
/// this direction.
Vec2 bisector_direction(const PlanarSiteSet& sites, int i, int j);

/// c[m] = number of circumcircles of site triples enclosing exactly m other
/// sites (one circle per triple); sum over m is C(n,3).
std::vector<long long> planar_circle_histogram(const PlanarSiteSet& sites,
                                               const Tolerances& tol = Tolerances{});

/// k nearest planar sites to q, nearest-first; `gap` receives the squared
/// distance margin between ranks k and k+1.
std::vector<int> k_nearest(const PlanarSiteSet& sites, const Vec2& q, int k, double* gap = nullptr);

} // namespace svor
