#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "svoronoi/tolerances.hpp"
#include "svoronoi/vec.hpp"

namespace svor {

/// Deterministic orthonormal tangent pair (f1, f2) with (f1, f2, w)
/// right-handed, derived from the unit vector w alone. Used for bisector
/// circle frames, vertex rotation frames and the inversion plane frame.
std::pair<Vec3, Vec3> tangent_frame(const Vec3& w);

/// Ordered sites on the unit sphere with stable ids 0..n-1. Inputs are
/// normalized on construction; pairwise distinctness is enforced, general
/// position is validated separately (see validate_general_position).
class SiteSet {
  public:
    SiteSet(std::vector<Vec3> points, const Tolerances& tol = Tolerances{});

    int size() const { return static_cast<int>(pts_.size()); }
    const Vec3& operator[](int id) const { return pts_[static_cast<std::size_t>(id)]; }
    const std::vector<Vec3>& points() const { return pts_; }

    // structure-of-arrays views for the enclosure kernels
    const double* xs() const { return xs_.data(); }
    const double* ys() const { return ys_.data(); }
    const double* zs() const { return zs_.data(); }

  private:
    std::vector<Vec3> pts_;
    std::vector<double> xs_, ys_, zs_;
};

/// Sphere-to-plane inversion with center on the sphere. The image plane has
/// normal `center` and carries a fixed orthonormal 2-frame, so planar
/// coordinates are well-defined and the map is invertible.
class Inversion {
  public:
    Inversion(const Vec3& center, double radius, const Tolerances& tol = Tolerances{});

    const Vec3& center() const { return center_; }
    double radius() const { return radius_; }

    /// Image of p in R^3: center + R^2 (p - center)/|p - center|^2.
    /// Applying it twice is the identity. Throws CenterInversion when p is
    /// within tol.sep of the center.
    Vec3 invert3d(const Vec3& p, const Tolerances& tol = Tolerances{}) const;

    /// Image of a sphere point expressed in the image plane's 2-frame.
    PlanarPoint to_plane(const Vec3& p, const Tolerances& tol = Tolerances{}) const;

    /// Lift a plane point back to R^3 and invert it onto the sphere.
    Vec3 to_sphere(const PlanarPoint& q) const;

    /// 3-space point of a planar coordinate pair (on the image plane).
    Vec3 plane_point3d(const PlanarPoint& q) const;

  private:
    Vec3 center_;
    double radius_;
    Vec3 plane_origin_; // image of the antipode of the center
    Vec3 e1_, e2_;      // plane frame, (e1, e2, center) right-handed
};

/// Geodesic distance on the unit sphere (radians).
double spherical_distance(const Vec3& a, const Vec3& b);

/// The two antipodal points equidistant from a, b, c. The first is the
/// canonical one: normalize((b-a) x (c-a)) with the arguments in the caller's
/// order; constructions pass triples sorted by site id so the sign is a
/// stable key component. Throws DegenerateTriple when the cross product is
/// shorter than tol.deg.
std::pair<Vec3, Vec3> circumcenters(const Vec3& a, const Vec3& b, const Vec3& c,
                                    const Tolerances& tol = Tolerances{});

/// Number of sites strictly inside the spherical cap centered at `center`
/// whose boundary passes through `through`, skipping ids in `exclude`.
/// Throws PredicateDegeneracy if any non-excluded site lands within tol.pred
/// of the cap boundary.
int enclosure_count(const Vec3& center, const Vec3& through, const SiteSet& sites,
                    std::span<const int> exclude, const Tolerances& tol = Tolerances{});

/// One general-position defect: a triple on a common great circle or a
/// cocircular quadruple. Ids >= sites.size() refer to the `extra` point.
struct PositionViolation {
    enum class Kind { great_circle_triple, cocircular_quadruple };
    Kind kind;
    std::vector<int> ids;
    double determinant;
    std::string describe() const;
};

struct PositionReport {
    std::vector<PositionViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks every triple for great-circle coplanarity with the origin and every
/// quadruple for cocircularity (4-point coplanarity), with |det| > tol.gp as
/// the clearance requirement. `extra`, when given, participates in all checks
/// under id = sites.size(). Returns a report; never throws.
PositionReport validate_general_position(const SiteSet& sites,
                                         const std::optional<Vec3>& extra = std::nullopt,
                                         const Tolerances& tol = Tolerances{});

/// Ids of the k sites nearest to q, sorted nearest-first. `gap`, when
/// requested, receives the difference in cos(distance) between rank k and
/// rank k+1 (0 when k == n).
std::vector<int> k_nearest(const SiteSet& sites, const Vec3& q, int k, double* gap = nullptr);

/// Number of sites strictly nearer to q than the given geodesic distance
/// threshold cos value; helper for rank tests.
int count_closer(const SiteSet& sites, const Vec3& q, double cos_dist);

} // namespace svor
