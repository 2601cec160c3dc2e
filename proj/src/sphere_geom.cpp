#include "svoronoi/sphere_geom.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "svoronoi/errors.hpp"
#include "svoronoi/kernels.hpp"

namespace svor {

std::pair<Vec3, Vec3> tangent_frame(const Vec3& w) {
    // seed with the coordinate axis least aligned with w
    const double ax = std::fabs(w.x), ay = std::fabs(w.y), az = std::fabs(w.z);
    Vec3 seed{1.0, 0.0, 0.0};
    if (ay <= ax && ay <= az)
        seed = {0.0, 1.0, 0.0};
    else if (az <= ax && az <= ay)
        seed = {0.0, 0.0, 1.0};
    const Vec3 f1 = normalized(cross(seed, w));
    const Vec3 f2 = cross(w, f1);
    return {f1, f2};
}

SiteSet::SiteSet(std::vector<Vec3> points, const Tolerances& tol) : pts_(std::move(points)) {
    if (pts_.empty()) throw Error("empty site set");
    for (auto& p : pts_) {
        const double n = norm(p);
        if (n < tol.sep) throw Error("site at the origin cannot be normalized");
        p = p * (1.0 / n);
    }
    const int n = size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (spherical_distance(pts_[i], pts_[j]) <= tol.sep) {
                std::ostringstream os;
                os << "sites " << i << " and " << j << " coincide within tolerance";
                throw Error(os.str());
            }
    xs_.resize(pts_.size());
    ys_.resize(pts_.size());
    zs_.resize(pts_.size());
    for (std::size_t i = 0; i < pts_.size(); ++i) {
        xs_[i] = pts_[i].x;
        ys_[i] = pts_[i].y;
        zs_[i] = pts_[i].z;
    }
}

Inversion::Inversion(const Vec3& center, double radius, const Tolerances& tol)
    : center_(center), radius_(radius) {
    if (radius <= 0.0) throw Error("inversion radius must be positive");
    if (std::fabs(norm(center) - 1.0) > tol.norm)
        throw Error("inversion center must lie on the unit sphere");
    center_ = normalized(center_);
    // The image plane passes through the image of the antipode and has
    // normal `center`; its frame comes from the center alone so repeated
    // constructions agree.
    plane_origin_ = center_ * (1.0 - radius_ * radius_ / 2.0);
    std::tie(e1_, e2_) = tangent_frame(center_);
}

Vec3 Inversion::invert3d(const Vec3& p, const Tolerances& tol) const {
    const Vec3 d = p - center_;
    const double d2 = norm2(d);
    if (d2 <= tol.sep * tol.sep) throw CenterInversion("point coincides with the inversion center");
    return center_ + d * (radius_ * radius_ / d2);
}

PlanarPoint Inversion::to_plane(const Vec3& p, const Tolerances& tol) const {
    const Vec3 q = invert3d(p, tol) - plane_origin_;
    return {dot(q, e1_), dot(q, e2_)};
}

Vec3 Inversion::plane_point3d(const PlanarPoint& q) const {
    return plane_origin_ + e1_ * q.u + e2_ * q.v;
}

Vec3 Inversion::to_sphere(const PlanarPoint& q) const { return invert3d(plane_point3d(q)); }

double spherical_distance(const Vec3& a, const Vec3& b) {
    return std::acos(std::clamp(dot(a, b), -1.0, 1.0));
}

std::pair<Vec3, Vec3> circumcenters(const Vec3& a, const Vec3& b, const Vec3& c,
                                    const Tolerances& tol) {
    const Vec3 axis = cross(b - a, c - a);
    if (norm(axis) < tol.deg) throw DegenerateTriple("triple has no well-defined circumcenter");
    const Vec3 first = normalized(axis);
    return {first, -first};
}

int enclosure_count(const Vec3& center, const Vec3& through, const SiteSet& sites,
                    std::span<const int> exclude, const Tolerances& tol) {
    const double t = dot(center, through);
    const auto r = kernels::cap_count(sites.xs(), sites.ys(), sites.zs(),
                                      static_cast<std::size_t>(sites.size()), center.x, center.y,
                                      center.z, t, tol.pred, exclude);
    if (r.boundary > 0)
        throw PredicateDegeneracy("site on a cap boundary within tolerance");
    return r.inside;
}

std::string PositionViolation::describe() const {
    std::ostringstream os;
    os << (kind == Kind::great_circle_triple ? "great-circle triple {" : "cocircular quadruple {");
    for (std::size_t i = 0; i < ids.size(); ++i) os << (i ? "," : "") << ids[i];
    os << "} det=" << determinant;
    return os.str();
}

PositionReport validate_general_position(const SiteSet& sites, const std::optional<Vec3>& extra,
                                         const Tolerances& tol) {
    std::vector<Vec3> pts = sites.points();
    if (extra) pts.push_back(normalized(*extra));
    const int n = static_cast<int>(pts.size());
    PositionReport report;

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const double d = det3(pts[i], pts[j], pts[k]);
                if (std::fabs(d) <= tol.gp)
                    report.violations.push_back(
                        {PositionViolation::Kind::great_circle_triple, {i, j, k}, d});
            }

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int l = k + 1; l < n; ++l) {
                    // four sphere points are cocircular iff coplanar
                    const double d =
                        det3(pts[j] - pts[i], pts[k] - pts[i], pts[l] - pts[i]);
                    if (std::fabs(d) <= tol.gp)
                        report.violations.push_back(
                            {PositionViolation::Kind::cocircular_quadruple, {i, j, k, l}, d});
                }
    return report;
}

std::vector<int> k_nearest(const SiteSet& sites, const Vec3& q, int k, double* gap) {
    const int n = sites.size();
    std::vector<int> ids(static_cast<std::size_t>(n));
    std::iota(ids.begin(), ids.end(), 0);
    // larger dot product = smaller geodesic distance
    std::vector<double> dots(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) dots[static_cast<std::size_t>(i)] = dot(q, sites[i]);
    std::stable_sort(ids.begin(), ids.end(), [&](int a, int b) {
        return dots[static_cast<std::size_t>(a)] > dots[static_cast<std::size_t>(b)];
    });
    if (gap)
        *gap = (k < n && k >= 1)
                   ? dots[static_cast<std::size_t>(ids[static_cast<std::size_t>(k - 1)])] -
                         dots[static_cast<std::size_t>(ids[static_cast<std::size_t>(k)])]
                   : 0.0;
    ids.resize(static_cast<std::size_t>(std::min(k, n)));
    return ids;
}

int count_closer(const SiteSet& sites, const Vec3& q, double cos_dist) {
    int c = 0;
    for (int i = 0; i < sites.size(); ++i)
        if (dot(q, sites[i]) > cos_dist) ++c;
    return c;
}

} // namespace svor
