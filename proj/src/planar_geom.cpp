#include "svoronoi/planar_geom.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "svoronoi/errors.hpp"
#include "svoronoi/kernels.hpp"

namespace svor {

namespace {

void fill_soa(const std::vector<Vec2>& pts, std::vector<double>& us, std::vector<double>& vs) {
    us.resize(pts.size());
    vs.resize(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        us[i] = pts[i].u;
        vs[i] = pts[i].v;
    }
}

} // namespace

PlanarSiteSet::PlanarSiteSet(std::vector<Vec2> points) : pts_(std::move(points)) {
    if (pts_.empty()) throw Error("empty planar site set");
    fill_soa(pts_, us_, vs_);
}

PlanarSiteSet::PlanarSiteSet(const SiteSet& sites, const Inversion& inv, const Tolerances& tol) {
    pts_.reserve(static_cast<std::size_t>(sites.size()));
    for (int i = 0; i < sites.size(); ++i) pts_.push_back(inv.to_plane(sites[i], tol));
    fill_soa(pts_, us_, vs_);
}

Vec2 planar_circumcenter(const Vec2& a, const Vec2& b, const Vec2& c, const Tolerances& tol) {
    const Vec2 ab = b - a;
    const Vec2 ac = c - a;
    const double d = 2.0 * cross(ab, ac);
    if (std::fabs(d) < tol.deg) throw DegenerateTriple("collinear planar triple");
    const double ab2 = norm2(ab);
    const double ac2 = norm2(ac);
    return {a.u + (ac.v * ab2 - ab.v * ac2) / d, a.v + (ab.u * ac2 - ac.u * ab2) / d};
}

int disk_enclosure_count(const Vec2& center, const Vec2& through, const PlanarSiteSet& sites,
                         std::span<const int> exclude, const Tolerances& tol) {
    // tau = |t|^2 - 2<c,t>; the kernel compares |s|^2 - 2<c,s> against it
    const double tau =
        through.u * through.u + through.v * through.v - 2.0 * (center.u * through.u + center.v * through.v);
    const auto r = kernels::disk_count(sites.us(), sites.vs(), static_cast<std::size_t>(sites.size()),
                                       center.u, center.v, tau, tol.pred, exclude);
    if (r.boundary > 0) throw PredicateDegeneracy("site on a disk boundary within tolerance");
    return r.inside;
}

int halfplane_count(int i, int j, const Vec2& direction, const PlanarSiteSet& sites,
                    const Tolerances& tol) {
    const Vec2 d = normalized(direction);
    const Vec2 chord = sites[j] - sites[i];
    if (std::fabs(dot(d, chord)) > tol.deg * std::max(1.0, norm(chord)))
        throw Error("direction is not parallel to the bisector of the pair");
    const int ex[2] = {i, j};
    const auto r =
        kernels::halfplane_count(sites.us(), sites.vs(), static_cast<std::size_t>(sites.size()),
                                 d.u, d.v, sites[i].u, sites[i].v, tol.pred, std::span(ex, 2));
    if (r.boundary > 0) throw PredicateDegeneracy("site on the pair's line within tolerance");
    return r.inside;
}

Vec2 bisector_direction(const PlanarSiteSet& sites, int i, int j) {
    return normalized(perp(sites[j] - sites[i]));
}

std::vector<long long> planar_circle_histogram(const PlanarSiteSet& sites, const Tolerances& tol) {
    const int n = sites.size();
    std::vector<long long> hist(n >= 3 ? static_cast<std::size_t>(n - 2) : 1, 0);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                const Vec2 cc = planar_circumcenter(sites[a], sites[b], sites[c], tol);
                const int ex[3] = {a, b, c};
                const int m = disk_enclosure_count(cc, sites[a], sites, std::span(ex, 3), tol);
                ++hist[static_cast<std::size_t>(m)];
            }
    return hist;
}

std::vector<int> k_nearest(const PlanarSiteSet& sites, const Vec2& q, int k, double* gap) {
    const int n = sites.size();
    std::vector<int> ids(static_cast<std::size_t>(n));
    std::iota(ids.begin(), ids.end(), 0);
    std::vector<double> d2(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) d2[static_cast<std::size_t>(i)] = norm2(sites[i] - q);
    std::stable_sort(ids.begin(), ids.end(), [&](int a, int b) {
        return d2[static_cast<std::size_t>(a)] < d2[static_cast<std::size_t>(b)];
    });
    if (gap)
        *gap = (k < n && k >= 1)
                   ? d2[static_cast<std::size_t>(ids[static_cast<std::size_t>(k)])] -
                         d2[static_cast<std::size_t>(ids[static_cast<std::size_t>(k - 1)])]
                   : 0.0;
    ids.resize(static_cast<std::size_t>(std::min(k, n)));
    return ids;
}

} // namespace svor
