#include "svoronoi/construct_planar.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <sstream>

#include "svoronoi/errors.hpp"

namespace svor {

PositionReport validate_general_position(const PlanarSiteSet& sites, const Tolerances& tol) {
    const int n = sites.size();
    PositionReport report;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const double area2 = cross(sites[j] - sites[i], sites[k] - sites[i]);
                if (std::fabs(area2) <= tol.gp)
                    report.violations.push_back(
                        {PositionViolation::Kind::great_circle_triple, {i, j, k}, area2});
            }
    // incircle determinant built on the lifted paraboloid coordinates
    const auto lift = [&](int i) {
        const Vec2& p = sites[i];
        return std::array<double, 3>{p.u, p.v, p.u * p.u + p.v * p.v};
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int l = k + 1; l < n; ++l) {
                    const auto a = lift(i), b = lift(j), c = lift(k), e = lift(l);
                    const Vec3 r1{b[0] - a[0], b[1] - a[1], b[2] - a[2]};
                    const Vec3 r2{c[0] - a[0], c[1] - a[1], c[2] - a[2]};
                    const Vec3 r3{e[0] - a[0], e[1] - a[1], e[2] - a[2]};
                    const double det = det3(r1, r2, r3);
                    if (std::fabs(det) <= tol.gp)
                        report.violations.push_back(
                            {PositionViolation::Kind::cocircular_quadruple, {i, j, k, l}, det});
                }
    return report;
}

namespace {

struct TripleInfo {
    Vec2 center;
    int m = -1;
    int vert = -1;
};

struct Crossing {
    double tau;
    int s;
    int delta;
};

} // namespace

Diagram build_planar(const PlanarSiteSet& sites, int k, const Tolerances& tol, bool paranoid) {
    const int n = sites.size();
    if (n < 3) throw OrderOutOfRange("need at least 3 sites");
    if (k < 1 || k > n - 1)
        throw OrderOutOfRange("order k=" + std::to_string(k) + " outside 1.." +
                              std::to_string(n - 1));
    {
        const auto report = validate_general_position(sites, tol);
        if (!report.ok()) {
            std::ostringstream os;
            os << report.violations.size() << " planar general-position violations, first: "
               << report.violations.front().describe();
            throw GeneralPositionViolation(os.str());
        }
    }

    Diagram d;
    d.surface = Surface::plane;
    d.n = n;
    d.k = k;
    d.psites = sites.points();

    std::map<std::array<int, 3>, TripleInfo> triples;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                TripleInfo info;
                info.center = planar_circumcenter(sites[a], sites[b], sites[c], tol);
                const int ex[3] = {a, b, c};
                info.m = disk_enclosure_count(info.center, sites[a], sites, std::span(ex, 3), tol);
                const std::array<int, 3> tri{a, b, c};
                if (info.m == k - 1 || info.m == k - 2)
                    info.vert = d.add_vertex({tri, info.m, +1}, k, Vec3{}, info.center);
                triples.emplace(tri, info);
            }
    if (d.vertices.empty()) throw InternalInconsistency("planar diagram has no vertices");

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Vec2 dL = bisector_direction(sites, i, j);
            const Vec2 p0 = (sites[i] + sites[j]) * 0.5;
            std::vector<Crossing> cross;
            cross.reserve(static_cast<std::size_t>(n - 2));
            for (int s = 0; s < n; ++s) {
                if (s == i || s == j) continue;
                std::array<int, 3> tri{i, j, s};
                std::sort(tri.begin(), tri.end());
                const TripleInfo& info = triples.at(tri);
                const double deriv = dot(dL, sites[s] - sites[i]);
                if (std::fabs(deriv) < 1e-13)
                    throw InternalInconsistency("site on a bisector line (collinearity leak)");
                cross.push_back({dot(info.center - p0, dL), s, deriv > 0.0 ? +1 : -1});
            }
            std::sort(cross.begin(), cross.end(),
                      [](const Crossing& a, const Crossing& b) { return a.tau < b.tau; });
            const int M = static_cast<int>(cross.size());
            for (int t = 1; t < M; ++t)
                if (cross[static_cast<std::size_t>(t)].tau - cross[static_cast<std::size_t>(t - 1)].tau <
                    1e-12)
                    throw InternalInconsistency("two crossings coincide on a bisector line");

            // counts per interval: index t covers (tau_{t-1}, tau_t), 0 and M
            // are the unbounded ends
            const int ex[2] = {i, j};
            const auto interval_sample = [&](int t) {
                double tau;
                if (t == 0)
                    tau = cross[0].tau - 1.0;
                else if (t == M)
                    tau = cross[static_cast<std::size_t>(M - 1)].tau + 1.0;
                else
                    tau = 0.5 * (cross[static_cast<std::size_t>(t - 1)].tau +
                                 cross[static_cast<std::size_t>(t)].tau);
                return p0 + dL * tau;
            };
            const auto interval_count = [&](int t) {
                return disk_enclosure_count(interval_sample(t), sites[i], sites, std::span(ex, 2),
                                            tol);
            };
            std::vector<int> counts(static_cast<std::size_t>(M + 1));
            counts[0] = interval_count(0);
            for (int t = 1; t <= M; ++t)
                counts[static_cast<std::size_t>(t)] =
                    counts[static_cast<std::size_t>(t - 1)] +
                    cross[static_cast<std::size_t>(t - 1)].delta;
            // the unbounded ends must agree with the limiting half-planes
            if (counts[0] != halfplane_count(i, j, -dL, sites, tol) ||
                counts[static_cast<std::size_t>(M)] != halfplane_count(i, j, dL, sites, tol))
                throw InternalInconsistency("interval counts disagree with half-plane limits");
            if (paranoid)
                for (int t = 1; t <= M; ++t)
                    if (interval_count(t) != counts[static_cast<std::size_t>(t)])
                        throw InternalInconsistency("propagated interval count disagrees with recount");

            const auto vertex_of = [&](int t) {
                std::array<int, 3> tri{i, j, cross[static_cast<std::size_t>(t)].s};
                std::sort(tri.begin(), tri.end());
                const int v = triples.at(tri).vert;
                if (v < 0)
                    throw InternalInconsistency("edge endpoint is not a diagram vertex (count leak)");
                return v;
            };
            for (int t = 0; t <= M; ++t) {
                if (counts[static_cast<std::size_t>(t)] != k - 1) continue;
                DiagramEdge e;
                e.i = i;
                e.j = j;
                if (t == 0) {
                    e.v0 = vertex_of(0);
                    e.ray_sign = -1;
                } else if (t == M) {
                    e.v0 = vertex_of(M - 1);
                    e.ray_sign = +1;
                } else {
                    e.v0 = vertex_of(t - 1);
                    e.v1 = vertex_of(t);
                }
                d.edges.push_back(e);
            }
        }

    finalize_diagram(d, tol);
    return d;
}

} // namespace svor
