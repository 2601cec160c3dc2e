#include "svoronoi/construct_direct.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <sstream>

#include "svoronoi/errors.hpp"

namespace svor {

namespace {

constexpr double kTwoPi = 2.0 * 3.14159265358979323846;

void check_order(int n, int k) {
    if (n < 3) throw OrderOutOfRange("need at least 3 sites");
    if (k < 1 || k > n - 1)
        throw OrderOutOfRange("order k=" + std::to_string(k) + " outside 1.." +
                              std::to_string(n - 1));
}

void require_general_position(const SiteSet& sites, const Tolerances& tol) {
    const auto report = validate_general_position(sites, std::nullopt, tol);
    if (!report.ok()) {
        std::ostringstream os;
        os << report.violations.size() << " general-position violations, first: "
           << report.violations.front().describe();
        throw GeneralPositionViolation(os.str());
    }
}

struct TripleInfo {
    Vec3 center[2];  // canonical first (+) and its antipode (-)
    int m[2] = {-1, -1};
    int vert[2] = {-1, -1};
};

// crossing of a bisector circle: the center of {i,j,s} at angle theta; delta
// is the count change when passing it counterclockwise
struct Crossing {
    double theta;
    int s;
    int sign_idx; // 0 = canonical center, 1 = antipode
    int delta;
};

} // namespace

Diagram build_direct(const SiteSet& sites, int k, const Tolerances& tol, bool paranoid) {
    const int n = sites.size();
    check_order(n, k);
    require_general_position(sites, tol);

    Diagram d;
    d.surface = Surface::sphere;
    d.n = n;
    d.k = k;
    d.sites = sites.points();

    // vertex pass: both centers of every triple, classified by enclosure
    std::map<std::array<int, 3>, TripleInfo> triples;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                TripleInfo info;
                const auto centers = circumcenters(sites[a], sites[b], sites[c], tol);
                info.center[0] = centers.first;
                info.center[1] = centers.second;
                const std::array<int, 3> tri{a, b, c};
                const int ex[3] = {a, b, c};
                for (int t = 0; t < 2; ++t)
                    info.m[t] = enclosure_count(info.center[t], sites[a], sites, std::span(ex, 3), tol);
                if (info.m[0] + info.m[1] != n - 3)
                    throw InternalInconsistency("complementary caps of a triple enclose " +
                                                std::to_string(info.m[0] + info.m[1]) +
                                                " sites, expected n-3");
                for (int t = 0; t < 2; ++t)
                    if (info.m[t] == k - 1 || info.m[t] == k - 2)
                        info.vert[t] = d.add_vertex({tri, info.m[t], t == 0 ? +1 : -1}, k,
                                                    info.center[t]);
                triples.emplace(tri, info);
            }

    // edge pass: per pair, sort the crossings around the bisector circle and
    // keep the arcs whose two-point circles enclose exactly k-1 sites
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const ArcFrame frame = pair_frame(sites[i], sites[j]);
            std::vector<Crossing> cross;
            cross.reserve(static_cast<std::size_t>(2 * (n - 2)));
            for (int s = 0; s < n; ++s) {
                if (s == i || s == j) continue;
                std::array<int, 3> tri{i, j, s};
                std::sort(tri.begin(), tri.end());
                const TripleInfo& info = triples.at(tri);
                for (int t = 0; t < 2; ++t) {
                    const double theta = arc_angle(frame, info.center[t]);
                    const double deriv = dot(arc_tangent(frame, theta), sites[s] - sites[i]);
                    if (std::fabs(deriv) < 1e-13)
                        throw InternalInconsistency("tangential crossing on bisector circle");
                    cross.push_back({theta, s, t, deriv > 0.0 ? +1 : -1});
                }
            }
            std::sort(cross.begin(), cross.end(),
                      [](const Crossing& a, const Crossing& b) { return a.theta < b.theta; });
            const int M = static_cast<int>(cross.size());
            for (int t = 0; t < M; ++t) {
                const double gap = (t + 1 < M ? cross[static_cast<std::size_t>(t + 1)].theta
                                              : cross[0].theta + kTwoPi) -
                                   cross[static_cast<std::size_t>(t)].theta;
                if (gap < 1e-12)
                    throw InternalInconsistency("two crossings coincide on a bisector circle");
            }

            // seed count on the first arc, then +-1 propagation
            const int ex[2] = {i, j};
            const auto arc_count = [&](int t) {
                const double t0 = cross[static_cast<std::size_t>(t)].theta;
                const double t1 = t + 1 < M ? cross[static_cast<std::size_t>(t + 1)].theta
                                            : cross[0].theta + kTwoPi;
                const Vec3 mid = arc_point(frame, 0.5 * (t0 + t1));
                return enclosure_count(mid, sites[i], sites, std::span(ex, 2), tol);
            };
            std::vector<int> counts(static_cast<std::size_t>(M));
            counts[0] = arc_count(0);
            for (int t = 1; t < M; ++t)
                counts[static_cast<std::size_t>(t)] =
                    counts[static_cast<std::size_t>(t - 1)] + cross[static_cast<std::size_t>(t)].delta;
            if (counts[static_cast<std::size_t>(M - 1)] + cross[0].delta != counts[0])
                throw InternalInconsistency("arc counts do not close around the bisector circle");
            if (paranoid)
                for (int t = 1; t < M; ++t)
                    if (arc_count(t) != counts[static_cast<std::size_t>(t)])
                        throw InternalInconsistency("propagated arc count disagrees with recount");

            for (int t = 0; t < M; ++t) {
                if (counts[static_cast<std::size_t>(t)] != k - 1) continue;
                const Crossing& c0 = cross[static_cast<std::size_t>(t)];
                const Crossing& c1 = cross[static_cast<std::size_t>((t + 1) % M)];
                const auto vertex_of = [&](const Crossing& c) {
                    std::array<int, 3> tri{i, j, c.s};
                    std::sort(tri.begin(), tri.end());
                    const int v = triples.at(tri).vert[c.sign_idx];
                    if (v < 0)
                        throw InternalInconsistency(
                            "edge endpoint is not a diagram vertex (count leak)");
                    return v;
                };
                DiagramEdge e;
                e.i = i;
                e.j = j;
                e.v0 = vertex_of(c0);
                e.v1 = vertex_of(c1);
                e.theta0 = c0.theta;
                e.theta1 = t + 1 < M ? c1.theta : c1.theta + kTwoPi;
                d.edges.push_back(e);
            }
        }

    finalize_diagram(d, tol);
    return d;
}

std::vector<long long> circle_enclosure_histogram(const SiteSet& sites, const Tolerances& tol) {
    const int n = sites.size();
    if (n < 3) throw OrderOutOfRange("need at least 3 sites");
    require_general_position(sites, tol);
    std::vector<long long> hist(static_cast<std::size_t>(n - 2), 0);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                const auto centers = circumcenters(sites[a], sites[b], sites[c], tol);
                const int ex[3] = {a, b, c};
                for (const Vec3& v : {centers.first, centers.second})
                    ++hist[static_cast<std::size_t>(
                        enclosure_count(v, sites[a], sites, std::span(ex, 3), tol))];
            }
    return hist;
}

} // namespace svor
