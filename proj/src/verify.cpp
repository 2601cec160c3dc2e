#include "svoronoi/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "svoronoi/construct_direct.hpp"
#include "svoronoi/errors.hpp"

namespace svor {

ExpectedCounts expected_counts(int n, int k) {
    if (n < 3 || k < 1 || k > n - 1) throw OrderOutOfRange("expected_counts needs 1 <= k <= n-1");
    const long long N = n, K = k;
    ExpectedCounts c;
    c.n = n;
    c.k = k;
    c.type_i = 2 * K * (N - K - 1);
    c.type_ii = 2 * (K - 1) * (N - K);
    c.vertices = 4 * K * N - 4 * K * K - 2 * N;
    c.edges = 6 * K * N - 6 * K * K - 3 * N;
    c.faces = 2 * K * N - 2 * K * K - N + 2;
    return c;
}

CountReport verify_counts(const Diagram& d) {
    CountReport rep;
    rep.expected = expected_counts(d.n, d.k);
    rep.actual.n = d.n;
    rep.actual.k = d.k;
    for (const auto& v : d.vertices)
        ++(v.type == VertexType::type_i ? rep.actual.type_i : rep.actual.type_ii);
    rep.actual.vertices = static_cast<long long>(d.vertices.size());
    rep.actual.edges = static_cast<long long>(d.edges.size());
    rep.actual.faces = static_cast<long long>(d.faces.size());

    std::ostringstream os;
    const auto cmp = [&](const char* name, long long e, long long a) {
        if (e != a) os << name << " expected " << e << " got " << a << "; ";
    };
    cmp("typeI", rep.expected.type_i, rep.actual.type_i);
    cmp("typeII", rep.expected.type_ii, rep.actual.type_ii);
    cmp("V", rep.expected.vertices, rep.actual.vertices);
    cmp("E", rep.expected.edges, rep.actual.edges);
    cmp("F", rep.expected.faces, rep.actual.faces);
    rep.delta = os.str();
    rep.pass = rep.delta.empty();
    return rep;
}

AntipodalReport verify_antipodal(const SiteSet& sites, int k, const Tolerances& tol) {
    AntipodalReport rep;
    const int n = sites.size();
    const Diagram d1 = build_direct(sites, k, tol);

    // same diagram, complementary order on the antipodal set
    std::vector<Vec3> anti;
    anti.reserve(static_cast<std::size_t>(n));
    for (const auto& p : sites.points()) anti.push_back(-p);
    const SiteSet astar(anti, tol);
    const Diagram d2 = build_direct(astar, n - k, tol);
    const IsoResult iso = isomorphic(d1, d2, /*type_swap=*/true);
    if (!iso.isomorphic)
        rep.issues.push_back("SV_k(U) vs SV_{n-k}(U*): " + iso.mismatch);

    // antipodal vertices swap type within the same site set
    const Diagram d3 = build_direct(sites, n - k, tol);
    for (const auto& v : d1.vertices) {
        const VertexKey anti_key{v.key.triple, n - 3 - v.key.m, -v.key.sign};
        const int w = d3.find_vertex(anti_key);
        if (w < 0) {
            rep.issues.push_back("no antipodal vertex for " + v.key.str());
            continue;
        }
        const auto& vert = d3.vertices[static_cast<std::size_t>(w)];
        if (vert.type == v.type)
            rep.issues.push_back("antipodal vertex " + anti_key.str() + " kept type " +
                                 type_name(v.type));
        if (norm(vert.pos + v.pos) > 1e-9)
            rep.issues.push_back("antipodal vertex " + anti_key.str() + " is not at -pos");
    }

    // complementary faces use the same bisectors on opposite sides
    std::map<std::vector<int>, const DiagramFace*> d3_faces;
    for (const auto& f : d3.faces) d3_faces.emplace(f.sites, &f);
    for (const auto& f : d1.faces) {
        std::vector<int> comp;
        for (int i = 0; i < n; ++i)
            if (!std::binary_search(f.sites.begin(), f.sites.end(), i)) comp.push_back(i);
        const auto it = d3_faces.find(comp);
        if (it == d3_faces.end()) {
            rep.issues.push_back("no complementary face for a face of SV_k(U)");
            continue;
        }
        const DiagramFace& g = *it->second;
        const auto boundary_pairs = [](const Diagram& d, const DiagramFace& face) {
            std::multiset<std::pair<int, int>> pairs;
            for (int h : face.boundary) {
                const auto& e = d.edges[static_cast<std::size_t>(half_edge(h))];
                pairs.emplace(e.i, e.j);
            }
            return pairs;
        };
        const auto p1 = boundary_pairs(d1, f);
        if (p1 != boundary_pairs(d3, g)) {
            rep.issues.push_back("complementary faces bound by different bisectors");
            continue;
        }
        // geometric side flip across every shared bisector
        for (const auto& [i, j] : std::set<std::pair<int, int>>(p1.begin(), p1.end())) {
            const Vec3 pole = normalized(sites[i] - sites[j]);
            const double s1 = dot(f.sample, pole);
            const double s2 = dot(g.sample, pole);
            if (s1 * s2 >= 0.0)
                rep.issues.push_back("faces lie on the same side of bisector {" +
                                     std::to_string(i) + "," + std::to_string(j) + "}");
        }
    }

    rep.pass = rep.issues.empty();
    return rep;
}

CircleIdentityReport verify_circle_identities(const SiteSet& sites, const Tolerances& tol) {
    CircleIdentityReport rep;
    const int n = sites.size();
    const auto hist = circle_enclosure_histogram(sites, tol);
    const auto at = [&](long long m) {
        return m >= 0 && m < static_cast<long long>(hist.size()) ? hist[static_cast<std::size_t>(m)]
                                                                 : 0;
    };
    long long total = 0;
    for (long long c : hist) total += c;
    const long long expect_total = 2LL * n * (n - 1) * (n - 2) / 6;
    if (total != expect_total)
        rep.issues.push_back("histogram sums to " + std::to_string(total) + ", expected " +
                             std::to_string(expect_total));
    for (int k = 1; k <= n - 1; ++k) {
        const auto e = expected_counts(n, k);
        if (at(k - 1) + at(k - 2) != e.vertices)
            rep.issues.push_back("c_{k-1}+c_{k-2} != |V| at k=" + std::to_string(k));
    }
    rep.pass = rep.issues.empty();
    return rep;
}

CircleIdentityReport verify_circle_identities(const PlanarSiteSet& sites, const Tolerances& tol) {
    CircleIdentityReport rep;
    const int n = sites.size();
    const auto hist = planar_circle_histogram(sites, tol);
    const auto at = [&](long long m) {
        return m >= 0 && m < static_cast<long long>(hist.size()) ? hist[static_cast<std::size_t>(m)]
                                                                 : 0;
    };
    long long total = 0;
    for (long long c : hist) total += c;
    const long long expect_total = static_cast<long long>(n) * (n - 1) * (n - 2) / 6;
    if (total != expect_total)
        rep.issues.push_back("histogram sums to " + std::to_string(total) + ", expected " +
                             std::to_string(expect_total));
    for (int k = 1; k <= n - 1; ++k) {
        const long long K = k, N = n;
        if (at(k - 1) + at(n - k - 2) != 2 * K * (N - K - 1))
            rep.issues.push_back("c_{k-1}+c_{n-k-2} != 2k(n-k-1) at k=" + std::to_string(k));
        if (at(k - 2) + at(n - k - 1) != 2 * (K - 1) * (N - K))
            rep.issues.push_back("c_{k-2}+c_{n-k-1} != 2(k-1)(n-k) at k=" + std::to_string(k));
    }
    rep.pass = rep.issues.empty();
    return rep;
}

std::vector<std::string> star_shape_spot_check(const Diagram& d, int samples_per_region) {
    std::vector<std::string> warnings;
    if (d.surface != Surface::sphere) return warnings;
    for (int i = 0; i < d.n; ++i) {
        const Region r = region(d, i);
        const Vec3 kernel = d.sites[static_cast<std::size_t>(i)];
        // boundary samples spread over the cycle's arcs
        std::vector<Vec3> samples;
        const int per_edge =
            std::max(1, samples_per_region / std::max(1, static_cast<int>(r.boundary.size())));
        for (int h : r.boundary)
            for (int t = 0; t < per_edge; ++t)
                samples.push_back(
                    sphere_edge_point(d, half_edge(h), (t + 0.5) / per_edge));
        for (const Vec3& b : samples) {
            for (double t : {0.125, 0.25, 0.375, 0.5, 0.625, 0.75, 0.875}) {
                const Vec3 x = normalized(kernel * (1.0 - t) + b * t);
                // x in R_k(i) iff fewer than k sites are strictly nearer to x
                // than site i
                int closer = 0;
                const double di = dot(x, kernel);
                for (int s = 0; s < d.n; ++s)
                    if (s != i && dot(x, d.sites[static_cast<std::size_t>(s)]) > di) ++closer;
                if (closer > d.k - 1) {
                    warnings.push_back("region " + std::to_string(i) +
                                       ": geodesic to a boundary sample leaves the region");
                    break;
                }
            }
        }
    }
    return warnings;
}

} // namespace svor
