#include "svoronoi/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "svoronoi/errors.hpp"
#include "svoronoi/sphere_geom.hpp"

namespace svor {

namespace {

constexpr double kPi = 3.14159265358979323846;

[[noreturn]] void structural(const std::string& what) { throw InternalInconsistency(what); }

std::vector<int> knn_sphere(const std::vector<Vec3>& sites, const Vec3& q, int k, double* gap) {
    const int n = static_cast<int>(sites.size());
    std::vector<int> ids(static_cast<std::size_t>(n));
    std::iota(ids.begin(), ids.end(), 0);
    std::vector<double> dots(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) dots[static_cast<std::size_t>(i)] = dot(q, sites[static_cast<std::size_t>(i)]);
    std::stable_sort(ids.begin(), ids.end(),
                     [&](int a, int b) { return dots[static_cast<std::size_t>(a)] > dots[static_cast<std::size_t>(b)]; });
    if (gap)
        *gap = k < n ? dots[static_cast<std::size_t>(ids[static_cast<std::size_t>(k - 1)])] -
                           dots[static_cast<std::size_t>(ids[static_cast<std::size_t>(k)])]
                     : 1.0;
    ids.resize(static_cast<std::size_t>(k));
    return ids;
}

std::vector<int> knn_plane(const std::vector<Vec2>& sites, const Vec2& q, int k, double* gap) {
    const int n = static_cast<int>(sites.size());
    std::vector<int> ids(static_cast<std::size_t>(n));
    std::iota(ids.begin(), ids.end(), 0);
    std::vector<double> d2(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) d2[static_cast<std::size_t>(i)] = norm2(sites[static_cast<std::size_t>(i)] - q);
    std::stable_sort(ids.begin(), ids.end(),
                     [&](int a, int b) { return d2[static_cast<std::size_t>(a)] < d2[static_cast<std::size_t>(b)]; });
    if (gap)
        *gap = k < n ? d2[static_cast<std::size_t>(ids[static_cast<std::size_t>(k)])] -
                           d2[static_cast<std::size_t>(ids[static_cast<std::size_t>(k - 1)])]
                     : 1.0;
    ids.resize(static_cast<std::size_t>(k));
    return ids;
}

} // namespace

std::string VertexKey::str() const {
    std::ostringstream os;
    os << "{" << triple[0] << "," << triple[1] << "," << triple[2] << "|m=" << m
       << (sign > 0 ? "|+" : "|-") << "}";
    return os.str();
}

VertexType type_from_m(int m, int k) {
    if (m == k - 1) return VertexType::type_i;
    if (m == k - 2) return VertexType::type_ii;
    structural("enclosure count " + std::to_string(m) + " is not a vertex class for order " +
               std::to_string(k));
}

const char* type_name(VertexType t) { return t == VertexType::type_i ? "I" : "II"; }

int Diagram::add_vertex(const VertexKey& key, int order, const Vec3& pos, const Vec2& ppos) {
    if (auto it = vertex_index.find(key); it != vertex_index.end())
        structural("duplicate vertex key " + key.str());
    DiagramVertex v;
    v.key = key;
    v.type = type_from_m(key.m, order);
    v.pos = pos;
    v.ppos = ppos;
    const int idx = static_cast<int>(vertices.size());
    vertices.push_back(v);
    vertex_index.emplace(key, idx);
    return idx;
}

int Diagram::find_vertex(const VertexKey& key) const {
    auto it = vertex_index.find(key);
    return it == vertex_index.end() ? -1 : it->second;
}

ArcFrame pair_frame(const Vec3& site_i, const Vec3& site_j) {
    ArcFrame f;
    f.pole = normalized(site_i - site_j);
    std::tie(f.f1, f.f2) = tangent_frame(f.pole);
    return f;
}

Vec3 arc_point(const ArcFrame& f, double theta) {
    return f.f1 * std::cos(theta) + f.f2 * std::sin(theta);
}

Vec3 arc_tangent(const ArcFrame& f, double theta) {
    return f.f1 * (-std::sin(theta)) + f.f2 * std::cos(theta);
}

double arc_angle(const ArcFrame& f, const Vec3& p) { return std::atan2(dot(p, f.f2), dot(p, f.f1)); }

Vec3 sphere_edge_point(const Diagram& d, int e, double t) {
    const DiagramEdge& ed = d.edges[static_cast<std::size_t>(e)];
    const ArcFrame f = pair_frame(d.sites[static_cast<std::size_t>(ed.i)],
                                  d.sites[static_cast<std::size_t>(ed.j)]);
    return arc_point(f, ed.theta0 + t * (ed.theta1 - ed.theta0));
}

Vec2 planar_edge_point(const Diagram& d, int e, double t) {
    const DiagramEdge& ed = d.edges[static_cast<std::size_t>(e)];
    const Vec2 p0 = d.vertices[static_cast<std::size_t>(ed.v0)].ppos;
    if (ed.ray_sign != 0) {
        const Vec2 dir = normalized(perp(d.psites[static_cast<std::size_t>(ed.j)] -
                                         d.psites[static_cast<std::size_t>(ed.i)])) *
                         static_cast<double>(ed.ray_sign);
        return p0 + dir * t;
    }
    const Vec2 p1 = d.vertices[static_cast<std::size_t>(ed.v1)].ppos;
    return p0 + (p1 - p0) * t;
}

Vec3 sphere_half_tangent(const Diagram& d, int h) {
    const DiagramEdge& ed = d.edges[static_cast<std::size_t>(half_edge(h))];
    const ArcFrame f = pair_frame(d.sites[static_cast<std::size_t>(ed.i)],
                                  d.sites[static_cast<std::size_t>(ed.j)]);
    return half_forward(h) ? arc_tangent(f, ed.theta0) : -arc_tangent(f, ed.theta1);
}

Vec2 planar_half_tangent(const Diagram& d, int h) {
    const DiagramEdge& ed = d.edges[static_cast<std::size_t>(half_edge(h))];
    if (ed.ray_sign != 0) {
        const Vec2 dir = normalized(perp(d.psites[static_cast<std::size_t>(ed.j)] -
                                         d.psites[static_cast<std::size_t>(ed.i)])) *
                         static_cast<double>(ed.ray_sign);
        return half_forward(h) ? dir : -dir;
    }
    const Vec2 p0 = d.vertices[static_cast<std::size_t>(ed.v0)].ppos;
    const Vec2 p1 = d.vertices[static_cast<std::size_t>(ed.v1)].ppos;
    const Vec2 t = normalized(p1 - p0);
    return half_forward(h) ? t : -t;
}

void assign_labels(Diagram& d, const Tolerances& tol) {
    for (const DiagramEdge& e : d.edges) {
        const bool sphere = d.surface == Surface::sphere;
        const double sep = sphere ? norm(d.sites[static_cast<std::size_t>(e.i)] -
                                         d.sites[static_cast<std::size_t>(e.j)])
                                  : norm(d.psites[static_cast<std::size_t>(e.i)] -
                                         d.psites[static_cast<std::size_t>(e.j)]);
        if (sep <= tol.sep)
            throw SideAmbiguity("sites " + std::to_string(e.i) + "," + std::to_string(e.j) +
                                " coincide; bisector sides undefined");
    }
    d.labeled = true;
}

int left_label(const Diagram& d, int h) {
    const DiagramEdge& e = d.edges[static_cast<std::size_t>(half_edge(h))];
    double side;
    if (d.surface == Surface::sphere) {
        const ArcFrame f = pair_frame(d.sites[static_cast<std::size_t>(e.i)],
                                      d.sites[static_cast<std::size_t>(e.j)]);
        const double tm = 0.5 * (e.theta0 + e.theta1);
        const Vec3 m = arc_point(f, tm);
        const Vec3 travel = half_forward(h) ? arc_tangent(f, tm) : -arc_tangent(f, tm);
        side = dot(cross(m, travel), f.pole);
    } else {
        const Vec2 travel = planar_half_tangent(d, h);
        const Vec2 nrm = normalized(d.psites[static_cast<std::size_t>(e.i)] -
                                    d.psites[static_cast<std::size_t>(e.j)]);
        side = dot(perp(travel), nrm);
    }
    return side > 0.0 ? e.i : e.j;
}

int right_label(const Diagram& d, int h) {
    const DiagramEdge& e = d.edges[static_cast<std::size_t>(half_edge(h))];
    const int l = left_label(d, h);
    return l == e.i ? e.j : e.i;
}

namespace {

// Rotational angle of an out-half at its origin vertex.
double out_half_angle(const Diagram& d, int h, const std::pair<Vec3, Vec3>& vframe) {
    if (d.surface == Surface::sphere) {
        const Vec3 t = sphere_half_tangent(d, h);
        return std::atan2(dot(t, vframe.second), dot(t, vframe.first));
    }
    const Vec2 t = planar_half_tangent(d, h);
    return std::atan2(t.v, t.u);
}

Vec3 face_sample_sphere(const Diagram& d, const std::vector<int>& boundary, int attempt) {
    Vec3 sum{};
    int idx = 0;
    for (int h : boundary) {
        const double w = 1.0 + 0.13 * attempt * (idx + 1);
        sum = sum + sphere_edge_point(d, half_edge(h), 0.5) * w;
        ++idx;
    }
    const double len = norm(sum);
    if (len < 1e-12) structural("degenerate face sample (boundary midpoints cancel)");
    return sum * (1.0 / len);
}

Vec2 face_sample_plane(const Diagram& d, const std::vector<int>& boundary, int attempt) {
    Vec2 sum{};
    double wsum = 0.0;
    int idx = 0;
    for (int h : boundary) {
        const int e = half_edge(h);
        const double w = 1.0 + 0.13 * attempt * (idx + 1);
        // rays contribute a point one unit out; bounded edges their midpoint
        sum = sum + planar_edge_point(d, e, d.edges[static_cast<std::size_t>(e)].ray_sign != 0 ? 1.0 : 0.5) * w;
        wsum += w;
        ++idx;
    }
    return sum * (1.0 / wsum);
}

} // namespace

void finalize_diagram(Diagram& d, const Tolerances& tol) {
    const int E = static_cast<int>(d.edges.size());
    const int V = static_cast<int>(d.vertices.size());
    if (E == 0 || V == 0) structural("diagram has no edges or vertices");

    for (int e = 0; e < E; ++e) {
        const DiagramEdge& ed = d.edges[static_cast<std::size_t>(e)];
        if (ed.i >= ed.j) structural("edge pair not sorted");
        if (ed.v0 < 0 || ed.v0 >= V) structural("edge with invalid origin vertex");
        if (ed.ray_sign == 0) {
            if (ed.v1 < 0 || ed.v1 >= V) structural("bounded edge with invalid end vertex");
            if (d.surface == Surface::sphere &&
                !(ed.theta1 > ed.theta0 && ed.theta1 - ed.theta0 <= 2.0 * kPi + 1e-12))
                structural("spherical arc angles not ordered");
        } else if (d.surface == Surface::sphere) {
            structural("ray edge on a sphere diagram");
        }
    }

    assign_labels(d, tol);

    // out-half lists per vertex
    std::vector<std::vector<int>> out(static_cast<std::size_t>(V));
    for (int h = 0; h < 2 * E; ++h) {
        const int o = d.half_origin(h);
        if (o >= 0) out[static_cast<std::size_t>(o)].push_back(h);
    }
    d.out_halves.assign(static_cast<std::size_t>(V), {-1, -1, -1});
    for (int v = 0; v < V; ++v) {
        auto& lst = out[static_cast<std::size_t>(v)];
        if (lst.size() != 3)
            structural("vertex " + d.vertices[static_cast<std::size_t>(v)].key.str() + " has degree " +
                       std::to_string(lst.size()) + ", expected 3");
        const auto vframe = d.surface == Surface::sphere
                                ? tangent_frame(d.vertices[static_cast<std::size_t>(v)].pos)
                                : std::pair<Vec3, Vec3>{};
        std::array<double, 3> ang{};
        for (int t = 0; t < 3; ++t) ang[static_cast<std::size_t>(t)] = out_half_angle(d, lst[static_cast<std::size_t>(t)], vframe);
        std::array<int, 3> order{0, 1, 2};
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return ang[static_cast<std::size_t>(a)] < ang[static_cast<std::size_t>(b)];
        });
        for (int t = 0; t < 3; ++t)
            d.out_halves[static_cast<std::size_t>(v)][static_cast<std::size_t>(t)] =
                lst[static_cast<std::size_t>(order[static_cast<std::size_t>(t)])];
    }

    // next pointers: at the head vertex, step to the clockwise neighbor of
    // the twin (= counterclockwise walk of the face on the left)
    d.next.assign(static_cast<std::size_t>(2 * E), -1);
    for (int v = 0; v < V; ++v) {
        const auto& lst = d.out_halves[static_cast<std::size_t>(v)];
        for (int t = 0; t < 3; ++t) {
            const int oh = lst[static_cast<std::size_t>(t)];
            const int prev = lst[static_cast<std::size_t>((t + 2) % 3)];
            d.next[static_cast<std::size_t>(twin_half(oh))] = prev;
        }
    }

    // rays close through infinity; the rotation reverses there, so the
    // outgoing half of a ray continues on the incoming half of the next ray
    // in ascending direction angle
    std::vector<std::pair<double, int>> rays; // (angle, edge)
    for (int e = 0; e < E; ++e)
        if (d.edges[static_cast<std::size_t>(e)].ray_sign != 0) {
            const Vec2 dir = planar_half_tangent(d, 2 * e);
            rays.emplace_back(std::atan2(dir.v, dir.u), e);
        }
    std::sort(rays.begin(), rays.end());
    for (std::size_t r = 0; r < rays.size(); ++r) {
        const int e = rays[r].second;
        const int succ = rays[(r + 1) % rays.size()].second;
        d.next[static_cast<std::size_t>(2 * e)] = 2 * succ + 1;
    }

    for (int h = 0; h < 2 * E; ++h)
        if (d.next[static_cast<std::size_t>(h)] < 0) structural("half-edge without successor");

    // face walk
    d.faces.clear();
    d.face_of.assign(static_cast<std::size_t>(2 * E), -1);
    for (int h0 = 0; h0 < 2 * E; ++h0) {
        if (d.face_of[static_cast<std::size_t>(h0)] >= 0) continue;
        DiagramFace face;
        const int fid = static_cast<int>(d.faces.size());
        int h = h0;
        do {
            if (d.face_of[static_cast<std::size_t>(h)] >= 0) structural("face walk collision");
            d.face_of[static_cast<std::size_t>(h)] = fid;
            face.boundary.push_back(h);
            if (d.half_origin(h) < 0) face.unbounded = true;
            h = d.next[static_cast<std::size_t>(h)];
            if (static_cast<int>(face.boundary.size()) > 2 * E) structural("face walk does not close");
        } while (h != h0);
        d.faces.push_back(std::move(face));
    }

    // independent face identification: sample an interior point, take its k
    // nearest sites
    for (DiagramFace& f : d.faces) {
        bool done = false;
        for (int attempt = 0; attempt < 5 && !done; ++attempt) {
            double gap = 0.0;
            std::vector<int> ids;
            if (d.surface == Surface::sphere) {
                f.sample = face_sample_sphere(d, f.boundary, attempt);
                ids = knn_sphere(d.sites, f.sample, d.k, &gap);
            } else {
                f.psample = face_sample_plane(d, f.boundary, attempt);
                ids = knn_plane(d.psites, f.psample, d.k, &gap);
            }
            if (gap > 1e-12) {
                std::sort(ids.begin(), ids.end());
                f.sites = std::move(ids);
                done = true;
            }
        }
        if (!done) structural("face sample sits on a bisector; cannot identify P_k");
    }

    std::map<std::vector<int>, int> seen;
    for (std::size_t f = 0; f < d.faces.size(); ++f)
        if (!seen.emplace(d.faces[f].sites, static_cast<int>(f)).second)
            structural("two faces share the same k-nearest set");

    const int F = static_cast<int>(d.faces.size());
    const int expected_euler = d.surface == Surface::sphere ? 2 : 1;
    if (V - E + F != expected_euler)
        structural("Euler check failed: V-E+F = " + std::to_string(V - E + F) + ", expected " +
                   std::to_string(expected_euler));
}

} // namespace svor
