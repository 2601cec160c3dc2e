#include "svoronoi/construct_inversion.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "svoronoi/construct_direct.hpp"
#include "svoronoi/errors.hpp"

namespace svor {

namespace {

constexpr double kTwoPi = 2.0 * 3.14159265358979323846;

double wrap_positive(double a) {
    while (a < 0.0) a += kTwoPi;
    while (a >= kTwoPi) a -= kTwoPi;
    return a;
}

// Whether the circle centered at v through `through` strictly encloses p;
// throws if p sits on the circle within tolerance.
bool circle_encloses(const Vec3& v, const Vec3& through, const Vec3& p, const Tolerances& tol) {
    const double margin = dot(v, p) - dot(v, through);
    if (std::fabs(margin) <= tol.pred)
        throw PredicateDegeneracy("inversion center on a defining circle");
    return margin > 0.0;
}

struct MappedVertex {
    VertexKey key;
    Vec3 pos;
};

} // namespace

InversionBuild build_via_inversion(const SiteSet& sites, int k, const Vec3& center, double radius,
                                   const Tolerances& tol, bool paranoid) {
    const int n = sites.size();
    if (n < 3) throw OrderOutOfRange("need at least 3 sites");
    if (k < 1 || k > n - 1)
        throw OrderOutOfRange("order k=" + std::to_string(k) + " outside 1.." +
                              std::to_string(n - 1));
    const Vec3 c_unit = normalized(center);
    for (int i = 0; i < n; ++i)
        if (spherical_distance(c_unit, sites[i]) <= 10.0 * tol.sep)
            throw CenterCollision("inversion center coincides with site " + std::to_string(i));
    {
        const auto report = validate_general_position(sites, c_unit, tol);
        if (!report.ok()) {
            std::ostringstream os;
            os << "sites plus center: " << report.violations.front().describe();
            throw GeneralPositionViolation(os.str());
        }
    }

    InversionBuild out;
    out.center = c_unit;
    out.radius = radius;
    const Inversion inv(c_unit, radius, tol);
    const PlanarSiteSet planar(sites, inv, tol);
    out.vk = build_planar(planar, k, tol, paranoid);
    out.vnk = build_planar(planar, n - k, tol, paranoid);

    Diagram& d = out.diagram;
    d.surface = Surface::sphere;
    d.n = n;
    d.k = k;
    d.sites = sites.points();

    // Cases 1 and 2: planar vertices map to the spherical circumcenter of the
    // same triple whose enclosure matches (same count for the V_k side,
    // complemented for the V_{n-k} side) and whose circle excludes (V_k) or
    // encloses (V_{n-k}) the inversion center.
    const auto map_vertex = [&](const VertexKey& pk, bool from_vnk) -> MappedVertex {
        const auto& tri = pk.triple;
        const auto centers =
            circumcenters(sites[tri[0]], sites[tri[1]], sites[tri[2]], tol);
        const int m_target = from_vnk ? n - 3 - pk.m : pk.m;
        MappedVertex picked;
        int hits = 0;
        const int ex[3] = {tri[0], tri[1], tri[2]};
        int sign = +1;
        for (const Vec3& cand : {centers.first, centers.second}) {
            const int m = enclosure_count(cand, sites[tri[0]], sites, std::span(ex, 3), tol);
            const bool center_in = circle_encloses(cand, sites[tri[0]], c_unit, tol);
            if (m == m_target && center_in == from_vnk) {
                picked = {{tri, m, sign}, cand};
                ++hits;
            }
            sign = -1;
        }
        if (hits != 1)
            throw InternalInconsistency("planar vertex " + pk.str() + " maps to " +
                                        std::to_string(hits) + " spherical candidates");
        return picked;
    };

    std::vector<int> vk_to_sphere(out.vk.vertices.size(), -1);
    std::vector<int> vnk_to_sphere(out.vnk.vertices.size(), -1);
    for (std::size_t t = 0; t < out.vk.vertices.size(); ++t) {
        const auto mv = map_vertex(out.vk.vertices[t].key, false);
        vk_to_sphere[t] = d.add_vertex(mv.key, k, mv.pos);
        out.vertex_source.push_back({SphereSource::from_vk, out.vk.vertices[t].key});
    }
    for (std::size_t t = 0; t < out.vnk.vertices.size(); ++t) {
        const auto mv = map_vertex(out.vnk.vertices[t].key, true);
        vnk_to_sphere[t] = d.add_vertex(mv.key, k, mv.pos);
        out.vertex_source.push_back({SphereSource::from_vnk, out.vnk.vertices[t].key});
    }

    // A point on the spherical edge that corresponds to a planar edge point:
    // recover the spherical circle of the planar disk through sites i and j
    // centered at `pm`, then take the cap center on the requested side of the
    // inversion center.
    const auto edge_witness = [&](const Diagram& pd, int i, int j, const Vec2& pm,
                                  bool want_center_inside) {
        const Vec2 si = pd.psites[static_cast<std::size_t>(i)];
        const Vec2 third = pm + perp(si - pm); // another point on the planar circle
        const Vec3 q3 = inv.to_sphere(third);
        const Vec3 axis = cross(sites[j] - sites[i], q3 - sites[i]);
        if (norm(axis) < tol.deg)
            throw InternalInconsistency("degenerate witness circle on a glued edge");
        Vec3 v = normalized(axis);
        if (circle_encloses(v, sites[i], c_unit, tol) != want_center_inside) v = -v;
        return v;
    };

    // Arc between two mapped endpoints chosen to contain the witness angles.
    const auto make_arc = [&](DiagramEdge& e, const ArcFrame& frame,
                              const std::vector<Vec3>& witnesses) {
        const Vec3 pa = d.vertices[static_cast<std::size_t>(e.v0)].pos;
        const Vec3 pb = d.vertices[static_cast<std::size_t>(e.v1)].pos;
        const double ta = arc_angle(frame, pa);
        const double tb = arc_angle(frame, pb);
        const double span_ab = wrap_positive(tb - ta);
        bool forward = true;
        for (const Vec3& w : witnesses) {
            const double tw = wrap_positive(arc_angle(frame, w) - ta);
            const bool inside_ab = tw > 0.0 && tw < span_ab;
            if (&w == &witnesses.front())
                forward = inside_ab;
            else if (forward != inside_ab)
                throw InternalInconsistency("edge witnesses land on different arcs");
        }
        if (forward) {
            e.theta0 = ta;
            e.theta1 = ta + span_ab;
        } else {
            std::swap(e.v0, e.v1);
            e.theta0 = tb;
            e.theta1 = tb + (kTwoPi - span_ab);
        }
    };

    const auto check_edge_count = [&](const DiagramEdge& e) {
        const ArcFrame frame = pair_frame(sites[e.i], sites[e.j]);
        const Vec3 mid = arc_point(frame, 0.5 * (e.theta0 + e.theta1));
        const int ex[2] = {e.i, e.j};
        if (enclosure_count(mid, sites[e.i], sites, std::span(ex, 2), tol) != k - 1)
            throw InternalInconsistency("mapped edge midpoint does not enclose k-1 sites");
    };

    // bounded edges of both planar diagrams
    const auto map_bounded = [&](const Diagram& pd, const std::vector<int>& vmap,
                                 bool from_vnk) {
        for (std::size_t pe = 0; pe < pd.edges.size(); ++pe) {
            const DiagramEdge& src = pd.edges[pe];
            if (src.ray_sign != 0) continue;
            DiagramEdge e;
            e.i = src.i;
            e.j = src.j;
            e.v0 = vmap[static_cast<std::size_t>(src.v0)];
            e.v1 = vmap[static_cast<std::size_t>(src.v1)];
            const ArcFrame frame = pair_frame(sites[e.i], sites[e.j]);
            const Vec3 w = edge_witness(pd, e.i, e.j,
                                        planar_edge_point(pd, static_cast<int>(pe), 0.5),
                                        from_vnk);
            make_arc(e, frame, {w});
            check_edge_count(e);
            d.edges.push_back(e);
            out.edge_source.push_back(from_vnk ? SphereSource::from_vnk : SphereSource::from_vk);
        }
    };
    map_bounded(out.vk, vk_to_sphere, false);
    map_bounded(out.vnk, vnk_to_sphere, true);

    // Case 3: rays keyed (pair, direction sign); the V_k ray glues to the
    // V_{n-k} ray of the opposite sign
    std::map<std::array<int, 3>, int> vnk_rays; // {i, j, sign} -> edge index
    for (std::size_t pe = 0; pe < out.vnk.edges.size(); ++pe) {
        const DiagramEdge& e = out.vnk.edges[pe];
        if (e.ray_sign != 0)
            vnk_rays.emplace(std::array<int, 3>{e.i, e.j, e.ray_sign}, static_cast<int>(pe));
    }
    int vk_ray_count = 0;
    for (std::size_t pe = 0; pe < out.vk.edges.size(); ++pe) {
        const DiagramEdge& src = out.vk.edges[pe];
        if (src.ray_sign == 0) continue;
        ++vk_ray_count;
        const auto it = vnk_rays.find({src.i, src.j, -src.ray_sign});
        if (it == vnk_rays.end())
            throw GlueMismatch("V_k ray on bisector {" + std::to_string(src.i) + "," +
                               std::to_string(src.j) + "} has no opposite V_{n-k} ray");
        const int partner = it->second;
        vnk_rays.erase(it);

        DiagramEdge e;
        e.i = src.i;
        e.j = src.j;
        e.v0 = vk_to_sphere[static_cast<std::size_t>(src.v0)];
        e.v1 = vnk_to_sphere[static_cast<std::size_t>(
            out.vnk.edges[static_cast<std::size_t>(partner)].v0)];
        const ArcFrame frame = pair_frame(sites[e.i], sites[e.j]);
        const Vec3 w1 = edge_witness(out.vk, e.i, e.j,
                                     planar_edge_point(out.vk, static_cast<int>(pe), 1.0), false);
        const Vec3 w2 = edge_witness(out.vnk, e.i, e.j,
                                     planar_edge_point(out.vnk, partner, 1.0), true);
        make_arc(e, frame, {w1, w2});
        check_edge_count(e);
        out.glue.push_back({e.i, e.j, static_cast<int>(pe), partner,
                            static_cast<int>(d.edges.size())});
        d.edges.push_back(e);
        out.edge_source.push_back(SphereSource::glue);
    }
    if (!vnk_rays.empty())
        throw GlueMismatch(std::to_string(vnk_rays.size()) +
                           " V_{n-k} rays left unmatched after gluing");
    (void)vk_ray_count;

    finalize_diagram(d, tol);
    return out;
}

PartitionReport region_partition_check(const SiteSet& sites, int k, const Vec3& center,
                                       double radius, const Tolerances& tol) {
    PartitionReport rep;
    const InversionBuild built = build_via_inversion(sites, k, center, radius, tol);
    const Diagram& d = built.diagram;
    const int n = sites.size();
    const Vec3 c_unit = normalized(center);

    for (const auto& e : built.vk.edges) rep.rays_vk += e.ray_sign != 0 ? 1 : 0;
    for (const auto& e : built.vnk.edges) rep.rays_vnk += e.ray_sign != 0 ? 1 : 0;

    // the augmented diagram and the region of the center (id n)
    std::vector<Vec3> pts = sites.points();
    pts.push_back(c_unit);
    const SiteSet augmented(pts, tol);
    const Diagram daug = build_direct(augmented, k, tol);
    const Region reg = region(daug, n);
    if (k == 1 && reg.faces.size() != 1)
        rep.issues.push_back("order-1 region of the center spans " +
                             std::to_string(reg.faces.size()) + " faces, expected 1");

    // vertices of SV_k(U) split by whether their circle encloses the center,
    // which must agree with the planar provenance
    for (std::size_t v = 0; v < d.vertices.size(); ++v) {
        const auto& vert = d.vertices[v];
        const bool inside =
            circle_encloses(vert.pos, sites[vert.key.triple[0]], c_unit, tol);
        const bool from_vnk = built.vertex_source[v].source == SphereSource::from_vnk;
        if (inside != from_vnk)
            rep.issues.push_back("vertex " + vert.key.str() + " is " +
                                 (inside ? "inside" : "outside") +
                                 " the center region but came from the " +
                                 (from_vnk ? "V_{n-k}" : "V_k") + " side");
    }

    // edges crossed by the region boundary: type I vertices of the augmented
    // diagram whose triple contains the center id, located on the bisector
    // arc of the remaining pair
    std::vector<bool> crossed(d.edges.size(), false);
    for (const auto& w : daug.vertices) {
        if (w.type != VertexType::type_i) continue;
        const auto& tri = w.key.triple;
        if (tri[2] != n) continue; // center id is the largest
        const int i = tri[0], j = tri[1];
        const ArcFrame frame = pair_frame(sites[i], sites[j]);
        const double tw = arc_angle(frame, w.pos);
        int hit = -1;
        for (std::size_t e = 0; e < d.edges.size(); ++e) {
            const auto& ed = d.edges[e];
            if (ed.i != i || ed.j != j) continue;
            const double off = wrap_positive(tw - ed.theta0);
            if (off > 0.0 && off < ed.theta1 - ed.theta0) {
                hit = static_cast<int>(e);
                break;
            }
        }
        if (hit < 0) {
            rep.issues.push_back("boundary crossing " + w.key.str() +
                                 " lies on no edge of SV_k(U)");
            continue;
        }
        if (crossed[static_cast<std::size_t>(hit)])
            rep.issues.push_back("edge crossed twice by the region boundary");
        crossed[static_cast<std::size_t>(hit)] = true;
        ++rep.crossed_edges;
        if (built.edge_source[static_cast<std::size_t>(hit)] != SphereSource::glue)
            rep.issues.push_back("crossed edge is not a glued edge");
    }
    for (const auto& g : built.glue)
        if (!crossed[static_cast<std::size_t>(g.sphere_edge)])
            rep.issues.push_back("glued edge not crossed by the region boundary");

    if (rep.rays_vk != rep.rays_vnk || rep.rays_vk != rep.crossed_edges)
        rep.issues.push_back("ray/crossing counts disagree: " + std::to_string(rep.rays_vk) +
                             "/" + std::to_string(rep.rays_vnk) + "/" +
                             std::to_string(rep.crossed_edges));

    // every type-I crossing vertex of the augmented diagram is on the region
    // boundary cycle
    {
        std::set<int> boundary_vertices;
        for (int h : reg.boundary) boundary_vertices.insert(daug.half_origin(h));
        for (const auto& w : daug.vertices) {
            if (w.type != VertexType::type_i || w.key.triple[2] != n) continue;
            if (!boundary_vertices.count(daug.find_vertex(w.key)))
                rep.issues.push_back("crossing vertex " + w.key.str() +
                                     " missing from the region boundary");
        }
    }

    rep.pass = rep.issues.empty();
    return rep;
}

} // namespace svor
