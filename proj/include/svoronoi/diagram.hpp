#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "svoronoi/tolerances.hpp"
#include "svoronoi/vec.hpp"

namespace svor {

enum class Surface { sphere, plane };
enum class VertexType { type_i, type_ii };

/// Combinatorial identity of a diagram vertex: the defining site triple
/// (sorted), the number of sites its circle strictly encloses, and which of
/// the two candidate centers it is. On the sphere the two circumcenters of a
/// triple are antipodal and can both be diagram vertices, so the canonical
/// sign (+1 for normalize((b-a) x (c-a)) with a<b<c) is part of the key;
/// planar vertices always use sign +1.
struct VertexKey {
    std::array<int, 3> triple{};
    int m = 0;
    int sign = +1;
    auto operator<=>(const VertexKey&) const = default;
    std::string str() const;
};

struct DiagramVertex {
    VertexKey key;
    VertexType type = VertexType::type_i;
    Vec3 pos{};  // sphere surface
    Vec2 ppos{}; // plane surface
};

/// One undirected edge on the bisector of sites i < j.
/// Sphere: the counterclockwise arc [theta0, theta1] (theta1 > theta0) in the
/// pair's circle frame. Plane: the segment v0-v1, or for ray_sign != 0 the
/// ray from v0 along ray_sign * bisector_direction(i, j) with v1 == -1.
struct DiagramEdge {
    int i = 0, j = 0;
    int v0 = -1, v1 = -1;
    double theta0 = 0.0, theta1 = 0.0;
    int ray_sign = 0;
};

/// Faces are walked counterclockwise (interior on the left). `sites` is the
/// face's P_k, recovered independently of the labeling by sampling an
/// interior point and querying its k nearest sites. Unbounded planar faces
/// close through infinity between an outgoing and an incoming ray half-edge.
struct DiagramFace {
    std::vector<int> sites;
    std::vector<int> boundary; // half-edge indices in walk order
    bool unbounded = false;
    Vec3 sample{};  // sphere sample point
    Vec2 psample{}; // plane sample point
};

/// Half-edge h of edge e = h/2; even h travels v0 -> v1 (on the sphere that
/// is the ccw arc direction; for planar rays, outward), odd h is the twin.
inline int twin_half(int h) { return h ^ 1; }
inline int half_edge(int h) { return h >> 1; }
inline bool half_forward(int h) { return (h & 1) == 0; }

/// Immutable-after-finalize subdivision of the sphere or the plane.
/// Builders fill sites/vertices/edges and call finalize_diagram(), which
/// derives the half-edge structure, faces and labels, and validates the
/// structural invariants (degree 3, Euler, unique face keys).
struct Diagram {
    Surface surface = Surface::sphere;
    int n = 0;
    int k = 0;
    std::vector<Vec3> sites;   // sphere sites (unit)
    std::vector<Vec2> psites;  // plane sites
    std::vector<DiagramVertex> vertices;
    std::vector<DiagramEdge> edges;
    std::vector<DiagramFace> faces;

    // derived by finalize_diagram
    std::vector<int> next;                    // per half-edge
    std::vector<int> face_of;                 // per half-edge
    std::vector<std::array<int, 3>> out_halves; // per vertex, ccw-sorted
    bool labeled = false;

    std::map<VertexKey, int> vertex_index;

    int half_count() const { return static_cast<int>(edges.size()) * 2; }
    int half_origin(int h) const {
        const DiagramEdge& e = edges[static_cast<std::size_t>(half_edge(h))];
        return half_forward(h) ? e.v0 : e.v1;
    }
    int half_head(int h) const { return half_origin(twin_half(h)); }

    int add_vertex(const VertexKey& key, int m_to_type_k, const Vec3& pos, const Vec2& ppos = {});
    int find_vertex(const VertexKey& key) const; // -1 if absent
};

VertexType type_from_m(int m, int k);
const char* type_name(VertexType t);

/// Circle frame of the bisector of sites i < j: pole = normalize(s_i - s_j),
/// with (f1, f2, pole) right-handed. Points on the bisector great circle are
/// cos(theta) f1 + sin(theta) f2; the +pole half-sphere contains site i.
struct ArcFrame {
    Vec3 pole, f1, f2;
};
ArcFrame pair_frame(const Vec3& site_i, const Vec3& site_j);
Vec3 arc_point(const ArcFrame& f, double theta);
Vec3 arc_tangent(const ArcFrame& f, double theta); // unit d/dtheta
double arc_angle(const ArcFrame& f, const Vec3& p);

/// Point at fraction t (0..1) along an edge. Sphere edges interpolate the
/// arc; planar rays use origin + t * direction.
Vec3 sphere_edge_point(const Diagram& d, int e, double t);
Vec2 planar_edge_point(const Diagram& d, int e, double t);

/// Travel direction of a half-edge at its origin (sphere: unit tangent).
Vec3 sphere_half_tangent(const Diagram& d, int h);
Vec2 planar_half_tangent(const Diagram& d, int h);

/// Derives the half-edge structure, labels, faces and face keys; validates
/// degree 3, Euler count and face-key uniqueness. Throws
/// InternalInconsistency on any structural defect.
void finalize_diagram(Diagram& d, const Tolerances& tol = Tolerances{});

/// Label-side assignment per the edge rule: the label of site i lies on the
/// half-sphere (half-plane) of the bisector that contains site i. Geometry
/// makes the assignment forced; this validates it and marks the diagram
/// labeled. Idempotent. Throws SideAmbiguity when a pair's sites coincide
/// within tolerance.
void assign_labels(Diagram& d, const Tolerances& tol = Tolerances{});

/// Site whose label lies on the left of half-edge h (the face side of h).
int left_label(const Diagram& d, int h);
/// Convenience: the other label of the pair.
int right_label(const Diagram& d, int h);

struct RuleReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Vertex rule: around a vertex, the six label slots read i,i,j,j,l,l for
/// type I and i,j,l,i,j,l for type II (cyclically).
RuleReport check_vertex_rule(const Diagram& d);

/// Face rule: on each face boundary, equal labels are consecutive and
/// uniformly interior or exterior; interior labels agree with P_k membership;
/// the interior (exterior) label changes exactly at type II (type I)
/// vertices. Unbounded planar faces are checked as open chains.
RuleReport check_face_rule(const Diagram& d);

/// All faces having site i among their k nearest, with the boundary cycle of
/// edges labeled i, oriented with the region interior (site i's side) on the
/// left.
struct Region {
    int site = -1;
    std::vector<int> faces;
    std::vector<int> boundary; // half-edges, cyclic walk order
};
Region region(const Diagram& d, int site);

/// One oriented cycle per site: cycle i consists of the edges labeled i,
/// oriented with site i's side on the left. Every edge is covered exactly
/// twice, by the cycles of its two labels, in opposite directions. Throws
/// CoverViolation if a label class is not a single closed cycle.
struct CycleCover {
    std::vector<std::vector<int>> cycles; // per site, half-edge indices
};
CycleCover cycle_double_cover(const Diagram& d);

/// Combinatorial isomorphism by keys. Without type_swap, vertex keys, edge
/// keys and face P_k sets must match exactly (same k). With type_swap
/// (d2 of order n-k), vertex keys match under m -> n-3-m, faces under set
/// complement, and every matched vertex swaps type.
struct IsoResult {
    bool isomorphic = false;
    std::string mismatch;
    std::vector<std::pair<VertexKey, VertexKey>> witness;
};
IsoResult isomorphic(const Diagram& d1, const Diagram& d2, bool type_swap);

} // namespace svor
