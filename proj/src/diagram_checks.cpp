// Rule checks, regions, the cycle double cover and key-level isomorphism.

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "svoronoi/diagram.hpp"
#include "svoronoi/errors.hpp"
#include "svoronoi/sphere_geom.hpp"

namespace svor {

namespace {

// Six label slots around a vertex in rotational order: between consecutive
// edges the walk sees the left side of the edge it just passed and the right
// side of the one it approaches.
std::array<int, 6> label_slots(const Diagram& d, int v) {
    const auto& hs = d.out_halves[static_cast<std::size_t>(v)];
    return {left_label(d, hs[0]), right_label(d, hs[1]), left_label(d, hs[1]),
            right_label(d, hs[2]), left_label(d, hs[2]), right_label(d, hs[0])};
}

bool matches_type_i(const std::array<int, 6>& s) {
    // every label appears exactly twice, adjacently (pattern i,i,j,j,l,l)
    for (int t = 0; t < 6; t += 2)
        if (std::count(s.begin(), s.end(), s[static_cast<std::size_t>(t)]) != 2) return false;
    for (int r = 0; r < 6; ++r) {
        bool ok = true;
        for (int t = 0; t < 6 && ok; t += 2)
            ok = s[static_cast<std::size_t>((r + t) % 6)] == s[static_cast<std::size_t>((r + t + 1) % 6)];
        if (ok) return true;
    }
    return false;
}

bool matches_type_ii(const std::array<int, 6>& s) {
    // pattern i,j,l,i,j,l: period 3, first three distinct
    return s[0] == s[3] && s[1] == s[4] && s[2] == s[5] && s[0] != s[1] && s[1] != s[2] &&
           s[0] != s[2];
}

std::string slots_str(const std::array<int, 6>& s) {
    std::ostringstream os;
    for (int t = 0; t < 6; ++t) os << (t ? "," : "(") << s[static_cast<std::size_t>(t)];
    os << ")";
    return os.str();
}

// Walks the single closed cycle of half-edges carrying label `site` on their
// left. Throws CoverViolation when the label class is not one simple cycle.
std::vector<int> label_cycle(const Diagram& d, int site) {
    std::map<int, int> start_at; // origin vertex -> half
    int count = 0;
    for (int h = 0; h < d.half_count(); ++h) {
        if (left_label(d, h) != site) continue;
        ++count;
        const int o = d.half_origin(h);
        if (o < 0) throw CoverViolation("label cycle through an unbounded edge");
        if (!start_at.emplace(o, h).second)
            throw CoverViolation("two label-" + std::to_string(site) +
                                 " half-edges leave one vertex; class is not a simple cycle");
    }
    if (count == 0) throw CoverViolation("no edges carry label " + std::to_string(site));
    std::vector<int> cycle;
    int h = start_at.begin()->second;
    do {
        cycle.push_back(h);
        const int head = d.half_head(h);
        auto it = start_at.find(head);
        if (it == start_at.end())
            throw CoverViolation("label-" + std::to_string(site) + " cycle breaks at a vertex");
        h = it->second;
        if (static_cast<int>(cycle.size()) > count)
            throw CoverViolation("label-" + std::to_string(site) + " class is not a single cycle");
    } while (h != cycle.front());
    if (static_cast<int>(cycle.size()) != count)
        throw CoverViolation("label-" + std::to_string(site) + " class is not a single cycle");
    return cycle;
}

} // namespace

RuleReport check_vertex_rule(const Diagram& d) {
    RuleReport rep;
    for (std::size_t v = 0; v < d.vertices.size(); ++v) {
        const auto slots = label_slots(d, static_cast<int>(v));
        const bool want_i = d.vertices[v].type == VertexType::type_i;
        const bool ok = want_i ? matches_type_i(slots) : matches_type_ii(slots);
        if (!ok)
            rep.violations.push_back("vertex " + d.vertices[v].key.str() + " type " +
                                     type_name(d.vertices[v].type) + " has slots " +
                                     slots_str(slots));
    }
    return rep;
}

RuleReport check_face_rule(const Diagram& d) {
    RuleReport rep;
    for (std::size_t fid = 0; fid < d.faces.size(); ++fid) {
        const DiagramFace& f = d.faces[fid];
        std::vector<int> b = f.boundary;
        const int m = static_cast<int>(b.size());
        // unbounded faces are open chains; start just after the infinity gap
        bool cyclic = !f.unbounded;
        if (f.unbounded) {
            int start = -1;
            for (int t = 0; t < m; ++t)
                if (d.half_origin(b[static_cast<std::size_t>(t)]) < 0) start = t;
            std::rotate(b.begin(), b.begin() + start, b.end());
        }

        const auto face_tag = [&] {
            std::ostringstream os;
            os << "face {";
            for (std::size_t t = 0; t < f.sites.size(); ++t) os << (t ? "," : "") << f.sites[t];
            os << "}";
            return os.str();
        }();

        // positions of each label along the boundary, with its side
        std::map<int, std::vector<std::pair<int, bool>>> occurrence; // label -> (pos, interior?)
        for (int t = 0; t < m; ++t) {
            const int h = b[static_cast<std::size_t>(t)];
            occurrence[left_label(d, h)].emplace_back(t, true);
            occurrence[right_label(d, h)].emplace_back(t, false);
        }
        for (const auto& [label, occ] : occurrence) {
            bool uniform = true;
            for (const auto& o : occ) uniform = uniform && o.second == occ.front().second;
            if (!uniform) {
                rep.violations.push_back(face_tag + ": label " + std::to_string(label) +
                                         " appears on both sides");
                continue;
            }
            // contiguity along the (cyclic or open) walk
            std::vector<int> pos;
            for (const auto& o : occ) pos.push_back(o.first);
            std::sort(pos.begin(), pos.end());
            int breaks = 0;
            for (std::size_t t = 1; t < pos.size(); ++t)
                if (pos[t] != pos[t - 1] + 1) ++breaks;
            if (cyclic && pos.front() == 0 && pos.back() == m - 1 && pos.size() < static_cast<std::size_t>(m))
                --breaks; // wrap-around run
            if (breaks > 0)
                rep.violations.push_back(face_tag + ": label " + std::to_string(label) +
                                         " occurrences are not consecutive");
            // interior labels are exactly the members of P_k
            const bool interior = occ.front().second;
            const bool member =
                std::binary_search(f.sites.begin(), f.sites.end(), label);
            if (interior != member)
                rep.violations.push_back(face_tag + ": label " + std::to_string(label) +
                                         (interior ? " interior but not in P_k" : " exterior but in P_k"));
        }

        // interior label changes at type II vertices, exterior at type I
        for (int t = 0; t < m; ++t) {
            const int tn = (t + 1) % m;
            if (tn == 0 && !cyclic) break;
            const int h0 = b[static_cast<std::size_t>(t)];
            const int h1 = b[static_cast<std::size_t>(tn)];
            const int v = d.half_origin(h1);
            if (v < 0 || d.half_origin(twin_half(h0)) < 0) continue; // infinity gap
            const bool int_change = left_label(d, h0) != left_label(d, h1);
            const bool ext_change = right_label(d, h0) != right_label(d, h1);
            const bool is_ii = d.vertices[static_cast<std::size_t>(v)].type == VertexType::type_ii;
            if (int_change != is_ii)
                rep.violations.push_back(face_tag + ": interior label " +
                                         std::string(int_change ? "changes" : "persists") +
                                         " at a type " +
                                         type_name(d.vertices[static_cast<std::size_t>(v)].type) +
                                         " vertex");
            if (ext_change == is_ii)
                rep.violations.push_back(face_tag + ": exterior label " +
                                         std::string(ext_change ? "changes" : "persists") +
                                         " at a type " +
                                         type_name(d.vertices[static_cast<std::size_t>(v)].type) +
                                         " vertex");
        }
    }
    return rep;
}

Region region(const Diagram& d, int site) {
    if (d.surface != Surface::sphere) throw Error("regions are defined on spherical diagrams");
    if (site < 0 || site >= d.n) throw Error("region site id out of range");
    Region r;
    r.site = site;
    std::set<int> member_faces;
    for (std::size_t f = 0; f < d.faces.size(); ++f)
        if (std::binary_search(d.faces[f].sites.begin(), d.faces[f].sites.end(), site)) {
            r.faces.push_back(static_cast<int>(f));
            member_faces.insert(static_cast<int>(f));
        }
    if (r.faces.empty())
        throw InternalInconsistency("region of site " + std::to_string(site) + " is empty");

    // the boundary must consist exactly of the edges labeled `site`
    for (std::size_t e = 0; e < d.edges.size(); ++e) {
        const bool labeled_i =
            d.edges[e].i == site || d.edges[e].j == site;
        const bool f0 = member_faces.count(d.face_of[2 * e]) > 0;
        const bool f1 = member_faces.count(d.face_of[2 * e + 1]) > 0;
        if ((f0 != f1) != labeled_i)
            throw InternalInconsistency(
                "edge " + std::to_string(e) + " boundary status disagrees with label " +
                std::to_string(site));
    }

    r.boundary = label_cycle(d, site);

    // site i itself lies in R_k(i): its own k nearest set names a member face
    SiteSet ss(d.sites);
    double gap = 0.0;
    auto ids = k_nearest(ss, d.sites[static_cast<std::size_t>(site)], d.k, &gap);
    if (gap > 1e-12) {
        std::sort(ids.begin(), ids.end());
        bool found = false;
        for (int f : r.faces) found = found || d.faces[static_cast<std::size_t>(f)].sites == ids;
        if (!found)
            throw InternalInconsistency("site " + std::to_string(site) +
                                        " does not lie in its own region");
    }
    return r;
}

CycleCover cycle_double_cover(const Diagram& d) {
    if (d.surface != Surface::sphere)
        throw Error("the cycle double cover is defined on spherical diagrams");
    CycleCover cover;
    cover.cycles.resize(static_cast<std::size_t>(d.n));
    std::vector<int> used(static_cast<std::size_t>(d.half_count()), 0);
    std::size_t total = 0;
    for (int i = 0; i < d.n; ++i) {
        cover.cycles[static_cast<std::size_t>(i)] = label_cycle(d, i);
        for (int h : cover.cycles[static_cast<std::size_t>(i)]) ++used[static_cast<std::size_t>(h)];
        total += cover.cycles[static_cast<std::size_t>(i)].size();
    }
    if (total != static_cast<std::size_t>(d.half_count()))
        throw CoverViolation("cycle lengths do not sum to twice the edge count");
    for (std::size_t e = 0; e < d.edges.size(); ++e)
        if (used[2 * e] != 1 || used[2 * e + 1] != 1)
            throw CoverViolation("edge " + std::to_string(e) +
                                 " is not covered by exactly two opposite cycles");
    return cover;
}

namespace {

VertexKey swap_key(const VertexKey& k, int n) { return {k.triple, n - 3 - k.m, k.sign}; }

using EdgeKey = std::tuple<int, int, int, VertexKey, VertexKey>; // i, j, ray_sign, ends

EdgeKey edge_key(const Diagram& d, const DiagramEdge& e, bool swap) {
    VertexKey a = d.vertices[static_cast<std::size_t>(e.v0)].key;
    VertexKey b = e.v1 >= 0 ? d.vertices[static_cast<std::size_t>(e.v1)].key : VertexKey{{-1, -1, -1}, 0, 0};
    if (swap) {
        a = swap_key(a, d.n);
        if (e.v1 >= 0) b = swap_key(b, d.n);
    }
    if (b < a) std::swap(a, b);
    return {e.i, e.j, e.ray_sign, a, b};
}

std::vector<int> complement_sites(const std::vector<int>& sites, int n) {
    std::vector<int> out;
    std::size_t p = 0;
    for (int i = 0; i < n; ++i) {
        if (p < sites.size() && sites[p] == i)
            ++p;
        else
            out.push_back(i);
    }
    return out;
}

} // namespace

IsoResult isomorphic(const Diagram& d1, const Diagram& d2, bool type_swap) {
    IsoResult res;
    if (d1.n != d2.n) {
        res.mismatch = "site counts differ";
        return res;
    }
    const int want_k = type_swap ? d1.n - d1.k : d1.k;
    if (d2.k != want_k) {
        res.mismatch = "orders are not " + std::string(type_swap ? "complementary" : "equal");
        return res;
    }

    std::set<VertexKey> keys2;
    for (const auto& v : d2.vertices) keys2.insert(v.key);
    for (const auto& v : d1.vertices) {
        const VertexKey mapped = type_swap ? swap_key(v.key, d1.n) : v.key;
        if (!keys2.count(mapped)) {
            res.mismatch = "vertex " + v.key.str() + " has no counterpart " + mapped.str();
            return res;
        }
        res.witness.emplace_back(v.key, mapped);
        if (type_swap) {
            const auto& w = d2.vertices[static_cast<std::size_t>(d2.find_vertex(mapped))];
            if (w.type == v.type) {
                res.mismatch = "vertex " + v.key.str() + " kept its type under the swap";
                return res;
            }
        }
    }
    if (d1.vertices.size() != d2.vertices.size()) {
        res.mismatch = "vertex counts differ";
        return res;
    }

    std::set<EdgeKey> e2;
    for (const auto& e : d2.edges) e2.insert(edge_key(d2, e, false));
    for (const auto& e : d1.edges)
        if (!e2.count(edge_key(d1, e, type_swap))) {
            res.mismatch = "edge {" + std::to_string(e.i) + "," + std::to_string(e.j) +
                           "} has no counterpart";
            return res;
        }
    if (d1.edges.size() != d2.edges.size()) {
        res.mismatch = "edge counts differ";
        return res;
    }

    std::set<std::vector<int>> f2;
    for (const auto& f : d2.faces) f2.insert(f.sites);
    for (const auto& f : d1.faces) {
        const auto key = type_swap ? complement_sites(f.sites, d1.n) : f.sites;
        if (!f2.count(key)) {
            res.mismatch = "a face P_k set has no counterpart";
            return res;
        }
    }
    if (d1.faces.size() != d2.faces.size()) {
        res.mismatch = "face counts differ";
        return res;
    }

    res.isomorphic = true;
    return res;
}

} // namespace svor
