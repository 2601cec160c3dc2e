#include "svoronoi/render.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

#include "svoronoi/errors.hpp"
#include "svoronoi/sphere_geom.hpp"

namespace svor {

namespace {

constexpr double kPi = 3.14159265358979323846;

// A projection pole clear of every vertex and site keeps the panels readable.
Vec3 pick_projection_pole(const Diagram& d) {
    std::vector<Vec3> candidates;
    for (int a = -1; a <= 1; a += 2)
        for (int b = -1; b <= 1; b += 2)
            for (int c = -1; c <= 1; c += 2)
                candidates.push_back(normalized(Vec3{1.0 * a, 1.0 * b, 1.0 * c}));
    candidates.push_back({1, 0, 0});
    candidates.push_back({0, 1, 0});
    candidates.push_back({0, 0, 1});
    for (int t = 0; t < 24; ++t) {
        const double phi = 0.7548776662 * t * 2.0 * kPi; // low-discrepancy sweep
        const double z = -1.0 + 2.0 * (t + 0.5) / 24.0;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        candidates.push_back({r * std::cos(phi), r * std::sin(phi), z});
    }
    Vec3 best = candidates.front();
    double best_min = -1.0;
    for (const Vec3& c : candidates) {
        double mind = 4.0;
        for (const auto& v : d.vertices)
            mind = std::min({mind, spherical_distance(c, v.pos),
                             spherical_distance(-c, v.pos)});
        for (const auto& s : d.sites)
            mind = std::min({mind, spherical_distance(c, s), spherical_distance(-c, s)});
        if (mind > best_min) {
            best_min = mind;
            best = c;
        }
    }
    return best;
}

struct Panel {
    Vec3 center; // hemisphere this panel shows
    Vec3 e1, e2; // projection frame (pole = -center)
    double x0;   // left edge in the svg canvas
};

// Stereographic projection from the pole opposite the panel center.
Vec2 project(const Panel& p, const Vec3& q) {
    const Vec3 pole = -p.center;
    const double denom = 1.0 - dot(q, pole);
    return {dot(q, p.e1) / denom, dot(q, p.e2) / denom};
}

bool in_panel(const Panel& p, const Vec3& q) { return dot(q, p.center) > -0.2; }

constexpr double kPanelSize = 460.0;
constexpr double kScale = kPanelSize / 2.6; // projected radius ~1.25 at the cap

Vec2 to_canvas(const Panel& p, const Vec2& xy) {
    return {p.x0 + kPanelSize / 2 + kScale * xy.u, kPanelSize / 2 - kScale * xy.v};
}

std::vector<Vec3> sample_arc(const Diagram& d, int e, double step_rad) {
    const auto& ed = d.edges[static_cast<std::size_t>(e)];
    const int segs = std::max(2, static_cast<int>(std::ceil((ed.theta1 - ed.theta0) / step_rad)));
    std::vector<Vec3> pts;
    pts.reserve(static_cast<std::size_t>(segs + 1));
    for (int t = 0; t <= segs; ++t)
        pts.push_back(sphere_edge_point(d, e, static_cast<double>(t) / segs));
    return pts;
}

void polyline_path(std::ostringstream& svg, const Panel& panel, const std::vector<Vec3>& pts,
                   const std::string& style) {
    std::ostringstream path;
    bool pen_down = false;
    bool any = false;
    for (std::size_t t = 0; t + 1 < pts.size(); ++t) {
        if (in_panel(panel, pts[t]) && in_panel(panel, pts[t + 1])) {
            const Vec2 a = to_canvas(panel, project(panel, pts[t]));
            const Vec2 b = to_canvas(panel, project(panel, pts[t + 1]));
            if (!pen_down) path << "M " << a.u << " " << a.v << " ";
            path << "L " << b.u << " " << b.v << " ";
            pen_down = true;
            any = true;
        } else {
            pen_down = false;
        }
    }
    if (any) svg << "  <path d=\"" << path.str() << "\" " << style << "/>\n";
}

void render_sphere_svg(const Diagram& d, std::ostream& out, const SvgOptions& opts) {
    const Vec3 pole = pick_projection_pole(d);
    const auto [e1, e2] = tangent_frame(pole);
    std::array<Panel, 2> panels{Panel{-pole, e1, e2, 0.0},
                                Panel{pole, e1, e2, kPanelSize + 20.0}};
    // the back panel projects from -pole, so its frame flips one axis
    panels[1].e1 = -e1;

    std::ostringstream svg;
    svg << std::setprecision(6);
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * kPanelSize + 20
        << "\" height=\"" << kPanelSize << "\" viewBox=\"0 0 " << 2 * kPanelSize + 20 << " "
        << kPanelSize << "\">\n";

    Region highlight;
    std::vector<bool> region_edge(d.edges.size(), false);
    std::vector<bool> region_face(d.faces.size(), false);
    if (opts.highlight_region >= 0) {
        highlight = region(d, opts.highlight_region);
        for (int h : highlight.boundary) region_edge[static_cast<std::size_t>(half_edge(h))] = true;
        for (int f : highlight.faces) region_face[static_cast<std::size_t>(f)] = true;
    }

    const double step = kPi / 180.0; // 1 degree keeps chord error below half
    for (const Panel& panel : panels) {
        svg << " <g>\n";
        svg << "  <rect x=\"" << panel.x0 << "\" y=\"0\" width=\"" << kPanelSize << "\" height=\""
            << kPanelSize << "\" fill=\"white\" stroke=\"none\"/>\n";
        svg << "  <circle cx=\"" << panel.x0 + kPanelSize / 2 << "\" cy=\"" << kPanelSize / 2
            << "\" r=\"" << kScale * 1.0 << "\" fill=\"#fcfcf7\" stroke=\"#cccccc\"/>\n";

        // shaded region faces (only faces fully inside the panel)
        if (opts.highlight_region >= 0) {
            for (int fidx : highlight.faces) {
                const auto& f = d.faces[static_cast<std::size_t>(fidx)];
                std::ostringstream poly;
                bool whole = true;
                for (int h : f.boundary) {
                    auto pts = sample_arc(d, half_edge(h), step * 4);
                    if (!half_forward(h)) std::reverse(pts.begin(), pts.end());
                    for (const Vec3& q : pts) {
                        if (!in_panel(panel, q)) {
                            whole = false;
                            break;
                        }
                        const Vec2 c = to_canvas(panel, project(panel, q));
                        poly << c.u << "," << c.v << " ";
                    }
                    if (!whole) break;
                }
                if (whole)
                    svg << "  <polygon points=\"" << poly.str()
                        << "\" fill=\"#fff3b0\" stroke=\"none\"/>\n";
            }
        }

        for (std::size_t e = 0; e < d.edges.size(); ++e) {
            const bool on_boundary = region_edge[e];
            const std::string style = on_boundary
                                          ? "stroke=\"#d4a017\" stroke-width=\"2.4\" fill=\"none\""
                                          : "stroke=\"#555555\" stroke-width=\"1\" fill=\"none\"";
            polyline_path(svg, panel, sample_arc(d, static_cast<int>(e), step), style);
        }

        for (const auto& v : d.vertices) {
            if (!in_panel(panel, v.pos)) continue;
            const Vec2 c = to_canvas(panel, project(panel, v.pos));
            if (v.type == VertexType::type_i)
                svg << "  <circle cx=\"" << c.u << "\" cy=\"" << c.v
                    << "\" r=\"3\" fill=\"#1f6fd4\" stroke=\"none\"/>\n";
            else
                svg << "  <circle cx=\"" << c.u << "\" cy=\"" << c.v
                    << "\" r=\"3\" fill=\"white\" stroke=\"#d43a2f\" stroke-width=\"1.6\"/>\n";
        }
        for (std::size_t s = 0; s < d.sites.size(); ++s) {
            if (!in_panel(panel, d.sites[s])) continue;
            const Vec2 c = to_canvas(panel, project(panel, d.sites[s]));
            svg << "  <circle cx=\"" << c.u << "\" cy=\"" << c.v
                << "\" r=\"2.4\" fill=\"#2e8b57\" stroke=\"none\"/>\n";
            svg << "  <text x=\"" << c.u + 4 << "\" y=\"" << c.v - 4
                << "\" font-size=\"10\" fill=\"#2e8b57\">" << s << "</text>\n";
        }
        svg << " </g>\n";
    }
    svg << "</svg>\n";
    out << svg.str();
}

void render_plane_svg(const Diagram& d, std::ostream& out, const SvgOptions&) {
    double lo_u = 1e300, hi_u = -1e300, lo_v = 1e300, hi_v = -1e300;
    const auto grow = [&](const Vec2& p) {
        lo_u = std::min(lo_u, p.u);
        hi_u = std::max(hi_u, p.u);
        lo_v = std::min(lo_v, p.v);
        hi_v = std::max(hi_v, p.v);
    };
    for (const auto& s : d.psites) grow(s);
    for (const auto& v : d.vertices) grow(v.ppos);
    const double span = std::max({hi_u - lo_u, hi_v - lo_v, 1e-6});
    const double pad = 0.35 * span;
    lo_u -= pad, hi_u += pad, lo_v -= pad, hi_v += pad;
    const double size = 640.0;
    const double scale = size / std::max(hi_u - lo_u, hi_v - lo_v);
    const auto cv = [&](const Vec2& p) {
        return Vec2{(p.u - lo_u) * scale, size - (p.v - lo_v) * scale};
    };
    const double ray_len = 3.0 * span;

    std::ostringstream svg;
    svg << std::setprecision(6);
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
        << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
    svg << " <rect width=\"" << size << "\" height=\"" << size << "\" fill=\"white\"/>\n";
    for (std::size_t e = 0; e < d.edges.size(); ++e) {
        const auto& ed = d.edges[e];
        const Vec2 a = d.vertices[static_cast<std::size_t>(ed.v0)].ppos;
        const Vec2 b = ed.ray_sign == 0 ? d.vertices[static_cast<std::size_t>(ed.v1)].ppos
                                        : planar_edge_point(d, static_cast<int>(e), ray_len);
        const Vec2 ca = cv(a), cb = cv(b);
        svg << " <line x1=\"" << ca.u << "\" y1=\"" << ca.v << "\" x2=\"" << cb.u << "\" y2=\""
            << cb.v << "\" stroke=\"#555555\" stroke-width=\"1\"/>\n";
    }
    for (const auto& v : d.vertices) {
        const Vec2 c = cv(v.ppos);
        if (v.type == VertexType::type_i)
            svg << " <circle cx=\"" << c.u << "\" cy=\"" << c.v
                << "\" r=\"3\" fill=\"#1f6fd4\"/>\n";
        else
            svg << " <circle cx=\"" << c.u << "\" cy=\"" << c.v
                << "\" r=\"3\" fill=\"white\" stroke=\"#d43a2f\" stroke-width=\"1.6\"/>\n";
    }
    for (std::size_t s = 0; s < d.psites.size(); ++s) {
        const Vec2 c = cv(d.psites[s]);
        svg << " <circle cx=\"" << c.u << "\" cy=\"" << c.v << "\" r=\"2.4\" fill=\"#2e8b57\"/>\n";
        svg << " <text x=\"" << c.u + 4 << "\" y=\"" << c.v - 4
            << "\" font-size=\"10\" fill=\"#2e8b57\">" << s << "</text>\n";
    }
    svg << "</svg>\n";
    out << svg.str();
}

} // namespace

void export_svg(const Diagram& d, const std::string& path, const SvgOptions& opts) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    if (d.surface == Surface::sphere)
        render_sphere_svg(d, out, opts);
    else
        render_plane_svg(d, out, opts);
}

void export_obj(const Diagram& d, const std::string& path) {
    if (d.surface != Surface::sphere) throw Error("OBJ export is for spherical diagrams");
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << std::setprecision(9);
    out << "# order-" << d.k << " spherical Voronoi diagram, " << d.n << " sites\n";
    out << "o sphere\n";

    // UV sphere slightly below the unit surface so the edge polylines stay
    // visible
    const int nu = 36, nv = 18;
    const double r = 0.992;
    int vcount = 0;
    for (int iv = 0; iv <= nv; ++iv) {
        const double th = kPi * iv / nv;
        for (int iu = 0; iu < nu; ++iu) {
            const double ph = 2.0 * kPi * iu / nu;
            out << "v " << r * std::sin(th) * std::cos(ph) << " " << r * std::sin(th) * std::sin(ph)
                << " " << r * std::cos(th) << "\n";
            ++vcount;
        }
    }
    const auto vid = [&](int iv, int iu) { return 1 + iv * nu + (iu % nu); };
    for (int iv = 0; iv < nv; ++iv)
        for (int iu = 0; iu < nu; ++iu) {
            out << "f " << vid(iv, iu) << " " << vid(iv + 1, iu) << " " << vid(iv + 1, iu + 1)
                << "\n";
            out << "f " << vid(iv, iu) << " " << vid(iv + 1, iu + 1) << " " << vid(iv, iu + 1)
                << "\n";
        }

    out << "o edges\n";
    int base = vcount;
    for (std::size_t e = 0; e < d.edges.size(); ++e) {
        const auto& ed = d.edges[e];
        const int segs =
            std::max(2, static_cast<int>(std::ceil((ed.theta1 - ed.theta0) / (kPi / 90))));
        out << "# edge " << ed.i << "-" << ed.j << "\n";
        for (int t = 0; t <= segs; ++t) {
            const Vec3 p =
                sphere_edge_point(d, static_cast<int>(e), static_cast<double>(t) / segs);
            out << "v " << p.x << " " << p.y << " " << p.z << "\n";
        }
        out << "l";
        for (int t = 0; t <= segs; ++t) out << " " << base + 1 + t;
        out << "\n";
        base += segs + 1;
    }
}

} // namespace svor
