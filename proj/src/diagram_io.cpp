#include "svoronoi/diagram_io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include "svoronoi/errors.hpp"

namespace svor {

using nlohmann::json;

std::vector<Vec3> load_points_text(const std::string& path, std::ostream* warnings,
                                   const Tolerances& tol) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::vector<Vec3> pts;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream is(line);
        Vec3 p;
        if (!(is >> p.x >> p.y >> p.z))
            throw IoError(path + ":" + std::to_string(lineno) + ": expected `x y z`");
        const double n = norm(p);
        if (n < 1e-12) throw IoError(path + ":" + std::to_string(lineno) + ": zero vector");
        if (std::fabs(n - 1.0) > tol.norm && warnings)
            *warnings << "warning: " << path << ":" << lineno << " renormalized (|p| = " << n
                      << ")\n";
        pts.push_back(p * (1.0 / n));
    }
    if (pts.empty()) throw IoError(path + ": no points");
    return pts;
}

void save_points_text(const std::string& path, const std::vector<Vec3>& pts) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << std::setprecision(17);
    out << "# " << pts.size() << " unit-sphere sites\n";
    for (const Vec3& p : pts) out << p.x << " " << p.y << " " << p.z << "\n";
}

namespace {

json vec_to_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }
json vec_to_json(const Vec2& v) { return json::array({v.u, v.v}); }

} // namespace

json diagram_to_json(const Diagram& d) {
    json j;
    j["surface"] = d.surface == Surface::sphere ? "sphere" : "plane";
    j["n"] = d.n;
    j["k"] = d.k;
    json sites = json::array();
    if (d.surface == Surface::sphere)
        for (const auto& s : d.sites) sites.push_back(vec_to_json(s));
    else
        for (const auto& s : d.psites) sites.push_back(vec_to_json(s));
    j["sites"] = std::move(sites);

    json verts = json::array();
    for (const auto& v : d.vertices) {
        json jv;
        jv["triple"] = v.key.triple;
        jv["m"] = v.key.m;
        jv["sign"] = v.key.sign;
        jv["type"] = type_name(v.type);
        jv["position"] =
            d.surface == Surface::sphere ? vec_to_json(v.pos) : vec_to_json(v.ppos);
        verts.push_back(std::move(jv));
    }
    j["vertices"] = std::move(verts);

    json edges = json::array();
    for (const auto& e : d.edges) {
        json je;
        je["pair"] = json::array({e.i, e.j});
        je["ends"] = json::array({e.v0, e.v1});
        if (d.surface == Surface::sphere)
            je["arc"] = json::array({e.theta0, e.theta1});
        else if (e.ray_sign != 0)
            je["ray_sign"] = e.ray_sign;
        // labels restate the edge rule: each label sits on the side holding
        // its own site
        je["labels"] = json::array({json{{"site", e.i}, {"side", "own"}},
                                    json{{"site", e.j}, {"side", "own"}}});
        edges.push_back(std::move(je));
    }
    j["edges"] = std::move(edges);

    json faces = json::array();
    for (const auto& f : d.faces) {
        json jf;
        jf["sites"] = f.sites;
        json boundary = json::array();
        for (int h : f.boundary) {
            if (d.half_origin(h) < 0) boundary.push_back("infinity");
            boundary.push_back(json{{"edge", half_edge(h)}, {"forward", half_forward(h)}});
        }
        jf["boundary"] = std::move(boundary);
        faces.push_back(std::move(jf));
    }
    j["faces"] = std::move(faces);
    return j;
}

json inversion_to_json(const InversionBuild& b) {
    json j = diagram_to_json(b.diagram);
    json inv;
    inv["center"] = vec_to_json(b.center);
    inv["radius"] = b.radius;
    const auto source_name = [](SphereSource s) {
        switch (s) {
            case SphereSource::from_vk: return "Vk";
            case SphereSource::from_vnk: return "Vnk";
            default: return "glue";
        }
    };
    json vs = json::array();
    for (std::size_t v = 0; v < b.vertex_source.size(); ++v) {
        const auto& src = b.vertex_source[v];
        vs.push_back(json{{"vertex", v},
                          {"source", source_name(src.source)},
                          {"planar_triple", src.planar_key.triple},
                          {"planar_m", src.planar_key.m}});
    }
    inv["vertex_sources"] = std::move(vs);
    json es = json::array();
    for (std::size_t e = 0; e < b.edge_source.size(); ++e)
        es.push_back(json{{"edge", e}, {"source", source_name(b.edge_source[e])}});
    inv["edge_sources"] = std::move(es);
    json glue = json::array();
    for (const auto& g : b.glue)
        glue.push_back(json{{"pair", json::array({g.i, g.j})},
                            {"vk_edge", g.vk_edge},
                            {"vnk_edge", g.vnk_edge},
                            {"sphere_edge", g.sphere_edge}});
    inv["glue"] = std::move(glue);
    j["inversion"] = std::move(inv);
    return j;
}

Diagram diagram_from_json(const json& j, const Tolerances& tol) {
    try {
        Diagram d;
        const std::string surface = j.at("surface").get<std::string>();
        if (surface != "sphere" && surface != "plane") throw IoError("unknown surface");
        d.surface = surface == "sphere" ? Surface::sphere : Surface::plane;
        d.n = j.at("n").get<int>();
        d.k = j.at("k").get<int>();
        for (const auto& s : j.at("sites")) {
            if (d.surface == Surface::sphere)
                d.sites.push_back({s.at(0).get<double>(), s.at(1).get<double>(), s.at(2).get<double>()});
            else
                d.psites.push_back({s.at(0).get<double>(), s.at(1).get<double>()});
        }
        if (static_cast<int>(std::max(d.sites.size(), d.psites.size())) != d.n)
            throw IoError("site count disagrees with n");

        std::vector<VertexType> stored_types;
        for (const auto& jv : j.at("vertices")) {
            VertexKey key;
            key.triple = jv.at("triple").get<std::array<int, 3>>();
            key.m = jv.at("m").get<int>();
            key.sign = jv.at("sign").get<int>();
            Vec3 pos{};
            Vec2 ppos{};
            const auto& p = jv.at("position");
            if (d.surface == Surface::sphere)
                pos = {p.at(0).get<double>(), p.at(1).get<double>(), p.at(2).get<double>()};
            else
                ppos = {p.at(0).get<double>(), p.at(1).get<double>()};
            d.add_vertex(key, d.k, pos, ppos);
            stored_types.push_back(jv.at("type").get<std::string>() == "I" ? VertexType::type_i
                                                                           : VertexType::type_ii);
        }
        for (std::size_t v = 0; v < d.vertices.size(); ++v)
            if (d.vertices[v].type != stored_types[v])
                throw IoError("vertex type disagrees with its enclosure count");

        for (const auto& je : j.at("edges")) {
            DiagramEdge e;
            e.i = je.at("pair").at(0).get<int>();
            e.j = je.at("pair").at(1).get<int>();
            e.v0 = je.at("ends").at(0).get<int>();
            e.v1 = je.at("ends").at(1).get<int>();
            if (d.surface == Surface::sphere) {
                e.theta0 = je.at("arc").at(0).get<double>();
                e.theta1 = je.at("arc").at(1).get<double>();
            } else if (e.v1 < 0) {
                e.ray_sign = je.at("ray_sign").get<int>();
            }
            d.edges.push_back(e);
        }

        finalize_diagram(d, tol);

        // stored faces must agree with the rebuilt subdivision
        const auto& jfaces = j.at("faces");
        if (jfaces.size() != d.faces.size()) throw IoError("face count disagrees with rebuild");
        std::set<std::vector<int>> rebuilt;
        for (const auto& f : d.faces) rebuilt.insert(f.sites);
        for (const auto& jf : jfaces)
            if (!rebuilt.count(jf.at("sites").get<std::vector<int>>()))
                throw IoError("stored face key missing from rebuild");
        return d;
    } catch (const json::exception& e) {
        throw IoError(std::string("malformed diagram JSON: ") + e.what());
    } catch (const IoError&) {
        throw;
    } catch (const Error& e) {
        throw IoError(std::string("diagram JSON failed validation: ") + e.what());
    }
}

void save_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << j.dump(1) << "\n";
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw IoError(path + ": " + e.what());
    }
}

} // namespace svor
