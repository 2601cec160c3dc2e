#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "svoronoi/construct_inversion.hpp"
#include "svoronoi/diagram.hpp"

namespace svor {

/// Point-set text format: one `x y z` triple per line, `#` comments. Points
/// are normalized onto the unit sphere; a warning goes to `warnings` when the
/// renormalization exceeds tol.norm.
std::vector<Vec3> load_points_text(const std::string& path, std::ostream* warnings = nullptr,
                                   const Tolerances& tol = Tolerances{});
void save_points_text(const std::string& path, const std::vector<Vec3>& pts);

/// Diagram JSON schema (stable field names): surface, n, k, sites, vertices
/// (key fields, type, position), edges (pair, ends, arc or ray_sign), faces
/// (sites, boundary with "infinity" sentinels on unbounded faces).
nlohmann::json diagram_to_json(const Diagram& d);

/// Inversion builds embed their provenance under an "inversion" key:
/// center, radius, per-vertex and per-edge sources, and the glue map.
nlohmann::json inversion_to_json(const InversionBuild& b);

/// Rebuilds a diagram from JSON, re-derives the half-edge structure and
/// validates the stored vertices/faces against the rebuilt ones. Throws
/// IoError when the JSON is malformed or internally inconsistent.
Diagram diagram_from_json(const nlohmann::json& j, const Tolerances& tol = Tolerances{});

void save_json(const std::string& path, const nlohmann::json& j);
nlohmann::json load_json(const std::string& path);

} // namespace svor
