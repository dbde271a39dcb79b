#pragma once

#include <cstdio>
#include <fstream>
#include <string>

#include "hypersurf/errors.hpp"
#include "hypersurf/mesh.hpp"

namespace hypersurf {

namespace detail {

// Fixed 9-significant-digit decimal formatting; deterministic for a given
// double value.
inline std::string format_coord(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

}  // namespace detail

inline std::string obj_text(const QuadMesh& mesh, bool triangulate = false)
{
    std::string out;
    out.reserve(mesh.vertices.size() * 32 + mesh.quads.size() * 24);
    for (const Point3& p : mesh.vertices) {
        out += "v ";
        out += detail::format_coord(p.x);
        out += ' ';
        out += detail::format_coord(p.y);
        out += ' ';
        out += detail::format_coord(p.z);
        out += '\n';
    }
    if (triangulate) {
        for (const auto& t : triangulate_quads(mesh)) {
            out += "f " + std::to_string(t[0] + 1) + ' ' + std::to_string(t[1] + 1) + ' ' +
                   std::to_string(t[2] + 1) + '\n';
        }
    } else {
        for (const auto& q : mesh.quads) {
            out += "f " + std::to_string(q[0] + 1) + ' ' + std::to_string(q[1] + 1) + ' ' +
                   std::to_string(q[2] + 1) + ' ' + std::to_string(q[3] + 1) + '\n';
        }
    }
    return out;
}

// OBJ geometry: "v x y z" lines then 1-indexed "f" lines, in mesh order.
inline void write_obj(const QuadMesh& mesh, const std::string& path, bool triangulate = false)
{
    std::ofstream f(path, std::ios::binary);
    if (!f) raise(errc::io_failure, "cannot open \"" + path + "\" for writing");
    f << obj_text(mesh, triangulate);
    f.flush();
    if (!f) raise(errc::io_failure, "failed while writing \"" + path + "\"");
}

}  // namespace hypersurf
