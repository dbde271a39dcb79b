#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypersurf/cell.hpp"
#include "hypersurf/classify.hpp"
#include "hypersurf/errors.hpp"
#include "hypersurf/face_complex.hpp"
#include "hypersurf/mesh.hpp"
#include "hypersurf/signed_permutation.hpp"
#include "hypersurf/version.hpp"

namespace hypersurf {

using json = nlohmann::json;

inline void to_json(json& j, const SurfaceReport& r)
{
    j = json{{"num_vertices", r.num_vertices},
             {"num_edges", r.num_edges},
             {"num_faces", r.num_faces},
             {"euler_characteristic", r.euler_characteristic},
             {"components", r.components},
             {"orientable", r.orientable},
             {"boundary_components", r.boundary_components},
             {"name", r.name}};
}

inline void from_json(const json& j, SurfaceReport& r)
{
    j.at("num_vertices").get_to(r.num_vertices);
    j.at("num_edges").get_to(r.num_edges);
    j.at("num_faces").get_to(r.num_faces);
    j.at("euler_characteristic").get_to(r.euler_characteristic);
    j.at("components").get_to(r.components);
    j.at("orientable").get_to(r.orientable);
    j.at("boundary_components").get_to(r.boundary_components);
    j.at("name").get_to(r.name);
}

inline json faces_json(const std::vector<Cell>& faces)
{
    json arr = json::array();
    for (const Cell& f : faces) arr.push_back(f.to_string());
    return arr;
}

inline std::vector<Cell> faces_from_json(const json& arr, int n)
{
    std::vector<Cell> out;
    out.reserve(arr.size());
    for (const auto& item : arr) out.push_back(parse_cell(item.get<std::string>(), n));
    return out;
}

inline json census_json(const std::vector<FaceComplex>& surfaces)
{
    json arr = json::array();
    for (const FaceComplex& fc : surfaces)
        arr.push_back(json{{"faces", faces_json(fc.faces())},
                           {"report", classify_surface(fc)}});
    return json{{"n", 4}, {"surfaces", arr}};
}

inline std::vector<FaceComplex> census_from_json(const json& j)
{
    const int n = j.at("n").get<int>();
    std::vector<FaceComplex> out;
    for (const auto& entry : j.at("surfaces"))
        out.push_back(FaceComplex(n, faces_from_json(entry.at("faces"), n)));
    return out;
}

inline json classes_json(const std::vector<SurfaceClass>& classes)
{
    json arr = json::array();
    for (const SurfaceClass& c : classes)
        arr.push_back(json{{"label", c.label},
                           {"canonical", faces_json(c.canonical)},
                           {"orbit_size", c.orbit_size},
                           {"report", c.report}});
    return json{{"n", 4}, {"classes", arr}};
}

// {"perm":[1-indexed images],"flips":[booleans]}; flips[i] applies to output
// coordinate i+1 after the permutation.
inline json perm_json(const SignedPermutation& g)
{
    json perm = json::array();
    json flips = json::array();
    for (int j = 0; j < g.n(); ++j) perm.push_back(g.image(j) + 1);
    for (int i = 0; i < g.n(); ++i) flips.push_back(g.flipped(i));
    return json{{"perm", perm}, {"flips", flips}};
}

inline SignedPermutation perm_from_json(const json& j)
{
    const auto& perm = j.at("perm");
    const auto& flips = j.at("flips");
    std::vector<int> image;
    image.reserve(perm.size());
    for (const auto& v : perm) image.push_back(v.get<int>() - 1);
    std::vector<bool> flip;
    flip.reserve(flips.size());
    for (const auto& v : flips) flip.push_back(v.get<bool>());
    return SignedPermutation(image, flip);
}

inline SignedPermutation parse_rotation(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        raise(errc::invalid_permutation, std::string("bad rotation JSON: ") + e.what());
    }
    try {
        return perm_from_json(j);
    } catch (const json::exception& e) {
        raise(errc::invalid_permutation, std::string("bad rotation JSON: ") + e.what());
    }
}

inline json mesh_json(const QuadMesh& mesh)
{
    json verts = json::array();
    for (const Point3& p : mesh.vertices) verts.push_back(json::array({p.x, p.y, p.z}));
    json quads = json::array();
    for (const auto& q : mesh.quads) quads.push_back(json::array({q[0], q[1], q[2], q[3]}));
    return json{{"vertices", verts}, {"quads", quads}};
}

struct RunManifest {
    std::string command;
    json parameters = json::object();
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    double elapsed_seconds = 0;
    json result_counts = json::object();
};

inline json manifest_json(const RunManifest& m)
{
    return json{{"tool", "hypersurf"},
                {"version", version},
                {"command", m.command},
                {"parameters", m.parameters},
                {"inputs", m.inputs},
                {"outputs", m.outputs},
                {"elapsed_seconds", m.elapsed_seconds},
                {"result_counts", m.result_counts}};
}

inline std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

inline void write_text_file(const std::string& path, const std::string& content)
{
    std::ofstream f(path, std::ios::binary);
    if (!f) raise(errc::io_failure, "cannot open \"" + path + "\" for writing");
    f << content;
    f.flush();
    if (!f) raise(errc::io_failure, "failed while writing \"" + path + "\"");
}

inline std::string read_text_file(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f) raise(errc::io_failure, "cannot open \"" + path + "\" for reading");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace hypersurf
