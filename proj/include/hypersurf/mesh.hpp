#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "hypersurf/cell.hpp"
#include "hypersurf/errors.hpp"
#include "hypersurf/face_complex.hpp"
#include "hypersurf/geometry.hpp"

namespace hypersurf {

// Bilinear sample grid over a 2-face: (k+1)^2 points at steps i/k along the
// two free axes, and the k^2 unit quads between them. Point (i,j) sits at
// index j*(k+1)+i; quad corners follow the face_vertex_cycle convention.
struct FaceGrid {
    Cell face;
    int k = 0;
    std::vector<Point4> points;
    std::vector<std::array<std::uint32_t, 4>> quads;

    int point_index(int i, int j) const { return j * (k + 1) + i; }
};

inline FaceGrid subdivide_face(const Cell& face, int k)
{
    if (face.dim() != 2)
        raise(errc::not_a_face, "\"" + face.to_string() + "\" is not a 2-face");
    if (k < 1) raise(errc::invalid_subdivision, "subdivision must be at least 1");
    FaceGrid grid;
    grid.face = face;
    grid.k = k;
    const auto stars = face.star_positions();
    Point4 base;
    for (int c = 0; c < face.n(); ++c)
        base.set(c, face.entry(c) == Trit::one ? 1.0 : 0.0);
    grid.points.reserve(static_cast<std::size_t>((k + 1) * (k + 1)));
    for (int j = 0; j <= k; ++j)
        for (int i = 0; i <= k; ++i) {
            Point4 p = base;
            p.set(stars[0], static_cast<double>(i) / k);
            p.set(stars[1], static_cast<double>(j) / k);
            grid.points.push_back(p);
        }
    grid.quads.reserve(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i)
            grid.quads.push_back({static_cast<std::uint32_t>(grid.point_index(i, j)),
                                  static_cast<std::uint32_t>(grid.point_index(i + 1, j)),
                                  static_cast<std::uint32_t>(grid.point_index(i + 1, j + 1)),
                                  static_cast<std::uint32_t>(grid.point_index(i, j + 1))});
    return grid;
}

struct QuadProvenance {
    Cell face;
    int grid_i = 0;
    int grid_j = 0;
};

struct QuadMesh {
    std::vector<Point3> vertices;
    std::vector<std::array<std::uint32_t, 4>> quads;
    std::vector<QuadProvenance> provenance;  // one entry per quad
};

namespace detail {

// Exact rational grid key: coordinates scaled by k are integers in [0, k],
// identical across faces sharing an edge. 16 bits per coordinate.
inline std::uint64_t grid_key(const Cell& face, int k, int i, int j)
{
    const auto stars = face.star_positions();
    std::array<std::uint64_t, 4> scaled{};
    for (int c = 0; c < 4; ++c)
        scaled[static_cast<std::size_t>(c)] =
            face.entry(c) == Trit::one ? static_cast<std::uint64_t>(k) : 0u;
    scaled[static_cast<std::size_t>(stars[0])] = static_cast<std::uint64_t>(i);
    scaled[static_cast<std::size_t>(stars[1])] = static_cast<std::uint64_t>(j);
    return (scaled[0] << 48) | (scaled[1] << 32) | (scaled[2] << 16) | scaled[3];
}

}  // namespace detail

// Subdivide every face, project every sample, and assemble one mesh. Samples
// shared between adjacent faces are deduplicated by their exact rational 4D
// grid key, so closed complexes yield watertight meshes without epsilon
// tuning. Vertex indices are assigned in face-id / grid order.
inline QuadMesh project_complex(const FaceComplex& complex, int k,
                                const SignedPermutation& rotation)
{
    if (complex.empty()) raise(errc::empty_input, "cannot project an empty complex");
    if (complex.n() != 4)
        raise(errc::unsupported_dimension, "the projection pipeline requires n=4");
    if (k < 1) raise(errc::invalid_subdivision, "subdivision must be at least 1");

    QuadMesh mesh;
    std::unordered_map<std::uint64_t, std::uint32_t> index_of;
    index_of.reserve(complex.faces().size() * static_cast<std::size_t>((k + 1) * (k + 1)));

    for (const Cell& face : complex.faces()) {
        std::vector<std::uint32_t> local(static_cast<std::size_t>((k + 1) * (k + 1)));
        const auto stars = face.star_positions();
        Point4 base;
        for (int c = 0; c < 4; ++c)
            base.set(c, face.entry(c) == Trit::one ? 1.0 : 0.0);
        for (int j = 0; j <= k; ++j)
            for (int i = 0; i <= k; ++i) {
                const std::uint64_t key = detail::grid_key(face, k, i, j);
                auto it = index_of.find(key);
                std::uint32_t idx;
                if (it == index_of.end()) {
                    Point4 p = base;
                    p.set(stars[0], static_cast<double>(i) / k);
                    p.set(stars[1], static_cast<double>(j) / k);
                    try {
                        mesh.vertices.push_back(project_point(p, rotation));
                    } catch (const Error& err) {
                        if (err.code() == errc::at_projection_pole)
                            raise(errc::at_projection_pole,
                                  "face \"" + face.to_string() + "\" grid (" + std::to_string(i) +
                                      "," + std::to_string(j) + ") hits the projection pole");
                        throw;
                    }
                    idx = static_cast<std::uint32_t>(mesh.vertices.size() - 1);
                    index_of.emplace(key, idx);
                } else {
                    idx = it->second;
                }
                local[static_cast<std::size_t>(j * (k + 1) + i)] = idx;
            }
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < k; ++i) {
                const auto at = [&](int ii, int jj) {
                    return local[static_cast<std::size_t>(jj * (k + 1) + ii)];
                };
                mesh.quads.push_back({at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)});
                mesh.provenance.push_back({face, i, j});
            }
    }
    return mesh;
}

inline QuadMesh project_complex(const FaceComplex& complex, int k)
{
    return project_complex(complex, k, SignedPermutation::identity(4));
}

namespace detail {

inline std::uint64_t undirected_edge_key(std::uint32_t a, std::uint32_t b)
{
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace detail

// Number of quads using each undirected mesh edge.
inline std::map<std::uint64_t, int> edge_use_counts(const QuadMesh& mesh)
{
    std::map<std::uint64_t, int> counts;
    for (const auto& q : mesh.quads)
        for (int s = 0; s < 4; ++s)
            ++counts[detail::undirected_edge_key(q[static_cast<std::size_t>(s)],
                                                 q[static_cast<std::size_t>((s + 1) % 4)])];
    return counts;
}

// Every mesh edge shared by exactly two quads.
inline bool is_watertight(const QuadMesh& mesh)
{
    if (mesh.quads.empty()) return false;
    for (const auto& [e, c] : edge_use_counts(mesh))
        if (c != 2) return false;
    return true;
}

inline int mesh_euler_characteristic(const QuadMesh& mesh)
{
    return static_cast<int>(mesh.vertices.size()) -
           static_cast<int>(edge_use_counts(mesh).size()) + static_cast<int>(mesh.quads.size());
}

// Loops formed by mesh edges that are used exactly once.
inline int mesh_boundary_loop_count(const QuadMesh& mesh)
{
    std::vector<std::pair<std::uint32_t, std::uint32_t>> boundary;
    for (const auto& [e, c] : edge_use_counts(mesh))
        if (c == 1)
            boundary.push_back({static_cast<std::uint32_t>(e >> 32),
                                static_cast<std::uint32_t>(e & 0xffffffffu)});
    // union-find over the endpoint vertices
    std::unordered_map<std::uint32_t, std::uint32_t> parent;
    std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t v) {
        auto it = parent.find(v);
        if (it == parent.end()) {
            parent[v] = v;
            return v;
        }
        while (it->second != v) {
            v = it->second;
            it = parent.find(v);
        }
        return v;
    };
    for (const auto& [a, b] : boundary) {
        const auto ra = find(a);
        const auto rb = find(b);
        if (ra != rb) parent[ra] = rb;
    }
    std::set<std::uint32_t> roots;
    for (const auto& [a, b] : boundary) roots.insert(find(a));
    return static_cast<int>(roots.size());
}

// Split each quad along its shorter projected diagonal; ties take (v0,v2).
inline std::vector<std::array<std::uint32_t, 3>> triangulate_quads(const QuadMesh& mesh)
{
    std::vector<std::array<std::uint32_t, 3>> tris;
    tris.reserve(mesh.quads.size() * 2);
    for (const auto& q : mesh.quads) {
        const Point3& a = mesh.vertices[q[0]];
        const Point3& b = mesh.vertices[q[1]];
        const Point3& c = mesh.vertices[q[2]];
        const Point3& d = mesh.vertices[q[3]];
        if ((a - c).norm2() <= (b - d).norm2()) {
            tris.push_back({q[0], q[1], q[2]});
            tris.push_back({q[0], q[2], q[3]});
        } else {
            tris.push_back({q[0], q[1], q[3]});
            tris.push_back({q[1], q[2], q[3]});
        }
    }
    return tris;
}

}  // namespace hypersurf
