#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <set>
#include <vector>

#include "hypersurf/cell.hpp"
#include "hypersurf/errors.hpp"
#include "hypersurf/signed_permutation.hpp"

namespace hypersurf {

// Subsets of the 24 faces of Q^4 as 24-bit masks. Bit b stands for the b-th
// 2-face in ascending cell-id order.
using FaceMask = std::uint32_t;

namespace q4 {

inline constexpr int num_faces = 24;
inline constexpr int num_edges = 32;
inline constexpr int num_vertices = 16;
inline constexpr FaceMask all_faces_mask = (1u << num_faces) - 1u;

struct Tables {
    std::array<Cell, num_faces> faces;
    std::array<Cell, num_edges> edges;
    std::array<Cell, num_vertices> vertices;
    std::array<std::int16_t, 6561> face_index;    // cell id -> 0..23, -1 otherwise
    std::array<std::int16_t, 6561> edge_index;    // cell id -> 0..31, -1 otherwise
    std::array<std::int16_t, 6561> vertex_index;  // cell id -> 0..15, -1 otherwise
    std::array<FaceMask, num_edges> edge_faces;   // faces containing each edge (3 bits set)
    std::array<std::array<std::uint8_t, 4>, num_faces> face_edges;
};

inline const Tables& tables()
{
    static const Tables t = [] {
        Tables tb;
        tb.face_index.fill(-1);
        tb.edge_index.fill(-1);
        tb.vertex_index.fill(-1);
        const auto faces = enumerate_cells(4, 2);
        const auto edges = enumerate_cells(4, 1);
        const auto verts = enumerate_cells(4, 0);
        for (int i = 0; i < num_faces; ++i) {
            tb.faces[static_cast<std::size_t>(i)] = faces[static_cast<std::size_t>(i)];
            tb.face_index[faces[static_cast<std::size_t>(i)].id()] = static_cast<std::int16_t>(i);
        }
        for (int i = 0; i < num_edges; ++i) {
            tb.edges[static_cast<std::size_t>(i)] = edges[static_cast<std::size_t>(i)];
            tb.edge_index[edges[static_cast<std::size_t>(i)].id()] = static_cast<std::int16_t>(i);
        }
        for (int i = 0; i < num_vertices; ++i) {
            tb.vertices[static_cast<std::size_t>(i)] = verts[static_cast<std::size_t>(i)];
            tb.vertex_index[verts[static_cast<std::size_t>(i)].id()] = static_cast<std::int16_t>(i);
        }
        tb.edge_faces.fill(0);
        for (int f = 0; f < num_faces; ++f) {
            const auto es = boundary_cells(tb.faces[static_cast<std::size_t>(f)], 1);
            for (int s = 0; s < 4; ++s) {
                const int e = tb.edge_index[es[static_cast<std::size_t>(s)].id()];
                tb.face_edges[static_cast<std::size_t>(f)][static_cast<std::size_t>(s)] =
                    static_cast<std::uint8_t>(e);
                tb.edge_faces[static_cast<std::size_t>(e)] |= (1u << f);
            }
        }
        return tb;
    }();
    return t;
}

inline int face_index(const Cell& face)
{
    if (face.n() != 4) raise(errc::dimension_mismatch, "face mask encoding requires n=4");
    const int idx = tables().face_index[face.id()];
    if (idx < 0) raise(errc::not_a_face, "\"" + face.to_string() + "\" is not a 2-face of Q^4");
    return idx;
}

inline FaceMask mask_of(const std::vector<Cell>& faces)
{
    FaceMask m = 0;
    for (const Cell& f : faces) m |= (1u << face_index(f));
    return m;
}

inline std::vector<Cell> faces_of(FaceMask m)
{
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(std::popcount(m)));
    for (int b = 0; b < num_faces; ++b)
        if (m & (1u << b)) out.push_back(tables().faces[static_cast<std::size_t>(b)]);
    return out;
}

// Sorted face lists of equal size compare lexicographically; on masks the
// first difference is the lowest differing bit, which belongs to the smaller
// list.
inline bool mask_precedes(FaceMask a, FaceMask b)
{
    if (a == b) return false;
    const FaceMask d = a ^ b;
    return (a & (d & (0u - d))) != 0;
}

// Action of the 384 group elements on face indices, rows ordered exactly as
// group_elements(4).
inline const std::vector<std::array<std::uint8_t, num_faces>>& b4_face_action()
{
    static const std::vector<std::array<std::uint8_t, num_faces>> rows = [] {
        std::vector<std::array<std::uint8_t, num_faces>> r;
        r.reserve(384);
        const Tables& tb = tables();
        for_each_group_element(4, [&](const SignedPermutation& g) {
            std::array<std::uint8_t, num_faces> row{};
            for (int f = 0; f < num_faces; ++f)
                row[static_cast<std::size_t>(f)] = static_cast<std::uint8_t>(
                    tb.face_index[g.apply(tb.faces[static_cast<std::size_t>(f)]).id()]);
            r.push_back(row);
        });
        return r;
    }();
    return rows;
}

inline FaceMask apply_mask(const std::array<std::uint8_t, num_faces>& row, FaceMask m)
{
    FaceMask out = 0;
    while (m) {
        const int b = std::countr_zero(m);
        out |= (1u << row[static_cast<std::size_t>(b)]);
        m &= m - 1;
    }
    return out;
}

inline FaceMask canonical_mask(FaceMask m)
{
    if (m == 0) raise(errc::empty_input, "canonical form of an empty face set");
    FaceMask best = m;
    for (const auto& row : b4_face_action()) {
        const FaceMask img = apply_mask(row, m);
        if (mask_precedes(img, best)) best = img;
    }
    return best;
}

struct OrbitInfo {
    std::vector<FaceMask> members;  // distinct images, sorted by mask_precedes
    int stabilizer_order = 0;       // |members| * stabilizer_order == 384
};

inline OrbitInfo orbit_info(FaceMask m)
{
    if (m == 0) raise(errc::empty_input, "orbit of an empty face set");
    OrbitInfo info;
    std::set<FaceMask> seen;
    for (const auto& row : b4_face_action()) {
        const FaceMask img = apply_mask(row, m);
        seen.insert(img);
        if (img == m) ++info.stabilizer_order;
    }
    info.members.assign(seen.begin(), seen.end());
    std::sort(info.members.begin(), info.members.end(), mask_precedes);
    return info;
}

}  // namespace q4

namespace detail {

inline std::vector<CellId> face_ids(const std::vector<Cell>& faces)
{
    std::vector<CellId> ids;
    ids.reserve(faces.size());
    for (const Cell& f : faces) ids.push_back(f.id());
    std::sort(ids.begin(), ids.end());
    return ids;
}

inline void check_face_set(const std::vector<Cell>& faces)
{
    if (faces.empty()) raise(errc::empty_input, "face set is empty");
    const int n = faces.front().n();
    for (const Cell& f : faces) {
        if (f.n() != n) raise(errc::dimension_mismatch, "mixed ambient dimensions in face set");
        if (f.dim() != 2)
            raise(errc::not_a_face, "\"" + f.to_string() + "\" is not a 2-face");
    }
}

}  // namespace detail

// Minimum image of the face set over the whole group: the lexicographically
// least sorted list of cell strings under the order '0' < '1' < '*'. Two face
// sets have equal canonical forms iff they lie in the same B_n orbit.
inline std::vector<Cell> canonical_form(const std::vector<Cell>& faces)
{
    detail::check_face_set(faces);
    const int n = faces.front().n();
    if (n == 4) return q4::faces_of(q4::canonical_mask(q4::mask_of(faces)));

    std::vector<CellId> best = detail::face_ids(faces);
    for_each_group_element(n, [&](const SignedPermutation& g) {
        std::vector<CellId> img;
        img.reserve(faces.size());
        for (const Cell& f : faces) img.push_back(g.apply(f).id());
        std::sort(img.begin(), img.end());
        if (img < best) best = img;
    });
    std::vector<Cell> out;
    out.reserve(best.size());
    for (CellId id : best) out.push_back(Cell::from_id(id, n));
    return out;
}

// All distinct images of the face set under B_n, each as a sorted face list.
inline std::vector<std::vector<Cell>> orbit(const std::vector<Cell>& faces)
{
    detail::check_face_set(faces);
    const int n = faces.front().n();
    if (n == 4) {
        const auto info = q4::orbit_info(q4::mask_of(faces));
        std::vector<std::vector<Cell>> out;
        out.reserve(info.members.size());
        for (FaceMask m : info.members) out.push_back(q4::faces_of(m));
        return out;
    }

    std::set<std::vector<CellId>> seen;
    for_each_group_element(n, [&](const SignedPermutation& g) {
        std::vector<CellId> img;
        img.reserve(faces.size());
        for (const Cell& f : faces) img.push_back(g.apply(f).id());
        std::sort(img.begin(), img.end());
        seen.insert(img);
    });
    std::vector<std::vector<Cell>> out;
    out.reserve(seen.size());
    for (const auto& ids : seen) {
        std::vector<Cell> fs;
        fs.reserve(ids.size());
        for (CellId id : ids) fs.push_back(Cell::from_id(id, n));
        out.push_back(std::move(fs));
    }
    return out;
}

}  // namespace hypersurf
