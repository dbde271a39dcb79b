#pragma once

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "hypersurf/cell.hpp"
#include "hypersurf/errors.hpp"
#include "hypersurf/face_set.hpp"

namespace hypersurf {

struct Closure {
    std::vector<Cell> vertices;
    std::vector<Cell> edges;
    std::vector<Cell> faces;
};

// Downward closure of a set of 2-faces: the faces themselves plus all their
// edges and vertices, each exactly once, sorted by cell id.
inline Closure closure(const std::vector<Cell>& faces)
{
    Closure cl;
    if (faces.empty()) return cl;
    const int n = faces.front().n();
    std::set<Cell> fs, es, vs;
    for (const Cell& f : faces) {
        if (f.n() != n) raise(errc::dimension_mismatch, "mixed ambient dimensions in face set");
        if (f.dim() != 2) raise(errc::not_a_face, "\"" + f.to_string() + "\" is not a 2-face");
        fs.insert(f);
        for (const Cell& e : boundary_cells(f, 1)) es.insert(e);
        for (const Cell& v : boundary_cells(f, 0)) vs.insert(v);
    }
    cl.faces.assign(fs.begin(), fs.end());
    cl.edges.assign(es.begin(), es.end());
    cl.vertices.assign(vs.begin(), vs.end());
    return cl;
}

// A two-dimensional cubical complex: a set of 2-faces of Q^n together with
// its derived closure. Immutable after construction.
class FaceComplex {
public:
    FaceComplex() = default;

    FaceComplex(int n, std::vector<Cell> faces) : n_(n)
    {
        detail::check_ambient_dim(n);
        for (const Cell& f : faces)
            if (f.n() != n)
                raise(errc::dimension_mismatch, "face does not live in the stated ambient cube");
        Closure cl = closure(faces);
        faces_ = std::move(cl.faces);
        edges_ = std::move(cl.edges);
        vertices_ = std::move(cl.vertices);
    }

    explicit FaceComplex(const std::vector<Cell>& faces)
        : FaceComplex(faces.empty() ? 4 : faces.front().n(), faces)
    {
        if (faces.empty()) raise(errc::empty_input, "cannot infer ambient dimension");
    }

    static FaceComplex from_mask(FaceMask mask) { return FaceComplex(4, q4::faces_of(mask)); }

    int n() const { return n_; }
    const std::vector<Cell>& faces() const { return faces_; }
    const std::vector<Cell>& edges() const { return edges_; }
    const std::vector<Cell>& vertices() const { return vertices_; }
    bool empty() const { return faces_.empty(); }

    FaceMask mask() const
    {
        if (n_ != 4) raise(errc::dimension_mismatch, "face masks are defined for n=4 only");
        return q4::mask_of(faces_);
    }

    bool contains_vertex(const Cell& v) const
    {
        return std::binary_search(vertices_.begin(), vertices_.end(), v);
    }

    friend bool operator==(const FaceComplex& a, const FaceComplex& b)
    {
        return a.n_ == b.n_ && a.faces_ == b.faces_;
    }

private:
    int n_ = 4;
    std::vector<Cell> faces_;
    std::vector<Cell> edges_;
    std::vector<Cell> vertices_;
};

// Number of faces of the complex containing each closure edge (1, 2, or 3 in Q^4).
inline std::map<Cell, int> edge_degrees(const FaceComplex& complex)
{
    std::map<Cell, int> deg;
    for (const Cell& e : complex.edges()) deg[e] = 0;
    for (const Cell& f : complex.faces())
        for (const Cell& e : boundary_cells(f, 1)) ++deg[e];
    return deg;
}

namespace detail {

struct LinkGraph {
    std::vector<Cell> faces;               // faces incident to the vertex
    std::vector<std::vector<int>> adj;     // adjacency via shared edges through the vertex
};

inline LinkGraph vertex_link(const FaceComplex& complex, const Cell& vertex)
{
    LinkGraph lg;
    for (const Cell& f : complex.faces())
        if (is_subcell(vertex, f)) lg.faces.push_back(f);
    const int m = static_cast<int>(lg.faces.size());
    lg.adj.assign(static_cast<std::size_t>(m), {});
    std::vector<std::vector<Cell>> face_edges(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        for (const Cell& e : boundary_cells(lg.faces[static_cast<std::size_t>(i)], 1))
            if (is_subcell(vertex, e)) face_edges[static_cast<std::size_t>(i)].push_back(e);
    }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            bool shares = false;
            for (const Cell& e : face_edges[static_cast<std::size_t>(i)]) {
                for (const Cell& e2 : face_edges[static_cast<std::size_t>(j)])
                    if (e == e2) {
                        shares = true;
                        break;
                    }
                if (shares) break;
            }
            if (shares) {
                lg.adj[static_cast<std::size_t>(i)].push_back(j);
                lg.adj[static_cast<std::size_t>(j)].push_back(i);
            }
        }
    return lg;
}

inline bool graph_connected(const std::vector<std::vector<int>>& adj)
{
    const int m = static_cast<int>(adj.size());
    if (m == 0) return false;
    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    int visited = 0;
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        ++visited;
        for (int v : adj[static_cast<std::size_t>(u)])
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = true;
                q.push(v);
            }
    }
    return visited == m;
}

inline bool link_is_single_cycle(const LinkGraph& lg)
{
    if (lg.faces.empty()) return false;
    for (const auto& nb : lg.adj)
        if (nb.size() != 2) return false;
    return graph_connected(lg.adj);
}

// A single path, including the degenerate one-node path.
inline bool link_is_single_path(const LinkGraph& lg)
{
    const int m = static_cast<int>(lg.faces.size());
    if (m == 0) return false;
    int edges = 0;
    for (const auto& nb : lg.adj) {
        if (nb.size() > 2) return false;
        edges += static_cast<int>(nb.size());
    }
    edges /= 2;
    return edges == m - 1 && graph_connected(lg.adj);
}

}  // namespace detail

// The disk condition at a vertex: the faces around it, glued along the edges
// through it, must close up into one cycle.
inline bool vertex_link_is_single_cycle(const FaceComplex& complex, const Cell& vertex)
{
    if (!complex.contains_vertex(vertex))
        raise(errc::vertex_not_in_complex,
              "vertex \"" + vertex.to_string() + "\" is not in the closure");
    return detail::link_is_single_cycle(detail::vertex_link(complex, vertex));
}

// Closed cubical surface: every closure edge lies in exactly two faces and
// every vertex link is a single cycle.
inline bool is_closed_surface(const FaceComplex& complex)
{
    if (complex.empty()) return false;
    for (const auto& [e, d] : edge_degrees(complex))
        if (d != 2) return false;
    for (const Cell& v : complex.vertices())
        if (!detail::link_is_single_cycle(detail::vertex_link(complex, v))) return false;
    return true;
}

// Surface, possibly with boundary: edge degrees at most 2 and every vertex
// link a single cycle or a single path.
inline bool is_surface(const FaceComplex& complex)
{
    if (complex.empty()) return false;
    for (const auto& [e, d] : edge_degrees(complex))
        if (d > 2) return false;
    for (const Cell& v : complex.vertices()) {
        const auto lg = detail::vertex_link(complex, v);
        if (!detail::link_is_single_cycle(lg) && !detail::link_is_single_path(lg)) return false;
    }
    return true;
}

inline int euler_characteristic(const FaceComplex& complex)
{
    return static_cast<int>(complex.vertices().size()) -
           static_cast<int>(complex.edges().size()) +
           static_cast<int>(complex.faces().size());
}

namespace detail {

// Faces adjacent iff they share an edge.
inline std::vector<std::vector<int>> face_adjacency(const FaceComplex& complex)
{
    const auto& faces = complex.faces();
    const int m = static_cast<int>(faces.size());
    std::map<Cell, std::vector<int>> by_edge;
    for (int i = 0; i < m; ++i)
        for (const Cell& e : boundary_cells(faces[static_cast<std::size_t>(i)], 1))
            by_edge[e].push_back(i);
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(m));
    for (const auto& [e, fs] : by_edge)
        for (std::size_t a = 0; a < fs.size(); ++a)
            for (std::size_t b = a + 1; b < fs.size(); ++b) {
                adj[static_cast<std::size_t>(fs[a])].push_back(fs[b]);
                adj[static_cast<std::size_t>(fs[b])].push_back(fs[a]);
            }
    return adj;
}

}  // namespace detail

// Connected components of the face-adjacency graph, each as a sorted face
// list; ordered by their smallest face.
inline std::vector<std::vector<Cell>> component_face_sets(const FaceComplex& complex)
{
    const auto& faces = complex.faces();
    const int m = static_cast<int>(faces.size());
    const auto adj = detail::face_adjacency(complex);
    std::vector<int> comp(static_cast<std::size_t>(m), -1);
    std::vector<std::vector<Cell>> out;
    for (int start = 0; start < m; ++start) {
        if (comp[static_cast<std::size_t>(start)] >= 0) continue;
        const int c = static_cast<int>(out.size());
        std::queue<int> q;
        q.push(start);
        comp[static_cast<std::size_t>(start)] = c;
        std::vector<Cell> members;
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            members.push_back(faces[static_cast<std::size_t>(u)]);
            for (int v : adj[static_cast<std::size_t>(u)])
                if (comp[static_cast<std::size_t>(v)] < 0) {
                    comp[static_cast<std::size_t>(v)] = c;
                    q.push(v);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

inline int connected_components(const FaceComplex& complex)
{
    return static_cast<int>(component_face_sets(complex).size());
}

namespace detail {

// The edge of Q^n spanned by two vertices at Hamming distance 1.
inline Cell edge_between(const Cell& u, const Cell& v)
{
    Cell e = u;
    for (int i = 0; i < u.n(); ++i)
        if (u.entry(i) != v.entry(i)) e.set_entry(i, Trit::star);
    return e;
}

}  // namespace detail

struct OrientationCheck {
    bool orientable = true;
    // On failure, a closed walk of faces (consecutive ones share an edge)
    // along which orientation cannot be propagated consistently.
    std::vector<Cell> conflict_cycle;
};

// Propagate face orientations component by component: two faces sharing an
// edge must induce it in opposite directions. Requires edge degrees <= 2.
inline OrientationCheck orientation_check(const FaceComplex& complex)
{
    const auto& faces = complex.faces();
    const int m = static_cast<int>(faces.size());
    for (const auto& [e, d] : edge_degrees(complex))
        if (d > 2)
            raise(errc::not_a_surface,
                  "edge \"" + e.to_string() + "\" lies in " + std::to_string(d) + " faces");

    // dir = 0 when the face's canonical corner cycle traverses the edge from
    // its star->0 endpoint to its star->1 endpoint.
    std::map<Cell, std::vector<std::pair<int, int>>> incidences;  // edge -> (face, dir)
    for (int f = 0; f < m; ++f) {
        const auto cyc = face_vertex_cycle(faces[static_cast<std::size_t>(f)]);
        for (int s = 0; s < 4; ++s) {
            const Cell& u = cyc[static_cast<std::size_t>(s)];
            const Cell& v = cyc[static_cast<std::size_t>((s + 1) % 4)];
            const Cell e = detail::edge_between(u, v);
            const int dir = (u < v) ? 0 : 1;
            incidences[e].push_back({f, dir});
        }
    }

    OrientationCheck result;
    std::vector<int> orient(static_cast<std::size_t>(m), -1);
    std::vector<int> parent(static_cast<std::size_t>(m), -1);

    std::vector<std::vector<std::pair<int, int>>> nbrs(static_cast<std::size_t>(m));
    for (const auto& [e, inc] : incidences) {
        if (inc.size() != 2) continue;
        const auto [f0, d0] = inc[0];
        const auto [f1, d1] = inc[1];
        // required relative orientation so the two induced directions oppose
        const int rel = d0 ^ d1 ^ 1;
        nbrs[static_cast<std::size_t>(f0)].push_back({f1, rel});
        nbrs[static_cast<std::size_t>(f1)].push_back({f0, rel});
    }

    for (int start = 0; start < m; ++start) {
        if (orient[static_cast<std::size_t>(start)] >= 0) continue;
        orient[static_cast<std::size_t>(start)] = 0;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (const auto& [v, rel] : nbrs[static_cast<std::size_t>(u)]) {
                const int want = orient[static_cast<std::size_t>(u)] ^ rel;
                if (orient[static_cast<std::size_t>(v)] < 0) {
                    orient[static_cast<std::size_t>(v)] = want;
                    parent[static_cast<std::size_t>(v)] = u;
                    q.push(v);
                } else if (orient[static_cast<std::size_t>(v)] != want) {
                    // witness: tree path u .. lca .. v, closed by the edge uv
                    result.orientable = false;
                    std::vector<int> up_u;
                    for (int x = u; x >= 0; x = parent[static_cast<std::size_t>(x)])
                        up_u.push_back(x);
                    std::set<int> on_u(up_u.begin(), up_u.end());
                    std::vector<int> up_v;
                    int lca = -1;
                    for (int x = v; x >= 0; x = parent[static_cast<std::size_t>(x)]) {
                        if (on_u.count(x)) {
                            lca = x;
                            break;
                        }
                        up_v.push_back(x);
                    }
                    for (int x : up_u) {
                        result.conflict_cycle.push_back(faces[static_cast<std::size_t>(x)]);
                        if (x == lca) break;
                    }
                    for (auto it = up_v.rbegin(); it != up_v.rend(); ++it)
                        result.conflict_cycle.push_back(faces[static_cast<std::size_t>(*it)]);
                    return result;
                }
            }
        }
    }
    return result;
}

inline bool is_orientable(const FaceComplex& complex)
{
    return orientation_check(complex).orientable;
}

// The degree-1 edges grouped into their disjoint closed loops.
inline std::vector<std::vector<Cell>> boundary_loops(const FaceComplex& complex)
{
    std::vector<Cell> boundary;
    for (const auto& [e, d] : edge_degrees(complex)) {
        if (d > 2)
            raise(errc::not_a_surface,
                  "edge \"" + e.to_string() + "\" lies in " + std::to_string(d) + " faces");
        if (d == 1) boundary.push_back(e);
    }
    const int m = static_cast<int>(boundary.size());
    std::map<Cell, std::vector<int>> by_vertex;
    for (int i = 0; i < m; ++i)
        for (const Cell& v : boundary_cells(boundary[static_cast<std::size_t>(i)], 0))
            by_vertex[v].push_back(i);
    std::vector<bool> used(static_cast<std::size_t>(m), false);
    std::vector<std::vector<Cell>> loops;
    for (int start = 0; start < m; ++start) {
        if (used[static_cast<std::size_t>(start)]) continue;
        std::vector<Cell> loop;
        std::queue<int> q;
        q.push(start);
        used[static_cast<std::size_t>(start)] = true;
        while (!q.empty()) {
            const int i = q.front();
            q.pop();
            loop.push_back(boundary[static_cast<std::size_t>(i)]);
            for (const Cell& v : boundary_cells(boundary[static_cast<std::size_t>(i)], 0))
                for (int j : by_vertex[v])
                    if (!used[static_cast<std::size_t>(j)]) {
                        used[static_cast<std::size_t>(j)] = true;
                        q.push(j);
                    }
        }
        std::sort(loop.begin(), loop.end());
        loops.push_back(std::move(loop));
    }
    return loops;
}

inline int boundary_components(const FaceComplex& complex)
{
    return static_cast<int>(boundary_loops(complex).size());
}

struct SurfaceReport {
    int num_vertices = 0;
    int num_edges = 0;
    int num_faces = 0;
    int euler_characteristic = 0;
    int components = 0;
    bool orientable = true;
    int boundary_components = 0;
    std::string name;

    friend bool operator==(const SurfaceReport&, const SurfaceReport&) = default;
};

namespace detail {

inline std::string component_name(int chi, bool orientable, int boundary)
{
    if (boundary == 0 && orientable && chi == 2) return "S2";
    if (boundary == 0 && orientable && chi == 0) return "T2";
    if (boundary == 1 && !orientable && chi == 0) return "Möbius strip";
    std::string s = "(chi=" + std::to_string(chi);
    s += orientable ? ", orientable" : ", non-orientable";
    s += ", b=" + std::to_string(boundary) + ")";
    return s;
}

}  // namespace detail

// Invariant bundle for a surface or surface-with-boundary. Component names
// come from (Euler characteristic, orientability, boundary count) and are
// joined with a disjoint-union sign.
inline SurfaceReport classify_surface(const FaceComplex& complex)
{
    if (complex.empty()) raise(errc::empty_input, "cannot classify an empty complex");
    if (!is_surface(complex))
        raise(errc::not_a_surface, "complex is not a surface or surface-with-boundary");

    SurfaceReport report;
    report.num_vertices = static_cast<int>(complex.vertices().size());
    report.num_edges = static_cast<int>(complex.edges().size());
    report.num_faces = static_cast<int>(complex.faces().size());
    report.euler_characteristic = euler_characteristic(complex);

    const auto comps = component_face_sets(complex);
    report.components = static_cast<int>(comps.size());
    std::string name;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        FaceComplex sub(complex.n(), comps[i]);
        const int chi = euler_characteristic(sub);
        const bool ori = is_orientable(sub);
        const int b = static_cast<int>(boundary_loops(sub).size());
        report.orientable = report.orientable && ori;
        report.boundary_components += b;
        if (i > 0) name += " ⊔ ";
        name += detail::component_name(chi, ori, b);
    }
    report.name = std::move(name);
    return report;
}

// The 6-face realization of the Möbius strip in Q^4.
inline FaceComplex builtin_moebius()
{
    const std::vector<std::string> faces = {"**11", "*01*", "00**", "*11*", "*1*0", "0**0"};
    std::vector<Cell> cells;
    cells.reserve(faces.size());
    for (const auto& s : faces) cells.push_back(parse_cell(s, 4));
    return FaceComplex(4, cells);
}

// Canonical torus: the 16 faces with one free axis in {1,3} and one in {2,4};
// it uses every vertex and every edge of Q^4.
inline FaceComplex builtin_torus()
{
    std::vector<Cell> cells;
    for (const Cell& f : enumerate_cells(4, 2)) {
        const auto stars = f.star_positions();
        const bool first = (stars[0] == 0 || stars[0] == 2) || (stars[1] == 0 || stars[1] == 2);
        const bool second = (stars[0] == 1 || stars[0] == 3) || (stars[1] == 1 || stars[1] == 3);
        if (first && second) cells.push_back(f);
    }
    return FaceComplex(4, cells);
}

// Boundary of the 3-cell 0***: the canonical single-cube sphere.
inline FaceComplex builtin_cube()
{
    return FaceComplex(4, boundary_cells(parse_cell("0***", 4), 2));
}

}  // namespace hypersurf
