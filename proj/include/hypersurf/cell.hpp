#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hypersurf/errors.hpp"

namespace hypersurf {

// A coordinate entry of a cube cell in star notation: fixed at 0, fixed at 1,
// or free (the whole unit interval in that direction).
enum class Trit : std::uint8_t { zero = 0, one = 1, star = 2 };

inline constexpr int min_cube_dim = 2;
inline constexpr int max_cube_dim = 8;

// Dense base-3 encoding of a cell. Digit order is coordinate order with
// coordinate 1 as the most significant digit; zero->0, one->1, star->2.
using CellId = std::uint16_t;

namespace detail {
inline constexpr std::array<std::uint16_t, 9> pow3 = {1, 3, 9, 27, 81, 243, 729, 2187, 6561};

inline void check_ambient_dim(int n)
{
    if (n < min_cube_dim || n > max_cube_dim)
        raise(errc::invalid_dimension,
              "ambient dimension must be in [2,8], got " + std::to_string(n));
}
}  // namespace detail

// A cell of the n-cube Q^n in star notation. The dimension of the cell is the
// number of star entries: vertices have none, edges one, faces two.
class Cell {
public:
    Cell() = default;

    static Cell parse(std::string_view text, int n)
    {
        detail::check_ambient_dim(n);
        if (static_cast<int>(text.size()) != n)
            raise(errc::wrong_length, "expected " + std::to_string(n) + " characters, got \"" +
                                          std::string(text) + "\"");
        Cell c;
        c.n_ = static_cast<std::uint8_t>(n);
        for (int i = 0; i < n; ++i) {
            switch (text[static_cast<std::size_t>(i)]) {
                case '0': c.entries_[i] = Trit::zero; break;
                case '1': c.entries_[i] = Trit::one; break;
                case '*': c.entries_[i] = Trit::star; break;
                default:
                    raise(errc::invalid_character,
                          "cell text must use only '0', '1', '*': \"" + std::string(text) + "\"");
            }
        }
        return c;
    }

    static Cell from_id(CellId id, int n)
    {
        detail::check_ambient_dim(n);
        Cell c;
        c.n_ = static_cast<std::uint8_t>(n);
        for (int i = n - 1; i >= 0; --i) {
            c.entries_[i] = static_cast<Trit>(id % 3);
            id = static_cast<CellId>(id / 3);
        }
        return c;
    }

    int n() const { return n_; }

    int dim() const
    {
        int d = 0;
        for (int i = 0; i < n_; ++i)
            if (entries_[i] == Trit::star) ++d;
        return d;
    }

    Trit entry(int i) const { return entries_[i]; }

    void set_entry(int i, Trit t) { entries_[i] = t; }

    CellId id() const
    {
        CellId v = 0;
        for (int i = 0; i < n_; ++i)
            v = static_cast<CellId>(v * 3 + static_cast<CellId>(entries_[i]));
        return v;
    }

    std::string to_string() const
    {
        std::string s(static_cast<std::size_t>(n_), '?');
        for (int i = 0; i < n_; ++i) {
            switch (entries_[i]) {
                case Trit::zero: s[static_cast<std::size_t>(i)] = '0'; break;
                case Trit::one: s[static_cast<std::size_t>(i)] = '1'; break;
                case Trit::star: s[static_cast<std::size_t>(i)] = '*'; break;
            }
        }
        return s;
    }

    std::vector<int> star_positions() const
    {
        std::vector<int> pos;
        for (int i = 0; i < n_; ++i)
            if (entries_[i] == Trit::star) pos.push_back(i);
        return pos;
    }

    friend bool operator==(const Cell& a, const Cell& b)
    {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

    // Orders by ambient dimension, then by dense id. On cell strings of equal
    // n this is exactly the character order '0' < '1' < '*'.
    friend std::strong_ordering operator<=>(const Cell& a, const Cell& b)
    {
        if (a.n_ != b.n_) return a.n_ <=> b.n_;
        return a.id() <=> b.id();
    }

private:
    std::array<Trit, max_cube_dim> entries_{};
    std::uint8_t n_ = 0;
};

inline Cell parse_cell(std::string_view text, int n) { return Cell::parse(text, n); }

inline std::string format_cell(const Cell& c) { return c.to_string(); }

inline int dim(const Cell& c) { return c.dim(); }

// All cells of Q^n in ascending id order; 3^n of them.
inline std::vector<Cell> enumerate_cells(int n)
{
    detail::check_ambient_dim(n);
    const int total = detail::pow3[static_cast<std::size_t>(n)];
    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(total));
    for (int id = 0; id < total; ++id) cells.push_back(Cell::from_id(static_cast<CellId>(id), n));
    return cells;
}

// All k-dimensional cells of Q^n in ascending id order.
inline std::vector<Cell> enumerate_cells(int n, int k)
{
    detail::check_ambient_dim(n);
    if (k < 0 || k > n)
        raise(errc::invalid_dimension,
              "cell dimension " + std::to_string(k) + " out of range for n=" + std::to_string(n));
    std::vector<Cell> cells;
    const int total = detail::pow3[static_cast<std::size_t>(n)];
    for (int id = 0; id < total; ++id) {
        Cell c = Cell::from_id(static_cast<CellId>(id), n);
        if (c.dim() == k) cells.push_back(c);
    }
    return cells;
}

// True iff a lies in the (closed) cell b: every coordinate of b is either a
// star or equal to the corresponding coordinate of a.
inline bool is_subcell(const Cell& a, const Cell& b)
{
    if (a.n() != b.n())
        raise(errc::dimension_mismatch, "cells live in different ambient cubes");
    for (int i = 0; i < a.n(); ++i) {
        if (b.entry(i) == Trit::star) continue;
        if (a.entry(i) != b.entry(i)) return false;
    }
    return true;
}

// All k-dimensional subcells of cell, each exactly once, ascending id order.
inline std::vector<Cell> boundary_cells(const Cell& cell, int k)
{
    const int d = cell.dim();
    if (k < 0 || k > d)
        raise(errc::invalid_dimension, "boundary dimension " + std::to_string(k) +
                                           " out of range for a " + std::to_string(d) + "-cell");
    const std::vector<int> stars = cell.star_positions();
    std::vector<Cell> out;
    // Keep a k-subset of the stars, fix the remaining d-k stars to 0/1.
    for (std::uint32_t keep = 0; keep < (1u << d); ++keep) {
        if (std::popcount(keep) != k) continue;
        std::vector<int> fixed;
        for (int s = 0; s < d; ++s)
            if (!(keep & (1u << s))) fixed.push_back(stars[static_cast<std::size_t>(s)]);
        const int m = static_cast<int>(fixed.size());
        for (std::uint32_t bits = 0; bits < (1u << m); ++bits) {
            Cell sub = cell;
            for (int t = 0; t < m; ++t)
                sub.set_entry(fixed[static_cast<std::size_t>(t)],
                              (bits & (1u << t)) ? Trit::one : Trit::zero);
            out.push_back(sub);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// All k-dimensional cells of Q^n that contain cell, ascending id order.
inline std::vector<Cell> cofaces(const Cell& cell, int k)
{
    const int d = cell.dim();
    const int n = cell.n();
    if (k < d || k > n)
        raise(errc::invalid_dimension, "coface dimension " + std::to_string(k) +
                                           " out of range for a " + std::to_string(d) + "-cell");
    std::vector<int> fixed;
    for (int i = 0; i < n; ++i)
        if (cell.entry(i) != Trit::star) fixed.push_back(i);
    const int m = static_cast<int>(fixed.size());
    const int extra = k - d;
    std::vector<Cell> out;
    for (std::uint32_t bits = 0; bits < (1u << m); ++bits) {
        if (std::popcount(bits) != extra) continue;
        Cell up = cell;
        for (int t = 0; t < m; ++t)
            if (bits & (1u << t)) up.set_entry(fixed[static_cast<std::size_t>(t)], Trit::star);
        out.push_back(up);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// The 4 corners of a 2-face in cyclic order. On the face's two free axes
// (star positions sorted ascending) the corners are visited as
// (0,0), (1,0), (1,1), (0,1); consecutive corners differ in one coordinate.
inline std::array<Cell, 4> face_vertex_cycle(const Cell& face)
{
    if (face.dim() != 2)
        raise(errc::not_a_face, "expected a 2-face, got \"" + face.to_string() + "\"");
    const std::vector<int> stars = face.star_positions();
    const int a = stars[0];
    const int b = stars[1];
    constexpr std::array<std::array<Trit, 2>, 4> corners = {{
        {Trit::zero, Trit::zero},
        {Trit::one, Trit::zero},
        {Trit::one, Trit::one},
        {Trit::zero, Trit::one},
    }};
    std::array<Cell, 4> cycle;
    for (int c = 0; c < 4; ++c) {
        Cell v = face;
        v.set_entry(a, corners[static_cast<std::size_t>(c)][0]);
        v.set_entry(b, corners[static_cast<std::size_t>(c)][1]);
        cycle[static_cast<std::size_t>(c)] = v;
    }
    return cycle;
}

}  // namespace hypersurf
