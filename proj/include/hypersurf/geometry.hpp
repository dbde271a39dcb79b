#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "hypersurf/cell.hpp"
#include "hypersurf/errors.hpp"
#include "hypersurf/signed_permutation.hpp"

namespace hypersurf {

struct Point3 {
    double x = 0, y = 0, z = 0;

    friend Point3 operator-(const Point3& a, const Point3& b)
    {
        return {a.x - b.x, a.y - b.y, a.z - b.z};
    }
    double norm2() const { return x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm2()); }
};

struct Point4 {
    double x = 0, y = 0, z = 0, w = 0;

    double norm2() const { return x * x + y * y + z * z + w * w; }
    double norm() const { return std::sqrt(norm2()); }

    double operator[](int i) const
    {
        switch (i) {
            case 0: return x;
            case 1: return y;
            case 2: return z;
            default: return w;
        }
    }

    void set(int i, double v)
    {
        switch (i) {
            case 0: x = v; break;
            case 1: y = v; break;
            case 2: z = v; break;
            default: w = v; break;
        }
    }
};

inline constexpr double pole_tolerance = 1e-9;

// Translation taking the center of Q^4 to the origin.
inline Point4 tau(const Point4& p)
{
    return {p.x - 0.5, p.y - 0.5, p.z - 0.5, p.w - 0.5};
}

// Radial projection onto the unit hypersphere S^3.
inline Point4 rho(const Point4& p)
{
    const double n = p.norm();
    if (n == 0.0) raise(errc::zero_vector, "cannot radially project the origin");
    return {p.x / n, p.y / n, p.z / n, p.w / n};
}

// Stereographic projection from the pole (0,0,0,1):
// (x,y,z,w) -> (x/(1-w), y/(1-w), z/(1-w)).
inline Point3 stereo(const Point4& p)
{
    if (std::abs(p.w - 1.0) <= pole_tolerance)
        raise(errc::at_projection_pole, "point projects from the pole (0,0,0,1)");
    const double s = 1.0 / (1.0 - p.w);
    return {p.x * s, p.y * s, p.z * s};
}

// The isometry of Q^4 matching the cell action of g: coordinate j is routed
// to position image(j) and flipped output axes apply t -> 1-t.
inline Point4 transform_point(const SignedPermutation& g, const Point4& p)
{
    if (g.n() != 4) raise(errc::dimension_mismatch, "point transforms require n=4");
    Point4 out;
    for (int j = 0; j < 4; ++j) {
        const int i = g.image(j);
        const double v = p[j];
        out.set(i, g.flipped(i) ? 1.0 - v : v);
    }
    return out;
}

// Full pipeline for a point on the boundary of Q^4. The pre-rotation selects
// which 3-cell's center faces the pole; the identity projects from the center
// of the cube ***1.
inline Point3 project_point(const Point4& p, const SignedPermutation& rotation)
{
    return stereo(rho(tau(transform_point(rotation, p))));
}

inline Point3 project_point(const Point4& p)
{
    return stereo(rho(tau(p)));
}

// Affine embedding of the unit 3-cube onto a 3-cell of Q^4: (x,y,z) fills the
// free axes in ascending order, the fixed coordinate keeps its value.
class CubeEmbedding {
public:
    explicit CubeEmbedding(const Cell& cell3)
    {
        if (cell3.n() != 4 || cell3.dim() != 3)
            raise(errc::not_a_cube, "\"" + cell3.to_string() + "\" is not a 3-cell of Q^4");
        cell_ = cell3;
        const auto stars = cell3.star_positions();
        axes_ = {stars[0], stars[1], stars[2]};
        for (int i = 0; i < 4; ++i)
            if (cell3.entry(i) != Trit::star) {
                fixed_pos_ = i;
                fixed_val_ = (cell3.entry(i) == Trit::one) ? 1.0 : 0.0;
            }
    }

    const Cell& cell() const { return cell_; }

    Point4 operator()(double x, double y, double z) const
    {
        Point4 p;
        p.set(fixed_pos_, fixed_val_);
        p.set(axes_[0], x);
        p.set(axes_[1], y);
        p.set(axes_[2], z);
        return p;
    }

private:
    Cell cell_;
    std::array<int, 3> axes_{};
    int fixed_pos_ = 0;
    double fixed_val_ = 0;
};

inline CubeEmbedding cube_embedding(const Cell& cell3) { return CubeEmbedding(cell3); }

}  // namespace hypersurf
