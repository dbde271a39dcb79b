#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "hypersurf/census.hpp"
#include "hypersurf/face_complex.hpp"
#include "hypersurf/face_set.hpp"

namespace hypersurf {

struct SurfaceClass {
    std::string label;
    std::vector<Cell> canonical;  // orbit representative: the canonical form
    FaceMask canonical_mask = 0;
    int orbit_size = 0;           // full B_4 orbit size (orbit-stabilizer scan)
    int members_in_input = 0;     // how many input complexes fell into this class
    SurfaceReport report;         // invariants of the canonical representative
};

// Group complexes into B_4 orbits keyed by canonical form. Sphere classes are
// labelled A..F by (orbit size, face count, canonical form); the torus class
// is G and the disjoint-spheres class is H. The labels are a convention of
// this tool: orbit sizes alone cannot distinguish the three 24-representative
// sphere classes.
inline std::vector<SurfaceClass> classify_all(const std::vector<FaceComplex>& surfaces)
{
    std::map<FaceMask, SurfaceClass> by_canonical;
    for (const FaceComplex& fc : surfaces) {
        if (fc.n() != 4)
            raise(errc::unsupported_dimension, "classification is implemented for n=4 only");
        const FaceMask canon = q4::canonical_mask(fc.mask());
        auto it = by_canonical.find(canon);
        if (it == by_canonical.end()) {
            SurfaceClass cls;
            cls.canonical_mask = canon;
            cls.canonical = q4::faces_of(canon);
            cls.orbit_size = static_cast<int>(q4::orbit_info(canon).members.size());
            cls.report = classify_surface(FaceComplex::from_mask(canon));
            cls.members_in_input = 1;
            by_canonical.emplace(canon, std::move(cls));
        } else {
            ++it->second.members_in_input;
        }
    }

    std::vector<SurfaceClass> spheres, others;
    for (auto& [canon, cls] : by_canonical) {
        if (cls.report.name == "S2")
            spheres.push_back(std::move(cls));
        else
            others.push_back(std::move(cls));
    }
    auto key = [](const SurfaceClass& c) {
        return std::make_tuple(c.orbit_size, c.report.num_faces, c.canonical_mask);
    };
    std::sort(spheres.begin(), spheres.end(),
              [&](const SurfaceClass& a, const SurfaceClass& b) { return key(a) < key(b); });
    // torus class ahead of the disjoint unions, then by name
    auto other_rank = [](const SurfaceClass& c) { return c.report.name == "T2" ? 0 : 1; };
    std::sort(others.begin(), others.end(), [&](const SurfaceClass& a, const SurfaceClass& b) {
        if (other_rank(a) != other_rank(b)) return other_rank(a) < other_rank(b);
        if (a.report.name != b.report.name) return a.report.name < b.report.name;
        return key(a) < key(b);
    });

    std::vector<SurfaceClass> out;
    out.reserve(spheres.size() + others.size());
    char label = 'A';
    for (auto& c : spheres) {
        c.label = std::string(1, label++);
        out.push_back(std::move(c));
    }
    for (auto& c : others) {
        c.label = std::string(1, label++);
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace hypersurf
