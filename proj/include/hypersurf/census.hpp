#pragma once

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "hypersurf/face_complex.hpp"
#include "hypersurf/face_set.hpp"

namespace hypersurf {

namespace detail {

inline int census_thread_count()
{
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("HYPERSURF_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && static_cast<unsigned long>(cap) < hw) hw = static_cast<unsigned>(cap);
    }
    if (hw > 64) hw = 64;
    return static_cast<int>(hw);
}

// Edge-regular subsets in [lo, hi): every one of the 32 edges lies in 0 or 2
// selected faces.
inline void scan_edge_regular(FaceMask lo, FaceMask hi, std::vector<FaceMask>& out)
{
    const auto& edge_faces = q4::tables().edge_faces;
    for (FaceMask m = lo; m < hi; ++m) {
        bool ok = true;
        for (int e = 0; e < q4::num_edges; ++e) {
            const int c = std::popcount(m & edge_faces[static_cast<std::size_t>(e)]);
            if (c == 1 || c == 3) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(m);
    }
}

}  // namespace detail

// All non-empty face subsets of Q^4 in which every edge of the closure lies
// in exactly two faces, ascending by 24-bit mask. The scan over all 2^24
// subsets partitions into contiguous ranges across worker threads; the
// concatenated result is identical to the sequential scan.
inline std::vector<FaceMask> edge_regular_masks()
{
    const int threads = detail::census_thread_count();
    const FaceMask first = 1;
    const FaceMask last = q4::all_faces_mask + 1u;  // exclusive
    if (threads <= 1) {
        std::vector<FaceMask> out;
        detail::scan_edge_regular(first, last, out);
        return out;
    }
    std::vector<std::vector<FaceMask>> parts(static_cast<std::size_t>(threads));
    std::vector<std::thread> pool;
    const std::uint64_t span = last - first;
    for (int t = 0; t < threads; ++t) {
        const FaceMask lo = first + static_cast<FaceMask>(span * static_cast<std::uint64_t>(t) /
                                                          static_cast<std::uint64_t>(threads));
        const FaceMask hi = first + static_cast<FaceMask>(span * (static_cast<std::uint64_t>(t) + 1) /
                                                          static_cast<std::uint64_t>(threads));
        pool.emplace_back(detail::scan_edge_regular, lo, hi,
                          std::ref(parts[static_cast<std::size_t>(t)]));
    }
    for (auto& th : pool) th.join();
    std::vector<FaceMask> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

// Masks of all closed cubical surfaces of Q^4: edge-regular subsets whose
// vertex links are all single cycles.
inline std::vector<FaceMask> closed_surface_masks()
{
    std::vector<FaceMask> out;
    for (FaceMask m : edge_regular_masks()) {
        const FaceComplex fc = FaceComplex::from_mask(m);
        bool ok = true;
        for (const Cell& v : fc.vertices())
            if (!detail::link_is_single_cycle(detail::vertex_link(fc, v))) {
                ok = false;
                break;
            }
        if (ok) out.push_back(m);
    }
    return out;
}

// The exhaustive census of closed cubical surfaces embeddable in the
// 2-skeleton of the tesseract; 127 complexes, ascending by mask.
inline std::vector<FaceComplex> enumerate_closed_surfaces(int n)
{
    if (n != 4)
        raise(errc::unsupported_dimension,
              "the closed-surface census is implemented for n=4 only, got n=" + std::to_string(n));
    std::vector<FaceComplex> out;
    for (FaceMask m : closed_surface_masks()) out.push_back(FaceComplex::from_mask(m));
    return out;
}

}  // namespace hypersurf
