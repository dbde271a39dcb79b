#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "hypersurf/cell.hpp"
#include "hypersurf/errors.hpp"

namespace hypersurf {

// An element of the hyperoctahedral group B_n, stored as a coordinate
// permutation plus a flip mask. Coordinate j of the input is routed to
// coordinate image(j) of the output; a flipped output coordinate swaps
// 0 <-> 1 and fixes stars. Equivalently the signed permutation matrix with
// entry +-1 in row image(j), column j.
class SignedPermutation {
public:
    SignedPermutation() = default;

    // image is 0-indexed: image[j] = output position of coordinate j.
    // flips[i] applies to output coordinate i.
    SignedPermutation(const std::vector<int>& image, const std::vector<bool>& flips)
    {
        const int n = static_cast<int>(image.size());
        if (n < 1 || n > max_cube_dim)
            raise(errc::invalid_permutation, "permutation size must be in [1,8]");
        if (static_cast<int>(flips.size()) != n)
            raise(errc::invalid_permutation, "flip mask size does not match permutation size");
        std::array<bool, max_cube_dim> seen{};
        n_ = static_cast<std::uint8_t>(n);
        for (int j = 0; j < n; ++j) {
            const int i = image[static_cast<std::size_t>(j)];
            if (i < 0 || i >= n || seen[static_cast<std::size_t>(i)])
                raise(errc::invalid_permutation, "image is not a bijection on {0..n-1}");
            seen[static_cast<std::size_t>(i)] = true;
            image_[j] = static_cast<std::uint8_t>(i);
        }
        for (int i = 0; i < n; ++i)
            if (flips[static_cast<std::size_t>(i)]) flips_ |= static_cast<std::uint8_t>(1u << i);
    }

    static SignedPermutation identity(int n)
    {
        if (n < 1 || n > max_cube_dim)
            raise(errc::invalid_permutation, "group dimension must be in [1,8]");
        SignedPermutation g;
        g.n_ = static_cast<std::uint8_t>(n);
        for (int j = 0; j < n; ++j) g.image_[j] = static_cast<std::uint8_t>(j);
        return g;
    }

    int n() const { return n_; }

    int image(int j) const { return image_[j]; }

    int preimage(int i) const
    {
        for (int j = 0; j < n_; ++j)
            if (image_[j] == i) return j;
        return -1;
    }

    bool flipped(int i) const { return (flips_ >> i) & 1u; }

    bool is_identity() const
    {
        if (flips_ != 0) return false;
        for (int j = 0; j < n_; ++j)
            if (image_[j] != j) return false;
        return true;
    }

    // result[i] = flip_i(cell[preimage(i)]); stars are fixed by flips.
    Cell apply(const Cell& cell) const
    {
        if (cell.n() != n_)
            raise(errc::dimension_mismatch, "cell dimension does not match group dimension");
        Cell out = cell;
        for (int j = 0; j < n_; ++j) {
            Trit v = cell.entry(j);
            const int i = image_[j];
            if (flipped(i) && v != Trit::star) v = (v == Trit::zero) ? Trit::one : Trit::zero;
            out.set_entry(i, v);
        }
        return out;
    }

    // this o other: apply other first, then this.
    SignedPermutation compose(const SignedPermutation& other) const
    {
        if (n_ != other.n_)
            raise(errc::dimension_mismatch, "cannot compose elements of different groups");
        SignedPermutation r;
        r.n_ = n_;
        for (int j = 0; j < n_; ++j) {
            const int m = other.image_[j];
            const int i = image_[m];
            r.image_[j] = static_cast<std::uint8_t>(i);
            if (flipped(i) != other.flipped(m)) r.flips_ |= static_cast<std::uint8_t>(1u << i);
        }
        return r;
    }

    SignedPermutation inverse() const
    {
        SignedPermutation r;
        r.n_ = n_;
        for (int j = 0; j < n_; ++j) {
            const int i = image_[j];
            r.image_[i] = static_cast<std::uint8_t>(j);
            if (flipped(i)) r.flips_ |= static_cast<std::uint8_t>(1u << j);
        }
        return r;
    }

    // Unique per element for fixed n; used for dedup and hashing.
    std::uint64_t dense_key() const
    {
        std::uint64_t key = 0;
        for (int j = 0; j < n_; ++j) key = key * 8 + image_[j];
        key = (key << 8) | flips_;
        key = (key << 4) | n_;
        return key;
    }

    friend bool operator==(const SignedPermutation& a, const SignedPermutation& b)
    {
        if (a.n_ != b.n_ || a.flips_ != b.flips_) return false;
        for (int j = 0; j < a.n_; ++j)
            if (a.image_[j] != b.image_[j]) return false;
        return true;
    }

private:
    std::array<std::uint8_t, max_cube_dim> image_{};
    std::uint8_t flips_ = 0;
    std::uint8_t n_ = 0;
};

inline Cell apply(const SignedPermutation& g, const Cell& cell) { return g.apply(cell); }

// Visits all 2^n n! elements in a fixed order: permutations lexicographically
// from the identity, flip masks counting up within each permutation. The
// identity is visited first.
template <typename Fn>
void for_each_group_element(int n, Fn&& fn)
{
    if (n < 1 || n > max_cube_dim)
        raise(errc::invalid_dimension, "group dimension must be in [1,8]");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<bool> flips(static_cast<std::size_t>(n), false);
    do {
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            for (int i = 0; i < n; ++i) flips[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
            fn(SignedPermutation(perm, flips));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

inline std::vector<SignedPermutation> group_elements(int n)
{
    std::vector<SignedPermutation> elems;
    std::size_t count = 1u << n;
    for (int f = 2; f <= n; ++f) count *= static_cast<std::size_t>(f);
    elems.reserve(count);
    for_each_group_element(n, [&](const SignedPermutation& g) { elems.push_back(g); });
    return elems;
}

// Image of a face set under g, sorted by cell id. The action is injective on
// cells, so the image has the same cardinality.
inline std::vector<Cell> apply_to_face_set(const SignedPermutation& g,
                                           const std::vector<Cell>& faces)
{
    std::vector<Cell> out;
    out.reserve(faces.size());
    for (const Cell& f : faces) out.push_back(g.apply(f));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hypersurf
