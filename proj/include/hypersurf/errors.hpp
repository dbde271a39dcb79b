#pragma once

#include <stdexcept>
#include <string>

namespace hypersurf {

enum class errc {
    wrong_length,
    invalid_character,
    invalid_dimension,
    dimension_mismatch,
    invalid_permutation,
    not_a_face,
    not_a_cube,
    not_a_surface,
    empty_input,
    vertex_not_in_complex,
    unsupported_dimension,
    invalid_subdivision,
    zero_vector,
    at_projection_pole,
    io_failure,
};

inline const char* errc_name(errc c)
{
    switch (c) {
        case errc::wrong_length: return "wrong_length";
        case errc::invalid_character: return "invalid_character";
        case errc::invalid_dimension: return "invalid_dimension";
        case errc::dimension_mismatch: return "dimension_mismatch";
        case errc::invalid_permutation: return "invalid_permutation";
        case errc::not_a_face: return "not_a_face";
        case errc::not_a_cube: return "not_a_cube";
        case errc::not_a_surface: return "not_a_surface";
        case errc::empty_input: return "empty_input";
        case errc::vertex_not_in_complex: return "vertex_not_in_complex";
        case errc::unsupported_dimension: return "unsupported_dimension";
        case errc::invalid_subdivision: return "invalid_subdivision";
        case errc::zero_vector: return "zero_vector";
        case errc::at_projection_pole: return "at_projection_pole";
        case errc::io_failure: return "io_failure";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code)
    {
    }

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message)
{
    throw Error(code, message);
}

}  // namespace hypersurf
