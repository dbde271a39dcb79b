#pragma once

#include "hypersurf/cell.hpp"
#include "hypersurf/census.hpp"
#include "hypersurf/classify.hpp"
#include "hypersurf/errors.hpp"
#include "hypersurf/face_complex.hpp"
#include "hypersurf/face_set.hpp"
#include "hypersurf/geometry.hpp"
#include "hypersurf/json_io.hpp"
#include "hypersurf/mesh.hpp"
#include "hypersurf/obj_io.hpp"
#include "hypersurf/signed_permutation.hpp"
#include "hypersurf/version.hpp"
