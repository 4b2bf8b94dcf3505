#pragma once

#include "supercatalan/combinatorics.hpp"
#include "supercatalan/cube_spectrum.hpp"
#include "supercatalan/errors.hpp"
#include "supercatalan/exact.hpp"
#include "supercatalan/involution_search.hpp"
#include "supercatalan/krawtchouk.hpp"
#include "supercatalan/lattice_paths.hpp"
#include "supercatalan/super_catalan.hpp"
#include "supercatalan/version.hpp"
