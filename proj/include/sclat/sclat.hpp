#pragma once

#include "sclat/asc.hpp"
#include "sclat/axioms.hpp"
#include "sclat/error.hpp"
#include "sclat/extensions.hpp"
#include "sclat/generation.hpp"
#include "sclat/geometry.hpp"
#include "sclat/io.hpp"
#include "sclat/iso.hpp"
#include "sclat/lattice.hpp"
#include "sclat/random.hpp"
#include "sclat/report.hpp"
#include "sclat/sublattice.hpp"
