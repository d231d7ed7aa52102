#pragma once

#include "sclat/lattice.hpp"

namespace fx {

// p < c1, p < c2; dim p = 0, dim c1 = dim c2 = 1
inline sclat::IrrPoset poset_x() { return {{{"p", 0, {}}, {"c1", 1, {"p"}}, {"c2", 1, {"p"}}}, 1}; }
// p < c; q isolated; dim p = dim q = 0, dim c = 1
inline sclat::IrrPoset poset_y() { return {{{"p", 0, {}}, {"q", 0, {}}, {"c", 1, {"p"}}}, 1}; }
// 0 < g, dim g = 1
inline sclat::IrrPoset poset_g() { return {{{"g", 1, {}}}, 1}; }

inline sclat::Lattice lx() { return sclat::Lattice::from_poset(poset_x()); }
inline sclat::Lattice ly() { return sclat::Lattice::from_poset(poset_y()); }
inline sclat::Lattice lg() { return sclat::Lattice::from_poset(poset_g()); }

}  // namespace fx
