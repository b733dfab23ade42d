#pragma once

#include "rpdecay/grid.hpp"

namespace rpdecay {

// Second-order diamond evolution of d_u d_v psi = -V_ell psi.
//
// Interior update over the cell {S,W,E,N}:
//   psi_N = psi_E + psi_W - psi_S - (h^2/2) V(r_c) (psi_E + psi_W)/1 ... see
// evolve.cpp; the (psi_E + psi_W)/2 average at the cell centre keeps the
// local truncation at O(h^4).
//
// Minkowski grids whose rectangle touches the axis v = u evolve on the
// triangle {v >= u} with the reflection boundary psi(v = u) = 0; nodes below
// the axis are kept at 0. This requires (v0 - u0)/h to be an integer.
ModeField evolve(const BackgroundSpec& bg, int ell, const NullGrid& grid,
                 const CharacteristicData& data);

// log2 ratio of successive-coarsening differences on common nodes at h, h/2,
// h/4. Returns +inf-flagged "exact" case as infinity when the h vs h/2
// difference is at rounding level.
double convergence_order(const BackgroundSpec& bg, int ell, const CharacteristicData& data,
                         const NullGrid& base_grid);

}  // namespace rpdecay
