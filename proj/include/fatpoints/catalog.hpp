#pragma once

#include "fatpoints/geometry.hpp"

namespace fatpoints::catalog {

/// ([1:0],[1:0]).
FatPointConfig single_point();

/// ([1:0],[1:0]), ([1:0],[1:1]), ([1:1],[1:0]), ([0:1],[1:1]): alpha* grows
/// by exactly 1 for m = 1..5 although alpha*(I) = 2.
FatPointConfig five_jumps_sharp();

/// Affine (0,0), (1,1), (1,2), (2,2), (3,0), (3,3): alpha+ goes 4 -> 6.
FatPointConfig plus_jump_two();

/// {0..a-1} x {0..b-1}.
FatPointConfig grid(int a, int b);

/// The (a,a) grid without (0,0).
FatPointConfig grid_minus_point(int a);

}  // namespace fatpoints::catalog
