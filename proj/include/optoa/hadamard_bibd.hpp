#pragma once

#include "optoa/designs.hpp"

namespace optoa {

// Sylvester doubling, Paley I (q = order-1 prime, q = 3 mod 4), Paley II
// (q = order/2-1 prime, q = 1 mod 4) and Kronecker products of those.
// Throws Error(unreachable) for orders outside that set.
HadamardMatrix hadamard(int order);

// Normalize (columns first, then rows), drop the first row and column and map
// +1 -> 1, -1 -> 0. Order 8t+4 gives a symmetric (8t+3, 4t+1, 2t) design.
BlockDesign hadamard_to_symmetric_bibd(const HadamardMatrix& h);

// Derived design on the points of block `block_index`, then every block
// complemented within those points: (4t+1, 2t+1, 2t+1) with 8t+2 blocks.
BlockDesign derived_then_complement(const BlockDesign& d, int block_index = 0);

// Two all-zero rows on top of the incidence matrix: a basic OA_{2t+1}(4t+1, 2).
OrthogonalArray bibd_to_oa(const BlockDesign& d);

// Inverse of bibd_to_oa: strips the two all-zero rows.
BlockDesign oa_to_bibd(const OrthogonalArray& a);

}  // namespace optoa
