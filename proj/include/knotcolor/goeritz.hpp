#pragma once

#include <cstdint>
#include <vector>

#include "knotcolor/coloring.hpp"
#include "knotcolor/diagram.hpp"
#include "knotcolor/exactla.hpp"
#include "knotcolor/matrix.hpp"

namespace knotcolor {

// Goeritz system over the shaded regions. pre_matrix is symmetric with zero
// row/column sums: off-diagonal (i,j) sums eta(c) over crossings where the
// two regions meet. region_order lists shaded region ids, base region first.
struct GoeritzSystem {
    IntMatrix pre_matrix;
    std::size_t deleted_row = 0;
    std::size_t deleted_col = 0;
    IntMatrix matrix;
    std::vector<int> region_order;
};

// Differences d(R_i, R_j) between all region pairs for one coloring:
// the alternating sum (first crossing counted positive) of strand colors
// along any generic arc from R_i to R_j.
struct DifferenceTable {
    std::uint64_t modulus = 1;
    int base_region = 0;
    std::vector<std::vector<std::uint64_t>> d;

    std::uint64_t at(int i, int j) const { return d.at(i).at(j); }
};

// The base shaded region (smallest boundary edge label) followed by the
// remaining shaded regions in id order.
std::vector<int> goeritz_region_order(const RegionComplex& rc);

// Lowest-id strand on the boundary of the base shaded region.
int base_strand(const PlanarDiagram& d, const RegionComplex& rc);

GoeritzSystem build_goeritz(const RegionComplex& rc, int deleted_row = -1,
                            int deleted_col = -1);

// |det| of the Goeritz matrix; independent of deleted row/column and of the
// shading choice. 1 for the 0-crossing unknot.
mpz_class goeritz_determinant(const RegionComplex& rc);

// Mod-p nullity of the Goeritz matrix.
std::size_t goeritz_nullity(const RegionComplex& rc, std::uint64_t p);

// Difference table of a valid coloring. Path-independence is verified over
// every fundamental cycle of the region dual graph.
DifferenceTable differences(const PlanarDiagram& d, const RegionComplex& rc,
                            const Coloring& col);

// v_i = d(R_base, R_i) over the shaded regions (first entry 0); satisfies
// pre_goeritz * v = 0 mod n.
ModVector coloring_to_goeritz(const PlanarDiagram& d, const RegionComplex& rc,
                              const Coloring& col);

// Rebuild the coloring from a nullspace vector of the pre-Goeritz matrix and
// the color of the base strand. Inverse of coloring_to_goeritz.
Coloring goeritz_to_coloring(const PlanarDiagram& d, const RegionComplex& rc,
                             const ModVector& v, std::uint64_t base_color);

}  // namespace knotcolor
