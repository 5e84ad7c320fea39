#pragma once

#include <cstdint>
#include <vector>

#include "knotcolor/diagram.hpp"
#include "knotcolor/exactla.hpp"
#include "knotcolor/matrix.hpp"

namespace knotcolor {

// An n-coloring: a residue per strand, indexed like d.strands().
struct Coloring {
    std::uint64_t modulus = 1;
    std::vector<std::uint64_t> colors;

    bool operator==(const Coloring& o) const {
        return modulus == o.modulus && colors == o.colors;
    }
    bool is_trivial() const {
        for (auto c : colors)
            if (c != colors.front()) return false;
        return true;
    }
};

// Crossing equations in matrix form. pre_matrix is the c x c system (one row
// per crossing, one column per strand); matrix is pre_matrix with one row and
// one column deleted.
struct ColoringSystem {
    IntMatrix pre_matrix;
    std::size_t deleted_row = 0;
    std::size_t deleted_col = 0;
    IntMatrix matrix;
    std::vector<int> strand_order;
};

// Default cap on brute-force search work (explored assignments).
inline constexpr std::uint64_t kDefaultSearchCap = 10'000'000;

// Build the crossing-equation system. Row for crossing c reads
// x_under1 + x_under2 - 2*x_over = 0, coefficients merged when a strand
// repeats at the crossing. Pass row/col = -1 to delete the last of each.
ColoringSystem build_precoloring(const PlanarDiagram& d, int deleted_row = -1,
                                 int deleted_col = -1);

// |det| of the coloring matrix; 1 for the 0-crossing unknot.
mpz_class determinant(const PlanarDiagram& d);

// Mod-p nullity of the coloring matrix, p prime.
std::size_t nullity(const PlanarDiagram& d, std::uint64_t p);

// True if the coloring satisfies every crossing equation.
bool verify_coloring(const PlanarDiagram& d, const Coloring& col);

// All n-colorings (including the n trivial ones), sorted lexicographically.
std::vector<Coloring> colorings(const PlanarDiagram& d, std::uint64_t n,
                                std::uint64_t cap = kDefaultSolutionCap);

// Number of n-colorings without enumeration.
mpz_class coloring_count(const PlanarDiagram& d, std::uint64_t n);

// Exhaustive search oracle: checks assignments of colors to strands against
// the crossing equations directly, with no linear algebra. Ground truth for
// the counting operations. Throws SearchSpaceTooLarge when more than cap
// assignments would have to be examined.
std::vector<Coloring> brute_force_colorings(const PlanarDiagram& d, std::uint64_t n,
                                            std::uint64_t cap = kDefaultSearchCap);

// True iff a nontrivial n-coloring exists (n >= 2), decided from the Smith
// divisors of the coloring matrix.
bool is_n_colorable(const PlanarDiagram& d, std::uint64_t n);

// Nonunit Smith divisors of the coloring matrix: the coloring group is the
// direct sum of Z/d over these.
std::vector<mpz_class> coloring_group(const PlanarDiagram& d);

}  // namespace knotcolor
