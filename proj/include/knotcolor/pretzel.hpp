#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "knotcolor/coloring.hpp"
#include "knotcolor/diagram.hpp"
#include "knotcolor/matrix.hpp"

namespace knotcolor {

// Half-twist counts (q_1,...,q_m), all nonzero, m >= 1.
struct PretzelSpec {
    std::vector<long long> q;

    // Parse "P(3,3,-3)"-style text.
    static PretzelSpec parse(const std::string& text);
    std::string to_string() const;
    std::size_t twist_regions() const { return q.size(); }
    int crossing_count() const;
};

// The linear system in the twist-region difference variables d_i:
// row 0 is d_1 + ... + d_m = 0, row i is -q_1 d_1 + q_{i+1} d_{i+1} = 0.
struct PretzelSystem {
    IntMatrix a;
    PretzelSpec spec;
};

PretzelSystem build_A(const PretzelSpec& spec);

// |q_1...q_m (1/q_1 + ... + 1/q_m)| = |sum_i prod_{j != i} q_j|, exact.
mpz_class pretzel_determinant(const PretzelSpec& spec);

// Mod-p nullity of A in closed form: with k = #{i : p | q_i}, the nullity is
// k - 1 when k >= 1, otherwise 1 or 0 as p divides the determinant or not.
std::size_t pretzel_nullity(const PretzelSpec& spec, std::uint64_t p);

// Standard diagram with sum |q_i| crossings: m twist columns, tops and
// bottoms joined cyclically. Throws NotAKnot when the closure has more than
// one component (e.g. P(2,2)).
PlanarDiagram pretzel_diagram(const PretzelSpec& spec);

// True when the closure is a single component.
bool closes_to_knot(const PretzelSpec& spec);

// Color the generated diagram from a nullspace vector of A: base is the
// color of the top-left strand of the first twist region, and dvec gives the
// vertical color step in each twist region. Linear in (dvec, base).
Coloring pretzel_coloring_correspondence(const PretzelSpec& spec, std::uint64_t n,
                                         const ModVector& dvec, std::uint64_t base);

}  // namespace knotcolor
