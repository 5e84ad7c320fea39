#pragma once

#include <cstdint>
#include <vector>

#include "knotcolor/matrix.hpp"

namespace knotcolor {

// Default cap on the number of vectors an enumeration is allowed to return.
// Counting questions never enumerate; they use divisor arithmetic instead.
inline constexpr std::uint64_t kDefaultSolutionCap = 1'000'000;

bool is_prime(std::uint64_t n);

// Exact signed determinant by fraction-free (Bareiss) elimination.
mpz_class det(const IntMatrix& m);

// (-1)^(i+j) * det of m with row i and column j removed. Indices 0-based.
mpz_class cofactor(const IntMatrix& m, std::size_t i, std::size_t j);

struct ModNullspace {
    std::size_t nullity = 0;
    std::vector<ModVector> basis;
};

// Nullspace of m over the field with p elements, p prime.
ModNullspace nullspace_mod_p(const IntMatrix& m, std::uint64_t p);

// Smith normal form: u * m * v = diag(divisors), with u, v unimodular and
// d_i | d_{i+1}, all divisors >= 0. The divisor list always has
// min(rows, cols) entries, padded with zeros when the rank is deficient.
struct SmithForm {
    std::vector<mpz_class> divisors;
    IntMatrix u;
    IntMatrix v;
};

SmithForm smith_normal_form(const IntMatrix& m);

// Number of solutions of m*x = 0 over Z/nZ, via Smith divisors.
mpz_class count_solutions_mod_n(const IntMatrix& m, std::uint64_t n);

// The full solution set of m*x = 0 over Z/nZ, n >= 1, sorted
// lexicographically. Throws SolutionSetTooLarge when the count exceeds cap.
std::vector<ModVector> solve_mod_n(const IntMatrix& m, std::uint64_t n,
                                   std::uint64_t cap = kDefaultSolutionCap);

}  // namespace knotcolor
