#include <doctest.h>

#include <random>

#include "knotcolor/exactla.hpp"

using namespace knotcolor;

namespace {

IntMatrix random_zero_sum_matrix(std::mt19937_64& rng, std::size_t n) {
    // random interior, last row/column adjusted so all rows and columns sum
    // to zero
    std::uniform_int_distribution<long> entry(-9, 9);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = 0; j + 1 < n; ++j) m.at(i, j) = entry(rng);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        mpz_class s = 0;
        for (std::size_t j = 0; j + 1 < n; ++j) s += m.at(i, j);
        m.at(i, n - 1) = -s;
    }
    for (std::size_t j = 0; j < n; ++j) {
        mpz_class s = 0;
        for (std::size_t i = 0; i + 1 < n; ++i) s += m.at(i, j);
        m.at(n - 1, j) = -s;
    }
    return m;
}

mpz_class det_by_expansion(const IntMatrix& m) {
    // cofactor expansion along the first row; independent check for Bareiss
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    mpz_class sum = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        mpz_class term = m.at(0, j) * det_by_expansion(m.without_row_col(0, j));
        sum += (j % 2 == 0) ? term : mpz_class(-term);
    }
    return sum;
}

}  // namespace

TEST_CASE("determinant of small matrices") {
    CHECK(det(IntMatrix::from_rows({{4, -3}, {-3, 5}})) == 11);
    CHECK(det(IntMatrix()) == 1);
    CHECK(det(IntMatrix::from_rows({{1, 0, 1}, {0, -2, 1}, {1, 1, -2}})) == 5);
    CHECK(det(IntMatrix::from_rows({{0, 1}, {1, 0}})) == -1);
    CHECK(det(IntMatrix::identity(5)) == 1);
    CHECK_THROWS_AS(det(IntMatrix(2, 3)), NotSquare);
}

TEST_CASE("determinant with a repeated row vanishes") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> entry(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 2 + trial % 4;
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = entry(rng);
        for (std::size_t j = 0; j < n; ++j) m.at(n - 1, j) = m.at(0, j);
        CHECK(det(m) == 0);
    }
}

TEST_CASE("Bareiss agrees with cofactor expansion") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> entry(-9, 9);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + trial % 5;
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = entry(rng);
        CHECK(det(m) == det_by_expansion(m));
    }
}

TEST_CASE("cofactor basics") {
    CHECK(cofactor(IntMatrix::identity(2), 0, 1) == 0);
    IntMatrix ex1 = IntMatrix::from_rows(
        {{1, -2, 1, 0}, {-2, 1, 0, 1}, {1, 0, -2, 1}, {0, 1, 1, -2}});
    CHECK(abs(cofactor(ex1, 0, 0)) == 5);
    CHECK_THROWS_AS(cofactor(ex1, 4, 0), IndexOutOfRange);
}

TEST_CASE("all cofactors equal for zero row/column sums") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 2 + trial % 5;
        IntMatrix m = random_zero_sum_matrix(rng, n);
        mpz_class first = cofactor(m, 0, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) CHECK(cofactor(m, i, j) == first);
    }
}

TEST_CASE("nullspace mod p") {
    IntMatrix zero(3, 3);
    auto ns = nullspace_mod_p(zero, 2);
    CHECK(ns.nullity == 3);

    IntMatrix fig8c = IntMatrix::from_rows({{-2, 1, 1}, {1, 0, -2}, {0, -2, 1}});
    CHECK(nullspace_mod_p(fig8c, 5).nullity == 1);
    CHECK(nullspace_mod_p(fig8c, 3).nullity == 0);

    // basis vectors actually lie in the kernel
    auto n5 = nullspace_mod_p(fig8c, 5);
    for (const auto& v : n5.basis) {
        for (std::size_t i = 0; i < 3; ++i) {
            std::uint64_t acc = 0;
            for (std::size_t j = 0; j < 3; ++j) {
                std::uint64_t e = mpz_fdiv_ui(fig8c.at(i, j).get_mpz_t(), 5);
                acc = (acc + e * v.entries[j]) % 5;
            }
            CHECK(acc == 0);
        }
    }
    CHECK_THROWS_AS(nullspace_mod_p(zero, 4), NotPrime);
}

TEST_CASE("smith normal form") {
    SUBCASE("identity") {
        auto f = smith_normal_form(IntMatrix::identity(4));
        for (const auto& d : f.divisors) CHECK(d == 1);
    }
    SUBCASE("already diagonal") {
        auto f = smith_normal_form(IntMatrix::from_rows({{2, 0}, {0, 4}}));
        CHECK(f.divisors == std::vector<mpz_class>{2, 4});
    }
    SUBCASE("figure-eight coloring matrix") {
        auto f = smith_normal_form(IntMatrix::from_rows({{-2, 1, 1}, {1, 0, -2}, {0, -2, 1}}));
        CHECK(f.divisors == std::vector<mpz_class>{1, 1, 5});
    }
    SUBCASE("u * m * v = diag and unimodularity, random matrices") {
        std::mt19937_64 rng(17);
        std::uniform_int_distribution<long> entry(-9, 9);
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        for (int trial = 0; trial < 80; ++trial) {
            IntMatrix m(dim(rng), dim(rng));
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
            auto f = smith_normal_form(m);
            CHECK(abs(det(f.u)) == 1);
            CHECK(abs(det(f.v)) == 1);
            IntMatrix prod = f.u * m * f.v;
            for (std::size_t i = 0; i < prod.rows(); ++i)
                for (std::size_t j = 0; j < prod.cols(); ++j) {
                    if (i == j && i < f.divisors.size())
                        CHECK(prod.at(i, j) == f.divisors[i]);
                    else
                        CHECK(prod.at(i, j) == 0);
                }
            for (std::size_t i = 0; i + 1 < f.divisors.size(); ++i) {
                CHECK(f.divisors[i] >= 0);
                if (f.divisors[i] != 0) {
                    CHECK(f.divisors[i + 1] % f.divisors[i] == 0);
                } else {
                    CHECK(f.divisors[i + 1] == 0);
                }
            }
            if (m.square()) {
                mpz_class prod_div = 1;
                for (const auto& d : f.divisors) prod_div *= d;
                CHECK(prod_div == abs(det(m)));
            }
        }
    }
}

TEST_CASE("solve mod n") {
    IntMatrix trefoil_c = IntMatrix::from_rows({{1, 1}, {-2, 1}});
    CHECK(solve_mod_n(trefoil_c, 3).size() == 3);
    CHECK(solve_mod_n(trefoil_c, 1).size() == 1);

    IntMatrix fig8c = IntMatrix::from_rows({{-2, 1, 1}, {1, 0, -2}, {0, -2, 1}});
    CHECK(solve_mod_n(fig8c, 5).size() == 5);

    // against direct enumeration for assorted moduli
    for (std::uint64_t n : {2, 3, 4, 5, 6, 7, 8, 9, 10, 12}) {
        auto got = solve_mod_n(trefoil_c, n);
        std::size_t expect = 0;
        for (std::uint64_t a = 0; a < n; ++a)
            for (std::uint64_t b = 0; b < n; ++b)
                if ((a + b) % n == 0 && (2 * n - 2 * a + b) % n == 0) ++expect;
        CHECK(got.size() == expect);
        CHECK(count_solutions_mod_n(trefoil_c, n) == expect);
        for (const auto& v : got) {
            CHECK((v.entries[0] + v.entries[1]) % n == 0);
            CHECK((2 * n - 2 * v.entries[0] + v.entries[1]) % n == 0);
        }
    }

    CHECK_THROWS_AS(solve_mod_n(IntMatrix(1, 3), 101), SolutionSetTooLarge);
}

TEST_CASE("primality helper") {
    CHECK(is_prime(2));
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
}
