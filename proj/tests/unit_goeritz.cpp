#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "knotcolor/goeritz.hpp"

using namespace knotcolor;

namespace {

PlanarDiagram load(const std::string& name) {
    std::ifstream f(std::string(KNOTCOLOR_DATA_DIR) + "/" + name);
    REQUIRE(f.good());
    std::stringstream buf;
    buf << f.rdbuf();
    return PlanarDiagram::parse(buf.str());
}

int region_with_edges(const RegionComplex& rc, std::set<int> edges) {
    for (const auto& r : rc.regions)
        if (std::set<int>(r.edges.begin(), r.edges.end()) == edges) return r.id;
    REQUIRE(false);
    return -1;
}

const char* kCorpus[] = {"unknot.pd",       "trefoil.pd",  "trefoil_mirror.pd",
                         "trefoil_kink.pd", "figure8.pd",  "figure8_kink.pd"};

}  // namespace

TEST_CASE("trefoil Goeritz system") {
    PlanarDiagram d = load("trefoil.pd");
    RegionComplex rc = faces(d);
    GoeritzSystem gs = build_goeritz(rc);
    CHECK(gs.pre_matrix == IntMatrix::from_rows({{3, -3}, {-3, 3}}));
    CHECK(goeritz_determinant(rc) == 3);
}

TEST_CASE("pre-Goeritz matrices are symmetric with zero row sums") {
    for (const char* name : kCorpus) {
        PlanarDiagram d = load(name);
        for (bool flip : {false, true}) {
            RegionComplex rc = faces(d, flip);
            GoeritzSystem gs = build_goeritz(rc);
            const std::size_t s = gs.pre_matrix.rows();
            for (std::size_t i = 0; i < s; ++i) {
                mpz_class sum = 0;
                for (std::size_t j = 0; j < s; ++j) {
                    sum += gs.pre_matrix.at(i, j);
                    CHECK(gs.pre_matrix.at(i, j) == gs.pre_matrix.at(j, i));
                }
                CHECK(sum == 0);
            }
        }
    }
}

TEST_CASE("all cofactors of a pre-Goeritz matrix are equal") {
    PlanarDiagram d = load("figure8.pd");
    GoeritzSystem gs = build_goeritz(faces(d));
    mpz_class first = cofactor(gs.pre_matrix, 0, 0);
    CHECK(abs(first) == 5);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(cofactor(gs.pre_matrix, i, j) == first);
}

TEST_CASE("Goeritz determinant equals the coloring determinant, both shadings") {
    for (const char* name : kCorpus) {
        PlanarDiagram d = load(name);
        mpz_class expect = determinant(d);
        CHECK(goeritz_determinant(faces(d)) == expect);
        CHECK(goeritz_determinant(faces(d, true)) == expect);
    }
}

TEST_CASE("mod-p nullity agrees between coloring and Goeritz matrices") {
    for (const char* name : kCorpus) {
        PlanarDiagram d = load(name);
        RegionComplex rc = faces(d);
        for (std::uint64_t p : {2, 3, 5, 7, 11, 13})
            CHECK(goeritz_nullity(rc, p) == nullity(d, p));
    }
}

TEST_CASE("figure-eight difference table from the worked 5-coloring") {
    PlanarDiagram d = load("figure8.pd");
    RegionComplex rc = faces(d);
    Coloring col{5, {4, 1, 2, 0}};
    DifferenceTable t = differences(d, rc, col);

    // region labels of the worked example identified by boundary edges
    int r1 = region_with_edges(rc, {2, 8, 5});
    int r2 = region_with_edges(rc, {5, 1});
    int r3 = region_with_edges(rc, {1, 6, 4});
    int r4 = region_with_edges(rc, {8, 3, 6});
    int r5 = region_with_edges(rc, {3, 7});
    int r6 = region_with_edges(rc, {4, 7, 2});

    CHECK(t.at(r1, r2) == 2);
    CHECK(t.at(r1, r3) == 3);
    CHECK(t.at(r1, r4) == 0);
    CHECK(t.at(r1, r5) == 4);
    CHECK(t.at(r1, r6) == 4);

    // the table does not depend on the shading choice
    DifferenceTable t2 = differences(d, faces(d, true), col);
    CHECK(t.d == t2.d);
}

TEST_CASE("difference table properties") {
    for (const char* name : {"trefoil.pd", "figure8.pd", "trefoil_kink.pd"}) {
        PlanarDiagram d = load(name);
        RegionComplex rc = faces(d);
        for (std::uint64_t n : {3, 5}) {
            for (const auto& col : colorings(d, n)) {
                DifferenceTable t = differences(d, rc, col);
                const int r = rc.region_count();
                for (int i = 0; i < r; ++i) CHECK(t.at(i, i) == 0);
                // composition relations, both shading cases
                for (int i = 0; i < r; ++i)
                    for (int j = 0; j < r; ++j)
                        for (int k = 0; k < r; ++k) {
                            std::uint64_t lhs =
                                rc.shaded[i] == rc.shaded[j]
                                    ? (t.at(i, j) + t.at(j, k)) % n
                                    : (t.at(i, j) + n - t.at(j, k)) % n;
                            CHECK(lhs == t.at(i, k));
                        }
                if (col.is_trivial()) {
                    for (int i = 0; i < r; ++i)
                        for (int j = 0; j < r; ++j)
                            if (rc.shaded[i] == rc.shaded[j]) CHECK(t.at(i, j) == 0);
                }
            }
        }
    }
}

TEST_CASE("differences reject an invalid coloring") {
    PlanarDiagram d = load("trefoil.pd");
    Coloring bad{3, {0, 1, 1}};
    CHECK_THROWS_AS(differences(d, faces(d), bad), InvalidColoring);
}

TEST_CASE("coloring_to_goeritz lands in the nullspace") {
    for (const char* name : {"trefoil.pd", "figure8.pd", "figure8_kink.pd"}) {
        PlanarDiagram d = load(name);
        RegionComplex rc = faces(d);
        GoeritzSystem gs = build_goeritz(rc);
        for (std::uint64_t n : {3, 4, 5}) {
            for (const auto& col : colorings(d, n)) {
                ModVector v = coloring_to_goeritz(d, rc, col);
                CHECK(v.entries.front() == 0);
                for (std::size_t i = 0; i < gs.region_order.size(); ++i) {
                    std::uint64_t acc = 0;
                    for (std::size_t j = 0; j < gs.region_order.size(); ++j) {
                        std::uint64_t e = mpz_fdiv_ui(gs.pre_matrix.at(i, j).get_mpz_t(), n);
                        acc = (acc + e * v.entries[j]) % n;
                    }
                    CHECK(acc == 0);
                }
            }
        }
    }
}

TEST_CASE("figure-eight bijection, frozen values") {
    PlanarDiagram d = load("figure8.pd");
    RegionComplex rc = faces(d);
    Coloring col{5, {4, 1, 2, 0}};

    // shaded regions with the default shading, base region first
    GoeritzSystem gs = build_goeritz(rc);
    int rD = region_with_edges(rc, {1, 6, 4});
    int rB = region_with_edges(rc, {2, 8, 5});
    int rF = region_with_edges(rc, {3, 7});
    CHECK(gs.region_order == std::vector<int>{rD, rB, rF});
    CHECK(gs.pre_matrix == IntMatrix::from_rows({{3, -2, -1}, {-2, 3, -1}, {-1, -1, 2}}));

    ModVector v = coloring_to_goeritz(d, rc, col);
    CHECK(v.entries == std::vector<std::uint64_t>{0, 2, 1});

    CHECK(base_strand(d, rc) == 0);
    Coloring back = goeritz_to_coloring(d, rc, v, col.colors[0]);
    CHECK(back == col);
}

TEST_CASE("bijection roundtrip over full coloring sets") {
    for (const char* name : kCorpus) {
        PlanarDiagram d = load(name);
        for (bool flip : {false, true}) {
            RegionComplex rc = faces(d, flip);
            int alpha = base_strand(d, rc);
            for (std::uint64_t n = 2; n <= 6; ++n) {
                for (const auto& col : colorings(d, n)) {
                    ModVector v = coloring_to_goeritz(d, rc, col);
                    Coloring back = goeritz_to_coloring(d, rc, v, col.colors[alpha]);
                    CHECK(back == col);
                }
            }
        }
    }
}

TEST_CASE("goeritz_to_coloring rejects vectors outside the nullspace") {
    PlanarDiagram d = load("trefoil.pd");
    RegionComplex rc = faces(d);
    ModVector bad{5, {0, 1}};  // pre-Goeritz is [[3,-3],[-3,3]]; needs v1=v2 mod 5
    CHECK_THROWS_AS(goeritz_to_coloring(d, rc, bad, 0), NotInNullspace);
    ModVector wrong_len{5, {0, 1, 2}};
    CHECK_THROWS_AS(goeritz_to_coloring(d, rc, wrong_len, 0), NotInNullspace);
}

TEST_CASE("bijection is linear") {
    PlanarDiagram d = load("figure8.pd");
    RegionComplex rc = faces(d);
    const std::uint64_t n = 5;
    auto cols = colorings(d, n);
    for (std::size_t a = 0; a < cols.size(); a += 3)
        for (std::size_t b = 0; b < cols.size(); b += 7) {
            Coloring sum{n, {}};
            sum.colors.resize(cols[a].colors.size());
            for (std::size_t i = 0; i < sum.colors.size(); ++i)
                sum.colors[i] = (cols[a].colors[i] + cols[b].colors[i]) % n;
            ModVector va = coloring_to_goeritz(d, rc, cols[a]);
            ModVector vb = coloring_to_goeritz(d, rc, cols[b]);
            ModVector vs = coloring_to_goeritz(d, rc, sum);
            for (std::size_t i = 0; i < va.entries.size(); ++i)
                CHECK(vs.entries[i] == (va.entries[i] + vb.entries[i]) % n);
        }
}

TEST_CASE("solution counts match across the bijection") {
    for (const char* name : {"trefoil.pd", "figure8.pd", "trefoil_kink.pd"}) {
        PlanarDiagram d = load(name);
        RegionComplex rc = faces(d);
        GoeritzSystem gs = build_goeritz(rc);
        for (std::uint64_t n = 2; n <= 8; ++n) {
            // solutions of the pre-Goeritz system with first entry 0
            // correspond to solutions of the Goeritz matrix with the base
            // row/column deleted
            GoeritzSystem base_deleted = build_goeritz(rc, 0, 0);
            auto gsol = solve_mod_n(base_deleted.matrix, n);
            auto csol = colorings(d, n);
            CHECK(gsol.size() * n == csol.size());
        }
    }
}

TEST_CASE("0-crossing unknot Goeritz conventions") {
    PlanarDiagram d = load("unknot.pd");
    RegionComplex rc = faces(d);
    GoeritzSystem gs = build_goeritz(rc);
    CHECK(gs.pre_matrix == IntMatrix::from_rows({{0}}));
    CHECK(goeritz_determinant(rc) == 1);
    Coloring col = goeritz_to_coloring(d, rc, ModVector{7, {0}}, 4);
    CHECK(col.colors == std::vector<std::uint64_t>{4});
}
