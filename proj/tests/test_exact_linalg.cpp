#include <doctest.h>

#include "critgroup/errors.hpp"
#include "critgroup/exact_linalg.hpp"
#include "test_util.hpp"

using namespace critgroup;

namespace {

// L_V for V = D31 over F S_4, p >= 5.
const IntMatrix kS4p0Laplacian = {{3, -1, 0, 0, 0},
                                  {-1, 2, -1, -1, 0},
                                  {0, -1, 3, -1, 0},
                                  {0, -1, -1, 2, -1},
                                  {0, 0, 0, -1, 3}};

// L_V for V = P4 over F_3 S_5.
const IntMatrix kS5P4Laplacian = {{8, 0, -2, -2, -2},
                                  {0, 8, -2, -2, -2},
                                  {0, -2, 8, -4, -4},
                                  {-2, 0, -4, 8, -4},
                                  {0, 0, -2, -2, 6}};

// L_V for the sign module over F_3 S_5.
const IntMatrix kS5SignLaplacian = {{1, -1, 0, 0, 0},
                                    {-1, 1, 0, 0, 0},
                                    {0, 0, 1, -1, 0},
                                    {0, 0, -1, 1, 0},
                                    {0, 0, 0, 0, 0}};

IntMatrix diag_of(const SmithDecomposition& snf, std::size_t rows, std::size_t cols) {
    IntMatrix d(rows, cols);
    for (std::size_t i = 0; i < snf.diagonal.size(); ++i) d(i, i) = snf.diagonal[i];
    return d;
}

}  // namespace

TEST_SUITE_BEGIN("exact_linalg");

TEST_CASE("smith normal form on the paper's S4 Laplacians") {
    SUBCASE("p=2, V=D31") {
        SmithDecomposition snf = smith_normal_form(IntMatrix{{2, -2}, {-1, 1}});
        CHECK(snf.diagonal == std::vector<Int>{1, 0});
        CHECK(snf.rank == 1);
    }
    SUBCASE("zero map") {
        SmithDecomposition snf = smith_normal_form(IntMatrix(2, 2));
        CHECK(snf.diagonal == std::vector<Int>{0, 0});
        CHECK(snf.rank == 0);
    }
    SUBCASE("p=3, V=D31") {
        SmithDecomposition snf = smith_normal_form(
            IntMatrix{{3, -2, 0, -1}, {-1, 2, 0, -1}, {0, -1, 3, -2}, {0, -1, -1, 2}});
        CHECK(snf.diagonal == std::vector<Int>{1, 1, 4, 0});
    }
}

TEST_CASE("smith transforms are unimodular and diagonalize") {
    std::mt19937 rng(7001);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
        IntMatrix a = testutil::random_matrix(rng, rows, cols, -9, 9);
        SmithDecomposition snf = smith_normal_form(a);
        CHECK(snf.u * a * snf.v == diag_of(snf, rows, cols));
        CHECK(abs(determinant(snf.u)) == 1);
        CHECK(abs(determinant(snf.v)) == 1);
        for (std::size_t i = 0; i + 1 < snf.diagonal.size(); ++i) {
            CHECK(snf.diagonal[i] >= 0);
            if (snf.diagonal[i + 1] != 0) {
                REQUIRE(snf.diagonal[i] != 0);
                CHECK(divides(snf.diagonal[i], snf.diagonal[i + 1]));
            }
        }
        CHECK(rank(a) == snf.rank);
    }
}

TEST_CASE("smith is deterministic") {
    std::mt19937 rng(7002);
    IntMatrix a = testutil::random_matrix(rng, 4, 4, -20, 20);
    SmithDecomposition first = smith_normal_form(a);
    SmithDecomposition second = smith_normal_form(a);
    CHECK(first.diagonal == second.diagonal);
    CHECK(first.u == second.u);
    CHECK(first.v == second.v);
}

TEST_CASE("cokernel structure") {
    SUBCASE("S4 p>=5, V=D31: Z/4") {
        AbelianGroupStructure g = cokernel_structure(kS4p0Laplacian);
        CHECK(g.free_rank == 1);
        CHECK(g.torsion == std::vector<Int>{4});
    }
    SUBCASE("identity is surjective") {
        AbelianGroupStructure g = cokernel_structure(IntMatrix::identity(3));
        CHECK(g.free_rank == 0);
        CHECK(g.torsion.empty());
    }
    SUBCASE("S5 p=3, V=P4: (Z/2)^3 + Z/24") {
        AbelianGroupStructure g = cokernel_structure(kS5P4Laplacian);
        CHECK(g.free_rank == 1);
        CHECK(g.torsion == std::vector<Int>{2, 2, 2, 24});
    }
    SUBCASE("non-square rejected") {
        CHECK_THROWS_AS(cokernel_structure(IntMatrix(2, 3)), std::invalid_argument);
    }
}

TEST_CASE("abelian group display") {
    CHECK(AbelianGroupStructure{}.to_string() == "0");
    CHECK(AbelianGroupStructure{1, {}}.to_string() == "Z");
    CHECK(AbelianGroupStructure{0, {4}}.to_string() == "Z/4");
    CHECK(AbelianGroupStructure{2, {2, 2, 2, 24}}.to_string() == "Z^2 ⊕ (Z/2)^3 ⊕ Z/24");
}

TEST_CASE("characteristic polynomial") {
    SUBCASE("S5 p=3 L_V for P4: x(x-8)^2(x-10)(x-12)") {
        CHECK(char_poly(kS5P4Laplacian) == std::vector<Int>{0, 7680, -3328, 536, -38, 1});
    }
    SUBCASE("zero matrix: x^2") {
        CHECK(char_poly(IntMatrix(2, 2)) == std::vector<Int>{0, 0, 1});
    }
    SUBCASE("trace/determinant oracle for 2x2") {
        // det(xI - A) = x^2 - tr(A) x + det(A), by hand: x^2 - 3x.
        CHECK(char_poly(IntMatrix{{2, -2}, {-1, 1}}) == std::vector<Int>{0, -3, 1});
    }
    SUBCASE("non-square rejected") {
        CHECK_THROWS_AS(char_poly(IntMatrix(2, 3)), std::invalid_argument);
    }
}

TEST_CASE("char poly at zero is the determinant up to sign") {
    std::mt19937 rng(7003);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 1 + rng() % 5;
        IntMatrix a = testutil::random_matrix(rng, n, n, -9, 9);
        std::vector<Int> poly = char_poly(a);
        Int det = determinant(a);
        CHECK(poly[0] == (n % 2 == 0 ? det : -det));
    }
}

TEST_CASE("rank") {
    CHECK(rank(kS5SignLaplacian) == 2);
    CHECK(rank(IntMatrix::identity(4)) == 4);
    CHECK(rank(outer_product({8, 8}, {1, 2})) == 1);
    CHECK(rank(IntMatrix(3, 3)) == 0);
}

TEST_CASE("rational inverse") {
    SUBCASE("1x1") {
        RatMatrix inv = rat_inverse(IntMatrix{{1}});
        CHECK(inv(0, 0) == 1);
    }
    SUBCASE("adjugate oracle for 2x2") {
        // inverse of [[3,-1],[-1,2]] is adj/det = [[2,1],[1,3]]/5.
        RatMatrix inv = rat_inverse(IntMatrix{{3, -1}, {-1, 2}});
        CHECK(inv(0, 0) == Rat(2, 5));
        CHECK(inv(0, 1) == Rat(1, 5));
        CHECK(inv(1, 0) == Rat(1, 5));
        CHECK(inv(1, 1) == Rat(3, 5));
    }
    SUBCASE("singular") {
        CHECK_THROWS_AS(rat_inverse(IntMatrix{{2, -2}, {-1, 1}}), SingularMatrixError);
    }
}

TEST_CASE("rat_inverse times original is the identity") {
    std::mt19937 rng(7004);
    int done = 0;
    while (done < 25) {
        std::size_t n = 1 + rng() % 5;
        IntMatrix a = testutil::random_matrix(rng, n, n, -9, 9);
        if (determinant(a) == 0) continue;
        CHECK(rat_inverse(a) * RatMatrix(a) == RatMatrix::identity(n));
        ++done;
    }
}

TEST_CASE("corner deletion is submultiplicative for nonnegative matrices") {
    std::mt19937 rng(7005);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 2 + rng() % 4;
        IntMatrix a = testutil::random_matrix(rng, n, n, 0, 6);
        IntMatrix b = testutil::random_matrix(rng, n, n, 0, 6);
        IntMatrix lhs = a.deleted(n - 1, n - 1) * b.deleted(n - 1, n - 1);
        IntMatrix rhs = (a * b).deleted(n - 1, n - 1);
        CHECK(entrywise_leq(lhs, rhs));
    }
}

TEST_SUITE_END();
