#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fga/integer_matrix.hpp"

#include <random>

using fga::Int;
using fga::IntegerMatrix;
using fga::SmithDecomposition;

namespace {

IntegerMatrix from_rows(std::vector<std::vector<Int>> rows) {
    IntegerMatrix m(0, rows.empty() ? 0 : rows[0].size());
    for (auto& r : rows) m.append_row(r);
    return m;
}

void check_snf_contract(const IntegerMatrix& a) {
    SmithDecomposition s = fga::smith_normal_form(a);
    REQUIRE(s.u * a * s.v == s.d);
    REQUIRE(abs(fga::determinant(s.u)) == 1);
    REQUIRE(abs(fga::determinant(s.v)) == 1);
    REQUIRE(s.u * s.u_inv == IntegerMatrix::identity(a.rows()));
    REQUIRE(s.v * s.v_inv == IntegerMatrix::identity(a.cols()));
    // diagonal, nonnegative, divisibility chain
    for (std::size_t i = 0; i < s.d.rows(); ++i)
        for (std::size_t j = 0; j < s.d.cols(); ++j)
            if (i != j) REQUIRE(s.d.at(i, j) == 0);
    const std::size_t nmin = std::min(a.rows(), a.cols());
    for (std::size_t i = 0; i < nmin; ++i) {
        REQUIRE(s.d.at(i, i) >= 0);
        if (i + 1 < nmin && s.d.at(i + 1, i + 1) != 0) {
            REQUIRE(s.d.at(i, i) != 0);
            REQUIRE(s.d.at(i + 1, i + 1) % s.d.at(i, i) == 0);
        }
    }
}

IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim, int max_abs) {
    std::uniform_int_distribution<std::size_t> dim(0, max_dim);
    std::uniform_int_distribution<int> entry(-max_abs, max_abs);
    IntegerMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
    return m;
}

}  // namespace

TEST_CASE("matrix product and transpose") {
    IntegerMatrix a = from_rows({{1, 2}, {3, 4}});
    IntegerMatrix b = from_rows({{0, 1}, {1, 0}});
    CHECK(a * b == from_rows({{2, 1}, {4, 3}}));
    CHECK(a.transposed() == from_rows({{1, 3}, {2, 4}}));
    CHECK(mul_row_vector({1, 1}, a) == std::vector<Int>{4, 6});
}

TEST_CASE("determinant") {
    CHECK(fga::determinant(IntegerMatrix::identity(4)) == 1);
    CHECK(fga::determinant(from_rows({{2, 0}, {0, 3}})) == 6);
    CHECK(fga::determinant(from_rows({{0, 1}, {1, 0}})) == -1);
    CHECK(fga::determinant(from_rows({{1, 2}, {2, 4}})) == 0);
    CHECK(fga::determinant(from_rows({{3, -1, 2}, {0, 4, 1}, {5, 2, -2}})) == -75);
    CHECK(fga::determinant(IntegerMatrix(0, 0)) == 1);
}

TEST_CASE("smith normal form of the zero matrix is a fixed point") {
    IntegerMatrix z(2, 2);
    SmithDecomposition s = fga::smith_normal_form(z);
    CHECK(s.d == z);
    CHECK(s.u == IntegerMatrix::identity(2));
    CHECK(s.v == IntegerMatrix::identity(2));
    CHECK(s.rank == 0);
}

TEST_CASE("smith normal form of 1x1 is canonical") {
    IntegerMatrix a(1, 1, {Int(4)});
    SmithDecomposition s = fga::smith_normal_form(a);
    CHECK(s.d.at(0, 0) == 4);
    CHECK(s.rank == 1);
    check_snf_contract(a);
}

TEST_CASE("smith normal form of diag(2,3) merges into the chain 1,6") {
    // d1 = gcd of the entries = 1, d1*d2 = |det| = 6
    IntegerMatrix a = from_rows({{2, 0}, {0, 3}});
    SmithDecomposition s = fga::smith_normal_form(a);
    CHECK(s.d.at(0, 0) == 1);
    CHECK(s.d.at(1, 1) == 6);
    check_snf_contract(a);
}

TEST_CASE("smith normal form handles empty shapes") {
    for (auto [r, c] : {std::pair<std::size_t, std::size_t>{0, 0}, {0, 3}, {3, 0}}) {
        IntegerMatrix a(r, c);
        SmithDecomposition s = fga::smith_normal_form(a);
        CHECK(s.rank == 0);
        CHECK(s.d.rows() == r);
        CHECK(s.d.cols() == c);
        check_snf_contract(a);
    }
}

TEST_CASE("smith normal form contract on random matrices") {
    std::mt19937_64 rng(20240601);
    for (int iter = 0; iter < 200; ++iter) check_snf_contract(random_matrix(rng, 6, 20));
}

TEST_CASE("smith normal form diagonal is invariant under row/col permutations") {
    std::mt19937_64 rng(917);
    for (int iter = 0; iter < 50; ++iter) {
        IntegerMatrix a = random_matrix(rng, 5, 9);
        IntegerMatrix b = a;
        // random permutation via swaps
        for (int s = 0; s < 6; ++s) {
            if (b.rows() > 1) {
                std::uniform_int_distribution<std::size_t> pick(0, b.rows() - 1);
                b.swap_rows(pick(rng), pick(rng));
            }
            if (b.cols() > 1) {
                std::uniform_int_distribution<std::size_t> pick(0, b.cols() - 1);
                b.swap_cols(pick(rng), pick(rng));
            }
        }
        CHECK(fga::smith_normal_form(a).d == fga::smith_normal_form(b).d);
    }
}
