#include "doctest.h"

#include <random>

#include "opchain/matrix.hpp"

using namespace opchain;

static Matrix from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows.begin()->size()));
    int i = 0;
    for (auto& r : rows) {
        int j = 0;
        for (int v : r) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

static Matrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            m.at(i, j) = Scalar(num(rng), den(rng));
            m.at(i, j).canonicalize();
        }
    return m;
}

TEST_CASE("scalar parsing stays canonical") {
    CHECK(scalar_to_string(scalar_from_string("4/6")) == "2/3");
    CHECK(scalar_to_string(scalar_from_string("-4/6")) == "-2/3");
    CHECK(scalar_to_string(scalar_from_string("0")) == "0");
    CHECK(scalar_to_string(scalar_from_string("7")) == "7");
    CHECK_THROWS(scalar_from_string("1/0"));
    CHECK_THROWS(scalar_from_string("x"));
}

TEST_CASE("kernel frozen examples") {
    // identity 3x3 -> trivial kernel
    CHECK(kernel(Matrix::identity(3)).cols == 0);
    // zero map 2->2 -> full kernel
    CHECK(kernel(Matrix::zero(2, 2)).cols == 2);
    // [[1,1],[2,2]] -> kernel spanned by (1,-1)
    Matrix k = kernel(from_rows({{1, 1}, {2, 2}}));
    REQUIRE(k.cols == 1);
    CHECK(k.at(0, 0) * Scalar(-1) == k.at(1, 0));
    Matrix prod = mul(from_rows({{1, 1}, {2, 2}}), k);
    CHECK(prod.is_zero());
}

TEST_CASE("solve_affine frozen examples") {
    // f = id, target t
    auto s1 = solve_affine(Matrix::identity(2), {Scalar(3), Scalar(-5)});
    REQUIRE(s1.has_value());
    CHECK(s1->particular == Vec{Scalar(3), Scalar(-5)});
    CHECK(s1->kernel.cols == 0);
    // f = 0, target 0 -> solution 0, full kernel
    auto s2 = solve_affine(Matrix::zero(2, 2), {Scalar(0), Scalar(0)});
    REQUIRE(s2.has_value());
    CHECK(s2->particular == Vec{Scalar(0), Scalar(0)});
    CHECK(s2->kernel.cols == 2);
    // [[1,0],[0,0]] target (1,1) -> inconsistent
    CHECK(!solve_affine(from_rows({{1, 0}, {0, 0}}), {Scalar(1), Scalar(1)}).has_value());
}

TEST_CASE("solve_affine postcondition on random systems") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 40; ++t) {
        Matrix m = random_matrix(rng, 5, 7);
        Vec x(7);
        for (auto& v : x) v = Scalar(static_cast<int>(rng() % 9) - 4);
        Vec target = matvec(m, x);
        auto s = solve_affine(m, target);
        REQUIRE(s.has_value());
        CHECK(matvec(m, s->particular) == target);
        CHECK(mul(m, s->kernel).is_zero());
        CHECK(rank(s->kernel) == s->kernel.cols);
        CHECK(s->kernel.cols == 7 - rank(m));
    }
}

TEST_CASE("parallel kernels agree with serial reference bit-for-bit") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 12; ++t) {
        Matrix a = random_matrix(rng, 17, 23);
        Matrix b = random_matrix(rng, 23, 11);
        CHECK(mul(a, b) == serial_ref::mul(a, b));
        CHECK(rref(a) == serial_ref::rref(a));
        Matrix sq = random_matrix(rng, 20, 20);
        CHECK(rref(sq) == serial_ref::rref(sq));
    }
    // degenerate shapes
    Matrix e(0, 4);
    CHECK(rref(e) == serial_ref::rref(e));
    Matrix z = Matrix::zero(5, 3);
    CHECK(rref(z) == serial_ref::rref(z));
}

TEST_CASE("rref is idempotent and canonical") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 10; ++t) {
        Matrix a = random_matrix(rng, 9, 13);
        Matrix r = rref(a);
        CHECK(rref(r) == r);
    }
}

TEST_CASE("column_space and express_in_columns") {
    Matrix a = from_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
    Matrix b = column_space(a);
    CHECK(b.cols == rank(a));
    Matrix coords = express_in_columns(b, a);
    CHECK(mul(b, coords) == a);
    CHECK_THROWS(express_in_columns(from_rows({{1}, {0}}), from_rows({{0}, {1}})));
}

TEST_CASE("kernel columns always independent and spanning") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 20; ++t) {
        Matrix a = random_matrix(rng, 6, 9);
        Matrix k = kernel(a);
        CHECK(mul(a, k).is_zero());
        CHECK(rank(k) == k.cols);
        CHECK(k.cols + rank(a) == a.cols);
    }
}
