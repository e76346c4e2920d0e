#include "diagcell/matrix.hpp"
#include "diagcell/scalar.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

using namespace diagcell;

namespace {

Matrix random_matrix(const Ring& r, std::size_t rows, std::size_t cols, std::mt19937& rng) {
    std::uniform_int_distribution<long> d(-3, 3);
    Matrix m(r, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = r.from_int(d(rng));
    return m;
}

}  // namespace

TEST(Scalar, FieldArithmetic) {
    Ring f5 = Ring::prime_field(5);
    EXPECT_EQ(f5.from_int(3) + f5.from_int(4), f5.from_int(2));
    EXPECT_EQ(f5.from_int(-1), f5.from_int(4));
    EXPECT_EQ(f5.from_int(2).inverse(), f5.from_int(3));
    EXPECT_EQ(f5.from_int(2).pow(4), f5.one());
    EXPECT_THROW(f5.zero().inverse(), std::domain_error);
    EXPECT_EQ(f5.from_int(3).to_string(), "3 mod 5");
}

TEST(Scalar, RationalArithmetic) {
    Ring q = Ring::rationals();
    Scalar a = q.parse_element("3/7");
    EXPECT_EQ(a.to_string(), "3/7");
    EXPECT_EQ(a * q.from_int(7), q.from_int(3));
    EXPECT_EQ((a - a), q.zero());
    EXPECT_EQ(q.parse_element("-2").to_string(), "-2");
}

TEST(Scalar, RingParsing) {
    EXPECT_EQ(Ring::parse("Q"), Ring::rationals());
    EXPECT_EQ(Ring::parse("F5"), Ring::prime_field(5));
    EXPECT_EQ(Ring::parse("gf7"), Ring::prime_field(7));
    EXPECT_EQ(Ring::parse("3"), Ring::prime_field(3));
    EXPECT_THROW(Ring::parse("F4"), std::invalid_argument);
    EXPECT_THROW(Ring::parse("Z"), std::invalid_argument);
    EXPECT_EQ(Ring::prime_field(5).parse_element("1/2"), Ring::prime_field(5).from_int(3));
}

TEST(Scalar, MixedRingsRejected) {
    Scalar a = Ring::prime_field(5).one();
    Scalar b = Ring::prime_field(7).one();
    EXPECT_THROW(a + b, std::invalid_argument);
}

TEST(Matrix, RrefIdentity) {
    Ring q = Ring::rationals();
    auto r = rref(Matrix::identity(q, 2));
    EXPECT_EQ(r.form, Matrix::identity(q, 2));
    EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
}

TEST(Matrix, RrefHandExample) {
    Ring f5 = Ring::prime_field(5);
    auto r = rref(Matrix(f5, {{2, 4}, {1, 2}}));
    EXPECT_EQ(r.form, Matrix(f5, {{1, 2}, {0, 0}}));
    EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0}));
}

TEST(Matrix, RrefZero) {
    Ring q = Ring::rationals();
    auto r = rref(Matrix(q, 3, 3));
    EXPECT_TRUE(r.form.is_zero());
    EXPECT_TRUE(r.pivots.empty());
}

TEST(Matrix, KernelExamples) {
    Ring q = Ring::rationals();
    EXPECT_EQ(kernel_basis(Matrix::identity(q, 3)).cols(), 0u);
    EXPECT_EQ(kernel_basis(Matrix(q, 2, 3)).cols(), 3u);
    EXPECT_EQ(rank(kernel_basis(Matrix(q, 2, 3))), 3u);
    Matrix k = kernel_basis(Matrix(q, {{1, 1, 0}, {0, 0, 1}}));
    ASSERT_EQ(k.cols(), 1u);
    // proportional to (1, -1, 0)
    EXPECT_TRUE(k(2, 0).is_zero());
    EXPECT_EQ(k(0, 0), -k(1, 0));
    EXPECT_FALSE(k(0, 0).is_zero());
}

TEST(Matrix, SolveExamples) {
    Ring q = Ring::rationals();
    Matrix v(q, {{4}, {-1}});
    auto x = solve(Matrix::identity(q, 2), v);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(*x, v);

    Matrix m(q, {{1, 1}});
    auto y = solve(m, Matrix(q, {{1}}));
    ASSERT_TRUE(y.has_value());
    EXPECT_EQ(m * *y, Matrix(q, {{1}}));

    EXPECT_FALSE(solve(Matrix(q, {{1}, {1}}), Matrix(q, {{1}, {0}})).has_value());
}

TEST(Matrix, RandomPropertiesPerRing) {
    std::mt19937 rng(12345);
    for (Ring r : {Ring::prime_field(2), Ring::prime_field(5), Ring::rationals()}) {
        for (int trial = 0; trial < 100; ++trial) {
            std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
            Matrix m = random_matrix(r, rows, cols, rng);
            Matrix k = kernel_basis(m);
            EXPECT_EQ(rank(m) + k.cols(), cols);
            EXPECT_TRUE((m * k).is_zero());
            auto once = rref(m).form;
            EXPECT_EQ(rref(once).form, once);
            Matrix x0 = random_matrix(r, cols, 1, rng);
            Matrix rhs = m * x0;
            auto x = solve(m, rhs);
            ASSERT_TRUE(x.has_value());
            EXPECT_EQ(m * *x, rhs);
        }
    }
}

TEST(Matrix, TransposeAndProduct) {
    Ring f7 = Ring::prime_field(7);
    Matrix a(f7, {{1, 2, 3}, {4, 5, 6}});
    Matrix b(f7, {{1, 0}, {0, 1}, {1, 1}});
    EXPECT_EQ((a * b).transpose(), b.transpose() * a.transpose());
    EXPECT_EQ(a * b, Matrix(f7, {{4, 5}, {10, 11}}));
}
