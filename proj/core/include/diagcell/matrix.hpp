#pragma once

#include "diagcell/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace diagcell {

class Matrix {
public:
    Matrix(Ring ring, std::size_t rows, std::size_t cols);
    // Row-major integer literal, reduced into the ring.
    Matrix(Ring ring, std::initializer_list<std::initializer_list<long>> rows);

    static Matrix identity(Ring ring, std::size_t n);

    const Ring& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix transpose() const;
    Matrix column(std::size_t c) const;
    bool is_zero() const;

    std::string to_string() const;

    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    Ring ring_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> data_;
};

struct RrefResult {
    Matrix form;
    std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
// Columns span the right null space.
Matrix kernel_basis(const Matrix& m);
// Some x with m * x = rhs, or nullopt when the system is inconsistent.
std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs);

}  // namespace diagcell
