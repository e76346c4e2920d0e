#include "diagcell/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace diagcell {

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, ring.zero()) {}

Matrix::Matrix(Ring ring, std::initializer_list<std::initializer_list<long>> rows)
    : ring_(ring), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (long v : r) data_.push_back(ring.from_int(v));
    }
}

Matrix Matrix::identity(Ring ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_ || !(ring_ == o.ring_)) throw std::invalid_argument("matrix product: shape or ring mismatch");
    Matrix r(ring_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (!o(k, j).is_zero()) r(i, j) += a * o(k, j);
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

Matrix Matrix::column(std::size_t c) const {
    Matrix r(ring_, rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) r(i, 0) = (*this)(i, c);
    return r;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

std::string Matrix::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_; ++i) {
        out << '[';
        for (std::size_t j = 0; j < cols_; ++j) out << (j ? " " : "") << (*this)(i, j).to_plain_string();
        out << "]\n";
    }
    return out.str();
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RrefResult rref(const Matrix& m) {
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
        std::size_t sel = row;
        while (sel < a.rows() && a(sel, c).is_zero()) ++sel;
        if (sel == a.rows()) continue;
        if (sel != row)
            for (std::size_t j = c; j < a.cols(); ++j) std::swap(a(sel, j), a(row, j));
        Scalar inv = a(row, c).inverse();
        for (std::size_t j = c; j < a.cols(); ++j) a(row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, c).is_zero()) continue;
            Scalar f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                if (!a(row, j).is_zero()) a(i, j) -= f * a(row, j);
        }
        pivots.push_back(c);
        ++row;
    }
    return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix kernel_basis(const Matrix& m) {
    auto [r, pivots] = rref(m);
    std::vector<char> is_pivot(m.cols(), 0);
    for (auto p : pivots) is_pivot[p] = 1;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix k(m.ring(), m.cols(), free_cols.size());
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
        k(free_cols[f], f) = m.ring().one();
        for (std::size_t i = 0; i < pivots.size(); ++i) k(pivots[i], f) = -r(i, free_cols[f]);
    }
    return k;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs) {
    if (rhs.rows() != m.rows()) throw std::invalid_argument("solve: rhs row count differs from matrix");
    Matrix aug(m.ring(), m.rows(), m.cols() + rhs.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        for (std::size_t j = 0; j < rhs.cols(); ++j) aug(i, m.cols() + j) = rhs(i, j);
    }
    auto [r, pivots] = rref(aug);
    if (!pivots.empty() && pivots.back() >= m.cols()) return std::nullopt;
    Matrix x(m.ring(), m.cols(), rhs.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < rhs.cols(); ++j) x(pivots[i], j) = r(i, m.cols() + j);
    return x;
}

}  // namespace diagcell
