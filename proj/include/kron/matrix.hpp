#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "kron/errors.hpp"

namespace kron {

/// Dense row-major matrix with 1-based element access.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, T fill = T{})
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {
        if (rows < 0 || cols < 0) throw InvalidInput("matrix dimensions must be nonnegative");
    }
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = static_cast<int>(rows.size());
        cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != cols_) throw InvalidInput("ragged matrix literal");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    T& operator()(int i, int j) { return data_[index(i, j)]; }
    const T& operator()(int i, int j) const { return data_[index(i, j)]; }

    Matrix transposed() const {
        Matrix out(cols_, rows_);
        for (int i = 1; i <= rows_; ++i)
            for (int j = 1; j <= cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    std::vector<T> row_sums() const {
        std::vector<T> out(rows_, T{});
        for (int i = 1; i <= rows_; ++i)
            for (int j = 1; j <= cols_; ++j) out[i - 1] += (*this)(i, j);
        return out;
    }

    std::vector<T> col_sums() const {
        std::vector<T> out(cols_, T{});
        for (int i = 1; i <= rows_; ++i)
            for (int j = 1; j <= cols_; ++j) out[j - 1] += (*this)(i, j);
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i - 1) * cols_ + (j - 1);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<int>;

} // namespace kron
