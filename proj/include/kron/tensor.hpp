#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kron/errors.hpp"
#include "kron/matrix.hpp"

namespace kron {

using Rational = boost::multiprecision::cpp_rational;

/// p x q x r array with 1-based indices (i, j, k); k selects the level matrix
/// X^(k). Entries are stored level-major, then row-major.
template <typename T>
class BasicTensor3 {
public:
    BasicTensor3() = default;
    BasicTensor3(int p, int q, int r, T fill = T{})
        : p_(p), q_(q), r_(r), data_(static_cast<std::size_t>(p) * q * r, fill) {
        if (p < 0 || q < 0 || r < 0) throw InvalidInput("tensor dimensions must be nonnegative");
    }

    int p() const noexcept { return p_; }
    int q() const noexcept { return q_; }
    int r() const noexcept { return r_; }
    std::size_t cell_count() const noexcept { return data_.size(); }

    /// Flat position of (i, j, k) in storage order.
    std::size_t cell(int i, int j, int k) const {
        return (static_cast<std::size_t>(k - 1) * p_ + (i - 1)) * q_ + (j - 1);
    }

    T& operator()(int i, int j, int k) { return data_[cell(i, j, k)]; }
    const T& operator()(int i, int j, int k) const { return data_[cell(i, j, k)]; }

    const std::vector<T>& data() const noexcept { return data_; }
    std::vector<T>& data() noexcept { return data_; }

    Matrix<T> level(int k) const {
        Matrix<T> out(p_, q_);
        for (int i = 1; i <= p_; ++i)
            for (int j = 1; j <= q_; ++j) out(i, j) = (*this)(i, j, k);
        return out;
    }

    void set_level(int k, const Matrix<T>& m) {
        if (m.rows() != p_ || m.cols() != q_) throw InvalidInput("level matrix has wrong dimensions");
        for (int i = 1; i <= p_; ++i)
            for (int j = 1; j <= q_; ++j) (*this)(i, j, k) = m(i, j);
    }

    /// Swaps the first two indices: (i, j, k) -> (j, i, k).
    BasicTensor3 transposed() const {
        BasicTensor3 out(q_, p_, r_);
        for (int k = 1; k <= r_; ++k)
            for (int i = 1; i <= p_; ++i)
                for (int j = 1; j <= q_; ++j) out(j, i, k) = (*this)(i, j, k);
        return out;
    }

    bool nonnegative() const {
        for (const T& v : data_)
            if (v < 0) return false;
        return true;
    }

    BasicTensor3& operator+=(const BasicTensor3& other) {
        require_same_dims(other);
        for (std::size_t c = 0; c < data_.size(); ++c) data_[c] += other.data_[c];
        return *this;
    }
    BasicTensor3& operator-=(const BasicTensor3& other) {
        require_same_dims(other);
        for (std::size_t c = 0; c < data_.size(); ++c) data_[c] -= other.data_[c];
        return *this;
    }
    friend BasicTensor3 operator+(BasicTensor3 a, const BasicTensor3& b) { return a += b; }
    friend BasicTensor3 operator-(BasicTensor3 a, const BasicTensor3& b) { return a -= b; }

    friend bool operator==(const BasicTensor3&, const BasicTensor3&) = default;
    friend auto operator<=>(const BasicTensor3& a, const BasicTensor3& b) {
        if (auto c = a.p_ <=> b.p_; c != 0) return c;
        if (auto c = a.q_ <=> b.q_; c != 0) return c;
        if (auto c = a.r_ <=> b.r_; c != 0) return c;
        return a.data_ <=> b.data_;
    }

private:
    void require_same_dims(const BasicTensor3& other) const {
        if (p_ != other.p_ || q_ != other.q_ || r_ != other.r_)
            throw InvalidInput("tensor dimension mismatch");
    }

    int p_ = 0;
    int q_ = 0;
    int r_ = 0;
    std::vector<T> data_;
};

using Tensor3 = BasicTensor3<int>;
using RationalTensor3 = BasicTensor3<Rational>;

template <typename T>
struct Marginals {
    std::vector<T> rows;    ///< sums over (j, k)
    std::vector<T> cols;    ///< sums over (i, k)
    std::vector<T> levels;  ///< sums over (i, j)
    friend bool operator==(const Marginals&, const Marginals&) = default;
};

template <typename T>
Marginals<T> marginals(const BasicTensor3<T>& x) {
    Marginals<T> out{std::vector<T>(x.p(), T{}), std::vector<T>(x.q(), T{}), std::vector<T>(x.r(), T{})};
    for (int k = 1; k <= x.r(); ++k)
        for (int i = 1; i <= x.p(); ++i)
            for (int j = 1; j <= x.q(); ++j) {
                const T& v = x(i, j, k);
                out.rows[i - 1] += v;
                out.cols[j - 1] += v;
                out.levels[k - 1] += v;
            }
    return out;
}

/// Vertical stack [X^(r); ...; X^(1)] of size pr x q.
template <typename T>
Matrix<T> flatten_col(const BasicTensor3<T>& x) {
    Matrix<T> out(x.p() * x.r(), x.q());
    for (int k = 1; k <= x.r(); ++k)
        for (int i = 1; i <= x.p(); ++i)
            for (int j = 1; j <= x.q(); ++j) out((x.r() - k) * x.p() + i, j) = x(i, j, k);
    return out;
}

/// Horizontal concatenation [X^(r) ... X^(1)] of size p x qr.
template <typename T>
Matrix<T> flatten_row(const BasicTensor3<T>& x) {
    Matrix<T> out(x.p(), x.q() * x.r());
    for (int k = 1; k <= x.r(); ++k)
        for (int i = 1; i <= x.p(); ++i)
            for (int j = 1; j <= x.q(); ++j) out(i, (x.r() - k) * x.q() + j) = x(i, j, k);
    return out;
}

RationalTensor3 to_rational(const Tensor3& x);

} // namespace kron
