#pragma once

#include <string>
#include <vector>

#include "kron/tensor.hpp"

namespace kron {

class NotDiagConstant : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// (x_1, ..., x_p) with x_j = X^(1)_{1,j}. The first level must be constant
/// along each diagonal i + j = d + 1 for d <= p and zero below the p-th one.
template <typename T>
std::vector<T> diag_values(const BasicTensor3<T>& x) {
    const int p = x.p();
    std::vector<T> out(p);
    for (int j = 1; j <= p; ++j) out[j - 1] = j <= x.q() ? x(1, j, 1) : T{};
    for (int i = 1; i <= p; ++i)
        for (int j = 1; j <= x.q(); ++j) {
            const int d = i + j - 1;
            const T expected = d <= p ? out[d - 1] : T{};
            if (x(i, j, 1) != expected)
                throw NotDiagConstant("first level is not diagonal-constant at (" + std::to_string(i) + "," +
                                      std::to_string(j) + ")");
        }
    return out;
}

namespace detail {

void check_slack_dims(int p, int q, int r);
void check_col_index(int p, int q, int r, int j, int t);
void check_row_index(int p, int q, int r, int i, int s);

// Sum of the first t entries of column j of the stacked flattening without
// the first level, counted upwards from x_{p,j,2}.
template <typename T>
T column_partial(const BasicTensor3<T>& x, int j, int t) {
    if (t == 0) return T{};
    const int p = x.p();
    const int c = (t - 1) / p;
    const int d = t - c * p;
    T sum{};
    for (int k = 1; k <= c; ++k)
        for (int i = 1; i <= p; ++i) sum += x(i, j, k + 1);
    for (int i = p + 1 - d; i <= p; ++i) sum += x(i, j, c + 2);
    return sum;
}

// Row analogue: first s entries of row i of the concatenated flattening, read
// right to left from x_{i,q,2}.
template <typename T>
T row_partial(const BasicTensor3<T>& x, int i, int s) {
    if (s == 0) return T{};
    const int q = x.q();
    const int e = (s - 1) / q;
    const int f = s - e * q;
    T sum{};
    for (int k = 1; k <= e; ++k)
        for (int j = 1; j <= q; ++j) sum += x(i, j, k + 1);
    for (int j = q + 1 - f; j <= q; ++j) sum += x(i, j, e + 2);
    return sum;
}

} // namespace detail

/// Slack of the column inequality C(j, t): x_j + S_{j,t-1} - S_{j+1,t}, for
/// j in [p], t in [p(r-1)]; C(p, t) needs p < q.
template <typename T>
T col_ineq_slack(const BasicTensor3<T>& x, int j, int t) {
    detail::check_slack_dims(x.p(), x.q(), x.r());
    detail::check_col_index(x.p(), x.q(), x.r(), j, t);
    const T xj = diag_values(x)[j - 1];
    return xj + detail::column_partial(x, j, t - 1) - detail::column_partial(x, j + 1, t);
}

/// Slack of the row inequality R(i, s): x_i + S_{i,s-1} - S_{i+1,s}, for
/// i in [p-1], s in [q(r-1)].
template <typename T>
T row_ineq_slack(const BasicTensor3<T>& x, int i, int s) {
    detail::check_slack_dims(x.p(), x.q(), x.r());
    detail::check_row_index(x.p(), x.q(), x.r(), i, s);
    const T xi = diag_values(x)[i - 1];
    return xi + detail::row_partial(x, i, s - 1) - detail::row_partial(x, i + 1, s);
}

} // namespace kron
