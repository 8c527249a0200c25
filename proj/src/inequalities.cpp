#include "kron/inequalities.hpp"

namespace kron::detail {

void check_slack_dims(int p, int q, int r) {
    if (p < 1 || p > q || q > p * r)
        throw InvalidInput("column/row inequalities need 1 <= p <= q <= pr, got (" + std::to_string(p) + "," +
                           std::to_string(q) + "," + std::to_string(r) + ")");
}

void check_col_index(int p, int q, int r, int j, int t) {
    if (j < 1 || j > p || t < 1 || t > p * (r - 1))
        throw InvalidInput("C(" + std::to_string(j) + "," + std::to_string(t) + ") out of range");
    if (j == p && p == q) throw InvalidInput("C(p, t) is only defined when p < q");
}

void check_row_index(int p, int q, int r, int i, int s) {
    if (i < 1 || i > p - 1 || s < 1 || s > q * (r - 1))
        throw InvalidInput("R(" + std::to_string(i) + "," + std::to_string(s) + ") out of range");
}

} // namespace kron::detail
