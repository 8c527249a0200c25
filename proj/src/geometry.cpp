#include "kron/geometry.hpp"

#include <random>
#include <string>

namespace kron {

namespace {

int choose2(int n) { return n * (n - 1) / 2; }

void check_cone_dims(int p, int q, int r) {
    if (p < 1 || q < 1 || r < 1) throw InvalidInput("dimensions must be positive");
    if (p > q || q > p * r)
        throw InvalidInput("dimensions must satisfy p <= q <= pr, got (" + std::to_string(p) + "," +
                           std::to_string(q) + "," + std::to_string(r) + ")");
}

// Level-1 cells take a value per diagonal; later levels take one per cell
// with i + j - 1 <= kp.
bool level_cell_free(int p, int i, int j, int k) { return k >= 2 && i + j - 1 <= k * p; }

} // namespace

int cone_dim(int p, int q, int r) {
    check_cone_dims(p, q, r);
    return p * q * r - choose2(p) - choose2(q);
}

int polytope_dim_bound(int p, int q, int r) {
    check_cone_dims(p, q, r);
    if (r < 2) throw InvalidInput("polytope dimension bound needs r >= 2");
    return cone_dim(p, q, r) - (p + q + r) + 2;
}

int hypercube_free_cells(int p, int q, int r) {
    check_cone_dims(p, q, r);
    int count = p;
    for (int k = 2; k <= r; ++k)
        for (int i = 1; i <= p; ++i)
            for (int j = 1; j <= q; ++j)
                if (level_cell_free(p, i, j, k)) ++count;
    return count;
}

RationalTensor3 hypercube_point(int p, int q, int r, const std::vector<Rational>& u) {
    const int free = hypercube_free_cells(p, q, r);
    if (static_cast<int>(u.size()) != free)
        throw InvalidInput("expected " + std::to_string(free) + " free coordinates");
    for (const Rational& v : u)
        if (v <= 0 || v >= 1) throw InvalidInput("free coordinates must lie in (0, 1)");

    // I_j = ((q-j)/q + 1/(4q), (q-j)/q + 3/(4q)); these are disjoint and
    // decrease with j.
    auto epsilon = [q](int j, const Rational& t) {
        return Rational(q - j, q) + (1 + 2 * t) / Rational(4 * q);
    };

    RationalTensor3 x(p, q, r);
    std::size_t next = 0;
    std::vector<Rational> diagonal(p);
    for (int d = 1; d <= p; ++d) diagonal[d - 1] = Rational(q * (r - 1)) + epsilon(d, u[next++]);
    for (int i = 1; i <= p; ++i)
        for (int j = 1; i + j - 1 <= p; ++j) x(i, j, 1) = diagonal[i + j - 2];
    for (int k = 2; k <= r; ++k)
        for (int i = 1; i <= p; ++i)
            for (int j = 1; j <= q; ++j)
                if (level_cell_free(p, i, j, k)) x(i, j, k) = epsilon(j, u[next++]);
    return x;
}

RationalTensor3 hypercube_sample(int p, int q, int r, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    constexpr std::uint64_t grid = 1u << 20;
    std::vector<Rational> u(hypercube_free_cells(p, q, r));
    for (Rational& v : u) v = Rational(static_cast<long long>(rng() % (grid - 1) + 1), static_cast<long long>(grid));
    return hypercube_point(p, q, r, u);
}

int affine_rank(const std::vector<RationalTensor3>& points) {
    if (points.empty()) throw InvalidInput("affine rank of an empty point set");
    const RationalTensor3& base = points.front();
    std::vector<std::vector<Rational>> rows;
    rows.reserve(points.size() - 1);
    for (std::size_t n = 1; n < points.size(); ++n) {
        if (points[n].p() != base.p() || points[n].q() != base.q() || points[n].r() != base.r())
            throw InvalidInput("points have different dimensions");
        std::vector<Rational> diff(base.cell_count());
        for (std::size_t c = 0; c < diff.size(); ++c) diff[c] = points[n].data()[c] - base.data()[c];
        rows.push_back(std::move(diff));
    }

    int rank = 0;
    const std::size_t cols = base.cell_count();
    for (std::size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t n = rank + 1; n < rows.size(); ++n) {
            if (rows[n][col] == 0) continue;
            const Rational factor = rows[n][col] / rows[rank][col];
            for (std::size_t c = col; c < cols; ++c) rows[n][c] -= factor * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

} // namespace kron
