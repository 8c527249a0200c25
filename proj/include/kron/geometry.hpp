#pragma once

#include <cstdint>
#include <vector>

#include "kron/tensor.hpp"

namespace kron {

/// Dimension of the column-row cone for p <= q <= pr.
int cone_dim(int p, int q, int r);

/// Upper bound on dim CR(lambda, mu; tau) for r >= 2 and p <= q <= pr.
int polytope_dim_bound(int p, int q, int r);

/// Interior point of the column-row cone built from an open hypercube of
/// dimension cone_dim(p, q, r). The free coordinates are drawn from the seed.
RationalTensor3 hypercube_sample(int p, int q, int r, std::uint64_t seed);

/// Builds the same point from explicit free coordinates u in (0, 1), one per
/// free cell in storage order (hypercube_free_cells gives the count).
RationalTensor3 hypercube_point(int p, int q, int r, const std::vector<Rational>& u);
int hypercube_free_cells(int p, int q, int r);

/// Dimension of the affine hull of the points.
int affine_rank(const std::vector<RationalTensor3>& points);

} // namespace kron
