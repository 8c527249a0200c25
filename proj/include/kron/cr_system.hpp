#pragma once

#include <cstddef>
#include <vector>

#include "kron/partition.hpp"
#include "kron/tensor.hpp"

namespace kron {

/// Linear inequality sum_{lhs} x >= sum_{rhs} x over tensor cells.
struct CellInequality {
    enum class Family { Column, Row };
    Family family;
    /// Column family: column j of the stacked flattening, starting row i.
    /// Row family: row i of the concatenated flattening, starting column j.
    int i;
    int j;
    std::vector<std::size_t> lhs;  ///< flat cell indices
    std::vector<std::size_t> rhs;
};

/// Vanishing conditions and column/row inequalities on p x q x r tensors. The
/// stacked flattening [X^(r); ...; X^(1)] carries the column family and the
/// concatenated [X^(r) ... X^(1)] the row family.
class CRCone {
public:
    CRCone(int p, int q, int r);

    int p() const noexcept { return p_; }
    int q() const noexcept { return q_; }
    int r() const noexcept { return r_; }
    std::size_t cell_count() const noexcept { return vanishing_.size(); }

    std::size_t cell(int i, int j, int k) const {
        return (static_cast<std::size_t>(k - 1) * p_ + (i - 1)) * q_ + (j - 1);
    }
    /// (i, j, k) of a flat cell index.
    struct Index { int i, j, k; };
    Index index(std::size_t cell) const;

    /// Forced zero by the vanishing conditions on either flattening.
    bool vanishing(std::size_t cell) const { return vanishing_[cell]; }
    const std::vector<CellInequality>& inequalities() const noexcept { return inequalities_; }

    /// Vanishing cells zero, every inequality satisfied, every entry >= 0.
    template <typename T>
    bool contains(const BasicTensor3<T>& x) const {
        if (x.p() != p_ || x.q() != q_ || x.r() != r_) throw InvalidInput("tensor dims do not match the cone");
        const auto& data = x.data();
        for (std::size_t c = 0; c < data.size(); ++c) {
            if (data[c] < 0) return false;
            if (vanishing_[c] && data[c] != 0) return false;
        }
        for (const auto& ineq : inequalities_) {
            T lhs{}, rhs{};
            for (std::size_t c : ineq.lhs) lhs += data[c];
            for (std::size_t c : ineq.rhs) rhs += data[c];
            if (lhs < rhs) return false;
        }
        return true;
    }

private:
    int p_, q_, r_;
    std::vector<bool> vanishing_;
    std::vector<CellInequality> inequalities_;
};

/// Full description of CR(lambda, mu; tau): the cone for (l(lambda), l(mu),
/// length(tau)) sliced by the marginal equalities. With `transport_only` the
/// cone constraints are dropped, leaving the transportation polytope.
class CRSystem {
public:
    CRSystem(Partition lambda, Partition mu, Composition tau, bool transport_only = false);

    const Partition& lambda() const noexcept { return lambda_; }
    const Partition& mu() const noexcept { return mu_; }
    const Composition& tau() const noexcept { return tau_; }
    bool transport_only() const noexcept { return transport_only_; }
    int p() const noexcept { return cone_.p(); }
    int q() const noexcept { return cone_.q(); }
    int r() const noexcept { return cone_.r(); }
    const CRCone& cone() const noexcept { return cone_; }

    /// Cell is forced to zero (vanishing condition or a zero level).
    bool forced_zero(std::size_t cell) const;

    bool is_member(const Tensor3& x) const;

private:
    Partition lambda_;
    Partition mu_;
    Composition tau_;
    bool transport_only_;
    CRCone cone_;
};

} // namespace kron
