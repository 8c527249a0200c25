#include "kron/cr_system.hpp"

namespace kron {

CRCone::CRCone(int p, int q, int r) : p_(p), q_(q), r_(r) {
    if (p < 0 || q < 0 || r < 0) throw InvalidInput("cone dimensions must be nonnegative");
    const std::size_t cells = static_cast<std::size_t>(p) * q * r;
    vanishing_.assign(cells, false);
    for (int k = 1; k <= r; ++k)
        for (int i = 1; i <= p; ++i)
            for (int j = 1; j <= q; ++j) {
                const int stacked_row = (r - k) * p + i;
                const int concat_col = (r - k) * q + j;
                if (stacked_row + j > p * r + 1 || i + concat_col > q * r + 1) vanishing_[cell(i, j, k)] = true;
            }

    auto stacked = [&](int row, int j) {
        return cell((row - 1) % p + 1, j, r - (row - 1) / p);
    };
    auto concatenated = [&](int i, int col) {
        return cell(i, (col - 1) % q + 1, r - (col - 1) / q);
    };
    auto push = [&](CellInequality ineq) {
        std::erase_if(ineq.lhs, [&](std::size_t c) { return vanishing_[c]; });
        std::erase_if(ineq.rhs, [&](std::size_t c) { return vanishing_[c]; });
        if (!ineq.rhs.empty()) inequalities_.push_back(std::move(ineq));
    };

    const int pr = p * r;
    const int qr = q * r;
    const int m_col = std::min(pr, q);
    for (int j = 1; j <= m_col - 1; ++j)
        for (int i = 2; i <= pr + 1 - j; ++i) {
            CellInequality ineq{CellInequality::Family::Column, i, j, {}, {}};
            for (int row = i; row <= pr + 1 - j; ++row) ineq.lhs.push_back(stacked(row, j));
            for (int row = i - 1; row <= pr - j; ++row) ineq.rhs.push_back(stacked(row, j + 1));
            push(std::move(ineq));
        }
    const int m_row = std::min(p, qr);
    for (int i = 1; i <= m_row - 1; ++i)
        for (int j = 2; j <= qr + 1 - i; ++j) {
            CellInequality ineq{CellInequality::Family::Row, i, j, {}, {}};
            for (int col = j; col <= qr + 1 - i; ++col) ineq.lhs.push_back(concatenated(i, col));
            for (int col = j - 1; col <= qr - i; ++col) ineq.rhs.push_back(concatenated(i + 1, col));
            push(std::move(ineq));
        }
}

CRCone::Index CRCone::index(std::size_t c) const {
    const int j = static_cast<int>(c % q_) + 1;
    c /= q_;
    const int i = static_cast<int>(c % p_) + 1;
    const int k = static_cast<int>(c / p_) + 1;
    return {i, j, k};
}

CRSystem::CRSystem(Partition lambda, Partition mu, Composition tau, bool transport_only)
    : lambda_(std::move(lambda)),
      mu_(std::move(mu)),
      tau_(std::move(tau)),
      transport_only_(transport_only),
      cone_(lambda_.length(), mu_.length(), tau_.length()) {
    if (lambda_.size() != mu_.size() || lambda_.size() != tau_.size())
        throw InvalidInput("CR system needs |lambda| = |mu| = |tau|, got " + lambda_.to_string() + ", " +
                           mu_.to_string() + ", " + tau_.to_string());
}

bool CRSystem::forced_zero(std::size_t cell) const {
    if (!transport_only_ && cone_.vanishing(cell)) return true;
    return tau_[cone_.index(cell).k - 1] == 0;
}

bool CRSystem::is_member(const Tensor3& x) const {
    if (x.p() != p() || x.q() != q() || x.r() != r())
        throw InvalidInput("tensor dims do not match the CR system");
    if (!x.nonnegative()) return false;
    const Marginals<int> m = marginals(x);
    if (m.rows != lambda_.parts() || m.cols != mu_.parts() || m.levels != tau_.parts()) return false;
    return transport_only_ || cone_.contains(x);
}

} // namespace kron
