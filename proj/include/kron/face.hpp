#pragma once

#include <string>
#include <vector>

#include "kron/tensor.hpp"

namespace kron {

/// Condition selecting a face of a column-row polytope.
class FacePredicate {
public:
    enum class Kind {
        DiagZero,   ///< x_i = 0 for the i-th first-level diagonal value
        EntryZero,  ///< x_{l,l,2} = 0
        ColTight,   ///< column inequality C(j, t) holds with equality
        RowTight,   ///< row inequality R(i, s) holds with equality
        Union       ///< any member holds
    };

    static FacePredicate diag_zero(int i) { return {Kind::DiagZero, i, 0, {}}; }
    static FacePredicate entry_zero(int ell) { return {Kind::EntryZero, ell, 0, {}}; }
    static FacePredicate col_tight(int j, int t) { return {Kind::ColTight, j, t, {}}; }
    static FacePredicate row_tight(int i, int s) { return {Kind::RowTight, i, s, {}}; }
    static FacePredicate any_of(std::vector<FacePredicate> members) { return {Kind::Union, 0, 0, std::move(members)}; }

    Kind kind() const noexcept { return kind_; }
    int first() const noexcept { return first_; }
    int second() const noexcept { return second_; }
    const std::vector<FacePredicate>& members() const noexcept { return members_; }

    /// Throws InvalidInput if an index is out of range for p x q x r tensors
    /// or names an inequality that is not defined for these dimensions.
    void validate(int p, int q, int r) const;
    /// Expects a member of the cone with p <= q <= pr.
    bool holds(const Tensor3& x) const;

    std::string to_string() const;

    friend bool operator==(const FacePredicate&, const FacePredicate&) = default;

private:
    FacePredicate(Kind kind, int first, int second, std::vector<FacePredicate> members)
        : kind_(kind), first_(first), second_(second), members_(std::move(members)) {}

    Kind kind_;
    int first_;
    int second_;
    std::vector<FacePredicate> members_;
};

} // namespace kron
