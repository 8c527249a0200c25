#pragma once

#include <span>
#include <utility>
#include <vector>

#include "kron/matrix.hpp"
#include "kron/partition.hpp"

namespace kron {

using Word = std::vector<int>;

/// Filling of the skew diagram outer/inner with positive integers. Row i of
/// `rows()` holds the entries of that row from left to right, starting at
/// column inner[i]. Straight shapes have an empty inner partition.
class SkewTableau {
public:
    SkewTableau() = default;
    /// Throws InvalidInput if inner is not contained in outer or the row
    /// lengths do not match the skew shape. Semistandardness is not enforced
    /// here; see is_semistandard().
    SkewTableau(Partition outer, Partition inner, std::vector<std::vector<int>> rows);
    /// Straight-shape tableau whose shape is read off the row lengths.
    static SkewTableau straight(std::vector<std::vector<int>> rows);

    const Partition& outer() const noexcept { return outer_; }
    const Partition& inner() const noexcept { return inner_; }
    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }

    /// Entry at 0-based (row, column) in absolute diagram coordinates.
    int at(int row, int col) const;
    int box_count() const noexcept { return outer_.size() - inner_.size(); }

    /// Number of 1s, 2s, ... up to the largest entry.
    Composition content() const;
    bool is_semistandard() const;

    /// Left to right within rows, rows taken bottom to top.
    Word row_word() const;
    /// Bottom to top within columns, columns taken left to right.
    Word column_word() const;

    friend bool operator==(const SkewTableau&, const SkewTableau&) = default;
    friend auto operator<=>(const SkewTableau& a, const SkewTableau& b) {
        if (auto c = a.outer_ <=> b.outer_; c != 0) return c;
        if (auto c = a.inner_ <=> b.inner_; c != 0) return c;
        return a.rows_ <=> b.rows_;
    }

private:
    Partition outer_;
    Partition inner_;
    std::vector<std::vector<int>> rows_;
};

bool is_reverse_lattice(std::span<const int> word);

/// Row i holds the value i, lambda_i times.
SkewTableau canonical_tableau(const Partition& shape);
bool is_canonical(const SkewTableau& t);

/// Rows of a straight tableau under construction.
using TableauRows = std::vector<std::vector<int>>;

/// Schensted row insertion; returns the 0-based row of the new box.
int row_insert(TableauRows& rows, int value);
/// Column insertion; returns the 0-based (row, column) of the new box.
std::pair<int, int> column_insert(TableauRows& rows, int value);

/// P(w) by row inserting w_1, ..., w_l into the empty tableau.
SkewTableau insertion_tableau(std::span<const int> word);
/// P(w) by column inserting w_l first and w_1 last.
SkewTableau column_insertion_tableau(std::span<const int> word);

/// Pairs (row, column) with multiplicity b_ij in lexicographic order.
struct TwoRowArray {
    std::vector<int> top;
    std::vector<int> bottom;
};
TwoRowArray two_row_array(const IntMatrix& b);

struct RskPair {
    SkewTableau p;  ///< insertion tableau, content = column sums
    SkewTableau q;  ///< recording tableau, content = row sums
    friend bool operator==(const RskPair&, const RskPair&) = default;
};

RskPair rsk(const IntMatrix& b);

struct CanonicalConditions {
    bool p_canonical = false;
    bool q_canonical = false;
};

/// Evaluates the vanishing and partial-sum inequalities that characterise
/// when the RSK insertion tableau (resp. recording tableau) of `b` is
/// canonical. Works straight from the entries; never runs RSK.
CanonicalConditions main_lemma_conditions(const IntMatrix& b);

/// True iff the first m = min(rows, cols) diagonals of `b` are constant and all
/// entries with i + j > m + 1 vanish.
bool diagonals_constant(const IntMatrix& b);

/// Number of semistandard tableaux of shape `shape` and content `content`.
Count kostka(const Partition& shape, const Composition& content);

/// All semistandard tableaux of the given straight shape and content, in
/// lexicographic order of their rows.
std::vector<SkewTableau> semistandard_tableaux(const Partition& shape, const Composition& content);

} // namespace kron
