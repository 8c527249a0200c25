#pragma once

#include <vector>

#include "kron/partition.hpp"
#include "kron/tableau.hpp"
#include "kron/tensor.hpp"

namespace kron {


/// Sequence of Littlewood-Richardson skew tableaux filling a chain of shapes
/// empty = s(0) <= s(1) <= ... <= s(r).
struct LRMultitableau {
    std::vector<SkewTableau> tableaux;

    Partition shape() const;
    /// Sizes of the successive skew tableaux.
    Composition type() const;
    /// Content of each skew tableau; each is a partition.
    std::vector<Partition> contents() const;
    /// Semistandard, reverse-lattice row words and a consistent shape chain.
    bool is_valid() const;

    friend bool operator==(const LRMultitableau&, const LRMultitableau&) = default;
    friend auto operator<=>(const LRMultitableau&, const LRMultitableau&) = default;
};

/// All Littlewood-Richardson skew tableaux of shape outer/inner, ordered
/// lexicographically by their rows.
std::vector<SkewTableau> lr_skew_tableaux(const Partition& outer, const Partition& inner);

/// All LR multitableaux of the given shape and type, depth first over shape
/// chains and in lexicographic order of entries within each step.
std::vector<LRMultitableau> lr_multitableaux(const Partition& shape, const Composition& type);

/// #LR(lambda, mu; tau): pairs of LR multitableaux of shapes lambda and mu and
/// type tau with equal contents, by exhaustive enumeration.
Count count_lr_pairs(const Partition& lambda, const Partition& mu, const Composition& tau);

/// Image of a tensor under the level-wise RSK bijection: A <-> (Q, P, (T, S)).
struct TensorImage {
    SkewTableau q;       ///< content = row marginal
    SkewTableau p;       ///< content = column marginal
    LRMultitableau t;    ///< shape sh(q)
    LRMultitableau s;    ///< shape sh(p)
    friend bool operator==(const TensorImage&, const TensorImage&) = default;
    friend auto operator<=>(const TensorImage&, const TensorImage&) = default;
};

/// Combines the RSK pairs of the level matrices. The tableau P is the product
/// P_r ... P_1 built by column inserting the column word of each P_k; S_k
/// records the column word of C(sh(P_k)) in the new boxes. (Q, T) likewise
/// from the Q_k.
TensorImage tensor_image(const Tensor3& a);

} // namespace kron
