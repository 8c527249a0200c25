#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "kron/errors.hpp"

namespace kron {

class PartitionError : public InvalidInput {
public:
    enum class Kind { NonInteger, NegativePart, NotWeaklyDecreasing, SizeMismatch };

    PartitionError(Kind kind, const std::string& what) : InvalidInput(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// Weakly decreasing sequence of positive integers. Zero parts are stripped on
/// construction, so the empty partition is the unique partition of 0.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// 0-based access; parts past the length read as 0.
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    auto begin() const noexcept { return parts_.begin(); }
    auto end() const noexcept { return parts_.end(); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

    std::string to_string() const;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Ordered sequence of nonnegative integers. Zero parts are kept, and level
/// indices line up with tensor levels.
class Composition {
public:
    Composition() = default;
    Composition(std::initializer_list<int> parts);
    explicit Composition(std::vector<int> parts);
    Composition(const Partition& p) : Composition(p.parts()) {}  // NOLINT(implicit)

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    auto begin() const noexcept { return parts_.begin(); }
    auto end() const noexcept { return parts_.end(); }

    /// Drops zero parts, keeping the order of the others.
    Composition without_zeros() const;
    /// Sorts the parts decreasingly and drops zeros.
    Partition sorted() const;
    bool has_zero_part() const;

    friend bool operator==(const Composition&, const Composition&) = default;
    friend std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
        return a.parts_ <=> b.parts_;
    }

    std::string to_string() const;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Composition& c);

/// Parses `INT ("," INT)*`; whitespace around tokens is ignored and trailing zeros are dropped.
Partition parse_partition(std::string_view text);
/// Same grammar; every part must be positive.
Composition parse_composition(std::string_view text);

/// Dominance order: every prefix sum of `a` is at least the matching prefix sum of `b`.
bool dominance_geq(const Partition& a, const Partition& b);

Partition conjugate(const Partition& p);

/// Coordinatewise minimum.
Partition intersection(const Partition& a, const Partition& b);

/// Whether the Young diagram of `inner` fits inside that of `outer`.
bool contains(const Partition& outer, const Partition& inner);

/// All partitions of n in reverse lexicographic order, (n) first.
std::vector<Partition> partitions_of(int n);

/// All compositions of n with positive parts, in lexicographic order.
std::vector<Composition> compositions_of(int n);

/// Every distinct reordering of the parts of `c`, in lexicographic order.
std::vector<Composition> reorderings(const Composition& c);

} // namespace kron
