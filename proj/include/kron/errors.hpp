#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kron {

/// Bad user-supplied data: malformed partitions, size mismatches, indices out of range.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A result that can only come from a bug (negative coefficient, non-integral oracle, ...).
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

using Count = std::int64_t;

inline Count checked_add(Count a, Count b) {
    Count out;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer overflow in addition");
    return out;
}

inline Count checked_sub(Count a, Count b) {
    Count out;
    if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("integer overflow in subtraction");
    return out;
}

inline Count checked_mul(Count a, Count b) {
    Count out;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow in multiplication");
    return out;
}

} // namespace kron
