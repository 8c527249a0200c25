#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "kron/partition.hpp"

namespace kron {

using BigInt = boost::multiprecision::cpp_int;

/// Conjugacy class of S_n given by its cycle type.
class CycleType {
public:
    explicit CycleType(Partition cycles) : cycles_(std::move(cycles)) {}
    const Partition& cycles() const noexcept { return cycles_; }
    int size() const noexcept { return cycles_.size(); }
    /// z = prod_i i^{m_i} m_i!, the order of the centraliser.
    BigInt centralizer_order() const;
    /// n! / z.
    BigInt class_size() const;

private:
    Partition cycles_;
};

BigInt factorial(int n);

/// Irreducible character value chi^lambda(rho), Murnaghan-Nakayama.
BigInt character_value(const Partition& lambda, const CycleType& rho);

/// Permutation character phi^tau(rho) of S_n acting on S_n / S_tau: the number
/// of ways to deal the cycles of rho into blocks of sizes tau_1, ..., tau_r.
BigInt perm_character_value(const Composition& tau, const CycleType& rho);

/// Kronecker coefficient <chi^lambda chi^mu, chi^nu> from class sums.
Count g_oracle(const Partition& lambda, const Partition& mu, const Partition& nu);

/// <chi^lambda chi^mu, phi^tau> from class sums.
Count lr_oracle(const Partition& lambda, const Partition& mu, const Composition& tau);

} // namespace kron
