#pragma once

#include <optional>
#include <vector>

#include "kron/cr_system.hpp"
#include "kron/face.hpp"
#include "kron/partition.hpp"

namespace kron {

/// Signed term h_gamma of the Jacobi-Trudi determinant for s_nu.
struct JTTerm {
    int sign;
    Composition gamma;
    friend bool operator==(const JTTerm&, const JTTerm&) = default;
};

/// Full permutation expansion in lexicographic order of permutations; terms
/// with a negative subscript are dropped and zero subscripts stripped.
std::vector<JTTerm> jt_expansion(const Partition& nu);

/// sign * h_rho * (h_(a,b) - h_(a+1,b-1)).
struct JTPairTerm {
    int sign;
    int a;
    int b;
    Composition rho;

    /// (a, b, rho...).
    Composition tau() const;
    /// (a+1, b-1, rho...); a zero second part is kept.
    Composition tau_bar() const;
    friend bool operator==(const JTPairTerm&, const JTPairTerm&) = default;
};

/// Cofactor expansion along columns 1..r-2, leaving 2x2 minors in the last two
/// columns. Requires length(nu) >= 2.
std::vector<JTPairTerm> jt_pair_expansion(const Partition& nu);

struct NormalizedTriple {
    Partition lambda;
    Partition mu;
    Partition nu;
    /// Set when the coefficient follows without counting: r = 1 or q > pr.
    std::optional<Count> shortcut;
};

/// Reorders the triple so that nu has minimal length (ties keep nu, then
/// lambda, then mu in that position) and l(lambda) <= l(mu).
NormalizedTriple normalize_triple(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Number of integer points of CR(lambda, mu; sorted tau), memoized.
Count cached_count(const Partition& lambda, const Partition& mu, const Composition& tau);

/// g(lambda, mu, nu) as the signed sum of column-row polytope counts over the
/// Jacobi-Trudi terms of nu. `threads` parallelizes over terms.
Count kron_via_cr(const Partition& lambda, const Partition& mu, const Partition& nu, int threads = 1);

/// Z_l: +1 on the first-level antidiagonal i+j = l, -1 on i+j = l+1 and +1
/// at (l, l, 2).
Tensor3 z_matrix(int ell, int p, int q, int r);

/// X + Z_l; throws InvalidInput if an entry becomes negative.
Tensor3 phi_ell(const Tensor3& x, int ell);

FacePredicate face_F_plus(const Partition& lambda, const Partition& mu, const Composition& tau, int ell);
FacePredicate face_F_minus(const Partition& lambda, const Partition& mu, const Composition& tau_bar, int ell);

struct FaceTerm {
    int sign;
    Composition tau;
    Composition tau_bar;
    Count count_plus;
    Count count_minus;
};

struct FaceResult {
    Count value;
    NormalizedTriple triple;
    std::vector<FaceTerm> terms;  ///< empty when the triple has a shortcut
};

/// g(lambda, mu, nu) from face counts of the pair expansion for a fixed l in [p].
FaceResult kron_via_faces_detailed(const Partition& lambda, const Partition& mu, const Partition& nu, int ell,
                                   int threads = 1);
Count kron_via_faces(const Partition& lambda, const Partition& mu, const Partition& nu, int ell, int threads = 1);

} // namespace kron
