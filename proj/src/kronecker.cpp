#include "kron/kronecker.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

#include "kron/parallel.hpp"
#include "kron/points.hpp"

namespace kron {

std::vector<JTTerm> jt_expansion(const Partition& nu) {
    const int r = nu.length();
    if (r == 0) throw InvalidInput("Jacobi-Trudi expansion needs a nonempty partition");
    std::vector<int> sigma(r);
    std::iota(sigma.begin(), sigma.end(), 1);
    std::vector<JTTerm> out;
    do {
        std::vector<int> gamma;
        bool negative = false;
        for (int i = 1; i <= r && !negative; ++i) {
            const int idx = nu[i - 1] - i + sigma[i - 1];
            if (idx < 0) negative = true;
            else if (idx > 0) gamma.push_back(idx);
        }
        if (negative) continue;
        int inversions = 0;
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                if (sigma[i] > sigma[j]) ++inversions;
        out.push_back({inversions % 2 == 0 ? 1 : -1, Composition(std::move(gamma))});
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

Composition JTPairTerm::tau() const {
    std::vector<int> parts{a, b};
    parts.insert(parts.end(), rho.begin(), rho.end());
    return Composition(std::move(parts));
}

Composition JTPairTerm::tau_bar() const {
    std::vector<int> parts{a + 1, b - 1};
    parts.insert(parts.end(), rho.begin(), rho.end());
    return Composition(std::move(parts));
}

namespace {

struct PairExpansion {
    const Partition& nu;
    int r;
    std::vector<JTPairTerm> out;

    int entry(int row, int col) const { return nu[row - 1] - row + col; }

    // `chosen[row]` holds the subscript taken from that row, or -1 if the
    // row is still free.
    void expand(int col, int sign, std::vector<int>& chosen) {
        std::vector<int> free_rows;
        for (int i = 1; i <= r; ++i)
            if (chosen[i] < 0) free_rows.push_back(i);
        if (col > r - 2) {
            const int i1 = free_rows[0], i2 = free_rows[1];
            std::vector<int> rho;
            for (int i = 1; i <= r; ++i)
                if (chosen[i] > 0) rho.push_back(chosen[i]);
            out.push_back({sign, entry(i1, r - 1), entry(i2, r), Composition(std::move(rho))});
            return;
        }
        for (std::size_t pos = 0; pos < free_rows.size(); ++pos) {
            const int row = free_rows[pos];
            const int idx = entry(row, col);
            if (idx < 0) continue;
            chosen[row] = idx;
            expand(col + 1, pos % 2 == 0 ? sign : -sign, chosen);
            chosen[row] = -1;
        }
    }
};

} // namespace

std::vector<JTPairTerm> jt_pair_expansion(const Partition& nu) {
    if (nu.length() < 2) throw InvalidInput("pair expansion needs a partition of length at least 2");
    PairExpansion expansion{nu, nu.length(), {}};
    std::vector<int> chosen(nu.length() + 1, -1);
    expansion.expand(1, 1, chosen);
    return std::move(expansion.out);
}

NormalizedTriple normalize_triple(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() != mu.size() || mu.size() != nu.size())
        throw PartitionError(PartitionError::Kind::SizeMismatch, "partitions " + lambda.to_string() + ", " +
                                                                     mu.to_string() + ", " + nu.to_string() +
                                                                     " have different sizes");
    NormalizedTriple t{lambda, mu, nu, std::nullopt};
    if (lambda.length() < t.nu.length()) {
        t = {mu, nu, lambda, std::nullopt};
    }
    if (mu.length() < t.nu.length()) {
        t = {lambda, nu, mu, std::nullopt};
    }
    if (t.lambda.length() > t.mu.length()) std::swap(t.lambda, t.mu);

    const int p = t.lambda.length(), q = t.mu.length(), r = t.nu.length();
    if (r <= 1) t.shortcut = t.lambda == t.mu ? 1 : 0;
    else if (q > p * r) t.shortcut = 0;
    return t;
}

namespace {

using CountKey = std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>;

std::mutex count_cache_mutex;
std::map<CountKey, Count> count_cache;

} // namespace

Count cached_count(const Partition& lambda, const Partition& mu, const Composition& tau) {
    const Partition sorted = tau.sorted();
    CountKey key{lambda.parts(), mu.parts(), sorted.parts()};
    {
        std::lock_guard lock(count_cache_mutex);
        if (auto it = count_cache.find(key); it != count_cache.end()) return it->second;
    }
    const Count value = count_points(CRSystem(lambda, mu, sorted));
    std::lock_guard lock(count_cache_mutex);
    count_cache.emplace(std::move(key), value);
    return value;
}

Count kron_via_cr(const Partition& lambda, const Partition& mu, const Partition& nu, int threads) {
    const NormalizedTriple t = normalize_triple(lambda, mu, nu);
    if (t.shortcut) return *t.shortcut;
    const auto terms = jt_expansion(t.nu);
    const auto counts = parallel_map(terms.size(), threads, [&](std::size_t n) {
        return cached_count(t.lambda, t.mu, terms[n].gamma);
    });
    Count total = 0;
    for (std::size_t n = 0; n < terms.size(); ++n)
        total = terms[n].sign > 0 ? checked_add(total, counts[n]) : checked_sub(total, counts[n]);
    if (total < 0)
        throw InternalError("negative coefficient for " + lambda.to_string() + ", " + mu.to_string() + ", " +
                            nu.to_string());
    return total;
}

Tensor3 z_matrix(int ell, int p, int q, int r) {
    if (r < 2) throw InvalidInput("Z_l needs r >= 2");
    if (ell < 1 || ell > p || ell > q) throw InvalidInput("Z_l index out of range");
    Tensor3 z(p, q, r);
    for (int i = 1; i <= p; ++i)
        for (int j = 1; j <= q; ++j) {
            if (i + j == ell) z(i, j, 1) = 1;
            else if (i + j == ell + 1) z(i, j, 1) = -1;
        }
    z(ell, ell, 2) = 1;
    return z;
}

Tensor3 phi_ell(const Tensor3& x, int ell) {
    Tensor3 out = x + z_matrix(ell, x.p(), x.q(), x.r());
    if (!out.nonnegative()) throw InvalidInput("Phi_l produces a negative entry");
    return out;
}

namespace {

void check_face_args(const Partition& lambda, const Partition& mu, const Composition& tau, int ell) {
    const int p = lambda.length(), q = mu.length(), r = tau.length();
    if (p > q || q > p * r || r < 2) throw InvalidInput("face unions need 2 <= r and p <= q <= pr");
    if (ell < 1 || ell > p) throw InvalidInput("l must lie in [1, p]");
}

FacePredicate defined_union(std::vector<FacePredicate> members, int p, int q, int r) {
    std::vector<FacePredicate> kept;
    for (auto& m : members) {
        try {
            m.validate(p, q, r);
        } catch (const InvalidInput&) {
            continue;
        }
        kept.push_back(std::move(m));
    }
    return FacePredicate::any_of(std::move(kept));
}

} // namespace

FacePredicate face_F_plus(const Partition& lambda, const Partition& mu, const Composition& tau, int ell) {
    check_face_args(lambda, mu, tau, ell);
    const int p = lambda.length(), q = mu.length(), r = tau.length();
    std::vector<FacePredicate> members;
    if (ell >= 2) members.push_back(FacePredicate::diag_zero(ell - 1));
    members.push_back(FacePredicate::entry_zero(ell));
    if (ell >= 2) {
        for (int t = 1; t <= p - ell; ++t) members.push_back(FacePredicate::col_tight(ell - 1, t));
        for (int s = 1; s <= q - ell; ++s) members.push_back(FacePredicate::row_tight(ell - 1, s));
    }
    return defined_union(std::move(members), p, q, r);
}

FacePredicate face_F_minus(const Partition& lambda, const Partition& mu, const Composition& tau_bar, int ell) {
    check_face_args(lambda, mu, tau_bar, ell);
    const int p = lambda.length(), q = mu.length(), r = tau_bar.length();
    std::vector<FacePredicate> members;
    if (ell == p && p == q) {
        members.push_back(FacePredicate::diag_zero(p));
    } else {
        for (int t = 1; t <= p - ell + 1; ++t) members.push_back(FacePredicate::col_tight(ell, t));
        if (ell <= p - 1)
            for (int s = 1; s <= q - ell + 1; ++s) members.push_back(FacePredicate::row_tight(ell, s));
    }
    return defined_union(std::move(members), p, q, r);
}

namespace {

Count face_count(const Partition& lambda, const Partition& mu, const Composition& tau, int ell, bool plus) {
    const int p = lambda.length(), q = mu.length(), r = tau.length();
    if (q > p * r) return 0;
    const CRSystem sys(lambda, mu, tau);
    const FacePredicate face = plus ? face_F_plus(lambda, mu, tau, ell) : face_F_minus(lambda, mu, tau, ell);
    return count_points(sys, face);
}

} // namespace

FaceResult kron_via_faces_detailed(const Partition& lambda, const Partition& mu, const Partition& nu, int ell,
                                   int threads) {
    FaceResult result{0, normalize_triple(lambda, mu, nu), {}};
    const NormalizedTriple& t = result.triple;
    if (ell < 1 || (!t.shortcut && ell > t.lambda.length()))
        throw InvalidInput("l = " + std::to_string(ell) + " is outside [1, " + std::to_string(t.lambda.length()) +
                           "]");
    if (t.shortcut) {
        result.value = *t.shortcut;
        return result;
    }
    const auto pairs = jt_pair_expansion(t.nu);
    result.terms = parallel_map(pairs.size(), threads, [&](std::size_t n) {
        const JTPairTerm& term = pairs[n];
        const Composition tau = term.tau();
        const Composition tau_bar = term.tau_bar();
        return FaceTerm{term.sign, tau, tau_bar, face_count(t.lambda, t.mu, tau, ell, true),
                        face_count(t.lambda, t.mu, tau_bar, ell, false)};
    });
    Count total = 0;
    for (const FaceTerm& term : result.terms) {
        const Count diff = checked_sub(term.count_plus, term.count_minus);
        total = term.sign > 0 ? checked_add(total, diff) : checked_sub(total, diff);
    }
    if (total < 0)
        throw InternalError("negative coefficient for " + lambda.to_string() + ", " + mu.to_string() + ", " +
                            nu.to_string());
    result.value = total;
    return result;
}

Count kron_via_faces(const Partition& lambda, const Partition& mu, const Partition& nu, int ell, int threads) {
    return kron_via_faces_detailed(lambda, mu, nu, ell, threads).value;
}

} // namespace kron
