#include "kron/characters.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <vector>

namespace kron {

BigInt factorial(int n) {
    BigInt out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

BigInt CycleType::centralizer_order() const {
    BigInt z = 1;
    std::map<int, int> multiplicity;
    for (int c : cycles_) ++multiplicity[c];
    for (const auto& [length, m] : multiplicity) {
        for (int t = 0; t < m; ++t) z *= length;
        z *= factorial(m);
    }
    return z;
}

BigInt CycleType::class_size() const { return factorial(size()) / centralizer_order(); }

namespace {

// Beta-set of lambda with `len` beads: lambda_i + len - i for i = 1..len.
std::vector<int> beta_set(const std::vector<int>& parts, int len) {
    std::vector<int> beads(len);
    for (int i = 0; i < len; ++i) beads[i] = (i < static_cast<int>(parts.size()) ? parts[i] : 0) + len - 1 - i;
    return beads;
}

std::vector<int> from_beta_set(std::vector<int> beads) {
    std::sort(beads.begin(), beads.end(), std::greater<>());
    const int len = static_cast<int>(beads.size());
    std::vector<int> parts(len);
    for (int i = 0; i < len; ++i) parts[i] = beads[i] - (len - 1 - i);
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return parts;
}

using CharKey = std::pair<std::vector<int>, std::vector<int>>;

BigInt mn_recursive(const std::vector<int>& shape, const std::vector<int>& cycles, std::size_t next,
                    std::map<CharKey, BigInt>& memo) {
    if (next == cycles.size()) return shape.empty() ? 1 : 0;
    CharKey key{shape, std::vector<int>(cycles.begin() + next, cycles.end())};
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    // Removing a rim hook of length h moves one bead from b to b - h; the
    // height is the number of beads jumped over.
    const int h = cycles[next];
    const int len = static_cast<int>(shape.size());
    std::vector<int> beads = beta_set(shape, len);
    BigInt total = 0;
    for (int idx = 0; idx < len; ++idx) {
        const int from = beads[idx];
        const int to = from - h;
        if (to < 0) continue;
        if (std::find(beads.begin(), beads.end(), to) != beads.end()) continue;
        int jumped = 0;
        for (int b : beads)
            if (b > to && b < from) ++jumped;
        std::vector<int> moved = beads;
        moved[idx] = to;
        const BigInt rest = mn_recursive(from_beta_set(moved), cycles, next + 1, memo);
        if (jumped % 2) total -= rest;
        else total += rest;
    }
    memo.emplace(std::move(key), total);
    return total;
}

Count to_count(const BigInt& v) {
    if (v > std::numeric_limits<Count>::max() || v < std::numeric_limits<Count>::min())
        throw std::overflow_error("coefficient does not fit in 64 bits");
    return static_cast<Count>(v);
}

} // namespace

BigInt character_value(const Partition& lambda, const CycleType& rho) {
    if (lambda.size() != rho.size())
        throw InvalidInput("character_value: |" + lambda.to_string() + "| != |" + rho.cycles().to_string() + "|");
    thread_local std::map<CharKey, BigInt> memo;
    return mn_recursive(lambda.parts(), rho.cycles().parts(), 0, memo);
}

BigInt perm_character_value(const Composition& tau, const CycleType& rho) {
    if (tau.size() != rho.size())
        throw InvalidInput("perm_character_value: |" + tau.to_string() + "| != |" + rho.cycles().to_string() + "|");
    std::map<int, int> multiplicity;
    for (int c : rho.cycles()) ++multiplicity[c];
    std::vector<std::pair<int, int>> groups(multiplicity.rbegin(), multiplicity.rend());
    const std::vector<int> blocks = tau.without_zeros().parts();
    const int nblocks = static_cast<int>(blocks.size());

    // Deal the m cycles of one length into blocks with counts k_b; there are
    // m! / prod k_b! ways.
    std::map<std::pair<std::size_t, std::vector<int>>, BigInt> memo;
    std::function<BigInt(std::size_t, std::vector<int>&)> by_group = [&](std::size_t g,
                                                                       std::vector<int>& room) -> BigInt {
        if (g == groups.size()) return std::all_of(room.begin(), room.end(), [](int v) { return v == 0; }) ? 1 : 0;
        auto key = std::make_pair(g, room);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        const auto [length, m] = groups[g];
        BigInt total = 0;
        std::vector<int> counts(nblocks, 0);
        std::function<void(int, int)> deal = [&](int b, int left) {
            if (b == nblocks) {
                if (left != 0) return;
                BigInt ways = factorial(m);
                for (int kb : counts) ways /= factorial(kb);
                total += ways * by_group(g + 1, room);
                return;
            }
            for (int kb = 0; kb <= left && kb * length <= room[b]; ++kb) {
                counts[b] = kb;
                room[b] -= kb * length;
                deal(b + 1, left - kb);
                room[b] += kb * length;
            }
            counts[b] = 0;
        };
        deal(0, m);
        memo.emplace(std::move(key), total);
        return total;
    };
    std::vector<int> room = blocks;
    return by_group(0, room);
}

Count g_oracle(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() != mu.size() || lambda.size() != nu.size())
        throw InvalidInput("g_oracle: partitions of different sizes");
    const int n = lambda.size();
    BigInt sum = 0;
    for (const Partition& rho : partitions_of(n)) {
        const CycleType c(rho);
        sum += c.class_size() * character_value(lambda, c) * character_value(mu, c) * character_value(nu, c);
    }
    const BigInt order = factorial(n);
    if (sum % order != 0) throw InternalError("g_oracle: class sum not divisible by n!");
    return to_count(sum / order);
}

Count lr_oracle(const Partition& lambda, const Partition& mu, const Composition& tau) {
    if (lambda.size() != mu.size() || lambda.size() != tau.size())
        throw InvalidInput("lr_oracle: arguments of different sizes");
    const int n = lambda.size();
    BigInt sum = 0;
    for (const Partition& rho : partitions_of(n)) {
        const CycleType c(rho);
        sum += c.class_size() * character_value(lambda, c) * character_value(mu, c) * perm_character_value(tau, c);
    }
    const BigInt order = factorial(n);
    if (sum % order != 0) throw InternalError("lr_oracle: class sum not divisible by n!");
    return to_count(sum / order);
}

} // namespace kron
