#include <gtest/gtest.h>

#include <algorithm>

#include "kron/characters.hpp"
#include "kron/tableau.hpp"

using namespace kron;

namespace {

std::vector<int> ones(int n) { return std::vector<int>(n, 1); }

} // namespace

TEST(CycleType, ClassSizesSumToFactorial) {
    for (int n = 1; n <= 8; ++n) {
        BigInt total = 0;
        for (const auto& rho : partitions_of(n)) total += CycleType(rho).class_size();
        EXPECT_EQ(total, factorial(n));
    }
    EXPECT_EQ(CycleType(Partition{2, 1, 1}).centralizer_order(), 4);
}

TEST(CharacterValue, Examples) {
    for (const auto& rho : partitions_of(5)) EXPECT_EQ(character_value(Partition{5}, CycleType(rho)), 1);
    EXPECT_EQ(character_value(Partition{1, 1, 1}, CycleType(Partition{3})), 1);
    EXPECT_EQ(character_value(Partition{2, 1}, CycleType(Partition{1, 1, 1})), 2);
    EXPECT_THROW(character_value(Partition{2, 1}, CycleType(Partition{2})), InvalidInput);
}

TEST(CharacterValue, SignCharacter) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& rho : partitions_of(n)) {
            const int even = std::count_if(rho.begin(), rho.end(), [](int c) { return c % 2 == 0; });
            EXPECT_EQ(character_value(Partition(ones(n)), CycleType(rho)), even % 2 == 0 ? 1 : -1);
        }
}

TEST(CharacterValue, RowOrthogonality) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& a : partitions_of(n))
            for (const auto& b : partitions_of(n)) {
                BigInt sum = 0;
                for (const auto& rho : partitions_of(n)) {
                    const CycleType c(rho);
                    sum += c.class_size() * character_value(a, c) * character_value(b, c);
                }
                EXPECT_EQ(sum, a == b ? factorial(n) : BigInt(0));
            }
}

TEST(PermCharacter, Examples) {
    EXPECT_EQ(perm_character_value(Composition{2, 1}, CycleType(Partition{1, 1, 1})), 3);
    for (const auto& rho : partitions_of(4)) EXPECT_EQ(perm_character_value(Composition{4}, CycleType(rho)), 1);
    for (const auto& rho : partitions_of(4)) {
        const BigInt expected = rho == Partition(ones(4)) ? factorial(4) : BigInt(0);
        EXPECT_EQ(perm_character_value(Composition(ones(4)), CycleType(rho)), expected);
    }
}

TEST(PermCharacter, YoungsRuleForCharacters) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& tau : compositions_of(n))
            for (const auto& rho : partitions_of(n)) {
                BigInt sum = 0;
                for (const auto& g : partitions_of(n)) sum += kostka(g, tau) * character_value(g, CycleType(rho));
                EXPECT_EQ(perm_character_value(tau, CycleType(rho)), sum);
            }
}

TEST(GOracle, Examples) {
    EXPECT_EQ(g_oracle(Partition{2, 1}, Partition{2, 1}, Partition{2, 1}), 1);
    for (const auto& a : partitions_of(5))
        for (const auto& b : partitions_of(5)) EXPECT_EQ(g_oracle(Partition{5}, a, b), a == b ? 1 : 0);
    EXPECT_EQ(g_oracle(Partition(ones(5)), Partition(ones(5)), Partition{5}), 1);
    EXPECT_THROW(g_oracle(Partition{2}, Partition{2}, Partition{1}), InvalidInput);
}

TEST(GOracle, SymmetricUnderPermutations) {
    for (int n = 1; n <= 6; ++n) {
        const auto parts = partitions_of(n);
        for (const auto& a : parts)
            for (const auto& b : parts)
                for (const auto& c : parts) {
                    const Count g = g_oracle(a, b, c);
                    EXPECT_GE(g, 0);
                    EXPECT_EQ(g_oracle(a, c, b), g);
                    EXPECT_EQ(g_oracle(b, a, c), g);
                    EXPECT_EQ(g_oracle(b, c, a), g);
                    EXPECT_EQ(g_oracle(c, a, b), g);
                    EXPECT_EQ(g_oracle(c, b, a), g);
                }
    }
}

TEST(LrOracle, Examples) {
    EXPECT_EQ(lr_oracle(Partition{2, 1}, Partition{2, 1}, Composition{2, 1}), 2);
    for (const auto& l : partitions_of(5)) EXPECT_EQ(lr_oracle(l, l, Composition{5}), 1);
}

TEST(LrOracle, InvariantUnderReordering) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& a : partitions_of(n))
            for (const auto& b : partitions_of(n))
                for (const auto& tau : compositions_of(n))
                    EXPECT_EQ(lr_oracle(a, b, tau), lr_oracle(a, b, tau.sorted()));
}

TEST(LrOracle, YoungsRule) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& a : partitions_of(n))
            for (const auto& b : partitions_of(n))
                for (const auto& tau : compositions_of(n)) {
                    Count sum = 0;
                    for (const auto& g : partitions_of(n)) sum += kostka(g, tau) * g_oracle(a, b, g);
                    EXPECT_EQ(lr_oracle(a, b, tau), sum);
                }
}
