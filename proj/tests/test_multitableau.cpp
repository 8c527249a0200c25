#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "kron/characters.hpp"
#include "kron/cr_system.hpp"
#include "kron/multitableau.hpp"
#include "kron/points.hpp"

using namespace kron;

namespace {

// All nonnegative integer tensors with the given marginals.
std::vector<Tensor3> transport_tensors(const Partition& lambda, const Partition& mu, const Composition& tau) {
    return enumerate_points(CRSystem(lambda, mu, tau, true));
}

} // namespace

TEST(LrSkewTableaux, SmallShapes) {
    const auto t = lr_skew_tableaux(Partition{2, 1}, Partition{1});
    ASSERT_EQ(t.size(), 2u);
    for (const auto& s : t) {
        EXPECT_TRUE(s.is_semistandard());
        EXPECT_TRUE(is_reverse_lattice(s.row_word()));
    }
    EXPECT_EQ(lr_skew_tableaux(Partition{2, 1}, Partition{}).size(), 1u);
}

TEST(LrMultitableaux, AreValidAndTyped) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& shape : partitions_of(n))
            for (const auto& type : compositions_of(n))
                for (const auto& m : lr_multitableaux(shape, type)) {
                    EXPECT_TRUE(m.is_valid());
                    EXPECT_EQ(m.shape(), shape);
                    EXPECT_EQ(m.type(), type);
                }
}

TEST(CountLrPairs, Examples) {
    EXPECT_EQ(count_lr_pairs(Partition{2, 1}, Partition{2, 1}, Composition{2, 1}), 2);
    EXPECT_EQ(count_lr_pairs(Partition{3, 1}, Partition{3, 1}, Composition{4}), 1);
    EXPECT_EQ(count_lr_pairs(Partition{2, 1}, Partition{2, 1}, Composition{3}), 1);
    EXPECT_THROW(count_lr_pairs(Partition{2, 1}, Partition{2}, Composition{3}), InvalidInput);
}

TEST(CountLrPairs, MatchesCharacterOracle) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& lambda : partitions_of(n))
            for (const auto& mu : partitions_of(n))
                for (const auto& tau : compositions_of(n))
                    EXPECT_EQ(count_lr_pairs(lambda, mu, tau), lr_oracle(lambda, mu, tau))
                        << lambda << " " << mu << " " << tau;
}

TEST(TensorImage, SingleLevelUsesCanonicalRecording) {
    Tensor3 a(2, 2, 1);
    a(1, 1, 1) = 1;
    a(1, 2, 1) = 1;
    a(2, 1, 1) = 1;
    const TensorImage img = tensor_image(a);
    EXPECT_EQ(img.p, canonical_tableau(Partition{2, 1}));
    EXPECT_EQ(img.q, canonical_tableau(Partition{2, 1}));
    ASSERT_EQ(img.s.tableaux.size(), 1u);
    EXPECT_EQ(img.s.tableaux[0], canonical_tableau(img.p.outer()));
}

TEST(TensorImage, UniquePointOfOneLevelPolytope) {
    const Partition lambda{3, 2};
    const auto points = enumerate_points(CRSystem(lambda, lambda, Composition{5}));
    ASSERT_EQ(points.size(), 1u);
    const TensorImage img = tensor_image(points.front());
    EXPECT_EQ(img.p, canonical_tableau(lambda));
    EXPECT_EQ(img.q, canonical_tableau(lambda));
}

TEST(TensorImage, TransposeSwapsSides) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& lambda : partitions_of(n))
            for (const auto& mu : partitions_of(n))
                for (const auto& tau : compositions_of(n))
                    for (const auto& a : transport_tensors(lambda, mu, tau)) {
                        const TensorImage img = tensor_image(a);
                        const TensorImage timg = tensor_image(a.transposed());
                        EXPECT_EQ(timg.p, img.q);
                        EXPECT_EQ(timg.q, img.p);
                        EXPECT_EQ(timg.s, img.t);
                        EXPECT_EQ(timg.t, img.s);
                    }
}

TEST(TensorImage, ImagesHaveTheExpectedShapesAndContents) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& lambda : partitions_of(n))
            for (const auto& mu : partitions_of(n))
                for (const auto& tau : compositions_of(n))
                    for (const auto& a : transport_tensors(lambda, mu, tau)) {
                        const TensorImage img = tensor_image(a);
                        EXPECT_EQ(img.p.content(), Composition(mu));
                        EXPECT_EQ(img.q.content(), Composition(lambda));
                        EXPECT_EQ(img.s.shape(), img.p.outer());
                        EXPECT_EQ(img.t.shape(), img.q.outer());
                        EXPECT_EQ(img.s.contents(), img.t.contents());
                        EXPECT_EQ(img.s.type(), tau);
                        EXPECT_TRUE(img.s.is_valid());
                        EXPECT_TRUE(img.t.is_valid());
                    }
}

TEST(TensorImage, InjectiveOnTransportTensors) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& lambda : partitions_of(n))
            for (const auto& mu : partitions_of(n))
                for (const auto& tau : compositions_of(n)) {
                    std::set<TensorImage> images;
                    const auto tensors = transport_tensors(lambda, mu, tau);
                    for (const auto& a : tensors) images.insert(tensor_image(a));
                    EXPECT_EQ(images.size(), tensors.size()) << lambda << " " << mu << " " << tau;
                }
}

// The bijection splits M(lambda, mu, tau) by the shapes (alpha, beta) of P
// and Q, so its size is sum K_{alpha,mu} K_{beta,lambda} #LR(alpha, beta; tau).
TEST(TensorImage, CardinalityIdentity) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& lambda : partitions_of(n))
            for (const auto& mu : partitions_of(n))
                for (const auto& tau : compositions_of(n)) {
                    Count expected = 0;
                    for (const auto& alpha : partitions_of(n))
                        for (const auto& beta : partitions_of(n))
                            expected += kostka(alpha, mu) * kostka(beta, lambda) * count_lr_pairs(beta, alpha, tau);
                    EXPECT_EQ(count_points(CRSystem(lambda, mu, tau, true)), expected)
                        << lambda << " " << mu << " " << tau;
                }
}

// Points of the column-row polytope are exactly the tensors whose P and Q are
// canonical.
TEST(TensorImage, PolytopePointsHaveCanonicalTableaux) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& lambda : partitions_of(n))
            for (const auto& mu : partitions_of(n))
                for (const auto& tau : compositions_of(n)) {
                    const CRSystem sys(lambda, mu, tau);
                    for (const auto& a : transport_tensors(lambda, mu, tau)) {
                        const TensorImage img = tensor_image(a);
                        const bool canonical = img.p == canonical_tableau(mu) && img.q == canonical_tableau(lambda);
                        EXPECT_EQ(sys.is_member(a), canonical) << lambda << " " << mu << " " << tau;
                    }
                }
}
