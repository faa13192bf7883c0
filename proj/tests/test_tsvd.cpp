#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "trpca/fourier.hpp"
#include "trpca/norms.hpp"
#include "trpca/synth.hpp"
#include "trpca/talgebra.hpp"
#include "trpca/tsvd.hpp"

using namespace trpca;
using oracle::random_tensor;
using oracle::rel_diff;

namespace {

// a = p * q^T with p, q random n x r x n3: tubal rank r.
Tensor3 low_rank(std::size_t n1, std::size_t n2, std::size_t n3, std::size_t r, std::uint64_t seed) {
    return tprod(random_tensor(n1, r, n3, seed), ctranspose(random_tensor(n2, r, n3, seed + 1)));
}

bool skinny_orthonormal(const Tensor3& q, double tol) {
    const Tensor3 gram = tprod(ctranspose(q), q);
    return fro_norm(gram - identity_tensor(q.n2(), q.n3())) <= tol * std::sqrt(double(q.n2()) + 1);
}

}  // namespace

TEST(Tsvd, IdentityTensor) {
    const TSvdFactors f = tsvd(identity_tensor(3, 4));
    EXPECT_LE(fro_norm(f.s - identity_tensor(3, 4)), 1e-12);
    EXPECT_LE(fro_norm(reconstruct(f) - identity_tensor(3, 4)), 1e-12);
}

TEST(Tsvd, SingleSliceIsMatrixSvd) {
    const Tensor3 a = random_tensor(5, 3, 1, 41);
    const TSvdFactors f = tsvd(a);
    const Eigen::VectorXd expected = oracle::singular_values(oracle::to_matrix(a));
    for (Eigen::Index i = 0; i < expected.size(); ++i) {
        EXPECT_NEAR(f.s(i, i, 0), expected(i), 1e-12);
    }
}

TEST(Tsvd, RandomTensorRealFactors) {
    const Tensor3 a = random_tensor(4, 3, 5, 42);
    const TSvdFactors f = tsvd(a);
    EXPECT_LE(f.imag_residual, 1e-10);
    EXPECT_LE(rel_diff(reconstruct(f), a), 1e-10);
}

TEST(Tsvd, NaivePerSliceSvdIsNotReal) {
    // Decomposing all slices independently (with arbitrary phases, as any
    // complex SVD routine may return) breaks the conjugate symmetry of U.
    const Tensor3 a = random_tensor(4, 3, 5, 42);
    FourierTensor3 abar = dft3(a);
    FourierTensor3 ubar(4, 4, 5);
    for (std::size_t j = 0; j < 5; ++j) {
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(Eigen::MatrixXcd(abar.slice(j)), Eigen::ComputeFullU);
        Eigen::MatrixXcd u = svd.matrixU();
        u *= std::polar(1.0, 0.3 * double(j));
        ubar.slice(j) = u;
    }
    EXPECT_THROW(idft3(ubar), SymmetryViolation);
}

TEST(Tsvd, FactorInvariantsAcrossShapes) {
    const std::size_t shapes[][3] = {{4, 3, 5}, {3, 4, 6}, {3, 3, 1}, {5, 2, 2}, {2, 5, 7},
                                     {4, 4, 8}, {1, 3, 3}, {3, 1, 4}, {6, 6, 9}};
    std::uint64_t seed = 500;
    for (const auto& s : shapes) {
        const Tensor3 a = random_tensor(s[0], s[1], s[2], ++seed);
        const TSvdFactors f = tsvd(a);
        SCOPED_TRACE(to_string(a.shape()));
        EXPECT_LE(rel_diff(reconstruct(f), a), 1e-8);
        EXPECT_LE(f.imag_residual, 1e-10);
        EXPECT_TRUE(is_orthogonal(f.u, 1e-8));
        EXPECT_TRUE(is_orthogonal(f.v, 1e-8));
        EXPECT_TRUE(is_fdiagonal(f.s, 1e-8));
        EXPECT_EQ(f.slice_svds, s[2] / 2 + 1);
        for (std::size_t i = 0; i + 1 < std::min(s[0], s[1]); ++i) {
            EXPECT_GE(f.s(i, i, 0), f.s(i + 1, i + 1, 0));
        }
        EXPECT_GE(f.s(std::min(s[0], s[1]) - 1, std::min(s[0], s[1]) - 1, 0), 0.0);
    }
}

TEST(SkinnyTsvd, WidthIsTubalRank) {
    const Tensor3 a = low_rank(6, 5, 4, 2, 61);
    const TSvdFactors f = skinny_tsvd(a, 1e-10);
    EXPECT_EQ(f.kind, TSvdKind::Skinny);
    EXPECT_EQ(f.u.n2(), 2u);
    EXPECT_EQ(f.v.n2(), 2u);
    EXPECT_EQ(f.s.shape(), (Shape{2, 2, 4}));
    EXPECT_LE(rel_diff(reconstruct(f), a), 1e-8);
    EXPECT_TRUE(skinny_orthonormal(f.u, 1e-8));
    EXPECT_TRUE(skinny_orthonormal(f.v, 1e-8));
}

TEST(SkinnyTsvd, ZeroTensorHasEmptyFactors) {
    const Tensor3 zero(4, 3, 5);
    const TSvdFactors f = skinny_tsvd(zero, 1e-10);
    EXPECT_EQ(f.u.n2(), 0u);
    EXPECT_EQ(f.v.n2(), 0u);
    EXPECT_EQ(fro_norm(reconstruct(f)), 0.0);
    EXPECT_EQ(reconstruct(f).shape(), zero.shape());
}

TEST(SkinnyTsvd, FullRankSquare) {
    const TSvdFactors f = skinny_tsvd(random_tensor(5, 5, 3, 62), 1e-10);
    EXPECT_EQ(f.u.n2(), 5u);
}

TEST(SkinnyTsvd, RejectsNonPositiveTolerance) {
    EXPECT_THROW(skinny_tsvd(random_tensor(2, 2, 2, 1), 0.0), InvalidArgument);
}

TEST(SingularValues, Identity) {
    const auto s = singular_values(identity_tensor(4, 3));
    ASSERT_EQ(s.size(), 4u);
    for (double x : s) EXPECT_NEAR(x, 1.0, 1e-14);
}

TEST(SingularValues, MatchTsvdDiagonalAndSumToTnn) {
    const Tensor3 a = random_tensor(5, 4, 6, 63);
    const auto s = singular_values(a);
    const TSvdFactors f = tsvd(a);
    ASSERT_EQ(s.size(), 4u);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(s[i], f.s(i, i, 0), 1e-12);
    for (std::size_t i = 0; i + 1 < 4; ++i) EXPECT_GE(s[i], s[i + 1]);
    const double total = std::accumulate(s.begin(), s.end(), 0.0);
    EXPECT_NEAR(total, tnn(a), 1e-10 * total);
}

TEST(SingularValues, SingleSliceMatchesMatrix) {
    const Tensor3 a = random_tensor(3, 6, 1, 64);
    const auto s = singular_values(a);
    const Eigen::VectorXd expected = oracle::singular_values(oracle::to_matrix(a));
    for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(s[i], expected(i), 1e-12);
}

TEST(TubalRank, LowRankProduct) {
    for (std::size_t r = 1; r <= 3; ++r) {
        EXPECT_EQ(tubal_rank(low_rank(6, 6, 5, r, 70 + r), 1e-10), r);
    }
}

TEST(TubalRank, ZeroAndIdentity) {
    EXPECT_EQ(tubal_rank(Tensor3(3, 3, 3)), 0u);
    EXPECT_EQ(tubal_rank(identity_tensor(4, 5)), 4u);
}

TEST(AverageRank, IdentityAndZero) {
    EXPECT_DOUBLE_EQ(average_rank(identity_tensor(3, 4)), 3.0);
    EXPECT_DOUBLE_EQ(average_rank(Tensor3(3, 3, 4)), 0.0);
}

TEST(AverageRank, BoundedByTubalRank) {
    const Tensor3 a = low_rank(5, 5, 4, 2, 81);
    const double avg = average_rank(a);
    EXPECT_GT(avg, 0.0);
    EXPECT_LE(avg, 2.0);
    EXPECT_LE(avg, static_cast<double>(tubal_rank(a)));

    // Tubes (1,1) and (1,0): Fourier slices diag(2,1) and diag(0,1), of
    // ranks 2 and 1. Average rank 1.5 sits strictly below tubal rank 2.
    Tensor3 b(2, 2, 2);
    b(0, 0, 0) = 1.0;
    b(0, 0, 1) = 1.0;
    b(1, 1, 0) = 1.0;
    EXPECT_EQ(tubal_rank(b), 2u);
    EXPECT_DOUBLE_EQ(average_rank(b), 1.5);
    for (std::uint64_t s = 0; s < 10; ++s) {
        const Tensor3 c = random_tensor(3, 4, 1 + s % 5, 900 + s);
        EXPECT_LE(average_rank(c), static_cast<double>(tubal_rank(c)));
    }
}

TEST(BestRankK, FullAndZero) {
    const Tensor3 a = random_tensor(4, 3, 5, 90);
    EXPECT_LE(rel_diff(best_rank_k(a, 3), a), 1e-10);
    EXPECT_EQ(fro_norm(best_rank_k(a, 0)), 0.0);
    EXPECT_THROW(best_rank_k(a, 4), RankOutOfRange);
}

TEST(BestRankK, ErrorMatchesDiscardedFourierSpectrum) {
    const Tensor3 a = low_rank(5, 4, 6, 2, 91);
    const Tensor3 a1 = best_rank_k(a, 1);
    EXPECT_LE(tubal_rank(a1, 1e-10), 1u);

    // Brute force: singular values of every Fourier slice, no mirroring.
    const FourierTensor3 abar = dft3(a);
    double discarded = 0.0;
    for (std::size_t j = 0; j < 6; ++j) {
        const Eigen::VectorXd s =
            Eigen::JacobiSVD<Eigen::MatrixXcd>(Eigen::MatrixXcd(abar.slice(j))).singularValues();
        discarded += s.tail(s.size() - 1).squaredNorm();
    }
    EXPECT_NEAR(fro_norm(a - a1), std::sqrt(discarded) / std::sqrt(6.0), 1e-10);
}

TEST(BestRankK, BeatsSampledCompetitors) {
    const Tensor3 a = random_tensor(5, 5, 4, 92);
    for (std::size_t k = 1; k <= 3; ++k) {
        const double best = fro_norm(a - best_rank_k(a, k));
        for (std::uint64_t s = 0; s < 25; ++s) {
            // Competitors: random rank-k products, and perturbed truncations.
            const Tensor3 b = low_rank(5, 5, 4, k, 1000 * k + s);
            EXPECT_LE(best, fro_norm(a - b) + 1e-8);
            const Tensor3 c = best_rank_k(best_rank_k(a, k) + 1e-2 * random_tensor(5, 5, 4, 77 + s), k);
            EXPECT_LE(best, fro_norm(a - c) + 1e-8);
        }
    }
}
