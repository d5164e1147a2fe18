#include <gtest/gtest.h>

#include <set>

#include "lrbq/fqlinalg.hpp"

using namespace lrbq;

namespace {

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Number of d-dimensional subspaces of F_p^n by the product formula.
long long gaussian(int n, int d, int p) {
    long long num = 1, den = 1;
    for (int i = 0; i < d; ++i) {
        num *= ipow(p, n - i) - 1;
        den *= ipow(p, i + 1) - 1;
    }
    return num / den;
}

}  // namespace

TEST(FqLinalg, SubspaceCountsMatchProductFormula) {
    for (int p : {2, 3, 5}) {
        for (int n = 0; n <= (p == 2 ? 4 : 3); ++n) {
            for (int d = 0; d <= n; ++d) {
                const auto subs = enumerate_subspaces(n, p, d);
                EXPECT_EQ(static_cast<long long>(subs.size()), gaussian(n, d, p)) << "n=" << n << " d=" << d << " p=" << p;
                std::set<std::string> distinct;
                for (const auto& s : subs) {
                    EXPECT_EQ(s.dim(), d);
                    distinct.insert(s.str());
                }
                EXPECT_EQ(distinct.size(), subs.size());
            }
        }
    }
}

TEST(FqLinalg, SubspacesAboveCountMatchesQuotient) {
    const int n = 4, p = 2;
    for (int k = 0; k <= 2; ++k) {
        for (const auto& U : enumerate_subspaces(n, p, k)) {
            for (int d = k; d <= n; ++d) {
                const auto above = enumerate_subspaces(n, p, d, U);
                EXPECT_EQ(static_cast<long long>(above.size()), gaussian(n - k, d - k, p));
                for (const auto& W : above) EXPECT_TRUE(W.contains(U));
            }
        }
    }
}

TEST(FqLinalg, SpanHasPToTheDimVectors) {
    const int n = 3, p = 3;
    for (int d = 0; d <= n; ++d) {
        for (const auto& s : enumerate_subspaces(n, p, d)) {
            long long count = 0;
            for (const auto& v : all_vectors(n, p)) count += s.contains(v);
            EXPECT_EQ(count, ipow(p, d));
        }
    }
}

TEST(FqLinalg, CoordinatesReconstructVector) {
    const auto s = Subspace::span(4, 3, {{1, 2, 0, 1}, {0, 1, 1, 2}});
    for (const auto& v : all_vectors(4, 3)) {
        if (!s.contains(v)) continue;
        const auto c = s.coordinates(v);
        FpVector w(4, 0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            for (int k = 0; k < 4; ++k) w[k] = (w[k] + c[i] * s.rows()[i][k]) % 3;
        }
        EXPECT_EQ(w, v);
    }
}

TEST(FqLinalg, SubspaceSumDimensionBounds) {
    const int n = 3, p = 2;
    for (const auto& a : enumerate_subspaces(n, p, 1)) {
        for (const auto& b : enumerate_subspaces(n, p, 2)) {
            const auto s = subspace_sum(a, b);
            EXPECT_TRUE(s.contains(a));
            EXPECT_TRUE(s.contains(b));
            EXPECT_EQ(s.dim(), b.contains(a) ? 2 : 3);
        }
    }
}

TEST(FqLinalg, CompleteFlagCount) {
    // [n]_p! complete flags
    for (int p : {2, 3}) {
        for (int n = 1; n <= 3; ++n) {
            long long want = 1;
            for (int i = 1; i <= n; ++i) want *= (ipow(p, i) - 1) / (p - 1);
            EXPECT_EQ(static_cast<long long>(enumerate_flags(n, p, n).size()), want);
        }
    }
}

TEST(FqLinalg, FlagsThroughAndAbove) {
    const int n = 3, p = 2;
    for (const auto& U : enumerate_subspaces(n, p, 1)) {
        const auto above = enumerate_flags_above(U, 2);
        EXPECT_EQ(above.size(), 3u);  // complete flags of a 2-dimensional quotient
        for (const auto& c : above) {
            EXPECT_TRUE(c[0].contains(U));
            EXPECT_EQ(c[1].dim(), 3);
        }
        const auto through = enumerate_flags(n, p, 1, U);
        ASSERT_EQ(through.size(), 1u);
        EXPECT_EQ(through[0][0], U);
    }
}

TEST(FqLinalg, RandomInvertibleIsInvertible) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        for (int p : {2, 3, 5}) {
            const auto g = random_invertible(3, p, seed);
            EXPECT_TRUE(is_invertible_mod(g, p));
            EXPECT_NE(det_mod(g, p), 0);
        }
    }
    EXPECT_NE(det_mod(random_invertible(3, 3, 7), 3), 0);
}

TEST(FqLinalg, ImagePreservesDimensionAndInclusion) {
    const auto g = random_invertible(3, 3, 9);
    for (const auto& a : enumerate_subspaces(3, 3, 1)) {
        for (const auto& b : enumerate_subspaces(3, 3, 2, a)) {
            EXPECT_EQ(image(g, a).dim(), 1);
            EXPECT_TRUE(image(g, b).contains(image(g, a)));
        }
    }
}

TEST(FqLinalg, RejectsNonPrimeModulus) {
    EXPECT_THROW(Subspace::zero(2, 4), std::invalid_argument);
    EXPECT_THROW(enumerate_subspaces(2, 6, 1), std::invalid_argument);
}

TEST(FqLinalg, TextForms) {
    EXPECT_EQ(Subspace::zero(3, 2).str(), "0");
    EXPECT_EQ(FlagChain(3, 2).str(), "()");
    EXPECT_EQ(Subspace::span(2, 3, {{2, 1}}).str(), "1,2");
}
