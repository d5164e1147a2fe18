#include <gtest/gtest.h>

#include <random>

#include "lrbq/lrb.hpp"

using namespace lrbq;

namespace {

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Number of injective words of length <= n: sum_k n!/(n-k)!
long long word_count(int n) {
    long long total = 0, falling = 1;
    for (int k = 0; k <= n; ++k) {
        total += falling;
        falling *= n - k;
    }
    return total;
}

// Number of chains 0 < V_1 < ... < V_k with dim V_i = i, summed over k.
long long flag_count(int n, int p) {
    long long total = 0, prod = 1;
    for (int k = 0; k <= n; ++k) {
        total += prod;
        prod *= (ipow(p, n - k) - 1) / (p - 1);
    }
    return total;
}

}  // namespace

TEST(Lrb, WordProductExamples) {
    const InjWord a(4, {2, 1}), b(4, {1, 3, 2, 4});
    EXPECT_EQ((a * b).str(), "(2,1,3,4)");
    EXPECT_EQ((b * a).str(), "(1,3,2,4)");
    EXPECT_EQ((InjWord(4) * a), a);
    EXPECT_THROW(InjWord(3, {1, 1}), std::invalid_argument);
    EXPECT_THROW(InjWord(3, {4}), std::invalid_argument);
}

TEST(Lrb, MonoidSizes) {
    for (int n = 0; n <= 6; ++n) EXPECT_EQ(static_cast<long long>(enumerate_monoid(n).size()), word_count(n));
    for (int p : {2, 3}) {
        for (int n = 0; n <= (p == 2 ? 4 : 3); ++n) {
            EXPECT_EQ(static_cast<long long>(enumerate_monoid_q(n, p).size()), flag_count(n, p)) << n << " " << p;
        }
    }
    EXPECT_EQ(enumerate_monoid_q(2, 2).size(), 7u);
}

TEST(Lrb, WordMonoidIsLeftRegularBand) {
    const auto m = enumerate_monoid(4);
    for (const auto& x : m) {
        EXPECT_EQ(x * x, x);
        for (const auto& y : m) {
            EXPECT_EQ(x * y * x, x * y);
            for (const auto& z : m) {
                if ((x.length() + y.length() + z.length()) % 3 == 0) {
                    EXPECT_EQ((x * y) * z, x * (y * z));
                }
            }
        }
    }
}

TEST(Lrb, FlagMonoidIsLeftRegularBand) {
    const auto m = enumerate_monoid_q(3, 2);
    for (const auto& x : m) {
        EXPECT_EQ(x * x, x);
        for (const auto& y : m) {
            EXPECT_EQ(x * y * x, x * y);
            for (const auto& z : m) EXPECT_EQ((x * y) * z, x * (y * z));
        }
    }
}

TEST(Lrb, FlagProductLengthIsDimensionOfSum) {
    const auto m = enumerate_monoid_q(3, 2);
    for (const auto& x : m) {
        for (const auto& y : m) {
            const auto xy = x * y;
            auto top = [](const FlagChain& f) { return f.length() ? f[f.length() - 1] : Subspace::zero(3, 2); };
            EXPECT_EQ(xy.length(), subspace_sum(top(x), top(y)).dim());
            for (int i = 0; i < x.length(); ++i) EXPECT_EQ(xy[i], x[i]);
        }
    }
}

TEST(Lrb, SymmetricGroupActsByAutomorphisms) {
    const auto m = enumerate_monoid(4);
    std::mt19937_64 gen(1);
    std::vector<int> g{1, 2, 3, 4};
    for (int t = 0; t < 5; ++t) {
        std::shuffle(g.begin(), g.end(), gen);
        for (std::size_t i = 0; i < m.size(); i += 3) {
            for (std::size_t j = 0; j < m.size(); j += 5) {
                EXPECT_EQ(act_perm(g, m[i] * m[j]), act_perm(g, m[i]) * act_perm(g, m[j]));
            }
        }
    }
    EXPECT_THROW(act_perm({1, 1, 2, 3}, m[0]), std::invalid_argument);
}

TEST(Lrb, GeneralLinearGroupActsByAutomorphisms) {
    const auto m = enumerate_monoid_q(3, 2);
    const auto g = random_invertible(3, 2, 4);
    for (const auto& x : m) {
        for (const auto& y : m) EXPECT_EQ(act_gl(g, x * y), act_gl(g, x) * act_gl(g, y));
    }
}

TEST(Lrb, MonoidBasisStrataAndIndex) {
    const auto b = make_word_monoid(3);
    EXPECT_EQ(b.size(), 16u);
    EXPECT_EQ(b.stratum_size(0), 1u);
    EXPECT_EQ(b.stratum_size(1), 3u);
    EXPECT_EQ(b.stratum_size(2), 6u);
    EXPECT_EQ(b.stratum_size(3), 6u);
    for (std::size_t i = 0; i < b.size(); ++i) {
        EXPECT_EQ(b.index_of(b[i]), i);
        for (std::size_t j = 0; j < b.size(); ++j) EXPECT_EQ(b[b.multiply(i, j)], b[i] * b[j]);
    }
    const auto f = make_flag_monoid(2, 3);
    EXPECT_EQ(f.size(), 1u + 4u + 4u);
}

TEST(Lrb, MonoidJson) {
    const auto j = monoid_to_json(make_word_monoid(2));
    EXPECT_EQ(j.dump().find("(1,2)") != std::string::npos, true);
}
