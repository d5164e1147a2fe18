#include <gtest/gtest.h>

#include "lrbq/remark_monoids.hpp"

using namespace lrbq;

namespace {

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

TEST(RemarkMonoids, VectorSequenceCount) {
    // sequences of k independent vectors: prod_{i<k} (p^n - p^i)
    for (int p : {2, 3}) {
        for (int n = 1; n <= 3; ++n) {
            long long total = 0, prod = 1;
            for (int k = 0; k <= n; ++k) {
                total += prod;
                prod *= ipow(p, n) - ipow(p, k);
            }
            EXPECT_EQ(static_cast<long long>(enumerate_vecseq(n, p).size()), total);
        }
    }
}

TEST(RemarkMonoids, VectorSequencesFormLeftRegularBand) {
    const auto m = enumerate_vecseq(2, 3);
    for (const auto& x : m) {
        EXPECT_EQ(x * x, x);
        for (const auto& y : m) {
            EXPECT_EQ(x * y * x, x * y);
            for (const auto& z : m) EXPECT_EQ((x * y) * z, x * (y * z));
        }
    }
}

TEST(RemarkMonoids, SpanMapIsHomomorphism) {
    const auto m = enumerate_vecseq(3, 2);
    for (std::size_t i = 0; i < m.size(); i += 7) {
        for (std::size_t j = 0; j < m.size(); j += 3) EXPECT_EQ((m[i] * m[j]).to_flag(), m[i].to_flag() * m[j].to_flag());
    }
}

TEST(RemarkMonoids, RejectsDependentVectors) { EXPECT_THROW(VecSeq(2, 2, {{1, 0}, {1, 0}}), std::invalid_argument); }

TEST(RemarkMonoids, AllChecksPass) {
    for (int n = 1; n <= 3; ++n) {
        for (const auto& c : verify_remark_monoids(n, 2)) EXPECT_TRUE(c.pass) << c.name << ": " << c.expected << " vs " << c.actual;
    }
    for (int n = 1; n <= 4; ++n) {
        for (const auto& c : verify_remark_monoids(n)) EXPECT_TRUE(c.pass) << c.name;
    }
    for (const auto& c : verify_remark_monoids(2, 3)) EXPECT_TRUE(c.pass) << c.name;
}

TEST(RemarkMonoids, Guards) {
    EXPECT_THROW(verify_remark_monoids(0), std::invalid_argument);
    EXPECT_THROW(verify_remark_monoids(6), std::invalid_argument);
    EXPECT_THROW(verify_remark_monoids(4, 2), std::invalid_argument);
}
