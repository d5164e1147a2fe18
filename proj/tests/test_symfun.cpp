#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "lrbq/qnums.hpp"
#include "lrbq/symfun.hpp"

using namespace lrbq;

namespace {

int lis_length(const std::vector<int>& w) {
    std::vector<int> best(w.size(), 1);
    int m = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (w[j] < w[i]) best[i] = std::max(best[i], best[j] + 1);
        }
        m = std::max(m, best[i]);
    }
    return m;
}

int sign_of(const Partition& mu) {
    int s = 1;
    for (int part : mu.parts()) {
        if (part % 2 == 0) s = -s;
    }
    return s;
}

}  // namespace

TEST(SymFun, PartitionCounts) {
    const std::vector<std::size_t> want{1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (int n = 0; n <= 8; ++n) EXPECT_EQ(partitions_of(n).size(), want[n]);
    const auto p4 = partitions_of(4);
    EXPECT_EQ(p4.front().str(), "(4)");
    EXPECT_EQ(p4.back().str(), "(1,1,1,1)");
}

TEST(SymFun, PartitionBasics) {
    EXPECT_EQ(Partition({3, 1}).conjugate().str(), "(2,1,1)");
    EXPECT_EQ(Partition::from_unsorted({1, 0, 3, 1}).str(), "(3,1,1)");
    EXPECT_EQ(Partition({2, 1, 1}).ones(), 2);
    EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
    for (int n = 0; n <= 7; ++n) {
        for (const auto& l : partitions_of(n)) EXPECT_EQ(l.conjugate().conjugate(), l);
    }
}

TEST(SymFun, HookLengthMatchesTableauxEnumeration) {
    for (int n = 0; n <= 7; ++n) {
        long long sum_sq = 0;
        for (const auto& l : partitions_of(n)) {
            const auto t = standard_tableaux(l);
            EXPECT_EQ(static_cast<long long>(t.size()), syt_count(l));
            sum_sq += syt_count(l) * syt_count(l);
        }
        EXPECT_EQ(sum_sq, factorial(n));
    }
}

TEST(SymFun, RskIsBijectionWithSchenstedProperties) {
    for (int n = 1; n <= 6; ++n) {
        std::set<std::pair<std::string, std::string>> seen;
        for (const auto& w : all_permutations(n)) {
            const auto [P, Q] = rsk(w);
            EXPECT_EQ(P.shape(), Q.shape());
            EXPECT_EQ(P.shape()[0], lis_length(w));
            EXPECT_EQ(descent_set(w), descent_set(Q));
            const auto inv = rsk(inverse_permutation(w));
            EXPECT_EQ(inv.P, Q);
            EXPECT_EQ(inv.Q, P);
            seen.insert({P.str(), Q.str()});
        }
        EXPECT_EQ(static_cast<long long>(seen.size()), factorial(n));
    }
}

TEST(SymFun, RskWorkedExample) {
    const auto r = rsk({4, 2, 3, 6, 5, 1});
    EXPECT_EQ(r.P.shape().str(), "(3,2,1)");
    const auto r2 = rsk({3, 6, 1, 4, 2, 5});
    EXPECT_EQ(r2.P.str(), "1,2,5/3,4/6");
}

TEST(SymFun, CharacterOrthogonalityAndDegrees) {
    for (int n = 1; n <= 7; ++n) {
        const auto parts = partitions_of(n);
        for (const auto& mu : parts) {
            for (const auto& nu : parts) {
                long long s = 0;
                for (const auto& l : parts) s += mn_character(l, mu) * mn_character(l, nu);
                EXPECT_EQ(s, mu == nu ? z_mu(mu) : 0);
            }
        }
        for (const auto& l : parts) {
            EXPECT_EQ(mn_character(l, Partition(std::vector<int>(n, 1))), syt_count(l));
            for (const auto& mu : parts) EXPECT_EQ(mn_character(l.conjugate(), mu), sign_of(mu) * mn_character(l, mu));
        }
    }
}

TEST(SymFun, FrobeniusOfPermutationCharacter) {
    // S_n acting on {1..n}: fixed points of a permutation of each cycle type
    for (int n = 2; n <= 7; ++n) {
        ClassFunction f(n);
        for (const auto& mu : partitions_of(n)) {
            const auto w = representative_permutation(mu);
            EXPECT_EQ(cycle_type(w), mu);
            long long fixed = 0;
            for (int i = 0; i < n; ++i) fixed += w[i] == i + 1;
            f.set(mu, Rat(fixed));
        }
        const auto s = classfn_to_schur(f);
        SchurVector want(n);
        want.add(Partition{n}, 1);
        want.add(Partition{n - 1, 1}, 1);
        EXPECT_EQ(s, want);
        EXPECT_EQ(schur_to_classfn(s), f);
    }
    ClassFunction half(2);
    half.set(Partition{2}, Rat(1));
    EXPECT_THROW(classfn_to_schur(half), std::domain_error);
    EXPECT_THROW(classfn_to_schur(ClassFunction(8)), std::invalid_argument);
}

TEST(SymFun, PieriAndElementary) {
    EXPECT_EQ(h_in_schur(3).str(), "s(3)");
    EXPECT_EQ(e_in_schur(3).str(), "s(1,1,1)");
    EXPECT_EQ(pieri_h(SchurVector::schur({2, 1}), 1).str(), "s(3,1)+s(2,2)+s(2,1,1)");
    for (int n = 0; n <= 6; ++n) {
        const auto h1n = times_h1_power(schur_one(), n);
        for (const auto& l : partitions_of(n)) EXPECT_EQ(h1n.coeff(l), syt_count(l));
        EXPECT_EQ(h1n.dimension(), factorial(n));
    }
    for (const auto& l : partitions_of(4)) {
        EXPECT_EQ(pieri_h(SchurVector::schur(l), 2).dimension(), syt_count(l) * binomial(6, 2));
    }
}

TEST(SymFun, SchurVectorText) {
    SchurVector v(3);
    v.add({1, 1, 1}, -1);
    v.add({3}, 1);
    v.add({2, 1}, 2);
    EXPECT_EQ(v.str(), "s(3)+2*s(2,1)-s(1,1,1)");
    EXPECT_EQ(SchurVector(2).str(), "0");
    EXPECT_THROW(v.add({2}, 1), std::invalid_argument);
}

TEST(SymFun, FundamentalExpansionOfSchur) {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& l : partitions_of(n)) {
            QSymVector want(n);
            for (const auto& t : standard_tableaux(l)) want.add(descent_set(t), 1);
            EXPECT_EQ(schur_to_fundamental(l), want);
        }
    }
}

TEST(SymFun, GesselReutenauerSumsToAllPermutations) {
    for (int n = 1; n <= 6; ++n) {
        QSymVector total(n), want(n);
        for (const auto& l : partitions_of(n)) total += gessel_reutenauer(l);
        for (const auto& w : all_permutations(n)) want.add(descent_set(w), 1);
        EXPECT_EQ(total, want);
    }
}

TEST(SymFun, DesarrangementCounts) {
    for (int n = 0; n <= 7; ++n) {
        long long perms = 0;
        for (const auto& w : all_permutations(n)) perms += is_desarrangement(w);
        EXPECT_EQ(perms, derangement_number(n)) << n;
        long long weighted = 0;
        for (const auto& t : desarrangement_tableaux(n)) weighted += syt_count(t.shape());
        EXPECT_EQ(weighted, derangement_number(n));
    }
}

TEST(SymFun, DerangementDefinitionsAgree) {
    for (int n = 0; n <= 7; ++n) {
        const auto a = derangement_sf(n, 'A');
        for (char d : std::string("BCD")) EXPECT_EQ(derangement_sf(n, d), a) << d << " n=" << n;
        EXPECT_EQ(a.dimension(), derangement_number(n));
        if (n == 0) continue;
        const auto qd = derangement_qsym(n, 'D');
        for (char d : std::string("EFG")) EXPECT_EQ(derangement_qsym(n, d), qd) << d << " n=" << n;
    }
}

TEST(SymFun, DerangementTabulatedValues) {
    EXPECT_EQ(derangement_sf(2, 'A').str(), "s(1,1)");
    EXPECT_EQ(derangement_sf(3, 'B').str(), "s(2,1)");
    EXPECT_EQ(derangement_sf(4, 'C').str(), "s(3,1)+s(2,2)+s(2,1,1)+s(1,1,1,1)");
    EXPECT_EQ(derangement_sf(1, 'D').str(), "0");
    EXPECT_THROW(derangement_sf(3, 'Z'), std::invalid_argument);
    EXPECT_THROW(derangement_qsym(9, 'F'), std::invalid_argument);
}

TEST(SymFun, DerangementExpansionOfH1Power) {
    // h_1^n = sum_j d_j h_(n-j)
    for (int n = 0; n <= 7; ++n) {
        SchurVector s(n);
        for (int j = 0; j <= n; ++j) s += pieri_h(derangement_sf(j, 'D'), n - j);
        EXPECT_EQ(s, times_h1_power(schur_one(), n));
    }
}
