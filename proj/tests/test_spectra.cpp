#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "lrbq/spectra.hpp"

using namespace lrbq;

namespace {

using Dense = std::vector<std::vector<Rat>>;

// Matrix of left multiplication by the sum of generators, built directly
// from element products without the algebra's index tables.
template <class Element>
Dense brute_x(const std::vector<Element>& elems) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i].str()] = i;
    Dense m(elems.size(), std::vector<Rat>(elems.size(), Rat(0)));
    for (std::size_t b = 0; b < elems.size(); ++b) {
        for (const auto& g : elems) {
            if (g.length() != 1) continue;
            m[index.at((g * elems[b]).str())][b] += Rat(1);
        }
    }
    return m;
}

std::size_t rank(Dense rows) {
    std::size_t r = 0;
    const std::size_t nc = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < nc && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c].is_zero()) continue;
            const Rat f = rows[i][c] / rows[r][c];
            for (std::size_t k = c; k < nc; ++k) rows[i][k] -= f * rows[r][k];
        }
        ++r;
    }
    return r;
}

long long kernel_dim(Dense m, long long lambda) {
    for (std::size_t i = 0; i < m.size(); ++i) m[i][i] -= Rat(lambda);
    return static_cast<long long>(m.size() - rank(m));
}

Dense mul(const Dense& a, const Dense& b) {
    const std::size_t n = a.size();
    Dense c(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    }
    return c;
}

bool is_zero(const Dense& m) {
    for (const auto& r : m) {
        for (const auto& v : r) {
            if (!v.is_zero()) return false;
        }
    }
    return true;
}

}  // namespace

TEST(Spectra, FullEigenspaceDimensionsMatchBruteForceWords) {
    for (int n = 1; n <= 4; ++n) {
        const auto x = brute_x(enumerate_monoid(n));
        long long total = 0;
        for (int j = 0; j <= n; ++j) {
            const long long d = kernel_dim(x, j);
            EXPECT_EQ(eigenspace_dimension(n, j, 0, Space::full()), d) << n << " " << j;
            EXPECT_EQ(predicted_dimension(n, j, 0, Space::full()), d);
            total += d;
        }
        EXPECT_EQ(total, static_cast<long long>(x.size()));  // diagonalizable
    }
}

TEST(Spectra, FullEigenspaceDimensionsMatchBruteForceFlags) {
    for (int n = 1; n <= 3; ++n) {
        const auto x = brute_x(enumerate_monoid_q(n, 2));
        long long total = 0;
        for (int j = 0; j <= n; ++j) {
            const long long d = kernel_dim(x, eigenvalue_at(j, 2));
            EXPECT_EQ(eigenspace_dimension(n, j, 2, Space::full()), d);
            total += d;
        }
        EXPECT_EQ(total, static_cast<long long>(x.size()));
    }
}

TEST(Spectra, MinimalPolynomialByDenseProducts) {
    for (int n = 1; n <= 3; ++n) {
        const auto x = brute_x(enumerate_monoid(n));
        const std::size_t dim = x.size();
        auto shifted = [&](long long r) {
            Dense m = x;
            for (std::size_t i = 0; i < dim; ++i) m[i][i] -= Rat(r);
            return m;
        };
        for (int skip = -1; skip <= n; ++skip) {
            Dense prod;
            for (int j = 0; j <= n; ++j) {
                if (j == skip) continue;
                prod = prod.empty() ? shifted(j) : mul(prod, shifted(j));
            }
            EXPECT_EQ(is_zero(prod), skip == -1) << "n=" << n << " skip=" << skip;
        }
    }
    EXPECT_EQ(minpoly_verify(3).polynomial, "X(X-1)(X-2)(X-3)");
    EXPECT_TRUE(minpoly_verify(5).minimal());
    EXPECT_TRUE(minpoly_verify(3, 2).minimal());
    EXPECT_EQ(minpoly_verify(2, 3).polynomial, "X(X-1)(X-4)");
}

TEST(Spectra, ChamberMultiplicities) {
    const std::vector<std::vector<long long>> want{{0, 1}, {1, 0, 1}, {2, 3, 0, 1}, {9, 8, 6, 0, 1}};
    for (int n = 1; n <= 4; ++n) {
        const auto r = analyze_spectrum(n, 0, Space::chamber());
        ASSERT_EQ(r.eigenvalues.size(), want[n - 1].size());
        for (const auto& e : r.eigenvalues) EXPECT_EQ(e.dim, want[n - 1][e.j]);
    }
    for (int n = 1; n <= 6; ++n) {
        for (int j = 0; j <= n; ++j) {
            EXPECT_EQ(eigenspace_dimension(n, j, 0, Space::chamber()), binomial(n, j) * derangement_number(n - j));
        }
    }
}

TEST(Spectra, FlagFullDimensionsSumToMonoidSize) {
    for (int p : {2, 3}) {
        for (int n = 1; n <= 3; ++n) {
            const auto r = analyze_spectrum(n, p, Space::full());
            EXPECT_TRUE(r.annihilated);
            EXPECT_EQ(r.dimension_total(), static_cast<long long>(enumerate_monoid_q(n, p).size()));
            for (const auto& e : r.eigenvalues) EXPECT_TRUE(e.pass()) << e.j;
        }
    }
    std::vector<long long> dims;
    for (const auto& e : analyze_spectrum(2, 2, Space::full()).eigenvalues) dims.push_back(e.dim);
    EXPECT_EQ(dims, (std::vector<long long>{3, 3, 1}));
}

TEST(Spectra, StrataDimensionsSumToFull) {
    for (int n = 1; n <= 4; ++n) {
        for (int j = 0; j <= n; ++j) {
            long long s = 0;
            for (int l = 0; l <= n; ++l) s += eigenspace_dimension(n, j, 0, Space::stratum(l));
            EXPECT_EQ(s, eigenspace_dimension(n, j, 0, Space::full()));
        }
    }
}

TEST(Spectra, CharactersSumToPermutationCharacter) {
    // sum_j chi_j(g) = number of words fixed by g
    for (int n = 1; n <= 4; ++n) {
        const auto words = enumerate_monoid(n);
        for (const auto& mu : partitions_of(n)) {
            const auto g = representative_permutation(mu);
            long long fixed = 0;
            for (const auto& w : words) fixed += act_perm(g, w) == w;
            Rat s(0);
            for (int j = 0; j <= n; ++j) s += eigenspace_character(n, j).at(mu);
            EXPECT_EQ(s, Rat(fixed)) << "n=" << n << " mu=" << mu.str();
        }
        EXPECT_EQ(eigenspace_schur(n, n, Space::full()), h_in_schur(n));
    }
}

TEST(Spectra, SchurImagesMatchPrediction) {
    for (int n = 1; n <= 5; ++n) {
        for (int j = 0; j <= n; ++j) EXPECT_EQ(eigenspace_schur(n, j, Space::full()), predicted_schur(n, j, Space::full()));
    }
    EXPECT_EQ(eigenspace_schur(2, 0, Space::full()).str(), "s(2)+s(1,1)");
    EXPECT_EQ(eigenspace_schur(3, 0, Space::full()).str(), "s(3)+2*s(2,1)+s(1,1,1)");
    EXPECT_EQ(eigenspace_schur(3, 0, Space::chamber()).str(), "s(2,1)");
}

TEST(Spectra, InvariantMatrixAndPowerExpansion) {
    const auto m = x_matrix_on_invariants(2);
    const std::vector<std::vector<int>> want{{0, 0, 0}, {1, 1, 0}, {0, 1, 2}};
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) EXPECT_EQ(m.at(r, c), Rat(want[r][c]));
    }
    for (int n = 1; n <= 6; ++n) {
        for (int m2 = 0; m2 <= n; ++m2) {
            const auto c = power_expansion(n, m2);
            for (int k = 0; k <= n; ++k) EXPECT_EQ(c[k], stirling2(m2, k));
        }
    }
    for (int p : {2, 3}) {
        for (int n = 1; n <= 3; ++n) {
            for (int m2 = 0; m2 <= n; ++m2) {
                const auto c = power_expansion(n, m2, p);
                for (int k = 0; k <= n; ++k) EXPECT_EQ(c[k], q_stirling(m2, k, StirlingVariant::plain).eval(p));
            }
        }
    }
    EXPECT_THROW(power_expansion(3, 4), std::invalid_argument);
}

TEST(Spectra, OrbitSumText) {
    const auto x = orbit_sums(2);
    ASSERT_EQ(x.size(), 3u);
    EXPECT_EQ(x[0].str(), "()");
    EXPECT_EQ(x[1].str(), "(1)+(2)");
    EXPECT_EQ(x[2].str(), "(1,2)+(2,1)");
}

TEST(Spectra, SpaceParsing) {
    EXPECT_EQ(Space::parse("stratum:2"), Space::stratum(2));
    EXPECT_EQ(Space::parse("chamber").str(), "chamber");
    EXPECT_THROW(Space::parse("stratum:"), std::invalid_argument);
    EXPECT_THROW(Space::parse("stratum:-1"), std::invalid_argument);
    EXPECT_THROW(Space::parse("half"), std::invalid_argument);
}

TEST(Spectra, DeskScaleGuards) {
    EXPECT_THROW(analyze_spectrum(7, 0, Space::full()), std::invalid_argument);
    EXPECT_THROW(analyze_spectrum(5, 2, Space::full()), std::invalid_argument);
    EXPECT_THROW(analyze_spectrum(4, 3, Space::full()), std::invalid_argument);
    EXPECT_THROW(analyze_spectrum(3, 5, Space::full()), std::invalid_argument);
    EXPECT_THROW(analyze_spectrum(2, 4, Space::full()), std::invalid_argument);
}

TEST(Spectra, PsiPhiWordsAndErrors) {
    const auto s = psi(4, {1, 3}, InjWord(4, {2, 4}));
    EXPECT_EQ(s.size(), 2u);
    EXPECT_TRUE(s.count(InjWord(4, {1, 3, 2, 4})));
    EXPECT_TRUE(s.count(InjWord(4, {3, 1, 2, 4})));
    const auto f = phi(4, {1, 3}, InjWord(4, {2, 4}));
    EXPECT_TRUE(f.count(InjWord(4, {2, 1, 3, 4})));
    EXPECT_THROW(psi(3, {1}, InjWord(3, {1, 2})), std::invalid_argument);
    EXPECT_THROW(phi(2, {1, 2}, InjWord(2)), std::invalid_argument);
}

TEST(Spectra, PsiPhiFlagsSizes) {
    const int n = 3, p = 2;
    for (const auto& U : enumerate_subspaces(n, p, 1)) {
        for (const auto& A : enumerate_flags_above(U, 2)) {
            EXPECT_EQ(psi_q(U, A).size(), 1u);
            // lines of A_1 outside U
            EXPECT_EQ(phi_q(U, A).size(), 2u);
        }
    }
    const auto U = enumerate_subspaces(n, p, 1)[0];
    EXPECT_THROW(psi_q(U, {}), std::invalid_argument);
}

TEST(Spectra, OperatorIdentities) {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& c : verify_operator_identities(n)) EXPECT_TRUE(c.pass) << c.name;
    }
    for (int n = 1; n <= 2; ++n) {
        for (const auto& c : verify_operator_identities(n, 2)) EXPECT_TRUE(c.pass) << c.name;
    }
    for (const auto& c : verify_operator_identities(3, 3, 4)) EXPECT_TRUE(c.pass) << c.name;
}

TEST(Spectra, FiltrationBlocks) {
    for (int n = 1; n <= 3; ++n) {
        for (const auto& c : filtration_decomposition(n)) EXPECT_TRUE(c.pass) << c.name;
        for (const auto& c : filtration_decomposition(n, 2)) EXPECT_TRUE(c.pass) << c.name;
    }
    EXPECT_TRUE(truncation_example().pass);
}

TEST(Spectra, RandomToTop) {
    for (int n = 1; n <= 6; ++n) {
        const auto r = random_to_top(n);
        EXPECT_TRUE(r.pass()) << n;
        for (const auto& [e, m, pm] : r.spectrum) EXPECT_EQ(m, pm);
    }
    EXPECT_THROW(random_to_top(8), std::invalid_argument);
}

TEST(Spectra, Invariance) {
    for (const auto& c : verify_invariance(4, 0, 5, 1)) EXPECT_TRUE(c.pass) << c.name;
    for (const auto& c : verify_invariance(3, 2, 5, 1)) EXPECT_TRUE(c.pass) << c.name;
}

TEST(Spectra, ReportJsonShape) {
    const auto j = analyze_spectrum(2, 0, Space::full(), true).to_json();
    EXPECT_EQ(j.at("monoid"), "words");
    EXPECT_TRUE(j.at("q").is_null());
    EXPECT_EQ(j.at("space_dim"), 5);
    EXPECT_EQ(j.at("eigenvalues")[0].at("schur"), "s(2)+s(1,1)");
    EXPECT_TRUE(j.at("pass").get<bool>());
}
