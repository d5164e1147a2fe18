#pragma once

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lrbq/check.hpp"
#include "lrbq/qnums.hpp"
#include "lrbq/remark_monoids.hpp"
#include "lrbq/spectra.hpp"
#include "lrbq/symfun.hpp"

namespace lrbq {

/// Ranges covered by the verification run. The flag case n=4, p=2 is only
/// added to the chamber and full-algebra flag criteria when `extended` is set.
struct VerificationGrid {
    int n_max_words = 5;
    int n_max_flags = 3;
    std::vector<int> primes{2, 3};
    bool extended = false;
    std::uint64_t seed = 20240607;
    /// Criterion ids to run; empty means all.
    std::vector<int> checks;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    std::vector<Check> checks;
    double seconds = 0;

    bool pass() const { return !checks.empty() && all_pass(checks); }

    nlohmann::json to_json(bool failures_only = false) const {
        nlohmann::json cs = nlohmann::json::array();
        for (const auto& c : checks) {
            if (!failures_only || !c.pass) cs.push_back(lrbq::to_json(c));
        }
        return {{"id", id}, {"title", title}, {"pass", pass()}, {"checks", cs}};
    }
};

namespace detail {

inline std::string join(const std::vector<long long>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

inline Check bool_check(const std::string& name, bool ok) { return {name, ok, "true", ok ? "true" : "false"}; }

inline std::string nq(int n, int p) {
    return "n=" + std::to_string(n) + (p ? ", p=" + std::to_string(p) : "");
}

inline Check dims_check(const std::string& label, int n, int p, const Space& space) {
    const auto rep = analyze_spectrum(n, p, space);
    std::vector<long long> got, want;
    for (const auto& e : rep.eigenvalues) {
        got.push_back(e.dim);
        want.push_back(e.predicted_dim);
    }
    const bool ok = rep.pass();
    return {label + " " + nq(n, p), ok, join(want) + " (total " + std::to_string(rep.space_dim) + ")",
            join(got) + " (total " + std::to_string(rep.dimension_total()) + (rep.annihilated ? "" : ", not annihilated") + ")"};
}

}  // namespace detail

inline std::vector<Check> criterion_minimal_polynomials(const VerificationGrid& g) {
    std::vector<Check> out;
    auto add = [&](int n, int p) {
        const auto r = minpoly_verify(n, p);
        std::string actual = r.annihilates ? "annihilates" : "does not annihilate";
        for (const auto& [f, vanishes] : r.deleted) {
            if (vanishes) actual += "; " + f + " already annihilates";
        }
        out.push_back({r.polynomial + " on the full algebra, " + detail::nq(n, p), r.minimal(), "minimal", r.minimal() ? "minimal" : actual});
    };
    for (int n = 1; n <= g.n_max_words; ++n) add(n, 0);
    for (int p : g.primes) {
        for (int n = 1; n <= (p == 2 ? 4 : g.n_max_flags); ++n) add(n, p);
    }
    return out;
}

inline std::vector<Check> criterion_stirling(const VerificationGrid& g) {
    std::vector<Check> out;
    for (int m = 0; m <= 6; ++m) {
        std::vector<long long> want(7, 0);
        for (int k = 0; k <= m; ++k) want[k] = stirling2(m, k);
        const auto got = power_expansion(6, m);
        out.push_back({"x^" + std::to_string(m) + " = sum S(m,k) x_k, n=6", got == want, detail::join(want), detail::join(got)});
    }
    for (int p : g.primes) {
        for (int n = 1; n <= 4; ++n) {
            for (int m = 0; m <= n; ++m) {
                std::vector<long long> want(n + 1, 0);
                for (int k = 0; k <= m; ++k) want[k] = q_stirling(m, k, StirlingVariant::plain).eval(p);
                const auto got = power_expansion(n, m, p);
                out.push_back({"(x^(q))^" + std::to_string(m) + " = sum S_q(m,k) x_k^(q), " + detail::nq(n, p), got == want,
                               detail::join(want), detail::join(got)});
            }
        }
    }
    // x * x_l = [l] x_l + q^l x_(l+1), read off the product in the algebra.
    auto invariant_matrix = [&](int n, int p) {
        const auto m = x_matrix_on_invariants(n, p);
        bool ok = true;
        for (int r = 0; r <= n; ++r) {
            for (int c = 0; c <= n; ++c) {
                long long want = 0;
                if (r == c) want = eigenvalue_at(c, p);
                if (r == c + 1) want = p ? int_pow(p, c) : 1;
                ok = ok && m.at(r, c) == Rat(want);
            }
        }
        out.push_back(detail::bool_check("x on orbit sums is bidiagonal ([l], q^l), " + detail::nq(n, p), ok));
    };
    for (int n = 1; n <= 6; ++n) invariant_matrix(n, 0);
    for (int p : g.primes) {
        for (int n = 1; n <= (p == 2 ? 4 : g.n_max_flags); ++n) invariant_matrix(n, p);
    }
    for (int n = 1; n <= 4; ++n) {
        auto inv = verify_invariance(n, 0, 5, g.seed);
        out.insert(out.end(), inv.begin(), inv.end());
    }
    for (int p : g.primes) {
        for (int n = 1; n <= std::min(g.n_max_flags, 3); ++n) {
            auto inv = verify_invariance(n, p, 5, g.seed);
            out.insert(out.end(), inv.begin(), inv.end());
        }
    }
    return out;
}

inline std::vector<Check> criterion_chamber_words(const VerificationGrid&) {
    std::vector<Check> out;
    for (int n = 1; n <= 6; ++n) out.push_back(detail::dims_check("chamber multiplicities C(n,j) d_(n-j)", n, 0, Space::chamber()));
    std::vector<long long> got;
    for (const auto& e : analyze_spectrum(4, 0, Space::chamber()).eigenvalues) got.push_back(e.dim);
    out.push_back({"chamber multiplicities at n=4", got == std::vector<long long>{9, 8, 6, 0, 1}, "9,8,6,0,1", detail::join(got)});
    return out;
}

inline std::vector<Check> criterion_chamber_flags(const VerificationGrid& g) {
    std::vector<Check> out;
    for (int p : g.primes) {
        for (int n = 1; n <= g.n_max_flags; ++n) out.push_back(detail::dims_check("chamber multiplicities [n j]_q d_(n-j)(q)", n, p, Space::chamber()));
    }
    if (g.extended) out.push_back(detail::dims_check("chamber multiplicities [n j]_q d_(n-j)(q)", 4, 2, Space::chamber()));
    return out;
}

/// Cells of the n=2 and n=3 eigenspace tables: (n, j, l, entry), entries as
/// printed there (term order normalised when compared).
struct TableCell {
    int n, j, l;
    std::vector<std::pair<long long, Partition>> terms;
};

inline const std::vector<TableCell>& eigenspace_table_cells() {
    static const std::vector<TableCell> cells{
        {2, 0, 0, {{1, {2}}}},
        {2, 0, 1, {}},
        {2, 0, 2, {{1, {1, 1}}}},
        {2, 1, 1, {{1, {1, 1}}, {1, {2}}}},
        {2, 1, 2, {}},
        {2, 2, 2, {{1, {2}}}},
        {3, 0, 0, {{1, {3}}}},
        {3, 0, 1, {}},
        {3, 0, 2, {{1, {2, 1}}, {1, {1, 1, 1}}}},
        {3, 0, 3, {{1, {2, 1}}}},
        {3, 1, 1, {{1, {3}}, {1, {2, 1}}}},
        {3, 1, 2, {}},
        {3, 1, 3, {{1, {2, 1}}, {1, {1, 1, 1}}}},
        {3, 2, 2, {{1, {3}}, {1, {2, 1}}}},
        {3, 2, 3, {}},
        {3, 3, 3, {{1, {3}}}},
    };
    return cells;
}

inline std::vector<Check> criterion_full_schur_words(const VerificationGrid& g) {
    std::vector<Check> out;
    for (int n = 1; n <= g.n_max_words; ++n) {
        const auto rep = analyze_spectrum(n, 0, Space::full(), true);
        for (const auto& e : rep.eigenvalues) {
            out.push_back({"full-algebra eigenspace Schur image, n=" + std::to_string(n) + ", j=" + std::to_string(e.j), e.pass(),
                           e.predicted_schur->str(), e.schur->str()});
        }
    }
    for (const auto& cell : eigenspace_table_cells()) {
        SchurVector want(cell.n);
        for (const auto& [c, lambda] : cell.terms) want.add(lambda, c);
        const auto got = eigenspace_schur(cell.n, cell.j, Space::stratum(cell.l));
        out.push_back({"table cell n=" + std::to_string(cell.n) + ", j=" + std::to_string(cell.j) + ", l=" + std::to_string(cell.l),
                       got.str() == want.str(), want.str(), got.str()});
    }
    const std::vector<std::tuple<int, int, std::string>> rows{
        {2, 0, "s(2)+s(1,1)"}, {2, 1, "s(2)+s(1,1)"}, {2, 2, "s(2)"},
        {3, 0, "s(3)+2*s(2,1)+s(1,1,1)"}, {3, 1, "s(3)+2*s(2,1)+s(1,1,1)"}, {3, 2, "s(3)+s(2,1)"}, {3, 3, "s(3)"},
    };
    for (const auto& [n, j, want] : rows) {
        const auto got = eigenspace_schur(n, j, Space::full()).str();
        out.push_back({"table row n=" + std::to_string(n) + ", j=" + std::to_string(j), got == want, want, got});
    }
    return out;
}

inline std::vector<Check> criterion_full_flags(const VerificationGrid& g) {
    std::vector<Check> out;
    auto add = [&](int n, int p) {
        out.push_back(detail::dims_check("full-algebra multiplicities", n, p, Space::full()));
        const auto rep = analyze_spectrum(n, p, Space::full());
        const auto size = static_cast<long long>(flag_algebra(n, p).size());
        out.push_back({"eigenspace dims add up to the monoid size, " + detail::nq(n, p), rep.dimension_total() == size, std::to_string(size),
                       std::to_string(rep.dimension_total())});
    };
    for (int p : g.primes) {
        for (int n = 1; n <= g.n_max_flags; ++n) add(n, p);
    }
    if (g.extended) add(4, 2);
    return out;
}

inline std::vector<Check> criterion_derangement_functions(const VerificationGrid&) {
    std::vector<Check> out;
    for (int n = 0; n <= 7; ++n) {
        const auto a = derangement_sf(n, 'A');
        for (char d : std::string("BCD")) {
            const auto b = derangement_sf(n, d);
            out.push_back({std::string("d_n definition A = ") + d + ", n=" + std::to_string(n), a == b, a.str(), b.str()});
        }
        const auto qd = derangement_qsym(n, 'D');
        for (char s : std::string("EFG")) {
            const auto qs = derangement_qsym(n, s);
            out.push_back({std::string("fundamental expansion D = ") + s + ", n=" + std::to_string(n), qd == qs, qd.str(), qs.str()});
        }
        const long long dim = a.dimension();
        out.push_back({"degree of d_n is the derangement number, n=" + std::to_string(n), dim == derangement_number(n),
                       std::to_string(derangement_number(n)), std::to_string(dim)});
    }
    const std::vector<std::pair<int, std::vector<Partition>>> table{
        {2, {{1, 1}}},
        {3, {{2, 1}}},
        {4, {{1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {3, 1}}},
    };
    for (const auto& [n, shapes] : table) {
        SchurVector want(n);
        for (const auto& s : shapes) want.add(s, 1);
        const auto got = derangement_sf(n, 'D');
        out.push_back({"tabulated d_" + std::to_string(n), got.str() == want.str(), want.str(), got.str()});
    }
    return out;
}

inline std::vector<Check> criterion_operator_identities(const VerificationGrid& g) {
    std::vector<Check> out;
    for (int n = 1; n <= 5; ++n) {
        for (auto c : verify_operator_identities(n, 0, 0, g.seed)) {
            c.name += ", words n=" + std::to_string(n);
            out.push_back(std::move(c));
        }
    }
    for (int n = 1; n <= 3; ++n) {
        for (auto c : verify_operator_identities(n, 2, 0, g.seed)) {
            c.name += ", flags n=" + std::to_string(n) + " p=2";
            out.push_back(std::move(c));
        }
    }
    return out;
}

inline std::vector<Check> criterion_filtration(const VerificationGrid&) {
    std::vector<Check> out;
    for (int n = 1; n <= 4; ++n) {
        for (auto c : filtration_decomposition(n, 0)) {
            c.name += ", words n=" + std::to_string(n);
            out.push_back(std::move(c));
        }
    }
    for (int n = 1; n <= 3; ++n) {
        for (auto c : filtration_decomposition(n, 2)) {
            c.name += ", flags n=" + std::to_string(n) + " p=2";
            out.push_back(std::move(c));
        }
    }
    out.push_back(truncation_example());
    return out;
}

inline std::vector<Check> criterion_identities(const VerificationGrid&) {
    std::vector<Check> out;
    for (int n = 0; n <= 7; ++n) {
        const auto lhs = times_h1_power(schur_one(), n);
        SchurVector rhs(n);
        for (int j = 0; j <= n; ++j) rhs += pieri_h(derangement_sf(j, 'A'), n - j);
        out.push_back({"h_1^n = sum d_j h_(n-j), n=" + std::to_string(n), lhs == rhs, lhs.str(), rhs.str()});
    }
    for (int n = 0; n <= 8; ++n) {
        out.push_back(detail::bool_check("n! = sum d_(n-j) C(n,j), n=" + std::to_string(n), verify_factorial_derangement_identity(n)));
    }
    for (int n = 0; n <= 6; ++n) {
        out.push_back(detail::bool_check("[n]!_q = sum d_(n-j)(q) [n j]_q, n=" + std::to_string(n), verify_q_factorial_derangement_identity(n)));
    }
    for (const auto& c : verify_change_of_basis(8)) out.push_back(detail::bool_check(c.name + ", n=" + std::to_string(c.n), c.pass));
    return out;
}

inline std::vector<Check> criterion_remark_monoids(const VerificationGrid& g) {
    std::vector<Check> out;
    for (int n = 1; n <= 3; ++n) {
        for (auto c : verify_remark_monoids(n, 2, g.seed)) {
            c.name += ", n=" + std::to_string(n);
            out.push_back(std::move(c));
        }
    }
    return out;
}

struct CriterionEntry {
    int id;
    std::string title;
    std::function<std::vector<Check>(const VerificationGrid&)> run;
};

inline const std::vector<CriterionEntry>& criteria() {
    static const std::vector<CriterionEntry> all{
        {1, "minimal polynomials of x and x^(q)", criterion_minimal_polynomials},
        {2, "Stirling expansions of powers of x", criterion_stirling},
        {3, "chamber spectrum, words", criterion_chamber_words},
        {4, "chamber spectrum, flags", criterion_chamber_flags},
        {5, "full-algebra Schur images, words", criterion_full_schur_words},
        {6, "full-algebra dimensions, flags", criterion_full_flags},
        {7, "derangement symmetric function equivalences", criterion_derangement_functions},
        {8, "Psi/Phi operator identities", criterion_operator_identities},
        {9, "filtration blocks", criterion_filtration},
        {10, "identities battery", criterion_identities},
        {11, "remark monoids", criterion_remark_monoids},
    };
    return all;
}

/// Runs the selected criteria. An exception inside a criterion is reported
/// as a failing check rather than aborting the run.
inline std::vector<CriterionResult> run_verification(const VerificationGrid& g,
                                                     const std::function<void(const CriterionResult&)>& on_done = {}) {
    std::vector<CriterionResult> out;
    for (const auto& entry : criteria()) {
        if (!g.checks.empty() && std::find(g.checks.begin(), g.checks.end(), entry.id) == g.checks.end()) continue;
        CriterionResult r;
        r.id = entry.id;
        r.title = entry.title;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            r.checks = entry.run(g);
        } catch (const std::exception& e) {
            r.checks.push_back({"criterion raised an exception", false, "no exception", e.what()});
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (on_done) on_done(r);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace lrbq
