#pragma once

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <type_traits>
#include <vector>

#include "lrbq/check.hpp"
#include "lrbq/fqlinalg.hpp"
#include "lrbq/lrb.hpp"
#include "lrbq/qnums.hpp"
#include "lrbq/rational.hpp"
#include "lrbq/sparse_operator.hpp"
#include "lrbq/symfun.hpp"

namespace lrbq {

/// Which subspace of the monoid algebra x acts on: everything, the span of
/// maximal-length elements, or the length-l filtration quotient.
struct Space {
    enum class Kind { full, chamber, stratum };
    Kind kind = Kind::full;
    int level = 0;

    static Space full() { return {}; }
    static Space chamber() { return {Kind::chamber, 0}; }
    static Space stratum(int l) { return {Kind::stratum, l}; }

    /// "full", "chamber" or "stratum:<l>".
    static Space parse(const std::string& s) {
        if (s == "full") return full();
        if (s == "chamber") return chamber();
        if (s.rfind("stratum:", 0) == 0) {
            std::size_t used = 0;
            const std::string num = s.substr(8);
            int l = -1;
            try {
                l = std::stoi(num, &used);
            } catch (const std::exception&) {
            }
            if (used == num.size() && l >= 0) return stratum(l);
        }
        throw std::invalid_argument("unknown space '" + s + "' (expected full, chamber or stratum:<l>)");
    }

    std::string str() const {
        switch (kind) {
            case Kind::full: return "full";
            case Kind::chamber: return "chamber";
            case Kind::stratum: return "stratum:" + std::to_string(level);
        }
        return "";
    }

    friend auto operator<=>(const Space&, const Space&) = default;
};

namespace detail {

/// Integer matrix stored by columns.
struct IntOperator {
    std::size_t dim = 0;
    std::vector<std::vector<std::pair<std::size_t, long long>>> cols;

    void apply(const std::vector<long long>& in, std::vector<long long>& out) const {
        out.assign(dim, 0);
        for (std::size_t c = 0; c < dim; ++c) {
            if (in[c] == 0) continue;
            for (const auto& [r, v] : cols[c]) out[r] += v * in[c];
        }
    }

    SparseOperator to_rat() const {
        SparseOperator m(dim);
        for (std::size_t c = 0; c < dim; ++c) {
            for (const auto& [r, v] : cols[c]) m.add(r, c, Rat(v));
        }
        return m;
    }
};

inline std::vector<long long> int_poly_from_roots(const std::vector<long long>& roots) {
    std::vector<long long> poly{1};
    for (long long r : roots) {
        std::vector<long long> next(poly.size() + 1, 0);
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] = checked_add(next[k + 1], poly[k]);
            next[k] = checked_add(next[k], checked_mul(-r, poly[k]));
        }
        poly = std::move(next);
    }
    return poly;
}

/// Per-column Krylov sweep: traces tr(P_g X^k) for k < roots.size(), whether
/// prod (X - r) kills every column, and which root-deleted factors kill every column.
struct KrylovScan {
    std::vector<std::vector<long long>> traces;
    bool annihilated = true;
    std::vector<bool> deleted_vanishes;
};

/// `relabel[t][c]` is the local index of g_t^{-1} applied to basis element c.
inline KrylovScan krylov_scan(const IntOperator& x, const std::vector<long long>& roots,
                              const std::vector<std::vector<std::size_t>>& relabel, bool check_deleted) {
    const std::size_t deg = roots.size();
    const auto f = int_poly_from_roots(roots);
    std::vector<std::vector<long long>> deleted;
    if (check_deleted) {
        for (std::size_t i = 0; i < deg; ++i) {
            auto others = roots;
            others.erase(others.begin() + static_cast<std::ptrdiff_t>(i));
            deleted.push_back(int_poly_from_roots(others));
        }
    }
    KrylovScan scan;
    scan.traces.assign(relabel.size() + 1, std::vector<long long>(deg, 0));
    scan.deleted_vanishes.assign(deleted.size(), true);
    std::vector<std::vector<long long>> v(deg + 1);
    std::vector<long long> acc;
    for (std::size_t c = 0; c < x.dim; ++c) {
        v[0].assign(x.dim, 0);
        v[0][c] = 1;
        for (std::size_t k = 1; k <= deg; ++k) x.apply(v[k - 1], v[k]);
        for (std::size_t k = 0; k < deg; ++k) {
            scan.traces[0][k] += v[k][c];
            for (std::size_t t = 0; t < relabel.size(); ++t) scan.traces[t + 1][k] += v[k][relabel[t][c]];
        }
        auto vanishes = [&](const std::vector<long long>& poly) {
            acc.assign(x.dim, 0);
            for (std::size_t k = 0; k < poly.size(); ++k) {
                if (poly[k] == 0) continue;
                for (std::size_t r = 0; r < x.dim; ++r) acc[r] = checked_add(acc[r], checked_mul(poly[k], v[k][r]));
            }
            return std::all_of(acc.begin(), acc.end(), [](long long a) { return a == 0; });
        };
        if (scan.annihilated && !vanishes(f)) scan.annihilated = false;
        for (std::size_t i = 0; i < deleted.size(); ++i) {
            if (scan.deleted_vanishes[i] && !vanishes(deleted[i])) scan.deleted_vanishes[i] = false;
        }
    }
    return scan;
}

}  // namespace detail

/// Monoid algebra of the free LRB (Element = InjWord) or of the flag monoid
/// (Element = FlagChain), with the products generator * element precomputed.
template <class Element>
class LrbAlgebra {
public:
    LrbAlgebra(int n, int p, MonoidBasis<Element> basis) : n_(n), p_(p), basis_(std::move(basis)) {
        const std::size_t g0 = basis_.stratum_begin(1 <= n_ ? 1 : 0);
        const std::size_t g1 = n_ >= 1 ? basis_.stratum_end(1) : g0;
        for (std::size_t g = g0; g < g1; ++g) generators_.push_back(g);
        gen_products_.resize(basis_.size());
        for (std::size_t b = 0; b < basis_.size(); ++b) {
            for (std::size_t g : generators_) gen_products_[b].push_back(basis_.multiply(g, b));
        }
    }

    int n() const { return n_; }
    int p() const { return p_; }
    const MonoidBasis<Element>& basis() const { return basis_; }
    std::size_t size() const { return basis_.size(); }
    const std::vector<std::size_t>& generators() const { return generators_; }
    /// Indices of g * b for each generator g.
    const std::vector<std::size_t>& gen_products(std::size_t b) const { return gen_products_.at(b); }

    /// Global indices forming the basis of `space`.
    std::pair<std::size_t, std::size_t> space_range(const Space& s) const {
        switch (s.kind) {
            case Space::Kind::full: return {0, basis_.size()};
            case Space::Kind::chamber: return {basis_.stratum_begin(n_), basis_.stratum_end(n_)};
            case Space::Kind::stratum:
                if (s.level < 0 || s.level > n_) throw std::invalid_argument("stratum level out of range");
                return {basis_.stratum_begin(s.level), basis_.stratum_end(s.level)};
        }
        return {0, 0};
    }

    /// Left multiplication by x on `space`; on a stratum, products that get
    /// longer are dropped (the filtration quotient).
    detail::IntOperator x_int(const Space& s) const {
        const auto [lo, hi] = space_range(s);
        detail::IntOperator op;
        op.dim = hi - lo;
        op.cols.resize(op.dim);
        for (std::size_t b = lo; b < hi; ++b) {
            std::map<std::size_t, long long> col;
            for (std::size_t r : gen_products_[b]) {
                if (r < lo || r >= hi) continue;
                ++col[r - lo];
            }
            op.cols[b - lo].assign(col.begin(), col.end());
        }
        return op;
    }

    SparseOperator x_operator(const Space& s) const { return x_int(s).to_rat(); }

private:
    int n_;
    int p_;
    MonoidBasis<Element> basis_;
    std::vector<std::size_t> generators_;
    std::vector<std::vector<std::size_t>> gen_products_;
};

using WordAlgebra = LrbAlgebra<InjWord>;
using FlagAlgebra = LrbAlgebra<FlagChain>;

inline const WordAlgebra& word_algebra(int n) {
    static std::map<int, std::unique_ptr<WordAlgebra>> cache;
    if (n < 0) throw std::invalid_argument("word_algebra: negative n");
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<WordAlgebra>(n, 0, make_word_monoid(n));
    return *slot;
}

inline const FlagAlgebra& flag_algebra(int n, int p) {
    static std::map<std::pair<int, int>, std::unique_ptr<FlagAlgebra>> cache;
    require_prime(p);
    if (n < 0) throw std::invalid_argument("flag_algebra: negative n");
    auto& slot = cache[{n, p}];
    if (!slot) slot = std::make_unique<FlagAlgebra>(n, p, make_flag_monoid(n, p));
    return *slot;
}

/// Calls f with the word algebra (p == 0) or the flag algebra over F_p.
template <class F>
decltype(auto) with_algebra(int n, int p, F&& f) {
    if (p) return f(flag_algebra(n, p));
    return f(word_algebra(n));
}

/// Desk-scale limits: words n <= 6; flags n <= 4 at p = 2, n <= 3 at p = 3, n <= 2 otherwise.
inline void require_desk_scale(int n, int p, const std::string& what) {
    const int limit = p == 0 ? 6 : p == 2 ? 4 : p == 3 ? 3 : 2;
    if (n < 0 || n > limit) {
        throw std::invalid_argument(what + ": refused, n=" + std::to_string(n) + " exceeds the limit " + std::to_string(limit) +
                                    (p ? " for p=" + std::to_string(p) : " for words"));
    }
}

/// j (words) or [j]_p (flags).
inline long long eigenvalue_at(int j, int p) { return p ? q_int(j).eval(p) : j; }

inline std::vector<long long> spectrum_roots(int n, int p) {
    std::vector<long long> r;
    for (int j = 0; j <= n; ++j) r.push_back(eigenvalue_at(j, p));
    return r;
}

// ----------------------------------------------------------------- elements

struct MonoidHandle {
    int n = 0;
    int p = 0;  // 0 for the free LRB on words

    std::string name() const { return p ? "flags" : "words"; }
    friend bool operator==(const MonoidHandle&, const MonoidHandle&) = default;
};

/// Finite combination of monoid elements, keyed by basis index.
struct AlgebraElement {
    MonoidHandle handle;
    std::map<std::size_t, Rat> coeffs;

    /// "(1)+(2)" style rendering with coefficients as "c*".
    std::string str() const {
        return with_algebra(handle.n, handle.p, [&](const auto& alg) {
            if (coeffs.empty()) return std::string("0");
            std::string s;
            for (const auto& [i, c] : coeffs) {
                if (c.sign() < 0) s += '-';
                else if (!s.empty()) s += '+';
                const Rat a = c.sign() < 0 ? -c : c;
                if (a != Rat(1)) s += a.str() + "*";
                s += alg.basis()[i].str();
            }
            return s;
        });
    }
};

/// Orbit sums x_0..x_n (all coefficients 1 on one stratum).
inline std::vector<AlgebraElement> orbit_sums(int n, int p = 0) {
    return with_algebra(n, p, [&](const auto& alg) {
        std::vector<AlgebraElement> out;
        for (int l = 0; l <= n; ++l) {
            AlgebraElement e{{n, p}, {}};
            for (std::size_t i = alg.basis().stratum_begin(l); i < alg.basis().stratum_end(l); ++i) e.coeffs[i] = Rat(1);
            out.push_back(std::move(e));
        }
        return out;
    });
}

/// Coefficients c_l with v = sum c_l x_l, or nullopt when v is not constant
/// on some stratum.
template <class Element>
std::optional<std::vector<long long>> expand_in_orbit_sums(const LrbAlgebra<Element>& alg, const std::vector<long long>& v) {
    std::vector<long long> out;
    for (int l = 0; l <= alg.n(); ++l) {
        const std::size_t lo = alg.basis().stratum_begin(l);
        const std::size_t hi = alg.basis().stratum_end(l);
        for (std::size_t i = lo; i < hi; ++i) {
            if (v[i] != v[lo]) return std::nullopt;
        }
        out.push_back(hi > lo ? v[lo] : 0);
    }
    return out;
}

/// Matrix of x on the basis x_0..x_n of invariants, obtained by multiplying
/// out x * x_l in the monoid algebra. Column l holds the expansion of x * x_l.
inline SparseOperator x_matrix_on_invariants(int n, int p = 0) {
    return with_algebra(n, p, [&](const auto& alg) {
        const auto x = alg.x_int(Space::full());
        SparseOperator m(static_cast<std::size_t>(n) + 1);
        std::vector<long long> v, out;
        for (int l = 0; l <= n; ++l) {
            v.assign(alg.size(), 0);
            for (std::size_t i = alg.basis().stratum_begin(l); i < alg.basis().stratum_end(l); ++i) v[i] = 1;
            x.apply(v, out);
            auto c = expand_in_orbit_sums(alg, out);
            if (!c) throw std::domain_error("x * x_l is not in the span of orbit sums");
            for (int k = 0; k <= n; ++k) {
                if ((*c)[k]) m.add(k, l, Rat((*c)[k]));
            }
        }
        return m;
    });
}

/// Coefficients of x^m in the orbit-sum basis x_0..x_n.
inline std::vector<long long> power_expansion(int n, int m, int p = 0) {
    if (m < 0 || m > n) throw std::invalid_argument("power_expansion: need 0 <= m <= n");
    return with_algebra(n, p, [&](const auto& alg) {
        const auto x = alg.x_int(Space::full());
        std::vector<long long> v(alg.size(), 0), out;
        v[0] = 1;  // the empty element
        for (int k = 0; k < m; ++k) {
            x.apply(v, out);
            v.swap(out);
        }
        auto c = expand_in_orbit_sums(alg, v);
        if (!c) throw std::domain_error("x^m is not in the span of orbit sums");
        return *c;
    });
}

inline SparseOperator build_x_operator(int n, int p, const Space& space) {
    return with_algebra(n, p, [&](const auto& alg) { return alg.x_operator(space); });
}

// ---------------------------------------------------------- minimal polynomial

struct MinpolyResult {
    std::string polynomial;
    bool annihilates = false;
    /// For each root r: the factor with (X - r) removed, and whether it still kills x.
    std::vector<std::pair<std::string, bool>> deleted;

    bool minimal() const {
        return annihilates && std::none_of(deleted.begin(), deleted.end(), [](const auto& d) { return d.second; });
    }
};

inline std::string root_product_string(const std::vector<long long>& roots, std::optional<std::size_t> skip = std::nullopt) {
    std::string s;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (skip && *skip == i) continue;
        s += roots[i] == 0 ? "X" : "(X-" + std::to_string(roots[i]) + ")";
    }
    return s.empty() ? "1" : s;
}

/// Checks that prod_j (X - lambda_j) kills x on the whole algebra and that no
/// factor with one root removed does.
inline MinpolyResult minpoly_verify(int n, int p = 0) {
    require_desk_scale(n, p, "minpoly_verify");
    return with_algebra(n, p, [&](const auto& alg) {
        const auto roots = spectrum_roots(n, p);
        const auto scan = detail::krylov_scan(alg.x_int(Space::full()), roots, {}, true);
        MinpolyResult r;
        r.polynomial = root_product_string(roots);
        r.annihilates = scan.annihilated;
        for (std::size_t i = 0; i < roots.size(); ++i) r.deleted.emplace_back(root_product_string(roots, i), scan.deleted_vanishes[i]);
        return r;
    });
}

// ------------------------------------------------------------------ spectra

inline long long qbinomial_at(int n, int k, int p) { return p ? q_binomial(n, k).eval(p) : binomial(n, k); }
inline long long derangements_at(int m, int p) { return p ? q_derangement(m).eval(p) : derangement_number(m); }

inline long long predicted_dimension(int n, int j, int p, const Space& space) {
    if (j < 0 || j > n) throw std::invalid_argument("predicted_dimension: need 0 <= j <= n");
    auto stratum = [&](int l) {
        if (j > l) return 0LL;
        return checked_mul(checked_mul(qbinomial_at(n, l, p), qbinomial_at(l, j, p)), derangements_at(l - j, p));
    };
    switch (space.kind) {
        case Space::Kind::chamber: return stratum(n);
        case Space::Kind::stratum: return stratum(space.level);
        case Space::Kind::full: {
            long long s = 0;
            for (int l = j; l <= n; ++l) s = checked_add(s, stratum(l));
            return s;
        }
    }
    return 0;
}

/// Words only: h_(n-l) h_j d_(l-j) summed over the strata making up `space`.
inline SchurVector predicted_schur(int n, int j, const Space& space) {
    if (j < 0 || j > n) throw std::invalid_argument("predicted_schur: need 0 <= j <= n");
    auto stratum = [&](int l) {
        if (j > l) return SchurVector(n);
        return pieri_h(pieri_h(derangement_sf(l - j, 'C'), j), n - l);
    };
    switch (space.kind) {
        case Space::Kind::chamber: return stratum(n);
        case Space::Kind::stratum: return stratum(space.level);
        case Space::Kind::full: {
            SchurVector s(n);
            for (int l = j; l <= n; ++l) s += stratum(l);
            return s;
        }
    }
    return SchurVector(n);
}

struct EigenEntry {
    int j = 0;
    long long eigenvalue = 0;
    long long dim = 0;
    long long predicted_dim = 0;
    std::optional<ClassFunction> character;
    std::optional<SchurVector> schur;
    std::optional<SchurVector> predicted_schur;

    bool pass() const { return dim == predicted_dim && (!schur || (predicted_schur && *schur == *predicted_schur)); }
};

struct SpectralReport {
    MonoidHandle handle;
    Space space;
    std::size_t space_dim = 0;
    bool annihilated = false;
    std::vector<EigenEntry> eigenvalues;

    long long dimension_total() const {
        long long s = 0;
        for (const auto& e : eigenvalues) s += e.dim;
        return s;
    }

    bool pass() const {
        return annihilated && dimension_total() == static_cast<long long>(space_dim) &&
               std::all_of(eigenvalues.begin(), eigenvalues.end(), [](const EigenEntry& e) { return e.pass(); });
    }

    const EigenEntry& at(int j) const { return eigenvalues.at(j); }

    nlohmann::json to_json() const {
        nlohmann::json ev = nlohmann::json::array();
        for (const auto& e : eigenvalues) {
            nlohmann::json o{{"j", e.j}, {"eigenvalue", e.eigenvalue}, {"dim", e.dim}, {"predicted_dim", e.predicted_dim}};
            if (e.schur) o["schur"] = e.schur->str();
            if (e.predicted_schur) o["predicted_schur"] = e.predicted_schur->str();
            if (e.character) o["character"] = e.character->to_json();
            o["pass"] = e.pass();
            ev.push_back(std::move(o));
        }
        nlohmann::json q = handle.p ? nlohmann::json(handle.p) : nlohmann::json(nullptr);
        return {{"monoid", handle.name()}, {"n", handle.n}, {"q", q},          {"space", space.str()},
                {"space_dim", space_dim},  {"annihilated", annihilated}, {"eigenvalues", ev}, {"pass", pass()}};
    }
};

namespace detail {

/// Local index permutation c -> g^{-1} c on the space for a permutation g.
inline std::vector<std::size_t> inverse_action_on_space(const WordAlgebra& alg, const Space& space, const std::vector<int>& g) {
    std::vector<int> ginv(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) ginv[g[i] - 1] = static_cast<int>(i) + 1;
    const auto [lo, hi] = alg.space_range(space);
    std::vector<std::size_t> out;
    for (std::size_t b = lo; b < hi; ++b) out.push_back(alg.basis().index_of(act_perm(ginv, alg.basis()[b])) - lo);
    return out;
}

}  // namespace detail

/// Eigenspace dimensions of x on `space` as traces of the Lagrange projections
/// (and, for words with `characters`, their S_n characters and Schur images).
inline SpectralReport analyze_spectrum(int n, int p, const Space& space, bool characters = false) {
    using Key = std::tuple<int, int, Space, bool>;
    static std::map<Key, SpectralReport> cache;
    const Key key{n, p, space, characters};
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    require_desk_scale(n, p, "analyze_spectrum");
    if (characters && p) throw std::invalid_argument("analyze_spectrum: characters are only computed for words");
    if (characters && n > 6) throw std::invalid_argument("analyze_spectrum: refused, characters need n <= 6");
    if (space.kind == Space::Kind::stratum && (space.level < 0 || space.level > n)) {
        throw std::invalid_argument("analyze_spectrum: stratum level out of range");
    }

    SpectralReport rep;
    rep.handle = {n, p};
    rep.space = space;
    const auto roots = spectrum_roots(n, p);
    std::vector<Rat> eig;
    for (long long r : roots) eig.emplace_back(r);

    std::vector<Partition> types;
    detail::KrylovScan scan;
    if (characters) {
        const auto& alg = word_algebra(n);
        types = partitions_of(n);
        std::vector<std::vector<std::size_t>> relabel;
        for (const auto& mu : types) relabel.push_back(detail::inverse_action_on_space(alg, space, representative_permutation(mu)));
        scan = detail::krylov_scan(alg.x_int(space), roots, relabel, false);
        rep.space_dim = alg.x_int(space).dim;
    } else {
        with_algebra(n, p, [&](const auto& alg) {
            const auto x = alg.x_int(space);
            rep.space_dim = x.dim;
            scan = detail::krylov_scan(x, roots, {}, false);
            return 0;
        });
    }
    rep.annihilated = scan.annihilated;

    for (int j = 0; j <= n; ++j) {
        const auto lag = lagrange_polynomial(eig, j);
        auto project = [&](const std::vector<long long>& tr) {
            Rat s(0);
            for (std::size_t k = 0; k < lag.size(); ++k) s += lag[k] * Rat(tr[k]);
            return s;
        };
        EigenEntry e;
        e.j = j;
        e.eigenvalue = roots[j];
        const Rat d = project(scan.traces[0]);
        if (!d.is_integer()) throw std::domain_error("analyze_spectrum: non-integer eigenspace dimension " + d.str());
        e.dim = d.to_integer();
        e.predicted_dim = predicted_dimension(n, j, p, space);
        if (characters) {
            ClassFunction chi(n);
            for (std::size_t t = 0; t < types.size(); ++t) chi.set(types[t], project(scan.traces[t + 1]));
            e.schur = classfn_to_schur(chi);
            e.character = std::move(chi);
            e.predicted_schur = predicted_schur(n, j, space);
        }
        rep.eigenvalues.push_back(std::move(e));
    }
    cache.emplace(key, rep);
    return rep;
}

inline long long eigenspace_dimension(int n, int j, int p, const Space& space) {
    if (j < 0 || j > n) throw std::invalid_argument("eigenspace_dimension: need 0 <= j <= n");
    return analyze_spectrum(n, p, space).at(j).dim;
}

inline ClassFunction eigenspace_character(int n, int j, const Space& space = Space::full()) {
    if (j < 0 || j > n) throw std::invalid_argument("eigenspace_character: need 0 <= j <= n");
    return *analyze_spectrum(n, 0, space, true).at(j).character;
}

inline SchurVector eigenspace_schur(int n, int j, const Space& space) {
    if (j < 0 || j > n) throw std::invalid_argument("eigenspace_schur: need 0 <= j <= n");
    return *analyze_spectrum(n, 0, space, true).at(j).schur;
}

// --------------------------------------------------------- Psi / Phi (words)

template <class Element>
using Combo = std::map<Element, Rat>;

template <class Element>
void add_term(Combo<Element>& c, const Element& e, const Rat& v) {
    if (v.is_zero()) return;
    auto [it, fresh] = c.emplace(e, v);
    if (!fresh) {
        it->second += v;
        if (it->second.is_zero()) c.erase(it);
    }
}

/// x * c computed term by term with the monoid product.
template <class Element>
Combo<Element> x_times(const LrbAlgebra<Element>& alg, const Combo<Element>& c) {
    Combo<Element> out;
    for (const auto& [e, v] : c) {
        for (std::size_t g : alg.generators()) add_term(out, alg.basis()[g] * e, v);
    }
    return out;
}

template <class Element>
Combo<Element> scaled(Combo<Element> c, const Rat& s) {
    if (s.is_zero()) return {};
    for (auto& [e, v] : c) v *= s;
    return c;
}

template <class Element>
Combo<Element> operator+(Combo<Element> a, const Combo<Element>& b) {
    for (const auto& [e, v] : b) add_term(a, e, v);
    return a;
}

namespace detail {

inline void check_word_on_complement(int n, const std::set<int>& U, const InjWord& a) {
    if (a.ambient() != n) throw std::invalid_argument("psi/phi: word has the wrong ambient size");
    for (int u : U) {
        if (u < 1 || u > n) throw std::invalid_argument("psi/phi: U is not a subset of 1..n");
    }
    for (int x : a.letters()) {
        if (U.count(x)) throw std::invalid_argument("psi/phi: U overlaps the letters of a");
    }
    if (static_cast<int>(U.size()) + a.length() != n) throw std::invalid_argument("psi/phi: a must use every letter outside U");
}

inline std::vector<std::vector<int>> orderings(const std::set<int>& U) {
    std::vector<int> b(U.begin(), U.end());
    std::vector<std::vector<int>> out;
    do out.push_back(b);
    while (std::next_permutation(b.begin(), b.end()));
    return out;
}

}  // namespace detail

/// Sum over orderings b of U of the word (b, a).
inline Combo<InjWord> psi(int n, const std::set<int>& U, const InjWord& a) {
    detail::check_word_on_complement(n, U, a);
    Combo<InjWord> out;
    for (auto b : detail::orderings(U)) {
        b.insert(b.end(), a.letters().begin(), a.letters().end());
        add_term(out, InjWord(n, b), Rat(1));
    }
    return out;
}

/// Sum over orderings b of U of the word (a_1, b, a_2, ..., a_(n-j)).
inline Combo<InjWord> phi(int n, const std::set<int>& U, const InjWord& a) {
    detail::check_word_on_complement(n, U, a);
    if (a.length() == 0) throw std::invalid_argument("phi: a must be nonempty");
    Combo<InjWord> out;
    for (const auto& b : detail::orderings(U)) {
        std::vector<int> w{a[0]};
        w.insert(w.end(), b.begin(), b.end());
        w.insert(w.end(), a.letters().begin() + 1, a.letters().end());
        add_term(out, InjWord(n, w), Rat(1));
    }
    return out;
}

template <class Element, class Map>
Combo<Element> extend_linearly(const Combo<Element>& c, Map&& map) {
    Combo<Element> out;
    for (const auto& [e, v] : c) {
        for (const auto& [f, w] : map(e)) add_term(out, f, v * w);
    }
    return out;
}

// --------------------------------------------------------- Psi / Phi (flags)

namespace detail {

inline void check_chain_above(const Subspace& U, const std::vector<Subspace>& A) {
    const int n = U.ambient_dim();
    if (U.dim() + static_cast<int>(A.size()) != n) throw std::invalid_argument("psi_q/phi_q: A must be a complete flag of V/U");
    for (std::size_t i = 0; i < A.size(); ++i) {
        if (A[i].ambient_dim() != n || A[i].modulus() != U.modulus()) throw std::invalid_argument("psi_q/phi_q: A lives in another space");
        if (A[i].dim() != U.dim() + static_cast<int>(i) + 1) throw std::invalid_argument("psi_q/phi_q: A has a member of wrong dimension");
        const Subspace& below = i ? A[i - 1] : U;
        if (!A[i].contains(below)) throw std::invalid_argument("psi_q/phi_q: A does not sit above U");
    }
}

}  // namespace detail

/// Sum over complete flags B of U of (B_1, ..., B_(j-1), U, A_1, ..., A_(n-j)),
/// where A is a flag of V/U given by the subspaces of V containing U.
inline Combo<FlagChain> psi_q(const Subspace& U, const std::vector<Subspace>& A) {
    detail::check_chain_above(U, A);
    const int n = U.ambient_dim();
    const int p = U.modulus();
    Combo<FlagChain> out;
    for (const auto& b : enumerate_flags(n, p, U.dim(), U)) {
        auto chain = b.chain();
        chain.insert(chain.end(), A.begin(), A.end());
        add_term(out, FlagChain(n, p, chain), Rat(1));
    }
    return out;
}

/// Sum over lines L in A_1 not in U and complete flags B of U of
/// (L, L+B_1, ..., L+B_(j-1), A_1, ..., A_(n-j)) with repeats removed.
inline Combo<FlagChain> phi_q(const Subspace& U, const std::vector<Subspace>& A) {
    detail::check_chain_above(U, A);
    if (A.empty()) throw std::invalid_argument("phi_q: A must be nonempty");
    const int n = U.ambient_dim();
    const int p = U.modulus();
    Combo<FlagChain> out;
    const auto flagsU = enumerate_flags(n, p, U.dim(), U);
    for (const auto& L : enumerate_subspaces(n, p, 1)) {
        if (!A[0].contains(L) || U.contains(L)) continue;
        for (const auto& b : flagsU) {
            std::vector<Subspace> lifted{L};
            for (std::size_t i = 0; i + 1 < b.chain().size(); ++i) lifted.push_back(subspace_sum(L, b.chain()[i]));
            add_term(out, FlagChain(n, p, mul_chain(lifted, A)), Rat(1));
        }
    }
    return out;
}

/// x_(V/U) * A: sum over (j+1)-dimensional W containing U of (W) * A, as chains above U.
inline std::vector<std::vector<Subspace>> quotient_x_times(const Subspace& U, const std::vector<Subspace>& A) {
    std::vector<std::vector<Subspace>> out;
    if (U.dim() == U.ambient_dim()) return out;
    for (const auto& W : enumerate_subspaces(U.ambient_dim(), U.modulus(), U.dim() + 1, U)) out.push_back(mul_chain({W}, A));
    return out;
}

// -------------------------------------------------- operator identity checks

namespace detail {

/// Small chamber operator on a finite basis given by a successor function.
template <class Key, class Succ>
SparseOperator chamber_operator(const std::vector<Key>& basis, Succ&& successors) {
    std::map<Key, std::size_t> idx;
    for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], i);
    SparseOperator m(basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) {
        for (const auto& s : successors(basis[c])) m.add(idx.at(s), c, Rat(1));
    }
    return m;
}

inline std::vector<std::set<int>> subsets_of_size(int n, int j) {
    std::vector<std::set<int>> out;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + j, true);
    do {
        std::set<int> s;
        for (int i = 0; i < n; ++i) {
            if (pick[i]) s.insert(i + 1);
        }
        out.push_back(s);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

inline std::vector<InjWord> chambers_on(int n, const std::set<int>& letters) {
    std::vector<int> w(letters.begin(), letters.end());
    std::vector<InjWord> out;
    do out.emplace_back(n, w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

template <class Element>
std::map<std::size_t, Rat> to_chamber_vector(const LrbAlgebra<Element>& alg, const Combo<Element>& c) {
    const std::size_t lo = alg.basis().stratum_begin(alg.n());
    std::map<std::size_t, Rat> v;
    for (const auto& [e, x] : c) {
        const std::size_t i = alg.basis().index_of(e);
        if (i < lo) throw std::logic_error("expected a chamber element");
        v[i - lo] = x;
    }
    return v;
}

/// One entry per j: identity cases, eigenvector checks, and the rank tallies.
struct WachsTally {
    long long identity_cases = 0;
    long long identity_failures = 0;
    long long eigen_vectors = 0;
    long long eigen_failures = 0;
    long long rank_sum = 0;
    std::vector<std::map<std::size_t, Rat>> images;
};

inline std::vector<Check> wachs_checks(int n, int p, const std::vector<WachsTally>& tallies) {
    std::vector<Check> out;
    const auto rep = analyze_spectrum(n, p, Space::chamber());
    const std::size_t chamber_dim = rep.space_dim;
    for (int j = 0; j <= n; ++j) {
        const auto& t = tallies[j];
        const std::string tag = (p ? "q-" : "") + std::string("j=") + std::to_string(j);
        out.push_back({"x*Psi_U identity " + tag + " (" + std::to_string(t.identity_cases) + " cases)", t.identity_failures == 0 && t.identity_cases > 0,
                       "0 failures", std::to_string(t.identity_failures) + " failures"});
        out.push_back({"Psi_U(kernel) are exact eigenvectors " + tag + " (" + std::to_string(t.eigen_vectors) + " vectors)",
                       t.eigen_failures == 0, "0 failures", std::to_string(t.eigen_failures) + " failures"});
        const long long union_rank = static_cast<long long>(rank_of(t.images, chamber_dim));
        const long long want = rep.at(j).dim;
        const bool ok = t.rank_sum == want && union_rank == want && want == rep.at(j).predicted_dim;
        out.push_back({"sum_U dim Psi_U(kernel) = chamber eigenspace dim " + tag, ok, std::to_string(want),
                       "sum " + std::to_string(t.rank_sum) + ", span " + std::to_string(union_rank)});
    }
    return out;
}

inline std::size_t combo_rank(const std::vector<std::map<std::size_t, Rat>>& vs, std::size_t dim) { return rank_of(vs, dim); }

}  // namespace detail

/// Checks x * Psi_U(a) = [j] Psi_U(a) + Phi_U(x_(complement) * a) for all U
/// and a (trials == 0) or `trials` seeded samples, then that Psi_U maps the
/// kernel of the small chamber operator onto [j]-eigenvectors whose dimensions
/// add up to the chamber eigenspace.
inline std::vector<Check> verify_operator_identities(int n, int p = 0, int trials = 0, std::uint64_t seed = 20240607) {
    if (p == 0 && (n < 1 || n > 5)) throw std::invalid_argument("verify_operator_identities: refused, words need 1 <= n <= 5");
    if (p != 0 && (n < 1 || n > 3)) throw std::invalid_argument("verify_operator_identities: refused, flags need 1 <= n <= 3");
    std::mt19937_64 gen(seed);
    std::vector<detail::WachsTally> tallies(n + 1);

    if (p == 0) {
        const auto& alg = word_algebra(n);
        for (int j = 0; j <= n; ++j) {
            auto& t = tallies[j];
            for (const auto& U : detail::subsets_of_size(n, j)) {
                std::set<int> rest;
                for (int i = 1; i <= n; ++i) {
                    if (!U.count(i)) rest.insert(i);
                }
                const auto chambers = detail::chambers_on(n, rest);
                auto small_x = [&](const InjWord& a) {
                    std::vector<InjWord> s;
                    for (int b : rest) s.push_back(InjWord(n, {b}) * a);
                    return s;
                };
                auto check_identity = [&](const InjWord& a) {
                    const auto lhs = x_times(alg, psi(n, U, a));
                    Combo<InjWord> xa;
                    for (const auto& w : small_x(a)) add_term(xa, w, Rat(1));
                    const auto rhs = scaled(psi(n, U, a), Rat(j)) +
                                     extend_linearly(xa, [&](const InjWord& w) { return phi(n, U, w); });
                    ++t.identity_cases;
                    if (!(lhs == rhs)) ++t.identity_failures;
                };
                if (trials == 0) {
                    for (const auto& a : chambers) check_identity(a);
                } else {
                    for (int k = 0; k < trials; ++k) check_identity(chambers[gen() % chambers.size()]);
                }
                const auto ker = kernel_basis(detail::chamber_operator(chambers, small_x));
                std::vector<std::map<std::size_t, Rat>> imgs;
                for (const auto& v : ker) {
                    Combo<InjWord> c;
                    for (std::size_t i = 0; i < v.size(); ++i) {
                        if (!v[i].is_zero()) c = c + scaled(psi(n, U, chambers[i]), v[i]);
                    }
                    ++t.eigen_vectors;
                    if (!(x_times(alg, c) == scaled(c, Rat(j)))) ++t.eigen_failures;
                    imgs.push_back(detail::to_chamber_vector(alg, c));
                }
                t.rank_sum += static_cast<long long>(detail::combo_rank(imgs, alg.basis().stratum_size(n)));
                t.images.insert(t.images.end(), imgs.begin(), imgs.end());
            }
        }
    } else {
        const auto& alg = flag_algebra(n, p);
        for (int j = 0; j <= n; ++j) {
            auto& t = tallies[j];
            const Rat qj(q_int(j).eval(p));
            for (const auto& U : enumerate_subspaces(n, p, j)) {
                const auto chains = enumerate_flags_above(U, n - j);
                auto check_identity = [&](const std::vector<Subspace>& A) {
                    const auto lhs = x_times(alg, psi_q(U, A));
                    Combo<FlagChain> rhs = scaled(psi_q(U, A), qj);
                    for (const auto& B : quotient_x_times(U, A)) rhs = rhs + phi_q(U, B);
                    ++t.identity_cases;
                    if (!(lhs == rhs)) ++t.identity_failures;
                };
                if (trials == 0) {
                    for (const auto& A : chains) check_identity(A);
                } else {
                    for (int k = 0; k < trials; ++k) check_identity(chains[gen() % chains.size()]);
                }
                const auto ker = kernel_basis(
                    detail::chamber_operator(chains, [&](const std::vector<Subspace>& A) { return quotient_x_times(U, A); }));
                std::vector<std::map<std::size_t, Rat>> imgs;
                for (const auto& v : ker) {
                    Combo<FlagChain> c;
                    for (std::size_t i = 0; i < v.size(); ++i) {
                        if (!v[i].is_zero()) c = c + scaled(psi_q(U, chains[i]), v[i]);
                    }
                    ++t.eigen_vectors;
                    if (!(x_times(alg, c) == scaled(c, qj))) ++t.eigen_failures;
                    imgs.push_back(detail::to_chamber_vector(alg, c));
                }
                t.rank_sum += static_cast<long long>(detail::combo_rank(imgs, alg.basis().stratum_size(n)));
                t.images.insert(t.images.end(), imgs.begin(), imgs.end());
            }
        }
    }
    return detail::wachs_checks(n, p, tallies);
}

// ---------------------------------------------------------------- filtration

namespace detail {

/// Block label and relabelled element of F_l for a length-l word.
inline std::pair<std::string, InjWord> block_of(const InjWord& w) {
    std::vector<int> sorted = w.letters();
    std::sort(sorted.begin(), sorted.end());
    std::string key;
    for (int a : sorted) key += std::to_string(a) + ",";
    std::vector<int> relabelled;
    for (int a : w.letters()) relabelled.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), a) - sorted.begin()) + 1);
    return {key, InjWord(w.length(), relabelled)};
}

/// Same for flags: the top member U, with every member rewritten in the
/// coordinates of U's reduced basis.
inline std::pair<std::string, FlagChain> block_of(const FlagChain& f) {
    const int l = f.length();
    const int p = f.modulus();
    if (l == 0) return {"", FlagChain(0, p)};
    const Subspace& U = f.chain().back();
    std::vector<Subspace> members;
    for (const auto& s : f.chain()) {
        FpMatrix rows;
        for (const auto& r : s.rows()) rows.push_back(U.coordinates(r));
        members.push_back(Subspace::span(l, p, rows));
    }
    return {U.str(), FlagChain(l, p, members)};
}

template <class Element>
const LrbAlgebra<Element>& small_algebra(int l, int p);
template <>
inline const WordAlgebra& small_algebra<InjWord>(int l, int) { return word_algebra(l); }
template <>
inline const FlagAlgebra& small_algebra<FlagChain>(int l, int p) { return flag_algebra(l, p); }

}  // namespace detail

/// For every l: the length-l quotient operator is block diagonal over the
/// blocks U (letter set / top subspace), each block equals the chamber
/// operator of F_l after relabelling, and block eigenspace dimensions add up
/// to the full-algebra ones.
inline std::vector<Check> filtration_decomposition(int n, int p = 0) {
    if (p == 0 && (n < 0 || n > 4)) throw std::invalid_argument("filtration_decomposition: refused, words need n <= 4");
    if (p != 0 && (n < 0 || n > 3)) throw std::invalid_argument("filtration_decomposition: refused, flags need n <= 3");
    std::vector<Check> out;
    std::vector<long long> assembled(n + 1, 0);
    with_algebra(n, p, [&](const auto& alg) {
        using Element = std::decay_t<decltype(alg.basis()[0])>;
        for (int l = 0; l <= n; ++l) {
            const auto op = alg.x_int(Space::stratum(l));
            const std::size_t lo = alg.basis().stratum_begin(l);
            const auto& small = detail::small_algebra<Element>(l, p);
            const auto chamber = small.x_int(Space::chamber());
            const std::size_t slo = small.basis().stratum_begin(l);
            std::map<std::string, int> blocks;
            bool diagonal = true;
            bool matches = true;
            for (std::size_t c = 0; c < op.dim; ++c) {
                const auto [key, rc] = detail::block_of(alg.basis()[lo + c]);
                ++blocks[key];
                std::map<std::size_t, long long> col;
                for (const auto& [r, v] : op.cols[c]) {
                    const auto [rkey, rr] = detail::block_of(alg.basis()[lo + r]);
                    if (rkey != key) diagonal = false;
                    col[small.basis().index_of(rr) - slo] = v;
                }
                const auto& want = chamber.cols[small.basis().index_of(rc) - slo];
                if (col != std::map<std::size_t, long long>(want.begin(), want.end())) matches = false;
            }
            const long long expected_blocks = qbinomial_at(n, l, p);
            const bool sizes = static_cast<long long>(blocks.size()) == expected_blocks &&
                               std::all_of(blocks.begin(), blocks.end(), [&](const auto& b) { return b.second == static_cast<int>(chamber.dim); });
            out.push_back({"stratum " + std::to_string(l) + ": block diagonal, each block is the chamber operator of F_" + std::to_string(l),
                           diagonal && matches && sizes,
                           std::to_string(expected_blocks) + " blocks of size " + std::to_string(chamber.dim),
                           std::to_string(blocks.size()) + " blocks" + (diagonal ? "" : ", off-block entries") + (matches ? "" : ", block mismatch")});
            const auto small_rep = analyze_spectrum(l, p, Space::chamber());
            const auto strat_rep = analyze_spectrum(n, p, Space::stratum(l));
            bool strat_ok = strat_rep.annihilated;
            for (int j = 0; j <= n; ++j) {
                const long long from_blocks = j <= l ? expected_blocks * small_rep.at(j).dim : 0;
                assembled[j] += from_blocks;
                strat_ok = strat_ok && strat_rep.at(j).dim == from_blocks;
            }
            out.push_back({"stratum " + std::to_string(l) + ": quotient eigenspace dims = blocks x chamber dims of F_" + std::to_string(l),
                           strat_ok, "match", strat_ok ? "match" : "mismatch"});
        }
        return 0;
    });
    const auto full = analyze_spectrum(n, p, Space::full());
    std::string want, got;
    bool ok = full.annihilated;
    for (int j = 0; j <= n; ++j) {
        want += (j ? "," : "") + std::to_string(full.at(j).dim);
        got += (j ? "," : "") + std::to_string(assembled[j]);
        ok = ok && full.at(j).dim == assembled[j];
    }
    out.push_back({"sum over strata of block eigenspace dims = full-algebra dims", ok, want, got});
    return out;
}

/// In F_3 modulo words of length 3, (3)*(1,2) vanishes: the quotient column of
/// (1,2) is (1,2)+(2,1) while the full product keeps (3,1,2).
inline Check truncation_example() {
    const auto& alg = word_algebra(3);
    const auto op = alg.x_int(Space::stratum(2));
    const std::size_t lo = alg.basis().stratum_begin(2);
    const std::size_t c = alg.basis().index_of(InjWord(3, {1, 2})) - lo;
    std::string got;
    for (const auto& [r, v] : op.cols[c]) got += (got.empty() ? "" : "+") + (v == 1 ? "" : std::to_string(v) + "*") + alg.basis()[lo + r].str();
    const bool full_has = InjWord(3, {3}) * InjWord(3, {1, 2}) == InjWord(3, {3, 1, 2});
    return {"(3)*(1,2) vanishes modulo length 3", got == "(1,2)+(2,1)" && full_has, "(1,2)+(2,1)", got};
}

// ----------------------------------------------------------- random to top

struct RandomToTop {
    int n = 0;
    SparseOperator matrix;
    bool column_stochastic = false;
    bool row_stochastic = false;
    /// (eigenvalue j/n, multiplicity, predicted C(n,j) d_(n-j))
    std::vector<std::tuple<Rat, long long, long long>> spectrum;
    bool stationary_uniform = false;
    std::string stationary_method;

    bool pass() const {
        return column_stochastic && row_stochastic && stationary_uniform &&
               std::all_of(spectrum.begin(), spectrum.end(), [](const auto& s) { return std::get<1>(s) == std::get<2>(s); });
    }

    nlohmann::json to_json(bool with_matrix = false) const {
        nlohmann::json sp = nlohmann::json::array();
        for (const auto& [e, m, pm] : spectrum) sp.push_back({{"eigenvalue", e.str()}, {"multiplicity", m}, {"predicted", pm}});
        nlohmann::json j{{"n", n},
                         {"column_stochastic", column_stochastic},
                         {"row_stochastic", row_stochastic},
                         {"spectrum", sp},
                         {"stationary_uniform", stationary_uniform},
                         {"stationary_method", stationary_method},
                         {"pass", pass()}};
        if (with_matrix) j["matrix"] = lrbq::to_json(matrix);
        return j;
    }
};

/// (1/n) times x on permutation words: move a uniformly chosen card to the top.
/// For n <= 5 the fixed vector is found by an exact kernel solve; above that
/// the uniform vector is checked to be fixed and eigenvalue 1 to be simple.
inline RandomToTop random_to_top(int n) {
    if (n < 1 || n > 7) throw std::invalid_argument("random_to_top: refused, need 1 <= n <= 7");
    RandomToTop r;
    r.n = n;
    r.matrix = build_x_operator(n, 0, Space::chamber()).scaled(Rat(1, n));
    const std::size_t dim = r.matrix.dim();
    std::vector<Rat> row_sum(dim, Rat(0));
    r.column_stochastic = true;
    for (std::size_t c = 0; c < dim; ++c) {
        Rat s(0);
        for (const auto& [i, v] : r.matrix.column(c)) {
            s += v;
            row_sum[i] += v;
        }
        if (s != Rat(1)) r.column_stochastic = false;
    }
    r.row_stochastic = std::all_of(row_sum.begin(), row_sum.end(), [](const Rat& s) { return s == Rat(1); });
    const auto rep = analyze_spectrum(n, 0, Space::chamber());
    for (const auto& e : rep.eigenvalues) r.spectrum.emplace_back(Rat(e.j, n), e.dim, e.predicted_dim);

    if (n <= 5) {
        const auto ker = kernel_basis(r.matrix - SparseOperator::identity(dim));
        r.stationary_uniform = ker.size() == 1 && std::all_of(ker[0].begin(), ker[0].end(), [&](const Rat& v) { return v == ker[0][0]; });
        r.stationary_method = "exact kernel of R - I";
    } else {
        const auto image = r.matrix.apply(RatVector(dim, Rat(1, static_cast<long>(dim))));
        const bool fixed = std::all_of(image.begin(), image.end(), [&](const Rat& v) { return v == Rat(1, static_cast<long>(dim)); });
        r.stationary_uniform = fixed && rep.at(n).dim == 1;
        r.stationary_method = "uniform vector fixed, eigenvalue 1 simple";
    }
    return r;
}

// ------------------------------------------------------ group equivariance

namespace detail {

inline std::vector<int> random_permutation(int n, std::mt19937_64& gen) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    for (int i = n - 1; i > 0; --i) std::swap(w[i], w[gen() % static_cast<std::uint64_t>(i + 1)]);
    return w;
}

}  // namespace detail

/// Sampled group elements fix every orbit sum and commute with x on the full algebra.
inline std::vector<Check> verify_invariance(int n, int p = 0, int samples = 5, std::uint64_t seed = 20240607) {
    std::mt19937_64 gen(seed);
    return with_algebra(n, p, [&](const auto& alg) {
        bool fixed = true;
        bool commutes = true;
        for (int s = 0; s < samples; ++s) {
            std::vector<std::size_t> perm(alg.size());
            if constexpr (std::is_same_v<std::decay_t<decltype(alg.basis()[0])>, InjWord>) {
                const auto g = detail::random_permutation(n, gen);
                for (std::size_t b = 0; b < alg.size(); ++b) perm[b] = alg.basis().index_of(act_perm(g, alg.basis()[b]));
            } else {
                const auto g = random_invertible(n, p, gen());
                for (std::size_t b = 0; b < alg.size(); ++b) perm[b] = alg.basis().index_of(act_gl(g, alg.basis()[b]));
            }
            for (std::size_t b = 0; b < alg.size(); ++b) {
                if (alg.basis()[perm[b]].length() != alg.basis()[b].length()) fixed = false;
            }
            std::vector<bool> hit(alg.size(), false);
            for (std::size_t b : perm) hit[b] = true;
            fixed = fixed && std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
            for (std::size_t b = 0; b < alg.size(); ++b) {
                std::vector<std::size_t> lhs, rhs;
                for (std::size_t r : alg.gen_products(b)) lhs.push_back(perm[r]);
                for (std::size_t r : alg.gen_products(perm[b])) rhs.push_back(r);
                std::sort(lhs.begin(), lhs.end());
                std::sort(rhs.begin(), rhs.end());
                if (lhs != rhs) commutes = false;
            }
        }
        const std::string tag = p ? "flags n=" + std::to_string(n) + " p=" + std::to_string(p) : "words n=" + std::to_string(n);
        return std::vector<Check>{
            {"g * x_l = x_l for sampled g, " + tag, fixed, "true", fixed ? "true" : "false"},
            {"P_g X = X P_g for sampled g, " + tag, commutes, "true", commutes ? "true" : "false"},
        };
    });
}

}  // namespace lrbq
