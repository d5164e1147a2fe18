#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace lrbq {

inline bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

inline void require_prime(int p) {
    if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
}

/// Element of the prime field F_p.
class FpScalar {
public:
    FpScalar(long long value, int p) : p_(p) {
        require_prime(p);
        value_ = static_cast<int>(((value % p) + p) % p);
    }

    int value() const { return value_; }
    int modulus() const { return p_; }

    FpScalar inverse() const {
        if (value_ == 0) throw std::domain_error("FpScalar: zero has no inverse");
        // Fermat: a^(p-2)
        long long r = 1, b = value_;
        for (int e = p_ - 2; e > 0; e >>= 1) {
            if (e & 1) r = r * b % p_;
            b = b * b % p_;
        }
        return FpScalar(r, p_);
    }

    friend FpScalar operator+(FpScalar a, FpScalar b) { return FpScalar(a.value_ + b.value_, check(a, b)); }
    friend FpScalar operator-(FpScalar a, FpScalar b) { return FpScalar(a.value_ - b.value_, check(a, b)); }
    friend FpScalar operator*(FpScalar a, FpScalar b) {
        return FpScalar(static_cast<long long>(a.value_) * b.value_, check(a, b));
    }
    friend bool operator==(FpScalar a, FpScalar b) { return a.p_ == b.p_ && a.value_ == b.value_; }

private:
    static int check(FpScalar a, FpScalar b) {
        if (a.p_ != b.p_) throw std::invalid_argument("FpScalar: moduli differ");
        return a.p_;
    }

    int value_ = 0;
    int p_ = 2;
};

using FpVector = std::vector<int>;
using FpMatrix = std::vector<FpVector>;

namespace detail {

inline int inv_mod(int a, int p) { return FpScalar(a, p).inverse().value(); }

/// Reduced row echelon form in place; drops zero rows.
inline void rref_mod(FpMatrix& rows, int n, int p) {
    std::size_t r = 0;
    for (int c = 0; c < n && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        const int inv = inv_mod(rows[r][c], p);
        for (auto& v : rows[r]) v = v * inv % p;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const int f = rows[i][c];
            for (int k = 0; k < n; ++k) rows[i][k] = ((rows[i][k] - f * rows[r][k]) % p + p) % p;
        }
        ++r;
    }
    rows.resize(r);
}

}  // namespace detail

/// Subspace of (F_p)^n identified by its reduced row echelon basis. Two
/// subspaces are equal iff their RREF matrices coincide.
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(int n, int p) {
        require_prime(p);
        return Subspace(n, p, {});
    }

    static Subspace full(int n, int p) {
        FpMatrix id(n, FpVector(n, 0));
        for (int i = 0; i < n; ++i) id[i][i] = 1;
        return span(n, p, id);
    }

    /// Row space of `rows`; entries are reduced mod p first.
    static Subspace span(int n, int p, FpMatrix rows) {
        require_prime(p);
        for (auto& r : rows) {
            if (static_cast<int>(r.size()) != n) throw std::invalid_argument("Subspace: row length differs from n");
            for (auto& v : r) v = ((v % p) + p) % p;
        }
        detail::rref_mod(rows, n, p);
        return Subspace(n, p, std::move(rows));
    }

    int ambient_dim() const { return n_; }
    int modulus() const { return p_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const FpMatrix& rows() const { return rows_; }

    std::vector<int> pivot_columns() const {
        std::vector<int> piv;
        for (const auto& r : rows_) {
            piv.push_back(static_cast<int>(std::find_if(r.begin(), r.end(), [](int v) { return v != 0; }) - r.begin()));
        }
        return piv;
    }

    bool contains(const FpVector& v) const {
        FpMatrix m = rows_;
        m.push_back(v);
        for (auto& x : m.back()) x = ((x % p_) + p_) % p_;
        detail::rref_mod(m, n_, p_);
        return static_cast<int>(m.size()) == dim();
    }

    bool contains(const Subspace& other) const {
        return std::all_of(other.rows_.begin(), other.rows_.end(), [this](const FpVector& v) { return contains(v); });
    }

    /// Coordinates of v (which must lie in this subspace) in the RREF basis:
    /// these are simply the entries of v at the pivot columns.
    FpVector coordinates(const FpVector& v) const {
        FpVector out;
        for (int c : pivot_columns()) out.push_back(v.at(c));
        return out;
    }

    /// "1,0,1;0,1,1"; the zero subspace prints as "0".
    std::string str() const {
        if (rows_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i) s += ';';
            for (int k = 0; k < n_; ++k) {
                if (k) s += ',';
                s += std::to_string(rows_[i][k]);
            }
        }
        return s;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.n_ == b.n_ && a.p_ == b.p_ && a.rows_ == b.rows_;
    }
    /// Orders by dimension, then lexicographically on RREF entries.
    friend bool operator<(const Subspace& a, const Subspace& b) {
        if (a.p_ != b.p_) return a.p_ < b.p_;
        if (a.n_ != b.n_) return a.n_ < b.n_;
        if (a.rows_.size() != b.rows_.size()) return a.rows_.size() < b.rows_.size();
        return a.rows_ < b.rows_;
    }

private:
    Subspace(int n, int p, FpMatrix rows) : n_(n), p_(p), rows_(std::move(rows)) {}

    int n_ = 0;
    int p_ = 2;
    FpMatrix rows_;
};

inline Subspace rref(int n, int p, const FpMatrix& rows) { return Subspace::span(n, p, rows); }

inline void require_compatible(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim() || a.modulus() != b.modulus()) {
        throw std::invalid_argument("subspaces live in different ambient spaces");
    }
}

inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    require_compatible(a, b);
    FpMatrix rows = a.rows();
    rows.insert(rows.end(), b.rows().begin(), b.rows().end());
    return Subspace::span(a.ambient_dim(), a.modulus(), std::move(rows));
}

/// All d-dimensional subspaces of (F_p)^n, optionally only those containing
/// `above`, sorted lexicographically on RREF entries.
inline std::vector<Subspace> enumerate_subspaces(int n, int p, int d,
                                                 const std::optional<Subspace>& above = std::nullopt) {
    require_prime(p);
    if (d < 0 || d > n) throw std::invalid_argument("enumerate_subspaces: dimension out of range");
    if (above && (above->ambient_dim() != n || above->modulus() != p)) {
        throw std::invalid_argument("enumerate_subspaces: 'above' lives in a different space");
    }
    std::vector<Subspace> out;
    if (above && above->dim() > d) return out;

    // Walk every pivot pattern; the free entries of each row are the
    // non-pivot columns to the right of its pivot.
    std::vector<int> piv(d);
    auto visit_pattern = [&](const std::vector<int>& pivots) {
        std::vector<std::pair<int, int>> free;
        std::vector<bool> is_piv(n, false);
        for (int c : pivots) is_piv[c] = true;
        for (int r = 0; r < d; ++r) {
            for (int c = pivots[r] + 1; c < n; ++c) {
                if (!is_piv[c]) free.emplace_back(r, c);
            }
        }
        std::vector<int> digits(free.size(), 0);
        for (;;) {
            FpMatrix m(d, FpVector(n, 0));
            for (int r = 0; r < d; ++r) m[r][pivots[r]] = 1;
            for (std::size_t k = 0; k < free.size(); ++k) m[free[k].first][free[k].second] = digits[k];
            Subspace s = Subspace::span(n, p, m);
            if (!above || s.contains(*above)) out.push_back(std::move(s));
            std::size_t k = 0;
            while (k < digits.size() && ++digits[k] == p) digits[k++] = 0;
            if (k == digits.size()) break;
        }
    };
    // Combinations of pivot columns.
    std::vector<int> comb(d);
    for (int i = 0; i < d; ++i) comb[i] = i;
    for (;;) {
        visit_pattern(comb);
        int i = d - 1;
        while (i >= 0 && comb[i] == n - d + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int k = i + 1; k < d; ++k) comb[k] = comb[k - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Partial flag A_1 < A_2 < ... < A_l with dim A_i = i.
class FlagChain {
public:
    FlagChain(int n, int p) : n_(n), p_(p) { require_prime(p); }
    FlagChain(int n, int p, std::vector<Subspace> chain) : n_(n), p_(p), chain_(std::move(chain)) {
        require_prime(p);
        for (std::size_t i = 0; i < chain_.size(); ++i) {
            const auto& a = chain_[i];
            if (a.ambient_dim() != n_ || a.modulus() != p_) throw std::invalid_argument("FlagChain: member in wrong space");
            if (a.dim() != static_cast<int>(i) + 1) throw std::invalid_argument("FlagChain: member " + std::to_string(i + 1) + " has wrong dimension");
            if (i > 0 && !a.contains(chain_[i - 1])) throw std::invalid_argument("FlagChain: chain is not nested");
        }
    }

    int ambient_dim() const { return n_; }
    int modulus() const { return p_; }
    int length() const { return static_cast<int>(chain_.size()); }
    const std::vector<Subspace>& chain() const { return chain_; }
    const Subspace& operator[](std::size_t i) const { return chain_.at(i); }

    /// Subspaces joined by '|'; the empty flag prints as "()".
    std::string str() const {
        if (chain_.empty()) return "()";
        std::string s;
        for (std::size_t i = 0; i < chain_.size(); ++i) {
            if (i) s += '|';
            s += chain_[i].str();
        }
        return s;
    }

    friend bool operator==(const FlagChain& a, const FlagChain& b) {
        return a.n_ == b.n_ && a.p_ == b.p_ && a.chain_ == b.chain_;
    }
    /// Stratified: by length, then lexicographically member by member.
    friend bool operator<(const FlagChain& a, const FlagChain& b) {
        if (a.chain_.size() != b.chain_.size()) return a.chain_.size() < b.chain_.size();
        return a.chain_ < b.chain_;
    }

private:
    int n_;
    int p_;
    std::vector<Subspace> chain_;
};

namespace detail {

inline void extend_flags(int n, int p, int length, const std::optional<Subspace>& through, std::vector<Subspace>& prefix,
                         std::vector<FlagChain>& out) {
    const int i = static_cast<int>(prefix.size());
    if (i == length) {
        out.emplace_back(n, p, prefix);
        return;
    }
    const int d = i + 1;
    std::vector<Subspace> candidates;
    if (through && d == through->dim()) {
        if (prefix.empty() || through->contains(prefix.back())) candidates.push_back(*through);
    } else {
        candidates = enumerate_subspaces(n, p, d, prefix.empty() ? std::nullopt : std::optional<Subspace>(prefix.back()));
        if (through && d < through->dim()) {
            std::erase_if(candidates, [&](const Subspace& s) { return !through->contains(s); });
        }
    }
    for (auto& c : candidates) {
        prefix.push_back(std::move(c));
        extend_flags(n, p, length, through, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace detail

/// All flags of the given length. With `through = U` (dim U <= length) only
/// the flags whose dim(U)-th member is U are returned.
inline std::vector<FlagChain> enumerate_flags(int n, int p, int length,
                                              const std::optional<Subspace>& through = std::nullopt) {
    require_prime(p);
    if (length < 0 || length > n) throw std::invalid_argument("enumerate_flags: length out of range");
    std::vector<FlagChain> out;
    if (through && (through->dim() > length || through->ambient_dim() != n || through->modulus() != p)) return out;
    if (through && through->dim() == 0) {
        std::vector<Subspace> prefix;
        detail::extend_flags(n, p, length, std::nullopt, prefix, out);
    } else {
        std::vector<Subspace> prefix;
        detail::extend_flags(n, p, length, through, prefix, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Chains (W_1 < ... < W_m) of subspaces containing U with dim W_i = dim U + i:
/// the flags of V/U, represented inside V.
inline std::vector<std::vector<Subspace>> enumerate_flags_above(const Subspace& base, int length) {
    const int n = base.ambient_dim();
    const int p = base.modulus();
    if (length < 0 || base.dim() + length > n) throw std::invalid_argument("enumerate_flags_above: length out of range");
    std::vector<std::vector<Subspace>> out;
    std::vector<Subspace> prefix;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(prefix.size()) == length) {
            out.push_back(prefix);
            return;
        }
        const Subspace& below = prefix.empty() ? base : prefix.back();
        for (auto& s : enumerate_subspaces(n, p, below.dim() + 1, below)) {
            prefix.push_back(std::move(s));
            self(self);
            prefix.pop_back();
        }
    };
    rec(rec);
    return out;
}

inline int rank_mod(FpMatrix m, int n, int p) {
    detail::rref_mod(m, n, p);
    return static_cast<int>(m.size());
}

inline bool is_invertible_mod(const FpMatrix& g, int p) {
    const int n = static_cast<int>(g.size());
    for (const auto& r : g) {
        if (static_cast<int>(r.size()) != n) return false;
    }
    return rank_mod(g, n, p) == n;
}

/// Determinant mod p by elimination.
inline int det_mod(FpMatrix m, int p) {
    const int n = static_cast<int>(m.size());
    long long det = 1;
    for (int c = 0; c < n; ++c) {
        int piv = c;
        while (piv < n && m[piv][c] % p == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = p - det;
        }
        det = det * (((m[c][c] % p) + p) % p) % p;
        const int inv = detail::inv_mod(((m[c][c] % p) + p) % p, p);
        for (int r = c + 1; r < n; ++r) {
            const long long f = static_cast<long long>(((m[r][c] % p) + p) % p) * inv % p;
            for (int k = c; k < n; ++k) m[r][k] = static_cast<int>(((m[r][k] - f * m[c][k]) % p + p) % p);
        }
    }
    return static_cast<int>(det % p);
}

/// Deterministic invertible n x n matrix over F_p. Uses raw mt19937_64 output
/// (fully specified by the standard) so the result is portable.
inline FpMatrix random_invertible(int n, int p, std::uint64_t seed) {
    require_prime(p);
    std::mt19937_64 gen(seed);
    for (;;) {
        FpMatrix g(n, FpVector(n));
        for (auto& r : g) {
            for (auto& v : r) v = static_cast<int>(gen() % static_cast<std::uint64_t>(p));
        }
        if (is_invertible_mod(g, p)) return g;
    }
}

/// g applied to the column vector v.
inline FpVector apply_matrix(const FpMatrix& g, const FpVector& v, int p) {
    FpVector out(g.size(), 0);
    for (std::size_t i = 0; i < g.size(); ++i) {
        long long s = 0;
        for (std::size_t k = 0; k < v.size(); ++k) s += static_cast<long long>(g[i][k]) * v[k];
        out[i] = static_cast<int>(((s % p) + p) % p);
    }
    return out;
}

inline Subspace image(const FpMatrix& g, const Subspace& a) {
    FpMatrix rows;
    for (const auto& r : a.rows()) rows.push_back(apply_matrix(g, r, a.modulus()));
    return Subspace::span(a.ambient_dim(), a.modulus(), std::move(rows));
}

/// All vectors of (F_p)^n in lexicographic order.
inline std::vector<FpVector> all_vectors(int n, int p) {
    std::vector<FpVector> out;
    FpVector v(n, 0);
    for (;;) {
        out.push_back(v);
        int k = n - 1;
        while (k >= 0 && ++v[k] == p) v[k--] = 0;
        if (k < 0) break;
    }
    return out;
}

}  // namespace lrbq
