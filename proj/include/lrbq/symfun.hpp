#pragma once

#include <json.hpp>

#include <algorithm>
#include <compare>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrbq/qnums.hpp"
#include "lrbq/rational.hpp"

namespace lrbq {

class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
            if (i && parts_[i] > parts_[i - 1]) throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    /// Sorts and drops zeros first.
    static Partition from_unsorted(std::vector<int> parts) {
        std::erase(parts, 0);
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int length() const { return static_cast<int>(parts_.size()); }
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    /// Number of parts equal to 1.
    int ones() const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), 1)); }

    Partition conjugate() const {
        std::vector<int> c;
        for (int k = 1; !parts_.empty() && k <= parts_[0]; ++k) {
            c.push_back(static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [k](int p) { return p >= k; })));
        }
        return Partition(std::move(c));
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Partitions of n in decreasing lexicographic order: (n), (n-1,1), ..., (1^n).
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int cap) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int k = std::min(rest, cap); k >= 1; --k) {
            cur.push_back(k);
            self(self, rest - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

/// Number of SYT of shape lambda, by the hook length formula.
inline long long syt_count(const Partition& lambda) {
    const auto conj = lambda.conjugate();
    long long num = factorial(lambda.size());
    long long den = 1;
    for (int i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < lambda[i]; ++j) den *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
    }
    return num / den;
}

/// Integer combination of Schur functions s_lambda, all of one degree.
class SchurVector {
public:
    SchurVector() = default;
    explicit SchurVector(int grade) : grade_(grade) {}
    static SchurVector schur(const Partition& lambda, long long c = 1) {
        SchurVector v(lambda.size());
        v.add(lambda, c);
        return v;
    }

    int grade() const { return grade_; }
    const std::map<Partition, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long long coeff(const Partition& lambda) const {
        auto it = terms_.find(lambda);
        return it == terms_.end() ? 0 : it->second;
    }

    void add(const Partition& lambda, long long c) {
        if (lambda.size() != grade_) throw std::invalid_argument("SchurVector: partition " + lambda.str() + " has wrong size");
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(lambda, c);
        if (!fresh) {
            it->second = checked_add(it->second, c);
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Sum of coefficient times the irreducible dimension.
    long long dimension() const {
        long long d = 0;
        for (const auto& [lambda, c] : terms_) d = checked_add(d, checked_mul(c, syt_count(lambda)));
        return d;
    }

    /// "s(2)+2*s(1,1)-s(1,1,1)", terms in decreasing lexicographic order; "0" if empty.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const long long c = it->second;
            if (c < 0) s += '-';
            else if (!s.empty()) s += '+';
            if (c != 1 && c != -1) s += std::to_string(c < 0 ? -c : c) + "*";
            s += "s" + it->first.str();
        }
        return s;
    }

    /// [{"partition": [2,1], "coeff": 1}, ...] in the same order as str().
    nlohmann::json to_json() const {
        nlohmann::json a = nlohmann::json::array();
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            a.push_back({{"partition", it->first.parts()}, {"coeff", it->second}});
        }
        return a;
    }

    SchurVector& operator+=(const SchurVector& o) {
        check_grade(o);
        for (const auto& [lambda, c] : o.terms_) add(lambda, c);
        return *this;
    }
    SchurVector& operator-=(const SchurVector& o) {
        check_grade(o);
        for (const auto& [lambda, c] : o.terms_) add(lambda, checked_mul(-1, c));
        return *this;
    }
    friend SchurVector operator+(SchurVector a, const SchurVector& b) { return a += b; }
    friend SchurVector operator-(SchurVector a, const SchurVector& b) { return a -= b; }
    friend SchurVector operator*(long long k, const SchurVector& a) {
        SchurVector out(a.grade_);
        for (const auto& [lambda, c] : a.terms_) out.add(lambda, checked_mul(k, c));
        return out;
    }
    friend bool operator==(const SchurVector& a, const SchurVector& b) {
        return a.grade_ == b.grade_ && a.terms_ == b.terms_;
    }

private:
    void check_grade(const SchurVector& o) const {
        if (o.grade_ != grade_) throw std::invalid_argument("SchurVector: grades differ");
    }

    int grade_ = 0;
    std::map<Partition, long long> terms_;
};

/// Multiplication by h_m via the Pieri rule (horizontal strips of size m).
inline SchurVector pieri_h(const SchurVector& f, int m) {
    if (m < 0) throw std::invalid_argument("pieri_h: negative degree");
    SchurVector out(f.grade() + m);
    for (const auto& [lambda, c] : f.terms()) {
        const int len = lambda.length();
        std::vector<int> mu(len + 1, 0);
        auto rec = [&](auto&& self, int i, int rest) -> void {
            if (i == len + 1) {
                if (rest == 0) out.add(Partition::from_unsorted(mu), c);
                return;
            }
            const int lo = lambda[i];
            const int hi = i == 0 ? lo + rest : std::min(lambda[i - 1], lo + rest);
            for (int v = lo; v <= hi; ++v) {
                mu[i] = v;
                self(self, i + 1, rest - (v - lo));
            }
        };
        rec(rec, 0, m);
    }
    return out;
}

inline SchurVector schur_one() { return SchurVector::schur(Partition{}); }

/// e_k = s_(1^k).
inline SchurVector e_in_schur(int k) {
    if (k < 0) throw std::invalid_argument("e_in_schur: negative degree");
    return SchurVector::schur(Partition(std::vector<int>(k, 1)));
}

inline SchurVector h_in_schur(int k) { return pieri_h(schur_one(), k); }

/// f * h_1^k.
inline SchurVector times_h1_power(SchurVector f, int k) {
    for (int i = 0; i < k; ++i) f = pieri_h(f, 1);
    return f;
}

// ---------------------------------------------------------------- tableaux

/// Standard Young tableau stored by rows.
class SYT {
public:
    SYT() = default;
    explicit SYT(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
        std::vector<int> shape;
        int n = 0;
        for (const auto& r : rows_) {
            if (r.empty()) throw std::invalid_argument("SYT: empty row");
            shape.push_back(static_cast<int>(r.size()));
            n += static_cast<int>(r.size());
        }
        shape_ = Partition(shape);
        std::vector<bool> seen(n + 1, false);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            for (std::size_t j = 0; j < rows_[i].size(); ++j) {
                const int v = rows_[i][j];
                if (v < 1 || v > n || seen[v]) throw std::invalid_argument("SYT: entries must be 1..n once each");
                seen[v] = true;
                if (j && rows_[i][j - 1] >= v) throw std::invalid_argument("SYT: rows must increase");
                if (i && rows_[i - 1][j] >= v) throw std::invalid_argument("SYT: columns must increase");
            }
        }
    }

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int size() const { return shape_.size(); }

    /// Row index of entry v.
    int row_of(int v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (std::find(rows_[i].begin(), rows_[i].end(), v) != rows_[i].end()) return static_cast<int>(i);
        }
        throw std::out_of_range("SYT: entry not present");
    }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i) s += '/';
            for (std::size_t j = 0; j < rows_[i].size(); ++j) {
                if (j) s += ',';
                s += std::to_string(rows_[i][j]);
            }
        }
        return s.empty() ? "()" : s;
    }

    friend bool operator==(const SYT&, const SYT&) = default;
    friend auto operator<=>(const SYT& a, const SYT& b) { return a.rows_ <=> b.rows_; }

private:
    std::vector<std::vector<int>> rows_;
    Partition shape_;
};

/// All SYT of the given shape, sorted.
inline std::vector<SYT> standard_tableaux(const Partition& lambda) {
    std::vector<SYT> out;
    std::vector<std::vector<int>> rows(lambda.length());
    const int n = lambda.size();
    auto rec = [&](auto&& self, int v) -> void {
        if (v > n) {
            out.emplace_back(rows);
            return;
        }
        for (int i = 0; i < lambda.length(); ++i) {
            const auto len = static_cast<int>(rows[i].size());
            if (len < lambda[i] && (i == 0 || static_cast<int>(rows[i - 1].size()) > len)) {
                rows[i].push_back(v);
                self(self, v + 1);
                rows[i].pop_back();
            }
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<SYT> standard_tableaux(int n) {
    std::vector<SYT> out;
    for (const auto& lambda : partitions_of(n)) {
        auto t = standard_tableaux(lambda);
        out.insert(out.end(), t.begin(), t.end());
    }
    return out;
}

using DescentSet = std::set<int>;

inline void require_permutation(const std::vector<int>& w) {
    std::vector<int> s = w;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != static_cast<int>(i) + 1) throw std::invalid_argument("not a permutation in one-line notation");
    }
}

/// {i : w_i > w_{i+1}}.
inline DescentSet descent_set(const std::vector<int>& w) {
    require_permutation(w);
    DescentSet d;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] > w[i + 1]) d.insert(static_cast<int>(i) + 1);
    }
    return d;
}

/// {i : i+1 sits in a strictly lower row than i}.
inline DescentSet descent_set(const SYT& t) {
    DescentSet d;
    for (int i = 1; i < t.size(); ++i) {
        if (t.row_of(i + 1) > t.row_of(i)) d.insert(i);
    }
    return d;
}

/// Smallest element of {1..n} outside d (n itself if d = {1..n-1}).
inline int first_non_descent(const DescentSet& d, int n) {
    int i = 1;
    while (i < n && d.count(i)) ++i;
    return i;
}

inline bool is_desarrangement(const std::vector<int>& w) {
    if (w.empty()) return true;
    return first_non_descent(descent_set(w), static_cast<int>(w.size())) % 2 == 0;
}

inline bool is_derangement(const std::vector<int>& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == static_cast<int>(i) + 1) return false;
    }
    return true;
}

inline std::vector<SYT> desarrangement_tableaux(int n) {
    if (n == 0) return {SYT()};
    std::vector<SYT> out;
    for (const auto& t : standard_tableaux(n)) {
        if (first_non_descent(descent_set(t), n) % 2 == 0) out.push_back(t);
    }
    return out;
}

struct RSKPair {
    SYT P;
    SYT Q;
};

/// Row insertion.
inline RSKPair rsk(const std::vector<int>& w) {
    require_permutation(w);
    std::vector<std::vector<int>> P, Q;
    for (std::size_t k = 0; k < w.size(); ++k) {
        int x = w[k];
        std::size_t r = 0;
        for (;; ++r) {
            if (r == P.size()) {
                P.push_back({x});
                Q.push_back({static_cast<int>(k) + 1});
                break;
            }
            auto it = std::upper_bound(P[r].begin(), P[r].end(), x);
            if (it == P[r].end()) {
                P[r].push_back(x);
                Q[r].push_back(static_cast<int>(k) + 1);
                break;
            }
            std::swap(x, *it);
        }
    }
    return {SYT(P), SYT(Q)};
}

/// All permutations of 1..n in lexicographic order.
inline std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<std::vector<int>> out;
    do out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

inline std::vector<int> inverse_permutation(const std::vector<int>& w) {
    require_permutation(w);
    std::vector<int> inv(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) inv[w[i] - 1] = static_cast<int>(i) + 1;
    return inv;
}

inline Partition cycle_type(const std::vector<int>& w) {
    require_permutation(w);
    std::vector<bool> seen(w.size(), false);
    std::vector<int> parts;
    for (std::size_t i = 0; i < w.size(); ++i) {
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = w[j] - 1) {
            seen[j] = true;
            ++len;
        }
        if (len) parts.push_back(len);
    }
    return Partition::from_unsorted(std::move(parts));
}

/// One permutation of cycle type mu: consecutive blocks, each block k..m sent to
/// the cycle k -> k+1 -> ... -> m -> k. Type (2,1) gives (2,1,3).
inline std::vector<int> representative_permutation(const Partition& mu) {
    std::vector<int> w;
    int start = 1;
    for (int len : mu.parts()) {
        for (int i = 0; i < len; ++i) w.push_back(i + 1 < len ? start + i + 1 : start);
        start += len;
    }
    return w;
}

// ----------------------------------------------------------- quasisymmetric

/// Integer combination of fundamentals L_{n,D}, D a subset of {1..n-1}.
class QSymVector {
public:
    explicit QSymVector(int grade = 0) : grade_(grade) {}

    int grade() const { return grade_; }
    const std::map<DescentSet, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long long coeff(const DescentSet& d) const {
        auto it = terms_.find(d);
        return it == terms_.end() ? 0 : it->second;
    }

    void add(const DescentSet& d, long long c) {
        for (int i : d) {
            if (i < 1 || i >= grade_) throw std::invalid_argument("QSymVector: descent outside 1..n-1");
        }
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(d, c);
        if (!fresh) {
            it->second = checked_add(it->second, c);
            if (it->second == 0) terms_.erase(it);
        }
    }

    QSymVector& operator+=(const QSymVector& o) {
        if (o.grade_ != grade_) throw std::invalid_argument("QSymVector: grades differ");
        for (const auto& [d, c] : o.terms_) add(d, c);
        return *this;
    }
    friend QSymVector operator+(QSymVector a, const QSymVector& b) { return a += b; }
    friend bool operator==(const QSymVector& a, const QSymVector& b) {
        return a.grade_ == b.grade_ && a.terms_ == b.terms_;
    }

    /// "L{1}+2*L{2}" (grade implied), "0" if empty.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [d, c] : terms_) {
            if (c < 0) s += '-';
            else if (!s.empty()) s += '+';
            if (c != 1 && c != -1) s += std::to_string(c < 0 ? -c : c) + "*";
            s += "L{";
            bool first = true;
            for (int i : d) {
                if (!first) s += ',';
                s += std::to_string(i);
                first = false;
            }
            s += "}";
        }
        return s;
    }

private:
    int grade_;
    std::map<DescentSet, long long> terms_;
};

inline QSymVector schur_to_fundamental(const Partition& lambda) {
    QSymVector out(lambda.size());
    for (const auto& t : standard_tableaux(lambda)) out.add(descent_set(t), 1);
    return out;
}

inline QSymVector schur_to_fundamental(const SchurVector& f) {
    QSymVector out(f.grade());
    for (const auto& [lambda, c] : f.terms()) {
        for (const auto& t : standard_tableaux(lambda)) out.add(descent_set(t), c);
    }
    return out;
}

inline constexpr int kPermutationGuard = 8;

inline void require_permutation_guard(int n, const char* what) {
    if (n < 0 || n > kPermutationGuard) {
        throw std::invalid_argument(std::string(what) + ": refused, n must be at most " + std::to_string(kPermutationGuard));
    }
}

/// Sum of L_{n,Des(w)} over permutations of cycle type lambda.
inline QSymVector gessel_reutenauer(const Partition& lambda) {
    const int n = lambda.size();
    require_permutation_guard(n, "gessel_reutenauer");
    QSymVector out(n);
    for (const auto& w : all_permutations(n)) {
        if (cycle_type(w) == lambda) out.add(descent_set(w), 1);
    }
    return out;
}

// ------------------------------------------------- derangement functions

/// The derangement symmetric function by definition A (h_1 recursion),
/// B (alternating e_k h_1^(n-k) sum), C (inverting h_1^n = sum d_j h_(n-j)) or
/// D (desarrangement tableaux).
inline SchurVector derangement_sf(int n, char definition) {
    if (n < 0) throw std::invalid_argument("derangement_sf: negative n");
    switch (definition) {
        case 'A': {
            SchurVector d = schur_one();
            for (int m = 1; m <= n; ++m) {
                d = pieri_h(d, 1);
                SchurVector e = e_in_schur(m);
                d = (m % 2 == 0) ? d + e : d - e;
            }
            return d;
        }
        case 'B': {
            SchurVector d(n);
            for (int k = 0; k <= n; ++k) {
                SchurVector term = times_h1_power(e_in_schur(k), n - k);
                d = (k % 2 == 0) ? d + term : d - term;
            }
            return d;
        }
        case 'C': {
            std::vector<SchurVector> d{schur_one()};
            for (int m = 1; m <= n; ++m) {
                SchurVector v = times_h1_power(schur_one(), m);
                for (int j = 0; j < m; ++j) v -= pieri_h(d[j], m - j);
                d.push_back(v);
            }
            return d[n];
        }
        case 'D': {
            SchurVector d(n);
            for (const auto& t : desarrangement_tableaux(n)) d.add(t.shape(), 1);
            return d;
        }
        default:
            throw std::invalid_argument(std::string("derangement_sf: unknown definition '") + definition + "'");
    }
}

/// Fundamental expansion of the derangement function from D (tableaux),
/// E (desarrangements, read through inverse descent sets), F (derangements) or G (Gessel-Reutenauer functions of
/// derangement cycle types).
inline QSymVector derangement_qsym(int n, char source) {
    require_permutation_guard(n, "derangement_qsym");
    QSymVector out(n);
    switch (source) {
        case 'D':
            return schur_to_fundamental(derangement_sf(n, 'D'));
        case 'E':
            // Des(w^-1) = Des(P(w)); with Des(w) = Des(Q(w)) this pairs each
            // desarrangement tableau Q with every P of its shape.
            for (const auto& w : all_permutations(n)) {
                if (is_desarrangement(w)) out.add(descent_set(inverse_permutation(w)), 1);
            }
            return out;
        case 'F':
            for (const auto& w : all_permutations(n)) {
                if (is_derangement(w)) out.add(descent_set(w), 1);
            }
            return out;
        case 'G':
            for (const auto& lambda : partitions_of(n)) {
                if (lambda.ones() == 0) out += gessel_reutenauer(lambda);
            }
            return out;
        default:
            throw std::invalid_argument(std::string("derangement_qsym: unknown source '") + source + "'");
    }
}

// --------------------------------------------------------------- characters

/// chi^lambda(mu) by the Murnaghan-Nakayama rule on beta-sets.
inline long long mn_character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw std::invalid_argument("mn_character: partitions of different sizes");
    const int len = lambda.length();
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);
    std::map<std::pair<std::vector<int>, std::size_t>, long long> memo;
    auto rec = [&](auto&& self, std::vector<int> b, std::size_t k) -> long long {
        if (k == mu.parts().size()) return 1;
        auto key = std::make_pair(b, k);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        const int r = mu.parts()[k];
        long long total = 0;
        for (std::size_t i = 0; i < b.size(); ++i) {
            const int to = b[i] - r;
            if (to < 0 || std::find(b.begin(), b.end(), to) != b.end()) continue;
            int between = 0;
            for (int x : b) between += (x > to && x < b[i]);
            auto nb = b;
            nb[i] = to;
            std::sort(nb.begin(), nb.end(), std::greater<>());
            const long long sub = self(self, nb, k + 1);
            total += (between % 2 ? -sub : sub);
        }
        memo.emplace(std::move(key), total);
        return total;
    };
    std::sort(beta.begin(), beta.end(), std::greater<>());
    return rec(rec, beta, 0);
}

/// Centralizer order prod i^{m_i} m_i!.
inline long long z_mu(const Partition& mu) {
    std::map<int, int> mult;
    for (int p : mu.parts()) ++mult[p];
    long long z = 1;
    for (const auto& [i, m] : mult) z = checked_mul(z, checked_mul(int_pow(i, m), factorial(m)));
    return z;
}

/// One rational value per cycle type of S_n.
class ClassFunction {
public:
    explicit ClassFunction(int grade = 0) : grade_(grade) {}

    int grade() const { return grade_; }
    const std::map<Partition, Rat>& values() const { return values_; }

    void set(const Partition& mu, const Rat& v) {
        if (mu.size() != grade_) throw std::invalid_argument("ClassFunction: cycle type of wrong size");
        values_[mu] = v;
    }
    Rat at(const Partition& mu) const {
        auto it = values_.find(mu);
        return it == values_.end() ? Rat(0) : it->second;
    }

    static ClassFunction irreducible(const Partition& lambda) {
        ClassFunction f(lambda.size());
        for (const auto& mu : partitions_of(lambda.size())) f.set(mu, Rat(mn_character(lambda, mu)));
        return f;
    }

    /// {"(2,1)": "1", ...} with cycle types in decreasing lexicographic order.
    nlohmann::json to_json() const {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& mu : partitions_of(grade_)) j.push_back({{"cycle_type", mu.parts()}, {"value", at(mu).str()}});
        return j;
    }

    friend bool operator==(const ClassFunction&, const ClassFunction&) = default;

private:
    int grade_;
    std::map<Partition, Rat> values_;
};

/// <f, g> = sum_mu f(mu) g(mu) / z_mu (characters here are real).
inline Rat inner_product(const ClassFunction& f, const ClassFunction& g) {
    if (f.grade() != g.grade()) throw std::invalid_argument("inner_product: grades differ");
    Rat s(0);
    for (const auto& mu : partitions_of(f.grade())) s = s + f.at(mu) * g.at(mu) / Rat(z_mu(mu));
    return s;
}

/// Frobenius characteristic: coefficient of s_lambda is <f, chi^lambda>.
inline SchurVector classfn_to_schur(const ClassFunction& f) {
    const int n = f.grade();
    if (n < 0 || n > 7) throw std::invalid_argument("classfn_to_schur: refused, n must be at most 7");
    SchurVector out(n);
    for (const auto& lambda : partitions_of(n)) {
        const Rat c = inner_product(f, ClassFunction::irreducible(lambda));
        if (!c.is_integer()) throw std::domain_error("classfn_to_schur: not a virtual character combination");
        out.add(lambda, c.to_integer());
    }
    return out;
}

/// Character of a SchurVector, inverse of classfn_to_schur.
inline ClassFunction schur_to_classfn(const SchurVector& f) {
    ClassFunction out(f.grade());
    for (const auto& mu : partitions_of(f.grade())) {
        long long v = 0;
        for (const auto& [lambda, c] : f.terms()) v = checked_add(v, checked_mul(c, mn_character(lambda, mu)));
        out.set(mu, Rat(v));
    }
    return out;
}

}  // namespace lrbq
