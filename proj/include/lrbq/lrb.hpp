#pragma once

#include <json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrbq/fqlinalg.hpp"

namespace lrbq {

/// Word over {1..n} without repeated letters: an element of the free
/// left-regular band on n letters.
class InjWord {
public:
    explicit InjWord(int n) : n_(n) {}
    InjWord(int n, std::vector<int> letters) : n_(n), letters_(std::move(letters)) {
        std::vector<bool> seen(n_ + 1, false);
        for (int a : letters_) {
            if (a < 1 || a > n_) throw std::invalid_argument("InjWord: letter " + std::to_string(a) + " outside 1.." + std::to_string(n_));
            if (seen[a]) throw std::invalid_argument("InjWord: repeated letter " + std::to_string(a));
            seen[a] = true;
        }
    }

    int ambient() const { return n_; }
    int length() const { return static_cast<int>(letters_.size()); }
    const std::vector<int>& letters() const { return letters_; }
    int operator[](std::size_t i) const { return letters_.at(i); }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < letters_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(letters_[i]);
        }
        return s + ")";
    }

    friend bool operator==(const InjWord& a, const InjWord& b) = default;
    /// By length, then lexicographically.
    friend bool operator<(const InjWord& a, const InjWord& b) {
        if (a.letters_.size() != b.letters_.size()) return a.letters_.size() < b.letters_.size();
        return a.letters_ < b.letters_;
    }

private:
    int n_;
    std::vector<int> letters_;
};

/// Concatenate, then drop every letter already seen further left.
inline InjWord mul_word(const InjWord& a, const InjWord& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("mul_word: ambient sizes differ");
    std::vector<bool> seen(a.ambient() + 1, false);
    std::vector<int> out;
    for (const auto* w : {&a, &b}) {
        for (int x : w->letters()) {
            if (!seen[x]) {
                seen[x] = true;
                out.push_back(x);
            }
        }
    }
    return InjWord(a.ambient(), std::move(out));
}

inline InjWord operator*(const InjWord& a, const InjWord& b) { return mul_word(a, b); }

/// Product of nested chains: (A_1..A_l, A_l+B_1, ..., A_l+B_m) with repeated
/// members removed. Works for chains sitting above any common base.
inline std::vector<Subspace> mul_chain(const std::vector<Subspace>& a, const std::vector<Subspace>& b) {
    std::vector<Subspace> out = a;
    for (const auto& s : b) {
        Subspace next = out.empty() ? s : subspace_sum(out.back(), s);
        if (out.empty() || !(next == out.back())) out.push_back(std::move(next));
    }
    return out;
}

inline FlagChain mul_flag(const FlagChain& a, const FlagChain& b) {
    if (a.ambient_dim() != b.ambient_dim() || a.modulus() != b.modulus()) {
        throw std::invalid_argument("mul_flag: flags live in different spaces");
    }
    return FlagChain(a.ambient_dim(), a.modulus(), mul_chain(a.chain(), b.chain()));
}

inline FlagChain operator*(const FlagChain& a, const FlagChain& b) { return mul_flag(a, b); }

/// One-line permutation g (g[i-1] = image of i) applied letterwise.
inline InjWord act_perm(const std::vector<int>& g, const InjWord& a) {
    if (static_cast<int>(g.size()) != a.ambient()) throw std::invalid_argument("act_perm: permutation size mismatch");
    std::vector<int> sorted = g;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < a.ambient(); ++i) {
        if (sorted[i] != i + 1) throw std::invalid_argument("act_perm: not a permutation");
    }
    std::vector<int> out;
    for (int x : a.letters()) out.push_back(g[x - 1]);
    return InjWord(a.ambient(), std::move(out));
}

inline FlagChain act_gl(const FpMatrix& g, const FlagChain& a) {
    if (static_cast<int>(g.size()) != a.ambient_dim()) throw std::invalid_argument("act_gl: matrix size mismatch");
    if (!is_invertible_mod(g, a.modulus())) throw std::invalid_argument("act_gl: matrix is singular");
    std::vector<Subspace> out;
    for (const auto& s : a.chain()) out.push_back(image(g, s));
    return FlagChain(a.ambient_dim(), a.modulus(), std::move(out));
}

/// All elements of the free LRB on n letters, by length then lexicographically.
inline std::vector<InjWord> enumerate_monoid(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_monoid: negative n");
    std::vector<InjWord> out{InjWord(n)};
    std::vector<std::vector<int>> frontier{{}};
    for (int len = 1; len <= n; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& w : frontier) {
            for (int a = 1; a <= n; ++a) {
                if (std::find(w.begin(), w.end(), a) != w.end()) continue;
                auto v = w;
                v.push_back(a);
                next.push_back(std::move(v));
            }
        }
        std::sort(next.begin(), next.end());
        for (const auto& w : next) out.emplace_back(n, w);
        frontier = std::move(next);
    }
    return out;
}

/// All partial flags in (F_p)^n, by length then lexicographically on RREF entries.
inline std::vector<FlagChain> enumerate_monoid_q(int n, int p) {
    std::vector<FlagChain> out;
    for (int len = 0; len <= n; ++len) {
        auto stratum = enumerate_flags(n, p, len);
        out.insert(out.end(), std::make_move_iterator(stratum.begin()), std::make_move_iterator(stratum.end()));
    }
    return out;
}

/// Elements of a finite LRB with dense indices assigned in stratified order.
template <class Element>
class MonoidBasis {
public:
    MonoidBasis(int n, std::vector<Element> elements) : n_(n), elements_(std::move(elements)) {
        strata_.assign(n_ + 2, 0);
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            const int len = elements_[i].length();
            if (i > 0 && elements_[i - 1].length() > len) throw std::invalid_argument("MonoidBasis: elements not stratified");
            if (!index_.emplace(elements_[i], i).second) throw std::invalid_argument("MonoidBasis: duplicate element");
            strata_[len + 1] = i + 1;
        }
        for (int l = 1; l <= n_ + 1; ++l) strata_[l] = std::max(strata_[l], strata_[l - 1]);
    }

    int n() const { return n_; }
    std::size_t size() const { return elements_.size(); }
    const Element& operator[](std::size_t i) const { return elements_.at(i); }
    const std::vector<Element>& elements() const { return elements_; }

    std::size_t index_of(const Element& e) const {
        auto it = index_.find(e);
        if (it == index_.end()) throw std::out_of_range("MonoidBasis: element not in basis: " + e.str());
        return it->second;
    }

    /// Index range [begin, end) of the length-l stratum.
    std::size_t stratum_begin(int l) const { return strata_.at(l); }
    std::size_t stratum_end(int l) const { return strata_.at(l + 1); }
    std::size_t stratum_size(int l) const { return stratum_end(l) - stratum_begin(l); }

    std::size_t multiply(std::size_t a, std::size_t b) const { return index_of(elements_[a] * elements_[b]); }

private:
    int n_;
    std::vector<Element> elements_;
    std::map<Element, std::size_t> index_;
    std::vector<std::size_t> strata_;
};

using WordMonoid = MonoidBasis<InjWord>;
using FlagMonoid = MonoidBasis<FlagChain>;

inline WordMonoid make_word_monoid(int n) { return WordMonoid(n, enumerate_monoid(n)); }
inline FlagMonoid make_flag_monoid(int n, int p) { return FlagMonoid(n, enumerate_monoid_q(n, p)); }

/// {n, q?, strata: [{length, elements: [...]}]}
template <class Element>
nlohmann::json monoid_to_json(const MonoidBasis<Element>& m, int q = 0) {
    nlohmann::json j;
    j["n"] = m.n();
    if (q) j["q"] = q;
    nlohmann::json strata = nlohmann::json::array();
    for (int l = 0; l <= m.n(); ++l) {
        nlohmann::json elems = nlohmann::json::array();
        for (std::size_t i = m.stratum_begin(l); i < m.stratum_end(l); ++i) elems.push_back(m[i].str());
        strata.push_back({{"length", l}, {"elements", elems}});
    }
    j["strata"] = strata;
    return j;
}

}  // namespace lrbq
