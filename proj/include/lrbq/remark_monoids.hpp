#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrbq/check.hpp"
#include "lrbq/fqlinalg.hpp"
#include "lrbq/lrb.hpp"
#include "lrbq/qnums.hpp"

namespace lrbq {

/// Sequence of linearly independent vectors in (F_p)^n (Brown's first
/// q-analogue of the free LRB).
class VecSeq {
public:
    VecSeq(int n, int p) : n_(n), p_(p) { require_prime(p); }
    VecSeq(int n, int p, std::vector<FpVector> vectors) : n_(n), p_(p), v_(std::move(vectors)) {
        require_prime(p);
        for (auto& x : v_) {
            if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("VecSeq: vector of wrong length");
            for (auto& c : x) c = ((c % p_) + p_) % p_;
        }
        if (rank_mod(v_, n_, p_) != static_cast<int>(v_.size())) throw std::invalid_argument("VecSeq: vectors are dependent");
    }

    int ambient() const { return n_; }
    int modulus() const { return p_; }
    int length() const { return static_cast<int>(v_.size()); }
    const std::vector<FpVector>& vectors() const { return v_; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (i) s += ';';
            for (int k = 0; k < n_; ++k) {
                if (k) s += ',';
                s += std::to_string(v_[i][k]);
            }
        }
        return s + ")";
    }

    /// Flag of prefix spans.
    FlagChain to_flag() const {
        std::vector<Subspace> chain;
        FpMatrix prefix;
        for (const auto& x : v_) {
            prefix.push_back(x);
            chain.push_back(Subspace::span(n_, p_, prefix));
        }
        return FlagChain(n_, p_, std::move(chain));
    }

    friend bool operator==(const VecSeq& a, const VecSeq& b) = default;
    friend bool operator<(const VecSeq& a, const VecSeq& b) {
        if (a.v_.size() != b.v_.size()) return a.v_.size() < b.v_.size();
        return a.v_ < b.v_;
    }

private:
    int n_;
    int p_;
    std::vector<FpVector> v_;
};

/// Concatenate and drop every vector dependent on those kept before it.
inline VecSeq mul_vecseq(const VecSeq& a, const VecSeq& b) {
    const int n = a.ambient();
    const int p = a.modulus();
    std::vector<FpVector> out = a.vectors();
    for (const auto& v : b.vectors()) {
        auto trial = out;
        trial.push_back(v);
        if (rank_mod(trial, n, p) == static_cast<int>(trial.size())) out = std::move(trial);
    }
    return VecSeq(n, p, std::move(out));
}

inline VecSeq operator*(const VecSeq& a, const VecSeq& b) { return mul_vecseq(a, b); }

inline std::vector<VecSeq> enumerate_vecseq(int n, int p) {
    std::vector<FpVector> nonzero;
    for (auto& v : all_vectors(n, p)) {
        if (std::any_of(v.begin(), v.end(), [](int c) { return c != 0; })) nonzero.push_back(v);
    }
    std::vector<VecSeq> out{VecSeq(n, p)};
    std::vector<std::vector<FpVector>> frontier{{}};
    for (int len = 1; len <= n; ++len) {
        std::vector<std::vector<FpVector>> next;
        for (const auto& seq : frontier) {
            for (const auto& v : nonzero) {
                auto trial = seq;
                trial.push_back(v);
                if (rank_mod(trial, n, p) == len) next.push_back(std::move(trial));
            }
        }
        std::sort(next.begin(), next.end());
        for (const auto& s : next) out.emplace_back(n, p, s);
        frontier = std::move(next);
    }
    return out;
}

namespace detail {

/// Rewrites a combination of classes (`counts`: class index -> coefficient)
/// over orbit sums, where `class_len` gives each class's stratum. Returns
/// nullopt unless the combination is constant on every stratum it touches.
inline std::optional<std::vector<long long>> orbit_expansion(const std::map<std::size_t, long long>& counts,
                                                             const std::vector<int>& class_len, int max_len) {
    std::vector<std::optional<long long>> per_len(max_len + 1);
    std::vector<long long> seen_count(max_len + 1, 0);
    std::vector<long long> stratum_size(max_len + 1, 0);
    for (int len : class_len) ++stratum_size[len];
    for (const auto& [cls, c] : counts) {
        const int len = class_len[cls];
        if (per_len[len] && *per_len[len] != c) return std::nullopt;
        per_len[len] = c;
        ++seen_count[len];
    }
    std::vector<long long> out(max_len + 1, 0);
    for (int l = 0; l <= max_len; ++l) {
        if (!per_len[l]) continue;
        if (seen_count[l] != stratum_size[l]) return std::nullopt;
        out[l] = *per_len[l];
    }
    return out;
}

inline std::string coeff_list(const std::vector<long long>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

/// For a monoid given as a list of elements (stratified) and a quotient map
/// `cls`, checks gen*x_l against the expected orbit-sum coefficients.
template <class Element>
std::vector<Check> check_orbit_products(const std::string& label, const std::vector<Element>& elems,
                                        const std::vector<std::size_t>& cls, const std::vector<int>& class_len,
                                        int max_len,
                                        const std::function<std::vector<long long>(int)>& expected) {
    std::map<Element, std::size_t> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
    std::vector<std::size_t> gens;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (elems[i].length() == 1) gens.push_back(i);
    }
    // Lift of the quotient orbit sum of length l: one representative per class.
    std::vector<std::size_t> rep(class_len.size(), elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (rep[cls[i]] == elems.size()) rep[cls[i]] = i;
    }
    std::vector<Check> out;
    for (int l = 0; l <= max_len; ++l) {
        std::map<std::size_t, long long> counts;
        for (std::size_t c = 0; c < class_len.size(); ++c) {
            if (class_len[c] != l) continue;
            for (std::size_t g : gens) ++counts[cls[index.at(elems[g] * elems[rep[c]])]];
        }
        auto got = orbit_expansion(counts, class_len, max_len);
        const auto want = expected(l);
        Check ch{label + " l=" + std::to_string(l), got && *got == want, coeff_list(want),
                 got ? coeff_list(*got) : "not in orbit-sum span"};
        out.push_back(std::move(ch));
    }
    return out;
}

template <class Element>
Check check_congruence(const std::string& label, const std::vector<Element>& elems, const std::vector<std::size_t>& cls,
                       std::uint64_t seed) {
    std::map<Element, std::size_t> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
    std::vector<std::size_t> rep(elems.size(), elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (rep[cls[i]] == elems.size()) rep[cls[i]] = i;
    }
    auto test = [&](std::size_t a, std::size_t b) {
        return cls[index.at(elems[a] * elems[b])] == cls[index.at(elems[rep[cls[a]]] * elems[rep[cls[b]]])];
    };
    bool ok = true;
    if (elems.size() <= 500) {
        for (std::size_t a = 0; a < elems.size() && ok; ++a) {
            for (std::size_t b = 0; b < elems.size() && ok; ++b) ok = test(a, b);
        }
    } else {
        std::mt19937_64 gen(seed);
        for (int t = 0; t < 20000 && ok; ++t) ok = test(gen() % elems.size(), gen() % elems.size());
    }
    return {label + " is a monoid congruence", ok, "true", ok ? "true" : "false"};
}

}  // namespace detail

/// Checks the multiplication rules in Brown's quotient/covering monoids:
/// y*y_l in F_{n,q}, the bar quotient of F_n and of the flag monoid, and the
/// fibre sizes of F_{n,q} -> flags. Without p only the word bar monoid runs.
inline std::vector<Check> verify_remark_monoids(int n, std::optional<int> p = std::nullopt, std::uint64_t seed = 20240607) {
    if (n < 1 || n > 5) throw std::invalid_argument("verify_remark_monoids: refused, bar monoids need 1 <= n <= 5");
    if (p && n > 3) throw std::invalid_argument("verify_remark_monoids: refused, the vector-sequence monoid needs n <= 3");
    std::vector<Check> out;

    // Bar quotient of F_n: length-n words identified with their (n-1)-prefix.
    {
        const auto words = enumerate_monoid(n);
        std::map<InjWord, std::size_t> idx;
        for (std::size_t i = 0; i < words.size(); ++i) idx.emplace(words[i], i);
        std::vector<std::size_t> cls(words.size());
        std::vector<int> class_len;
        std::map<std::size_t, std::size_t> class_of_rep;
        for (std::size_t i = 0; i < words.size(); ++i) {
            std::size_t r = i;
            if (words[i].length() == n) {
                std::vector<int> prefix(words[i].letters().begin(), words[i].letters().end() - 1);
                r = idx.at(InjWord(n, prefix));
            }
            auto [it, fresh] = class_of_rep.emplace(r, class_len.size());
            if (fresh) class_len.push_back(words[r].length());
            cls[i] = it->second;
        }
        out.push_back(detail::check_congruence("bar F_" + std::to_string(n), words, cls, seed));
        auto expected = [n](int l) {
            std::vector<long long> v(n, 0);
            if (l < n - 1) {
                v[l] = l;
                v[l + 1] = 1;
            } else {
                v[n - 1] = n;
            }
            return v;
        };
        auto checks = detail::check_orbit_products<InjWord>("bar x * bar x_l in bar F_" + std::to_string(n), words, cls,
                                                            class_len, n - 1, expected);
        out.insert(out.end(), checks.begin(), checks.end());
    }

    if (!p) return out;
    const int q = *p;

    // Bar quotient of the flag monoid: complete flags lose their last member.
    {
        const auto flags = enumerate_monoid_q(n, q);
        std::map<FlagChain, std::size_t> idx;
        for (std::size_t i = 0; i < flags.size(); ++i) idx.emplace(flags[i], i);
        std::vector<std::size_t> cls(flags.size());
        std::vector<int> class_len;
        std::map<std::size_t, std::size_t> class_of_rep;
        for (std::size_t i = 0; i < flags.size(); ++i) {
            std::size_t r = i;
            if (flags[i].length() == n) {
                std::vector<Subspace> prefix(flags[i].chain().begin(), flags[i].chain().end() - 1);
                r = idx.at(FlagChain(n, q, prefix));
            }
            auto [it, fresh] = class_of_rep.emplace(r, class_len.size());
            if (fresh) class_len.push_back(flags[r].length());
            cls[i] = it->second;
        }
        out.push_back(detail::check_congruence("bar F^(q)_" + std::to_string(n), flags, cls, seed));
        auto expected = [n, q](int l) {
            std::vector<long long> v(n, 0);
            if (l < n - 1) {
                v[l] = q_int(l).eval(q);
                v[l + 1] = int_pow(q, l);
            } else {
                v[n - 1] = q_int(n).eval(q);
            }
            return v;
        };
        auto checks = detail::check_orbit_products<FlagChain>("bar x^(q) * bar x^(q)_l, q=" + std::to_string(q), flags,
                                                              cls, class_len, n - 1, expected);
        out.insert(out.end(), checks.begin(), checks.end());
    }

    // Brown's F_{n,q}: y * y_l = (q^l - 1) y_l + y_{l+1}.
    {
        const auto seqs = enumerate_vecseq(n, q);
        std::vector<std::size_t> cls(seqs.size());
        std::vector<int> class_len(seqs.size());
        for (std::size_t i = 0; i < seqs.size(); ++i) {
            cls[i] = i;
            class_len[i] = seqs[i].length();
        }
        auto expected = [n, q](int l) {
            std::vector<long long> v(n + 1, 0);
            v[l] = int_pow(q, l) - 1;
            if (l < n) v[l + 1] = 1;
            return v;
        };
        auto checks = detail::check_orbit_products<VecSeq>("y * y_l in F_{" + std::to_string(n) + "," + std::to_string(q) + "}",
                                                           seqs, cls, class_len, n, expected);
        out.insert(out.end(), checks.begin(), checks.end());

        // Fibres of (v_1..v_l) -> (span prefixes).
        std::map<FlagChain, long long> fibre;
        for (const auto& s : seqs) ++fibre[s.to_flag()];
        const auto flags = enumerate_monoid_q(n, q);
        for (int l = 0; l <= n; ++l) {
            const long long want = int_pow(q - 1, l) * int_pow(q, l * (l - 1) / 2);
            bool ok = true;
            long long seen = -1;
            for (const auto& f : flags) {
                if (f.length() != l) continue;
                auto it = fibre.find(f);
                const long long got = it == fibre.end() ? 0 : it->second;
                if (got != want) ok = false;
                seen = got;
            }
            out.push_back({"fibre size over length-" + std::to_string(l) + " flags, q=" + std::to_string(q), ok,
                           std::to_string(want), std::to_string(seen)});
        }
        out.push_back({"F_{n,q} -> flags covers every flag", fibre.size() == flags.size(), std::to_string(flags.size()),
                       std::to_string(fibre.size())});

        // The span map is a monoid homomorphism.
        bool hom = true;
        auto test = [&](const VecSeq& a, const VecSeq& b) { return (a * b).to_flag() == a.to_flag() * b.to_flag(); };
        if (seqs.size() <= 500) {
            for (std::size_t a = 0; a < seqs.size() && hom; ++a) {
                for (std::size_t b = 0; b < seqs.size() && hom; ++b) hom = test(seqs[a], seqs[b]);
            }
        } else {
            std::mt19937_64 gen(seed);
            for (int t = 0; t < 20000 && hom; ++t) hom = test(seqs[gen() % seqs.size()], seqs[gen() % seqs.size()]);
        }
        out.push_back({"F_{n,q} -> flags is a monoid homomorphism", hom, "true", hom ? "true" : "false"});
    }
    return out;
}

}  // namespace lrbq
