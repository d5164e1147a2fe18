#pragma once

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lrbq {

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow");
    return r;
}

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow");
    return r;
}

/// Polynomial in q with integer coefficients.
class QPoly {
public:
    QPoly() = default;
    QPoly(long long c) {
        if (c != 0) c_.push_back(c);
    }
    explicit QPoly(std::vector<long long> coeffs) : c_(std::move(coeffs)) { trim(); }

    static QPoly monomial(long long coeff, int exponent) {
        if (exponent < 0) throw std::invalid_argument("QPoly: negative exponent");
        std::vector<long long> c(exponent + 1, 0);
        c[exponent] = coeff;
        return QPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    long long coeff(int e) const { return e >= 0 && e < static_cast<int>(c_.size()) ? c_[e] : 0; }
    const std::vector<long long>& coeffs() const { return c_; }

    long long eval(long long q) const {
        long long r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = checked_add(checked_mul(r, q), *it);
        return r;
    }

    /// Multiplies by q^k.
    QPoly shifted(int k) const {
        if (k < 0) throw std::invalid_argument("QPoly::shifted: negative shift");
        if (is_zero()) return {};
        std::vector<long long> c(k, 0);
        c.insert(c.end(), c_.begin(), c_.end());
        return QPoly(std::move(c));
    }

    /// Divides by q^k exactly; nullopt if some coefficient below q^k is nonzero.
    std::optional<QPoly> divided_by_q_power(int k) const {
        for (int e = 0; e < k && e < static_cast<int>(c_.size()); ++e) {
            if (c_[e] != 0) return std::nullopt;
        }
        if (k >= static_cast<int>(c_.size())) return QPoly();
        return QPoly(std::vector<long long>(c_.begin() + k, c_.end()));
    }

    bool nonnegative() const {
        for (long long v : c_) {
            if (v < 0) return false;
        }
        return true;
    }

    /// "c0 + c1*q + c2*q^2"; unit coefficients are written bare.
    std::string str() const {
        if (c_.empty()) return "0";
        std::string s;
        bool first = true;
        for (std::size_t e = 0; e < c_.size(); ++e) {
            long long v = c_[e];
            if (v == 0) continue;
            if (first) {
                if (v < 0) s += "-";
            } else {
                s += v < 0 ? " - " : " + ";
            }
            const long long a = v < 0 ? -v : v;
            if (e == 0) {
                s += std::to_string(a);
            } else {
                if (a != 1) s += std::to_string(a) + "*";
                s += e == 1 ? "q" : "q^" + std::to_string(e);
            }
            first = false;
        }
        return s;
    }

    nlohmann::json to_json() const {
        nlohmann::json j = nlohmann::json::object();
        for (std::size_t e = 0; e < c_.size(); ++e) {
            if (c_[e] != 0) j[std::to_string(e)] = c_[e];
        }
        return j;
    }

    QPoly& operator+=(const QPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = checked_add(c_[i], o.c_[i]);
        trim();
        return *this;
    }
    QPoly& operator-=(const QPoly& o) { return *this += o * QPoly(-1); }

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<long long> c(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = checked_add(c[i + j], checked_mul(a.c_[i], b.c_[j]));
        }
        return QPoly(std::move(c));
    }
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<long long> c_;
};

inline long long factorial(int n) {
    long long r = 1;
    for (int i = 2; i <= n; ++i) r = checked_mul(r, i);
    return r;
}

inline long long binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline long long int_pow(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r = checked_mul(r, b);
    return r;
}

/// [m]_q = 1 + q + ... + q^{m-1}; [0]_q = 0.
inline QPoly q_int(int m) {
    if (m < 0) throw std::invalid_argument("q_int: negative argument");
    return QPoly(std::vector<long long>(m, 1));
}

inline QPoly q_factorial(int m) {
    QPoly r(1);
    for (int i = 2; i <= m; ++i) r = r * q_int(i);
    return r;
}

/// Gaussian binomial; zero when k < 0 or k > n.
inline QPoly q_binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return {};
    // q-Pascal: [n,k] = [n-1,k-1] + q^k [n-1,k]
    std::vector<QPoly> row{QPoly(1)};
    for (int m = 1; m <= n; ++m) {
        std::vector<QPoly> next(m + 1);
        for (int j = 0; j <= m; ++j) {
            QPoly v;
            if (j >= 1) v += row[j - 1];
            if (j <= m - 1) v += row[j].shifted(j);
            next[j] = v;
        }
        row = std::move(next);
    }
    return row[k];
}

/// Stirling numbers of the second kind from S(n,k) = S(n-1,k-1) + k S(n-1,k).
inline long long stirling2(int n, int k) {
    if (n < 0 || k < 0) return 0;
    std::vector<long long> row(k + 1, 0);
    row[0] = 1;
    for (int m = 1; m <= n; ++m) {
        for (int j = std::min(m, k); j >= 1; --j) row[j] = checked_add(row[j - 1], checked_mul(j, row[j]));
        row[0] = 0;
    }
    return row[k];
}

enum class StirlingVariant { plain, tilde };

/// S_q (plain): S_q(n,k) = q^{k-1} S_q(n-1,k-1) + [k]_q S_q(n-1,k).
/// S~_q (tilde): S~_q(n,k) = S~_q(n-1,k-1) + [k]_q S~_q(n-1,k).
inline QPoly q_stirling(int n, int k, StirlingVariant variant) {
    if (n < 0 || k < 0) return {};
    std::vector<QPoly> row(k + 1);
    row[0] = QPoly(1);
    for (int m = 1; m <= n; ++m) {
        for (int j = std::min(m, k); j >= 1; --j) {
            QPoly carried = variant == StirlingVariant::plain ? row[j - 1].shifted(j - 1) : row[j - 1];
            row[j] = carried + q_int(j) * row[j];
        }
        row[0] = QPoly();
    }
    return row[k];
}

/// d_n = sum_k (-1)^k n!/k!.
inline long long derangement_number(int n) {
    if (n < 0) throw std::invalid_argument("derangement_number: negative n");
    long long total = 0;
    long long falling = 1;  // n!/k! for k = n down to 0
    for (int k = n; k >= 0; --k) {
        total = checked_add(total, (k % 2 == 0 ? 1 : -1) * falling);
        falling = checked_mul(falling, k == 0 ? 1 : k);
    }
    return total;
}

/// Wachs' q-derangement number d_n(q) = sum_k (-1)^k q^{C(k,2)} [n]!_q/[k]!_q.
inline QPoly q_derangement(int n) {
    if (n < 0) throw std::invalid_argument("q_derangement: negative n");
    QPoly total;
    QPoly ratio(1);  // [n]!_q / [k]!_q, built for k = n down to 0
    for (int k = n; k >= 0; --k) {
        QPoly term = ratio.shifted(k * (k - 1) / 2);
        if (k % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
        if (k > 0) ratio = ratio * q_int(k);
    }
    return total;
}

/// Polynomial in t whose coefficients are polynomials in q; index = t-degree.
using TPoly = std::vector<QPoly>;

inline TPoly tpoly_mul(const TPoly& a, const TPoly& b) {
    if (a.empty() || b.empty()) return {};
    TPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

inline TPoly tpoly_add(TPoly a, const TPoly& b) {
    if (b.size() > a.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    while (!a.empty() && a.back().is_zero()) a.pop_back();
    return a;
}

inline TPoly tpoly_scale(TPoly a, const QPoly& s) {
    for (auto& c : a) c = c * s;
    while (!a.empty() && a.back().is_zero()) a.pop_back();
    return a;
}

/// t^n as a TPoly.
inline TPoly t_power(int n) {
    TPoly r(n + 1);
    r[n] = QPoly(1);
    return r;
}

/// (t)_k = t(t-1)...(t-k+1).
inline TPoly falling_factorial(int k) {
    TPoly r{QPoly(1)};
    for (int i = 0; i < k; ++i) r = tpoly_mul(r, TPoly{QPoly(-i), QPoly(1)});
    return r;
}

/// (t)_{k,q} = t(t-[1]_q)...(t-[k-1]_q).
inline TPoly q_falling_factorial(int k) {
    TPoly r{QPoly(1)};
    for (int i = 0; i < k; ++i) r = tpoly_mul(r, TPoly{QPoly(-1) * q_int(i), QPoly(1)});
    return r;
}

struct IdentityCheck {
    std::string name;
    int n = 0;
    bool pass = false;
};

/// Checks t^n = sum_k S(n,k)(t)_k, t^n = sum_k S~_q(n,k)(t)_{k,q} and
/// t^n = sum_k S_q(n,k) q^{-C(k,2)} (t)_{k,q} as exact polynomial identities.
inline std::vector<IdentityCheck> verify_change_of_basis(int n_max) {
    if (n_max > 8) throw std::invalid_argument("verify_change_of_basis: n_max must be <= 8");
    std::vector<IdentityCheck> out;
    for (int n = 0; n <= n_max; ++n) {
        TPoly classical, tilde, laurent;
        bool laurent_ok = true;
        for (int k = 0; k <= n; ++k) {
            classical = tpoly_add(classical, tpoly_scale(falling_factorial(k), QPoly(stirling2(n, k))));
            tilde = tpoly_add(tilde, tpoly_scale(q_falling_factorial(k), q_stirling(n, k, StirlingVariant::tilde)));
            auto reduced = q_stirling(n, k, StirlingVariant::plain).divided_by_q_power(k * (k - 1) / 2);
            if (!reduced) {
                laurent_ok = false;
                continue;
            }
            laurent = tpoly_add(laurent, tpoly_scale(q_falling_factorial(k), *reduced));
        }
        const TPoly target = t_power(n);
        out.push_back({"t^n = sum S(n,k) (t)_k", n, classical == target});
        out.push_back({"t^n = sum S~_q(n,k) (t)_{k,q}", n, tilde == target});
        out.push_back({"t^n = sum S_q(n,k) q^{-C(k,2)} (t)_{k,q}", n, laurent_ok && laurent == target});
    }
    return out;
}

/// n! = sum_j d_{n-j} C(n,j).
inline bool verify_factorial_derangement_identity(int n) {
    long long s = 0;
    for (int j = 0; j <= n; ++j) s = checked_add(s, checked_mul(derangement_number(n - j), binomial(n, j)));
    return s == factorial(n);
}

/// [n]!_q = sum_j d_{n-j}(q) [n choose j]_q.
inline bool verify_q_factorial_derangement_identity(int n) {
    QPoly s;
    for (int j = 0; j <= n; ++j) s += q_derangement(n - j) * q_binomial(n, j);
    return s == q_factorial(n);
}

}  // namespace lrbq
