#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lrbq {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Rat {
public:
    Rat() = default;
    Rat(int v) : v_(static_cast<long>(v)) {}
    Rat(long v) : v_(v) {}
    Rat(long long v) : v_(static_cast<long>(v)) {}
    explicit Rat(const mpz_class& v) : v_(v) {}
    Rat(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parses "p/q" or "p".
    static Rat parse(std::string_view text) {
        const auto slash = text.find('/');
        try {
            if (slash == std::string_view::npos) {
                return Rat(mpz_class(std::string(text)));
            }
            return Rat(mpz_class(std::string(text.substr(0, slash))),
                       mpz_class(std::string(text.substr(slash + 1))));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("Rat: cannot parse '" + std::string(text) + "'");
        }
    }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// Throws if the value is not an integer or does not fit in 64 bits.
    long long to_integer() const {
        if (!is_integer()) throw std::domain_error("Rat: " + str() + " is not an integer");
        if (!v_.get_num().fits_slong_p()) throw std::overflow_error("Rat: integer out of range");
        return v_.get_num().get_si();
    }

    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.v_, b.v_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

private:
    mpq_class v_{0};
};

}  // namespace lrbq
