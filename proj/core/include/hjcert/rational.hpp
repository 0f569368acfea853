#pragma once

// Exact rational arithmetic on arbitrary-precision integers.
//
// Every fractional quantity in this library (discrepancy coefficients,
// self-intersections of discrepancy divisors, inequality sides, prime
// reciprocal sums) is a Rational. There is no floating point anywhere in
// the elimination pipeline: every comparison that decides whether a
// configuration lives or dies is exact.
//
// Invariants: lowest terms, denominator > 0, zero is 0/1. Equality is
// structural.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hjcert {

using Integer = boost::multiprecision::cpp_int;

inline Integer int_gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

// floor(sqrt(n)) for n >= 0, exact.
inline Integer int_sqrt(const Integer& n) {
    if (n < 0) throw std::domain_error("int_sqrt: negative argument");
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Integer& n, Integer& root) {
    if (n < 0) return false;
    root = int_sqrt(n);
    return root * root == n;
}

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int v) : num_(v), den_(1) {}                 // NOLINT(google-explicit-constructor)
    Rational(std::int64_t v) : num_(v), den_(1) {}        // NOLINT(google-explicit-constructor)
    Rational(Integer v) : num_(std::move(v)), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        normalize();
    }

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_positive() const { return num_ > 0; }
    bool is_negative() const { return num_ < 0; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        // denominators positive, so cross-multiplication preserves order
        Integer l = a.num_ * b.den_;
        Integer r = b.num_ * a.den_;
        return l < r ? std::strong_ordering::less
                     : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Rational reciprocal() const {
        if (num_ == 0) throw std::domain_error("Rational: reciprocal of zero");
        return Rational(den_, num_);
    }

    // Serialization convention used everywhere downstream: "p/q" in lowest
    // terms, "p" when q = 1, leading "-" for negatives.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += '/';
            s += den_.str();
        }
        return s;
    }

    // Inverse of str(). Accepts "p" and "p/q"; rejects anything else.
    static Rational parse(const std::string& s) {
        auto malformed = [&s] {
            return std::invalid_argument("Rational::parse: malformed rational '" + s + "'");
        };
        auto is_integer_text = [](std::string_view v) {
            if (!v.empty() && v.front() == '-') v.remove_prefix(1);
            if (v.empty()) return false;
            for (char c : v) {
                if (c < '0' || c > '9') return false;
            }
            return true;
        };
        auto pos = s.find('/');
        try {
            if (pos == std::string::npos) {
                if (!is_integer_text(s)) throw malformed();
                return Rational(Integer(s));
            }
            std::string num = s.substr(0, pos);
            std::string den = s.substr(pos + 1);
            if (!is_integer_text(num) || !is_integer_text(den)) throw malformed();
            return Rational(Integer(num), Integer(den));
        } catch (const std::runtime_error&) {
            throw malformed();
        }
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    void normalize() {
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Integer g = int_gcd(num_ < 0 ? Integer(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Integer num_;
    Integer den_;  // > 0
};

inline Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }

} // namespace hjcert
