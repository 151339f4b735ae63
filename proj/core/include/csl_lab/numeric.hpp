#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace csl_lab {

using Int = boost::multiprecision::cpp_int;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

/// Floor division, exact for negative operands as well.
inline Int floor_div(const Int& a, const Int& b) {
    if (b == 0) throw std::domain_error("floor_div: division by zero");
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int mod_floor(const Int& a, const Int& b) { return a - floor_div(a, b) * b; }

/// Largest t >= 0 with t*t <= n.  Requires n >= 0.
inline Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    return boost::multiprecision::sqrt(n);
}

inline bool is_square(const Int& n) {
    if (n < 0) return false;
    Int r = isqrt(n);
    return r * r == n;
}

/// Exact cube root when n is a perfect cube; nullopt semantics via flag.
inline bool cube_root(const Int& n, Int& out) {
    if (n < 0) return false;
    Int lo = 0, hi = 1;
    while (hi * hi * hi < n) hi <<= 1;
    while (lo < hi) {
        Int mid = (lo + hi) / 2;
        if (mid * mid * mid < n) lo = mid + 1; else hi = mid;
    }
    if (lo * lo * lo == n) { out = lo; return true; }
    return false;
}

inline Int parse_int(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_int: empty string");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("parse_int: no digits");
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("parse_int: bad digit in '" + s + "'");
    return Int(s);
}

/// Exact rational number.  Invariants: den > 0, gcd(num, den) == 1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Int n) : num_(std::move(n)), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}
    Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_positive() const { return num_ > 0; }
    bool is_negative() const { return num_ < 0; }

    Rational operator-() const { return Rational(unsafe{}, -num_, den_); }

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

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        Int lhs = a.num_ * b.den_, rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rational abs() const { return num_ < 0 ? -*this : *this; }
    Rational inv() const {
        if (num_ == 0) throw std::domain_error("Rational: inverse of zero");
        return Rational(den_, num_);
    }

    Int floor() const { return floor_div(num_, den_); }
    Int ceil() const { return -floor_div(-num_, den_); }

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(parse_int(s));
        Int n = parse_int(s.substr(0, slash));
        Int d = parse_int(s.substr(slash + 1));
        if (d == 0) throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
        return Rational(std::move(n), std::move(d));
    }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

private:
    struct unsafe {};
    Rational(unsafe, Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {}

    void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        Int g = csl_lab::gcd(csl_lab::abs(num_), den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    Int num_;
    Int den_;
};

/// Checked narrowing for report output; indices at working scale fit easily.
inline std::int64_t to_int64(const Int& n) {
    if (n > Int(INT64_MAX) || n < Int(INT64_MIN))
        throw std::overflow_error("to_int64: value out of range");
    return static_cast<std::int64_t>(n);
}

}  // namespace csl_lab
