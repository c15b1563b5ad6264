#pragma once

// Arbitrary-precision rationals in canonical form: denominator > 0,
// gcd(|num|, den) = 1, zero stored as 0/1. Thin strong type over
// boost::multiprecision::cpp_rational, which maintains exactly that form.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

#include "equicut/error.hpp"

namespace equicut {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(long long p, long long q) : Rational(make(BigInt(p), BigInt(q))) {}

    static Rational make(const BigInt& p, const BigInt& q) {
        if (q == 0) fail(ErrKind::ZeroDenominator, "rational with zero denominator");
        Rational r;
        r.v_ = q < 0 ? BigRat(-p, -q) : BigRat(p, q); // gcd-reduced on construction
        return r;
    }

    // Accepts "p" or "p/q" with optional sign on either part.
    static Rational parse(std::string_view s) {
        auto pos = s.find('/');
        try {
            if (pos == std::string_view::npos)
                return Rational(BigInt(std::string(s)));
            BigInt p{std::string(s.substr(0, pos))};
            BigInt q{std::string(s.substr(pos + 1))};
            return make(p, q);
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            fail(ErrKind::ParseError, "malformed rational '" + std::string(s) + "'");
        }
    }

    BigInt num() const { return boost::multiprecision::numerator(v_); }
    BigInt den() const { return boost::multiprecision::denominator(v_); }

    int sign() const { return v_.sign(); }
    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return den() == 1; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) fail(ErrKind::DivisionByZero, "rational division by zero");
        return Rational(a.v_ / b.v_);
    }
    Rational operator-() const { return Rational(-v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // Canonical text form, always "p/q".
    std::string str() const { return num().str() + "/" + den().str(); }

    // Fixed-point decimal with `digits` fractional digits, rounding half away
    // from zero. Deterministic; used for reports and SVG coordinates.
    std::string decimal(unsigned digits) const {
        BigInt p = num(), q = den();
        bool neg = p < 0;
        if (neg) p = -p;
        BigInt scale = boost::multiprecision::pow(BigInt(10), digits);
        BigInt scaled = p * scale;
        BigInt quot = scaled / q;
        BigInt rem = scaled % q;
        if (2 * rem >= q) ++quot;
        std::string s = quot.str();
        if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
        if (digits > 0) s.insert(s.size() - digits, ".");
        if (neg && quot != 0) s.insert(0, "-");
        return s;
    }

    // Exact square root if this is the square of a rational; nullopt otherwise
    // (including all negative inputs).
    static std::optional<Rational> exact_sqrt(const Rational& x) {
        if (x.sign() < 0) return std::nullopt;
        BigInt p = x.num(), q = x.den();
        BigInt sp = boost::multiprecision::sqrt(p);
        if (sp * sp != p) return std::nullopt;
        BigInt sq = boost::multiprecision::sqrt(q);
        if (sq * sq != q) return std::nullopt;
        return make(sp, sq);
    }

    double to_double() const { return v_.convert_to<double>(); }

private:
    explicit Rational(BigRat v) : v_(std::move(v)) {}
    BigRat v_;
};

inline Rational pow10_inv(unsigned digits) {
    return Rational::make(1, boost::multiprecision::pow(BigInt(10), digits));
}

} // namespace equicut
