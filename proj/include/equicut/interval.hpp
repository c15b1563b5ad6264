#pragma once

// Closed intervals with exact rational endpoints. Endpoint arithmetic is
// exact, so no rounding happens here; only square-root enclosures (in
// field.hpp) and MPFR exports (construction.hpp) introduce widths.

#include <algorithm>
#include <string>

#include "equicut/rational.hpp"

namespace equicut {

struct Interval {
    Rational lo, hi;

    Interval() = default;
    Interval(Rational v) : lo(v), hi(v) {}
    Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (hi < lo) fail(ErrKind::Internal, "inverted interval");
    }

    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / Rational(2); }

    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return contains(Rational(0)); }
    bool excludes_zero() const { return lo > Rational(0) || hi < Rational(0); }

    // +1 / -1 when the interval certifies a sign, 0 when it straddles zero.
    int certified_sign() const {
        if (lo > Rational(0)) return 1;
        if (hi < Rational(0)) return -1;
        return 0;
    }

    friend Interval operator+(const Interval& a, const Interval& b) {
        return Interval(a.lo + b.lo, a.hi + b.hi);
    }
    friend Interval operator-(const Interval& a, const Interval& b) {
        return Interval(a.lo - b.hi, a.hi - b.lo);
    }
    friend Interval operator*(const Interval& a, const Interval& b) {
        Rational c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
        return Interval(std::min({c1, c2, c3, c4}), std::max({c1, c2, c3, c4}));
    }
    friend Interval operator*(const Rational& k, const Interval& a) {
        return k >= Rational(0) ? Interval(k * a.lo, k * a.hi) : Interval(k * a.hi, k * a.lo);
    }

    std::string str(unsigned digits = 12) const {
        return "[" + lo.decimal(digits) + ", " + hi.decimal(digits) + "]";
    }
};

} // namespace equicut
