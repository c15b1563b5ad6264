#pragma once

// Elements of iterated real quadratic extensions Q(sqrt(r1))(sqrt(r2))...
//
// A tower is an immutable chain of radicands. Each radicand is a positive
// element of the tower below it that is *not* a perfect square there, so the
// coefficient representation of an element over a fixed tower is unique, and
// the sign recursion below terminates.
//
// An element of a depth-d tower is stored as a flat vector of 2^d rational
// coefficients; the first half is the subfield part x, the second half the
// coefficient y of sqrt(r_d), recursively. Values are immutable and may be
// shared freely between threads; the tower is carried by the value, there is
// no global registry.
//
// Sign of x + y*sqrt(r):
//   y = 0 -> sign(x);  x = 0 -> sign(y);  sign(x) = sign(y) -> that sign;
//   otherwise sign(x) * sign(x^2 - y^2 r), recursing into the subfield.
//
// Square roots inside a tower (used for perfect-square detection, radicand
// deduplication and tower merging): a root of p + q*sqrt(r), q != 0, must
// have the form u + v*sqrt(r) with u^2 = (p +- m)/2, m = sqrt(p^2 - q^2 r),
// v = q/(2u); all candidate roots are verified by exact squaring. For q = 0
// the root is either sqrt(p) in the subfield or sqrt(p/r)*sqrt(r).

#include <algorithm>
#include <atomic>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "equicut/error.hpp"
#include "equicut/interval.hpp"
#include "equicut/rational.hpp"

namespace equicut {

struct Tower;
using TowerPtr = std::shared_ptr<const Tower>;

struct Tower {
    TowerPtr base;                  // nullptr = plain rationals
    std::vector<Rational> radicand; // element over `base`, length 1 << depth(base)
    int depth = 1;
};

inline int tower_depth(const Tower* t) { return t ? t->depth : 0; }

// Maximum tower depth. Process-wide knob set once at startup (CLI flag);
// values themselves stay immutable.
inline std::atomic<int>& tower_depth_limit_slot() {
    static std::atomic<int> v{8};
    return v;
}
inline int max_tower_depth() { return tower_depth_limit_slot().load(std::memory_order_relaxed); }
inline void set_max_tower_depth(int d) {
    if (d < 1 || d > 24) fail(ErrKind::InvalidInput, "tower depth limit out of range");
    tower_depth_limit_slot().store(d, std::memory_order_relaxed);
}

inline bool towers_equal(const Tower* a, const Tower* b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->depth != b->depth) return false;
    if (a->radicand != b->radicand) return false;
    return towers_equal(a->base.get(), b->base.get());
}

inline const Tower* ancestor_at_depth(const Tower* t, int d) {
    while (tower_depth(t) > d) t = t->base.get();
    return t;
}

inline bool is_tower_prefix(const Tower* small, const Tower* big) {
    if (tower_depth(small) > tower_depth(big)) return false;
    return towers_equal(small, ancestor_at_depth(big, tower_depth(small)));
}

namespace fdetail {

using Vec = std::vector<Rational>;
using Span = std::span<const Rational>;

inline bool all_zero(Span a) {
    for (const auto& r : a)
        if (!r.is_zero()) return false;
    return true;
}

inline Vec add(Span a, Span b) {
    Vec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline Vec sub(Span a, Span b) {
    Vec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline Vec neg(Span a) {
    Vec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
    return out;
}

inline Vec scaled(Span a, const Rational& k) {
    Vec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * k;
    return out;
}

inline Vec concat(Vec x, const Vec& y) {
    x.insert(x.end(), y.begin(), y.end());
    return x;
}

inline Vec lift(Span a, const Tower* target) {
    Vec out(a.begin(), a.end());
    out.resize(size_t(1) << tower_depth(target), Rational(0));
    return out;
}

inline Vec mul(Span a, Span b, const Tower* t) {
    if (!t) return {a[0] * b[0]};
    const Tower* base = t->base.get();
    size_t h = a.size() / 2;
    Span ax = a.first(h), ay = a.subspan(h);
    Span bx = b.first(h), by = b.subspan(h);
    // (ax + ay*sqrt(r))(bx + by*sqrt(r)) = ax bx + r ay by + (ax by + ay bx) sqrt(r)
    Vec x = add(mul(ax, bx, base), mul(mul(ay, by, base), t->radicand, base));
    Vec y = add(mul(ax, by, base), mul(ay, bx, base));
    return concat(std::move(x), y);
}

inline int sgn(Span a, const Tower* t) {
    if (!t) return a[0].sign();
    const Tower* base = t->base.get();
    size_t h = a.size() / 2;
    Span x = a.first(h), y = a.subspan(h);
    if (all_zero(y)) return sgn(x, base);
    if (all_zero(x)) return sgn(y, base);
    int sx = sgn(x, base), sy = sgn(y, base);
    if (sx == sy) return sx;
    Vec d = sub(mul(x, x, base), mul(mul(y, y, base), t->radicand, base));
    return sx * sgn(d, base);
}

inline Vec inv(Span a, const Tower* t) {
    if (!t) {
        if (a[0].is_zero()) fail(ErrKind::DivisionByZero, "division by zero");
        return {Rational(1) / a[0]};
    }
    const Tower* base = t->base.get();
    size_t h = a.size() / 2;
    Span p = a.first(h), q = a.subspan(h);
    if (all_zero(q)) {
        Vec out = inv(p, base);
        out.resize(a.size(), Rational(0));
        return out;
    }
    // 1/(p + q sqrt(r)) = (p - q sqrt(r)) / (p^2 - q^2 r); the denominator is
    // nonzero because r is not a square in the subfield.
    Vec den = sub(mul(p, p, base), mul(mul(q, q, base), t->radicand, base));
    Vec iden = inv(den, base);
    Vec x = mul(p, iden, base);
    Vec y = neg(mul(q, iden, base));
    return concat(std::move(x), y);
}

// Nonnegative square root of `a` inside the tower, if one exists there.
inline std::optional<Vec> sqrt_in(Span a, const Tower* t) {
    if (!t) {
        auto r = Rational::exact_sqrt(a[0]);
        if (!r) return std::nullopt;
        return Vec{*r};
    }
    const Tower* base = t->base.get();
    size_t h = a.size() / 2;
    Span p = a.first(h), q = a.subspan(h);
    if (all_zero(q)) {
        if (auto s = sqrt_in(p, base)) {
            Vec out = *s;
            out.resize(a.size(), Rational(0));
            return out;
        }
        Vec pr = mul(p, inv(t->radicand, base), base); // p / r
        if (auto s = sqrt_in(pr, base)) {
            Vec out(h, Rational(0));
            return concat(std::move(out), *s); // sqrt(p/r) * sqrt(r)
        }
        return std::nullopt;
    }
    Vec n = sub(mul(p, p, base), mul(mul(q, q, base), t->radicand, base));
    auto m = sqrt_in(n, base);
    if (!m) return std::nullopt;
    for (int pick = 0; pick < 2; ++pick) {
        Vec u2 = scaled(pick == 0 ? add(p, *m) : sub(p, *m), Rational(1, 2));
        if (sgn(u2, base) <= 0) continue;
        auto u = sqrt_in(u2, base);
        if (!u || all_zero(*u)) continue;
        Vec v = mul(q, inv(scaled(*u, Rational(2)), base), base);
        Vec cand = concat(Vec(*u), v);
        if (mul(cand, cand, t) != Vec(a.begin(), a.end())) continue;
        if (sgn(cand, t) < 0) cand = neg(cand);
        return cand;
    }
    return std::nullopt;
}

// Certified rational enclosures of square roots: with s = floor(sqrt(n d 4^k)),
// s/(d 2^k) <= sqrt(n/d) <= (s+1)/(d 2^k).
inline Rational sqrt_lower(const Rational& q, unsigned k) {
    if (q.sign() <= 0) return Rational(0);
    BigInt m = (q.num() * q.den()) << (2 * k);
    BigInt s = boost::multiprecision::sqrt(m);
    return Rational::make(s, q.den() << k);
}

inline Rational sqrt_upper(const Rational& q, unsigned k) {
    if (q.sign() <= 0) return Rational(0);
    BigInt m = (q.num() * q.den()) << (2 * k);
    BigInt s = boost::multiprecision::sqrt(m);
    if (s * s != m) ++s;
    return Rational::make(s, q.den() << k);
}

inline Interval enclose(Span a, const Tower* t, unsigned k) {
    if (!t) return Interval(a[0]);
    const Tower* base = t->base.get();
    size_t h = a.size() / 2;
    Interval ix = enclose(a.first(h), base, k);
    Interval iy = enclose(a.subspan(h), base, k);
    Interval ir = enclose(t->radicand, base, k);
    Interval isq(sqrt_lower(ir.lo, k), sqrt_upper(ir.hi, k));
    return ix + iy * isq;
}

} // namespace fdetail

class FieldElem {
public:
    FieldElem() : coeffs_{Rational(0)} {}
    FieldElem(Rational r) : coeffs_{std::move(r)} {}
    FieldElem(long long n) : coeffs_{Rational(n)} {}
    FieldElem(int n) : coeffs_{Rational(n)} {}

    static FieldElem from_parts(TowerPtr tower, std::vector<Rational> coeffs) {
        // canonical form: drop top levels whose sqrt coefficient is zero
        while (tower) {
            size_t h = coeffs.size() / 2;
            if (!fdetail::all_zero(fdetail::Span(coeffs).subspan(h))) break;
            coeffs.resize(h);
            tower = tower->base;
        }
        FieldElem e;
        e.tower_ = std::move(tower);
        e.coeffs_ = std::move(coeffs);
        return e;
    }

    int depth() const { return tower_depth(tower_.get()); }
    const TowerPtr& tower() const { return tower_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_rational() const { return !tower_; }
    const Rational& as_rational() const {
        if (tower_) fail(ErrKind::Internal, "value is irrational");
        return coeffs_[0];
    }

    bool is_zero() const { return !tower_ && coeffs_[0].is_zero(); }
    int sign() const { return fdetail::sgn(coeffs_, tower_.get()); }
    FieldElem abs() const { return sign() < 0 ? -*this : *this; }

    // Subfield part, sqrt coefficient, and radicand of the top level.
    FieldElem part_x() const {
        require_depth();
        size_t h = coeffs_.size() / 2;
        return from_parts(tower_->base, {coeffs_.begin(), coeffs_.begin() + h});
    }
    FieldElem part_y() const {
        require_depth();
        size_t h = coeffs_.size() / 2;
        return from_parts(tower_->base, {coeffs_.begin() + h, coeffs_.end()});
    }
    FieldElem radicand_value() const {
        require_depth();
        return from_parts(tower_->base, tower_->radicand);
    }

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b) {
        Coerced c = coerce(a, b);
        return from_parts(std::move(c.tower), fdetail::add(c.a, c.b));
    }
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b) {
        Coerced c = coerce(a, b);
        return from_parts(std::move(c.tower), fdetail::sub(c.a, c.b));
    }
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
        Coerced c = coerce(a, b);
        return from_parts(std::move(c.tower), fdetail::mul(c.a, c.b, c.tower.get()));
    }
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b) {
        if (b.is_zero()) fail(ErrKind::DivisionByZero, "field division by zero");
        Coerced c = coerce(a, b);
        fdetail::Vec ib = fdetail::inv(c.b, c.tower.get());
        return from_parts(std::move(c.tower), fdetail::mul(c.a, ib, c.tower.get()));
    }
    FieldElem operator-() const {
        FieldElem e;
        e.tower_ = tower_;
        e.coeffs_ = fdetail::neg(coeffs_);
        return e;
    }
    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
    FieldElem& operator/=(const FieldElem& o) { return *this = *this / o; }

    static int compare(const FieldElem& a, const FieldElem& b) {
        if (towers_equal(a.tower_.get(), b.tower_.get()) && a.coeffs_ == b.coeffs_) return 0;
        return (a - b).sign();
    }
    friend bool operator==(const FieldElem& a, const FieldElem& b) { return compare(a, b) == 0; }
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return compare(a, b) != 0; }
    friend bool operator<(const FieldElem& a, const FieldElem& b) { return compare(a, b) < 0; }
    friend bool operator<=(const FieldElem& a, const FieldElem& b) { return compare(a, b) <= 0; }
    friend bool operator>(const FieldElem& a, const FieldElem& b) { return compare(a, b) > 0; }
    friend bool operator>=(const FieldElem& a, const FieldElem& b) { return compare(a, b) >= 0; }

    // Certified enclosure of width <= eps. Rational values come back exact.
    Interval to_interval(const Rational& eps) const {
        if (eps.sign() <= 0) fail(ErrKind::InvalidInput, "interval width must be positive");
        if (!tower_) return Interval(coeffs_[0]);
        for (unsigned k = 16;; k *= 2) {
            Interval iv = fdetail::enclose(coeffs_, tower_.get(), k);
            if (iv.width() <= eps) return iv;
            if (k > (1u << 20)) fail(ErrKind::Internal, "interval refinement diverged");
        }
    }

    double approx() const { return to_interval(Rational::make(1, BigInt(1) << 60)).mid().to_double(); }

    std::string str() const {
        if (!tower_) return coeffs_[0].str();
        return "(" + part_x().str() + " + (" + part_y().str() + ")*sqrt(" +
               radicand_value().str() + "))";
    }

    // Deterministic decimal rendering through a certified enclosure.
    std::string decimal(unsigned digits = 12) const {
        return to_interval(pow10_inv(digits)).mid().decimal(digits);
    }

private:
    struct Coerced {
        TowerPtr tower;
        fdetail::Vec a, b;
    };

    static Coerced coerce(const FieldElem& x, const FieldElem& y) {
        const Tower* tx = x.tower_.get();
        const Tower* ty = y.tower_.get();
        if (towers_equal(tx, ty)) return {x.tower_, x.coeffs_, y.coeffs_};
        if (is_tower_prefix(tx, ty)) return {y.tower_, fdetail::lift(x.coeffs_, ty), y.coeffs_};
        if (is_tower_prefix(ty, tx)) return {x.tower_, x.coeffs_, fdetail::lift(y.coeffs_, tx)};
        auto [merged, yc] = merge_into(x.tower_, y);
        return {merged, fdetail::lift(x.coeffs_, merged.get()), std::move(yc)};
    }

    // Re-express y over a tower extending `start`, adjoining radicands of y's
    // tower that are not already squares there.
    static std::pair<TowerPtr, fdetail::Vec> merge_into(TowerPtr start, const FieldElem& y);

    void require_depth() const {
        if (!tower_) fail(ErrKind::Internal, "rational value has no tower level");
    }

    friend FieldElem sqrt_adjoin(const FieldElem&);

    TowerPtr tower_;               // nullptr = rational
    std::vector<Rational> coeffs_; // size 1 << depth, top sqrt coefficient nonzero
};

inline int sign(const FieldElem& x) { return x.sign(); }

// Exact square root. Stays in the current tower when x is a perfect square
// there (this also deduplicates radicands); otherwise extends the tower by
// one level, subject to the depth limit.
inline FieldElem sqrt_adjoin(const FieldElem& x) {
    int s = x.sign();
    if (s < 0) fail(ErrKind::NegativeRadicand, "square root of negative value");
    if (s == 0) return FieldElem(0);
    if (auto r = fdetail::sqrt_in(x.coeffs(), x.tower().get()))
        return FieldElem::from_parts(x.tower(), std::move(*r));
    int nd = x.depth() + 1;
    if (nd > max_tower_depth())
        fail(ErrKind::TowerLimitExceeded,
             "tower depth " + std::to_string(nd) + " exceeds limit " +
                 std::to_string(max_tower_depth()));
    auto node = std::make_shared<Tower>();
    node->base = x.tower();
    node->radicand = x.coeffs();
    node->depth = nd;
    size_t h = size_t(1) << (nd - 1);
    fdetail::Vec g(h, Rational(0));
    g.reserve(2 * h);
    g.push_back(Rational(1));
    g.resize(2 * h, Rational(0));
    return FieldElem::from_parts(std::move(node), std::move(g));
}

inline std::pair<TowerPtr, fdetail::Vec> FieldElem::merge_into(TowerPtr start, const FieldElem& y) {
    // chain of y's tower, bottom-up
    std::vector<const Tower*> chain;
    for (const Tower* t = y.tower_.get(); t; t = t->base.get()) chain.push_back(t);
    std::reverse(chain.begin(), chain.end());

    TowerPtr merged = std::move(start);
    std::vector<FieldElem> gens; // image of sqrt(radicand_i) over `merged`

    // evaluate a coefficient vector of y's level-`lvl` subtower over `merged`
    auto embed = [&](auto&& self, fdetail::Span v, int lvl) -> FieldElem {
        if (lvl == 0) return FieldElem(v[0]);
        size_t h = v.size() / 2;
        FieldElem xs = self(self, v.first(h), lvl - 1);
        FieldElem ys = self(self, v.subspan(h), lvl - 1);
        return xs + ys * gens[lvl - 1];
    };

    for (size_t i = 0; i < chain.size(); ++i) {
        FieldElem rad = embed(embed, chain[i]->radicand, int(i));
        fdetail::Vec lifted = fdetail::lift(rad.coeffs(), merged.get());
        if (auto root = fdetail::sqrt_in(lifted, merged.get())) {
            gens.push_back(FieldElem::from_parts(merged, std::move(*root)));
            continue;
        }
        int nd = tower_depth(merged.get()) + 1;
        if (nd > max_tower_depth())
            fail(ErrKind::TowerLimitExceeded,
                 "tower merge exceeds depth limit " + std::to_string(max_tower_depth()));
        auto node = std::make_shared<Tower>();
        node->base = merged;
        node->radicand = std::move(lifted);
        node->depth = nd;
        merged = std::move(node);
        size_t h = size_t(1) << (nd - 1);
        fdetail::Vec g(h, Rational(0));
        g.push_back(Rational(1));
        g.resize(2 * h, Rational(0));
        gens.push_back(FieldElem::from_parts(merged, std::move(g)));
    }

    FieldElem image = embed(embed, y.coeffs_, y.depth());
    return {merged, fdetail::lift(image.coeffs(), merged.get())};
}

} // namespace equicut
