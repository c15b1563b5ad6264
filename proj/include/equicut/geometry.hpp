#pragma once

// Exact planar primitives: points, vectors, the orientation predicate, and
// proper rigid motions (rotation + translation, det +1, no reflections).

#include <utility>

#include "equicut/field.hpp"

namespace equicut {

struct Vec2 {
    FieldElem x, y;

    friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    friend Vec2 operator*(const FieldElem& k, const Vec2& v) { return {k * v.x, k * v.y}; }
    friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Vec2& a, const Vec2& b) { return !(a == b); }
};

struct Point {
    FieldElem x, y;

    friend Point operator+(const Point& p, const Vec2& v) { return {p.x + v.x, p.y + v.y}; }
    friend Vec2 operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

inline FieldElem dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline FieldElem cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline FieldElem norm_sq(const Vec2& a) { return dot(a, a); }
inline FieldElem dist_sq(const Point& a, const Point& b) { return norm_sq(b - a); }

// Sign of the signed area of triangle (a, b, c): +1 counter-clockwise.
inline int orient2d(const Point& a, const Point& b, const Point& c) {
    return cross(b - a, c - a).sign();
}

// Lexicographic (x, then y) exact comparison; fixes canonical vertex order.
inline bool lex_less(const Point& a, const Point& b) {
    int cx = FieldElem::compare(a.x, b.x);
    if (cx != 0) return cx < 0;
    return FieldElem::compare(a.y, b.y) < 0;
}

// p maps to (c x - s y + tx, s x + c y + ty). Proper when c^2 + s^2 = 1;
// construction helpers guarantee that, parsed motions are checked by the
// dissection verifier instead.
struct RigidMotion {
    FieldElem c{1}, s{0}, tx{0}, ty{0};

    static RigidMotion identity() { return {}; }

    static RigidMotion translation(FieldElem dx, FieldElem dy) {
        return {FieldElem(1), FieldElem(0), std::move(dx), std::move(dy)};
    }

    static RigidMotion rotation(FieldElem cos_v, FieldElem sin_v) {
        return {std::move(cos_v), std::move(sin_v), FieldElem(0), FieldElem(0)};
    }

    // rotate about `center` by the angle with the given exact cosine/sine
    static RigidMotion rotation_about(const Point& center, const FieldElem& cos_v,
                                      const FieldElem& sin_v) {
        // t = center - R * center
        FieldElem tx = center.x - (cos_v * center.x - sin_v * center.y);
        FieldElem ty = center.y - (sin_v * center.x + cos_v * center.y);
        return {cos_v, sin_v, std::move(tx), std::move(ty)};
    }

    static RigidMotion half_turn_about(const Point& center) {
        return {FieldElem(-1), FieldElem(0), FieldElem(2) * center.x, FieldElem(2) * center.y};
    }

    bool is_proper() const { return c * c + s * s == FieldElem(1); }
    bool is_identity() const {
        return c == FieldElem(1) && s.is_zero() && tx.is_zero() && ty.is_zero();
    }

    Point apply(const Point& p) const {
        return {c * p.x - s * p.y + tx, s * p.x + c * p.y + ty};
    }

    Vec2 rotate(const Vec2& v) const { return {c * v.x - s * v.y, s * v.x + c * v.y}; }

    RigidMotion inverse() const {
        // R^-1 = R(-theta); t' = -R^-1 t
        return {c, -s, -(c * tx + s * ty), s * tx - c * ty};
    }

    friend bool operator==(const RigidMotion& a, const RigidMotion& b) {
        return a.c == b.c && a.s == b.s && a.tx == b.tx && a.ty == b.ty;
    }
};

// apply(compose(m1, m2), p) == m1.apply(m2.apply(p))
inline RigidMotion compose(const RigidMotion& m1, const RigidMotion& m2) {
    return {m1.c * m2.c - m1.s * m2.s,
            m1.s * m2.c + m1.c * m2.s,
            m1.c * m2.tx - m1.s * m2.ty + m1.tx,
            m1.s * m2.tx + m1.c * m2.ty + m1.ty};
}

// For collinear a, b, p: is p within the closed segment [a, b]?
inline bool on_segment(const Point& a, const Point& b, const Point& p) {
    return dot(p - a, p - b).sign() <= 0;
}

// Closed-segment intersection test; touching endpoints count.
inline bool segments_intersect(const Point& p1, const Point& p2, const Point& q1,
                               const Point& q2) {
    int o1 = orient2d(p1, p2, q1);
    int o2 = orient2d(p1, p2, q2);
    int o3 = orient2d(q1, q2, p1);
    int o4 = orient2d(q1, q2, p2);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    if (o1 == 0 && on_segment(p1, p2, q1)) return true;
    if (o2 == 0 && on_segment(p1, p2, q2)) return true;
    if (o3 == 0 && on_segment(q1, q2, p1)) return true;
    if (o4 == 0 && on_segment(q1, q2, p2)) return true;
    return false;
}

} // namespace equicut
