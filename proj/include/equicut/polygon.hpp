#pragma once

// Simple polygons with exact vertices.
//
// Canonical form, established by Polygon::make: consecutive duplicates and
// straight-through (collinear) vertices removed, counter-clockwise
// orientation, vertex list rotated so the lexicographically smallest vertex
// comes first. Simplicity is checked exactly (O(n^2) segment pairs), so every
// downstream predicate may assume a non-degenerate simple CCW polygon.
//
// Boundary contact never counts as overlap: only interior measure matters.

#include <optional>
#include <span>
#include <vector>

#include "equicut/geometry.hpp"

namespace equicut {

// Raw shoelace over an arbitrary closed ring: 1/2 * sum (x_i y_i+1 - x_i+1 y_i).
inline FieldElem signed_area(std::span<const Point> ring) {
    FieldElem twice(0);
    size_t n = ring.size();
    for (size_t i = 0; i < n; ++i) {
        const Point& a = ring[i];
        const Point& b = ring[(i + 1) % n];
        twice += a.x * b.y - b.x * a.y;
    }
    return twice / FieldElem(2);
}

class Polygon {
public:
    static Polygon make(std::vector<Point> pts) {
        if (pts.size() < 3) fail(ErrKind::DegenerateInput, "polygon needs at least 3 vertices");

        // drop duplicate neighbours and straight-through vertices (cyclically);
        // exact backtracks are rejected below by the simplicity test
        bool changed = true;
        while (changed && pts.size() >= 3) {
            changed = false;
            for (size_t i = 0; i < pts.size(); ++i) {
                const Point& prev = pts[(i + pts.size() - 1) % pts.size()];
                const Point& cur = pts[i];
                const Point& next = pts[(i + 1) % pts.size()];
                if (cur == next || cur == prev ||
                    (orient2d(prev, cur, next) == 0 && dot(cur - prev, next - cur).sign() > 0)) {
                    pts.erase(pts.begin() + i);
                    changed = true;
                    break;
                }
            }
        }
        if (pts.size() < 3) fail(ErrKind::DegenerateInput, "polygon collapsed to a segment");

        FieldElem area = signed_area(pts);
        if (area.is_zero()) fail(ErrKind::DegenerateInput, "polygon has zero area");
        if (area.sign() < 0) std::reverse(pts.begin(), pts.end());

        check_simple(pts);

        size_t start = 0;
        for (size_t i = 1; i < pts.size(); ++i)
            if (lex_less(pts[i], pts[start])) start = i;
        std::rotate(pts.begin(), pts.begin() + start, pts.end());

        Polygon p;
        p.v_ = std::move(pts);
        return p;
    }

    const std::vector<Point>& vertices() const { return v_; }
    size_t size() const { return v_.size(); }
    const Point& operator[](size_t i) const { return v_[i]; }

    FieldElem area() const { return signed_area(v_); } // positive in canonical form

    bool is_convex() const {
        size_t n = v_.size();
        for (size_t i = 0; i < n; ++i)
            if (orient2d(v_[i], v_[(i + 1) % n], v_[(i + 2) % n]) <= 0) return false;
        return true;
    }

    friend bool operator==(const Polygon& a, const Polygon& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Polygon& a, const Polygon& b) { return !(a.v_ == b.v_); }

private:
    static void check_simple(const std::vector<Point>& v) {
        size_t n = v.size();
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = i + 1; j < n; ++j) {
                bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
                if (adjacent) continue;
                if (segments_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n]))
                    fail(ErrKind::DegenerateInput, "polygon is not simple");
            }
        }
    }

    std::vector<Point> v_;
};

struct BBox {
    FieldElem xmin, xmax, ymin, ymax;

    static BBox of(std::span<const Point> pts) {
        BBox b{pts[0].x, pts[0].x, pts[0].y, pts[0].y};
        for (const Point& p : pts.subspan(1)) {
            if (p.x < b.xmin) b.xmin = p.x;
            if (p.x > b.xmax) b.xmax = p.x;
            if (p.y < b.ymin) b.ymin = p.y;
            if (p.y > b.ymax) b.ymax = p.y;
        }
        return b;
    }

    // closed boxes not touching at all
    friend bool disjoint(const BBox& a, const BBox& b) {
        return a.xmax < b.xmin || b.xmax < a.xmin || a.ymax < b.ymin || b.ymax < a.ymin;
    }
};

inline Polygon apply(const RigidMotion& m, const Polygon& p) {
    std::vector<Point> pts;
    pts.reserve(p.size());
    for (const Point& v : p.vertices()) pts.push_back(m.apply(v));
    return Polygon::make(std::move(pts));
}

inline bool point_in_closed_triangle(const Point& p, const Point& a, const Point& b,
                                     const Point& c) {
    return orient2d(a, b, p) >= 0 && orient2d(b, c, p) >= 0 && orient2d(c, a, p) >= 0;
}

// Ear clipping with exact predicates. The returned triangles partition the
// polygon: pairwise interior-disjoint, areas summing exactly to area(p).
inline std::vector<Polygon> triangulate(const Polygon& p) {
    std::vector<Point> ring = p.vertices();
    std::vector<Polygon> out;
    out.reserve(ring.size() - 2);

    while (ring.size() > 3) {
        size_t n = ring.size();

        // clipping can leave a straight-through vertex behind; drop those first
        bool dropped = false;
        for (size_t i = 0; i < n; ++i) {
            if (orient2d(ring[(i + n - 1) % n], ring[i], ring[(i + 1) % n]) == 0) {
                ring.erase(ring.begin() + i);
                dropped = true;
                break;
            }
        }
        if (dropped) continue;

        bool clipped = false;
        for (size_t i = 0; i < n && !clipped; ++i) {
            const Point& prev = ring[(i + n - 1) % n];
            const Point& cur = ring[i];
            const Point& next = ring[(i + 1) % n];
            if (orient2d(prev, cur, next) <= 0) continue; // reflex or flat
            bool blocked = false;
            for (size_t j = 0; j < n && !blocked; ++j) {
                if (j == i || j == (i + n - 1) % n || j == (i + 1) % n) continue;
                if (point_in_closed_triangle(ring[j], prev, cur, next)) blocked = true;
            }
            if (blocked) continue;
            out.push_back(Polygon::make({prev, cur, next}));
            ring.erase(ring.begin() + i);
            clipped = true;
        }
        if (!clipped) fail(ErrKind::Internal, "no ear found in simple polygon");
    }
    out.push_back(Polygon::make({ring[0], ring[1], ring[2]}));
    return out;
}

// Exact intersection of two convex polygons (Sutherland-Hodgman). Empty when
// the interiors are disjoint; boundary-only contact gives empty.
inline std::optional<Polygon> convex_clip(const Polygon& p, const Polygon& q) {
    if (!p.is_convex() || !q.is_convex())
        fail(ErrKind::NonConvexInput, "convex_clip requires convex polygons");

    std::vector<Point> cur = p.vertices();
    size_t nq = q.size();
    for (size_t e = 0; e < nq && !cur.empty(); ++e) {
        const Point& a = q[e];
        const Point& b = q[(e + 1) % nq];
        std::vector<Point> next;
        next.reserve(cur.size() + 1);
        size_t n = cur.size();
        for (size_t i = 0; i < n; ++i) {
            const Point& u = cur[i];
            const Point& w = cur[(i + 1) % n];
            int su = orient2d(a, b, u);
            int sw = orient2d(a, b, w);
            if (su >= 0) next.push_back(u);
            if ((su > 0 && sw < 0) || (su < 0 && sw > 0)) {
                // exact crossing of edge (u, w) with the clip line through (a, b)
                FieldElem ou = cross(b - a, u - a);
                FieldElem ow = cross(b - a, w - a);
                FieldElem t = ou / (ou - ow);
                next.push_back(u + t * (w - u));
            }
        }
        cur = std::move(next);
    }
    if (cur.size() < 3) return std::nullopt;
    if (signed_area(cur).is_zero()) return std::nullopt;
    return Polygon::make(std::move(cur));
}

inline FieldElem clip_area(const Polygon& p, const Polygon& q) {
    auto r = convex_clip(p, q);
    return r ? r->area() : FieldElem(0);
}

// Exact area of the interior intersection of two simple polygons; zero iff
// the interiors are disjoint. Non-convex inputs are triangulated first.
inline FieldElem overlap_area(const Polygon& p, const Polygon& q) {
    if (p.is_convex() && q.is_convex()) return clip_area(p, q);
    FieldElem total(0);
    for (const Polygon& tp : triangulate(p))
        for (const Polygon& tq : triangulate(q)) total += clip_area(tp, tq);
    return total;
}

} // namespace equicut
