#pragma once

// The rotated-triangle configuration for a rational right triangle, and the
// exact verification of every claim attached to it.
//
// Canonical placement: right angle at C = (0,0), A = (b,0), B = (0,a), so
// A -> B -> C runs counter-clockwise. Rotating ABC by 60 degrees
// counter-clockwise about A and by 60 degrees clockwise about B sends B and A
// to a common point D; every check below is an exact identity in Q(sqrt(3)).
// No trigonometric function is evaluated anywhere on this path; the only
// numeric quantity in the module is the regular-n-gon constant kappa_n, which
// enters the n-gon additivity residual as a certified MPFR interval and never
// influences a verdict.

#include <gmp.h>
#include <mpfr.h>

#include <string>
#include <utility>
#include <vector>

#include "equicut/polygon.hpp"
#include "equicut/report.hpp"

namespace equicut::construction {

struct RightTriangleInput {
    Rational a, b; // cathetus lengths, both > 0
};

struct Configuration {
    Rational a, b;
    Point C, A, B, C1, C2, D;
    FieldElem csq; // a^2 + b^2 exactly; the squared hypotenuse
    Polygon tri_bca;       // the right triangle
    Polygon eq_abd;        // equilateral on the hypotenuse
    Polygon eq_acc1;       // equilateral of side b
    Polygon eq_bcc2;       // equilateral of side a
    Polygon pentagon;      // A B C2 D C1
    Polygon parallelogram; // C2 D C1 C
};

// Assemble a configuration from explicit points. build() goes through here;
// tests reuse it to inject perturbed points.
inline Configuration make_configuration(Rational a, Rational b, Point C, Point A, Point B,
                                        Point C1, Point C2, Point D) {
    Configuration cfg{std::move(a), std::move(b), C, A, B, C1, C2, D,
                      FieldElem(0),
                      Polygon::make({B, C, A}),
                      Polygon::make({A, B, D}),
                      Polygon::make({A, C, C1}),
                      Polygon::make({B, C, C2}),
                      Polygon::make({A, B, C2, D, C1}),
                      Polygon::make({C2, D, C1, C})};
    cfg.csq = FieldElem(cfg.a * cfg.a + cfg.b * cfg.b);
    return cfg;
}

inline Configuration build(const RightTriangleInput& in) {
    if (in.a.sign() <= 0 || in.b.sign() <= 0)
        fail(ErrKind::InvalidInput, "cathetus lengths must be positive");

    FieldElem sqrt3 = sqrt_adjoin(FieldElem(3));
    FieldElem half(Rational(1, 2));
    FieldElem sin60 = half * sqrt3;

    Point C{FieldElem(0), FieldElem(0)};
    Point A{FieldElem(in.b), FieldElem(0)};
    Point B{FieldElem(0), FieldElem(in.a)};

    RigidMotion rot_a = RigidMotion::rotation_about(A, half, sin60);  // +60 at A
    RigidMotion rot_b = RigidMotion::rotation_about(B, half, -sin60); // -60 at B

    Point C1 = rot_a.apply(C);
    Point C2 = rot_b.apply(C);
    Point D = rot_a.apply(B);

    return make_configuration(in.a, in.b, C, A, B, C1, C2, D);
}

namespace cdetail {

inline std::string point_witness(const char* label, const Point& p) {
    return std::string(label) + "=(" + p.x.decimal() + ", " + p.y.decimal() + ")";
}

} // namespace cdetail

// A2 (image of A under the clockwise rotation at B) and B1 (image of B under
// the counter-clockwise rotation at A) must coincide, and equal the stored D.
inline CheckResult check_coincidence(const Configuration& cfg) {
    FieldElem sqrt3 = sqrt_adjoin(FieldElem(3));
    FieldElem half(Rational(1, 2));
    Point B1 = RigidMotion::rotation_about(cfg.A, half, half * sqrt3).apply(cfg.B);
    Point A2 = RigidMotion::rotation_about(cfg.B, half, -(half * sqrt3)).apply(cfg.A);
    bool ok = B1 == A2 && A2 == cfg.D;
    std::string wit = cdetail::point_witness("B1", B1) + "  " + cdetail::point_witness("A2", A2);
    if (!ok)
        wit += "  diff=(" + (B1.x - A2.x).decimal() + ", " + (B1.y - A2.y).decimal() +
               ")  storedD=(" + cfg.D.x.decimal() + ", " + cfg.D.y.decimal() + ")";
    return {"coincidence", ok, wit, ""};
}

// ABD equilateral of squared side a^2+b^2; ACC1 of side b; BCC2 of side a.
inline CheckResult check_equilaterals(const Configuration& cfg) {
    FieldElem asq(cfg.a * cfg.a), bsq(cfg.b * cfg.b);
    bool abd = dist_sq(cfg.A, cfg.B) == cfg.csq && dist_sq(cfg.A, cfg.D) == cfg.csq &&
               dist_sq(cfg.B, cfg.D) == cfg.csq;
    bool acc1 = dist_sq(cfg.A, cfg.C) == bsq && dist_sq(cfg.C, cfg.C1) == bsq &&
                dist_sq(cfg.A, cfg.C1) == bsq;
    bool bcc2 = dist_sq(cfg.B, cfg.C) == asq && dist_sq(cfg.C, cfg.C2) == asq &&
                dist_sq(cfg.B, cfg.C2) == asq;
    std::string wit = "|AD|^2=" + dist_sq(cfg.A, cfg.D).decimal() +
                      " |AC1|^2=" + dist_sq(cfg.A, cfg.C1).decimal() +
                      " |BC2|^2=" + dist_sq(cfg.B, cfg.C2).decimal();
    return {"equilateral_sides", abd && acc1 && bcc2, wit, ""};
}

// BC2D and AC1D are congruent to BCA: equal multisets of squared sides.
inline CheckResult check_congruences(const Configuration& cfg) {
    auto sq_sides = [](const Point& p, const Point& q, const Point& r) {
        std::vector<FieldElem> s{dist_sq(p, q), dist_sq(q, r), dist_sq(r, p)};
        std::sort(s.begin(), s.end());
        return s;
    };
    std::vector<FieldElem> ref = sq_sides(cfg.B, cfg.C, cfg.A);
    std::vector<FieldElem> t1 = sq_sides(cfg.B, cfg.C2, cfg.D);
    std::vector<FieldElem> t2 = sq_sides(cfg.A, cfg.C1, cfg.D);
    bool ok = t1 == ref && t2 == ref;
    std::string wit = "BC2D sides^2={" + t1[0].decimal() + ", " + t1[1].decimal() + ", " +
                      t1[2].decimal() + "}";
    return {"congruent_triangles", ok, wit, ""};
}

// Pentagon ABC2DC1 splits two ways:
//   ABD + BC2D + AC1D  and  ACC1 + BCC2 + BCA + C2DC1C.
inline CheckResult check_pentagon_identity(const Configuration& cfg) {
    FieldElem pent = cfg.pentagon.area();
    FieldElem lhs = cfg.eq_abd.area() + Polygon::make({cfg.B, cfg.C2, cfg.D}).area() +
                    Polygon::make({cfg.A, cfg.C1, cfg.D}).area();
    FieldElem rhs = cfg.eq_acc1.area() + cfg.eq_bcc2.area() + cfg.tri_bca.area() +
                    cfg.parallelogram.area();
    bool ok = pent == lhs && pent == rhs;
    std::string wit = "pentagon=" + pent.decimal() + " sum1=" + lhs.decimal() +
                      " sum2=" + rhs.decimal();
    return {"pentagon_identity", ok, wit, ""};
}

// C2 D C1 C has the parallelogram vector identities and area ab/2 = area(BCA).
inline CheckResult check_parallelogram(const Configuration& cfg) {
    bool vecs = (cfg.D - cfg.C2) == (cfg.C1 - cfg.C) && (cfg.C1 - cfg.D) == (cfg.C - cfg.C2);
    FieldElem par_area = cfg.parallelogram.area();
    FieldElem half_ab(cfg.a * cfg.b / Rational(2));
    bool areas = par_area == half_ab && cfg.tri_bca.area() == half_ab;
    std::string wit = "area=" + par_area.decimal() + " ab/2=" + half_ab.decimal();
    return {"parallelogram", vecs && areas, wit, ""};
}

// Trig-free angle checks: sign of the dot product plus the squared-cosine
// identity 4 dot^2 = 3 |u|^2 |v|^2 pin cos to +sqrt(3)/2 (30 degrees) at C2
// and C1, and to -sqrt(3)/2 (150 degrees) at C.
inline CheckResult check_angles(const Configuration& cfg) {
    auto cos2_is_3_4 = [](const Vec2& u, const Vec2& v) {
        FieldElem d = dot(u, v);
        return FieldElem(4) * d * d == FieldElem(3) * norm_sq(u) * norm_sq(v);
    };
    Vec2 c2c = cfg.C - cfg.C2, c2d = cfg.D - cfg.C2;
    Vec2 c1c = cfg.C - cfg.C1, c1d = cfg.D - cfg.C1;
    Vec2 cc1 = cfg.C1 - cfg.C, cc2 = cfg.C2 - cfg.C;
    bool at_c2 = dot(c2c, c2d).sign() > 0 && cos2_is_3_4(c2c, c2d);
    bool at_c1 = dot(c1c, c1d).sign() > 0 && cos2_is_3_4(c1c, c1d);
    FieldElem dc = dot(cc1, cc2);
    bool at_c = dc.sign() < 0 && cos2_is_3_4(cc1, cc2);
    std::string wit = "dot(C->C1, C->C2)=" + dc.decimal();
    std::string note =
        "angle C1-C-C2 = 150 deg exactly (cos = -sqrt(3)/2; 360-90-60-60 = 150); "
        "the 120 deg sometimes quoted for this angle is inconsistent with the "
        "adjacent 30 deg parallelogram angles at C1 and C2";
    return {"angles", at_c2 && at_c1 && at_c, wit, note};
}

// The theorem, in equilateral-triangle form: area(ABD) = area(ACC1) + area(BCC2),
// plus the squared hypotenuse identity |AD|^2 = a^2 + b^2.
inline CheckResult conclude_pythagoras(const Configuration& cfg) {
    FieldElem lhs = cfg.eq_abd.area();
    FieldElem rhs = cfg.eq_acc1.area() + cfg.eq_bcc2.area();
    bool ok = lhs == rhs && dist_sq(cfg.A, cfg.D) == cfg.csq;
    std::string wit = "area(ABD)=" + lhs.decimal() + " area(ACC1)+area(BCC2)=" + rhs.decimal() +
                      " |AD|^2=" + dist_sq(cfg.A, cfg.D).decimal();
    return {"pythagoras", ok, wit, ""};
}

inline VerificationReport run_checks(const Configuration& cfg) {
    VerificationReport r;
    r.checks.push_back(check_coincidence(cfg));
    r.checks.push_back(check_equilaterals(cfg));
    r.checks.push_back(check_congruences(cfg));
    r.checks.push_back(check_pentagon_identity(cfg));
    r.checks.push_back(check_parallelogram(cfg));
    r.checks.push_back(check_angles(cfg));
    r.checks.push_back(conclude_pythagoras(cfg));
    return r;
}

inline VerificationReport verify(const RightTriangleInput& in) { return run_checks(build(in)); }

namespace cdetail {

inline Rational rational_from_mpfr(mpfr_srcptr v) {
    mpz_t m;
    mpz_init(m);
    mpfr_exp_t e = mpfr_get_z_2exp(m, v); // v = m * 2^e exactly
    std::vector<char> buf(mpz_sizeinbase(m, 10) + 3);
    mpz_get_str(buf.data(), 10, m);
    BigInt bm(buf.data());
    mpz_clear(m);
    if (e >= 0) return Rational(bm * (BigInt(1) << e));
    return Rational::make(bm, BigInt(1) << (-e));
}

} // namespace cdetail

// Certified enclosure of kappa_n = n / (4 tan(pi/n)), the area of the regular
// n-gon of unit side. tan is increasing on (0, pi/3], so directed rounding of
// pi gives a true enclosure.
inline Interval regular_ngon_unit_area(int n, int precision_bits = 128) {
    if (n < 3) fail(ErrKind::InvalidInput, "regular n-gon needs n >= 3");
    if (precision_bits < 16 || precision_bits > 1 << 20)
        fail(ErrKind::InvalidInput, "precision out of range");
    mpfr_t pi_lo, pi_hi, x_lo, x_hi, t_lo, t_hi, d_lo, d_hi, k_lo, k_hi;
    mpfr_inits2(precision_bits, pi_lo, pi_hi, x_lo, x_hi, t_lo, t_hi, d_lo, d_hi, k_lo, k_hi,
                (mpfr_ptr) nullptr);
    mpfr_const_pi(pi_lo, MPFR_RNDD);
    mpfr_const_pi(pi_hi, MPFR_RNDU);
    mpfr_div_ui(x_lo, pi_lo, (unsigned long)n, MPFR_RNDD);
    mpfr_div_ui(x_hi, pi_hi, (unsigned long)n, MPFR_RNDU);
    mpfr_tan(t_lo, x_lo, MPFR_RNDD);
    mpfr_tan(t_hi, x_hi, MPFR_RNDU);
    mpfr_mul_ui(d_lo, t_lo, 4, MPFR_RNDD);
    mpfr_mul_ui(d_hi, t_hi, 4, MPFR_RNDU);
    mpfr_ui_div(k_lo, (unsigned long)n, d_hi, MPFR_RNDD);
    mpfr_ui_div(k_hi, (unsigned long)n, d_lo, MPFR_RNDU);
    Rational lo = cdetail::rational_from_mpfr(k_lo);
    Rational hi = cdetail::rational_from_mpfr(k_hi);
    mpfr_clears(pi_lo, pi_hi, x_lo, x_hi, t_lo, t_hi, d_lo, d_hi, k_lo, k_hi,
                (mpfr_ptr) nullptr);
    return Interval(lo, hi);
}

struct NgonResult {
    bool holds;        // a^2 + b^2 = c^2, decided exactly
    Interval kappa;    // certified enclosure of kappa_n
    Interval residual; // certified enclosure of kappa_n * (a^2 + b^2 - c^2)
};

// Area additivity of regular n-gons of sides a, b, c is equivalent to the
// Pythagorean identity: the n-gon of side s has area kappa_n * s^2 with
// kappa_n > 0, so the verdict is the exact rational test. The residual
// interval is reported as a numeric cross-check only.
inline NgonResult ngon_additivity(const Rational& a, const Rational& b, const Rational& c,
                                  int n, int precision_bits = 128) {
    if (a.sign() <= 0 || b.sign() <= 0 || c.sign() <= 0)
        fail(ErrKind::InvalidInput, "side lengths must be positive");
    Rational diff = a * a + b * b - c * c;
    Interval kappa = regular_ngon_unit_area(n, precision_bits);
    return {diff.is_zero(), kappa, diff * kappa};
}

} // namespace equicut::construction
