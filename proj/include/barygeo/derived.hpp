#pragma once

#include <array>

#include "barygeo/constructions.hpp"

namespace barygeo {

// A triangle derived from three non-collinear points of the reference
// configuration (triangle IBC, the excentral triangle, the inverted triangle
// A1B1C1, ...). Its side lengths are generally irrational even over a
// Heronian reference, so exact work stays at the level of Cartesian vertices
// and squared lengths; the few operations that need the lengths themselves
// go through an explicit float downgrade.
template <class S>
class DerivedTriangle {
public:
    DerivedTriangle(const TriangleMetric<S>& ref, const HPoint<S>& p1, const HPoint<S>& p2,
                    const HPoint<S>& p3)
        : ref_(&ref), refbary_{p1, p2, p3} {
        if (collinear(p1, p2, p3)) throw geometry_error("derived triangle is degenerate");
        v_[0] = ref.to_cartesian(p1);
        v_[1] = ref.to_cartesian(p2);
        v_[2] = ref.to_cartesian(p3);
        side2_[0] = distance2(v_[1], v_[2]);
        side2_[1] = distance2(v_[2], v_[0]);
        side2_[2] = distance2(v_[0], v_[1]);
    }

    DerivedTriangle(const TriangleMetric<S>& ref, const std::array<CartesianPoint<S>, 3>& verts)
        : ref_(&ref), v_(verts) {
        side2_[0] = distance2(v_[1], v_[2]);
        side2_[1] = distance2(v_[2], v_[0]);
        side2_[2] = distance2(v_[0], v_[1]);
        S twice_area = cross2<S>(v_[1] - v_[0], v_[2] - v_[0]);
        if (scalar_traits<S>::is_zero(twice_area, side2_[0] + side2_[1] + side2_[2]))
            throw geometry_error("derived triangle is degenerate");
        for (int i = 0; i < 3; ++i) refbary_[i] = ref.from_cartesian(v_[i]);
    }

    const TriangleMetric<S>& reference() const { return *ref_; }
    const CartesianPoint<S>& vertex(int i) const { return v_[i]; }
    const HPoint<S>& vertex_reference_bary(int i) const { return refbary_[i]; }
    const S& side2(int i) const { return side2_[i]; }  // squared length opposite vertex i

    bool is_equilateral() const {
        using T = scalar_traits<S>;
        S sc = side2_[0] + side2_[1] + side2_[2];
        return T::is_zero(S(side2_[0] - side2_[1]), sc) && T::is_zero(S(side2_[1] - side2_[2]), sc);
    }

    bool is_acute() const {
        // a^2 < b^2 + c^2 cyclically.
        return side2_[0] < side2_[1] + side2_[2] && side2_[1] < side2_[2] + side2_[0] &&
               side2_[2] < side2_[0] + side2_[1];
    }

    CartLine<S> side_line(int i) const {
        return cart_line_through(v_[(i + 1) % 3], v_[(i + 2) % 3]);
    }

    CartesianPoint<S> centroid() const {
        return {(v_[0].x + v_[1].x + v_[2].x) / 3, (v_[0].y + v_[1].y + v_[2].y) / 3};
    }

    CartesianPoint<S> circumcenter() const {
        CartLine<S> pb1 = perpendicular_bisector(v_[0], v_[1]);
        CartLine<S> pb2 = perpendicular_bisector(v_[1], v_[2]);
        return cart_meet(pb1, pb2);
    }

    CartesianPoint<S> orthocenter() const {
        CartLine<S> alt1 = altitude(0);
        CartLine<S> alt2 = altitude(1);
        return cart_meet(alt1, alt2);
    }

    CartesianPoint<S> nine_point_center() const {
        CartesianPoint<S> o = circumcenter();
        CartesianPoint<S> h = orthocenter();
        return {(o.x + h.x) / 2, (o.y + h.y) / 2};
    }

    // Barycentrics (a^2 : b^2 : c^2) of this triangle, in Cartesian form.
    CartesianPoint<S> symmedian_point() const {
        S sum = side2_[0] + side2_[1] + side2_[2];
        CartesianPoint<S> weighted = side2_[0] * v_[0] + (side2_[1] * v_[1] + side2_[2] * v_[2]);
        S inv = S(1) / sum;
        return inv * weighted;
    }

    CartLine<S> altitude(int i) const {
        CartesianPoint<S> d = v_[(i + 2) % 3] - v_[(i + 1) % 3];
        return cart_line_normal(v_[i], d);
    }

    CCircle<S> circumcircle() const {
        CartesianPoint<S> o = circumcenter();
        return {o, distance2(o, v_[0])};
    }

    CartLine<S> euler_line_cart() const {
        CartesianPoint<S> o = circumcenter();
        CartesianPoint<S> h = orthocenter();
        if (cart_equal(o, h)) throw geometry_error("Euler line undefined");
        return cart_line_through(o, h);
    }

    // Apollonius circle through vertex i: locus |P V_{i+1}| / |P V_{i+2}|
    // = const, built from squared side lengths only.
    CCircle<S> apollonius_circle(int i) const {
        using T = scalar_traits<S>;
        const CartesianPoint<S>& B = v_[(i + 1) % 3];
        const CartesianPoint<S>& C = v_[(i + 2) % 3];
        S c2 = side2_[(i + 2) % 3];  // |V_i V_{i+1}|^2
        S b2 = side2_[(i + 1) % 3];  // |V_i V_{i+2}|^2
        S diff = b2 - c2;
        if (T::is_zero(diff, b2 + c2))
            throw geometry_error("Apollonius circle degenerates to a line");
        // b2 |P-B|^2 - c2 |P-C|^2 = 0.
        CartesianPoint<S> weighted = b2 * B - (c2 * C);
        S inv = S(1) / diff;
        CartesianPoint<S> center = inv * weighted;
        S r2 = dot(center, center) - (b2 * dot(B, B) - c2 * dot(C, C)) / diff;
        return {center, r2};
    }

    // Derived-triangle barycentrics of a Cartesian point (areal coordinates).
    HPoint<S> barycentric(const CartesianPoint<S>& p) const {
        S x = cross2<S>(v_[1] - p, v_[2] - p);
        S y = cross2<S>(v_[2] - p, v_[0] - p);
        S z = cross2<S>(v_[0] - p, v_[1] - p);
        return canon(HPoint<S>{x, y, z});
    }

    CartesianPoint<S> from_barycentric(const HPoint<S>& p) const {
        HPoint<S> n = normalize(p);
        return {n.x * v_[0].x + n.y * v_[1].x + n.z * v_[2].x,
                n.x * v_[0].y + n.y * v_[1].y + n.z * v_[2].y};
    }

    // Derived-triangle barycentric line -> Cartesian line (affine solve).
    CartLine<S> line_from_barycentric(const HLine<S>& l) const {
        // f(v0)=l, f(v1)=m, f(v2)=n with f(P) = alpha x + beta y + gamma.
        S d = cross2<S>(v_[1] - v_[0], v_[2] - v_[0]);
        S alpha = (l.l * (v_[1].y - v_[2].y) + l.m * (v_[2].y - v_[0].y) + l.n * (v_[0].y - v_[1].y)) / d;
        S beta = (l.l * (v_[2].x - v_[1].x) + l.m * (v_[0].x - v_[2].x) + l.n * (v_[1].x - v_[0].x)) / d;
        S gamma = l.l - alpha * v_[0].x - beta * v_[0].y;
        return {alpha, beta, -gamma};
    }

    HLine<S> line_to_barycentric(const CartLine<S>& cl) const {
        auto f = [&](const CartesianPoint<S>& p) -> S { return cl.a * p.x + cl.b * p.y - cl.c; };
        return canon(HLine<S>{f(v_[0]), f(v_[1]), f(v_[2])});
    }

    // Orthotransversal of this triangle with respect to a Cartesian point.
    CartLine<S> orthotransversal(const CartesianPoint<S>& p) const {
        std::array<CartesianPoint<S>, 3> feet;
        for (int i = 0; i < 3; ++i) {
            if (cart_equal(p, v_[i])) throw geometry_error("orthotransversal undefined at vertex");
            CartLine<S> perp = cart_line_normal(p, p - v_[i]);
            feet[i] = cart_meet(perp, side_line(i));
        }
        CartLine<S> line = cart_line_through(feet[0], feet[1]);
        if (!on_cart_line(line, feet[2]))
            throw geometry_error("orthotransversal feet not collinear");
        return line;
    }

    // Float-backend metric of this triangle; the side lengths are square
    // roots, so exactness cannot be promised here. Callers record the
    // backend downgrade in their report.
    TriangleMetric<double> metric_float() const {
        using T = scalar_traits<S>;
        return TriangleMetric<double>::from_sides(std::sqrt(T::to_double(side2_[0])),
                                                  std::sqrt(T::to_double(side2_[1])),
                                                  std::sqrt(T::to_double(side2_[2])));
    }

private:
    static CartLine<S> perpendicular_bisector(const CartesianPoint<S>& p,
                                              const CartesianPoint<S>& q) {
        CartesianPoint<S> mid{(p.x + q.x) / 2, (p.y + q.y) / 2};
        return cart_line_normal(mid, q - p);
    }

    const TriangleMetric<S>* ref_;
    std::array<HPoint<S>, 3> refbary_{};
    std::array<CartesianPoint<S>, 3> v_{};
    std::array<S, 3> side2_{};
};

template <class S>
DerivedTriangle<S> derived_triangle(const TriangleMetric<S>& t, const HPoint<S>& p1,
                                    const HPoint<S>& p2, const HPoint<S>& p3) {
    return DerivedTriangle<S>(t, p1, p2, p3);
}

// Euler line of a derived triangle, transferred to reference barycentrics.
template <class S>
HLine<S> euler_line(const DerivedTriangle<S>& dt) {
    return dt.reference().from_cart_line(dt.euler_line_cart());
}

// Euler line of the reference triangle itself.
template <class S>
HLine<S> euler_line(const TriangleMetric<S>& t) {
    if (t.is_equilateral()) throw geometry_error("Euler line undefined");
    return join(named_center(t, CenterId::O), named_center(t, CenterId::H));
}

}  // namespace barygeo
