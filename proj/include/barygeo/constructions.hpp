#pragma once

#include <array>
#include <variant>

#include "barygeo/centers.hpp"
#include "barygeo/circles.hpp"

namespace barygeo {

template <class S>
struct CevianTriple {
    HPoint<S> X, Y, Z;  // traces on BC, CA, AB
};

template <class S>
CevianTriple<S> cevian_triangle(const HPoint<S>& p) {
    using T = scalar_traits<S>;
    S sc = detail::tri_scale<S>(p.x, p.y, p.z);
    if (T::is_zero(p.x, sc) || T::is_zero(p.y, sc) || T::is_zero(p.z, sc))
        throw geometry_error("trace degenerates to vertex");
    return {canon(HPoint<S>{S(0), p.y, p.z}), canon(HPoint<S>{p.x, S(0), p.z}),
            canon(HPoint<S>{p.x, p.y, S(0)})};
}

// Second intersections of AQ, BQ, CQ with the circumcircle:
// A' = (-a^2 vw : v(b^2 w + c^2 v) : w(b^2 w + c^2 v)) and cyclically.
template <class S>
std::array<HPoint<S>, 3> circumcevian_triangle(const TriangleMetric<S>& t, const HPoint<S>& q) {
    using T = scalar_traits<S>;
    S sc = detail::tri_scale<S>(q.x, q.y, q.z);
    int zeros = T::is_zero(q.x, sc) + T::is_zero(q.y, sc) + T::is_zero(q.z, sc);
    if (zeros >= 2) throw geometry_error("circumcevian undefined at vertex");
    S a2 = t.a() * t.a(), b2 = t.b() * t.b(), c2 = t.c() * t.c();
    const S& u = q.x;
    const S& v = q.y;
    const S& w = q.z;
    S fa = b2 * w + c2 * v;
    S fb = c2 * u + a2 * w;
    S fc = a2 * v + b2 * u;
    return {canon(HPoint<S>{-a2 * v * w, v * fa, w * fa}),
            canon(HPoint<S>{u * fb, -b2 * w * u, w * fb}),
            canon(HPoint<S>{u * fc, v * fc, -c2 * u * v})};
}

template <class S>
struct BisectorFeet {
    HPoint<S> X, Y, Z;     // internal feet
    HPoint<S> Xp, Yp, Zp;  // external feet; infinite for an isoceles pair
};

template <class S>
BisectorFeet<S> bisector_feet(const TriangleMetric<S>& t) {
    const S& a = t.a();
    const S& b = t.b();
    const S& c = t.c();
    return {canon(HPoint<S>{S(0), b, c}),  canon(HPoint<S>{a, S(0), c}),
            canon(HPoint<S>{a, b, S(0)}),  canon(HPoint<S>{S(0), b, S(-c)}),
            canon(HPoint<S>{a, S(0), S(-c)}), canon(HPoint<S>{a, S(-b), S(0)})};
}

// Apollonius circle through the given vertex (0 = A, 1 = B, 2 = C): the
// circle through the vertex and both bisector feet on the opposite side.
template <class S>
Circle<S> apollonius_circle(const TriangleMetric<S>& t, int vertex) {
    using T = scalar_traits<S>;
    BisectorFeet<S> feet = bisector_feet(t);
    S diff = (vertex == 0) ? S(t.b() - t.c()) : (vertex == 1) ? S(t.c() - t.a()) : S(t.a() - t.b());
    if (T::is_zero(diff, S(t.a() + t.b() + t.c())))
        throw geometry_error("Apollonius circle degenerates to a line");
    HPoint<S> v = (vertex == 0) ? HPoint<S>{S(1), S(0), S(0)}
                 : (vertex == 1) ? HPoint<S>{S(0), S(1), S(0)}
                                 : HPoint<S>{S(0), S(0), S(1)};
    const HPoint<S>& in = (vertex == 0) ? feet.X : (vertex == 1) ? feet.Y : feet.Z;
    const HPoint<S>& ex = (vertex == 0) ? feet.Xp : (vertex == 1) ? feet.Yp : feet.Zp;
    return circle_through_3(t, v, in, ex);
}

template <class S>
HPoint<S> central_similarity(const TriangleMetric<S>& t, const HPoint<S>& center, const S& k,
                             const HPoint<S>& p) {
    CartesianPoint<S> c = t.to_cartesian(center);
    CartesianPoint<S> e = t.to_cartesian(p);
    return t.from_cartesian(c + k * (e - c));
}

// The intersections with the opposite sidelines of the perpendiculars at p
// to the lines Ap, Bp, Cp. Feet can be points at infinity (p = H).
template <class S>
std::array<HPoint<S>, 3> orthotransversal_points(const TriangleMetric<S>& t, const HPoint<S>& p) {
    std::array<HPoint<S>, 3> vertices = {HPoint<S>{S(1), S(0), S(0)}, HPoint<S>{S(0), S(1), S(0)},
                                         HPoint<S>{S(0), S(0), S(1)}};
    std::array<HLine<S>, 3> sidelines = {HLine<S>{S(1), S(0), S(0)}, HLine<S>{S(0), S(1), S(0)},
                                         HLine<S>{S(0), S(0), S(1)}};
    CartesianPoint<S> e = t.to_cartesian(p);
    std::array<HPoint<S>, 3> feet;
    for (int i = 0; i < 3; ++i) {
        if (equal(p, vertices[i])) throw geometry_error("orthotransversal undefined at vertex");
        CartesianPoint<S> dir = e - t.to_cartesian(vertices[i]);
        HLine<S> perp = t.from_cart_line(cart_line_normal(e, dir));
        feet[i] = meet(perp, sidelines[i]);
    }
    return feet;
}

template <class S>
HLine<S> orthotransversal(const TriangleMetric<S>& t, const HPoint<S>& p) {
    std::array<HPoint<S>, 3> feet = orthotransversal_points(t, p);
    if (!collinear(feet[0], feet[1], feet[2]))
        throw geometry_error("orthotransversal feet not collinear");
    if (!equal(feet[0], feet[1])) return join(feet[0], feet[1]);
    if (!equal(feet[0], feet[2])) return join(feet[0], feet[2]);
    throw geometry_error("orthotransversal degenerates to a point");
}

template <class S>
HPoint<S> orthocorrespondent(const TriangleMetric<S>& t, const HPoint<S>& p) {
    return tripole(orthotransversal(t, p));
}

// --- Inversion ----------------------------------------------------------------

template <class S>
struct Inversion {
    CartesianPoint<S> center;
    S power{};
};

// Inversion in the incircle: center I, power r^2.
template <class S>
Inversion<S> incircle_inversion(const TriangleMetric<S>& t) {
    return {t.to_cartesian(named_center(t, CenterId::I)), t.inradius2()};
}

template <class S>
CartesianPoint<S> invert_point(const Inversion<S>& inv, const CartesianPoint<S>& p) {
    S d2 = distance2(p, inv.center);
    if (scalar_traits<S>::is_zero(d2, dot(p, p) + dot(inv.center, inv.center) + S(1)))
        throw geometry_error("inversion undefined at its center");
    S f = inv.power / d2;
    return inv.center + f * (p - inv.center);
}

template <class S>
using CircLine = std::variant<CCircle<S>, CartLine<S>>;

template <class S>
CircLine<S> invert_circline(const Inversion<S>& inv, const CircLine<S>& obj) {
    using T = scalar_traits<S>;
    if (std::holds_alternative<CartLine<S>>(obj)) {
        const CartLine<S>& l = std::get<CartLine<S>>(obj);
        S e = l.c - (l.a * inv.center.x + l.b * inv.center.y);
        S sc = T::abs(l.c) + T::abs(S(l.a * inv.center.x)) + T::abs(S(l.b * inv.center.y));
        if (T::is_zero(e, sc)) return obj;  // line through the center maps to itself
        // Image: circle through the center with center c0 + power*n/(2e).
        S f = inv.power / (2 * e);
        CartesianPoint<S> k{inv.center.x + f * l.a, inv.center.y + f * l.b};
        return CCircle<S>{k, f * f * (l.a * l.a + l.b * l.b)};
    }
    const CCircle<S>& c = std::get<CCircle<S>>(obj);
    S pi = cart_power(c, inv.center);
    S sc = distance2(c.center, inv.center) + T::abs(c.r2);
    if (T::is_zero(pi, sc)) {
        // Circle through the center maps to the line (m-c0).(X-c0) = power/2.
        CartesianPoint<S> n = c.center - inv.center;
        return CartLine<S>{n.x, n.y, dot(n, inv.center) + inv.power / 2};
    }
    S f = inv.power / pi;
    CartesianPoint<S> k = inv.center + f * (c.center - inv.center);
    return CircLine<S>{CCircle<S>{k, f * f * c.r2}};
}

// Barycentric-level wrapper: inverts a circumform circle or degenerate line
// and returns the image bound to the same reference metric.
template <class S>
Circle<S> invert_circle(const TriangleMetric<S>& t, const Inversion<S>& inv, const Circle<S>& c) {
    CircLine<S> obj;
    if (c.is_degenerate_line())
        obj = t.to_cart_line(c.line());
    else
        obj = to_cartesian_circle(t, c);
    CircLine<S> img = invert_circline(inv, obj);
    if (std::holds_alternative<CartLine<S>>(img))
        return Circle<S>::degenerate_line(t, t.from_cart_line(std::get<CartLine<S>>(img)));
    return from_cartesian_circle(t, std::get<CCircle<S>>(img));
}

}  // namespace barygeo
