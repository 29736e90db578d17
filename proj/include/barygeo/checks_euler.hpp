#pragma once

#include "barygeo/checks.hpp"

namespace barygeo {

namespace detail {

// The Lemma 8 circles: centered on the midlines, through the corresponding
// vertex and through P. Returned in Cartesian form together with the
// altitude feet they necessarily pass through.
template <class S>
struct MidlineCircles {
    std::array<CCircle<S>, 3> circles;
    std::array<CartesianPoint<S>, 3> altitude_feet;
};

template <class S>
MidlineCircles<S> midline_circles(const TriangleMetric<S>& t, const CartesianPoint<S>& p) {
    std::array<CartesianPoint<S>, 3> verts{t.vertexA(), t.vertexB(), t.vertexC()};
    MidlineCircles<S> out;
    for (int i = 0; i < 3; ++i) {
        const CartesianPoint<S>& v = verts[i];
        const CartesianPoint<S>& w1 = verts[(i + 1) % 3];
        const CartesianPoint<S>& w2 = verts[(i + 2) % 3];
        if (cart_equal(p, v)) throw geometry_error("P coincides with a vertex");
        // Midline parallel to the opposite side, through the midpoints of
        // the two adjacent sides.
        CartesianPoint<S> m1{(v.x + w1.x) / 2, (v.y + w1.y) / 2};
        CartesianPoint<S> m2{(v.x + w2.x) / 2, (v.y + w2.y) / 2};
        CartLine<S> midline = cart_line_through(m1, m2);
        CartesianPoint<S> mid_vp{(v.x + p.x) / 2, (v.y + p.y) / 2};
        CartLine<S> bisector = cart_line_normal(mid_vp, p - v);
        CartesianPoint<S> center = cart_meet(midline, bisector);  // throws if parallel
        out.circles[i] = CCircle<S>{center, distance2(center, v)};
        out.altitude_feet[i] = foot_of_perpendicular(cart_line_through(w1, w2), v);
    }
    return out;
}

}  // namespace detail

template <class S>
CheckReport check_lemma8(const TriangleMetric<S>& t, const HPoint<S>& p) {
    using T = scalar_traits<S>;
    auto rb = ReportBuilder::for_backend<S>("lemma8");
    rb.input("sides", sides_json(t)).input("P", point_json(p));
    HPoint<S> h = named_center(t, CenterId::H);
    if (equal(p, h)) throw geometry_error("P = H: every chord through H, radical axis undefined");

    CartesianPoint<S> pc = t.to_cartesian(p);
    detail::MidlineCircles<S> mc;
    try {
        mc = detail::midline_circles(t, pc);
    } catch (const geometry_error& e) {
        rb.degenerate(e.what());
        return rb.finish();
    }

    CartesianPoint<S> hc = t.to_cartesian(h);
    S circ_power = power(t, circumcircle(t), h);
    bool through_p = true, through_feet = true, half_power = true;
    for (int i = 0; i < 3; ++i) {
        through_p = through_p && on_ccircle(mc.circles[i], pc);
        through_feet = through_feet && on_ccircle(mc.circles[i], mc.altitude_feet[i]);
        S pw = cart_power(mc.circles[i], hc);
        half_power = half_power &&
                     T::is_zero(S(2 * pw - circ_power), S(T::abs(pw) + T::abs(circ_power) + 1));
    }
    rb.sub("circles_through_P", through_p);
    rb.sub("circles_through_altitude_feet", through_feet);
    rb.sub("H_power_is_half_circumcircle_power", half_power);

    try {
        CartLine<S> ph = cart_line_through(pc, hc);
        bool axes_ok = true;
        for (int i = 0; i < 3; ++i) {
            CartLine<S> ax = cart_radical_axis(mc.circles[i], mc.circles[(i + 1) % 3]);
            axes_ok = axes_ok && cart_lines_equal(ax, ph);
        }
        rb.sub("pairwise_radical_axes_equal_PH", axes_ok);
    } catch (const geometry_error& e) {
        rb.degenerate(e.what());
    }
    return rb.finish();
}

template <class S>
CheckReport check_lemma9(const TriangleMetric<S>& t, const HPoint<S>& p) {
    using T = scalar_traits<S>;
    auto rb = ReportBuilder::for_backend<S>("lemma9");
    rb.input("sides", sides_json(t)).input("P", point_json(p));
    if (equal(p, named_center(t, CenterId::H)))
        throw geometry_error("P = H: orthotransversal is the line at infinity");

    CartesianPoint<S> pc = t.to_cartesian(p);
    detail::MidlineCircles<S> mc;
    try {
        mc = detail::midline_circles(t, pc);
    } catch (const geometry_error& e) {
        rb.degenerate(e.what());
        return rb.finish();
    }

    // Second intersections of the circles with the sidelines, other than the
    // altitude feet: parametrize from the foot along the side direction.
    std::array<CartesianPoint<S>, 3> verts{t.vertexA(), t.vertexB(), t.vertexC()};
    std::array<CartesianPoint<S>, 3> second;
    for (int i = 0; i < 3; ++i) {
        const CartesianPoint<S>& w1 = verts[(i + 1) % 3];
        const CartesianPoint<S>& w2 = verts[(i + 2) % 3];
        CartesianPoint<S> d = w2 - w1;
        const CartesianPoint<S>& foot = mc.altitude_feet[i];
        // |foot + s d - K|^2 = r^2 with s = 0 a root; the other root is
        // s1 = 2 d.(K - foot)/|d|^2.
        S s1 = 2 * dot(d, mc.circles[i].center - foot) / dot(d, d);
        second[i] = foot + s1 * d;
        if (T::is_zero(s1, S(1))) {
            rb.degenerate("circle tangent to the sideline at the altitude foot");
            return rb.finish();
        }
    }
    CartLine<S> line = cart_line_through(second[0], second[1]);
    rb.sub("Oa_Ob_Oc_collinear", on_cart_line(line, second[2]));
    rb.sub("line_is_orthotransversal",
           equal(t.from_cart_line(line), orthotransversal(t, p)));
    rb.witness("line", line_json(t.from_cart_line(line)));
    return rb.finish();
}

template <class S>
CheckReport check_theorem7(const TriangleMetric<S>& t, const HPoint<S>& p) {
    if (t.is_equilateral()) throw geometry_error("equilateral: Euler line undefined");
    auto rb = ReportBuilder::for_backend<S>("theorem7");
    rb.input("sides", sides_json(t)).input("P", point_json(p));
    HPoint<S> h = named_center(t, CenterId::H);
    if (equal(p, h)) throw geometry_error("P = H: orthotransversal is the line at infinity");

    std::array<HPoint<S>, 3> feet;
    try {
        feet = orthotransversal_points(t, p);
        for (const auto& f : feet)
            if (is_infinite(f)) throw geometry_error("orthotransversal foot at infinity");
    } catch (const geometry_error& e) {
        rb.degenerate(e.what());
        return rb.finish();
    }

    std::array<CartesianPoint<S>, 3> verts{t.vertexA(), t.vertexB(), t.vertexC()};
    std::array<Circle<S>, 3> circles{circumcircle(t), circumcircle(t), circumcircle(t)};
    bool reflections_ok = true;
    for (int i = 0; i < 3; ++i) {
        CartesianPoint<S> center = t.to_cartesian(feet[i]);
        CCircle<S> cc{center, distance2(center, verts[i])};
        // Centered on the sideline and through the vertex, so the circle
        // also passes through the vertex reflection in that sideline.
        CartLine<S> side = cart_line_through(verts[(i + 1) % 3], verts[(i + 2) % 3]);
        reflections_ok = reflections_ok && on_ccircle(cc, reflect_over(side, verts[i]));
        circles[i] = from_cartesian_circle(t, cc);
    }
    rb.sub("circles_contain_vertex_reflections", reflections_ok);

    bool p_on_euler = on_line(euler_line(t), p);
    PencilVerdict<S> verdict;
    try {
        verdict = coaxal(circles[0], circles[1], circles[2]);
    } catch (const geometry_error& e) {
        rb.degenerate(e.what());
        return rb.finish();
    }
    bool o_on_axis = verdict.coaxal && !verdict.degenerate_line_pencil &&
                     on_line(*verdict.common_radical_axis, named_center(t, CenterId::O));
    rb.witness("P_on_euler_line", p_on_euler);
    rb.witness("coaxal", verdict.coaxal);
    rb.sub("iff_euler_line_equals_coaxal_with_O", p_on_euler == (verdict.coaxal && o_on_axis));
    if (verdict.coaxal && !verdict.degenerate_line_pencil)
        rb.witness("radical_axis", line_json(*verdict.common_radical_axis));
    return rb.finish();
}

}  // namespace barygeo
