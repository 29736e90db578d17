#pragma once

#include "barygeo/checks.hpp"

namespace barygeo {

// 3x3 determinant whose vanishing characterizes Q on the circumconic K of
// the general statement:
//   | a^2 qr   b^2 rp   c^2 pq |
//   | a^2 vw   b^2 wu   c^2 uv |
//   | q+r      r+p      p+q    |
template <class S>
S delta_determinant(const TriangleMetric<S>& t, const HPoint<S>& p, const HPoint<S>& q) {
    S a2 = t.a() * t.a(), b2 = t.b() * t.b(), c2 = t.c() * t.c();
    S v, sc;
    detail::det3<S>({a2 * p.y * p.z, b2 * p.z * p.x, c2 * p.x * p.y,
                     a2 * q.y * q.z, b2 * q.z * q.x, c2 * q.x * q.y,
                     p.y + p.z, p.z + p.x, p.x + p.y},
                    v, sc);
    return v;
}

template <class S>
bool delta_vanishes(const TriangleMetric<S>& t, const HPoint<S>& p, const HPoint<S>& q) {
    S a2 = t.a() * t.a(), b2 = t.b() * t.b(), c2 = t.c() * t.c();
    S v, sc;
    detail::det3<S>({a2 * p.y * p.z, b2 * p.z * p.x, c2 * p.x * p.y,
                     a2 * q.y * q.z, b2 * q.z * q.x, c2 * q.x * q.y,
                     p.y + p.z, p.z + p.x, p.x + p.y},
                    v, sc);
    return scalar_traits<S>::is_zero(v, sc);
}

// Closed-form radical axis of the circles (BYB'), (CZC'):
//   r_BC = c^2 q (vx - uy) / ((p+q)(vp - uq)) - b^2 r (uz - wx) / ((r+p)(ur - wp)).
template <class S>
HLine<S> radical_axis_rBC(const TriangleMetric<S>& t, const HPoint<S>& p, const HPoint<S>& q) {
    using T = scalar_traits<S>;
    const S& pp = p.x;
    const S& qq = p.y;
    const S& rr = p.z;
    const S& u = q.x;
    const S& v = q.y;
    const S& w = q.z;
    S scale = detail::tri_scale<S>(pp, qq, rr) * detail::tri_scale<S>(u, v, w);
    S dc = (pp + qq) * (v * pp - u * qq);
    S db = (rr + pp) * (u * rr - w * pp);
    if (T::is_zero(S(v * pp - u * qq), scale) || T::is_zero(S(u * rr - w * pp), scale) ||
        T::is_zero(S(pp + qq), detail::tri_scale<S>(pp, qq, rr)) ||
        T::is_zero(S(rr + pp), detail::tri_scale<S>(pp, qq, rr)))
        throw geometry_error("degenerate: Q on cevian line of P");
    S fc = t.c() * t.c() * qq / dc;
    S fb = t.b() * t.b() * rr / db;
    return canon(HLine<S>{fc * v + fb * w, -fc * u, -fb * u});
}

// P = H is excluded from the general statement: both the isogonal conjugate
// and the complement of H are O, so its characterizing conic is undefined.
template <class S>
CheckReport check_theorem10(const TriangleMetric<S>& t, const HPoint<S>& p, const HPoint<S>& q) {
    using T = scalar_traits<S>;
    if (t.is_equilateral()) throw geometry_error("equilateral: Euler line undefined");
    {
        S scp = detail::tri_scale<S>(p.x, p.y, p.z);
        if (T::is_zero(p.x, scp) + T::is_zero(p.y, scp) + T::is_zero(p.z, scp) >= 2)
            throw geometry_error("P must differ from the triangle vertices");
        S scq = detail::tri_scale<S>(q.x, q.y, q.z);
        if (T::is_zero(q.x, scq) + T::is_zero(q.y, scq) + T::is_zero(q.z, scq) >= 2)
            throw geometry_error("Q must differ from the triangle vertices");
    }
    if (equal(p, named_center(t, CenterId::H)))
        throw geometry_error("P = H undefined here: use the p-equals-h check");

    auto rb = ReportBuilder::for_backend<S>("theorem10");
    rb.input("sides", sides_json(t)).input("P", point_json(p)).input("Q", point_json(q));

    HPoint<S> pstar, pc, r;
    try {
        pstar = isogonal_conjugate(t, p);
        pc = complement(p);
        r = isogonal_conjugate(t, pc);
    } catch (const geometry_error& e) {
        rb.degenerate(e.what());
        return rb.finish();
    }
    rb.witness("R", point_json(r));

    HLine<S> lstar;
    try {
        lstar = join(pstar, pc);
    } catch (const geometry_error& e) {
        rb.degenerate(std::string("P* = P_C: ") + e.what());
        return rb.finish();
    }

    // Degenerate case: the line P*P_C passes through a vertex, and the conic
    // splits off the line APR.
    std::array<HPoint<S>, 3> verts{HPoint<S>{S(1), S(0), S(0)}, HPoint<S>{S(0), S(1), S(0)},
                                   HPoint<S>{S(0), S(0), S(1)}};
    int vertex_on_line = -1;
    for (int i = 0; i < 3; ++i)
        if (on_line(lstar, verts[i])) { vertex_on_line = i; break; }

    TheoremCircles<S> tc;
    PencilVerdict<S> verdict;
    try {
        tc = theorem_circles(t, p, q);
        verdict = coaxal(tc.circles[0], tc.circles[1], tc.circles[2]);
    } catch (const geometry_error& e) {
        rb.degenerate(e.what());
        return rb.finish();
    }
    rb.witness("coaxal", verdict.coaxal);

    if (vertex_on_line >= 0) {
        rb.witness("conic_degenerates_through_vertex", std::string(1, "ABC"[vertex_on_line]));
        HLine<S> line_apr = equal(p, r) ? join(verts[vertex_on_line], p) : join(p, r);
        rb.sub("line_APR_through_vertex", on_line(line_apr, verts[vertex_on_line]));
        bool q_on = on_line(line_apr, q);
        rb.sub("iff_coaxal_equals_line_membership", verdict.coaxal == q_on);
        if (verdict.coaxal && !verdict.degenerate_line_pencil)
            rb.sub("axis_is_line_APR", equal(*verdict.common_radical_axis, line_apr));
        rb.sub("delta_matches_membership", delta_vanishes(t, p, q) == q_on);
        return rb.finish();
    }

    Conic<S> conic = circumconic_from_line(t, lstar);
    rb.witness("conic", conic_json(conic));
    bool on_k = on_conic(conic, q);
    rb.witness("Q_on_conic", on_k);
    rb.sub("P_on_conic", on_conic(conic, p));
    rb.sub("R_on_conic", on_conic(conic, r));
    rb.sub("iff_coaxal_equals_conic_membership", verdict.coaxal == on_k);
    rb.sub("delta_matches_membership", delta_vanishes(t, p, q) == on_k);

    // Q is always the radical center of the three circles.
    if (!tc.circles[1].is_degenerate_line() && !tc.circles[2].is_degenerate_line()) {
        try {
            rb.sub("Q_on_pairwise_radical_axis", on_line(radical_axis(tc.circles[1], tc.circles[2]), q));
        } catch (const geometry_error& e) {
            rb.witness("radical_center_skipped", e.what());
        }
    }

    if (verdict.coaxal && !verdict.degenerate_line_pencil) {
        const HLine<S>& axis = *verdict.common_radical_axis;
        rb.witness("radical_axis", line_json(axis));
        rb.sub("R_on_radical_axis", on_line(axis, r));
        if (!equal(q, r)) {
            rb.sub("axis_is_QR", equal(axis, join(q, r)));
        } else {
            // Q = R: the axis is tangent to the conic at R.
            HPoint<S> second = quad_line_second_intersection(QuadForm<S>::from_conic(conic), axis, r);
            rb.sub("axis_tangent_at_R", equal(second, r));
        }
    }

    // Closed-form t-parameter of the circle (AXA') and the closed-form
    // radical axis, both against the constructed objects. With P = (p:q:r)
    // and Q = (u:v:w): t = -a^2 qr / ((q+r)(wq - vr)).
    {
        S dwv = q.z * p.y - q.y * p.z;  // wq - vr
        S sc = detail::tri_scale<S>(p.x, p.y, p.z) * detail::tri_scale<S>(q.x, q.y, q.z);
        if (!T::is_zero(dwv, sc) &&
            !T::is_zero(S(p.y + p.z), detail::tri_scale<S>(p.x, p.y, p.z)) &&
            !tc.circles[0].is_degenerate_line()) {
            S tval = -(t.a() * t.a() * p.y * p.z) / ((p.y + p.z) * dwv);
            Circle<S> from_t = Circle<S>::circum_form(t, S(0), tval * q.z, S(-tval * q.y));
            rb.sub("t_parameter_circle_matches", circles_equal(from_t, tc.circles[0]));
            rb.witness("t", scalar_json(tval));
        } else {
            rb.witness("t_parameter_skipped", "wq - vr = 0 or trace at infinity");
        }
    }
    try {
        HLine<S> closed = radical_axis_rBC(t, p, q);
        if (!tc.circles[1].is_degenerate_line() && !tc.circles[2].is_degenerate_line())
            rb.sub("rBC_closed_form_matches", equal(closed, radical_axis(tc.circles[1], tc.circles[2])));
    } catch (const geometry_error& e) {
        rb.witness("rBC_skipped", e.what());
    }
    return rb.finish();
}

// P = H: the circles are always coaxal with radical axis QH, and the power
// of H with respect to each is half its circumcircle power.
template <class S>
CheckReport check_pH_remark(const TriangleMetric<S>& t, const HPoint<S>& q) {
    using T = scalar_traits<S>;
    if (t.is_equilateral()) throw geometry_error("equilateral: Euler line undefined");
    HPoint<S> h = named_center(t, CenterId::H);
    {
        S sc = detail::tri_scale<S>(h.x, h.y, h.z);
        if (T::is_zero(h.x, sc) || T::is_zero(h.y, sc) || T::is_zero(h.z, sc))
            throw geometry_error("right triangle: orthocenter lies on a sideline");
        S scq = detail::tri_scale<S>(q.x, q.y, q.z);
        if (T::is_zero(q.x, scq) + T::is_zero(q.y, scq) + T::is_zero(q.z, scq) >= 2)
            throw geometry_error("Q must differ from the triangle vertices");
    }
    auto rb = ReportBuilder::for_backend<S>("p-equals-h");
    rb.input("sides", sides_json(t)).input("Q", point_json(q));

    TheoremCircles<S> tc;
    PencilVerdict<S> verdict;
    try {
        tc = theorem_circles(t, h, q);
        verdict = coaxal(tc.circles[0], tc.circles[1], tc.circles[2]);
    } catch (const geometry_error& e) {
        rb.degenerate(e.what());
        return rb.finish();
    }
    rb.sub("coaxal_for_arbitrary_Q", verdict.coaxal);
    if (verdict.degenerate_line_pencil) {
        // Q on every cevian line of H, i.e. Q = H: the circles collapse to
        // the altitude pencil through H.
        rb.degenerate("circles degenerate to the altitude pencil");
        return rb.finish();
    }
    if (verdict.coaxal) {
        const HLine<S>& axis = *verdict.common_radical_axis;
        rb.witness("radical_axis", line_json(axis));
        if (!equal(q, h))
            rb.sub("axis_is_QH", equal(axis, join(q, h)));
        else
            rb.witness("axis_note", "Q = H");
    }
    // Half-power identity on the proper circle members; a member degenerates
    // exactly when Q lies on the corresponding altitude line of H.
    S circ_power = power(t, circumcircle(t), h);
    bool half_ok = true;
    int proper = 0;
    for (int i = 0; i < 3; ++i) {
        if (tc.circles[i].is_degenerate_line()) continue;
        ++proper;
        S pw = power(t, tc.circles[i], h);
        half_ok = half_ok && T::is_zero(S(2 * pw - circ_power), S(T::abs(pw) + T::abs(circ_power) + 1));
    }
    if (proper > 0)
        rb.sub("H_power_is_half_circumcircle_power", half_ok);
    if (proper < 3)
        rb.witness("degenerate_members", 3 - proper);
    return rb.finish();
}

}  // namespace barygeo
