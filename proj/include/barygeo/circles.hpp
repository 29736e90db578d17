#pragma once

#include <optional>
#include <vector>

#include "barygeo/metric.hpp"

namespace barygeo {

// Circle in circumcircle-normal form over a fixed TriangleMetric:
//
//     a^2 yz + b^2 zx + c^2 xy + (x+y+z)(ux+vy+wz) = 0
//
// identified by the line part (u,v,w); (0,0,0) is the circumcircle. A pencil
// member whose quadratic part vanishes degenerates to a line and is carried
// as the DegenerateLine variant. Circles are bound to the metric they were
// built with; the metric must outlive them.
template <class S>
class Circle {
public:
    static Circle circum_form(const TriangleMetric<S>& t, S u, S v, S w) {
        Circle c;
        c.tri_ = &t;
        c.u_ = std::move(u);
        c.v_ = std::move(v);
        c.w_ = std::move(w);
        return c;
    }

    static Circle degenerate_line(const TriangleMetric<S>& t, HLine<S> l) {
        Circle c;
        c.tri_ = &t;
        c.is_line_ = true;
        c.line_ = std::move(l);
        return c;
    }

    bool is_degenerate_line() const { return is_line_; }
    const HLine<S>& line() const {
        if (!is_line_) throw geometry_error("circle is not a degenerate line");
        return line_;
    }
    const S& u() const { return require_circle(), u_; }
    const S& v() const { return require_circle(), v_; }
    const S& w() const { return require_circle(), w_; }
    const TriangleMetric<S>& metric() const { return *tri_; }

    // Left-hand side of the defining equation on the given representative
    // (homogeneous of degree 2).
    S eval(const HPoint<S>& p) const {
        require_circle();
        const TriangleMetric<S>& t = *tri_;
        S quad = t.a() * t.a() * p.y * p.z + t.b() * t.b() * p.z * p.x +
                 t.c() * t.c() * p.x * p.y;
        return quad + (p.x + p.y + p.z) * (u_ * p.x + v_ * p.y + w_ * p.z);
    }

    S eval_scale(const HPoint<S>& p) const {
        using T = scalar_traits<S>;
        require_circle();
        const TriangleMetric<S>& t = *tri_;
        return T::abs(S(t.a() * t.a() * p.y * p.z)) + T::abs(S(t.b() * t.b() * p.z * p.x)) +
               T::abs(S(t.c() * t.c() * p.x * p.y)) +
               T::abs(S((p.x + p.y + p.z) * (u_ * p.x + v_ * p.y + w_ * p.z)));
    }

private:
    void require_circle() const {
        if (is_line_) throw geometry_error("operation undefined for degenerate line circle");
    }

    const TriangleMetric<S>* tri_ = nullptr;
    bool is_line_ = false;
    S u_{}, v_{}, w_{};
    HLine<S> line_{};
};

// Cartesian circle: center and squared radius in the embedding plane.
template <class S>
struct CCircle {
    CartesianPoint<S> center;
    S r2{};
};

template <class S>
struct Conic {
    // Circumconic lambda*yz + mu*zx + nu*xy = 0.
    S lambda{}, mu{}, nu{};
};

template <class S>
struct PencilVerdict {
    bool coaxal = false;
    std::optional<HLine<S>> common_radical_axis;
    std::vector<S> witness_minors;
    // Set when the pencil members are three concurrent lines: coaxal holds
    // but no radical axis exists (any line of the pencil would apply).
    bool degenerate_line_pencil = false;
};

namespace detail {

template <class S>
void require_same_metric(const Circle<S>& c1, const Circle<S>& c2) {
    if (&c1.metric() != &c2.metric())
        throw geometry_error("circles bound to different triangle metrics");
}

}  // namespace detail

template <class S>
Circle<S> circumcircle(const TriangleMetric<S>& t) {
    return Circle<S>::circum_form(t, S(0), S(0), S(0));
}

// Tangent length from each vertex is s-a (cyclically), which fixes the
// incircle line part directly.
template <class S>
Circle<S> incircle(const TriangleMetric<S>& t) {
    S sa = t.semiperimeter() - t.a();
    S sb = t.semiperimeter() - t.b();
    S sc = t.semiperimeter() - t.c();
    return Circle<S>::circum_form(t, -(sa * sa), -(sb * sb), -(sc * sc));
}

template <class S>
bool on_circle(const Circle<S>& c, const HPoint<S>& p) {
    if (c.is_degenerate_line()) return on_line(c.line(), p);
    return scalar_traits<S>::is_zero(c.eval(p), c.eval_scale(p));
}

// Power of a finite point with respect to a circle, normalized so that the
// power with respect to the circumcircle of a normalized representative is
// -(a^2 yz + b^2 zx + c^2 xy); this matches the Euclidean |PK|^2 - rho^2.
template <class S>
S power(const TriangleMetric<S>& t, const Circle<S>& c, const HPoint<S>& p) {
    (void)t;
    if (c.is_degenerate_line()) throw geometry_error("power undefined for degenerate line");
    S sum = p.x + p.y + p.z;
    if (scalar_traits<S>::is_zero(sum, detail::tri_scale<S>(p.x, p.y, p.z)))
        throw geometry_error("power of infinite point");
    return -c.eval(p) / (sum * sum);
}

template <class S>
HLine<S> radical_axis(const Circle<S>& c1, const Circle<S>& c2) {
    detail::require_same_metric(c1, c2);
    if (c1.is_degenerate_line() || c2.is_degenerate_line())
        throw geometry_error("radical axis needs two proper circles");
    HLine<S> l{c1.u() - c2.u(), c1.v() - c2.v(), c1.w() - c2.w()};
    if (!is_valid(l)) throw geometry_error("identical circles");
    return canon(l);
}

// Exact equality of circumform representations (the line part is unique, so
// this is not a projective comparison).
template <class S>
bool circles_equal(const Circle<S>& c1, const Circle<S>& c2) {
    detail::require_same_metric(c1, c2);
    if (c1.is_degenerate_line() != c2.is_degenerate_line()) return false;
    if (c1.is_degenerate_line()) return equal(c1.line(), c2.line());
    using T = scalar_traits<S>;
    S sc = detail::tri_scale<S>(c1.u(), c1.v(), c1.w()) + detail::tri_scale<S>(c2.u(), c2.v(), c2.w());
    return T::is_zero(S(c1.u() - c2.u()), sc) && T::is_zero(S(c1.v() - c2.v()), sc) &&
           T::is_zero(S(c1.w() - c2.w()), sc);
}

// Coaxality on line-part differences: the three line parts must lie on one
// affine line in (u,v,w)-space. Degenerate line members join the pencil as
// its direction at infinity.
template <class S>
PencilVerdict<S> coaxal(const Circle<S>& c1, const Circle<S>& c2, const Circle<S>& c3) {
    using T = scalar_traits<S>;
    detail::require_same_metric(c1, c2);
    detail::require_same_metric(c1, c3);
    std::vector<const Circle<S>*> circles, lines;
    for (const Circle<S>* c : {&c1, &c2, &c3})
        (c->is_degenerate_line() ? lines : circles).push_back(c);

    PencilVerdict<S> verdict;
    if (lines.empty()) {
        HPoint<S> d2{circles[1]->u() - circles[0]->u(), circles[1]->v() - circles[0]->v(),
                     circles[1]->w() - circles[0]->w()};
        HPoint<S> d3{circles[2]->u() - circles[0]->u(), circles[2]->v() - circles[0]->v(),
                     circles[2]->w() - circles[0]->w()};
        if (!is_valid(d2) || !is_valid(d3) ||
            !is_valid(HPoint<S>{circles[2]->u() - circles[1]->u(),
                                circles[2]->v() - circles[1]->v(),
                                circles[2]->w() - circles[1]->w()}))
            throw geometry_error("coaxal: identical circles");
        S m1 = d2.y * d3.z - d2.z * d3.y;
        S m2 = d2.z * d3.x - d2.x * d3.z;
        S m3 = d2.x * d3.y - d2.y * d3.x;
        verdict.witness_minors = {m1, m2, m3};
        S sc = detail::tri_scale<S>(d2.x, d2.y, d2.z) * detail::tri_scale<S>(d3.x, d3.y, d3.z);
        verdict.coaxal = T::is_zero(m1, sc) && T::is_zero(m2, sc) && T::is_zero(m3, sc);
        if (verdict.coaxal)
            verdict.common_radical_axis = canon(HLine<S>{d2.x, d2.y, d2.z});
        return verdict;
    }
    if (lines.size() == 1 && circles.size() == 2) {
        HLine<S> axis = radical_axis(*circles[0], *circles[1]);
        verdict.coaxal = equal(axis, lines[0]->line());
        if (verdict.coaxal) verdict.common_radical_axis = axis;
        verdict.witness_minors = {axis.l * lines[0]->line().m - axis.m * lines[0]->line().l,
                                  axis.m * lines[0]->line().n - axis.n * lines[0]->line().m,
                                  axis.n * lines[0]->line().l - axis.l * lines[0]->line().n};
        return verdict;
    }
    if (lines.size() == 2) {
        // A pencil of circles contains at most one line; two distinct line
        // members cannot be coaxal with a circle.
        if (equal(lines[0]->line(), lines[1]->line()))
            throw geometry_error("coaxal: identical circles");
        verdict.coaxal = false;
        return verdict;
    }
    // Three lines: a pencil of concurrent lines, with no radical axis.
    for (int i = 0; i < 3; ++i)
        if (equal(lines[i]->line(), lines[(i + 1) % 3]->line()))
            throw geometry_error("coaxal: identical circles");
    verdict.coaxal = concurrent(lines[0]->line(), lines[1]->line(), lines[2]->line());
    verdict.degenerate_line_pencil = verdict.coaxal;
    return verdict;
}

// --- Cartesian conversions --------------------------------------------------

template <class S>
S cart_power(const CCircle<S>& c, const CartesianPoint<S>& p) {
    return distance2(p, c.center) - c.r2;
}

template <class S>
CartLine<S> cart_radical_axis(const CCircle<S>& c1, const CCircle<S>& c2) {
    // Equal-power locus: 2 (K2-K1) . X = |K2|^2 - |K1|^2 + r1^2 - r2^2.
    S ax = 2 * (c2.center.x - c1.center.x);
    S ay = 2 * (c2.center.y - c1.center.y);
    S rhs = dot(c2.center, c2.center) - dot(c1.center, c1.center) + c1.r2 - c2.r2;
    CartLine<S> l{ax, ay, rhs};
    if (!is_valid(HLine<S>{l.a, l.b, l.c})) throw geometry_error("identical circles");
    return l;
}

template <class S>
bool on_ccircle(const CCircle<S>& c, const CartesianPoint<S>& p) {
    using T = scalar_traits<S>;
    S v = cart_power(c, p);
    S sc = distance2(p, c.center) + T::abs(c.r2);
    return T::is_zero(v, sc);
}

template <class S>
bool ccircles_equal(const CCircle<S>& c1, const CCircle<S>& c2) {
    using T = scalar_traits<S>;
    S sc = T::abs(c1.r2) + T::abs(c2.r2) + S(1);
    return cart_equal(c1.center, c2.center) && T::is_zero(S(c1.r2 - c2.r2), sc);
}

// The powers of the three vertices determine center and radius linearly.
template <class S>
CCircle<S> to_cartesian_circle(const TriangleMetric<S>& t, const Circle<S>& c) {
    if (c.is_degenerate_line()) throw geometry_error("degenerate line has no cartesian circle");
    const CartesianPoint<S>& A = t.vertexA();
    const CartesianPoint<S>& B = t.vertexB();
    const CartesianPoint<S>& C = t.vertexC();
    // |K-A|^2 - rho^2 = -u etc.; subtract pairs for a linear system in K.
    S rhs1 = (dot(A, A) - dot(B, B) + c.u() - c.v()) / 2;
    S rhs2 = (dot(B, B) - dot(C, C) + c.v() - c.w()) / 2;
    S m11 = A.x - B.x, m12 = A.y - B.y;
    S m21 = B.x - C.x, m22 = B.y - C.y;
    S det = m11 * m22 - m12 * m21;
    CartesianPoint<S> k{(rhs1 * m22 - m12 * rhs2) / det, (m11 * rhs2 - rhs1 * m21) / det};
    return {k, distance2(k, A) + c.u()};
}

template <class S>
Circle<S> from_cartesian_circle(const TriangleMetric<S>& t, const CCircle<S>& cc) {
    S u = cc.r2 - distance2(t.vertexA(), cc.center);
    S v = cc.r2 - distance2(t.vertexB(), cc.center);
    S w = cc.r2 - distance2(t.vertexC(), cc.center);
    return Circle<S>::circum_form(t, u, v, w);
}

template <class S>
HPoint<S> circle_center(const TriangleMetric<S>& t, const Circle<S>& c) {
    if (c.is_degenerate_line()) throw geometry_error("line has no center");
    return t.from_cartesian(to_cartesian_circle(t, c).center);
}

template <class S>
S circle_radius2(const TriangleMetric<S>& t, const Circle<S>& c) {
    return to_cartesian_circle(t, c).r2;
}

template <class S>
bool orthogonal(const TriangleMetric<S>& t, const Circle<S>& c1, const Circle<S>& c2) {
    using T = scalar_traits<S>;
    if (c1.is_degenerate_line() || c2.is_degenerate_line())
        throw geometry_error("orthogonality undefined for degenerate line");
    CCircle<S> k1 = to_cartesian_circle(t, c1);
    CCircle<S> k2 = to_cartesian_circle(t, c2);
    S d2 = distance2(k1.center, k2.center);
    S v = d2 - k1.r2 - k2.r2;
    S sc = T::abs(d2) + T::abs(k1.r2) + T::abs(k2.r2);
    return T::is_zero(v, sc);
}

// --- Circles through given points -------------------------------------------

// The unique circumform circle through three pairwise distinct points;
// collinear points yield the DegenerateLine member through them.
template <class S>
Circle<S> circle_through_3(const TriangleMetric<S>& t, const HPoint<S>& p1, const HPoint<S>& p2,
                           const HPoint<S>& p3) {
    if (equal(p1, p2) || equal(p2, p3) || equal(p1, p3))
        throw geometry_error("circle through coincident points");
    if (collinear(p1, p2, p3)) {
        if (!equal(p1, p2)) return Circle<S>::degenerate_line(t, join(p1, p2));
        return Circle<S>::degenerate_line(t, join(p1, p3));
    }
    if (is_infinite(p1) || is_infinite(p2) || is_infinite(p3))
        throw geometry_error("no circle through an infinite point");
    // Membership of each point: (x+y+z)(ux+vy+wz) = -(a^2 yz + b^2 zx + c^2 xy).
    auto quad = [&](const HPoint<S>& p) -> S {
        return t.a() * t.a() * p.y * p.z + t.b() * t.b() * p.z * p.x + t.c() * t.c() * p.x * p.y;
    };
    std::array<std::array<S, 4>, 3> rows;
    int i = 0;
    for (const HPoint<S>* p : {&p1, &p2, &p3}) {
        S s = p->x + p->y + p->z;
        rows[i] = {s * p->x, s * p->y, s * p->z, S(-quad(*p))};
        ++i;
    }
    S det, sc;
    detail::det3<S>({rows[0][0], rows[0][1], rows[0][2], rows[1][0], rows[1][1], rows[1][2],
                     rows[2][0], rows[2][1], rows[2][2]},
                    det, sc);
    if (scalar_traits<S>::is_zero(det, sc))
        throw geometry_error("circle_through_3: singular system");
    auto cramer = [&](int col) -> S {
        std::array<S, 9> m;
        for (int r = 0; r < 3; ++r)
            for (int cidx = 0; cidx < 3; ++cidx)
                m[3 * r + cidx] = (cidx == col) ? rows[r][3] : rows[r][cidx];
        S v, vsc;
        detail::det3(m, v, vsc);
        return v / det;
    };
    return Circle<S>::circum_form(t, cramer(0), cramer(1), cramer(2));
}

// --- Conics ------------------------------------------------------------------

// Isogonal image of a line: a point lies on the conic iff its isogonal
// conjugate lies on the line.
template <class S>
Conic<S> circumconic_from_line(const TriangleMetric<S>& t, const HLine<S>& l) {
    using T = scalar_traits<S>;
    S sc = detail::tri_scale<S>(l.l, l.m, l.n);
    int zeros = T::is_zero(l.l, sc) + T::is_zero(l.m, sc) + T::is_zero(l.n, sc);
    if (zeros >= 2) throw geometry_error("conic degenerates");
    Conic<S> k{l.l * t.a() * t.a(), l.m * t.b() * t.b(), l.n * t.c() * t.c()};
    HPoint<S> tmp = canon(HPoint<S>{k.lambda, k.mu, k.nu});
    return {tmp.x, tmp.y, tmp.z};
}

template <class S>
bool on_conic(const Conic<S>& k, const HPoint<S>& p) {
    using T = scalar_traits<S>;
    S t1 = k.lambda * p.y * p.z, t2 = k.mu * p.z * p.x, t3 = k.nu * p.x * p.y;
    return T::is_zero(S(t1 + t2 + t3), S(T::abs(t1) + T::abs(t2) + T::abs(t3)));
}

// --- Generic quadratic form and second intersections -------------------------

// Symmetric 3x3 form shared by circumform circles and circumconics.
template <class S>
struct QuadForm {
    S m00{}, m01{}, m02{}, m11{}, m12{}, m22{};

    static QuadForm from_circle(const Circle<S>& c) {
        const TriangleMetric<S>& t = c.metric();
        S a2 = t.a() * t.a(), b2 = t.b() * t.b(), c2 = t.c() * t.c();
        QuadForm q;
        q.m00 = c.u();
        q.m11 = c.v();
        q.m22 = c.w();
        q.m01 = (c2 + c.u() + c.v()) / 2;
        q.m02 = (b2 + c.u() + c.w()) / 2;
        q.m12 = (a2 + c.v() + c.w()) / 2;
        return q;
    }

    static QuadForm from_conic(const Conic<S>& k) {
        QuadForm q;
        q.m01 = k.nu / 2;
        q.m02 = k.mu / 2;
        q.m12 = k.lambda / 2;
        return q;
    }

    S eval(const HPoint<S>& p) const {
        return m00 * p.x * p.x + m11 * p.y * p.y + m22 * p.z * p.z +
               2 * (m01 * p.x * p.y + m02 * p.x * p.z + m12 * p.y * p.z);
    }

    S eval_scale(const HPoint<S>& p) const {
        using T = scalar_traits<S>;
        return T::abs(S(m00 * p.x * p.x)) + T::abs(S(m11 * p.y * p.y)) +
               T::abs(S(m22 * p.z * p.z)) + 2 * (T::abs(S(m01 * p.x * p.y)) +
               T::abs(S(m02 * p.x * p.z)) + T::abs(S(m12 * p.y * p.z)));
    }

    S bilinear(const HPoint<S>& p, const HPoint<S>& q) const {
        return m00 * p.x * q.x + m11 * p.y * q.y + m22 * p.z * q.z +
               m01 * (p.x * q.y + p.y * q.x) + m02 * (p.x * q.z + p.z * q.x) +
               m12 * (p.y * q.z + p.z * q.y);
    }
};

// Second intersection of a line with a quadric through a known incident
// point. Tangency returns the known point itself (double root).
template <class S>
HPoint<S> quad_line_second_intersection(const QuadForm<S>& q, const HLine<S>& l,
                                        const HPoint<S>& known) {
    using T = scalar_traits<S>;
    if (!on_line(l, known) || !T::is_zero(q.eval(known), q.eval_scale(known)))
        throw geometry_error("known point not incident with line and quadric");
    // A second point of the line, independent of `known`.
    std::array<HPoint<S>, 3> candidates = {HPoint<S>{S(0), l.n, S(-l.m)},
                                           HPoint<S>{S(-l.n), S(0), l.l},
                                           HPoint<S>{l.m, S(-l.l), S(0)}};
    const HPoint<S>* other = nullptr;
    for (const auto& cand : candidates) {
        if (is_valid(cand) && !equal(cand, known)) { other = &cand; break; }
    }
    if (!other) throw geometry_error("degenerate line");
    // Q(known + t*other) = 2 t B + t^2 Q(other); the nonzero root, written
    // projectively, is Q(other)*known - 2B*other. This also covers tangency
    // (B = 0) and the case of `other` itself lying on the quadric.
    S qo = q.eval(*other);
    S bb = q.bilinear(known, *other);
    HPoint<S> second{qo * known.x - 2 * bb * other->x, qo * known.y - 2 * bb * other->y,
                     qo * known.z - 2 * bb * other->z};
    if (!is_valid(second)) throw geometry_error("line lies on the quadric");
    return canon(second);
}

template <class S>
HPoint<S> conic_line_second_intersection(const Conic<S>& k, const HLine<S>& l,
                                         const HPoint<S>& known) {
    return quad_line_second_intersection(QuadForm<S>::from_conic(k), l, known);
}

template <class S>
HPoint<S> conic_line_second_intersection(const Circle<S>& c, const HLine<S>& l,
                                         const HPoint<S>& known) {
    if (c.is_degenerate_line()) throw geometry_error("second intersection with degenerate line");
    return quad_line_second_intersection(QuadForm<S>::from_circle(c), l, known);
}

}  // namespace barygeo
