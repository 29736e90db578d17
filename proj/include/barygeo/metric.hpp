#pragma once

#include <array>

#include "barygeo/hpoint.hpp"
#include "barygeo/scalar.hpp"

namespace barygeo {

template <class S>
struct CartesianPoint {
    S x{}, y{};
};

// Affine line a*x + b*y = c in the embedding plane.
template <class S>
struct CartLine {
    S a{}, b{}, c{};
};

template <class S>
CartesianPoint<S> operator+(const CartesianPoint<S>& p, const CartesianPoint<S>& q) {
    return {p.x + q.x, p.y + q.y};
}
template <class S>
CartesianPoint<S> operator-(const CartesianPoint<S>& p, const CartesianPoint<S>& q) {
    return {p.x - q.x, p.y - q.y};
}
template <class S>
CartesianPoint<S> operator*(const S& k, const CartesianPoint<S>& p) {
    return {k * p.x, k * p.y};
}

template <class S>
S dot(const CartesianPoint<S>& p, const CartesianPoint<S>& q) {
    return p.x * q.x + p.y * q.y;
}

template <class S>
S cross2(const CartesianPoint<S>& p, const CartesianPoint<S>& q) {
    return p.x * q.y - p.y * q.x;
}

template <class S>
S distance2(const CartesianPoint<S>& p, const CartesianPoint<S>& q) {
    S dx = p.x - q.x, dy = p.y - q.y;
    return dx * dx + dy * dy;
}

template <class S>
bool cart_equal(const CartesianPoint<S>& p, const CartesianPoint<S>& q) {
    using T = scalar_traits<S>;
    S sc = T::abs(p.x) + T::abs(p.y) + T::abs(q.x) + T::abs(q.y);
    return T::is_zero(S(p.x - q.x), sc) && T::is_zero(S(p.y - q.y), sc);
}

template <class S>
bool on_cart_line(const CartLine<S>& l, const CartesianPoint<S>& p) {
    using T = scalar_traits<S>;
    S v = l.a * p.x + l.b * p.y - l.c;
    S sc = T::abs(S(l.a * p.x)) + T::abs(S(l.b * p.y)) + T::abs(l.c);
    return T::is_zero(v, sc);
}

template <class S>
bool cart_lines_equal(const CartLine<S>& p, const CartLine<S>& q) {
    return equal(HLine<S>{p.a, p.b, p.c}, HLine<S>{q.a, q.b, q.c});
}

template <class S>
CartLine<S> cart_line_through(const CartesianPoint<S>& p, const CartesianPoint<S>& q) {
    if (cart_equal(p, q)) throw geometry_error("line through coincident points");
    S a = q.y - p.y, b = p.x - q.x;
    return {a, b, a * p.x + b * p.y};
}

// Line through p with normal direction n (i.e. perpendicular to n-direction).
template <class S>
CartLine<S> cart_line_normal(const CartesianPoint<S>& p, const CartesianPoint<S>& n) {
    return {n.x, n.y, n.x * p.x + n.y * p.y};
}

template <class S>
CartesianPoint<S> cart_meet(const CartLine<S>& l, const CartLine<S>& m) {
    S det = l.a * m.b - l.b * m.a;
    if (scalar_traits<S>::is_zero(det, detail::tri_scale<S>(l.a * m.b, l.b * m.a, S(0))))
        throw geometry_error("parallel lines do not meet");
    return {(l.c * m.b - l.b * m.c) / det, (l.a * m.c - l.c * m.a) / det};
}

template <class S>
CartesianPoint<S> reflect_over(const CartLine<S>& l, const CartesianPoint<S>& p) {
    S n2 = l.a * l.a + l.b * l.b;
    if (scalar_traits<S>::is_zero(n2, S(n2 + 1))) throw geometry_error("degenerate line");
    S f = (l.a * p.x + l.b * p.y - l.c) / n2;
    return {p.x - 2 * f * l.a, p.y - 2 * f * l.b};
}

template <class S>
CartesianPoint<S> foot_of_perpendicular(const CartLine<S>& l, const CartesianPoint<S>& p) {
    S n2 = l.a * l.a + l.b * l.b;
    if (scalar_traits<S>::is_zero(n2, S(n2 + 1))) throw geometry_error("degenerate line");
    S f = (l.a * p.x + l.b * p.y - l.c) / n2;
    return {p.x - f * l.a, p.y - f * l.b};
}

// Side lengths, derived metric quantities, and (when the area is a rational
// square on the exact backend) a Cartesian embedding with B at the origin
// and C on the positive x-axis.
template <class S>
class TriangleMetric {
public:
    static TriangleMetric from_sides(const S& a, const S& b, const S& c) {
        using T = scalar_traits<S>;
        TriangleMetric t;
        t.a_ = a; t.b_ = b; t.c_ = c;
        if (!(a > S(0) && b > S(0) && c > S(0)))
            throw geometry_error("triangle sides must be positive");
        t.s_ = (a + b + c) / 2;
        S area2 = t.s_ * (t.s_ - a) * (t.s_ - b) * (t.s_ - c);
        S sc = t.s_ * t.s_ * t.s_ * t.s_;
        if (T::is_zero(area2, sc) || area2 < S(0))
            throw geometry_error("degenerate triangle: inequality violated");
        t.area2_ = area2;
        t.cosA_ = (b * b + c * c - a * a) / (2 * b * c);
        t.cosB_ = (c * c + a * a - b * b) / (2 * c * a);
        t.cosC_ = (a * a + b * b - c * c) / (2 * a * b);
        t.r2_ = area2 / (t.s_ * t.s_);
        t.R2_ = (a * a) * (b * b) * (c * c) / (16 * area2);
        S area;
        if (T::sqrt(area2, area)) {
            t.have_embedding_ = true;
            t.area_ = area;
            t.r_ = area / t.s_;
            t.R_ = a * b * c / (4 * area);
            t.B_ = {S(0), S(0)};
            t.C_ = {a, S(0)};
            t.A_ = {(a * a + c * c - b * b) / (2 * a), 2 * area / a};
        }
        return t;
    }

    const S& a() const { return a_; }
    const S& b() const { return b_; }
    const S& c() const { return c_; }
    const S& semiperimeter() const { return s_; }
    const S& cosA() const { return cosA_; }
    const S& cosB() const { return cosB_; }
    const S& cosC() const { return cosC_; }
    const S& area2() const { return area2_; }
    const S& inradius2() const { return r2_; }
    const S& circumradius2() const { return R2_; }

    bool has_embedding() const { return have_embedding_; }

    const S& area() const { return require_embedding(), area_; }
    const S& inradius() const { return require_embedding(), r_; }
    const S& circumradius() const { return require_embedding(), R_; }
    const CartesianPoint<S>& vertexA() const { return require_embedding(), A_; }
    const CartesianPoint<S>& vertexB() const { return require_embedding(), B_; }
    const CartesianPoint<S>& vertexC() const { return require_embedding(), C_; }

    bool is_equilateral() const {
        using T = scalar_traits<S>;
        S sc = a_ + b_ + c_;
        return T::is_zero(S(a_ - b_), sc) && T::is_zero(S(b_ - c_), sc);
    }

    CartesianPoint<S> to_cartesian(const HPoint<S>& p) const {
        require_embedding();
        HPoint<S> n = normalize(p);  // throws for infinite points
        return {n.x * A_.x + n.y * B_.x + n.z * C_.x,
                n.x * A_.y + n.y * B_.y + n.z * C_.y};
    }

    HPoint<S> from_cartesian(const CartesianPoint<S>& p) const {
        require_embedding();
        // Areal coordinates: signed areas of (P,B,C), (P,C,A), (P,A,B).
        S x = cross2<S>(B_ - p, C_ - p);
        S y = cross2<S>(C_ - p, A_ - p);
        S z = cross2<S>(A_ - p, B_ - p);
        return canon(HPoint<S>{x, y, z});
    }

    // Barycentric line -> affine line in the embedding.
    CartLine<S> to_cart_line(const HLine<S>& l) const {
        require_embedding();
        // Affine f with f(A)=l, f(B)=m, f(C)=n; here B=(0,0), C=(a,0).
        S gamma = l.m;
        S alpha = (l.n - l.m) / a_;
        S beta = (l.l - gamma - alpha * A_.x) / A_.y;
        return {alpha, beta, -gamma};
    }

    HLine<S> from_cart_line(const CartLine<S>& cl) const {
        require_embedding();
        auto f = [&](const CartesianPoint<S>& p) -> S { return cl.a * p.x + cl.b * p.y - cl.c; };
        return canon(HLine<S>{f(A_), f(B_), f(C_)});
    }

private:
    void require_embedding() const {
        if (!have_embedding_)
            throw geometry_error("exact embedding unavailable: triangle is not Heronian "
                                 "(use the float backend)");
    }

    S a_{}, b_{}, c_{}, s_{};
    S cosA_{}, cosB_{}, cosC_{};
    S area2_{}, r2_{}, R2_{};
    bool have_embedding_ = false;
    S area_{}, r_{}, R_{};
    CartesianPoint<S> A_{}, B_{}, C_{};
};

// True iff the four finite, pairwise distinct points lie on one circle; four
// collinear points count as concyclic under the degenerate circle-as-line
// convention.
template <class S>
bool concyclic(const TriangleMetric<S>& t, const HPoint<S>& p1, const HPoint<S>& p2,
               const HPoint<S>& p3, const HPoint<S>& p4) {
    using T = scalar_traits<S>;
    std::array<HPoint<S>, 4> ps{p1, p2, p3, p4};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (equal(ps[i], ps[j])) throw geometry_error("concyclic: coincident points");
    std::array<CartesianPoint<S>, 4> e;
    for (int i = 0; i < 4; ++i) e[i] = t.to_cartesian(ps[i]);
    // Lifted 4x4 determinant, expanded along the last column.
    auto minor3 = [&](int skip, S& value, S& scale) {
        std::array<S, 9> m;
        int row = 0;
        for (int i = 0; i < 4; ++i) {
            if (i == skip) continue;
            m[3 * row + 0] = e[i].x;
            m[3 * row + 1] = e[i].y;
            m[3 * row + 2] = e[i].x * e[i].x + e[i].y * e[i].y;
            ++row;
        }
        detail::det3(m, value, scale);
    };
    S value(0), scale(0);
    int sign = -1;
    for (int i = 0; i < 4; ++i) {
        S v, sc;
        minor3(i, v, sc);
        value += (sign > 0) ? v : S(-v);
        scale += sc;
        sign = -sign;
    }
    return T::is_zero(value, scale);
}

}  // namespace barygeo
