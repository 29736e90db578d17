#pragma once

#include <array>

#include "barygeo/scalar.hpp"

namespace barygeo {

// Homogeneous barycentric triples. (x:y:z) and (lx:ly:lz), l != 0, denote
// the same point; same for line coefficient triples. x+y+z == 0 encodes a
// point at infinity.
template <class S>
struct HPoint {
    S x{}, y{}, z{};
};

template <class S>
struct HLine {
    S l{}, m{}, n{};
};

namespace detail {

// Scale hint for float-backend zero tests: the largest magnitude involved.
template <class S>
S tri_scale(const S& a, const S& b, const S& c) {
    using T = scalar_traits<S>;
    S s = T::abs(a);
    S tb = T::abs(b);
    S tc = T::abs(c);
    if (tb > s) s = tb;
    if (tc > s) s = tc;
    return s;
}

// Divide an exact integer-rational triple by its content and make the first
// nonzero entry positive; keeps coordinate growth bounded along pipelines.
inline void canon_triple(Rat& a, Rat& b, Rat& c) {
    mpz_class l = lcm(lcm(a.get_den(), b.get_den()), c.get_den());
    mpz_class na = a.get_num() * (l / a.get_den());
    mpz_class nb = b.get_num() * (l / b.get_den());
    mpz_class nc = c.get_num() * (l / c.get_den());
    mpz_class g = gcd(gcd(na, nb), nc);
    if (g == 0) return;
    na /= g; nb /= g; nc /= g;
    if (sgn(na) < 0 || (sgn(na) == 0 && sgn(nb) < 0) || (sgn(na) == 0 && sgn(nb) == 0 && sgn(nc) < 0)) {
        na = -na; nb = -nb; nc = -nc;
    }
    a = na; b = nb; c = nc;
}

inline void canon_triple(double& a, double& b, double& c) {
    double s = tri_scale<double>(a, b, c);
    if (s == 0.0) return;
    a /= s; b /= s; c /= s;
}

}  // namespace detail

template <class S>
HPoint<S> canon(HPoint<S> p) {
    detail::canon_triple(p.x, p.y, p.z);
    return p;
}

template <class S>
HLine<S> canon(HLine<S> l) {
    detail::canon_triple(l.l, l.m, l.n);
    return l;
}

template <class S>
bool is_valid(const HPoint<S>& p) {
    using T = scalar_traits<S>;
    S sc = detail::tri_scale<S>(p.x, p.y, p.z);
    return !T::is_zero(sc, S(1));
}

template <class S>
bool is_valid(const HLine<S>& l) {
    using T = scalar_traits<S>;
    S sc = detail::tri_scale<S>(l.l, l.m, l.n);
    return !T::is_zero(sc, S(1));
}

template <class S>
bool is_infinite(const HPoint<S>& p) {
    using T = scalar_traits<S>;
    return T::is_zero(S(p.x + p.y + p.z), detail::tri_scale<S>(p.x, p.y, p.z));
}

// Projective equality by cross-product vanishing; never normalizes, so it
// is also correct for points at infinity.
template <class S>
bool equal(const HPoint<S>& p, const HPoint<S>& q) {
    using T = scalar_traits<S>;
    S m1 = p.y * q.z - p.z * q.y;
    S m2 = p.z * q.x - p.x * q.z;
    S m3 = p.x * q.y - p.y * q.x;
    S sc = detail::tri_scale<S>(p.x, p.y, p.z) * detail::tri_scale<S>(q.x, q.y, q.z);
    return T::is_zero(m1, sc) && T::is_zero(m2, sc) && T::is_zero(m3, sc);
}

template <class S>
bool equal(const HLine<S>& a, const HLine<S>& b) {
    return equal(HPoint<S>{a.l, a.m, a.n}, HPoint<S>{b.l, b.m, b.n});
}

// Representative with coordinate sum 1.
template <class S>
HPoint<S> normalize(const HPoint<S>& p) {
    S sum = p.x + p.y + p.z;
    if (scalar_traits<S>::is_zero(sum, detail::tri_scale<S>(p.x, p.y, p.z)))
        throw geometry_error("point at infinity not normalizable");
    return {p.x / sum, p.y / sum, p.z / sum};
}

template <class S>
HLine<S> join(const HPoint<S>& p, const HPoint<S>& q) {
    if (equal(p, q)) throw geometry_error("join/meet of equal elements");
    return canon(HLine<S>{p.y * q.z - p.z * q.y, p.z * q.x - p.x * q.z, p.x * q.y - p.y * q.x});
}

template <class S>
HPoint<S> meet(const HLine<S>& a, const HLine<S>& b) {
    if (equal(a, b)) throw geometry_error("join/meet of equal elements");
    return canon(HPoint<S>{a.m * b.n - a.n * b.m, a.n * b.l - a.l * b.n, a.l * b.m - a.m * b.l});
}

template <class S>
bool on_line(const HLine<S>& l, const HPoint<S>& p) {
    using T = scalar_traits<S>;
    S v = l.l * p.x + l.m * p.y + l.n * p.z;
    S sc = T::abs(S(l.l * p.x)) + T::abs(S(l.m * p.y)) + T::abs(S(l.n * p.z));
    return T::is_zero(v, sc);
}

namespace detail {

template <class S>
void det3(const std::array<S, 9>& m, S& value, S& scale) {
    using T = scalar_traits<S>;
    S t1 = m[0] * (m[4] * m[8] - m[5] * m[7]);
    S t2 = m[1] * (m[5] * m[6] - m[3] * m[8]);
    S t3 = m[2] * (m[3] * m[7] - m[4] * m[6]);
    value = t1 + t2 + t3;
    scale = T::abs(t1) + T::abs(t2) + T::abs(t3);
}

}  // namespace detail

template <class S>
S det3(const HPoint<S>& p, const HPoint<S>& q, const HPoint<S>& r) {
    S v, sc;
    detail::det3<S>({p.x, p.y, p.z, q.x, q.y, q.z, r.x, r.y, r.z}, v, sc);
    return v;
}

template <class S>
bool collinear(const HPoint<S>& p, const HPoint<S>& q, const HPoint<S>& r) {
    S v, sc;
    detail::det3<S>({p.x, p.y, p.z, q.x, q.y, q.z, r.x, r.y, r.z}, v, sc);
    return scalar_traits<S>::is_zero(v, sc);
}

template <class S>
bool concurrent(const HLine<S>& a, const HLine<S>& b, const HLine<S>& c) {
    S v, sc;
    detail::det3<S>({a.l, a.m, a.n, b.l, b.m, b.n, c.l, c.m, c.n}, v, sc);
    return scalar_traits<S>::is_zero(v, sc);
}

// Signed ratio UB/UC of directed segments along the common line, measured
// with the orientation from the second argument to the third. Computed from
// the affine decomposition u = beta*b + gamma*c (all normalized), for which
// UB/UC = -gamma/beta. An infinite u yields the limit value 1.
template <class S>
S signed_ratio(const HPoint<S>& u, const HPoint<S>& b, const HPoint<S>& c) {
    using T = scalar_traits<S>;
    if (!collinear(u, b, c)) throw geometry_error("signed_ratio of non-collinear points");
    if (equal(u, c)) throw geometry_error("ratio undefined");
    if (is_infinite(u)) return S(1);
    HPoint<S> un = normalize(u);
    HPoint<S> bn = normalize(b);
    HPoint<S> cn = normalize(c);
    // Solve un = beta*bn + gamma*cn with beta+gamma = 1: pick the coordinate
    // pair with the largest pivot.
    S dx = bn.x - cn.x, dy = bn.y - cn.y, dz = bn.z - cn.z;
    S beta, den;
    S ax = T::abs(dx), ay = T::abs(dy), az = T::abs(dz);
    if (ax >= ay && ax >= az) { beta = un.x - cn.x; den = dx; }
    else if (ay >= az)        { beta = un.y - cn.y; den = dy; }
    else                      { beta = un.z - cn.z; den = dz; }
    if (T::is_zero(den, S(1))) throw geometry_error("signed_ratio of coincident base points");
    beta = beta / den;
    S gamma = S(1) - beta;
    if (T::is_zero(beta, S(1) + T::abs(gamma))) throw geometry_error("ratio undefined");
    return -gamma / beta;
}

}  // namespace barygeo
