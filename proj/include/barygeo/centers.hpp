#pragma once

#include <optional>
#include <string>

#include "barygeo/metric.hpp"

namespace barygeo {

// The named centers the source configuration uses; D, E, F are the incircle
// contact points, Mprime/Nprime/Pprime the circumcircle arc midpoints.
enum class CenterId {
    I, G, O, H, K, NinePoint, Nagel, Spieker,
    X56, X57, X58,
    Ia, Ib, Ic,
    D, E, F,
    Mprime, Nprime, Pprime,
};

inline const char* center_name(CenterId id) {
    switch (id) {
        case CenterId::I: return "I";
        case CenterId::G: return "G";
        case CenterId::O: return "O";
        case CenterId::H: return "H";
        case CenterId::K: return "K";
        case CenterId::NinePoint: return "N";
        case CenterId::Nagel: return "Nagel";
        case CenterId::Spieker: return "Spieker";
        case CenterId::X56: return "X56";
        case CenterId::X57: return "X57";
        case CenterId::X58: return "X58";
        case CenterId::Ia: return "Ia";
        case CenterId::Ib: return "Ib";
        case CenterId::Ic: return "Ic";
        case CenterId::D: return "D";
        case CenterId::E: return "E";
        case CenterId::F: return "F";
        case CenterId::Mprime: return "Mprime";
        case CenterId::Nprime: return "Nprime";
        case CenterId::Pprime: return "Pprime";
    }
    return "?";
}

inline std::optional<CenterId> center_from_name(const std::string& name) {
    static const std::pair<const char*, CenterId> table[] = {
        {"I", CenterId::I}, {"G", CenterId::G}, {"O", CenterId::O}, {"H", CenterId::H},
        {"K", CenterId::K}, {"N", CenterId::NinePoint}, {"NinePoint", CenterId::NinePoint},
        {"Nagel", CenterId::Nagel}, {"Spieker", CenterId::Spieker},
        {"X56", CenterId::X56}, {"X57", CenterId::X57}, {"X58", CenterId::X58},
        {"Ia", CenterId::Ia}, {"Ib", CenterId::Ib}, {"Ic", CenterId::Ic},
        {"D", CenterId::D}, {"E", CenterId::E}, {"F", CenterId::F},
        {"Mprime", CenterId::Mprime}, {"Nprime", CenterId::Nprime}, {"Pprime", CenterId::Pprime},
    };
    for (auto& [n, id] : table)
        if (name == n) return id;
    return std::nullopt;
}

// (x:y:z) -> (a^2 yz : b^2 zx : c^2 xy). Involution away from the vertices;
// fixes I and the excenters.
template <class S>
HPoint<S> isogonal_conjugate(const TriangleMetric<S>& t, const HPoint<S>& p) {
    using T = scalar_traits<S>;
    S sc = detail::tri_scale<S>(p.x, p.y, p.z);
    int zeros = T::is_zero(p.x, sc) + T::is_zero(p.y, sc) + T::is_zero(p.z, sc);
    if (zeros >= 2) throw geometry_error("isogonal conjugate undefined at vertex");
    return canon(HPoint<S>{t.a() * t.a() * p.y * p.z,
                           t.b() * t.b() * p.z * p.x,
                           t.c() * t.c() * p.x * p.y});
}

template <class S>
HPoint<S> complement(const HPoint<S>& p) {
    if (is_infinite(p)) throw geometry_error("complement of infinite point");
    return canon(HPoint<S>{p.y + p.z, p.z + p.x, p.x + p.y});
}

// Anticomplement, inverse of complement: (y+z-x : z+x-y : x+y-z).
template <class S>
HPoint<S> anticomplement(const HPoint<S>& p) {
    if (is_infinite(p)) throw geometry_error("anticomplement of infinite point");
    return canon(HPoint<S>{p.y + p.z - p.x, p.z + p.x - p.y, p.x + p.y - p.z});
}

template <class S>
HLine<S> tripolar(const HPoint<S>& p) {
    using T = scalar_traits<S>;
    S sc = detail::tri_scale<S>(p.x, p.y, p.z);
    int zeros = T::is_zero(p.x, sc) + T::is_zero(p.y, sc) + T::is_zero(p.z, sc);
    if (zeros >= 2) throw geometry_error("tripolar undefined at vertex");
    return canon(HLine<S>{p.y * p.z, p.z * p.x, p.x * p.y});
}

template <class S>
HPoint<S> tripole(const HLine<S>& l) {
    using T = scalar_traits<S>;
    S sc = detail::tri_scale<S>(l.l, l.m, l.n);
    int zeros = T::is_zero(l.l, sc) + T::is_zero(l.m, sc) + T::is_zero(l.n, sc);
    if (zeros >= 2) throw geometry_error("tripole undefined for sideline");
    return canon(HPoint<S>{l.m * l.n, l.n * l.l, l.l * l.m});
}

namespace detail {

// Conway symbols: SA = (b^2+c^2-a^2)/2 etc.
template <class S>
void conway(const TriangleMetric<S>& t, S& sa, S& sb, S& sc) {
    S a2 = t.a() * t.a(), b2 = t.b() * t.b(), c2 = t.c() * t.c();
    sa = (b2 + c2 - a2) / 2;
    sb = (c2 + a2 - b2) / 2;
    sc = (a2 + b2 - c2) / 2;
}

}  // namespace detail

template <class S>
HPoint<S> named_center(const TriangleMetric<S>& t, CenterId id) {
    const S& a = t.a();
    const S& b = t.b();
    const S& c = t.c();
    S sa, sb, sc;
    switch (id) {
        case CenterId::I: return canon(HPoint<S>{a, b, c});
        case CenterId::G: return {S(1), S(1), S(1)};
        case CenterId::K: return canon(HPoint<S>{a * a, b * b, c * c});
        case CenterId::O:
            detail::conway(t, sa, sb, sc);
            return canon(HPoint<S>{a * a * sa, b * b * sb, c * c * sc});
        case CenterId::H:
            detail::conway(t, sa, sb, sc);
            return canon(HPoint<S>{sb * sc, sc * sa, sa * sb});
        case CenterId::NinePoint: {
            // Midpoint of O and H.
            HPoint<S> o = normalize(named_center(t, CenterId::O));
            HPoint<S> h = normalize(named_center(t, CenterId::H));
            return canon(HPoint<S>{o.x + h.x, o.y + h.y, o.z + h.z});
        }
        case CenterId::Nagel: return canon(HPoint<S>{b + c - a, c + a - b, a + b - c});
        case CenterId::Spieker: return canon(HPoint<S>{b + c, c + a, a + b});
        case CenterId::X56:
            return canon(HPoint<S>{a * a / (b + c - a), b * b / (c + a - b), c * c / (a + b - c)});
        case CenterId::X57:
            return canon(HPoint<S>{a / (b + c - a), b / (c + a - b), c / (a + b - c)});
        case CenterId::X58:
            return canon(HPoint<S>{a * a / (b + c), b * b / (c + a), c * c / (a + b)});
        case CenterId::Ia: return canon(HPoint<S>{-a, b, c});
        case CenterId::Ib: return canon(HPoint<S>{a, -b, c});
        case CenterId::Ic: return canon(HPoint<S>{a, b, -c});
        case CenterId::D: return canon(HPoint<S>{S(0), t.semiperimeter() - c, t.semiperimeter() - b});
        case CenterId::E: return canon(HPoint<S>{t.semiperimeter() - c, S(0), t.semiperimeter() - a});
        case CenterId::F: return canon(HPoint<S>{t.semiperimeter() - b, t.semiperimeter() - a, S(0)});
        // Arc midpoints: circumcevian triangle of the incenter.
        case CenterId::Mprime: return canon(HPoint<S>{-(a * a), b * (b + c), c * (b + c)});
        case CenterId::Nprime: return canon(HPoint<S>{a * (c + a), -(b * b), c * (c + a)});
        case CenterId::Pprime: return canon(HPoint<S>{a * (a + b), b * (a + b), -(c * c)});
    }
    throw geometry_error("unknown center id");
}

// Similarity coefficient for the one-parameter family of Lemma 3; the
// k -> infinity member is an explicit variant rather than a numeric value.
template <class S>
struct KCoeff {
    static KCoeff finite(const S& v) { return {false, v}; }
    static KCoeff infinity() { return {true, S(0)}; }
    bool infinite = false;
    S value{};
};

// Q(k) = (a^2/(b+c+(2k-1)a) : ...), represented projectively by clearing
// denominators so that parameter values with a vanishing denominator still
// yield a valid point (a vertex, on the circumconic).
template <class S>
HPoint<S> lemma3_Q(const TriangleMetric<S>& t, const KCoeff<S>& k) {
    if (k.infinite) return named_center(t, CenterId::I);
    const S& a = t.a();
    const S& b = t.b();
    const S& c = t.c();
    S da = b + c + (2 * k.value - 1) * a;
    S db = c + a + (2 * k.value - 1) * b;
    S dc = a + b + (2 * k.value - 1) * c;
    HPoint<S> q{a * a * db * dc, b * b * dc * da, c * c * da * db};
    if (!is_valid(q)) throw geometry_error("lemma3_Q undefined: all denominators vanish");
    return canon(q);
}

template <class S>
HPoint<S> lemma3_Q(const TriangleMetric<S>& t, const S& k) {
    return lemma3_Q(t, KCoeff<S>::finite(k));
}

template <class S>
HPoint<S> lemma3_Qstar(const TriangleMetric<S>& t, const KCoeff<S>& k) {
    if (k.infinite) return named_center(t, CenterId::I);
    const S& a = t.a();
    const S& b = t.b();
    const S& c = t.c();
    return canon(HPoint<S>{b + c + (2 * k.value - 1) * a,
                           c + a + (2 * k.value - 1) * b,
                           a + b + (2 * k.value - 1) * c});
}

template <class S>
HPoint<S> lemma3_Qstar(const TriangleMetric<S>& t, const S& k) {
    return lemma3_Qstar(t, KCoeff<S>::finite(k));
}

}  // namespace barygeo
