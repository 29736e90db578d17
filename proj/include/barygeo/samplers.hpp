#pragma once

#include "barygeo/centers.hpp"
#include "barygeo/circles.hpp"
#include "barygeo/derived.hpp"
#include "barygeo/rng.hpp"

namespace barygeo {

// Seeded samplers for theorem inputs. The iff checks need exact on-locus
// samples, so points on a circumconic come from rational line pencils
// through A (a vertex lies on every circumconic), never from rounding.

inline bool is_generic(const HPoint<Rat>& p) {
    return sgn(p.x) != 0 && sgn(p.y) != 0 && sgn(p.z) != 0 && sgn(Rat(p.x + p.y + p.z)) != 0;
}

inline HPoint<Rat> sample_point(SplitMix64& rng, long max_num = 24, long max_den = 8) {
    while (true) {
        HPoint<Rat> p{rng.rational(max_num, max_den), rng.rational(max_num, max_den),
                      rng.rational(max_num, max_den)};
        if (is_generic(p)) return canon(p);
    }
}

// Exact rational point on a circumconic: second intersection of the conic
// with a rational line through A. Skips vertices and sideline points.
inline HPoint<Rat> sample_on_conic(const TriangleMetric<Rat>& t, const Conic<Rat>& k,
                                   SplitMix64& rng) {
    (void)t;
    HPoint<Rat> a{Rat(1), Rat(0), Rat(0)};
    for (int attempt = 0; attempt < 256; ++attempt) {
        Rat tau = rng.rational(18, 7);
        HLine<Rat> l{Rat(0), -tau, Rat(1)};  // line through A and (0 : 1 : tau)
        HPoint<Rat> q;
        try {
            q = conic_line_second_intersection(k, l, a);
        } catch (const geometry_error&) {
            continue;
        }
        if (!is_generic(q)) continue;
        return q;
    }
    throw geometry_error("conic sampling failed");
}

inline HPoint<Rat> sample_off_conic(const Conic<Rat>& k, SplitMix64& rng) {
    while (true) {
        HPoint<Rat> p = sample_point(rng);
        if (!on_conic(k, p)) return p;
    }
}

inline HPoint<Rat> sample_on_line(const HLine<Rat>& l, SplitMix64& rng) {
    // Two base points of the line, then rational affine combinations.
    std::array<HPoint<Rat>, 3> candidates = {HPoint<Rat>{Rat(0), l.n, -l.m},
                                             HPoint<Rat>{-l.n, Rat(0), l.l},
                                             HPoint<Rat>{l.m, -l.l, Rat(0)}};
    const HPoint<Rat>* b1 = nullptr;
    const HPoint<Rat>* b2 = nullptr;
    for (const auto& c : candidates) {
        if (!is_valid(c)) continue;
        if (!b1) { b1 = &c; continue; }
        if (!equal(*b1, c)) { b2 = &c; break; }
    }
    if (!b1 || !b2) throw geometry_error("degenerate line");
    while (true) {
        Rat lam = rng.rational(16, 7);
        HPoint<Rat> p = canon(HPoint<Rat>{b1->x + lam * b2->x, b1->y + lam * b2->y,
                                          b1->z + lam * b2->z});
        if (is_generic(p)) return p;
    }
}

inline HPoint<Rat> sample_off_line(const HLine<Rat>& l, SplitMix64& rng) {
    while (true) {
        HPoint<Rat> p = sample_point(rng);
        if (!on_line(l, p)) return p;
    }
}

// Rational point on the Euler line, excluding H and the vertices.
inline HPoint<Rat> sample_euler_point(const TriangleMetric<Rat>& t, SplitMix64& rng) {
    HPoint<Rat> h = named_center(t, CenterId::H);
    HLine<Rat> el = euler_line(t);
    while (true) {
        HPoint<Rat> p = sample_on_line(el, rng);
        if (!equal(p, h)) return p;
    }
}

}  // namespace barygeo
