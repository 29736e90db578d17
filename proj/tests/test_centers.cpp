#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "barygeo/centers.hpp"
#include "barygeo/circles.hpp"
#include "barygeo/rng.hpp"

using namespace barygeo;

namespace {

using P = HPoint<Rat>;
using L = HLine<Rat>;

TriangleMetric<Rat> t131415() { return TriangleMetric<Rat>::from_sides(Rat(13), Rat(14), Rat(15)); }

P rand_point(SplitMix64& rng) {
    while (true) {
        P p{rng.rational(20, 7), rng.rational(20, 7), rng.rational(20, 7)};
        Rat sc = abs(p.x) + abs(p.y) + abs(p.z);
        if (sgn(p.x) != 0 && sgn(p.y) != 0 && sgn(p.z) != 0 && sgn(Rat(p.x + p.y + p.z)) != 0)
            return p;
        (void)sc;
    }
}

}  // namespace

TEST_CASE("named centers on (13,14,15)") {
    auto t = t131415();
    CHECK(equal(named_center(t, CenterId::X57), P{Rat(13), Rat(16), Rat(20)}));
    CHECK(equal(named_center(t, CenterId::Spieker), P{Rat(29), Rat(28), Rat(27)}));
    CHECK(equal(named_center(t, CenterId::G), P{Rat(1), Rat(1), Rat(1)}));
    CHECK(equal(named_center(t, CenterId::I), P{Rat(13), Rat(14), Rat(15)}));
    CHECK(equal(named_center(t, CenterId::Nagel), P{Rat(8), Rat(7), Rat(6)}));
    CHECK(equal(named_center(t, CenterId::K), P{Rat(169), Rat(196), Rat(225)}));
    CHECK(equal(named_center(t, CenterId::X56), P{Rat(169), Rat(224), Rat(300)}));

    // O, H, N against the embedding: circumcenter is equidistant from the
    // vertices, orthocenter lies on the altitudes, N is their midpoint.
    P o = named_center(t, CenterId::O);
    auto oc = t.to_cartesian(o);
    CHECK(distance2(oc, t.vertexA()) == distance2(oc, t.vertexB()));
    CHECK(distance2(oc, t.vertexB()) == distance2(oc, t.vertexC()));
    CHECK(distance2(oc, t.vertexA()) == t.circumradius2());

    P h = named_center(t, CenterId::H);
    auto hc = t.to_cartesian(h);
    CHECK(dot(hc - t.vertexA(), t.vertexB() - t.vertexC()) == 0);
    CHECK(dot(hc - t.vertexB(), t.vertexC() - t.vertexA()) == 0);

    auto nc = t.to_cartesian(named_center(t, CenterId::NinePoint));
    CHECK(cart_equal(nc, CartesianPoint<Rat>{(oc.x + hc.x) / 2, (oc.y + hc.y) / 2}));

    // Contact points: tangent lengths from B are s - b.
    auto dc = t.to_cartesian(named_center(t, CenterId::D));
    CHECK(distance2(dc, t.vertexB()) == (t.semiperimeter() - t.b()) * (t.semiperimeter() - t.b()));

    // Arc midpoint Mprime: on the circumcircle, equidistant from B and C.
    P mp = named_center(t, CenterId::Mprime);
    CHECK(on_circle(circumcircle(t), mp));
    auto mpc = t.to_cartesian(mp);
    CHECK(distance2(mpc, t.vertexB()) == distance2(mpc, t.vertexC()));
}

TEST_CASE("X56 is the exsimilicenter of circumcircle and incircle") {
    auto t = t131415();
    // External similarity center divides OI externally in the ratio R : r.
    auto oc = t.to_cartesian(named_center(t, CenterId::O));
    auto ic = t.to_cartesian(named_center(t, CenterId::I));
    Rat denom = t.circumradius() - t.inradius();
    CartesianPoint<Rat> ex{(t.circumradius() * ic.x - t.inradius() * oc.x) / denom,
                           (t.circumradius() * ic.y - t.inradius() * oc.y) / denom};
    CHECK(equal(t.from_cartesian(ex), named_center(t, CenterId::X56)));
}

TEST_CASE("Spieker point is the incenter of the medial triangle") {
    auto t = t131415();
    // The medial triangle has half the side lengths; its incenter,
    // transferred back, is the Spieker point.
    auto medial = TriangleMetric<Rat>::from_sides(t.a() / 2, t.b() / 2, t.c() / 2);
    HPoint<Rat> inc = named_center(medial, CenterId::I);  // (a : b : c), same triple
    // Medial vertices in reference barycentrics: (0:1:1), (1:0:1), (1:1:0).
    HPoint<Rat> inc_n = normalize(inc);
    std::array<HPoint<Rat>, 3> mv{P{Rat(0), Rat(1), Rat(1)}, P{Rat(1), Rat(0), Rat(1)},
                                  P{Rat(1), Rat(1), Rat(0)}};
    CartesianPoint<Rat> e{Rat(0), Rat(0)};
    std::array<Rat, 3> weights{inc_n.x, inc_n.y, inc_n.z};
    for (int i = 0; i < 3; ++i) {
        auto c = t.to_cartesian(mv[i]);
        e.x += weights[i] * c.x;
        e.y += weights[i] * c.y;
    }
    CHECK(equal(t.from_cartesian(e), named_center(t, CenterId::Spieker)));
}

TEST_CASE("homogeneity of named centers") {
    auto t1 = t131415();
    auto t2 = TriangleMetric<Rat>::from_sides(Rat(13, 7), Rat(2), Rat(15, 7));
    for (CenterId id : {CenterId::I, CenterId::O, CenterId::H, CenterId::K, CenterId::X56,
                        CenterId::X57, CenterId::X58, CenterId::Nagel, CenterId::Spieker,
                        CenterId::NinePoint, CenterId::D, CenterId::Mprime})
        CHECK(equal(named_center(t1, id), named_center(t2, id)));
}

TEST_CASE("isogonal conjugate") {
    auto t = t131415();
    CHECK(equal(isogonal_conjugate(t, P{Rat(1), Rat(1), Rat(1)}), named_center(t, CenterId::K)));
    CHECK(equal(isogonal_conjugate(t, P{Rat(13), Rat(14), Rat(15)}), P{Rat(13), Rat(14), Rat(15)}));
    CHECK(equal(isogonal_conjugate(t, P{Rat(8), Rat(7), Rat(6)}), P{Rat(169), Rat(224), Rat(300)}));
    CHECK_THROWS_AS(isogonal_conjugate(t, P{Rat(1), Rat(0), Rat(0)}), geometry_error);

    SplitMix64 rng(3);
    for (int i = 0; i < 40; ++i) {
        P p = rand_point(rng);
        CHECK(equal(isogonal_conjugate(t, isogonal_conjugate(t, p)), p));
    }
    // Excenters are fixed.
    CHECK(equal(isogonal_conjugate(t, named_center(t, CenterId::Ia)), named_center(t, CenterId::Ia)));
}

TEST_CASE("complement") {
    auto t = t131415();
    CHECK(equal(complement(P{Rat(13), Rat(14), Rat(15)}), P{Rat(29), Rat(28), Rat(27)}));
    CHECK(equal(complement(P{Rat(1), Rat(1), Rat(1)}), P{Rat(1), Rat(1), Rat(1)}));
    CHECK(equal(complement(named_center(t, CenterId::H)), named_center(t, CenterId::O)));
    CHECK_THROWS_AS(complement(P{Rat(1), Rat(-1), Rat(0)}), geometry_error);

    // G is the only fixed point.
    SplitMix64 rng(5);
    for (int i = 0; i < 40; ++i) {
        P p = rand_point(rng);
        if (equal(p, P{Rat(1), Rat(1), Rat(1)})) continue;
        CHECK_FALSE(equal(complement(p), p));
    }
    CHECK(equal(anticomplement(complement(P{Rat(3), Rat(5), Rat(7)})), P{Rat(3), Rat(5), Rat(7)}));
}

TEST_CASE("tripolar and tripole") {
    CHECK(equal(tripolar(P{Rat(1), Rat(1), Rat(1)}), L{Rat(1), Rat(1), Rat(1)}));
    CHECK(equal(tripolar(P{Rat(13), Rat(16), Rat(20)}), L{Rat(80), Rat(65), Rat(52)}));
    CHECK_THROWS_AS(tripolar(P{Rat(0), Rat(0), Rat(1)}), geometry_error);
    CHECK_THROWS_AS(tripole(L{Rat(1), Rat(0), Rat(0)}), geometry_error);

    SplitMix64 rng(17);
    for (int i = 0; i < 50; ++i) {
        P p = rand_point(rng);
        CHECK(equal(tripole(tripolar(p)), p));
    }
}

TEST_CASE("lemma3 family") {
    auto t = t131415();
    const Rat half(1, 2);

    CHECK(equal(lemma3_Qstar(t, Rat(0)), named_center(t, CenterId::Nagel)));
    CHECK(equal(lemma3_Q(t, Rat(0)), named_center(t, CenterId::X56)));
    CHECK(equal(lemma3_Qstar(t, half), named_center(t, CenterId::Spieker)));
    CHECK(equal(lemma3_Q(t, half), named_center(t, CenterId::X58)));
    CHECK(equal(lemma3_Qstar(t, Rat(1)), named_center(t, CenterId::G)));
    CHECK(equal(lemma3_Q(t, Rat(1)), named_center(t, CenterId::K)));
    CHECK(equal(lemma3_Q(t, KCoeff<Rat>::infinity()), named_center(t, CenterId::I)));
    CHECK(equal(lemma3_Qstar(t, KCoeff<Rat>::infinity()), named_center(t, CenterId::I)));

    L ig = join(named_center(t, CenterId::I), named_center(t, CenterId::G));
    CHECK(equal(ig, L{Rat(-1), Rat(2), Rat(-1)}));
    Conic<Rat> hconic = circumconic_from_line(t, ig);
    CHECK(equal(HPoint<Rat>{hconic.lambda, hconic.mu, hconic.nu}, P{Rat(-169), Rat(392), Rat(-225)}));

    L gq_expected{t.b() - t.c(), t.c() - t.a(), t.a() - t.b()};
    SplitMix64 rng(29);
    for (int i = 0; i < 20; ++i) {
        Rat k = rng.rational(12, 8);
        P qstar = lemma3_Qstar(t, k);
        P q = lemma3_Q(t, k);
        CHECK(on_line(ig, qstar));
        CHECK(on_conic(hconic, q));
        CHECK(equal(isogonal_conjugate(t, qstar), q));
        if (k != Rat(1)) CHECK(equal(join(named_center(t, CenterId::G), qstar), gq_expected));
    }
}

TEST_CASE("lemma3 family: vanishing denominator still yields a conic point") {
    auto t = t131415();
    // b + c + (2k-1)a = 0 at k = (a-b-c)/(2a); Q collapses to vertex A.
    Rat k = (t.a() - t.b() - t.c()) / (2 * t.a());
    P q = lemma3_Q(t, k);
    CHECK(equal(q, P{Rat(1), Rat(0), Rat(0)}));
    Conic<Rat> hconic = circumconic_from_line(t, join(named_center(t, CenterId::I),
                                                      named_center(t, CenterId::G)));
    CHECK(on_conic(hconic, q));
}
