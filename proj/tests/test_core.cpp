#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "barygeo/heronian.hpp"
#include "barygeo/hpoint.hpp"
#include "barygeo/metric.hpp"
#include "barygeo/rng.hpp"

using namespace barygeo;

namespace {

using P = HPoint<Rat>;
using L = HLine<Rat>;

TriangleMetric<Rat> t131415() { return TriangleMetric<Rat>::from_sides(Rat(13), Rat(14), Rat(15)); }

P rand_finite_point(SplitMix64& rng) {
    while (true) {
        P p{rng.rational(20, 7), rng.rational(20, 7), rng.rational(20, 7)};
        if (is_valid(p) && !is_infinite(p)) return p;
    }
}

}  // namespace

TEST_CASE("normalize") {
    P p{Rat(13), Rat(14), Rat(15)};
    P n = normalize(p);
    CHECK(n.x == Rat(13, 42));
    CHECK(n.y == Rat(1, 3));   // 14/42
    CHECK(n.z == Rat(5, 14));  // 15/42
    CHECK(equal(n, p));

    P g{Rat(1), Rat(1), Rat(1)};
    P gn = normalize(g);
    CHECK(gn.x == Rat(1, 3));

    P inf{Rat(1), Rat(-1), Rat(0)};
    CHECK(is_infinite(inf));
    CHECK_THROWS_AS(normalize(inf), geometry_error);
}

TEST_CASE("join and meet") {
    // join((13:14:15),(1:1:1)) is the IG line [-1:2:-1].
    L ig = join(P{Rat(13), Rat(14), Rat(15)}, P{Rat(1), Rat(1), Rat(1)});
    CHECK(equal(ig, L{Rat(-1), Rat(2), Rat(-1)}));

    CHECK(equal(join(P{Rat(1), Rat(0), Rat(0)}, P{Rat(0), Rat(1), Rat(0)}), L{Rat(0), Rat(0), Rat(1)}));
    CHECK(equal(meet(L{Rat(1), Rat(0), Rat(0)}, L{Rat(0), Rat(1), Rat(0)}), P{Rat(0), Rat(0), Rat(1)}));

    CHECK_THROWS_AS(join(P{Rat(2), Rat(4), Rat(6)}, P{Rat(1), Rat(2), Rat(3)}), geometry_error);
}

TEST_CASE("join/meet duality") {
    SplitMix64 rng(11);
    for (int i = 0; i < 50; ++i) {
        P p = rand_finite_point(rng);
        P q = rand_finite_point(rng);
        P r = rand_finite_point(rng);
        if (equal(p, q) || equal(p, r) || collinear(p, q, r)) continue;
        CHECK(equal(meet(join(p, q), join(p, r)), p));
    }
}

TEST_CASE("collinear and concurrent") {
    CHECK(collinear(P{Rat(1), Rat(0), Rat(0)}, P{Rat(0), Rat(1), Rat(0)}, P{Rat(1), Rat(1), Rat(0)}));
    CHECK_FALSE(collinear(P{Rat(1), Rat(0), Rat(0)}, P{Rat(0), Rat(1), Rat(0)}, P{Rat(0), Rat(0), Rat(1)}));
    // Nagel, Spieker, I on the line IG for (13,14,15).
    CHECK(collinear(P{Rat(8), Rat(7), Rat(6)}, P{Rat(29), Rat(28), Rat(27)}, P{Rat(13), Rat(14), Rat(15)}));
    CHECK(concurrent(L{Rat(1), Rat(0), Rat(0)}, L{Rat(0), Rat(1), Rat(0)}, L{Rat(1), Rat(1), Rat(0)}));
}

TEST_CASE("projective rescaling invariance") {
    SplitMix64 rng(23);
    for (int i = 0; i < 30; ++i) {
        P p = rand_finite_point(rng);
        Rat lambda = rng.rational(9, 5);
        P q{lambda * p.x, lambda * p.y, lambda * p.z};
        CHECK(equal(p, q));
        P r = rand_finite_point(rng);
        if (equal(p, r)) continue;
        CHECK(equal(join(p, r), join(q, r)));
    }
}

TEST_CASE("signed_ratio") {
    P b{Rat(0), Rat(1), Rat(0)}, c{Rat(0), Rat(0), Rat(1)};
    P mid{Rat(0), Rat(1), Rat(1)};
    CHECK(signed_ratio(mid, b, c) == Rat(-1));
    CHECK(signed_ratio(b, b, c) == Rat(0));
    // Trace X = (0:q:r) has XB/XC = -r/q.
    P x{Rat(0), Rat(14), Rat(15)};
    CHECK(signed_ratio(x, b, c) == Rat(-15, 14));
    CHECK_THROWS_AS(signed_ratio(c, b, c), geometry_error);
    CHECK_THROWS_AS(signed_ratio(P{Rat(1), Rat(1), Rat(1)}, b, c), geometry_error);
}

TEST_CASE("embedding") {
    auto t = t131415();
    REQUIRE(t.has_embedding());
    CHECK(t.area() == Rat(84));
    CHECK(t.inradius() == Rat(4));
    CHECK(t.circumradius() == Rat(65, 8));

    // Embedding isometry: vertex distances reproduce the side lengths.
    CHECK(distance2(t.vertexB(), t.vertexC()) == Rat(13 * 13));
    CHECK(distance2(t.vertexC(), t.vertexA()) == Rat(14 * 14));
    CHECK(distance2(t.vertexA(), t.vertexB()) == Rat(15 * 15));

    CHECK(cart_equal(t.to_cartesian(P{Rat(1), Rat(0), Rat(0)}), t.vertexA()));
    CHECK(cart_equal(t.to_cartesian(P{Rat(0), Rat(1), Rat(1)}),
                     CartesianPoint<Rat>{Rat(13, 2), Rat(0)}));

    SplitMix64 rng(7);
    for (int i = 0; i < 100; ++i) {
        P p = rand_finite_point(rng);
        CHECK(equal(t.from_cartesian(t.to_cartesian(p)), p));
    }

    CHECK_THROWS_AS(t.to_cartesian(P{Rat(1), Rat(-1), Rat(0)}), geometry_error);
}

TEST_CASE("non-Heronian triangle has no exact embedding") {
    auto t = TriangleMetric<Rat>::from_sides(Rat(1), Rat(1), Rat(1));
    CHECK_FALSE(t.has_embedding());
    CHECK(t.cosA() == Rat(1, 2));
    CHECK_THROWS_AS(t.vertexA(), geometry_error);
    CHECK_THROWS_AS(TriangleMetric<Rat>::from_sides(Rat(1), Rat(2), Rat(3)), geometry_error);
    CHECK_THROWS_AS(TriangleMetric<Rat>::from_sides(Rat(1), Rat(2), Rat(8)), geometry_error);
}

TEST_CASE("cartesian line round trip") {
    auto t = t131415();
    L ig{Rat(-1), Rat(2), Rat(-1)};
    CartLine<Rat> cl = t.to_cart_line(ig);
    CHECK(equal(t.from_cart_line(cl), ig));
    // I and G embed onto the Cartesian line.
    CHECK(on_cart_line(cl, t.to_cartesian(P{Rat(13), Rat(14), Rat(15)})));
    CHECK(on_cart_line(cl, t.to_cartesian(P{Rat(1), Rat(1), Rat(1)})));
}

TEST_CASE("concyclic") {
    auto t = t131415();
    P a{Rat(1), Rat(0), Rat(0)}, b{Rat(0), Rat(1), Rat(0)}, c{Rat(0), Rat(0), Rat(1)};
    // Fourth point on the circumcircle: circumcevian of G at A is (-169:421:421).
    P a1{Rat(-169), Rat(421), Rat(421)};
    CHECK(concyclic(t, a, b, c, a1));
    CHECK_FALSE(concyclic(t, a, b, c, P{Rat(13), Rat(14), Rat(15)}));
    // All four collinear counts as concyclic (degenerate circle-as-line).
    CHECK(concyclic(t, P{Rat(0), Rat(1), Rat(1)}, P{Rat(0), Rat(1), Rat(2)}, b, c));
    CHECK_THROWS_AS(concyclic(t, a, a, b, c), geometry_error);
}

TEST_CASE("float backend tolerance predicates") {
    auto t = TriangleMetric<double>::from_sides(1.2, 2.0, 2.7);
    CHECK(t.has_embedding());
    HPoint<double> i{1.2, 2.0, 2.7};
    HPoint<double> g{1.0, 1.0, 1.0};
    HLine<double> ig = join(i, g);
    CHECK(on_line(ig, i));
    CHECK(on_line(ig, g));
    HPoint<double> p = t.from_cartesian(t.to_cartesian(HPoint<double>{0.3, 1.7, -0.4}));
    CHECK(equal(p, HPoint<double>{0.3, 1.7, -0.4}));
}

TEST_CASE("heronian generator") {
    HeronianGenerator gen(42);
    CHECK(gen.pool_size() > 100);
    for (int i = 0; i < 100; ++i) {
        auto t = gen.next();
        CHECK(t.has_embedding());  // rational area
        CHECK(t.a() != t.b());
        CHECK(t.b() != t.c());
        CHECK(t.a() != t.c());
    }
    // Same seed, same sequence.
    HeronianGenerator g1(9), g2(9);
    for (int i = 0; i < 10; ++i) CHECK(g1.next_sides() == g2.next_sides());
    // The glue of (5,12,13) and (9,12,15) along leg 12 must be in the pool.
    HeronianGenerator g3(1);
    bool found = false;
    for (std::size_t i = 0; i < g3.pool_size() && !found; ++i)
        found = (g3.next_sides() == std::array<long, 3>{13, 14, 15});
    CHECK(found);
}
