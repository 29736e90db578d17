#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "barygeo/checks.hpp"
#include "barygeo/checks_euler.hpp"
#include "barygeo/checks_general.hpp"
#include "barygeo/checks_inversion.hpp"
#include "barygeo/heronian.hpp"
#include "barygeo/samplers.hpp"

using namespace barygeo;

namespace {

using P = HPoint<Rat>;
using L = HLine<Rat>;

TriangleMetric<Rat> t131415() { return TriangleMetric<Rat>::from_sides(Rat(13), Rat(14), Rat(15)); }

void require_pass(const CheckReport& r) {
    if (!r.pass) {
        json j = r;
        FAIL_CHECK(r.check_id << " failed: " << j.dump(2));
    } else {
        CHECK(r.pass);
    }
}

}  // namespace

TEST_CASE("lemma1") {
    auto t = t131415();
    SplitMix64 rng(101);

    // Concurrent configurations: both sides of the iff true.
    for (int i = 0; i < 10; ++i) {
        Lemma1Params<Rat> params;
        params.concurrent_mode = true;
        params.q = sample_point(rng);
        HPoint<Rat> p = sample_point(rng);
        auto rep = check_lemma1(t, p, params);
        if (rep.degenerate_sample) continue;
        require_pass(rep);
    }

    // Independent random circles: generically both sides false, and the
    // equivalence must still hold.
    for (int i = 0; i < 10; ++i) {
        Lemma1Params<Rat> params;
        params.concurrent_mode = false;
        params.lambda = {rng.rational(9, 5), rng.rational(9, 5), rng.rational(9, 5)};
        HPoint<Rat> p = sample_point(rng);
        auto rep = check_lemma1(t, p, params);
        if (rep.degenerate_sample) continue;
        require_pass(rep);
    }

    // P = G with circles on diameters AX, BY, CZ: each diameter circle is
    // the pencil member whose free parameter is read off its circumform.
    {
        P g{Rat(1), Rat(1), Rat(1)};
        auto traces = cevian_triangle(g);
        std::array<P, 3> verts{P{Rat(1), Rat(0), Rat(0)}, P{Rat(0), Rat(1), Rat(0)},
                               P{Rat(0), Rat(0), Rat(1)}};
        std::array<P, 3> tr{traces.X, traces.Y, traces.Z};
        Lemma1Params<Rat> params;
        params.concurrent_mode = false;
        for (int i = 0; i < 3; ++i) {
            auto vc = t.to_cartesian(verts[i]);
            auto xc = t.to_cartesian(tr[i]);
            CCircle<Rat> diam{{(vc.x + xc.x) / 2, (vc.y + xc.y) / 2}, distance2(vc, xc) / 4};
            auto circ = from_cartesian_circle(t, diam);
            // The pencil is parametrized by v for the A-circle and by u for
            // the B- and C-circles.
            params.lambda[i] = (i == 0) ? circ.v() : circ.u();
        }
        auto rep = check_lemma1(t, g, params);
        require_pass(rep);
        // Both sides of the iff are false here: the second sideline
        // intersections are the altitude feet, which are not collinear.
        CHECK(rep.witnesses["UVW_collinear"] == false);
        CHECK(rep.witnesses["AA'BB'CC'_concurrent"] == false);
    }

    // Concurrent configuration at the symmedian point.
    {
        Lemma1Params<Rat> params;
        params.concurrent_mode = true;
        params.q = named_center(t, CenterId::K);
        auto rep = check_lemma1(t, P{Rat(1), Rat(1), Rat(1)}, params);
        require_pass(rep);
    }
}

TEST_CASE("lemma2") {
    auto t = t131415();

    // k = 0 on (13,14,15): UB/UC = (15/14)*(14/12).
    auto rep = check_lemma2(t, Rat(0));
    require_pass(rep);
    CHECK(rep.witnesses["UB_over_UC"] == "5/4");  // (15/14)*(14/12) = 15/12

    require_pass(check_lemma2(t, Rat(1)));
    require_pass(check_lemma2(t, Rat(-3, 5)));  // -cos A
    require_pass(check_lemma2(t, Rat(7, 3)));

    auto iso = TriangleMetric<Rat>::from_sides(Rat(10), Rat(13), Rat(13));
    CHECK(check_lemma2(iso, Rat(2)).degenerate_sample);
}

TEST_CASE("lemma3") {
    auto t = t131415();
    SplitMix64 rng(103);
    require_pass(check_lemma3(t, Rat(0)));
    require_pass(check_lemma3(t, Rat(1, 2)));
    require_pass(check_lemma3(t, Rat(1)));
    for (int i = 0; i < 8; ++i) {
        auto rep = check_lemma3(t, rng.rational(10, 6));
        if (rep.degenerate_sample) continue;
        require_pass(rep);
    }
}

TEST_CASE("lemma4") {
    auto t = t131415();
    CHECK(t.cosA() == Rat(3, 5));
    auto rep = check_lemma4(t);
    require_pass(rep);

    HeronianGenerator gen(7);
    for (int i = 0; i < 5; ++i) {
        auto tri = gen.next();
        auto r = check_lemma4(tri);
        if (r.degenerate_sample) continue;
        require_pass(r);
    }
}

TEST_CASE("theorem5 iff") {
    auto t = t131415();
    SplitMix64 rng(105);
    Conic<Rat> h = circumconic_from_line(t, join(named_center(t, CenterId::I),
                                                 named_center(t, CenterId::G)));

    // Named on-conic points.
    for (CenterId id : {CenterId::K, CenterId::X56, CenterId::X58}) {
        auto rep = check_theorem5(t, named_center(t, id));
        require_pass(rep);
        CHECK(rep.witnesses["Q_on_conic"] == true);
    }
    // Q = I: degenerate bisector pencil, still a pass.
    {
        auto rep = check_theorem5(t, named_center(t, CenterId::I));
        require_pass(rep);
        CHECK(rep.degenerate_sample);
    }
    // Sampled on-conic and off-conic points.
    for (int i = 0; i < 6; ++i) {
        auto rep = check_theorem5(t, sample_on_conic(t, h, rng));
        if (rep.degenerate_sample) continue;
        require_pass(rep);
        CHECK(rep.witnesses["Q_on_conic"] == true);
    }
    for (int i = 0; i < 6; ++i) {
        auto rep = check_theorem5(t, sample_off_conic(h, rng));
        if (rep.degenerate_sample) continue;
        require_pass(rep);
        CHECK(rep.witnesses["Q_on_conic"] == false);
    }
    // Q = (1:2:3) is off the conic for (13,14,15).
    auto rep = check_theorem5(t, P{Rat(1), Rat(2), Rat(3)});
    require_pass(rep);
    CHECK(rep.witnesses["Q_on_conic"] == false);

    CHECK_THROWS_AS(check_theorem5(t, P{Rat(1), Rat(0), Rat(0)}), geometry_error);
    auto equi = TriangleMetric<double>::from_sides(1.0, 1.0, 1.0);
    CHECK_THROWS_AS(check_theorem5(equi, HPoint<double>{1.0, 2.0, 3.0}), geometry_error);
}

TEST_CASE("lemma6") {
    require_pass(check_lemma6(t131415()));
    require_pass(check_lemma6(TriangleMetric<Rat>::from_sides(Rat(6), Rat(8), Rat(10))));
}

TEST_CASE("lemma8") {
    auto t = t131415();
    SplitMix64 rng(107);
    // P = O: radical axis is the Euler line.
    require_pass(check_lemma8(t, named_center(t, CenterId::O)));
    require_pass(check_lemma8(t, named_center(t, CenterId::I)));
    for (int i = 0; i < 10; ++i) {
        auto rep = check_lemma8(t, sample_point(rng));
        if (rep.degenerate_sample) continue;
        require_pass(rep);
    }
    // P on the circumcircle.
    Conic<Rat> circ_as_conic{Rat(13 * 13), Rat(14 * 14), Rat(15 * 15)};
    auto on_circ = sample_on_conic(t, circ_as_conic, rng);
    CHECK(on_circle(circumcircle(t), on_circ));
    auto rep = check_lemma8(t, on_circ);
    if (!rep.degenerate_sample) require_pass(rep);

    CHECK_THROWS_AS(check_lemma8(t, named_center(t, CenterId::H)), geometry_error);
}

TEST_CASE("lemma9") {
    auto t = t131415();
    SplitMix64 rng(109);
    require_pass(check_lemma9(t, named_center(t, CenterId::I)));
    require_pass(check_lemma9(t, named_center(t, CenterId::O)));
    int ran = 0;
    for (int i = 0; ran < 100 && i < 140; ++i) {
        auto rep = check_lemma9(t, sample_point(rng));
        if (rep.degenerate_sample) continue;
        require_pass(rep);
        ++ran;
    }
    CHECK(ran == 100);
}

TEST_CASE("theorem7 iff") {
    auto t = t131415();
    SplitMix64 rng(111);

    // On the Euler line: G, O, N and random affine combinations.
    require_pass(check_theorem7(t, named_center(t, CenterId::G)));
    require_pass(check_theorem7(t, named_center(t, CenterId::O)));
    require_pass(check_theorem7(t, named_center(t, CenterId::NinePoint)));
    for (int i = 0; i < 6; ++i) {
        auto rep = check_theorem7(t, sample_euler_point(t, rng));
        if (rep.degenerate_sample) continue;
        require_pass(rep);
        CHECK(rep.witnesses["P_on_euler_line"] == true);
        CHECK(rep.witnesses["coaxal"] == true);
    }
    // Off the Euler line: I is off it for a scalene triangle.
    {
        auto rep = check_theorem7(t, named_center(t, CenterId::I));
        require_pass(rep);
        CHECK(rep.witnesses["P_on_euler_line"] == false);
    }
    for (int i = 0; i < 6; ++i) {
        auto rep = check_theorem7(t, sample_off_line(euler_line(t), rng));
        if (rep.degenerate_sample) continue;
        require_pass(rep);
        CHECK(rep.witnesses["P_on_euler_line"] == false);
    }
    auto equi = TriangleMetric<double>::from_sides(2.0, 2.0, 2.0);
    CHECK_THROWS_AS(check_theorem7(equi, HPoint<double>{1.0, 2.0, 3.0}), geometry_error);
    CHECK_THROWS_AS(check_theorem7(t, named_center(t, CenterId::H)), geometry_error);
}

TEST_CASE("delta determinant") {
    auto t = t131415();
    P i{Rat(13), Rat(14), Rat(15)};
    // Q = P: rows proportional.
    CHECK(delta_determinant(t, i, i) == 0);
    // P = I, Q on (IG)* conic: delta vanishes.
    SplitMix64 rng(113);
    Conic<Rat> h = circumconic_from_line(t, join(i, P{Rat(1), Rat(1), Rat(1)}));
    for (int k = 0; k < 5; ++k) {
        CHECK(delta_vanishes(t, i, sample_on_conic(t, h, rng)));
        CHECK_FALSE(delta_vanishes(t, i, sample_off_conic(h, rng)));
    }
    CHECK(delta_determinant(t, i, P{Rat(1), Rat(2), Rat(3)}) != 0);
}

TEST_CASE("radical_axis_rBC closed form") {
    auto t = t131415();
    SplitMix64 rng(115);
    int done = 0;
    while (done < 50) {
        P p = sample_point(rng);
        P q = sample_point(rng);
        TheoremCircles<Rat> tc;
        HLine<Rat> closed;
        try {
            closed = radical_axis_rBC(t, p, q);
            tc = theorem_circles(t, p, q);
        } catch (const geometry_error&) {
            continue;
        }
        if (tc.circles[1].is_degenerate_line() || tc.circles[2].is_degenerate_line()) continue;
        CHECK(equal(closed, radical_axis(tc.circles[1], tc.circles[2])));
        // Q itself is the radical center.
        CHECK(on_line(closed, q));
        ++done;
    }
    // R = (a^2/(q+r) : ...) is on r_BC when delta = 0 (P = I, Q on conic).
    P i{Rat(13), Rat(14), Rat(15)};
    Conic<Rat> h = circumconic_from_line(t, join(i, P{Rat(1), Rat(1), Rat(1)}));
    for (int k = 0; k < 5; ++k) {
        P q = sample_on_conic(t, h, rng);
        HPoint<Rat> r = isogonal_conjugate(t, complement(i));
        try {
            HLine<Rat> axis = radical_axis_rBC(t, i, q);
            CHECK(on_line(axis, r));
        } catch (const geometry_error&) {
            continue;
        }
    }
    CHECK_THROWS_AS(radical_axis_rBC(t, i, P{Rat(13), Rat(14), Rat(30)}), geometry_error);
}

TEST_CASE("theorem10 iff") {
    auto t = t131415();
    SplitMix64 rng(117);

    // P = I reproduces the incenter case: R = X58, conic = (IG)*.
    {
        P i{Rat(13), Rat(14), Rat(15)};
        auto rep = check_theorem10(t, i, named_center(t, CenterId::K));
        require_pass(rep);
        CHECK(rep.witnesses["R"] == point_json(named_center(t, CenterId::X58)));
        CHECK(rep.witnesses["conic"] == conic_json(Conic<Rat>{Rat(-169), Rat(392), Rat(-225)}));
    }
    // P = G: R = K.
    {
        P g{Rat(1), Rat(1), Rat(1)};
        auto rep = check_theorem10(t, g, P{Rat(3), Rat(4), Rat(5)});
        if (!rep.degenerate_sample) require_pass(rep);
        CHECK(equal(isogonal_conjugate(t, complement(g)), named_center(t, CenterId::K)));
    }

    // Random P, on-conic and off-conic Q.
    int done = 0;
    while (done < 8) {
        P p = sample_point(rng);
        if (equal(p, named_center(t, CenterId::H))) continue;
        HPoint<Rat> pstar, pc;
        try {
            pstar = isogonal_conjugate(t, p);
            pc = complement(p);
            HLine<Rat> lstar = join(pstar, pc);
            if (on_line(lstar, P{Rat(1), Rat(0), Rat(0)}) || on_line(lstar, P{Rat(0), Rat(1), Rat(0)}) ||
                on_line(lstar, P{Rat(0), Rat(0), Rat(1)}))
                continue;
            Conic<Rat> k = circumconic_from_line(t, lstar);
            auto rep_on = check_theorem10(t, p, sample_on_conic(t, k, rng));
            if (!rep_on.degenerate_sample) {
                require_pass(rep_on);
                CHECK(rep_on.witnesses["Q_on_conic"] == true);
                CHECK(rep_on.witnesses["coaxal"] == true);
            }
            auto rep_off = check_theorem10(t, p, sample_off_conic(k, rng));
            if (!rep_off.degenerate_sample) {
                require_pass(rep_off);
                CHECK(rep_off.witnesses["coaxal"] == false);
            }
        } catch (const geometry_error&) {
            continue;
        }
        ++done;
    }

    // Q = R: radical axis tangent to the conic at R.
    {
        P p{Rat(7), Rat(3), Rat(5)};
        HPoint<Rat> r = isogonal_conjugate(t, complement(p));
        auto rep = check_theorem10(t, p, r);
        require_pass(rep);
        bool tangency_checked = false;
        for (const auto& sv : rep.sub_verdicts)
            if (sv.name == "axis_tangent_at_R") tangency_checked = true;
        CHECK(tangency_checked);
    }

    CHECK_THROWS_AS(check_theorem10(t, named_center(t, CenterId::H), P{Rat(1), Rat(2), Rat(3)}),
                    geometry_error);
    CHECK_THROWS_AS(check_theorem10(t, P{Rat(1), Rat(0), Rat(0)}, P{Rat(1), Rat(2), Rat(3)}),
                    geometry_error);
}

TEST_CASE("theorem10 degenerate vertex-line case") {
    auto t = t131415();
    SplitMix64 rng(119);
    // Solve for P with the line P*P_C through A: p(b^2 r - c^2 q) + qr(b^2 - c^2) = 0.
    int done = 0;
    while (done < 5) {
        Rat qv = rng.rational(12, 5);
        Rat rv = rng.rational(12, 5);
        Rat den = t.b() * t.b() * rv - t.c() * t.c() * qv;
        if (sgn(den) == 0 || sgn(qv) == 0 || sgn(rv) == 0) continue;
        Rat pv = qv * rv * (t.c() * t.c() - t.b() * t.b()) / den;
        if (sgn(pv) == 0) continue;
        P p{pv, qv, rv};
        if (sgn(Rat(pv + qv + rv)) == 0 || equal(p, named_center(t, CenterId::H))) continue;

        HPoint<Rat> r = isogonal_conjugate(t, complement(p));
        // On-line sample: a rational combination of P and R.
        Rat lam = rng.rational(9, 4);
        P q_on = canon(P{p.x + lam * r.x, p.y + lam * r.y, p.z + lam * r.z});
        if (!is_generic(q_on)) continue;
        auto rep = check_theorem10(t, p, q_on);
        if (rep.degenerate_sample) continue;
        require_pass(rep);
        CHECK(rep.witnesses.contains("conic_degenerates_through_vertex"));
        CHECK(rep.witnesses["coaxal"] == true);

        auto rep_off = check_theorem10(t, p, sample_off_line(join(p, r), rng));
        if (!rep_off.degenerate_sample) {
            require_pass(rep_off);
            CHECK(rep_off.witnesses["coaxal"] == false);
        }
        ++done;
    }
}

TEST_CASE("p equals h remark") {
    auto t = t131415();
    SplitMix64 rng(121);
    require_pass(check_pH_remark(t, named_center(t, CenterId::O)));  // axis = Euler line
    {
        auto rep = check_pH_remark(t, P{Rat(2), Rat(3), Rat(5)});
        require_pass(rep);
        HPoint<Rat> h = named_center(t, CenterId::H);
        CHECK(rep.witnesses["radical_axis"] == line_json(join(P{Rat(2), Rat(3), Rat(5)}, h)));
    }
    for (int i = 0; i < 10; ++i) {
        auto rep = check_pH_remark(t, sample_point(rng));
        if (rep.degenerate_sample) continue;
        require_pass(rep);
    }
    // Q on the circumcircle: circumcevian degenerates to Q itself but the
    // circles stay coaxal.
    Conic<Rat> circ{Rat(169), Rat(196), Rat(225)};
    auto rep = check_pH_remark(t, sample_on_conic(t, circ, rng));
    if (!rep.degenerate_sample) require_pass(rep);

    // Right triangle: H on a sideline.
    auto right = TriangleMetric<Rat>::from_sides(Rat(6), Rat(8), Rat(10));
    CHECK_THROWS_AS(check_pH_remark(right, P{Rat(1), Rat(2), Rat(3)}), geometry_error);
}

TEST_CASE("inversion suite") {
    auto t = t131415();
    for (InversionCase c : {InversionCase::X56, InversionCase::X58, InversionCase::K,
                            InversionCase::I})
        require_pass(check_inversion_suite(t, c));

    HeronianGenerator gen(11);
    for (int i = 0; i < 4; ++i) {
        auto tri = gen.next();
        for (InversionCase c : {InversionCase::X56, InversionCase::X58, InversionCase::K,
                                InversionCase::I}) {
            auto rep = check_inversion_suite(tri, c);
            if (rep.degenerate_sample) continue;
            require_pass(rep);
        }
    }
}

TEST_CASE("scale invariance of verdicts") {
    // Scaling the side lengths by a positive rational leaves every verdict
    // unchanged.
    SplitMix64 rng(123);
    auto t1 = t131415();
    for (Rat s : {Rat(2), Rat(1, 3), Rat(7, 5), Rat(12), Rat(3, 11)}) {
        auto ts = TriangleMetric<Rat>::from_sides(Rat(13) * s, Rat(14) * s, Rat(15) * s);
        P q = sample_point(rng);
        auto r1 = check_theorem5(t1, q);
        auto r2 = check_theorem5(ts, q);
        CHECK(r1.pass == r2.pass);
        CHECK(r1.witnesses["Q_on_conic"] == r2.witnesses["Q_on_conic"]);
        P p = sample_point(rng);
        auto r3 = check_theorem7(t1, p);
        auto r4 = check_theorem7(ts, p);
        if (!r3.degenerate_sample && !r4.degenerate_sample)
            CHECK(r3.witnesses["coaxal"] == r4.witnesses["coaxal"]);
    }
}

TEST_CASE("float backend theorem5") {
    // Non-Heronian float triangle: membership and coaxality verdicts under
    // the relative tolerance.
    auto t = TriangleMetric<double>::from_sides(1.3, 1.7, 2.2);
    auto k = named_center(t, CenterId::K);
    auto rep = check_theorem5(t, k, false);
    CHECK(rep.backend == "float");
    require_pass(rep);
}
