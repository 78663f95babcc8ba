#include "doctest.h"

#include "lightchaos/catalog_map.hpp"

#include <random>

using namespace lightchaos;

TEST_CASE("closed-form iterates match repeated evaluation") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> num(-64, 64);

    System contraction = make_system("contraction_3_6");
    for (int i = 0; i < 100; ++i) {
        PhasePoint y = PhasePoint::real_exact(Rational(num(rng), 64));
        PhasePoint direct = y;
        for (int k = 1; k <= 16; ++k) {
            direct = map_eval(contraction.map, direct);
            CHECK(iterate_eval(contraction.map, k, y) == direct);
        }
        // spec'd closed form y / (k|y| + 1)
        Rational yv = y.real.exact;
        CHECK(iterate_eval(contraction.map, 5, y).real.exact == yv / (5 * rat_abs(yv) + 1));
    }

    System tent = make_system("tent");
    for (int i = 0; i < 100; ++i) {
        PhasePoint x = PhasePoint::real_exact(Rational(std::abs(num(rng)), 64));
        PhasePoint direct = x;
        for (int k = 1; k <= 16; ++k) {
            direct = map_eval(tent.map, direct);
            CHECK(iterate_eval(tent.map, k, x) == direct);
        }
    }
}

TEST_CASE("negation is an involution; tent(2, 1/5) = 4/5") {
    System neg = make_system("negation");
    PhasePoint x = PhasePoint::real_exact(Rational(37, 5));
    CHECK(iterate_eval(neg.map, 2, x) == x);

    System tent = make_system("tent");
    CHECK(iterate_eval(tent.map, 2, PhasePoint::real_exact(Rational(1, 5))).real.exact ==
          Rational(4, 5));
}

TEST_CASE("orbit cycle detection") {
    System tent = make_system("tent");
    OrbitResult o = orbit(tent.map, PhasePoint::real_exact(Rational(1, 3)), 3);
    REQUIRE(o.points.size() == 4);
    CHECK(o.points[1].real.exact == Rational(2, 3));
    CHECK(o.points[3].real.exact == Rational(2, 3));
    CHECK(o.cycle_found);
    CHECK(o.cycle_start == 1);
    CHECK(o.cycle_period == 1);

    System neg = make_system("negation");
    OrbitResult p = orbit(neg.map, PhasePoint::real_exact(5), 2);
    CHECK(p.points[2].real.exact == 5);
    CHECK(p.cycle_found);
    CHECK(p.cycle_period == 2);

    System f37 = make_system("f_3_7");
    OrbitResult q = orbit(f37.map, PhasePoint::real_exact(0), 2);
    CHECK(q.points[1].real.exact == 1);
    CHECK(q.points[2].real.exact == 1);
}

TEST_CASE("forward images across tags") {
    System neg = make_system("negation");
    IntervalUnion ray(Interval::left_ray(Rational(3)));
    IntervalUnion img = forward_image(neg.map, ray);
    REQUIRE(img.parts().size() == 1);
    CHECK(img.parts()[0].str() == "(-3, +inf)");

    System abs_map = make_system("absolute_value");
    IntervalUnion line(Interval::whole_line());
    CHECK(forward_image(abs_map.map, line).parts()[0].str() == "[0, +inf)");
    IntervalUnion seg(Interval::open(-2, 1));
    IntervalUnion folded = forward_image(abs_map.map, seg);
    REQUIRE(folded.parts().size() == 1);
    CHECK(folded.parts()[0].str() == "[0, 2)");

    System contraction = make_system("contraction_3_6");
    IntervalUnion whole(Interval::closed(-1, 1));
    CHECK(forward_image(contraction.map, whole).parts()[0].str() == "[-1/2, 1/2]");
}

TEST_CASE("glissorotation: closed form, vertices, and full period") {
    System g = make_system("gliss_1_3");
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> num(-8, 8);
    for (int i = 0; i < 50; ++i) {
        PhasePoint p = PhasePoint::cone(CircleAngle::exact(Rational(num(rng) + 8, 17)),
                                        Rational(num(rng), 8));
        CHECK(iterate_eval(g.map, 6, p) == p);  // period divides 2q = 6
        PhasePoint direct = p;
        for (int k = 1; k <= 6; ++k) {
            direct = map_eval(g.map, direct);
            CHECK(iterate_eval(g.map, k, p) == direct);
        }
    }
    // vertices swap with period 2
    PhasePoint top = PhasePoint::cone(CircleAngle::exact(0), 1);
    PhasePoint bottom = PhasePoint::cone(CircleAngle::exact(0), -1);
    CHECK(map_eval(g.map, top) == bottom);
    CHECK(iterate_eval(g.map, 2, top) == top);

    System g25 = make_system("gliss_2_5");
    // base-circle points are fixed by the altitude flip, so their period is q
    PhasePoint base = PhasePoint::cone(CircleAngle::exact(Rational(1, 4)), 0);
    CHECK(iterate_eval(g25.map, 10, base) == base);
    CHECK(iterate_eval(g25.map, 5, base) == base);
    for (int k = 1; k <= 4; ++k) CHECK(!(iterate_eval(g25.map, k, base) == base));
    PhasePoint off_base = PhasePoint::cone(CircleAngle::exact(Rational(1, 4)), Rational(1, 2));
    CHECK(!(iterate_eval(g25.map, 5, off_base) == off_base));
    CHECK(iterate_eval(g25.map, 10, off_base) == off_base);
}

TEST_CASE("irrational rotation never returns") {
    System rot = make_system("rotation_golden");
    PhasePoint p = PhasePoint::circle(Rational(1, 4));
    for (int k = 1; k <= 32; ++k) CHECK(!(iterate_eval(rot.map, k, p) == p));
    CHECK(periodic_structure(rot.map).kind == PeriodicStructure::Kind::Empty);
}

TEST_CASE("shift acts on prefixes and stream offsets") {
    System shift = make_system("shift_subsystem");
    PhasePoint p = PhasePoint::sequence(SeqPoint::word_then_constant({1, 0, 1}, 0));
    PhasePoint q = iterate_eval(shift.map, 2, p);
    CHECK(q.seq.coordinate(0) == 1);
    CHECK(q.seq.coordinate(1) == 0);
    PhasePoint s = PhasePoint::sequence(SeqPoint::stream(0));
    CHECK(iterate_eval(shift.map, 5, s).seq.stream_offset == 5);

    PhasePoint zeros = PhasePoint::sequence(SeqPoint::constant(0));
    CHECK(map_eval(shift.map, zeros) == zeros);
}

TEST_CASE("structural flags") {
    CHECK(map_isometry(make_system("negation").map));
    CHECK(map_isometry(make_system("gliss_1_3").map));
    CHECK(map_isometry(make_system("rotation_golden").map));
    CHECK(!map_isometry(make_system("tent").map));
    CHECK(map_nonexpansive(make_system("contraction_3_6").map));
    CHECK(map_nonexpansive(make_system("absolute_value").map));
    CHECK(!map_nonexpansive(make_system("tent").map));

    CHECK(periodic_structure(make_system("negation").map).kind ==
          PeriodicStructure::Kind::AllPeriodic);
    CHECK(periodic_structure(make_system("absolute_value").map).region.contains(Rational(7)));
    CHECK(!periodic_structure(make_system("absolute_value").map).region.contains(Rational(-1)));
}

TEST_CASE("domain errors") {
    System tent = make_system("tent");
    CHECK_THROWS_AS(map_eval(tent.map, PhasePoint::real_exact(Rational(3, 2))), std::domain_error);
    CHECK_THROWS_AS(map_eval(tent.map, PhasePoint::circle(Rational(1, 2))), std::domain_error);
}
