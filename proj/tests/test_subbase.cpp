#include "doctest.h"

#include "lightchaos/catalog_map.hpp"
#include "lightchaos/subbase.hpp"

#include <random>

using namespace lightchaos;

TEST_CASE("family sizes match the documented enumerations") {
    PhaseSpace unit = PhaseSpace::interval(0, 1);
    auto endpoints = generate_family(unit, SubbaseScheme::make(SubbaseScheme::Tag::EndpointIntervals, 4));
    CHECK(endpoints.size() == 8);

    PhaseSpace cantor = PhaseSpace::cantor();
    auto cyls = generate_family(cantor, SubbaseScheme::make(SubbaseScheme::Tag::Cylinders, 3));
    CHECK(cyls.size() == 6);

    PhaseSpace line = PhaseSpace::real_line();
    auto halves = generate_family(line, SubbaseScheme::make(SubbaseScheme::Tag::HalfLines, 2));
    CHECK(halves.size() == 6);  // cut points -1, 0, 1, two directions each
}

TEST_CASE("generation is deterministic and nonempty with witnesses") {
    PhaseSpace unit = PhaseSpace::interval(0, 1);
    auto a = generate_family(unit, SubbaseScheme::make(SubbaseScheme::Tag::BasicIntervals, 6));
    auto b = generate_family(unit, SubbaseScheme::make(SubbaseScheme::Tag::BasicIntervals, 6));
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].label == b[i].label);
    for (const auto& s : a) {
        PhasePoint w = family_witness(s, unit);
        CHECK(contains(s, w));
    }

    PhaseSpace cone = PhaseSpace::double_cone();
    auto hs = generate_family(cone, SubbaseScheme::make(SubbaseScheme::Tag::HalfSpaces, 1));
    CHECK(hs.size() >= 50);
    for (const auto& s : hs) {
        PhasePoint w = family_witness(s, cone);
        CHECK(contains_exact(s, w).value_or(false));
    }
}

TEST_CASE("pinned sets are always included, ahead of the generated ones") {
    PhaseSpace line = PhaseSpace::real_line();
    SubbaseScheme scheme = SubbaseScheme::make(SubbaseScheme::Tag::HalfLines, 2);
    scheme.pinned.push_back(SubbasicSet::half_line_left(-1));
    scheme.pinned.push_back(SubbasicSet::half_line_right(1));
    auto family = generate_family(line, scheme);
    CHECK(family.size() == 8);
    CHECK(family[0].label == "(-inf, -1)");
    CHECK(family[1].label == "(1, +inf)");
}

TEST_CASE("membership honors half-open endpoints") {
    SubbasicSet low = SubbasicSet::end_low(0, Rational(1, 4));
    CHECK(!contains(low, PhasePoint::real_exact(Rational(1, 4))));
    CHECK(contains(low, PhasePoint::real_exact(0)));
    SubbasicSet high = SubbasicSet::end_high(Rational(3, 4), 1);
    CHECK(contains(high, PhasePoint::real_exact(1)));
    CHECK(!contains(high, PhasePoint::real_exact(Rational(3, 4))));

    SubbasicSet cyl = SubbasicSet::cylinder(3, 0);
    CHECK(contains(cyl, PhasePoint::sequence(SeqPoint::constant(0))));
    CHECK(!contains(cyl, PhasePoint::sequence(SeqPoint::constant(1))));

    // the cone vertex has altitude 1, so it satisfies z > 1/2
    SubbasicSet up = SubbasicSet::half_space({Rational(0), Rational(0), Rational(1)}, Rational(1, 2));
    CHECK(contains_exact(up, PhasePoint::cone(CircleAngle::exact(0), 1)).value_or(false));
    CHECK(!contains_exact(up, PhasePoint::cone(CircleAngle::exact(0), 0)).value_or(true));
}

TEST_CASE("realize_region matches membership where exact") {
    PhaseSpace unit = PhaseSpace::interval(0, 1);
    auto family = generate_family(unit, SubbaseScheme::make(SubbaseScheme::Tag::BasicIntervals, 5));
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> num(0, 1000);
    for (const auto& s : family) {
        RegionOrNet r = realize_region(s, unit);
        REQUIRE(r.exact);
        for (int i = 0; i < 100; ++i) {
            Rational x(num(rng), 1000);
            CHECK(contains(s, PhasePoint::real_exact(x)) == r.region.contains(x));
        }
    }
}

TEST_CASE("realize examples") {
    PhaseSpace line = PhaseSpace::real_line();
    auto hl = realize_region(SubbasicSet::half_line_left(Rational(2, 3)), line);
    REQUIRE(hl.exact);
    CHECK(hl.region.parts()[0].str() == "(-inf, 2/3)");

    PhaseSpace unit = PhaseSpace::interval(0, 1);
    auto eh = realize_region(SubbasicSet::end_high(Rational(3, 4), 1), unit);
    REQUIRE(eh.exact);
    CHECK(eh.region.parts()[0].str() == "(3/4, 1]");

    PhaseSpace cantor = PhaseSpace::cantor();
    auto net = realize_region(SubbasicSet::cylinder(1, 0), cantor);
    CHECK(!net.exact);
    CHECK(net.net.size() == (1u << 3));  // depth 4, one coordinate pinned
    for (const auto& p : net.net) CHECK(p.seq.coordinate(1) == 0);
}

TEST_CASE("meets decisions are exact") {
    PhaseSpace unit = PhaseSpace::interval(0, 1);
    IntervalUnion image(Interval::closed(Rational(1, 2), 1));
    CHECK(!meets(SubbasicSet::end_low(0, Rational(1, 4)), image, unit));
    CHECK(meets(SubbasicSet::end_high(Rational(3, 4), 1), image, unit));

    // matches the negation arithmetic: f((-inf,a)) = (-a, inf) meets (-inf,-1) iff -a < -1
    PhaseSpace line = PhaseSpace::real_line();
    IntervalUnion reflected(Interval::right_ray(-2));  // image of (-inf, 2) under negation
    CHECK(meets(SubbasicSet::half_line_left(-1), reflected, line));
    IntervalUnion reflected2(Interval::right_ray(Rational(1, 2)));
    CHECK(!meets(SubbasicSet::half_line_left(-1), reflected2, line));
}

TEST_CASE("meets is symmetric on exactly realizable pairs") {
    PhaseSpace unit = PhaseSpace::interval(0, 1);
    auto family = generate_family(unit, SubbaseScheme::make(SubbaseScheme::Tag::BasicIntervals, 4));
    for (const auto& s : family) {
        for (const auto& t : family) {
            IntervalUnion rs = realize_region(s, unit).region;
            IntervalUnion rt = realize_region(t, unit).region;
            CHECK(meets(s, rt, unit) == meets(t, rs, unit));
        }
    }
}

TEST_CASE("compact-open generation yields enough nonempty sets") {
    PhaseSpace unit = PhaseSpace::interval(0, 1);
    auto co = generate_family(unit, SubbaseScheme::make(SubbaseScheme::Tag::CompactOpen, 5));
    CHECK(co.size() >= 40);
    for (const auto& s : co) {
        CHECK(s.kind == SubbasicSet::Kind::CoSet);
        CHECK(!s.G.empty());  // constants witness nonemptiness
    }
    auto po = generate_family(unit, SubbaseScheme::make(SubbaseScheme::Tag::PointOpen, 4));
    for (const auto& s : po) CHECK(s.kind == SubbasicSet::Kind::PoSet);

    PhaseSpace circ = PhaseSpace::circle();
    auto cco = generate_family(circ, SubbaseScheme::make(SubbaseScheme::Tag::CompactOpen, 4));
    CHECK(cco.size() >= 30);
    for (const auto& s : cco) CHECK(s.on_circle);
}

TEST_CASE("exact surd membership agrees with the float embedding") {
    PhaseSpace cone = PhaseSpace::double_cone();
    auto hs = generate_family(cone, SubbaseScheme::make(SubbaseScheme::Tag::HalfSpaces, 1));
    int compared = 0;
    for (const auto& s : hs) {
        for (long long k = 0; k < 24; k += 5) {
            PhasePoint p = PhasePoint::cone(CircleAngle::exact(Rational(k, 24)), Rational(1, 4));
            auto exact = contains_exact(s, p);
            REQUIRE(exact.has_value());
            Vec3 v = cone_embedding(p);
            double margin = rat_to_double(s.normal[0]) * v.x + rat_to_double(s.normal[1]) * v.y +
                            rat_to_double(s.normal[2]) * v.z - rat_to_double(s.offset);
            if (std::fabs(margin) > 1e-9) {
                CHECK(*exact == (margin > 0));
                ++compared;
            }
        }
    }
    CHECK(compared > 100);
}
