#include "doctest.h"

#include "lightchaos/interval_union.hpp"

using namespace lightchaos;

TEST_CASE("interval emptiness and membership") {
    Interval iv = Interval::open(0, 1);
    CHECK(!iv.contains(Rational(0)));
    CHECK(iv.contains(Rational(1, 2)));
    CHECK(Interval::open(1, 1).empty());
    CHECK(!Interval::point(1).empty());
    CHECK(Interval{Endpoint::at(1), Endpoint::at(1), true, false}.empty());
}

TEST_CASE("normalization merges touching intervals only when a point is shared") {
    IntervalUnion u;
    u.push(Interval::open(0, 1));
    u.push(Interval{Endpoint::at(1), Endpoint::at(2), true, false});  // [1,2)
    CHECK(u.parts().size() == 1);
    CHECK(u.parts()[0].str() == "(0, 2)");

    IntervalUnion v;
    v.push(Interval::open(0, 1));
    v.push(Interval::open(1, 2));
    CHECK(v.parts().size() == 2);  // 1 is missing from both
    CHECK(!v.contains(Rational(1)));
}

TEST_CASE("intersection honors open/closed flags") {
    IntervalUnion a(Interval{Endpoint::at(0), Endpoint::at(Rational(1, 2)), true, false});  // [0,1/2)
    IntervalUnion b(Interval::closed(Rational(1, 2), 1));
    CHECK(!a.meets(b));
    IntervalUnion c(Interval::closed(Rational(1, 4), 1));
    CHECK(a.meets(c));
    CHECK(a.intersect(c).parts()[0].str() == "[1/4, 1/2)");
}

TEST_CASE("complement within a domain") {
    IntervalUnion u(Interval::open(Rational(1, 4), Rational(1, 2)));
    IntervalUnion comp = u.complement_within(Interval::closed(0, 1));
    REQUIRE(comp.parts().size() == 2);
    CHECK(comp.parts()[0].str() == "[0, 1/4]");
    CHECK(comp.parts()[1].str() == "[1/2, 1]");
    CHECK(comp.unite(u) == IntervalUnion(Interval::closed(0, 1)));
}

TEST_CASE("subset and rays") {
    IntervalUnion ray(Interval::left_ray(-1));  // (-inf, -1)
    CHECK(ray.contains(Rational(-2)));
    CHECK(!ray.contains(Rational(-1)));
    IntervalUnion wider(Interval::left_ray(0));
    CHECK(ray.subset_of(wider));
    CHECK(!wider.subset_of(ray));
    CHECK(!ray.diameter().has_value());
}

TEST_CASE("representative is inside the region") {
    IntervalUnion u(Interval::open(0, 1));
    CHECK(u.contains(u.representative()));
    IntervalUnion r(Interval::right_ray(3));
    CHECK(r.contains(r.representative()));
    IntervalUnion pt(Interval::point(Rational(2, 7)));
    CHECK(pt.representative() == Rational(2, 7));
}
