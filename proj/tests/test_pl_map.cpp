#include "doctest.h"

#include "lightchaos/catalog_map.hpp"
#include "lightchaos/pl_map.hpp"

#include <random>

using namespace lightchaos;

namespace {

// Deterministic random self-map of [0,1] with small rational knots.
PLMap random_self_map(std::mt19937_64& rng, int interior_knots) {
    std::uniform_int_distribution<int> num(0, 32);
    std::vector<Rational> xs{0, 1};
    while (static_cast<int>(xs.size()) < interior_knots + 2) {
        Rational x(num(rng), 32);
        bool fresh = true;
        for (const auto& v : xs) fresh = fresh && v != x;
        if (fresh) xs.push_back(x);
    }
    std::sort(xs.begin(), xs.end());
    std::vector<PLMap::Knot> knots;
    for (const auto& x : xs) knots.emplace_back(x, Rational(num(rng), 32));
    return PLMap(std::move(knots));
}

Rational random_rational01(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(0, 64);
    return Rational(num(rng), 64);
}

}  // namespace

TEST_CASE("eval on the catalog interval maps") {
    PLMap trunc = make_truncated_tent();
    CHECK(trunc.eval(Rational(1, 2)) == Rational(1, 2));  // middle branch
    CHECK(trunc.eval(Rational(1, 8)) == Rational(1, 4));
    CHECK(trunc.eval(Rational(7, 8)) == Rational(1, 4));

    PLMap f37 = make_f37();
    CHECK(f37.eval(0) == 1);
    CHECK(f37.eval(Rational(1, 2)) == Rational(1, 2));
    CHECK(f37.eval(1) == 1);

    PLMap id = PLMap::identity(0, 1);
    CHECK(id.eval(Rational(3, 7)) == Rational(3, 7));
    CHECK_THROWS_AS(id.eval(Rational(2)), std::domain_error);
}

TEST_CASE("composition: involution and tent squared") {
    PLMap neg = PLMap::from_points({{-1, 1}, {1, -1}});
    PLMap id2 = pl_compose(neg, neg);
    CHECK(id2 == PLMap::identity(-1, 1));

    PLMap tent = make_tent();
    PLMap tent2 = pl_compose(tent, tent);
    std::vector<Rational> expect{0, Rational(1, 4), Rational(1, 2), Rational(3, 4), 1};
    REQUIRE(tent2.knots().size() == 5);
    for (std::size_t i = 0; i < 5; ++i) CHECK(tent2.knots()[i].first == expect[i]);

    PLMap f37 = make_f37();
    PLMap f37_2 = pl_compose(f37, f37);
    CHECK(f37_2.eval(0) == 1);  // f(0)=1, f(1)=1
}

TEST_CASE("composition associativity on random maps, exactly") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 8; ++trial) {
        PLMap f = random_self_map(rng, 3);
        PLMap g = random_self_map(rng, 3);
        PLMap h = random_self_map(rng, 3);
        PLMap left = pl_compose(pl_compose(h, g), f);
        PLMap right = pl_compose(h, pl_compose(g, f));
        for (int i = 0; i < 100; ++i) {
            Rational x = random_rational01(rng);
            CHECK(left.eval(x) == right.eval(x));
        }
    }
}

TEST_CASE("images of the catalog maps") {
    PLMap f37 = make_f37();
    IntervalUnion whole(Interval::closed(0, 1));
    CHECK(f37.image(whole) == IntervalUnion(Interval::closed(Rational(1, 2), 1)));

    PLMap tent = make_tent();
    CHECK(tent.image(IntervalUnion(Interval::closed(0, Rational(1, 2)))) ==
          IntervalUnion(Interval::closed(0, 1)));

    // open/closed endpoint flags follow the monotone pieces
    IntervalUnion img = tent.image(IntervalUnion(Interval{Endpoint::at(0), Endpoint::at(Rational(1, 4)), true, false}));
    REQUIRE(img.parts().size() == 1);
    CHECK(img.parts()[0].str() == "[0, 1/2)");
}

TEST_CASE("image oracle: sampled points land in the image") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        PLMap f = random_self_map(rng, 4);
        Rational a = random_rational01(rng), b = random_rational01(rng);
        if (b < a) std::swap(a, b);
        if (a == b) continue;
        IntervalUnion region(Interval::closed(a, b));
        IntervalUnion img = f.image(region);
        for (int i = 0; i <= 1000; ++i) {
            Rational x = a + (b - a) * Rational(i, 1000);
            CHECK(img.contains(f.eval(x)));
        }
        // endpoint-and-breakpoint construction agrees
        IntervalUnion oracle;
        std::vector<Rational> nodes{a, b};
        for (const auto& k : f.knots())
            if (k.first > a && k.first < b) nodes.push_back(k.first);
        std::sort(nodes.begin(), nodes.end());
        for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
            Rational fa = f.eval(nodes[i]), fb = f.eval(nodes[i + 1]);
            oracle.push(Interval::closed(rat_min(fa, fb), rat_max(fa, fb)));
        }
        CHECK(img == oracle);
    }
}

TEST_CASE("preimage of a value") {
    PLMap trunc = make_truncated_tent();
    IntervalUnion pre = trunc.preimage_of_value(Rational(1, 2));
    // the plateau [1/4,3/4] plus nothing else at level 1/2
    REQUIRE(pre.parts().size() == 1);
    CHECK(pre.parts()[0].str() == "[1/4, 3/4]");

    PLMap tent = make_tent();
    IntervalUnion pre2 = tent.preimage_of_value(Rational(1, 2));
    REQUIRE(pre2.parts().size() == 2);
    CHECK(pre2.parts()[0].str() == "[1/4, 1/4]");
    CHECK(pre2.parts()[1].str() == "[3/4, 3/4]");
}

TEST_CASE("fixed points of tent and f_3_7") {
    IntervalUnion fx = make_tent().fixed_points();
    REQUIRE(fx.parts().size() == 2);
    CHECK(fx.parts()[0].lo.value == 0);
    CHECK(fx.parts()[1].lo.value == Rational(2, 3));

    IntervalUnion f37fx = make_f37().fixed_points();
    REQUIRE(f37fx.parts().size() == 2);
    CHECK(f37fx.parts()[0].lo.value == Rational(1, 2));
    CHECK(f37fx.parts()[1].lo.value == 1);
}

TEST_CASE("compose rejects range violations") {
    PLMap small = PLMap::from_points({{0, 0}, {1, Rational(1, 2)}});
    PLMap narrow = PLMap::identity(0, Rational(1, 4));
    CHECK_THROWS_AS(pl_compose(narrow, small), std::domain_error);
}
