#include "doctest.h"

#include "lightchaos/detectors.hpp"

#include <set>

using namespace lightchaos;

namespace {

std::vector<SubbasicSet> family_for(const System& sys, SubbaseScheme::Tag tag, int r) {
    return generate_family(sys.space, SubbaseScheme::make(tag, r));
}

// Independent periodic-point oracle: dense grid plus exact verification of the
// per-cell linear solve, using only iterated evaluation (never pl_compose).
std::set<Rational> brute_force_periodic(const System& sys, unsigned k) {
    std::set<Rational> found;
    const Rational lo = sys.space.lo, hi = sys.space.hi;
    long long cells = 1ll << (k + 3);
    auto fk = [&](const Rational& x) {
        return iterate_eval(sys.map, k, PhasePoint::real_exact(x)).real.exact;
    };
    for (long long i = 0; i < cells; ++i) {
        Rational u = lo + (hi - lo) * Rational(i, cells);
        Rational v = lo + (hi - lo) * Rational(i + 1, cells);
        Rational gu = fk(u), gv = fk(v);
        Rational m = (gv - gu) / (v - u);
        if (m == 1) {
            if (gu == u) {
                found.insert(u);
                found.insert(v);
            }
            continue;
        }
        Rational x = (gu - m * u) / (1 - m);
        if (x >= u && x <= v && fk(x) == x) found.insert(x);
    }
    return found;
}

}  // namespace

TEST_CASE("negation with half-lines is lightly transitive and periodically dense") {
    System sys = make_system("negation");
    auto family = family_for(sys, SubbaseScheme::Tag::HalfLines, 3);
    Budget budget;

    Verdict vt = check_light_transitivity(sys, family, budget);
    REQUIRE(vt.is_holds());
    for (const auto& w : vt.witnesses) {
        CHECK(w.k >= 1);
        CHECK(replay_witness(sys, family, w));
    }
    // opposite-side pairs connect at k = 1, same-side pairs at k = 2
    for (const auto& U : family) {
        for (const auto& V : family) {
            bool same_side = U.kind == V.kind;
            if (same_side) {
                auto w2 = transitivity_pair_witness_at_k(sys, U, V, 2);
                REQUIRE(w2.has_value());
                CHECK(replay_witness(sys, family, *w2));
            } else {
                auto w1 = transitivity_pair_witness_at_k(sys, U, V, 1);
                REQUIRE(w1.has_value());
            }
        }
    }

    Verdict vp = check_light_periodic_density(sys, family, budget);
    REQUIRE(vp.is_holds());
    for (const auto& w : vp.witnesses) {
        CHECK(w.k <= 2);
        CHECK(replay_witness(sys, family, w));
    }
}

TEST_CASE("the absolute value map fails both light properties with certificates") {
    System sys = make_system("absolute_value");
    SubbaseScheme scheme = SubbaseScheme::make(SubbaseScheme::Tag::HalfLines, 2);
    scheme.pinned.push_back(SubbasicSet::half_line_left(-1));
    scheme.pinned.push_back(SubbasicSet::half_line_right(1));
    auto family = generate_family(sys.space, scheme);
    Budget budget;

    Verdict vt = check_light_transitivity(sys, family, budget);
    REQUIRE(vt.is_fails());
    REQUIRE(vt.certificate.has_value());
    CHECK(vt.certificate->kind == Certificate::Kind::AbsorbingSet);
    CHECK(vt.certificate->trap.contains(Rational(5)));
    CHECK(!vt.certificate->trap.contains(Rational(-1, 2)));
    CHECK(replay_certificate(sys, *vt.certificate));

    Verdict vp = check_light_periodic_density(sys, family, budget);
    REQUIRE(vp.is_fails());
    REQUIRE(vp.certificate.has_value());
    CHECK(vp.certificate->kind == Certificate::Kind::PeriodicSetCharacterization);
    CHECK(vp.certificate->argument == "idempotent-fixed-ray");
    CHECK(replay_certificate(sys, *vp.certificate));
}

TEST_CASE("shift subsystem over cylinders: lightly chaotic, not periodically dense") {
    System sys = make_system("shift_subsystem");
    auto family = family_for(sys, SubbaseScheme::Tag::Cylinders, 4);
    Budget budget;
    budget.k_max = 1u << 12;

    Verdict vp = check_light_periodic_density(sys, family, budget);
    REQUIRE(vp.is_holds());
    for (const auto& w : vp.witnesses) CHECK(w.k == 1);  // constant sequences

    Verdict vt = check_light_transitivity(sys, family, budget);
    REQUIRE(vt.is_holds());
    for (const auto& w : vt.witnesses) {
        CHECK(w.k <= (1u << 12));
        CHECK(replay_witness(sys, family, w));
        CHECK(w.point.seq.tail == SeqPoint::Tail::Stream);  // rides the transitive stream
    }

    // full periodic density fails on the prefix-cylinder family
    Verdict vf = check_periodic_density(sys, 2, budget);
    REQUIRE(vf.is_fails());
    REQUIRE(vf.certificate.has_value());
    CHECK(vf.certificate->argument == "shift-constants");
    CHECK(vf.certificate->finite_points.size() == 2);
    CHECK(replay_certificate(sys, *vf.certificate));
}

TEST_CASE("contraction: light sensitivity fails with the closed-form certificate") {
    System sys = make_system("contraction_3_6");
    auto family = family_for(sys, SubbaseScheme::Tag::BasicIntervals, 8);
    Budget budget;

    for (Rational delta : {Rational(1, 2), Rational(1, 4), Rational(1, 10)}) {
        Verdict vs = check_light_sensitivity(sys, family, delta, budget);
        REQUIRE(vs.is_fails());
        REQUIRE(vs.certificate.has_value());
        CHECK(vs.certificate->kind == Certificate::Kind::PointwiseBound);
        CHECK(vs.certificate->argument == "closed-form-contraction");
        CHECK(vs.certificate->base_x.real.exact == 0);
        CHECK(vs.certificate->bound_value < delta);
        CHECK(replay_certificate(sys, *vs.certificate));
    }

    Verdict vt = check_transitivity(sys, 8, budget);
    REQUIRE(vt.is_fails());
    CHECK(replay_certificate(sys, *vt.certificate));
}

TEST_CASE("truncated-range map: full properties fail, light sensitivity holds") {
    System sys = make_system("f_3_7");
    Budget budget;

    Verdict vt = check_transitivity(sys, 8, budget);
    REQUIRE(vt.is_fails());
    REQUIRE(vt.certificate.has_value());
    CHECK(vt.certificate->kind == Certificate::Kind::RangeBound);
    CHECK(vt.certificate->trap == IntervalUnion(Interval::closed(Rational(1, 2), 1)));
    CHECK(replay_certificate(sys, *vt.certificate));

    Verdict vp = check_periodic_density(sys, 8, budget);
    REQUIRE(vp.is_fails());
    REQUIRE(vp.certificate.has_value());
    // the exact solve inside the trap finds P(f) = {1/2, 1}
    std::set<std::string> pts;
    for (const auto& p : vp.certificate->finite_points) pts.insert(p.str());
    CHECK(pts == std::set<std::string>{"1/2", "1"});
    CHECK(replay_certificate(sys, *vp.certificate));

    Verdict vs = check_sensitivity(sys, Rational(1, 5), 8, budget);
    REQUIRE(vs.is_fails());
    REQUIRE(vs.certificate.has_value());
    CHECK(vs.certificate->argument == "plateau");
    CHECK(vs.certificate->base_x.real.exact == Rational(1, 2));  // the plateau's fixed point
    CHECK(replay_certificate(sys, *vs.certificate));

    // light chaos with respect to the end-interval subbase: certified failures
    auto endpoints = family_for(sys, SubbaseScheme::Tag::EndpointIntervals, 4);
    Verdict lt = check_light_transitivity(sys, endpoints, budget);
    REQUIRE(lt.is_fails());
    CHECK(lt.certificate->kind == Certificate::Kind::RangeBound);

    Verdict lp = check_light_periodic_density(sys, endpoints, budget);
    REQUIRE(lp.is_fails());

    Verdict ls = check_light_sensitivity(sys, endpoints, Rational(1, 5), budget);
    REQUIRE(ls.is_holds());
    for (const auto& w : ls.witnesses) CHECK(replay_witness(sys, endpoints, w, Rational(1, 5)));
}

TEST_CASE("tent map: full chaos verified over the basic family") {
    System sys = make_system("tent");
    Budget budget;

    Verdict vt = check_transitivity(sys, 8, budget);
    REQUIRE(vt.is_holds());
    unsigned max_k = 0;
    for (const auto& w : vt.witnesses) max_k = std::max(max_k, w.k);
    CHECK(max_k <= 16);

    Verdict vp = check_periodic_density(sys, 8, budget);
    REQUIRE(vp.is_holds());
    for (const auto& w : vp.witnesses) CHECK(w.k <= 8);

    Verdict vs = check_sensitivity(sys, Rational(1, 4), 8, budget);
    REQUIRE(vs.is_holds());

    // light sensitivity over the endpoint subbase with witnesses below k = 12
    auto endpoints = family_for(sys, SubbaseScheme::Tag::EndpointIntervals, 4);
    Verdict ls = check_light_sensitivity(sys, endpoints, Rational(1, 4), budget);
    REQUIRE(ls.is_holds());
    for (const auto& w : ls.witnesses) CHECK(w.k <= 12);
}

TEST_CASE("negation: sensitivity fails by the isometry certificate") {
    System sys = make_system("negation");
    Budget budget;
    Verdict vs = check_sensitivity(sys, 1, 4, budget);
    REQUIRE(vs.is_fails());
    CHECK(vs.certificate->argument == "isometry");
    CHECK(replay_certificate(sys, *vs.certificate));
}

TEST_CASE("find_periodic_points: exact per-piece solves") {
    Budget budget;
    PLMap tent = make_tent();
    IntervalUnion unit(Interval::closed(0, 1));

    auto fix1 = find_periodic_points(tent, 1, unit, budget);
    REQUIRE(fix1.complete);
    REQUIRE(fix1.records.size() == 2);
    CHECK(fix1.records[0].point.real.exact == 0);
    CHECK(fix1.records[1].point.real.exact == Rational(2, 3));

    auto fix2 = find_periodic_points(tent, 2, unit, budget);
    REQUIRE(fix2.records.size() == 4);
    std::set<Rational> values;
    for (const auto& r : fix2.records) values.insert(r.point.real.exact);
    CHECK(values == std::set<Rational>{0, Rational(2, 5), Rational(2, 3), Rational(4, 5)});
    for (const auto& r : fix2.records) {
        if (r.point.real.exact == Rational(2, 5) || r.point.real.exact == Rational(4, 5))
            CHECK(r.period == 2);
        else
            CHECK(r.period == 1);
    }

    auto f37fix = find_periodic_points(make_f37(), 1, unit, budget);
    REQUIRE(f37fix.records.size() == 2);
    CHECK(f37fix.records[0].point.real.exact == Rational(1, 2));
    CHECK(f37fix.records[1].point.real.exact == 1);
}

TEST_CASE("find_periodic_points agrees with the brute-force oracle for k <= 4") {
    Budget budget;
    for (const char* tag : {"tent", "truncated_tent", "f_3_7"}) {
        System sys = make_system(tag);
        IntervalUnion domain = sys.space.full_region();
        for (unsigned k = 1; k <= 4; ++k) {
            auto solved = find_periodic_points(sys.map.pl, k, domain, budget);
            REQUIRE(solved.complete);
            std::set<Rational> got;
            for (const auto& r : solved.records) got.insert(r.point.real.exact);
            CHECK(got == brute_force_periodic(sys, k));
        }
    }
}

TEST_CASE("orbit density probe") {
    System tent = make_system("tent");
    GapReport r1 = orbit_density_probe(tent, PhasePoint::real_exact(Rational(1, 3)), 100,
                                       Rational(1, 8));
    CHECK(r1.visited_cells == 2);  // cells of 1/3 and 2/3 only
    CHECK(r1.cycle_detected);

    System neg = make_system("negation");
    CHECK_THROWS_AS(orbit_density_probe(neg, PhasePoint::real_exact(5), 10, Rational(1, 4)),
                    std::invalid_argument);  // unbounded space has no epsilon grid

    GapReport r3 = orbit_density_probe(tent, PhasePoint::real_exact(Rational(2, 1031)), 100000,
                                       Rational(1, 64));
    CHECK(r3.coverage > 0.5);  // long rational orbit spreads over most cells
    CHECK(r3.cycle_detected);  // denominators are preserved, so the orbit cycles
}

TEST_CASE("budget monotonicity: enlarging the budget only resolves UNKNOWN") {
    System sys = make_system("negation");
    auto family = family_for(sys, SubbaseScheme::Tag::HalfLines, 3);
    Budget tiny;
    tiny.k_max = 1;
    Verdict small = check_light_transitivity(sys, family, tiny);
    CHECK(small.is_unknown());  // same-side pairs need k = 2; no certificate applies
    Budget two;
    two.k_max = 2;
    Verdict larger = check_light_transitivity(sys, family, two);
    CHECK(larger.is_holds());

    // FAILS verdicts are stable under budget growth
    System abs_sys = make_system("absolute_value");
    SubbaseScheme scheme = SubbaseScheme::make(SubbaseScheme::Tag::HalfLines, 2);
    scheme.pinned.push_back(SubbasicSet::half_line_left(-1));
    auto abs_family = generate_family(abs_sys.space, scheme);
    Budget b1, b2;
    b1.k_max = 8;
    b2.k_max = 128;
    CHECK(check_light_transitivity(abs_sys, abs_family, b1).is_fails());
    CHECK(check_light_transitivity(abs_sys, abs_family, b2).is_fails());
}

TEST_CASE("light-vs-full consistency on the tent map") {
    // full transitivity at resolution 8 implies light transitivity for the
    // endpoint scheme, whose members are unions of 8-basic sets
    System sys = make_system("tent");
    Budget budget;
    Verdict full = check_transitivity(sys, 8, budget);
    REQUIRE(full.is_holds());
    Verdict light = check_light_transitivity(
        sys, family_for(sys, SubbaseScheme::Tag::EndpointIntervals, 4), budget);
    CHECK(light.is_holds());
}

TEST_CASE("glissorotation: periodic density over half-spaces with exact witnesses") {
    for (const char* tag : {"gliss_1_3", "gliss_2_5"}) {
        System sys = make_system(tag);
        auto family = family_for(sys, SubbaseScheme::Tag::HalfSpaces, 1);
        REQUIRE(family.size() >= 50);
        Budget budget;
        Verdict vp = check_light_periodic_density(sys, family, budget);
        REQUIRE(vp.is_holds());
        unsigned two_q = 2 * static_cast<unsigned>(sys.map.gliss_q);
        for (const auto& w : vp.witnesses) {
            CHECK(two_q % w.k == 0);  // period divides 2q
            CHECK(replay_witness(sys, family, w));
        }
    }
}

TEST_CASE("glissorotation: light sensitivity fails by the cap certificate") {
    System sys = make_system("gliss_1_3");
    auto family = family_for(sys, SubbaseScheme::Tag::HalfSpaces, 1);
    Budget budget;
    Verdict vs = check_light_sensitivity(sys, family, Rational(1, 10), budget);
    REQUIRE(vs.is_fails());
    CHECK(vs.certificate->argument == "cone-isometry-cap");
    CHECK(vs.certificate->approximate);  // evidence-level
    CHECK(replay_certificate(sys, *vs.certificate));
}
