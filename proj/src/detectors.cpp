#include "lightchaos/detectors.hpp"

#include "lightchaos/stream_word.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <stdexcept>

namespace lightchaos {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    Clock::time_point end;
    explicit Deadline(const Budget& b) : end(Clock::now() + std::chrono::milliseconds(b.wall_clock_ms)) {}
    bool passed() const { return Clock::now() > end; }
};

IntervalUnion exact_region(const SubbasicSet& set, const PhaseSpace& space) {
    RegionOrNet r = realize_region(set, space);
    if (!r.exact) throw std::domain_error("expected an exactly realizable set: " + set.label);
    return r.region;
}

bool is_line_set(const SubbasicSet& s) {
    switch (s.kind) {
        case SubbasicSet::Kind::HalfLineLeft:
        case SubbasicSet::Kind::HalfLineRight:
        case SubbasicSet::Kind::EndLow:
        case SubbasicSet::Kind::EndHigh:
        case SubbasicSet::Kind::OpenInterval:
            return true;
        default:
            return false;
    }
}

bool is_sequence_set(const SubbasicSet& s) {
    return s.kind == SubbasicSet::Kind::Cylinder || s.kind == SubbasicSet::Kind::PrefixCylinder;
}

// ---------------------------------------------------------------------------
// Line-like engine
// ---------------------------------------------------------------------------

// Forward image chain R_0 = U, R_k = f^k(U), built lazily and shared.
struct ImageChain {
    std::vector<IntervalUnion> regions;
    const System* sys = nullptr;

    const IntervalUnion& at(unsigned k) {
        while (regions.size() <= k) regions.push_back(forward_image(sys->map, regions.back()));
        return regions[k];
    }
};

ImageChain make_chain(const System& sys, IntervalUnion start) {
    ImageChain c;
    c.sys = &sys;
    c.regions.push_back(std::move(start));
    return c;
}

// Pull an exact witness point back through the chain: returns q in chain[0]
// with f^k(q) = y. Requires y in chain[k].
Rational pull_back(const System& sys, ImageChain& chain, unsigned k, Rational y) {
    Rational cur = std::move(y);
    for (unsigned i = k; i >= 1; --i) {
        auto pre = preimage_in(sys.map, cur, chain.at(i - 1));
        if (!pre)
            throw std::logic_error("pull_back: preimage vanished; image chain inconsistent");
        cur = *pre;
    }
    return cur;
}

std::optional<RegionWitness> region_witness_impl(const System& sys, const IntervalUnion& U,
                                                 const IntervalUnion& V, unsigned k_lo,
                                                 unsigned k_hi) {
    if (U.empty() || V.empty()) return std::nullopt;
    ImageChain chain = make_chain(sys, U);
    for (unsigned k = 1; k <= k_hi; ++k) {
        const IntervalUnion& Rk = chain.at(k);
        if (k < k_lo) continue;
        IntervalUnion inter = Rk.intersect(V);
        if (inter.empty()) continue;
        RegionWitness w;
        w.k = k;
        w.end = inter.representative();
        w.start = pull_back(sys, chain, k, w.end);
        w.intersection = inter;
        return w;
    }
    return std::nullopt;
}

// Cumulative forward orbit of a region until it becomes forward invariant.
std::optional<IntervalUnion> stabilized_orbit_union(const System& sys, const IntervalUnion& U,
                                                    unsigned cap) {
    IntervalUnion cumulative;
    IntervalUnion front = U;
    for (unsigned step = 1; step <= cap; ++step) {
        front = forward_image(sys.map, front);
        cumulative = cumulative.unite(front);
        IntervalUnion next = forward_image(sys.map, cumulative);
        if (next.subset_of(cumulative)) return cumulative;
    }
    return std::nullopt;
}

std::optional<Certificate> line_pair_certificate(const System& sys, const SubbasicSet& U,
                                                 const SubbasicSet& V, const Budget& budget) {
    IntervalUnion v = exact_region(V, sys.space);
    // Route 1: trap from the whole space. J_m = f^m(X) is decreasing and
    // absorbs every f^k(U) for k >= m; disjointness from V refutes all k >= m,
    // and k < m was already searched exhaustively by the witness pass.
    IntervalUnion trap = sys.space.full_region();
    for (unsigned m = 1; m <= budget.k_max; ++m) {
        IntervalUnion next = forward_image(sys.map, trap);
        bool stabilized = next == trap && m > 1;
        trap = std::move(next);
        if (!trap.meets(v)) {
            Certificate cert;
            cert.kind = (sys.space.kind == PhaseSpace::Kind::Interval && m == 1)
                            ? Certificate::Kind::RangeBound
                            : Certificate::Kind::AbsorbingSet;
            cert.trap = trap;
            cert.source_region = sys.space.full_region();
            cert.entry_bound = m;
            cert.target_label = V.label;
            cert.target_region = v;
            cert.resolution_independent = true;
            cert.argument = "image-trap";
            cert.description = "f^" + std::to_string(m) + "(X) = " + trap.str() +
                               " is forward invariant and disjoint from " + V.label +
                               "; every k >= 1 fails";
            return cert;
        }
        if (stabilized) break;
    }
    // Route 2: the forward orbit of U itself stabilizes away from V.
    IntervalUnion u = exact_region(U, sys.space);
    if (auto orbit_union = stabilized_orbit_union(sys, u, std::min(budget.k_max, 32u))) {
        if (!orbit_union->meets(v)) {
            Certificate cert;
            cert.kind = Certificate::Kind::AbsorbingSet;
            cert.trap = *orbit_union;
            cert.source_region = u;
            cert.entry_bound = 1;
            cert.target_label = V.label;
            cert.target_region = v;
            cert.resolution_independent = false;
            cert.argument = "orbit-trap";
            cert.description = "the forward orbit of " + U.label + " stabilizes inside " +
                               orbit_union->str() + ", disjoint from " + V.label;
            return cert;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Sequence engine (shift subsystem): witnesses ride the transitive stream.
// ---------------------------------------------------------------------------

bool stream_point_in(const SubbasicSet& set, std::uint64_t offset) {
    if (set.kind == SubbasicSet::Kind::Cylinder)
        return stream_word::coordinate(offset + static_cast<std::uint64_t>(set.cyl_index)) ==
               set.cyl_value;
    if (set.kind == SubbasicSet::Kind::PrefixCylinder) {
        for (std::size_t i = 0; i < set.word.size(); ++i)
            if (stream_word::coordinate(offset + i) != set.word[i]) return false;
        return true;
    }
    return false;
}

std::optional<Witness> sequence_pair_witness(const System&, const SubbasicSet& U,
                                             const SubbasicSet& V, const Budget& budget) {
    const std::uint64_t offset_scan = 1u << 12;
    for (std::uint64_t a = 0; a < offset_scan; ++a) {
        if (!stream_point_in(U, a)) continue;
        for (unsigned m = 1; m <= budget.k_max; ++m) {
            if (stream_point_in(V, a + m)) {
                Witness w;
                w.kind = Witness::Kind::Transitivity;
                w.U_label = U.label;
                w.V_label = V.label;
                w.k = m;
                w.point = PhasePoint::sequence(SeqPoint::stream(a));
                w.aux_point = PhasePoint::sequence(SeqPoint::stream(a + m));
                return w;
            }
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Cone engine (glissorotation): lattice candidates, exact where the rotation
// preserves the surd lattice (angle denominators dividing 24).
// ---------------------------------------------------------------------------

bool gliss_lattice_exact(const System& sys) {
    Rational scaled = sys.map.gliss_angle() * 24;
    return rat_den(scaled) == 1;
}

// Shared candidate lattice and membership matrix for half-space families; the
// pair grid is quadratic in the family size, so membership is decided once per
// (set, orbit point).
struct ConeSearchCache {
    std::vector<PhasePoint> lattice;
    // orbit[p][k] = f^k(lattice[p]), k = 0..k_cap
    std::vector<std::vector<PhasePoint>> orbit;
    // member[s][p][k]: orbit point k of lattice point p lies in family set s
    std::vector<std::vector<std::vector<bool>>> member;
    std::vector<std::vector<std::vector<bool>>> exact;
    unsigned k_cap = 0;
};

ConeSearchCache build_cone_cache(const System& sys, const std::vector<SubbasicSet>& family,
                                 const Budget& budget) {
    ConeSearchCache cache;
    cache.k_cap = std::min<unsigned>(budget.k_max, 2 * static_cast<unsigned>(sys.map.gliss_q));
    for (long long a = 0; a < 24; ++a)
        for (int t = -4; t <= 4; ++t)
            cache.lattice.push_back(
                PhasePoint::cone(CircleAngle::exact(Rational(a, 24)), Rational(t, 4)));
    cache.lattice.push_back(PhasePoint::cone(CircleAngle::exact(0), 1));
    cache.lattice.push_back(PhasePoint::cone(CircleAngle::exact(0), -1));

    cache.orbit.resize(cache.lattice.size());
    for (std::size_t p = 0; p < cache.lattice.size(); ++p) {
        cache.orbit[p].push_back(cache.lattice[p]);
        for (unsigned k = 1; k <= cache.k_cap; ++k)
            cache.orbit[p].push_back(map_eval(sys.map, cache.orbit[p].back()));
    }
    cache.member.resize(family.size());
    cache.exact.resize(family.size());
    for (std::size_t s = 0; s < family.size(); ++s) {
        cache.member[s].resize(cache.lattice.size());
        cache.exact[s].resize(cache.lattice.size());
        for (std::size_t p = 0; p < cache.lattice.size(); ++p) {
            cache.member[s][p].resize(cache.k_cap + 1);
            cache.exact[s][p].resize(cache.k_cap + 1);
            for (unsigned k = 0; k <= cache.k_cap; ++k) {
                auto exact = contains_exact(family[s], cache.orbit[p][k]);
                cache.exact[s][p][k] = exact.has_value();
                cache.member[s][p][k] =
                    exact ? *exact : contains(family[s], cache.orbit[p][k]);
            }
        }
    }
    return cache;
}

std::optional<Witness> cone_pair_witness_cached(const std::vector<SubbasicSet>& family,
                                                const ConeSearchCache& cache, std::size_t ui,
                                                std::size_t vi) {
    for (std::size_t p = 0; p < cache.lattice.size(); ++p) {
        if (!cache.member[ui][p][0]) continue;
        for (unsigned k = 1; k <= cache.k_cap; ++k) {
            if (cache.member[vi][p][k]) {
                Witness w;
                w.kind = Witness::Kind::Transitivity;
                w.U_label = family[ui].label;
                w.V_label = family[vi].label;
                w.k = k;
                w.point = cache.lattice[p];
                w.aux_point = cache.orbit[p][k];
                w.approximate = !(cache.exact[ui][p][0] && cache.exact[vi][p][k]);
                return w;
            }
        }
    }
    return std::nullopt;
}

std::optional<Witness> cone_pair_witness(const System& sys, const SubbasicSet& U,
                                         const SubbasicSet& V, const Budget& budget) {
    RegionOrNet u = realize_region(U, sys.space);
    unsigned k_cap = std::min<unsigned>(budget.k_max, 2 * static_cast<unsigned>(sys.map.gliss_q));
    bool exact_lattice = gliss_lattice_exact(sys);
    for (const auto& x : u.net) {
        for (unsigned k = 1; k <= k_cap; ++k) {
            PhasePoint y = iterate_eval(sys.map, k, x);
            bool in_v;
            bool approx = false;
            if (auto ev = contains_exact(V, y)) {
                in_v = *ev;
            } else {
                in_v = contains(V, y);
                approx = true;
            }
            if (in_v) {
                Witness w;
                w.kind = Witness::Kind::Transitivity;
                w.U_label = U.label;
                w.V_label = V.label;
                w.k = k;
                w.point = x;
                w.aux_point = y;
                w.approximate = approx || !exact_lattice;
                return w;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------------------
// Pair-level primitives
// ---------------------------------------------------------------------------

std::optional<RegionWitness> region_transitivity_witness(const System& sys,
                                                         const IntervalUnion& U,
                                                         const IntervalUnion& V,
                                                         const Budget& budget) {
    return region_witness_impl(sys, U, V, 1, budget.k_max);
}

std::optional<Witness> transitivity_pair_witness(const System& sys, const SubbasicSet& U,
                                                 const SubbasicSet& V, const Budget& budget) {
    if (is_line_set(U) && is_line_set(V)) {
        auto rw = region_witness_impl(sys, exact_region(U, sys.space), exact_region(V, sys.space),
                                      1, budget.k_max);
        if (!rw) return std::nullopt;
        Witness w;
        w.kind = Witness::Kind::Transitivity;
        w.U_label = U.label;
        w.V_label = V.label;
        w.k = rw->k;
        w.point = PhasePoint::real_exact(rw->start);
        w.aux_point = PhasePoint::real_exact(rw->end);
        return w;
    }
    if (is_sequence_set(U) && is_sequence_set(V)) return sequence_pair_witness(sys, U, V, budget);
    if (U.kind == SubbasicSet::Kind::HalfSpace && V.kind == SubbasicSet::Kind::HalfSpace)
        return cone_pair_witness(sys, U, V, budget);
    throw std::invalid_argument("transitivity_pair_witness: unsupported set combination");
}

std::optional<Witness> transitivity_pair_witness_at_k(const System& sys, const SubbasicSet& U,
                                                      const SubbasicSet& V, unsigned k) {
    if (is_line_set(U) && is_line_set(V)) {
        auto rw = region_witness_impl(sys, exact_region(U, sys.space), exact_region(V, sys.space),
                                      k, k);
        if (!rw) return std::nullopt;
        Witness w;
        w.kind = Witness::Kind::Transitivity;
        w.U_label = U.label;
        w.V_label = V.label;
        w.k = k;
        w.point = PhasePoint::real_exact(rw->start);
        w.aux_point = PhasePoint::real_exact(rw->end);
        return w;
    }
    throw std::invalid_argument("transitivity_pair_witness_at_k: line-like sets only");
}

std::optional<Certificate> transitivity_pair_certificate(const System& sys, const SubbasicSet& U,
                                                         const SubbasicSet& V,
                                                         const Budget& budget) {
    if (is_line_set(U) && is_line_set(V)) return line_pair_certificate(sys, U, V, budget);
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Light transitivity
// ---------------------------------------------------------------------------

Verdict check_light_transitivity(const System& sys, const std::vector<SubbasicSet>& family,
                                 const Budget& budget) {
    if (family.empty()) throw std::invalid_argument("check_light_transitivity: empty family");
    Deadline deadline(budget);
    std::vector<Witness> witnesses;
    unsigned unknown_pairs = 0;
    std::string first_unknown;
    if (sys.space.kind == PhaseSpace::Kind::DoubleCone) {
        ConeSearchCache cache = build_cone_cache(sys, family, budget);
        for (std::size_t ui = 0; ui < family.size(); ++ui) {
            for (std::size_t vi = 0; vi < family.size(); ++vi) {
                if (deadline.passed()) return Verdict::unknown("wall clock budget exhausted");
                auto w = cone_pair_witness_cached(family, cache, ui, vi);
                if (w) {
                    witnesses.push_back(std::move(*w));
                } else {
                    ++unknown_pairs;
                    if (first_unknown.empty())
                        first_unknown = "(" + family[ui].label + ", " + family[vi].label + ")";
                }
            }
        }
        if (unknown_pairs > 0)
            return Verdict::unknown("no lattice witness for " + std::to_string(unknown_pairs) +
                                    " pair(s), first " + first_unknown);
        return Verdict::holds(std::move(witnesses), "every ordered pair witnessed with k <= " +
                                                        std::to_string(budget.k_max));
    }
    for (const auto& U : family) {
        for (const auto& V : family) {
            if (deadline.passed())
                return Verdict::unknown("wall clock budget exhausted during pair scan");
            std::optional<Witness> w;
            try {
                w = transitivity_pair_witness(sys, U, V, budget);
            } catch (const BudgetExhausted& e) {
                return Verdict::unknown(e.what());
            }
            if (w) {
                witnesses.push_back(std::move(*w));
                continue;
            }
            if (auto cert = transitivity_pair_certificate(sys, U, V, budget)) {
                return Verdict::fails(std::move(*cert),
                                      "pair (" + U.label + ", " + V.label + ") is never connected");
            }
            ++unknown_pairs;
            if (first_unknown.empty()) first_unknown = "(" + U.label + ", " + V.label + ")";
        }
    }
    if (unknown_pairs > 0)
        return Verdict::unknown("no witness within k_max=" + std::to_string(budget.k_max) +
                                " and no certificate for " + std::to_string(unknown_pairs) +
                                " pair(s), first " + first_unknown);
    return Verdict::holds(std::move(witnesses),
                          "every ordered pair witnessed with k <= " + std::to_string(budget.k_max));
}

// ---------------------------------------------------------------------------
// Periodic membership
// ---------------------------------------------------------------------------

std::optional<unsigned> least_period(const CatalogMap& map, const PhasePoint& p, unsigned cap) {
    for (unsigned k = 1; k <= cap; ++k)
        if (iterate_eval(map, k, p) == p) return k;
    return std::nullopt;
}

PeriodicSearchResult find_periodic_points(const PLMap& map, unsigned k,
                                          const IntervalUnion& region, const Budget& budget) {
    PeriodicSearchResult out;
    PLMap iterated;
    try {
        iterated = pl_iterate(map, k, budget.max_pl_knots);
    } catch (const std::length_error&) {
        out.complete = false;
        return out;
    }
    IntervalUnion fixed = iterated.fixed_points();
    std::set<Rational> values;
    for (const auto& part : fixed.parts()) {
        if (part.degenerate()) {
            values.insert(part.lo.value);
        } else {
            // an identity piece of f^k: a continuum of period-k points; record
            // the endpoints as representatives and mark the list as truncated
            values.insert(part.lo.value);
            values.insert(part.hi.value);
            out.complete = false;
        }
    }
    CatalogMap wrapped;
    wrapped.tag = CatalogMap::Tag::Piecewise;
    wrapped.pl = map;
    for (const auto& x : values) {
        if (!region.contains(x)) continue;
        PhasePoint p = PhasePoint::real_exact(x);
        auto period = least_period(wrapped, p, k);
        PeriodicRecord rec;
        rec.point = p;
        rec.period = period.value_or(k);
        out.records.push_back(std::move(rec));
    }
    return out;
}

std::optional<PeriodicRecord> periodic_point_in_region(const System& sys,
                                                       const IntervalUnion& region,
                                                       const Budget& budget) {
    PeriodicStructure structure = periodic_structure(sys.map);
    switch (structure.kind) {
        case PeriodicStructure::Kind::AllPeriodic: {
            if (region.empty()) return std::nullopt;
            PhasePoint p = PhasePoint::real_exact(region.representative());
            auto period = least_period(sys.map, p, structure.max_period);
            if (!period) return std::nullopt;
            return PeriodicRecord{p, *period};
        }
        case PeriodicStructure::Kind::FiniteSet: {
            for (const auto& p : structure.points) {
                if (p.kind != PhasePoint::Kind::Real) continue;
                if (!region.contains(p.real.exact)) continue;
                auto period = least_period(sys.map, p, budget.p_max);
                if (period) return PeriodicRecord{p, *period};
            }
            return std::nullopt;
        }
        case PeriodicStructure::Kind::Region: {
            IntervalUnion inter = region.intersect(structure.region);
            if (inter.empty()) return std::nullopt;
            PhasePoint p = PhasePoint::real_exact(inter.representative());
            auto period = least_period(sys.map, p, budget.p_max);
            if (!period) return std::nullopt;
            return PeriodicRecord{p, *period};
        }
        case PeriodicStructure::Kind::Empty:
            return std::nullopt;
        case PeriodicStructure::Kind::Unknown: {
            for (unsigned k = 1; k <= budget.p_max; ++k) {
                PeriodicSearchResult found = find_periodic_points(sys.map.pl, k, region, budget);
                if (!found.records.empty()) return found.records.front();
            }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

std::optional<Witness> periodic_member_witness(const System& sys, const SubbasicSet& U,
                                               const Budget& budget) {
    auto make_witness = [&](const PeriodicRecord& rec) {
        Witness w;
        w.kind = Witness::Kind::Periodic;
        w.U_label = U.label;
        w.point = rec.point;
        w.k = rec.period;
        return w;
    };
    if (is_line_set(U)) {
        auto rec = periodic_point_in_region(sys, exact_region(U, sys.space), budget);
        if (!rec) return std::nullopt;
        return make_witness(*rec);
    }
    if (is_sequence_set(U)) {
        PeriodicStructure structure = periodic_structure(sys.map);
        for (const auto& p : structure.points) {
            if (contains_exact(U, p).value_or(false)) {
                auto period = least_period(sys.map, p, budget.p_max);
                if (period) return make_witness(PeriodicRecord{p, *period});
            }
        }
        return std::nullopt;
    }
    if (U.kind == SubbasicSet::Kind::HalfSpace) {
        RegionOrNet net = realize_region(U, sys.space);
        unsigned cap = std::max(budget.p_max, 2 * static_cast<unsigned>(sys.map.gliss_q));
        for (const auto& p : net.net) {
            auto period = least_period(sys.map, p, cap);
            if (period) return make_witness(PeriodicRecord{p, *period});
        }
        return std::nullopt;
    }
    throw std::invalid_argument("periodic_member_witness: unsupported set kind");
}

std::optional<Certificate> periodic_region_certificate(const System& sys,
                                                       const IntervalUnion& region,
                                                       const std::string& label,
                                                       const Budget& budget) {
    PeriodicStructure structure = periodic_structure(sys.map);
    auto finish = [&](Certificate cert) {
        cert.target_label = label;
        cert.target_region = region;
        return cert;
    };
    switch (structure.kind) {
        case PeriodicStructure::Kind::Empty: {
            Certificate cert;
            cert.kind = Certificate::Kind::PeriodicSetCharacterization;
            cert.argument = "no-periodic-symbolic";
            cert.resolution_independent = true;
            cert.description = "P(f) is empty: " + structure.argument;
            return finish(std::move(cert));
        }
        case PeriodicStructure::Kind::FiniteSet: {
            bool any_inside = false;
            for (const auto& p : structure.points)
                if (p.kind == PhasePoint::Kind::Real)
                    any_inside = any_inside || region.contains(p.real.exact);
            if (any_inside) return std::nullopt;
            Certificate cert;
            cert.kind = Certificate::Kind::PeriodicSetCharacterization;
            cert.finite_points = structure.points;
            cert.argument = sys.map.tag == CatalogMap::Tag::Contraction ? "strict-contraction"
                                                                        : "finite-set";
            cert.resolution_independent = true;
            cert.description = "P(f) = " + std::to_string(structure.points.size()) +
                               " point(s), none inside " + label + "; " + structure.argument;
            return finish(std::move(cert));
        }
        case PeriodicStructure::Kind::Region: {
            if (region.meets(structure.region)) return std::nullopt;
            Certificate cert;
            cert.kind = Certificate::Kind::PeriodicSetCharacterization;
            cert.trap = structure.region;
            cert.argument = "idempotent-fixed-ray";
            cert.resolution_independent = true;
            cert.description = "P(f) = " + structure.region.str() + " exactly (" +
                               structure.argument + "), disjoint from " + label;
            return finish(std::move(cert));
        }
        case PeriodicStructure::Kind::AllPeriodic:
            return std::nullopt;
        case PeriodicStructure::Kind::Unknown:
            break;  // PL: continue below
    }
    // Route 1: periodic points live in every forward image of the whole space.
    IntervalUnion trap = sys.space.full_region();
    for (unsigned m = 1; m <= std::min(budget.k_max, 16u); ++m) {
        IntervalUnion next = forward_image(sys.map, trap);
        bool stabilized = next == trap;
        trap = std::move(next);
        if (!trap.meets(region)) {
            Certificate cert;
            cert.kind = Certificate::Kind::PeriodicSetCharacterization;
            cert.trap = trap;
            cert.entry_bound = m;
            cert.argument = "image-trap";
            cert.resolution_independent = true;
            // enumerate P(f) inside the trap for the report
            for (unsigned k = 1; k <= std::min(budget.p_max, 8u); ++k)
                for (const auto& rec :
                     find_periodic_points(sys.map.pl, k, trap, budget).records) {
                    bool dup = false;
                    for (const auto& q : cert.finite_points) dup = dup || q == rec.point;
                    if (!dup) cert.finite_points.push_back(rec.point);
                }
            cert.description = "every periodic point lies in f^" + std::to_string(m) +
                               "(X) = " + trap.str() + ", disjoint from " + label;
            return finish(std::move(cert));
        }
        if (stabilized) break;
    }
    // Route 2: the member collapses to a single value; its orbit never returns.
    IntervalUnion image = forward_image(sys.map, region);
    auto parts = image.parts();
    if (parts.size() == 1 && parts[0].degenerate()) {
        Rational z = parts[0].lo.value;
        OrbitResult z_orbit = orbit(sys.map, PhasePoint::real_exact(z), budget.k_max);
        if (z_orbit.cycle_found) {
            bool orbit_hits_u = false;
            for (const auto& p : z_orbit.points)
                orbit_hits_u = orbit_hits_u || region.contains(p.real.exact);
            if (!orbit_hits_u) {
                Certificate cert;
                cert.kind = Certificate::Kind::PeriodicSetCharacterization;
                cert.argument = "plateau-collapse";
                cert.resolution_independent = false;
                for (std::size_t i = z_orbit.cycle_start;
                     i < z_orbit.cycle_start + z_orbit.cycle_period; ++i)
                    cert.finite_points.push_back(z_orbit.points[i]);
                cert.base_x = PhasePoint::real_exact(z);
                cert.description = "f is constant (= " + rat_str(z) + ") on " + label +
                                   ", and the orbit of that value never re-enters the set";
                return finish(std::move(cert));
            }
        }
    }
    return std::nullopt;
}

std::optional<Certificate> periodic_member_certificate(const System& sys, const SubbasicSet& U,
                                                       const Budget& budget) {
    if (is_sequence_set(U)) {
        PeriodicStructure structure = periodic_structure(sys.map);
        if (structure.kind != PeriodicStructure::Kind::FiniteSet) return std::nullopt;
        bool any_inside = false;
        for (const auto& p : structure.points)
            any_inside = any_inside || contains_exact(U, p).value_or(false);
        if (any_inside) return std::nullopt;
        Certificate cert;
        cert.kind = Certificate::Kind::PeriodicSetCharacterization;
        cert.finite_points = structure.points;
        cert.argument = "shift-constants";
        cert.resolution_independent = true;
        cert.target_label = U.label;
        cert.description = "the periodic points are the two constant sequences, neither inside " +
                           U.label + "; " + structure.argument;
        return cert;
    }
    if (!is_line_set(U)) return std::nullopt;
    return periodic_region_certificate(sys, exact_region(U, sys.space), U.label, budget);
}

Verdict check_light_periodic_density(const System& sys, const std::vector<SubbasicSet>& family,
                                     const Budget& budget) {
    if (family.empty()) throw std::invalid_argument("check_light_periodic_density: empty family");
    Deadline deadline(budget);
    std::vector<Witness> witnesses;
    unsigned unknown_members = 0;
    std::string first_unknown;
    for (const auto& U : family) {
        if (deadline.passed()) return Verdict::unknown("wall clock budget exhausted");
        std::optional<Witness> w;
        try {
            w = periodic_member_witness(sys, U, budget);
        } catch (const BudgetExhausted& e) {
            return Verdict::unknown(e.what());
        }
        if (w) {
            witnesses.push_back(std::move(*w));
            continue;
        }
        if (auto cert = periodic_member_certificate(sys, U, budget))
            return Verdict::fails(std::move(*cert), U.label + " contains no periodic point");
        ++unknown_members;
        if (first_unknown.empty()) first_unknown = U.label;
    }
    if (unknown_members > 0)
        return Verdict::unknown("no periodic point with period <= " +
                                std::to_string(budget.p_max) + " and no certificate for " +
                                std::to_string(unknown_members) + " member(s), first " +
                                first_unknown);
    return Verdict::holds(std::move(witnesses), "every member contains an exact periodic point");
}

// ---------------------------------------------------------------------------
// Sensitivity
// ---------------------------------------------------------------------------

namespace {

// Some y in `region` with |y - c| >= delta, if one exists.
std::optional<Rational> point_at_distance(const IntervalUnion& region, const Rational& c,
                                          const Rational& delta) {
    for (const auto& part : region.parts()) {
        std::vector<Rational> candidates;
        if (!part.hi.finite()) {
            candidates.push_back(rat_max(c + delta, part.lo.finite() ? Rational(part.lo.value + 1)
                                                                     : Rational(c + delta)));
        } else {
            if (part.hi_closed) candidates.push_back(part.hi.value);
            if (part.hi.value - c > delta) candidates.push_back((c + delta + part.hi.value) / 2);
        }
        if (!part.lo.finite()) {
            candidates.push_back(rat_min(c - delta, part.hi.finite() ? Rational(part.hi.value - 1)
                                                                     : Rational(c - delta)));
        } else {
            if (part.lo_closed) candidates.push_back(part.lo.value);
            if (c - part.lo.value > delta) candidates.push_back((c - delta + part.lo.value) / 2);
        }
        for (const auto& y : candidates)
            if (part.contains(y) && rat_abs(y - c) >= delta) return y;
    }
    return std::nullopt;
}

std::optional<Witness> line_sensitivity_witness(const System& sys, const PhasePoint& x,
                                                const SubbasicSet& V, const Rational& delta,
                                                const Budget& budget) {
    IntervalUnion v = exact_region(V, sys.space);
    auto sep = separation_search(sys, x.real.exact, v, delta, budget);
    if (!sep) return std::nullopt;
    Witness w;
    w.kind = Witness::Kind::Sensitivity;
    w.V_label = V.label;
    w.aux_point = x;
    w.k = sep->n;
    w.point = PhasePoint::real_exact(sep->y);
    w.distance = Scalar(sep->distance);
    return w;
}

// FAILS certificates for sensitivity at threshold delta.
std::optional<Certificate> sensitivity_certificate(const System& sys,
                                                   const std::vector<SubbasicSet>& family,
                                                   const Rational& delta, const Budget& budget) {
    // Contraction: closed-form bound at x = 0 (matches the map's own estimate).
    if (sys.map.tag == CatalogMap::Tag::Contraction && delta <= Rational(1, 2)) {
        auto build = [&](const IntervalUnion& region, const std::string& label,
                         bool from_family) -> std::optional<Certificate> {
            if (!region.contains(0)) return std::nullopt;
            auto hull = region.diameter();
            if (!hull) return std::nullopt;
            Rational M = 0;
            for (const auto& part : region.parts()) {
                M = rat_max(M, rat_abs(part.lo.value));
                M = rat_max(M, rat_abs(part.hi.value));
            }
            Rational bound = M / (M + 1);
            if (!(bound < delta)) return std::nullopt;
            Certificate cert;
            cert.kind = Certificate::Kind::PointwiseBound;
            cert.base_x = PhasePoint::real_exact(0);
            cert.nbhd_label = label;
            cert.nbhd_region = region;
            cert.bound_value = bound;
            cert.delta = delta;
            cert.argument = "closed-form-contraction";
            cert.resolution_independent = !from_family;
            cert.description = "d(f^k(0), f^k(y)) = |y|/(k|y|+1) <= |y|/(|y|+1) <= " +
                               rat_str(bound) + " < " + rat_str(delta) + " for every y in " +
                               label + " and every k >= 1";
            return cert;
        };
        for (const auto& V : family) {
            if (!is_line_set(V)) continue;
            if (auto cert = build(exact_region(V, sys.space), V.label, true)) return cert;
        }
        // scheme member (-eps, eps): always available among basic intervals
        Rational eps = delta / 2;
        IntervalUnion region(Interval::open(-eps, eps));
        if (auto cert = build(region, "(-" + rat_str(eps) + ", " + rat_str(eps) + ")", false))
            return cert;
    }
    // Plateau: f constant on a member; all its orbits coincide from step 1 on.
    if (sys.map.tag == CatalogMap::Tag::Piecewise) {
        std::optional<Certificate> fallback;
        for (const auto& V : family) {
            if (!is_line_set(V)) continue;
            IntervalUnion v = exact_region(V, sys.space);
            if (v.empty()) continue;
            IntervalUnion image = forward_image(sys.map, v);
            auto parts = image.parts();
            if (parts.size() != 1 || !parts[0].degenerate()) continue;
            Rational z = parts[0].lo.value;
            Certificate cert;
            cert.kind = Certificate::Kind::PointwiseBound;
            cert.nbhd_label = V.label;
            cert.nbhd_region = v;
            cert.bound_value = 0;
            cert.delta = delta;
            cert.argument = "plateau";
            cert.base_x = PhasePoint::real_exact(v.contains(z) ? z : v.representative());
            cert.description = "f is constant (= " + rat_str(z) + ") on " + V.label +
                               ", so d(f^k(x), f^k(y)) = 0 for every y in the set and k >= 1";
            if (v.contains(z)) return cert;  // prefer the plateau's own fixed point
            if (!fallback) fallback = std::move(cert);
        }
        if (fallback) return fallback;
    }
    // Nonexpansive maps: any member of diameter < delta separates nothing.
    if (map_nonexpansive(sys.map) && sys.space.line_like()) {
        for (const auto& V : family) {
            if (!is_line_set(V)) continue;
            IntervalUnion v = exact_region(V, sys.space);
            auto diam = v.diameter();
            if (!diam || !(*diam < delta) || v.empty()) continue;
            Certificate cert;
            cert.kind = Certificate::Kind::PointwiseBound;
            cert.nbhd_label = V.label;
            cert.nbhd_region = v;
            cert.bound_value = *diam;
            cert.delta = delta;
            cert.argument = map_isometry(sys.map) ? "isometry" : "nonexpansive";
            cert.base_x = PhasePoint::real_exact(v.representative());
            cert.description = std::string(map_isometry(sys.map)
                                               ? "f is an isometry: d(f^k(x), f^k(y)) = d(x, y)"
                                               : "f is 1-Lipschitz: d(f^k(x), f^k(y)) <= d(x, y)") +
                               " <= diam(" + V.label + ") = " + rat_str(*diam) + " < " +
                               rat_str(delta);
            return cert;
        }
    }
    // Glissorotation: an isometry of the embedded metric; a sufficiently tight
    // half-space cap around a base-circle point bounds every separation.
    if (sys.map.tag == CatalogMap::Tag::Glissorotation) {
        // cap {x > 1 - eps}: diam^2 <= 9 eps on the cone surface
        Rational eps = rat_min(rat_pow2(-12), delta * delta / 16);
        SubbasicSet cap = SubbasicSet::half_space({Rational(1), Rational(0), Rational(0)},
                                                  Rational(1) - eps);
        Certificate cert;
        cert.kind = Certificate::Kind::PointwiseBound;
        cert.base_x = PhasePoint::cone(CircleAngle::exact(0), 0);
        cert.nbhd_label = cap.label;
        cert.bound_value = 9 * eps;  // bound on diam^2
        cert.delta = delta;
        cert.argument = "cone-isometry-cap";
        cert.resolution_independent = true;
        cert.approximate = true;  // the isometry is replayed on float samples
        cert.description =
            "f preserves the chordal metric (rotation composed with the altitude flip); the cap " +
            cap.label + " around the base point theta=0 has diam^2 <= " + rat_str(9 * eps) +
            " < delta^2, so no y in it ever separates from x by delta = " + rat_str(delta);
        if (9 * eps < delta * delta) return cert;
    }
    (void)budget;
    return std::nullopt;
}

}  // namespace

std::optional<SeparationWitness> separation_search(const System& sys, const Rational& c,
                                                   const IntervalUnion& V, const Rational& delta,
                                                   const Budget& budget) {
    if (V.empty()) return std::nullopt;
    ImageChain chain = make_chain(sys, V);
    PhasePoint ck = PhasePoint::real_exact(c);
    for (unsigned n = 1; n <= budget.k_max; ++n) {
        ck = map_eval(sys.map, ck);
        const IntervalUnion& Rn = chain.at(n);
        if (auto z = point_at_distance(Rn, ck.real.exact, delta)) {
            SeparationWitness sw;
            sw.n = n;
            sw.distance = rat_abs(*z - ck.real.exact);
            sw.y = pull_back(sys, chain, n, *z);
            return sw;
        }
    }
    return std::nullopt;
}

Verdict check_light_sensitivity(const System& sys, const std::vector<SubbasicSet>& family,
                                const Rational& delta, const Budget& budget) {
    if (!(delta > 0)) throw std::invalid_argument("check_light_sensitivity: delta must be > 0");
    Deadline deadline(budget);
    // A single refuting certificate settles the property regardless of how
    // many (x, V) pairs have witnesses.
    if (auto cert = sensitivity_certificate(sys, family, delta, budget))
        return Verdict::fails(std::move(*cert));

    // sampled base points: deterministic grid plus periodic points
    std::vector<PhasePoint> xs = sample_grid(sys.space, 17);
    if (sys.map.tag == CatalogMap::Tag::Piecewise) {
        for (unsigned k = 1; k <= std::min(4u, budget.p_max); ++k)
            for (const auto& rec :
                 find_periodic_points(sys.map.pl, k, sys.space.full_region(), budget).records)
                xs.push_back(rec.point);
    }

    std::vector<Witness> witnesses;
    unsigned unknown_pairs = 0;
    for (const auto& x : xs) {
        for (const auto& V : family) {
            if (deadline.passed()) return Verdict::unknown("wall clock budget exhausted");
            auto inside = contains_exact(V, x);
            if (!inside.value_or(false)) continue;
            std::optional<Witness> w;
            if (sys.space.line_like() && is_line_set(V)) {
                w = line_sensitivity_witness(sys, x, V, delta, budget);
            } else {
                continue;  // non-line spaces settle by certificate or stay unknown
            }
            if (w)
                witnesses.push_back(std::move(*w));
            else
                ++unknown_pairs;
        }
    }
    if (unknown_pairs > 0)
        return Verdict::unknown("separation not reached for " + std::to_string(unknown_pairs) +
                                " sampled (x, V) pair(s) within k_max");
    if (witnesses.empty()) return Verdict::unknown("no sampled point lies in any family member");
    return Verdict::holds(std::move(witnesses),
                          "every sampled point separates inside each of its subbasic neighborhoods");
}

// ---------------------------------------------------------------------------
// Full properties over the basic family
// ---------------------------------------------------------------------------

std::vector<SubbasicSet> basic_family(const PhaseSpace& space, int resolution) {
    return generate_family(space, SubbaseScheme::make(SubbaseScheme::Tag::BasicIntervals, resolution));
}

Verdict check_transitivity(const System& sys, int resolution, const Budget& budget) {
    return check_light_transitivity(sys, basic_family(sys.space, resolution), budget);
}

Verdict check_periodic_density(const System& sys, int resolution, const Budget& budget) {
    return check_light_periodic_density(sys, basic_family(sys.space, resolution), budget);
}

Verdict check_sensitivity(const System& sys, const Rational& delta, int resolution,
                          const Budget& budget) {
    return check_light_sensitivity(sys, basic_family(sys.space, resolution), delta, budget);
}

// ---------------------------------------------------------------------------
// Orbit coverage probe
// ---------------------------------------------------------------------------

GapReport orbit_density_probe(const System& sys, const PhasePoint& start, std::size_t n,
                              const Rational& eps) {
    if (sys.space.kind != PhaseSpace::Kind::Interval &&
        sys.space.kind != PhaseSpace::Kind::Circle)
        throw std::invalid_argument("orbit_density_probe: bounded (interval or circle) spaces only");
    Rational lo = sys.space.kind == PhaseSpace::Kind::Circle ? Rational(0) : sys.space.lo;
    Rational hi = sys.space.kind == PhaseSpace::Kind::Circle ? Rational(1) : sys.space.hi;
    GapReport report;
    report.cell_width = eps;
    Rational cells_exact = (hi - lo) / eps;
    report.total_cells = static_cast<std::size_t>(rat_floor(cells_exact).convert_to<long long>()) +
                         (rat_den(cells_exact) == 1 ? 0 : 1);
    std::set<std::size_t> visited;
    PhasePoint cur = start;
    std::map<std::string, std::size_t> seen;
    for (std::size_t i = 0; i <= n; ++i) {
        Rational x = cur.kind == PhasePoint::Kind::Circle ? cur.angle.base : cur.real.exact;
        std::size_t cell =
            static_cast<std::size_t>(rat_floor((x - lo) / eps).convert_to<long long>());
        if (cell >= report.total_cells && cell > 0) cell = report.total_cells - 1;
        visited.insert(cell);
        auto [it, inserted] = seen.try_emplace(cur.str(), i);
        if (!inserted) {
            report.cycle_detected = true;
            report.orbit_points_used = i;
            break;
        }
        report.orbit_points_used = i + 1;
        if (i < n) cur = map_eval(sys.map, cur);
    }
    report.visited_cells = visited.size();
    report.visited_indices.assign(visited.begin(), visited.end());
    report.coverage = report.total_cells == 0
                          ? 0.0
                          : static_cast<double>(report.visited_cells) /
                                static_cast<double>(report.total_cells);
    return report;
}

// ---------------------------------------------------------------------------
// Replay
// ---------------------------------------------------------------------------

namespace {

const SubbasicSet* find_set(const std::vector<SubbasicSet>& family, const std::string& label) {
    for (const auto& s : family)
        if (s.label == label) return &s;
    return nullptr;
}

}  // namespace

bool replay_witness(const System& sys, const std::vector<SubbasicSet>& family, const Witness& w,
                    const Rational& delta) {
    switch (w.kind) {
        case Witness::Kind::Transitivity: {
            const SubbasicSet* U = find_set(family, w.U_label);
            const SubbasicSet* V = find_set(family, w.V_label);
            if (!U || !V || w.k < 1) return false;
            if (!contains(*U, w.point)) return false;
            PhasePoint end = iterate_eval(sys.map, w.k, w.point);
            if (!(end == w.aux_point)) return false;
            return contains(*V, end);
        }
        case Witness::Kind::Periodic: {
            const SubbasicSet* U = find_set(family, w.U_label);
            if (!U || w.k < 1) return false;
            if (!contains(*U, w.point)) return false;
            if (!(iterate_eval(sys.map, w.k, w.point) == w.point)) return false;
            for (unsigned d = 1; d < w.k; ++d)
                if (w.k % d == 0 && iterate_eval(sys.map, d, w.point) == w.point) return false;
            return true;
        }
        case Witness::Kind::Sensitivity: {
            const SubbasicSet* V = find_set(family, w.V_label);
            if (!V || w.k < 1) return false;
            if (!contains(*V, w.point) || !contains(*V, w.aux_point)) return false;
            Scalar d = metric(sys.space, iterate_eval(sys.map, w.k, w.point),
                              iterate_eval(sys.map, w.k, w.aux_point));
            if (d.is_exact && w.distance.is_exact && d.exact != w.distance.exact) return false;
            return scalar_geq(d, delta);
        }
    }
    return false;
}

bool replay_certificate(const System& sys, const Certificate& cert) {
    switch (cert.kind) {
        case Certificate::Kind::RangeBound:
        case Certificate::Kind::AbsorbingSet: {
            // forward invariance
            IntervalUnion image = forward_image(sys.map, cert.trap);
            if (!image.subset_of(cert.trap)) return false;
            // the source enters the trap by the stated bound
            if (!cert.source_region.empty()) {
                IntervalUnion entered = forward_image_k(sys.map, cert.source_region, cert.entry_bound);
                if (!entered.subset_of(cert.trap)) return false;
            }
            // separation
            return cert.target_region.empty() || !cert.trap.meets(cert.target_region);
        }
        case Certificate::Kind::PeriodicSetCharacterization: {
            // every claimed periodic point replays
            for (const auto& p : cert.finite_points) {
                auto period = least_period(sys.map, p, 64);
                if (!period) return false;
            }
            if (cert.argument == "image-trap") {
                IntervalUnion image = forward_image_k(sys.map, sys.space.full_region(), cert.entry_bound);
                if (!(image == cert.trap)) return false;
                return cert.target_region.empty() || !cert.trap.meets(cert.target_region);
            }
            if (cert.argument == "idempotent-fixed-ray") {
                // f o f = f on samples; fixed exactly on the ray, moved off it
                for (const auto& p : sample_grid(sys.space, 33)) {
                    PhasePoint f1 = map_eval(sys.map, p);
                    if (!(map_eval(sys.map, f1) == f1)) return false;
                    bool fixed = map_eval(sys.map, p) == p;
                    if (fixed != cert.trap.contains(p.real.exact)) return false;
                }
                return cert.target_region.empty() || !cert.trap.meets(cert.target_region);
            }
            if (cert.argument == "strict-contraction") {
                for (const auto& p : sample_grid(sys.space, 33)) {
                    if (p.real.exact == 0) continue;
                    Rational fx = map_eval(sys.map, p).real.exact;
                    if (!(rat_abs(fx) < rat_abs(p.real.exact))) return false;
                }
                return true;
            }
            if (cert.argument == "shift-constants") {
                PhasePoint zeros = PhasePoint::sequence(SeqPoint::constant(0));
                PhasePoint ones = PhasePoint::sequence(SeqPoint::constant(1));
                return map_eval(sys.map, zeros) == zeros && map_eval(sys.map, ones) == ones;
            }
            if (cert.argument == "no-periodic-symbolic") {
                PhasePoint probe = PhasePoint::circle(Rational(1, 7));
                for (unsigned k = 1; k <= 64; ++k)
                    if (iterate_eval(sys.map, k, probe) == probe) return false;
                return sys.map.rotation_irr != IrrationalMark::None;
            }
            if (cert.argument == "plateau-collapse") {
                IntervalUnion image = forward_image(sys.map, cert.target_region);
                auto parts = image.parts();
                if (parts.size() != 1 || !parts[0].degenerate()) return false;
                if (!(parts[0].lo.value == cert.base_x.real.exact)) return false;
                for (const auto& p : cert.finite_points)
                    if (cert.target_region.contains(p.real.exact)) return false;
                return true;
            }
            return false;
        }
        case Certificate::Kind::PointwiseBound: {
            if (cert.argument == "closed-form-contraction") {
                // |y| / (k|y| + 1) <= |y| / (|y| + 1) < delta, exact on samples
                for (int i = 0; i <= 100; ++i) {
                    for (const auto& part : cert.nbhd_region.parts()) {
                        Rational y = part.lo.value +
                                     (part.hi.value - part.lo.value) * Rational(i, 100);
                        if (!cert.nbhd_region.contains(y)) continue;
                        Rational step1 = rat_abs(y) / (rat_abs(y) + 1);
                        if (!(step1 <= cert.bound_value && cert.bound_value < cert.delta))
                            return false;
                        for (unsigned k = 1; k <= 64; ++k) {
                            Rational dk = rat_abs(y) / (k * rat_abs(y) + 1);
                            if (!(dk <= step1)) return false;
                        }
                    }
                }
                return cert.nbhd_region.contains(cert.base_x.real.exact);
            }
            if (cert.argument == "plateau") {
                IntervalUnion image = forward_image(sys.map, cert.nbhd_region);
                auto parts = image.parts();
                return parts.size() == 1 && parts[0].degenerate() &&
                       cert.nbhd_region.contains(cert.base_x.real.exact) && cert.bound_value == 0 &&
                       cert.bound_value < cert.delta;
            }
            if (cert.argument == "isometry" || cert.argument == "nonexpansive") {
                if (!map_nonexpansive(sys.map)) return false;
                auto diam = cert.nbhd_region.diameter();
                if (!diam || !(*diam < cert.delta)) return false;
                // sampled exact check of the Lipschitz bound
                Rational x = cert.base_x.real.exact;
                for (const auto& part : cert.nbhd_region.parts()) {
                    for (int i = 1; i < 8; ++i) {
                        Rational y = part.lo.value + (part.hi.value - part.lo.value) * Rational(i, 8);
                        if (!cert.nbhd_region.contains(y)) continue;
                        PhasePoint px = PhasePoint::real_exact(x), py = PhasePoint::real_exact(y);
                        for (unsigned k = 1; k <= 8; ++k) {
                            Rational dk = rat_abs(iterate_eval(sys.map, k, px).real.exact -
                                                  iterate_eval(sys.map, k, py).real.exact);
                            if (!(dk <= rat_abs(x - y))) return false;
                        }
                    }
                }
                return true;
            }
            if (cert.argument == "cone-isometry-cap") {
                if (sys.map.tag != CatalogMap::Tag::Glissorotation) return false;
                if (!(cert.bound_value < cert.delta * cert.delta)) return false;
                // float replay of the isometry on lattice samples
                PhaseSpace cone = PhaseSpace::double_cone();
                auto pts = sample_grid(cone, 16);
                for (std::size_t i = 0; i < pts.size(); ++i)
                    for (std::size_t j = i + 1; j < pts.size(); ++j) {
                        double before = metric(cone, pts[i], pts[j]).value();
                        for (unsigned k = 1; k <= 2 * static_cast<unsigned>(sys.map.gliss_q); ++k) {
                            double after = metric(cone, iterate_eval(sys.map, k, pts[i]),
                                                  iterate_eval(sys.map, k, pts[j]))
                                               .value();
                            if (std::fabs(after - before) > 1e-9) return false;
                        }
                    }
                return true;
            }
            return false;
        }
    }
    return false;
}

}  // namespace lightchaos
