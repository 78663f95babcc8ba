#pragma once

#include "lightchaos/catalog_map.hpp"
#include "lightchaos/subbase.hpp"
#include "lightchaos/verdict.hpp"

#include <optional>
#include <vector>

namespace lightchaos {

// ---------------------------------------------------------------------------
// Light (subbase-relative) properties over a generated family.
// Every HOLDS carries replayable witnesses; every FAILS carries a replayable
// certificate; anything the budget cannot settle is UNKNOWN.
// ---------------------------------------------------------------------------

Verdict check_light_transitivity(const System& sys, const std::vector<SubbasicSet>& family,
                                 const Budget& budget);
Verdict check_light_periodic_density(const System& sys, const std::vector<SubbasicSet>& family,
                                     const Budget& budget);
Verdict check_light_sensitivity(const System& sys, const std::vector<SubbasicSet>& family,
                                const Rational& delta, const Budget& budget);

// Full (classical) properties over the basic family at a resolution.
Verdict check_transitivity(const System& sys, int resolution, const Budget& budget);
Verdict check_periodic_density(const System& sys, int resolution, const Budget& budget);
Verdict check_sensitivity(const System& sys, const Rational& delta, int resolution,
                          const Budget& budget);

std::vector<SubbasicSet> basic_family(const PhaseSpace& space, int resolution);

// ---------------------------------------------------------------------------
// Periodic points of PL maps: exact and exhaustive per exponent.
// ---------------------------------------------------------------------------

struct PeriodicSearchResult {
    std::vector<PeriodicRecord> records;  // least periods, deduplicated
    bool complete = true;  // false when the knot budget truncated the solve
};

PeriodicSearchResult find_periodic_points(const PLMap& map, unsigned k,
                                          const IntervalUnion& region,
                                          const Budget& budget = {});

// First periodic point of the system found inside an exact region, searching
// periods 1..p_max. Works for every catalog tag.
std::optional<PeriodicRecord> periodic_point_in_region(const System& sys,
                                                       const IntervalUnion& region,
                                                       const Budget& budget);

// ---------------------------------------------------------------------------
// Pair-level primitives (shared with the envelope module).
// ---------------------------------------------------------------------------

// Witness search for f^k(U) meets V, minimal k in [1, k_max]; exact image
// chain with exact pull-back on line-like spaces.
std::optional<Witness> transitivity_pair_witness(const System& sys, const SubbasicSet& U,
                                                 const SubbasicSet& V, const Budget& budget);
// Same, at one fixed exponent.
std::optional<Witness> transitivity_pair_witness_at_k(const System& sys, const SubbasicSet& U,
                                                      const SubbasicSet& V, unsigned k);
std::optional<Certificate> transitivity_pair_certificate(const System& sys, const SubbasicSet& U,
                                                         const SubbasicSet& V,
                                                         const Budget& budget);

// Exact minimal-k witness between two exact regions of a line-like system.
struct RegionWitness {
    unsigned k = 0;
    Rational start;  // q in U with f^k(q) = end in V
    Rational end;
    IntervalUnion intersection;  // f^k(U) cap V
};
std::optional<RegionWitness> region_transitivity_witness(const System& sys,
                                                         const IntervalUnion& U,
                                                         const IntervalUnion& V,
                                                         const Budget& budget);

std::optional<Witness> periodic_member_witness(const System& sys, const SubbasicSet& U,
                                               const Budget& budget);
std::optional<Certificate> periodic_member_certificate(const System& sys, const SubbasicSet& U,
                                                       const Budget& budget);

// FAILS certificate that an exact region contains no periodic point.
std::optional<Certificate> periodic_region_certificate(const System& sys,
                                                       const IntervalUnion& region,
                                                       const std::string& label,
                                                       const Budget& budget);

// Exact separation search on line-like systems: some y in V and n in
// [1, k_max] with |f^n(c) - f^n(y)| >= delta, found through the image chain
// of V with an exact pull-back.
struct SeparationWitness {
    Rational y;
    unsigned n = 0;
    Rational distance;
};
std::optional<SeparationWitness> separation_search(const System& sys, const Rational& c,
                                                   const IntervalUnion& V, const Rational& delta,
                                                   const Budget& budget);

// ---------------------------------------------------------------------------
// Orbit coverage probe: epsilon-grid cells visited by a finite orbit.
// Reports coverage only; never claims density.
// ---------------------------------------------------------------------------

struct GapReport {
    Rational cell_width;
    std::size_t total_cells = 0;
    std::size_t visited_cells = 0;
    double coverage = 0.0;
    std::size_t orbit_points_used = 0;
    bool cycle_detected = false;
    std::vector<std::size_t> visited_indices;  // ascending
};

GapReport orbit_density_probe(const System& sys, const PhasePoint& start, std::size_t n,
                              const Rational& eps);

// ---------------------------------------------------------------------------
// Independent replay of evidence, using only core operations.
// ---------------------------------------------------------------------------

bool replay_witness(const System& sys, const std::vector<SubbasicSet>& family, const Witness& w,
                    const Rational& delta = 0);
bool replay_certificate(const System& sys, const Certificate& cert);

// Least period of an exactly periodic point, checking all k in [1, cap].
std::optional<unsigned> least_period(const CatalogMap& map, const PhasePoint& p, unsigned cap);

}  // namespace lightchaos
