#pragma once

#include "lightchaos/pl_map.hpp"
#include "lightchaos/points.hpp"
#include "lightchaos/spaces.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lightchaos {

struct BudgetExhausted : std::runtime_error {
    explicit BudgetExhausted(const std::string& what_failed)
        : std::runtime_error("budget exhausted: " + what_failed) {}
};

// Transition maps of the catalog. Closed-form tags carry their parameters;
// interval maps are exact piecewise-linear graphs.
struct CatalogMap {
    enum class Tag : std::uint8_t {
        Negation,        // x -> -x on R
        AbsoluteValue,   // x -> |x| on R
        Contraction,     // x -> x / (|x| + 1) on [-1, 1]
        CircleRotation,  // theta -> theta + alpha
        Shift,           // one-sided shift on sequences
        Glissorotation,  // (theta, t) -> (theta + p/q, -t) on the double cone
        Piecewise,       // exact PL self-map of a closed interval
    };
    Tag tag = Tag::Piecewise;
    std::string name;

    PLMap pl;                                          // Piecewise
    Rational rotation_angle;                           // CircleRotation, rational case
    IrrationalMark rotation_irr = IrrationalMark::None;  // != None: symbolic irrational
    long long gliss_p = 0, gliss_q = 1;                // Glissorotation, coprime

    Rational gliss_angle() const { return Rational(gliss_p, gliss_q); }
};

PhasePoint map_eval(const CatalogMap& map, const PhasePoint& p);

// f^k(p), k >= 1, using closed forms where the tag admits one:
//   Contraction: y / (k|y| + 1); rotation: theta + k alpha; glissorotation:
//   (theta + k alpha, (-1)^k t). Piecewise maps iterate with a coefficient-size
//   budget guard (throws BudgetExhausted).
PhasePoint iterate_eval(const CatalogMap& map, std::uint64_t k, const PhasePoint& p);

struct OrbitResult {
    std::vector<PhasePoint> points;  // p, f(p), ..., f^n(p)
    bool cycle_found = false;
    std::size_t cycle_start = 0;  // first index on the cycle
    std::size_t cycle_period = 0;
};

// Orbit segment with exact cycle detection on exact points.
OrbitResult orbit(const CatalogMap& map, const PhasePoint& p, std::size_t n);

// Exact forward image for maps acting on interval/line regions.
IntervalUnion forward_image(const CatalogMap& map, const IntervalUnion& region);

// Exact k-step image chain entry: image of region under f^k (computed
// step by step, never by expanding f^k).
IntervalUnion forward_image_k(const CatalogMap& map, const IntervalUnion& region, unsigned k);

// Some x in `within` with f(x) = y, when one exists (line-like maps).
std::optional<Rational> preimage_in(const CatalogMap& map, const Rational& y,
                                    const IntervalUnion& within);

// What is known, exactly and replayably, about the periodic-point set.
struct PeriodicStructure {
    enum class Kind : std::uint8_t {
        AllPeriodic,  // every point periodic, period divides max_period
        FiniteSet,    // P(f) is exactly `points`
        Region,       // P(f) is exactly `region` (line-like spaces)
        Empty,        // no periodic points at all
        Unknown,      // PL maps: decided per-exponent by the solver instead
    };
    Kind kind = Kind::Unknown;
    unsigned max_period = 0;
    std::vector<PhasePoint> points;
    IntervalUnion region;
    std::string argument;  // replayable structural argument label
};

PeriodicStructure periodic_structure(const CatalogMap& map);

// 1-Lipschitz / isometry flags (used by sensitivity refutation certificates).
bool map_nonexpansive(const CatalogMap& map);
bool map_isometry(const CatalogMap& map);

// A dynamical system: a phase space plus a transition map, under a stable tag.
struct System {
    std::string tag;
    PhaseSpace space;
    CatalogMap map;
};

// Built-in systems, addressable by tag:
//   tent, truncated_tent, f_3_7, identity, negation, negation_interval,
//   absolute_value, contraction_3_6, rotation_golden, rotation_1_3,
//   shift_subsystem, cantor_shift, gliss_1_3, gliss_2_5
System make_system(const std::string& tag);
std::vector<std::string> system_tags();

PLMap make_tent();
PLMap make_truncated_tent();
PLMap make_f37();

}  // namespace lightchaos
