#pragma once

#include "lightchaos/interval_union.hpp"
#include "lightchaos/points.hpp"
#include "lightchaos/spaces.hpp"
#include "lightchaos/surd.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace lightchaos {

// Compact set used on the left of a compact-open pair [K, G]. Lives in an
// interval base space (points/closed subinterval) or on the circle
// (finite angle set / closed arc, coordinates mod 1).
struct CompactK {
    enum class Kind : std::uint8_t { FinitePoints, ClosedInterval };
    Kind kind = Kind::ClosedInterval;
    std::vector<Rational> points;
    Rational lo, hi;
    bool on_circle = false;

    static CompactK closed_interval(Rational a, Rational b) {
        CompactK k;
        k.kind = Kind::ClosedInterval;
        k.lo = std::move(a);
        k.hi = std::move(b);
        return k;
    }
    static CompactK finite(std::vector<Rational> pts) {
        CompactK k;
        k.kind = Kind::FinitePoints;
        k.points = std::move(pts);
        return k;
    }
    std::string str() const;
};

// Tagged subbasic open set across every scheme used by the detectors.
struct SubbasicSet {
    enum class Kind : std::uint8_t {
        HalfLineLeft,    // (-inf, a) on R
        HalfLineRight,   // (b, +inf) on R
        EndLow,          // [lo, a) relative to an interval domain
        EndHigh,         // (b, hi] relative to an interval domain
        OpenInterval,    // (a, b)
        Cylinder,        // one fixed coordinate of a sequence space
        PrefixCylinder,  // finitely many leading coordinates fixed (basic sets)
        HalfSpace,       // {v in R^3 : n.v > c} intersected with the double cone
        CoSet,           // [K, G] in a function space
        PoSet,           // [{x}, G] in a function space
    };
    Kind kind = Kind::OpenInterval;

    Rational a, b;                    // interval parameters
    int cyl_index = 0;                // Cylinder
    int cyl_value = 0;                // Cylinder
    std::vector<std::uint8_t> word;   // PrefixCylinder
    std::array<Rational, 3> normal{};  // HalfSpace
    Rational offset;                  // HalfSpace

    CompactK K;        // CoSet
    IntervalUnion G;   // CoSet/PoSet target region (mod 1 when on circle)
    Rational po_x;     // PoSet base point (or angle)
    bool on_circle = false;

    std::string label;

    bool is_function_space_set() const { return kind == Kind::CoSet || kind == Kind::PoSet; }
    std::string str() const { return label; }

    static SubbasicSet half_line_left(Rational a);
    static SubbasicSet half_line_right(Rational b);
    static SubbasicSet end_low(Rational domain_lo, Rational a);
    static SubbasicSet end_high(Rational b, Rational domain_hi);
    static SubbasicSet open_interval(Rational a, Rational b);
    static SubbasicSet cylinder(int index, int value);
    static SubbasicSet prefix_cylinder(std::vector<std::uint8_t> w);
    static SubbasicSet half_space(std::array<Rational, 3> n, Rational c);
    static SubbasicSet co_set(CompactK K, IntervalUnion G, bool on_circle = false);
    static SubbasicSet po_set(Rational x, IntervalUnion G, bool on_circle = false);
};

struct SubbaseScheme {
    enum class Tag : std::uint8_t {
        HalfLines,
        EndpointIntervals,
        BasicIntervals,
        Cylinders,
        HalfSpaces,
        CompactOpen,
        PointOpen,
        PointOpenOnA,
    };
    Tag tag = Tag::BasicIntervals;
    int resolution = 4;
    std::vector<SubbasicSet> pinned;   // always prepended to the family
    std::vector<Rational> sample_A;   // PointOpenOnA base points

    static SubbaseScheme make(Tag t, int r) {
        SubbaseScheme s;
        s.tag = t;
        s.resolution = r;
        return s;
    }
};

SubbaseScheme::Tag scheme_tag_from_string(const std::string& name);
std::string scheme_tag_to_string(SubbaseScheme::Tag tag);

// Deterministic finite family of nonempty subbasic sets at the scheme's
// resolution. Every member carries a generation-time witness point
// (function-space schemes witness by constant maps; see envelope).
std::vector<SubbasicSet> generate_family(const PhaseSpace& space, const SubbaseScheme& scheme);

// Membership. Exact for exact points wherever the set admits an exact test
// (everything except half-spaces at angles outside the surd lattice, which
// fall back to a guarded float test).
bool contains(const SubbasicSet& set, const PhasePoint& p);

// Exact membership decision, or nullopt when only a float probe is available.
std::optional<bool> contains_exact(const SubbasicSet& set, const PhasePoint& p);

// Exact realization over interval/line spaces; finite epsilon-net elsewhere.
struct RegionOrNet {
    bool exact = false;
    IntervalUnion region;          // when exact
    std::vector<PhasePoint> net;   // when not
    double epsilon = 0.0;          // net resolution
};
RegionOrNet realize_region(const SubbasicSet& set, const PhaseSpace& space);

// Exact nonempty-intersection test against an interval region.
bool meets(const SubbasicSet& set, const IntervalUnion& region, const PhaseSpace& space);

// Generation-time witness point (non-function-space sets).
PhasePoint family_witness(const SubbasicSet& set, const PhaseSpace& space);

// n . embed(p) - c as an exact surd expression; nullopt when the angle is not
// on the cos/sin lattice (denominator of the angle must divide 24).
std::optional<SurdSum> halfspace_margin_exact(const SubbasicSet& set, const PhasePoint& p);

}  // namespace lightchaos
