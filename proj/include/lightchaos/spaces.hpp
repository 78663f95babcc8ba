#pragma once

#include "lightchaos/interval_union.hpp"
#include "lightchaos/points.hpp"
#include "lightchaos/scalar.hpp"

#include <string>
#include <vector>

namespace lightchaos {

// Catalog of phase spaces, each with its metric rule.
struct PhaseSpace {
    enum class Kind : std::uint8_t {
        Interval,        // [lo, hi] with |x - y|
        RealLine,        // R with |x - y|
        Circle,          // R/Z with arc distance
        Cantor,          // {0,1}^N with 2^-(first difference)
        ShiftSubsystem,  // eventually-constant sequences plus one shift orbit
        DoubleCone,      // two cones glued at the unit circle, chordal metric
    };
    Kind kind = Kind::Interval;
    Rational lo, hi;  // Interval only

    static PhaseSpace interval(Rational lo, Rational hi) {
        return {Kind::Interval, std::move(lo), std::move(hi)};
    }
    static PhaseSpace real_line() { return {Kind::RealLine, 0, 0}; }
    static PhaseSpace circle() { return {Kind::Circle, 0, 0}; }
    static PhaseSpace cantor() { return {Kind::Cantor, 0, 0}; }
    static PhaseSpace shift_subsystem() { return {Kind::ShiftSubsystem, 0, 0}; }
    static PhaseSpace double_cone() { return {Kind::DoubleCone, 0, 0}; }

    bool line_like() const { return kind == Kind::Interval || kind == Kind::RealLine; }
    bool sequence_like() const { return kind == Kind::Cantor || kind == Kind::ShiftSubsystem; }

    // The whole space as a region (line-like spaces only).
    IntervalUnion full_region() const;

    bool contains(const PhasePoint& p) const;
    std::string str() const;
};

// Distance between two points of the same space. Exact on interval, line,
// circle (rational angles) and sequence spaces; approximate (flagged) on the
// cone and on circle points with symbolic irrational parts.
// Sequence comparisons may throw LookaheadExhausted.
Scalar metric(const PhaseSpace& space, const PhasePoint& p, const PhasePoint& q);

// Deterministic sample grid of n points, used by probes and property tests.
std::vector<PhasePoint> sample_grid(const PhaseSpace& space, int n);

}  // namespace lightchaos
